#include "cybiv/reference_catalog.hpp"

#include <stdexcept>

namespace cybiv {

namespace {

enum class Which { W1, W2, W3 };

Which which(const ThreefoldSpec& spec) {
  if (spec == ThreefoldSpec{1, 1}) return Which::W1;
  if (spec == ThreefoldSpec{2, 0}) return Which::W2;
  if (spec == ThreefoldSpec{3, -1}) return Which::W3;
  throw std::out_of_range("no reference data for " + spec.name());
}

ReferenceTriple u3(std::string label, std::string a, std::string b, std::string c) {
  return {std::move(label), Chart::U, {std::move(a), std::move(b), std::move(c)}};
}

ReferenceTriple v3(std::string label, std::string a, std::string b, std::string c) {
  return {std::move(label), Chart::V, {std::move(a), std::move(b), std::move(c)}};
}

std::string zpow(int l, const std::string& rest) {
  std::string z = l == 0 ? "" : (l == 1 ? "z" : "z^" + std::to_string(l));
  if (z.empty()) return rest;
  if (rest == "1") return z;
  return z + "*" + rest;
}

}  // namespace

std::vector<ThreefoldSpec> reference_specs() { return {{1, 1}, {2, 0}, {3, -1}}; }

std::string reference_name(const ThreefoldSpec& spec) {
  switch (which(spec)) {
    case Which::W1: return "W1";
    case Which::W2: return "W2";
    case Which::W3: return "W3";
  }
  return "";
}

std::vector<ReferenceTriple> reference_generators(const ThreefoldSpec& spec) {
  switch (which(spec)) {
    case Which::W1:
      return {u3("e1", "0", "1", "0"), u3("e2", "0", "0", "1"), u3("e3", "u1", "z", "0"), u3("e4", "u2", "0", "z")};
    case Which::W2:
      return {u3("e1", "0", "1", "0"), u3("e2", "u1", "0", "0"), u3("e3", "0", "z", "0"), u3("e4", "0", "0", "1"),
              u3("e5", "2*z*u1", "z^2", "0")};
    case Which::W3:
      return {u3("e1", "u1", "0", "0"),
              u3("e2", "u1*u2", "0", "0"),
              u3("e3", "0", "1", "0"),
              u3("e4", "0", "z", "0"),
              u3("e5", "0", "z^2", "0"),
              u3("e6", "3*z^2*u1", "z^3", "0"),
              u3("e7", "0", "0", "u1"),
              u3("e8", "0", "0", "z*u1"),
              u3("e9", "-z*u1*u2", "0", "z^2*u1"),
              u3("e10", "0", "u2", "0"),
              u3("e11", "0", "z*u2", "0"),
              u3("e12", "3*z*u1*u2", "z^2*u2", "0"),
              u3("e13", "0", "0", "u1*u2")};
  }
  return {};
}

std::vector<ReferenceTriple> reference_section_terms(const ThreefoldSpec& spec) {
  switch (which(spec)) {
    case Which::W1:
      return {u3("t1", "0", "1", "0"),        u3("t2", "0", "0", "1"),          u3("t3", "u1", "z", "0"),
              u3("t4", "u2", "0", "z"),       u3("t5", "u1^2", "0", "0"),       u3("t6", "u2^2", "0", "0"),
              u3("t7", "u1*u2", "0", "0"),    u3("t8", "0", "u1", "0"),         u3("t9", "0", "z*u1", "0"),
              u3("t10", "z*u1^2", "z^2*u1", "0"), u3("t11", "0", "u2", "0"),    u3("t12", "0", "z*u2", "0"),
              u3("t13", "z*u1*u2", "z^2*u2", "0")};
    case Which::W2:
      return {u3("t1", "0", "0", "1"),     u3("t2", "0", "0", "u1"),        u3("t3", "0", "0", "z*u1"),
              u3("t4", "0", "0", "z^2*u1"), u3("t5", "0", "0", "u2"),        u3("t6", "u1", "0", "0"),
              u3("t7", "0", "1", "0"),     u3("t8", "0", "z", "0"),         u3("t9", "2*z*u1", "z^2", "0"),
              u3("t10", "0", "u1", "0"),   u3("t11", "0", "z*u1", "0"),     u3("t12", "0", "z^2*u1", "0"),
              u3("t13", "0", "z^3*u1", "0")};
    case Which::W3: {
      std::vector<ReferenceTriple> out;
      auto add = [&](const std::string& a, const std::string& b, const std::string& c) {
        out.push_back(u3("t" + std::to_string(out.size() + 1), a, b, c));
      };
      for (int l = 0; l <= 1; ++l) add("0", "0", zpow(l, "u1"));
      for (int l = 0; l <= 2; ++l) {
        add("0", zpow(l, "1"), "0");
        add("0", zpow(l, "u2"), "0");
      }
      for (int l = 0; l <= 4; ++l) {
        add(zpow(l, "u1^2"), "0", "0");
        add("0", "0", zpow(l, "u1^2"));
        add("0", zpow(l, "u1*u2"), "0");
      }
      for (int l = 0; l <= 5; ++l) add("0", zpow(l, "u1"), "0");
      for (int l = 0; l <= 8; ++l) add("0", zpow(l, "u1^2"), "0");
      add("u1", "0", "0");
      add("u1*u2", "0", "0");
      add("0", "0", "u1*u2");
      add("3*z^2*u1", "z^3", "0");
      add("3*z*u1*u2", "z^2*u2", "0");
      add("3*z^5*u1^2", "z^6*u1", "0");
      add("3*z^8*u1^3", "z^9*u1^2", "0");
      add("3*z^4*u1^2*u2", "z^5*u1*u2", "0");
      add("-z*u1*u2", "0", "z^2*u1");
      add("-u1*u2^2", "0", "z*u1*u2");
      return out;
    }
  }
  return {};
}

int reference_neighborhood(const ThreefoldSpec& spec) { return which(spec) == Which::W2 ? 1 : 2; }

int reference_claimed_term_count(const ThreefoldSpec& spec) { return which(spec) == Which::W3 ? 42 : 13; }

std::vector<ReferenceRelation> reference_relations(const ThreefoldSpec& spec) {
  switch (which(spec)) {
    case Which::W1:
      return {{"zu2e1 - zu1e2 - u2e3 + u1e4", {{"e1", "z*u2"}, {"e2", "-z*u1"}, {"e3", "-u2"}, {"e4", "u1"}}}};
    case Which::W2:
      return {{"u1e3 - zu1e1", {{"e3", "u1"}, {"e1", "-z*u1"}}},
              {"u2e5 - zu2e3 - 2zu2e2", {{"e5", "u2"}, {"e3", "-z*u2"}, {"e2", "-2*z*u2"}}}};
    case Which::W3:
      return {{"u1e2 - u1u2e1", {{"e2", "u1"}, {"e1", "-u1*u2"}}},
              {"u1e10 - u1u2e3", {{"e10", "u1"}, {"e3", "-u1*u2"}}},
              {"u1e13 - u1u2e7", {{"e13", "u1"}, {"e7", "-u1*u2"}}},
              {"zu1e12 - u1u2e6", {{"e12", "z*u1"}, {"e6", "-u1*u2"}}},
              {"zu1e13 - u1u2e8", {{"e13", "z*u1"}, {"e8", "-u1*u2"}}},
              {"u1e11 - zu1e10", {{"e11", "u1"}, {"e10", "-z*u1"}}},
              {"u1e4 - zu1e3", {{"e4", "u1"}, {"e3", "-z*u1"}}},
              {"u1e5 - zu1e4", {{"e5", "u1"}, {"e4", "-z*u1"}}},
              {"u1e8 - zu1e7", {{"e8", "u1"}, {"e7", "-z*u1"}}},
              {"u1e6 - zu1e5 - 3z^2u1e1", {{"e6", "u1"}, {"e5", "-z*u1"}, {"e1", "-3*z^2*u1"}}},
              {"u1e9 - zu1e8 + zu1e2", {{"e9", "u1"}, {"e8", "-z*u1"}, {"e2", "z*u1"}}},
              {"u1e12 - zu1e11 - 3zu1e1", {{"e12", "u1"}, {"e11", "-z*u1"}, {"e1", "-3*z*u1"}}}};
  }
  return {};
}

std::vector<ReferenceRelation> reference_auxiliary_relations(const ThreefoldSpec& spec) {
  switch (which(spec)) {
    case Which::W1:
      return {{"zu2e1 - zu1e2 - u2e3 + u1e4", {{"e1", "z*u2"}, {"e2", "-z*u1"}, {"e3", "-u2"}, {"e4", "u1"}}},
              {"u2^2e5 - u1^2e6", {{"e5", "u2^2"}, {"e6", "-u1^2"}}},
              {"e5 - u1e3 + zu1e1", {{"e5", "1"}, {"e3", "-u1"}, {"e1", "z*u1"}}},
              {"e6 - u2e4 + zu2e2", {{"e6", "1"}, {"e4", "-u2"}, {"e2", "z*u2"}}},
              {"e7 - u2e3 + zu2e1", {{"e7", "1"}, {"e3", "-u2"}, {"e1", "z*u2"}}},
              {"e7 - u1e4 + zu1e2", {{"e7", "1"}, {"e4", "-u1"}, {"e2", "z*u1"}}},
              {"u2e5 - u1e7", {{"e5", "u2"}, {"e7", "-u1"}}},
              {"u1e6 - e7u2", {{"e6", "u1"}, {"e7", "-u2"}}}};
    case Which::W2:
      return {{"e3 - ze1", {{"e3", "1"}, {"e1", "-z"}}},
              {"e5 - ze3 - 2ze2", {{"e5", "1"}, {"e3", "-z"}, {"e2", "-2*z"}}},
              {"u1e3 - zu1e1", {{"e3", "u1"}, {"e1", "-z*u1"}}},
              {"u2e5 - zu3e4 - 2zu2e2", {{"e5", "u2"}, {"e4", "-z*u3"}, {"e2", "-2*z*u2"}}}};
    case Which::W3:
      return {{"e2 - u2e1", {{"e2", "1"}, {"e1", "-u2"}}},
              {"e10 - u2e3", {{"e10", "1"}, {"e3", "-u2"}}},
              {"e13 - u2e7", {{"e13", "1"}, {"e7", "-u2"}}},
              {"ze12 - u2e6", {{"e12", "z"}, {"e6", "-u2"}}},
              {"ze13 - u2e8", {{"e13", "z"}, {"e8", "-u2"}}},
              {"e11 - ze10", {{"e11", "1"}, {"e10", "-z"}}},
              {"e4 - ze3", {{"e4", "1"}, {"e3", "-z"}}},
              {"e5 - ze4", {{"e5", "1"}, {"e4", "-z"}}},
              {"e8 - ze7", {{"e8", "1"}, {"e7", "-z"}}},
              {"e6 - ze5 - 3z^2e1", {{"e6", "1"}, {"e5", "-z"}, {"e1", "-3*z^2"}}},
              {"e9 - ze8 + ze2", {{"e9", "1"}, {"e8", "-z"}, {"e2", "z"}}},
              {"e12 - ze11 - 3ze1", {{"e12", "1"}, {"e11", "-z"}, {"e1", "-3*z"}}}};
  }
  return {};
}

int reference_claimed_relation_count(const ThreefoldSpec& spec) {
  switch (which(spec)) {
    case Which::W1: return 1;
    case Which::W2: return 2;
    case Which::W3: return 13;
  }
  return 0;
}

std::array<std::array<std::string, 3>, 3> reference_lambda2_matrix(const ThreefoldSpec& spec) {
  switch (which(spec)) {
    case Which::W1: return {{{"z^2", "-z*u1", "-z*u2"}, {"0", "z^-1", "0"}, {"0", "0", "z^-1"}}};
    case Which::W2: return {{{"z^2", "-2*z*u1", "0"}, {"0", "-z^-2", "0"}, {"0", "0", "-1"}}};
    case Which::W3: return {{{"z^2", "-3*z*u1", "z*u2"}, {"0", "-z^-3", "0"}, {"0", "0", "-z"}}};
  }
  return {};
}

std::vector<std::string> reference_global_functions(const ThreefoldSpec& spec) {
  switch (which(spec)) {
    case Which::W1: return {"1", "u1", "z*u1", "u2", "z*u2"};
    case Which::W2: return {"1", "u1", "z*u1", "z^2*u1", "u2"};
    case Which::W3: return {"1", "u1", "z*u1", "z^2*u1", "z^3*u1", "u1*u2", "z*u1*u2", "z^2*u1*u2"};
  }
  return {};
}

std::vector<ReferenceTriple> reference_v_displays(const ThreefoldSpec& spec) {
  switch (which(spec)) {
    case Which::W1: return {v3("e2", "-v2", "0", "xi")};
    case Which::W2:
      return {v3("e1", "-2*xi*v1", "-xi^2", "0"), v3("e2", "v1", "0", "0"), v3("e3", "-2*v1", "xi", "0"),
              v3("e4", "0", "0", "-1")};
    case Which::W3:
      return {v3("e1", "xi*v1", "0", "0"),
              v3("e2", "v1*v2", "0", "0"),
              v3("e3", "-3*xi^2*v1", "-xi^3", "0"),
              v3("e4", "-3*xi*v1", "-xi^2", "0"),
              v3("e5", "-3*v1", "-xi", "0"),
              v3("e10", "-3*xi*v1*v2", "-xi^2*v2", "0"),
              v3("e11", "-3*v1*v2", "-xi*v2", "0"),
              v3("e7", "xi*v1*v2", "0", "-xi^2*v1"),
              v3("e8", "v1*v2", "0", "-xi*v1"),
              v3("e13", "v1*v2^2", "0", "-xi*v1*v2")};
  }
  return {};
}

std::vector<ReferenceLocus> reference_loci(const ThreefoldSpec& spec) {
  switch (which(spec)) {
    case Which::W1: return {{"e2", {"{xi=v2=0}"}}};
    case Which::W2: return {};
    case Which::W3:
      return {{"e1", {"{u1=0}", "{xi=0}", "{v1=0}"}},
              {"e2", {"{u1=0}", "{u2=0}", "{v1=0}", "{v2=0}"}},
              {"e3", {"{xi=0}"}},
              {"e4", {"{z=0}", "{xi=0}"}},
              {"e5", {"{z=0}", "{xi=v1=0}"}},
              {"e10", {"{u2=0}", "{xi=0}", "{v2=0}"}},
              {"e11", {"{z=0}", "{u2=0}", "{v2=0}", "{xi=v1=0}"}},
              {"e7", {"{u1=0}", "{xi=0}", "{v1=0}"}},
              {"e8", {"{z=0}", "{u1=0}", "{xi=v2=0}", "{v1=0}"}},
              {"e13", {"{u1=0}", "{u2=0}", "{v1=0}", "{v2=0}"}}};
  }
  return {};
}

std::vector<std::pair<std::string, std::string>> reference_locus_types(const ThreefoldSpec& spec) {
  if (which(spec) != Which::W2) return {};
  return {{"e1", "C2"}, {"e2", "P1xC"}, {"e3", "C2 u C"}, {"e4", "empty"}};
}

std::vector<std::pair<std::string, std::string>> reference_casimirs(const ThreefoldSpec& spec) {
  switch (which(spec)) {
    case Which::W1: return {{"e2", "u2"}};
    case Which::W2: return {{"e1", "u1"}, {"e2", "z"}, {"e3", "u1"}, {"e4", "u2"}};
    case Which::W3:
      return {{"e1", "z"},   {"e2", "z"},  {"e3", "u1"}, {"e4", "u1"},  {"e5", "u1"},
              {"e10", "u1"}, {"e11", "u1"}, {"e7", "u2"}, {"e8", "u2"}, {"e13", "u2"}};
  }
  return {};
}

std::vector<std::pair<std::string, std::string>> reference_leaf_variables(const ThreefoldSpec& spec) {
  switch (which(spec)) {
    case Which::W1: return {{"e2", "u2"}};
    case Which::W2: return {{"e1", "u1"}, {"e3", "u1"}, {"e4", "u2"}};
    case Which::W3:
      return {{"e3", "u1"},  {"e4", "u1"},  {"e5", "u1"}, {"e10", "u1"},
              {"e11", "u1"}, {"e13", "u1"}, {"e7", "u2"}, {"e8", "u2"}};
  }
  return {};
}

std::vector<std::pair<std::string, std::string>> reference_isomorphisms(const ThreefoldSpec& spec) {
  switch (which(spec)) {
    case Which::W1:
      return {{"e1", "e2"}, {"e1", "e3"}, {"e1", "e4"}, {"e2", "e3"}, {"e2", "e4"}, {"e3", "e4"}};
    case Which::W2: return {{"e1", "e5"}};
    case Which::W3: return {{"e3", "e6"}, {"e7", "e9"}, {"e10", "e12"}};
  }
  return {};
}

std::vector<ReferenceWitness> reference_witnesses(const ThreefoldSpec& spec) {
  switch (which(spec)) {
    case Which::W1:
      return {{"e2", EmbeddingSlot::J1, 0, 0, ""}, {"e3", EmbeddingSlot::J2, 0, 0, ""}};
    case Which::W2:
      return {{"e4", EmbeddingSlot::J1, 0, 0, ""},
              {"e1", EmbeddingSlot::J2, 0, 0, ""},
              {"e2", EmbeddingSlot::J2, 1, 0, ""},
              {"e3", EmbeddingSlot::J0, 0, 0, "1"}};
    case Which::W3:
      return {{"e7", EmbeddingSlot::J1, 0, 0, ""},  {"e8", EmbeddingSlot::J1, 0, 0, ""},
              {"e3", EmbeddingSlot::J2, 0, 0, ""},  {"e4", EmbeddingSlot::J2, 1, 0, ""},
              {"e5", EmbeddingSlot::J2, 2, 0, ""},  {"e10", EmbeddingSlot::J2, 0, 1, ""},
              {"e11", EmbeddingSlot::J2, 1, 1, ""}, {"e1", EmbeddingSlot::J0, 0, 0, "u"},
              {"e2", EmbeddingSlot::J0, 0, 0, "u*v"}};
  }
  return {};
}

ExactScalar reference_fiber_point(const ThreefoldSpec& spec) {
  return which(spec) == Which::W2 ? ExactScalar(1) : ExactScalar(0);
}

BivectorField to_bivector(const ThreefoldSpec& spec, const ReferenceTriple& t) {
  CoefficientTriple q;
  for (size_t i = 0; i < 3; ++i) q[i] = parse_poly(t.q[i], t.chart);
  if (t.chart == Chart::U) return BivectorField(spec, q, t.label);
  return BivectorField::from_v_coefficients(spec, q, t.label);
}

std::vector<BivectorField> reference_generator_fields(const ThreefoldSpec& spec) {
  std::vector<BivectorField> out;
  for (const auto& t : reference_generators(spec)) out.push_back(to_bivector(spec, t));
  return out;
}

std::vector<ChartPoly> relation_coefficients(const ReferenceRelation& r, const std::vector<BivectorField>& generators) {
  std::vector<ChartPoly> out(generators.size());
  for (const auto& [label, coeff] : r.terms) {
    size_t i = 0;
    while (i < generators.size() && generators[i].label != label) ++i;
    if (i == generators.size()) throw std::invalid_argument("relation " + r.text + " names unknown generator " + label);
    out[i] += parse_poly(coeff, Chart::U);
  }
  return out;
}

}  // namespace cybiv
