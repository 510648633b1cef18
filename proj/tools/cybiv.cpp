#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "cybiv/analysis.hpp"
#include "cybiv/json_io.hpp"
#include "cybiv/reference_catalog.hpp"
#include "cybiv/schouten.hpp"
#include "cybiv/sections.hpp"
#include "cybiv/symmetries.hpp"
#include "cybiv/verify.hpp"

using namespace cybiv;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::optional<int> k, k1, k2;
  int neighborhood = 2;
  std::optional<int> degree_bound;
  bool json = false;
  std::string filter;
  std::string q;
  std::string p;
  std::string gen;
  std::string chart = "U";
};

ThreefoldSpec spec_of(const Options& o) {
  if (o.k && (o.k1 || o.k2)) throw UsageError("use either --k or --k1/--k2");
  if (o.k) return ThreefoldSpec::calabi_yau(*o.k);
  if (o.k1 && o.k2) return ThreefoldSpec{*o.k1, *o.k2};
  throw UsageError("a threefold is required: --k <int> or --k1 <int> --k2 <int>");
}

Chart chart_of(const Options& o) {
  if (o.chart == "U") return Chart::U;
  if (o.chart == "V") return Chart::V;
  throw UsageError("--chart must be U or V");
}

/// The structure named by --gen (a reference generator label) or given by --q.
BivectorField structure_of(const Options& o, const ThreefoldSpec& spec) {
  if (!o.gen.empty() && !o.q.empty()) throw UsageError("use either --gen or --q");
  if (!o.q.empty()) return parse_bivector(o.q, spec, chart_of(o), "q");
  if (o.gen.empty()) throw UsageError("a structure is required: --gen <label> or --q <p0,p1,p2>");
  bool known = false;
  for (const auto& s : reference_specs()) known = known || s == spec;
  if (!known) throw UsageError("--gen is only available for W(1,1), W(2,0) and W(3,-1); use --q");
  for (const auto& g : reference_generator_fields(spec)) {
    if (g.label == o.gen) return g;
  }
  throw UsageError("unknown generator " + o.gen + " on " + spec.name());
}

std::vector<BivectorField> generators_of(const ThreefoldSpec& spec, int bound) {
  for (const auto& s : reference_specs()) {
    if (s == spec) return reference_generator_fields(spec);
  }
  return module_presentation(spec, {}, bound).generators;
}

void emit(const Options& o, const Json& j, const std::string& text) {
  if (o.json) {
    std::cout << canonical_dump(j);
  } else {
    std::cout << text;
  }
}

std::string field_text(const BivectorField& q) {
  return (q.label.empty() ? std::string() : q.label + " = ") + format_triple(q.q) + "\n";
}

std::string relation_text(const Relation& r, const std::vector<BivectorField>& gens) {
  std::string s;
  for (size_t i = 0; i < r.coefficients.size(); ++i) {
    if (r.coefficients[i].is_zero()) continue;
    if (!s.empty()) s += " + ";
    s += "(" + format_poly(r.coefficients[i]) + ")*" + gens[i].label;
  }
  return s + " = 0\n";
}

int cmd_sections(const Options& o) {
  auto spec = spec_of(o);
  auto basis = section_basis(spec, o.neighborhood);
  Json j{{"spec", spec_to_json(spec)}, {"neighborhood", o.neighborhood}, {"dimension", basis.size()}};
  Json arr = Json::array();
  std::string text = "global bivector fields on " + spec.name() + " with fiber degree <= " +
                     std::to_string(o.neighborhood) + ": dimension " + std::to_string(basis.size()) + "\n";
  for (const auto& b : basis) {
    arr.push_back(to_json(b));
    text += "  " + format_triple(b.q) + "\n";
  }
  j["basis"] = arr;
  emit(o, j, text);
  return kExitOk;
}

int cmd_presentation(const Options& o) {
  auto spec = spec_of(o);
  int bound = o.degree_bound.value_or(4);
  std::vector<BivectorField> candidates;
  for (const auto& s : reference_specs()) {
    if (s == spec) candidates = reference_generator_fields(spec);
  }
  auto p = module_presentation(spec, candidates, bound);
  std::string text = spec.name() + ": " + std::to_string(p.generators.size()) + " generators, " +
                     std::to_string(p.relations.size()) + " relations (degree bound " + std::to_string(bound) +
                     (p.relations_stable ? ", stable" : ", not yet stable") + ")\n";
  for (const auto& g : p.generators) text += "  " + field_text(g);
  for (const auto& r : p.relations) text += "  " + relation_text(r, p.generators);
  emit(o, to_json(p), text);
  return kExitOk;
}

int cmd_bracket(const Options& o) {
  auto spec = spec_of(o);
  if (o.q.empty()) throw UsageError("--q is required");
  auto q = parse_bivector(o.q, spec, chart_of(o), "q");
  TrivectorDensity t;
  if (!o.p.empty()) {
    t = sn_bracket(q, parse_bivector(o.p, spec, chart_of(o), "p"));
  } else {
    t = self_bracket(q);
  }
  emit(o, to_json(t), format_poly(t.coeff) + "\n");
  return kExitOk;
}

int cmd_integrable(const Options& o) {
  auto spec = spec_of(o);
  if (o.q.empty()) throw UsageError("--q is required");
  auto q = parse_bivector(o.q, spec, chart_of(o), "q");
  auto t = self_bracket(q);
  bool ok = t.coeff.is_zero();
  Json j{{"integrable", ok}, {"obstruction", format_poly(t.coeff)}};
  emit(o, j, ok ? "integrable\n" : "not integrable; obstruction " + format_poly(t.coeff) + "\n");
  return ok ? kExitOk : kExitCheckFailed;
}

int cmd_b_op(const Options& o) {
  if (o.p.empty()) throw UsageError("--p is required");
  CoefficientQuadruple p;
  size_t start = 0;
  for (size_t h = 0; h < 4; ++h) {
    size_t end = h < 3 ? o.p.find(',', start) : o.p.size();
    if (end == std::string::npos) throw ParseError(o.p.size(), "expected four comma-separated coefficients");
    try {
      p[h] = parse_poly(std::string_view(o.p).substr(start, end - start), Chart::U);
    } catch (const ParseError& e) {
      throw ParseError(start + e.position(), e.detail());
    }
    if (!is_global_function(ThreefoldSpec{1, 1}, p[h])) {
      throw NonGlobalError("coefficient " + std::to_string(h + 1) + " is not a global function on W(1,1)");
    }
    start = end + 1;
  }
  if (start <= o.p.size()) throw ParseError(start - 1, "expected four comma-separated coefficients");
  ChartPoly b = b_operator(p);
  Json j{{"B", format_poly(b)}, {"integrable", b.is_zero()}};
  emit(o, j, format_poly(b) + "\n");
  return kExitOk;
}

int cmd_degeneracy(const Options& o) {
  auto spec = spec_of(o);
  auto q = structure_of(o, spec);
  auto l = degeneracy_locus(q);
  std::string text = "D(" + q.label + ") on " + spec.name() + ": ";
  std::vector<std::string> pieces;
  for (const auto& c : l.chart_components) pieces.push_back(c.to_string());
  if (pieces.empty()) {
    text += "empty";
  } else {
    for (size_t i = 0; i < pieces.size(); ++i) text += (i ? " u " : "") + pieces[i];
  }
  text += " [" + l.type_summary() + "]\n";
  emit(o, to_json(l), text);
  return kExitOk;
}

int cmd_casimir(const Options& o) {
  auto spec = spec_of(o);
  auto q = structure_of(o, spec);
  auto c = casimirs(q, o.degree_bound.value_or(4));
  std::string text = "Cas(" + q.label + ") on " + spec.name() + ": " + c.description() + "\n  global basis:";
  for (const auto& f : c.global_basis) text += " " + format_poly(f);
  emit(o, to_json(c), text + "\n");
  return kExitOk;
}

int cmd_foliation(const Options& o) {
  auto spec = spec_of(o);
  auto q = structure_of(o, spec);
  auto f = foliation_report(q, o.degree_bound.value_or(4));
  emit(o, to_json(f), q.label + " on " + spec.name() + ": " + f.leaves + "\n");
  return kExitOk;
}

int cmd_isos(const Options& o) {
  auto spec = spec_of(o);
  auto certs = isomorphism_catalog(generators_of(spec, o.degree_bound.value_or(4)));
  Json arr = Json::array();
  std::string text;
  for (const auto& c : certs) {
    arr.push_back(to_json(c));
    std::string map;
    for (const auto& m : c.map) map += (map.empty() ? "" : " then ") + m;
    text += c.from + " ~ " + c.to + " via " + map + ", scale " + c.scale.to_string() + "\n";
  }
  if (certs.empty()) text = "no isomorphic pairs\n";
  emit(o, arr, text);
  return kExitOk;
}

int cmd_embeddings(const Options& o) {
  auto spec = spec_of(o);
  ExactScalar point(0);
  for (const auto& s : reference_specs()) {
    if (s == spec) point = reference_fiber_point(spec);
  }
  auto r = verify_generation_by_embeddings(spec, generators_of(spec, o.degree_bound.value_or(4)), point);
  std::string text;
  for (size_t i = 0; i < r.generators.size(); ++i) {
    text += r.generators[i].label + ": ";
    if (r.witnesses[i].empty()) {
      text += "no witness\n";
      continue;
    }
    const auto& w = r.witnesses[i].front();
    text += w.construction;
    for (const auto& m : w.map) text += " then " + m;
    text += ", scale " + w.scale.to_string() + "\n";
  }
  emit(o, to_json(r), text);
  return r.all_witnessed() ? kExitOk : kExitCheckFailed;
}

int cmd_verify(const Options& o) {
  auto report = run_verify_paper(o.filter);
  emit(o, report.to_json(), report.to_text());
  return report.ok() ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Holomorphic bivector fields and Poisson structures on Tot(O(-k1)+O(-k2)) over P1"};
  app.require_subcommand(1);
  Options o;
  auto spec_flags = [&o](CLI::App* c) {
    c->add_option("--k", o.k, "Calabi-Yau threefold W(k, 2-k)");
    c->add_option("--k1", o.k1, "first degree");
    c->add_option("--k2", o.k2, "second degree");
  };
  auto common = [&o](CLI::App* c) {
    c->add_flag("--json", o.json, "machine-readable output");
    c->add_option("--degree-bound", o.degree_bound, "fiber degree bound for truncated computations");
  };
  auto structure = [&o](CLI::App* c) {
    c->add_option("--gen", o.gen, "reference generator label, e.g. e11");
    c->add_option("--q", o.q, "bivector coefficients \"p0,p1,p2\"");
    c->add_option("--chart", o.chart, "chart of --q: U or V");
  };

  std::vector<std::pair<CLI::App*, int (*)(const Options&)>> commands;
  auto add = [&](const char* name, const char* help, int (*fn)(const Options&)) {
    CLI::App* c = app.add_subcommand(name, help);
    common(c);
    commands.emplace_back(c, fn);
    return c;
  };
  auto* sections = add("sections", "basis of global bivector fields", cmd_sections);
  spec_flags(sections);
  sections->add_option("--neighborhood", o.neighborhood, "fiber degree of the U-coefficients");
  spec_flags(add("presentation", "minimal generators and relations", cmd_presentation));
  auto* bracket = add("bracket", "Schouten-Nijenhuis bracket [q,q] or [q,p]", cmd_bracket);
  spec_flags(bracket);
  bracket->add_option("--q", o.q, "bivector coefficients \"p0,p1,p2\"")->required();
  bracket->add_option("--p", o.p, "second bivector");
  bracket->add_option("--chart", o.chart, "chart of the input: U or V");
  auto* integrable = add("integrable", "integrability test; exit 1 if not integrable", cmd_integrable);
  spec_flags(integrable);
  integrable->add_option("--q", o.q, "bivector coefficients \"p0,p1,p2\"")->required();
  integrable->add_option("--chart", o.chart, "chart of the input: U or V");
  add("b-op", "the operator B on W(1,1) coefficient tuples", cmd_b_op)
      ->add_option("--p", o.p, "four global functions \"p1,p2,p3,p4\"")
      ->required();
  for (auto [name, help, fn] : std::vector<std::tuple<const char*, const char*, int (*)(const Options&)>>{
           {"degeneracy", "degeneracy locus", cmd_degeneracy},
           {"casimir", "Casimir functions", cmd_casimir},
           {"foliation", "symplectic foliation summary", cmd_foliation}}) {
    auto* c = add(name, help, fn);
    spec_flags(c);
    structure(c);
  }
  spec_flags(add("isos", "isomorphisms among generators via the symmetries", cmd_isos));
  spec_flags(add("embeddings", "embedding witnesses for the generators", cmd_embeddings));
  add("verify-paper", "replay the reference catalog", cmd_verify)->add_option("--filter", o.filter, "case id substring");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }
  try {
    for (const auto& [c, fn] : commands) {
      if (c->parsed()) return fn(o);
    }
  } catch (const ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const NonGlobalError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailed;
  }
  return kExitUsage;
}
