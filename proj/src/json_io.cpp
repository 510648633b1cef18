#include "cybiv/json_io.hpp"

namespace cybiv {

namespace {

Json polys_to_json(const std::vector<ChartPoly>& ps, Chart chart = Chart::U) {
  Json a = Json::array();
  for (const auto& p : ps) a.push_back(format_poly(p, chart));
  return a;
}

Json weight_to_json(const Multidegree& d) { return Json::array({d.r, d.s, d.t}); }

Multidegree weight_from_json(const Json& j) { return {j.at(0).get<int>(), j.at(1).get<int>(), j.at(2).get<int>()}; }

Json variables_to_json(const std::vector<int>& vars) {
  Json a = Json::array();
  for (int v : vars) a.push_back(chart_variable_names(Chart::U)[static_cast<size_t>(v)]);
  return a;
}

}  // namespace

std::string canonical_dump(const Json& j) { return j.dump(2) + "\n"; }

Json spec_to_json(const ThreefoldSpec& spec) { return Json{{"k1", spec.k1}, {"k2", spec.k2}}; }

ThreefoldSpec spec_from_json(const Json& j) { return {j.at("k1").get<int>(), j.at("k2").get<int>()}; }

Json to_json(const BivectorField& q, Chart chart) {
  CoefficientTriple c = chart == Chart::U ? q.q : q.v_coefficients();
  Json out{{"chart", chart_name(chart)}, {"k1", q.spec.k1}, {"k2", q.spec.k2}, {"label", q.label}};
  out["q"] = Json::array({format_poly(c[0], chart), format_poly(c[1], chart), format_poly(c[2], chart)});
  return out;
}

BivectorField bivector_from_json(const Json& j) {
  ThreefoldSpec spec = spec_from_json(j);
  Chart chart = j.at("chart").get<std::string>() == "V" ? Chart::V : Chart::U;
  CoefficientTriple q;
  for (size_t i = 0; i < 3; ++i) q[i] = parse_poly(j.at("q").at(i).get<std::string>(), chart);
  std::string label = j.value("label", std::string());
  if (chart == Chart::U) return BivectorField(spec, q, label);
  return BivectorField::from_v_coefficients(spec, q, label);
}

Json to_json(const TransitionMatrix& m) {
  Chart chart = m.direction == Direction::UtoV ? Chart::U : Chart::V;
  Json rows = Json::array();
  for (const auto& row : m.entries) {
    Json r = Json::array();
    for (const auto& e : row) r.push_back(format_poly(e, chart));
    rows.push_back(r);
  }
  return Json{{"direction", m.direction == Direction::UtoV ? "U->V" : "V->U"}, {"entries", rows}};
}

Json to_json(const ModulePresentation& p) {
  Json gens = Json::array();
  for (size_t i = 0; i < p.generators.size(); ++i) {
    Json g = to_json(p.generators[i]);
    g["weight"] = weight_to_json(p.generator_weights[i]);
    gens.push_back(g);
  }
  Json rels = Json::array();
  for (const auto& r : p.relations) rels.push_back(polys_to_json(r.coefficients));
  Json weights = Json::array();
  for (const auto& r : p.relations) weights.push_back(weight_to_json(r.weight));
  return Json{{"spec", spec_to_json(p.spec)},     {"degree_bound", p.degree_bound},
              {"relations_stable", p.relations_stable}, {"generators", gens},
              {"relations", rels},                {"relation_weights", weights}};
}

ModulePresentation presentation_from_json(const Json& j) {
  ModulePresentation p;
  p.spec = spec_from_json(j.at("spec"));
  p.degree_bound = j.at("degree_bound").get<int>();
  p.relations_stable = j.at("relations_stable").get<bool>();
  for (const auto& g : j.at("generators")) {
    p.generators.push_back(bivector_from_json(g));
    p.generator_weights.push_back(weight_from_json(g.at("weight")));
  }
  const auto& rels = j.at("relations");
  const auto& weights = j.at("relation_weights");
  for (size_t i = 0; i < rels.size(); ++i) {
    Relation r;
    for (const auto& c : rels[i]) r.coefficients.push_back(parse_poly(c.get<std::string>(), Chart::U));
    r.weight = weight_from_json(weights.at(i));
    p.relations.push_back(std::move(r));
  }
  return p;
}

Json to_json(const VanishingLocus& l) {
  Json comps = Json::array();
  for (const auto& c : l.components) {
    Json eq = Json::array();
    for (const auto& piece : c.pieces) eq.push_back(piece.to_string());
    comps.push_back(Json{{"equations", eq}, {"type", c.type}});
  }
  Json pieces = Json::array();
  for (const auto& piece : l.chart_components) pieces.push_back(piece.to_string());
  return Json{{"spec", spec_to_json(l.spec)},
              {"charts", Json{{"U", polys_to_json(l.u_ideal, Chart::U)}, {"V", polys_to_json(l.v_ideal, Chart::V)}}},
              {"decomposed", l.decomposed},
              {"chart_components", pieces},
              {"components", comps},
              {"summary", l.type_summary()}};
}

Json to_json(const CasimirSpace& c) {
  Json out{{"degree_bound", c.degree_bound},
           {"description", c.description()},
           {"global_basis", polys_to_json(c.global_basis)},
           {"local_basis", polys_to_json(c.local_basis)}};
  out["independent_variables"] = c.independent_variables ? variables_to_json(*c.independent_variables) : Json();
  return out;
}

Json to_json(const FoliationReport& f) {
  return Json{{"degeneracy_locus", to_json(f.locus)}, {"casimirs", to_json(f.casimir)}, {"leaves", f.leaves}};
}

Json to_json(const IsoCertificate& c) {
  return Json{{"pair", Json::array({c.from, c.to})}, {"map", c.map}, {"scale", c.scale.to_string()}};
}

Json to_json(const EmbeddingReport& r) {
  Json gens = Json::array();
  for (size_t i = 0; i < r.generators.size(); ++i) {
    Json ws = Json::array();
    for (const auto& w : r.witnesses[i]) {
      ws.push_back(Json{{"construction", w.construction}, {"map", w.map}, {"scale", w.scale.to_string()}});
    }
    Json g = to_json(r.generators[i]);
    g["witnesses"] = ws;
    gens.push_back(g);
  }
  return Json{{"spec", spec_to_json(r.spec)},
              {"generators", gens},
              {"all_witnessed", r.all_witnessed()},
              {"unwitnessed", r.unwitnessed()}};
}

Json to_json(const TrivectorDensity& t) {
  return Json{{"spec", spec_to_json(t.spec)},
              {"U", format_poly(t.coeff, Chart::U)},
              {"V", format_poly(t.v_coefficient(), Chart::V)}};
}

}  // namespace cybiv
