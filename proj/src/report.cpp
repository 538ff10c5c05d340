#include "apolar/report.hpp"

namespace apolar {

namespace {

Json strings(const std::vector<DiffOperator>& ops) {
  Json out = Json::array();
  for (const auto& g : ops) out.push_back(to_string(g));
  return out;
}

Json strings(const std::vector<Rational>& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(to_string(v));
  return out;
}

Json monomials(const std::vector<Monomial>& basis, const VariableSplit& split) {
  Json out = Json::array();
  for (const auto& m : basis) out.push_back(to_string(DiffOperator::monomial(split, m)));
  return out;
}

Json facet_list(const std::vector<VertexSet>& facets) {
  Json out = Json::array();
  for (VertexSet s : facets) out.push_back(vertices_of(s));
  return out;
}

Json ideal_checks(const std::vector<IdealCheck>& v) {
  Json out = Json::array();
  for (const auto& c : v)
    out.push_back({{"i", c.i}, {"j", c.j}, {"generated", c.generated_quotient}, {"computed", c.computed}});
  return out;
}

}  // namespace

Json to_json(const HilbertData& h) {
  Json j;
  j["socle_degree"] = h.socle_degree;
  j["h"] = h.h;
  if (h.bigraded) {
    Json table = Json::array();
    for (const auto& e : *h.bigraded) table.push_back({e.i, e.j, e.dim});
    j["bigraded"] = std::move(table);
  }
  return j;
}

Json to_json(const GradedIdeal& ideal) { return strings(ideal.minimal_generators()); }

Json to_json(const ZeroTest& t) {
  Json j;
  j["sigma"] = t.sigma;
  j["vanishes"] = t.vanishes;
  j["certainty"] = t.certainty == Certainty::certain ? "certain" : "probabilistic";
  j["symbolic"] = t.symbolic;
  j["rounds"] = t.rounds;
  j["seed"] = t.seed;
  j["point"] = t.point ? strings(*t.point) : Json(nullptr);
  j["value"] = t.value ? Json(to_string(*t.value)) : Json(nullptr);
  return j;
}

Json to_json(const HessianMatrix& h, const ZeroTest& t) {
  const VariableSplit& split = h.entries.front().split();
  Json j;
  j["order"] = h.order;
  j["basis"] = monomials(h.basis, split);
  Json rows = Json::array();
  for (std::size_t r = 0; r < h.size(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < h.size(); ++c) row.push_back(to_string(h(r, c)));
    rows.push_back(std::move(row));
  }
  j["entries"] = std::move(rows);
  const Json test = to_json(t);
  for (auto it = test.begin(); it != test.end(); ++it) j[it.key()] = *it;
  return j;
}

Json to_json(const LefschetzReport& r) {
  Json j;
  j["property"] = to_string(r.property);
  j["verdict"] = to_string(r.verdict);
  j["witness"] = r.witness ? Json(to_string(*r.witness)) : Json(nullptr);
  Json evidence = Json::array();
  for (const auto& e : r.ranks)
    evidence.push_back({{"kind", "rank"},
                        {"source_degree", e.source_degree},
                        {"power", e.power},
                        {"rank", e.rank},
                        {"expected", e.expected},
                        {"middle", e.middle}});
  for (const auto& e : r.hessians) {
    Json item{{"kind", "hessian"}, {"order", e.order}, {"sigma", e.sigma}};
    if (e.value) item["value"] = to_string(*e.value);
    if (e.zero_test) item["zero_test"] = to_json(*e.zero_test);
    evidence.push_back(std::move(item));
  }
  j["evidence"] = std::move(evidence);
  j["seed"] = r.seed;
  j["trials"] = r.trials;
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

Json to_json(const NagataForm& form) {
  Json j;
  j["order"] = form.order;
  j["u_degree"] = form.u_degree;
  Json g = Json::array();
  for (const auto& p : form.g) g.push_back(to_string(p));
  j["g"] = std::move(g);
  j["f"] = to_string(form.f);
  j["warnings"] = form.warnings;
  return j;
}

Json to_json(const IncidenceSummary& s) {
  Json j;
  j["trials"] = s.trials;
  j["on_hypersurface"] = s.on_hypersurface;
  j["seed"] = s.seed;
  j["singular_locus_check"] = s.singular_locus_check;
  j["inconclusive"] = s.inconclusive;
  j["attempts"] = s.attempts;
  j["criterion_mismatches"] = s.criterion_mismatches;
  j["parameters"] = {{"alpha", s.alpha_parameters},
                     {"base", s.base_parameters},
                     {"total", s.family_parameters}};
  return j;
}

Json to_json(const SimplicialComplex& c) {
  Json j;
  j["vertices"] = c.vertex_count();
  j["facets"] = facet_list(c.facets());
  j["f_vector"] = c.f_vector();
  j["pure"] = c.pure();
  j["dimension"] = c.dimension();
  j["warnings"] = c.warnings();
  return j;
}

Json to_json(const ComplexPrediction& p) {
  Json j;
  j["order"] = p.order;
  j["h"] = p.h;
  Json table = Json::array();
  for (const auto& e : p.bigraded) table.push_back({e.i, e.j, e.dim});
  j["bigraded"] = std::move(table);
  j["families"] = {{"powers", strings(p.powers)},
                   {"nonfaces", strings(p.nonfaces)},
                   {"mixed", strings(p.mixed)},
                   {"binomials", strings(p.binomials)},
                   {"completion", strings(p.completion)}};
  j["complement_empty"] = p.complement_empty;
  return j;
}

Json to_json(const VerificationReport& r) {
  Json j;
  j["passed"] = r.passed();
  Json dims = Json::array();
  for (const auto& d : r.dimension_mismatches)
    dims.push_back({{"i", d.i}, {"j", d.j}, {"predicted", d.predicted}, {"computed", d.computed}});
  j["dimensions"] = {{"pass", r.dimensions_pass()}, {"checked", r.dimension_checks}, {"mismatches", dims}};
  j["annihilation"] = {{"pass", r.generators_pass()},
                       {"checked", r.generator_checks},
                       {"offending", r.non_annihilating}};
  j["ideal"] = {{"pass", r.ideal_pass()},
                {"checked", r.ideal_checks},
                {"mismatches", ideal_checks(r.ideal_mismatches)},
                {"stated_families_pass", r.stated_ideal_pass()},
                {"stated_families_mismatches", ideal_checks(r.stated_ideal_mismatches)}};
  j["predicted_h"] = r.prediction.h;
  j["computed_h"] = r.computed.h;
  j["complement_empty"] = r.prediction.complement_empty;
  j["f"] = to_string(r.form.f);
  return j;
}

SimplicialComplex complex_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j.contains("facets"))
    throw ContractError("complex JSON needs \"vertices\" and \"facets\"");
  const int m = j.at("vertices").get<int>();
  std::vector<std::vector<int>> facets;
  for (const auto& f : j.at("facets")) facets.push_back(f.get<std::vector<int>>());
  return face_complex(facets, m);
}

}  // namespace apolar
