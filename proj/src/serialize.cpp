#include "innerform/serialize.hpp"

namespace innerform::io {

json to_json(const Rational& x) { return x.get_str(); }

json to_json(const QScalar& x) { return x.to_string(); }

json to_json(const SymPoly& f) {
  json terms = json::array();
  for (const auto& [w, c] : f.terms()) terms.push_back({{"exponent", w.entries()}, {"coeff", to_json(c)}});
  return {{"nvars", f.nvars()}, {"text", f.to_string()}, {"terms", terms}};
}

json to_json(const transfer::SurjectivityReport& r) {
  json leading = json::array();
  for (const auto& c : r.leading) leading.push_back(to_json(c));
  json ranks = json::array();
  for (const auto& dr : r.ranks) ranks.push_back({{"degree", dr.degree}, {"dimension", dr.dimension}, {"rank", dr.rank}});
  return {{"r", r.params.r}, {"d", r.params.d}, {"maxdeg", r.maxdeg}, {"leading", leading}, {"ranks", ranks}, {"ok", r.ok}};
}

json to_json(const weyl::SdClassFunction& f) {
  json out = json::array();
  for (const auto& [rho, v] : f.values) out.push_back({{"rho", rho.to_string()}, {"value", to_json(v)}});
  return out;
}

json to_json(const weyl::VanishingReport& r) {
  json entries = json::array();
  for (const auto& e : r.entries) {
    entries.push_back({{"J", e.j.to_string()}, {"w_M", e.w_m.to_string()}, {"value", to_json(e.value)}});
  }
  return {{"d", r.d}, {"M", r.m.to_string()}, {"entries", entries}, {"all_zero", r.all_zero}};
}

json group_json(const finitegl::GLGroup& g) {
  json classes = json::array();
  for (const auto& c : g.classes()) {
    classes.push_back({{"rep_matrix", c.rep.to_string()}, {"size", c.size}, {"char_poly", finitegl::poly_to_string(c.char_poly)}});
  }
  return {{"d", g.d()}, {"q", g.q()}, {"order", g.order()}, {"classes", classes}};
}

json to_json(const finitegl::ClassFunction& f) {
  json out = json::array();
  for (const auto& v : f.values) out.push_back(to_json(v));
  return out;
}

json to_json(const finitegl::CombPropReport& r) {
  return {{"d", r.d}, {"q", r.q}, {"lhs", to_json(r.lhs)}, {"rhs", to_json(r.rhs)}, {"ok", r.ok}};
}

json to_json(const finitegl::IndConjugateReport& r) {
  json rows = json::array();
  for (const auto& row : r.rows) {
    json a = json::array(), b = json::array(), c = json::array();
    for (const auto& x : row.flag_sum) a.push_back(to_json(x));
    for (const auto& x : row.averaged) b.push_back(to_json(x));
    for (const auto& x : row.other_sum) c.push_back(to_json(x));
    rows.push_back({{"p_class", row.p_class}, {"p_class_size", row.p_class_size}, {"flag_sum", a},
                    {"averaged", b}, {"other_transversal", c}, {"ok", row.ok}});
  }
  return {{"d", r.d}, {"q", r.q}, {"c", r.c.to_string()}, {"rows", rows}, {"ok", r.ok}};
}

json to_json(const ep::ParahoricCombo& x) {
  json terms = json::array();
  for (const auto& [t, c] : x.terms()) terms.push_back({{"type", t.to_string()}, {"coeff", to_json(c)}});
  return {{"n", x.n()}, {"basis", ep::to_string(x.basis())}, {"terms", terms}, {"text", x.to_string()}};
}

json to_json(const ep::ShadowReport& r) {
  return {{"d", r.type.d}, {"type", r.type.blocks.to_string()}, {"q", r.q},
          {"shadow", to_json(r.shadow)}, {"averaged_dl", to_json(r.averaged_dl)}, {"ok", r.ok}};
}

}  // namespace innerform::io
