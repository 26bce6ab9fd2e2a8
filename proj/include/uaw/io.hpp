#pragma once

// JSON forms of field elements, representations, reports and catalogs.

#include <string>
#include <vector>

#include <json.hpp>

#include "uaw/modulegen.hpp"
#include "uaw/qexpr.hpp"

namespace uaw {

using json = nlohmann::ordered_json;

inline json cyclotomic_to_json(const Cyclotomic& x) {
  json coeffs = json::array();
  for (const auto& c : x.coefficients()) coeffs.push_back(c.get_num().get_str() + "/" + c.get_den().get_str());
  return {{"d", x.context().order()}, {"coeffs", coeffs}};
}

inline Cyclotomic cyclotomic_from_json(const json& j) {
  const FieldContext& ctx = make_field(j.at("d").get<int>());
  std::vector<Rational> cs;
  for (const auto& c : j.at("coeffs")) {
    Rational r(c.get<std::string>());
    r.canonicalize();
    cs.push_back(r);
  }
  if (cs.size() != static_cast<std::size_t>(ctx.degree())) throw ShapeMismatch("coefficient list has the wrong length");
  return Cyclotomic::from_coefficients(ctx, cs);
}

inline json matrix_to_json(const ExactMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(print_qexpr(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline ExactMatrix matrix_from_json(const FieldContext& ctx, const json& j, std::size_t n) {
  if (!j.is_array() || j.size() != n) throw ShapeMismatch("matrix must have n rows");
  ExactMatrix m(ctx, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!j[i].is_array() || j[i].size() != n) throw ShapeMismatch("matrix must have n columns");
    for (std::size_t k = 0; k < n; ++k) m(i, k) = parse_qexpr(ctx, j[i][k].get<std::string>());
  }
  return m;
}

inline json bundle_to_json(const Representation& r) {
  return {{"d", r.context().order()},
          {"n", r.n},
          {"A", matrix_to_json(r.A)},
          {"B", matrix_to_json(r.B)},
          {"gamma", print_qexpr(r.gamma)}};
}

inline Representation bundle_from_json(const json& j) {
  const FieldContext& ctx = make_field(j.at("d").get<int>());
  const std::size_t n = j.at("n").get<std::size_t>();
  return assemble(matrix_from_json(ctx, j.at("A"), n), matrix_from_json(ctx, j.at("B"), n),
                  parse_qexpr(ctx, j.at("gamma").get<std::string>()));
}

inline json report_to_json(const Report& r) {
  json out = json::array();
  for (const auto& e : r.entries) {
    json item = {{"statement", e.statement}, {"status", to_string(e.status)}};
    if (!e.detail.empty()) item["detail"] = e.detail;
    out.push_back(std::move(item));
  }
  return out;
}

inline json spec_to_json(const ModuleSpec& s) {
  return {{"n", s.n}, {"a", print_qexpr(s.a)}, {"b", print_qexpr(s.b)}, {"c", print_qexpr(s.c)}};
}

inline json analysis_to_json(const Analysis& a) {
  json matches = json::array();
  for (const auto& m : a.matches) {
    json s = spec_to_json(m.spec);
    s["criterion"] = m.criterion;
    matches.push_back(std::move(s));
  }
  return {{"module", a.module_ok},
          {"irreducible", a.irreducible},
          {"span_dim", a.span_dim},
          {"sequence_type", a.sequence_type},
          {"branch", to_string(a.branch)},
          {"matches", matches},
          {"report", report_to_json(a.report)}};
}

inline json catalog_line(const CatalogEntry& e) {
  json j = bundle_to_json(e.rep);
  j["origin"] = e.origin;
  if (e.target) j["target"] = spec_to_json(*e.target);
  j["analysis"] = analysis_to_json(e.analysis);
  return j;
}

inline json catalog_meta(const Catalog& c) {
  const std::size_t dbar = static_cast<std::size_t>(make_field(c.d).dbar());
  return {{"d", c.d},
          {"entries", c.entries.size()},
          {"unsolved_items", c.unsolved},
          {"unsound_solutions", c.unsound},
          {"irreducible_of_dimension_dbar", c.has_irreducible_of_dim(dbar)},
          {"irreducible_above_dbar", c.irreducible_above(dbar)},
          {"notes", c.notes}};
}

}  // namespace uaw
