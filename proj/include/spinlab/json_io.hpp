#pragma once
// JSON forms: scalars as canonical strings, matrices as arrays of rows,
// Clifford elements as {kind, n, terms: [{indices, coeff}]}.

#include <json.hpp>

#include <string>
#include <vector>

#include "spinlab/clifford.hpp"
#include "spinlab/exact_arith.hpp"
#include "spinlab/rootdata.hpp"

namespace spinlab {

using json = nlohmann::json;

inline json to_json(const GaussRat& x) { return x.str(); }

inline GaussRat scalar_from_json(const json& j) {
  if (j.is_number_integer()) return GaussRat(j.get<long>());
  if (!j.is_string()) throw ParseError("scalar must be a string or an integer");
  return GaussRat::parse(j.get<std::string>());
}

inline json to_json(const Mat& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).str());
    rows.push_back(row);
  }
  return rows;
}

inline Mat mat_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw ParseError("matrix must be a non-empty array of rows");
  std::size_t cols = j[0].size();
  Mat m(j.size(), cols);
  for (std::size_t r = 0; r < j.size(); ++r) {
    if (!j[r].is_array() || j[r].size() != cols) throw ParseError("ragged matrix");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = scalar_from_json(j[r][c]);
  }
  return m;
}

inline json to_json(const Poly& p) {
  json a = json::array();
  for (auto& c : p.coeffs()) a.push_back(c.str());
  return a;
}

inline json to_json(const std::vector<GaussRat>& v) {
  json a = json::array();
  for (auto& c : v) a.push_back(c.str());
  return a;
}

inline json to_json(const CliffordElement& x) {
  const QuadSpace& V = x.space();
  if (V.kind() == SpaceKind::Custom) throw DomainError("only V_2n and V_2n-1 elements serialize");
  json terms = json::array();
  for (auto& [m, c] : x.terms()) {
    json idx = json::array();
    for (int j = 0; j < V.dim(); ++j)
      if (m >> j & 1u) idx.push_back(j + 1);
    terms.push_back({{"indices", idx}, {"coeff", c.str()}});
  }
  return {{"kind", V.kind() == SpaceKind::Even ? "even" : "odd"}, {"n", V.n()}, {"terms", terms}};
}

inline CliffordElement element_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("element must be an object");
  if (!j.contains("kind") || !j.contains("n") || !j.contains("terms"))
    throw ParseError("element needs kind, n and terms");
  std::string kind = j.at("kind").get<std::string>();
  int n = j.at("n").get<int>();
  if (n < 2 || n > 8) throw ParseError("element: n out of range");
  QuadSpace V;
  if (kind == "even")
    V = QuadSpace::even(n);
  else if (kind == "odd")
    V = QuadSpace::odd(n);
  else
    throw ParseError("element: kind must be even or odd");
  CliffordElement::Terms t;
  for (auto& term : j.at("terms")) {
    Monomial m = 0;
    int last = 0;
    for (auto& i : term.at("indices")) {
      int k = i.get<int>();
      if (k <= last || k > V.dim()) throw ParseError("element: indices must increase within 1..dim");
      last = k;
      m |= 1u << (k - 1);
    }
    t[m] += scalar_from_json(term.at("coeff"));
  }
  return CliffordElement(V, std::move(t));
}

inline json weights_to_json(const std::vector<WeightVector>& ws) {
  json a = json::array();
  for (auto& w : ws) a.push_back(w);
  return a;
}

}  // namespace spinlab
