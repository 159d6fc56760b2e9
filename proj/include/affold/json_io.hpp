#pragma once

// JSON forms of endpoints, folded-path enumerations, matrices and executor
// states. Objects use nlohmann::json's sorted keys, so dump(parse(dump(x)))
// reproduces dump(x) byte for byte.

#include <nlohmann/json.hpp>

#include <map>
#include <string>
#include <vector>

#include "affold/affine.hpp"
#include "affold/folding.hpp"
#include "affold/loopgroup.hpp"

namespace affold::json_io {

using nlohmann::json;

/// {"finite_word": [letters 1..n], "translation": [coroot coordinates]}
inline json endpoint_to_json(const AffineWeylGroup& W, const AffineWeylElement& g)
{
  return {{"translation", g.translation.coords}, {"finite_word", W.finite_word(g.finite)}};
}

inline AffineWeylElement endpoint_from_json(const AffineWeylGroup& W, const json& j)
{
  Coweight lam{j.at("translation").get<IntVec>()};
  if (static_cast<int>(lam.coords.size()) != W.rank()) throw std::invalid_argument("endpoint translation has wrong length");
  return {lam, W.finite_from_word(j.at("finite_word").get<Word>())};
}

inline json root_to_json(const AffineRoot& r) { return json::array({r.finite.coords, r.delta}); }

inline json count_to_json(const CountPolynomial& p) { return p.coeffs(); }

inline json paths_to_json(const AffineWeylGroup& W, const Word& w, const std::vector<FoldedPath>& paths)
{
  json out;
  out["type"] = W.root_system().datum().type_label;
  out["type_word"] = w;
  out["reduced"] = W.is_reduced(w);
  json arr = json::array();
  std::map<AffineWeylElement, CountPolynomial> by_end;
  for (const auto& p : paths) {
    json walls = json::array();
    for (const auto& g : p.walls) walls.push_back(root_to_json(g));
    std::vector<std::string> kinds;
    for (auto k : p.kinds) kinds.emplace_back(1, step_code(k));
    const auto count = count_polynomial(p);
    arr.push_back({{"kinds", kinds},
                   {"end", endpoint_to_json(W, p.endpoint)},
                   {"walls", walls},
                   {"count", count_to_json(count)},
                   {"dim", p.dimension()}});
    by_end[p.endpoint] += count;
  }
  out["paths"] = arr;
  json ends = json::array();
  for (const auto& [g, c] : by_end)
    ends.push_back({{"end", endpoint_to_json(W, g)}, {"count", count_to_json(c)}, {"polynomial", c.to_string()}});
  out["by_endpoint"] = ends;
  return out;
}

/// [[numerator coefficients], [denominator coefficients]], ascending in t.
template <class F>
json rational_function_to_json(const RationalFunction<F>& f)
{
  std::vector<std::string> num, den;
  for (const auto& c : f.num().coeffs()) num.push_back(ScalarTraits<F>::to_string(c));
  for (const auto& c : f.den().coeffs()) den.push_back(ScalarTraits<F>::to_string(c));
  return json::array({num, den});
}

inline RationalFunction<Rational> rational_function_from_json(const json& j)
{
  auto poly = [](const json& a) {
    std::vector<Rational> c;
    for (const auto& s : a) c.push_back(ScalarTraits<Rational>::parse(s.get<std::string>()));
    return Polynomial<Rational>(std::move(c));
  };
  if (!j.is_array() || j.size() != 2) throw std::invalid_argument("matrix entry must be [num, den]");
  const auto den = poly(j[1]);
  if (den.is_zero()) throw std::invalid_argument("matrix entry has zero denominator");
  return {poly(j[0]), den};
}

template <class F>
json matrix_to_json(const GroupMatrix<F>& m)
{
  json rows = json::array();
  for (int r = 0; r < m.size(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.size(); ++c) row.push_back(rational_function_to_json(m(r, c)));
    rows.push_back(row);
  }
  return rows;
}

inline GroupMatrix<Rational> matrix_from_json(const json& j)
{
  const int n = static_cast<int>(j.size());
  GroupMatrix<Rational> m(n);
  for (int r = 0; r < n; ++r) {
    if (static_cast<int>(j[static_cast<std::size_t>(r)].size()) != n) throw std::invalid_argument("matrix is not square");
    for (int c = 0; c < n; ++c) m(r, c) = rational_function_from_json(j[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]);
  }
  return m;
}

template <class F>
json state_to_json(const LoopGroup<F>& G, const ExecutorState<F>& s)
{
  const auto& W = G.weyl_group();
  json factors = json::array();
  for (const auto& f : s.u_factors) factors.push_back({{"wall", root_to_json(f.wall)}, {"coeff", ScalarTraits<F>::to_string(f.coeff)}});
  std::vector<std::string> kinds, labels;
  for (auto k : s.kinds) kinds.emplace_back(1, step_code(k));
  for (const auto& c : s.normalized_labels) labels.push_back(ScalarTraits<F>::to_string(c));
  return {{"field", ScalarTraits<F>::name()},
          {"u", matrix_to_json(s.u)},
          {"u_factors", factors},
          {"v", endpoint_to_json(W, s.v)},
          {"v_rep", matrix_to_json(s.v_rep)},
          {"b", matrix_to_json(s.b)},
          {"kinds", kinds},
          {"normalized_labels", labels}};
}

}  // namespace affold::json_io
