#pragma once

// The SL_3 worked example: word 2,1,0,2,0,1,0,2,0 with labels
// (0,0,0,0,c5,0,c7,c8,c9) at (c5, c7, c8, c9) = (2, 3, 5, 5/3), run through the
// matrix executor and the combinatorial enumerator, compared with the
// published closed forms.

#include <string>
#include <utility>
#include <vector>

#include "affold/affine.hpp"
#include "affold/folding.hpp"
#include "affold/loopgroup.hpp"

namespace affold::example8 {

using RF = RationalFunction<Rational>;
using Matrix = GroupMatrix<Rational>;

inline const Word& word()
{
  static const Word w{2, 1, 0, 2, 0, 1, 0, 2, 0};
  return w;
}
inline const Word& endpoint_word()
{
  static const Word v{2, 1, 0, 2, 1, 2, 0};
  return v;
}
inline std::vector<Rational> labels()
{
  return {0, 0, 0, 0, 2, 0, 3, 5, Rational(5, 3)};
}

/// sum c t^k
inline RF laurent(const std::vector<std::pair<Rational, int>>& terms)
{
  RF f;
  for (const auto& [c, k] : terms) f = f + RF::monomial(c, k);
  return f;
}

inline Matrix matrix(const std::vector<std::vector<RF>>& rows)
{
  Matrix m(static_cast<int>(rows.size()));
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows.size(); ++c) m(static_cast<int>(r), static_cast<int>(c)) = rows[r][c];
  return m;
}

inline Matrix expected_u9()
{
  return matrix({{RF(1), RF(0), RF(0)},
                 {laurent({{Rational(1, 2), 0}, {Rational(-5, 12), 1}}), RF(1), RF(0)},
                 {laurent({{Rational(1, 6), -2}}), RF(0), RF(1)}});
}

inline Matrix expected_v9()
{
  return matrix({{RF(0), RF(1), RF(0)}, {laurent({{-1, 2}}), RF(0), RF(0)}, {RF(0), RF(0), laurent({{1, -2}})}});
}

/// Closed form at (c5, c7, c8) = (2, 3, 5), entry by entry as published.
inline Matrix expected_b9()
{
  return matrix({{laurent({{Rational(1, 2), 0}, {Rational(-5, 12), 1}}), RF(Rational(-25, 12)), RF(Rational(25, 36))},
                 {laurent({{-1, 2}}), laurent({{6, 0}, {5, 1}}), laurent({{-2, 0}, {Rational(-5, 3), 1}})},
                 {laurent({{Rational(-1, 6), 2}}), laurent({{Rational(-5, 6), 1}}),
                  laurent({{Rational(1, 3), 0}, {Rational(5, 18), 1}})}});
}

/// (wall, coefficient) of each factor of u9.
inline std::vector<UFactor<Rational>> expected_factors()
{
  auto root = [](int a1, int a2, int k) { return AffineRoot{FiniteRoot{{a1, a2}}, k}; };
  return {{root(0, -1, 0), 0},  {root(-1, -1, 0), 0},  {root(0, -1, -1), 0},
          {root(-1, -1, -1), 0}, {root(-1, 0, 0), Rational(1, 2)}, {root(0, -1, -2), 0},
          {root(-1, -1, -2), Rational(1, 6)}, {root(-1, 0, 1), Rational(-5, 12)}, {root(0, -1, -3), 0}};
}

struct Check {
  std::string name;
  bool passed;
  std::string detail;
};

inline std::string matrix_diff(const Matrix& got, const Matrix& want)
{
  std::string d;
  for (int r = 0; r < got.size(); ++r)
    for (int c = 0; c < got.size(); ++c)
      if (got(r, c) != want(r, c))
        d += "(" + std::to_string(r + 1) + "," + std::to_string(c + 1) + ") got " + got(r, c).to_string() + ", expected " +
             want(r, c).to_string() + "; ";
  return d;
}

inline std::vector<Check> run()
{
  const AffineWeylGroup W(cartan_from_label("A2"));
  const LoopGroup<Rational> G(W);
  const auto st = execute_folding(G, word(), labels());
  std::vector<Check> out;

  auto matrix_check = [&](const std::string& name, const Matrix& got, const Matrix& want) {
    const auto d = matrix_diff(got, want);
    out.push_back({name, d.empty(), d});
  };
  matrix_check("u9 equals the closed form", st.u, expected_u9());
  {
    std::string d = matrix_diff(st.v_rep, expected_v9());
    if (G.monomial_to_weyl(st.v_rep) != W.from_word(endpoint_word())) d += "Weyl image differs from s2s1s0s2s1s2s0; ";
    if (st.v != W.from_word(endpoint_word())) d += "tracked v differs from s2s1s0s2s1s2s0; ";
    out.push_back({"v9 equals the closed form", d.empty(), d});
  }
  matrix_check("b9 equals the closed form", st.b, expected_b9());
  {
    std::string d;
    const auto want = expected_factors();
    if (st.u_factors.size() != want.size()) d = "wrong number of factors";
    for (std::size_t k = 0; d.empty() && k < want.size(); ++k) {
      const auto& f = st.u_factors[k];
      if (f.wall != want[k].wall || f.coeff != want[k].coeff)
        d += "step " + std::to_string(k + 1) + ": got " + W.to_string(f.wall) + " : " + f.coeff.get_str() + ", expected " +
             W.to_string(want[k].wall) + " : " + want[k].coeff.get_str() + "; ";
    }
    out.push_back({"u9 factor walls and labels", d.empty(), d});
  }
  {
    std::string d;
    const auto target = W.from_word(endpoint_word());
    std::vector<FoldedPath> hits;
    for (auto& p : enumerate_folded_paths(W, word()))
      if (p.endpoint == target) hits.push_back(std::move(p));
    if (hits.size() != 1) {
      d = std::to_string(hits.size()) + " paths end at v, expected 1";
    } else {
      const auto& p = hits.front();
      if (p.kinds_string() != "ZZZZFZFPZ") d += "kinds " + p.kinds_string() + "; ";
      if (count_polynomial(p).to_string() != "q^3-2q^2+q") d += "count " + count_polynomial(p).to_string() + "; ";
      if (p.dimension() != 3) d += "dimension " + std::to_string(p.dimension()) + "; ";
      for (std::size_t k = 0; k < p.walls.size(); ++k)
        if (p.walls[k] != st.u_factors[k].wall) d += "wall " + std::to_string(k + 1) + " differs from the executor; ";
    }
    out.push_back({"unique combinatorial cell with count q^3-2q^2+q", d.empty(), d});
  }
  {
    std::string d;
    if (!in_uminus(st.u)) d += "u9 not in U-; ";
    if (!in_iwahori(st.b)) d += "b9 not in I; ";
    if (!is_monomial(st.v_rep)) d += "v9 not monomial; ";
    std::string kinds;
    for (auto k : st.kinds) kinds += step_code(k);
    if (kinds != "ZZZZFZFPZ") d += "executor kinds " + kinds + "; ";
    auto prod = Matrix::identity(3);
    for (std::size_t k = 0; k < word().size(); ++k) prod = prod * G.x_simple(word()[k], labels()[k]) * G.n_simple_inv(word()[k]);
    if (prod != st.u * st.v_rep * st.b) d += "u9 v9 b9 differs from the generator product; ";
    out.push_back({"executor state is consistent", d.empty(), d});
  }
  return out;
}

}  // namespace affold::example8
