#include <gtest/gtest.h>

#include <set>

#include "affold/rootdata.hpp"

using namespace affold;

namespace {

// Reflection closure of the simple roots straight from the matrix entries.
std::set<IntVec> closure_oracle(const std::vector<IntVec>& a)
{
  const std::size_t n = a.size();
  std::set<IntVec> seen;
  std::vector<IntVec> todo;
  for (std::size_t i = 0; i < n; ++i) {
    IntVec e(n, 0);
    e[i] = 1;
    todo.push_back(e);
  }
  while (!todo.empty()) {
    IntVec r = todo.back();
    todo.pop_back();
    if (!seen.insert(r).second) continue;
    for (std::size_t i = 0; i < n; ++i) {
      int c = 0;
      for (std::size_t k = 0; k < n; ++k) c += r[k] * a[k][i];
      IntVec s = r;
      s[i] -= c;
      todo.push_back(s);
    }
  }
  return seen;
}

FiniteRoot root(IntVec v) { return FiniteRoot{std::move(v)}; }
Coweight cow(IntVec v) { return Coweight{std::move(v)}; }

}  // namespace

TEST(ValidateCartan, Examples)
{
  EXPECT_EQ(validate_cartan({{2, -1}, {-1, 2}}).type_label, "A2");
  EXPECT_EQ(validate_cartan({{2, 0}, {0, 2}}).type_label, "A1xA1");
  try {
    validate_cartan({{2, -2}, {-2, 2}});
    FAIL() << "affine matrix accepted";
  } catch (const CartanError& e) {
    EXPECT_EQ(e.reason(), CartanError::Reason::NotFiniteType);
  }
}

TEST(ValidateCartan, RejectsNonCartan)
{
  auto reason = [](const std::vector<IntVec>& m) {
    try {
      validate_cartan(m);
    } catch (const CartanError& e) {
      return e.reason();
    }
    return CartanError::Reason::Unsupported;
  };
  EXPECT_EQ(reason({{2, 1}, {-1, 2}}), CartanError::Reason::NotCartan);
  EXPECT_EQ(reason({{1, -1}, {-1, 2}}), CartanError::Reason::NotCartan);
  EXPECT_EQ(reason({{2, 0}, {-1, 2}}), CartanError::Reason::NotCartan);
  EXPECT_EQ(reason({{2, -1}}), CartanError::Reason::NotCartan);
  EXPECT_EQ(reason({{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}}), CartanError::Reason::NotFiniteType);
  EXPECT_EQ(reason({{2, -1}, {-4, 2}}), CartanError::Reason::NotFiniteType);
}

TEST(ValidateCartan, ClassifiesAllFamilies)
{
  for (std::string label : {"A1", "A4", "B2", "B3", "C3", "D4", "D5", "E6", "E7", "E8", "F4", "G2", "A2xB2", "A1xA1xA1"})
    EXPECT_EQ(cartan_from_label(label).type_label, label);
  // relabelled G2 is still G2
  EXPECT_EQ(validate_cartan({{2, -3}, {-1, 2}}).type_label, "G2");
}

TEST(ValidateCartan, Symmetrizer)
{
  for (std::string label : {"B3", "C3", "F4", "G2", "A2xG2"}) {
    const auto d = cartan_from_label(label);
    for (int i = 0; i < d.n; ++i)
      for (int j = 0; j < d.n; ++j)
        EXPECT_EQ(d.symmetrizer[static_cast<std::size_t>(i)] * d.entry(i, j), d.symmetrizer[static_cast<std::size_t>(j)] * d.entry(j, i));
  }
}

TEST(Pairing, Examples)
{
  const RootSystem rs(cartan_from_label("A2"));
  EXPECT_EQ(rs.pairing(cow({1, 0}), root({1, 0})), 2);
  EXPECT_EQ(rs.pairing(cow({1, 0}), root({0, 1})), -1);
  EXPECT_EQ(rs.pairing(cow({1, 1}), root({1, 1})), 2);
  EXPECT_THROW(rs.pairing(cow({1}), root({1, 0})), std::invalid_argument);
}

TEST(Reflections, Examples)
{
  const RootSystem rs(cartan_from_label("A2"));
  EXPECT_EQ(rs.reflect_root(0, root({0, 1})), root({1, 1}));
  EXPECT_EQ(rs.reflect_root(0, root({1, 0})), root({-1, 0}));
  EXPECT_EQ(rs.reflect_coweight(0, cow({0, 1})), cow({1, 1}));
  EXPECT_THROW(rs.reflect_root(2, root({1, 0})), std::out_of_range);
}

TEST(Roots, CountsMatchClosureOracle)
{
  const std::map<std::string, std::size_t> sizes{{"A1", 2},  {"A2", 6},  {"B2", 8},  {"C2", 8},   {"G2", 12}, {"A3", 12},
                                                 {"B3", 18}, {"C3", 18}, {"D4", 24}, {"F4", 48},  {"E6", 72}, {"E7", 126},
                                                 {"E8", 240}, {"A1xA2", 8}};
  for (const auto& [label, size] : sizes) {
    const auto d = cartan_from_label(label);
    const RootSystem rs(d);
    const auto oracle = closure_oracle(d.a);
    std::set<IntVec> got;
    for (const auto& r : rs.roots()) got.insert(r.coords);
    EXPECT_EQ(got, oracle) << label;
    EXPECT_EQ(rs.roots().size(), size) << label;
    EXPECT_EQ(rs.positive_roots().size() * 2, size) << label;
  }
}

TEST(Roots, ClosedUnderReflectionAndNegation)
{
  for (std::string label : {"A2", "B2", "G2", "B3", "F4"}) {
    const RootSystem rs(cartan_from_label(label));
    for (const auto& r : rs.roots()) {
      EXPECT_TRUE(r.is_positive() || r.is_negative());
      EXPECT_TRUE(rs.is_root(-r));
      for (int i = 0; i < rs.rank(); ++i) EXPECT_TRUE(rs.is_root(rs.reflect_root(i, r)));
      // <beta^vee, beta> = 2
      EXPECT_EQ(rs.pairing(rs.coroot(r), r), 2);
    }
  }
}

TEST(HighestRoot, Examples)
{
  EXPECT_EQ(RootSystem(cartan_from_label("A1")).highest_root(), root({1}));
  EXPECT_EQ(RootSystem(cartan_from_label("A2")).highest_root(), root({1, 1}));
  const RootSystem g2(cartan_from_label("G2"));
  // oracle: maximal height over the enumerated roots
  int best = 0;
  for (const auto& r : g2.roots()) best = std::max(best, r.height());
  EXPECT_EQ(best, 5);
  EXPECT_EQ(g2.highest_root().height(), 5);
  EXPECT_EQ(g2.highest_root(), root({3, 2}));
  const RootSystem red(cartan_from_label("A1xA2"));
  EXPECT_THROW(red.highest_root(), CartanError);
  ASSERT_EQ(red.highest_roots().size(), 2u);
  EXPECT_EQ(red.highest_roots()[0], root({1, 0, 0}));
  EXPECT_EQ(red.highest_roots()[1], root({0, 1, 1}));
}

TEST(WeylGroup, Examples)
{
  const RootSystem rs(cartan_from_label("A2"));
  const auto s1 = rs.simple_reflection(0), s2 = rs.simple_reflection(1);
  EXPECT_EQ(rs.mul(s1, s1), rs.identity());
  auto c = rs.mul(s1, s2);
  EXPECT_EQ(rs.mul(c, rs.mul(c, c)), rs.identity());
  // composition of single reflections
  EXPECT_EQ(rs.act(c, root({1, 0})), rs.reflect_root(0, rs.reflect_root(1, root({1, 0}))));
  EXPECT_EQ(rs.act(c, root({1, 0})), root({0, 1}));
  EXPECT_EQ(rs.act(rs.mul(s2, s1), root({1, 0})), root({-1, -1}));
}

TEST(WeylGroup, CoxeterPresentation)
{
  for (std::string label : {"A2", "B2", "G2", "A3", "B3", "A1xA1"}) {
    const RootSystem rs(cartan_from_label(label));
    const auto& d = rs.datum();
    for (int i = 0; i < d.n; ++i) {
      EXPECT_EQ(rs.mul(rs.simple_reflection(i), rs.simple_reflection(i)), rs.identity());
      for (int j = i + 1; j < d.n; ++j) {
        const int prod = d.entry(i, j) * d.entry(j, i);
        const int m = prod == 0 ? 2 : prod == 1 ? 3 : prod == 2 ? 4 : 6;
        const auto x = rs.mul(rs.simple_reflection(i), rs.simple_reflection(j));
        auto p = rs.identity();
        for (int k = 1; k <= m; ++k) {
          p = rs.mul(p, x);
          if (k < m) EXPECT_NE(p, rs.identity()) << label;
        }
        EXPECT_EQ(p, rs.identity()) << label << " " << i << "," << j;
      }
    }
  }
}

TEST(WeylGroup, PairingInvarianceAndInverse)
{
  for (std::string label : {"A2", "B2", "G2", "B3"}) {
    const RootSystem rs(cartan_from_label(label));
    for (const auto& w : rs.weyl_group_elements()) {
      EXPECT_EQ(rs.mul(w, rs.inverse(w)), rs.identity());
      for (const auto& r : rs.roots()) {
        EXPECT_TRUE(rs.is_root(rs.act(w, r)));
        for (int j = 0; j < rs.rank(); ++j) {
          const Coweight h{rs.unit(j)};
          EXPECT_EQ(rs.pairing(rs.act(w, h), rs.act(w, r)), rs.pairing(h, r));
        }
      }
    }
  }
}

TEST(WeylGroup, OrderAndLengthAgainstInversions)
{
  const std::map<std::string, std::size_t> order{{"A2", 6}, {"B2", 8}, {"G2", 12}, {"A3", 24}, {"B3", 48}};
  for (const auto& [label, size] : order) {
    const RootSystem rs(cartan_from_label(label));
    const auto all = rs.weyl_group_elements();
    EXPECT_EQ(all.size(), size);
    // word-metric distance by breadth-first search
    std::map<FiniteWeylElement, int> dist{{rs.identity(), 0}};
    std::vector<FiniteWeylElement> frontier{rs.identity()};
    while (!frontier.empty()) {
      std::vector<FiniteWeylElement> next;
      for (const auto& x : frontier)
        for (int i = 0; i < rs.rank(); ++i) {
          auto y = rs.mul(x, rs.simple_reflection(i));
          if (dist.emplace(y, dist[x] + 1).second) next.push_back(y);
        }
      frontier = std::move(next);
    }
    for (const auto& w : all) {
      int inversions = 0;
      for (const auto& r : rs.positive_roots()) inversions += rs.act(rs.inverse(w), r).is_negative() ? 1 : 0;
      EXPECT_EQ(rs.length(w), inversions);
      EXPECT_EQ(rs.length(w), dist.at(w));
      EXPECT_EQ(rs.from_word(rs.reduced_word(w)), w);
    }
  }
}

TEST(WeylGroup, CanonicalWordIsLexSmallest)
{
  const RootSystem rs(cartan_from_label("A3"));
  // oracle: smallest word among all words of minimal length reaching w
  std::map<FiniteWeylElement, IntVec> best{{rs.identity(), {}}};
  std::vector<IntVec> layer{{}};
  for (int len = 1; len <= 6; ++len) {
    std::vector<IntVec> next;
    for (const auto& w : layer)
      for (int i = 0; i < 3; ++i) {
        IntVec x = w;
        x.push_back(i);
        const auto g = rs.from_word(x);
        auto it = best.find(g);
        if (it == best.end()) {
          best.emplace(g, x);
          next.push_back(x);
        } else if (it->second.size() == x.size()) {
          if (x < it->second) it->second = x;
          next.push_back(x);
        }
      }
    layer = std::move(next);
  }
  EXPECT_EQ(best.size(), 24u);
  for (const auto& [g, w] : best) EXPECT_EQ(rs.canonical_word(g), w);
}
