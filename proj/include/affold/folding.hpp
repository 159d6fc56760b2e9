#pragma once

// Labeled folded paths of a given type and their F_q point counts.
//
// A walk s_{i_1} ... s_{i_l} is read step by step from the current alcove v.
// If v alpha_j lies in -R^+ + Z delta the step is a forced positive crossing
// (free label); otherwise it branches into a fold (nonzero label, v stays) or
// a zero crossing (label 0, v -> v s_j).

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <future>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "affold/affine.hpp"

namespace affold {

enum class StepKind { PositiveCrossing, Fold, ZeroCrossing };

inline char step_code(StepKind k)
{
  switch (k) {
    case StepKind::PositiveCrossing: return 'P';
    case StepKind::Fold: return 'F';
    case StepKind::ZeroCrossing: return 'Z';
  }
  return '?';
}

inline StepKind step_from_code(char c)
{
  switch (c) {
    case 'P': return StepKind::PositiveCrossing;
    case 'F': return StepKind::Fold;
    case 'Z': return StepKind::ZeroCrossing;
    default: throw std::invalid_argument(std::string("unknown step kind '") + c + "'");
  }
}

/// Polynomial in q with integer coefficients, ascending powers.
class CountPolynomial {
 public:
  CountPolynomial() = default;
  explicit CountPolynomial(std::vector<std::int64_t> coeffs) : c_(std::move(coeffs)) { trim(); }

  static CountPolynomial constant(std::int64_t v) { return CountPolynomial({v}); }
  static CountPolynomial q_power(int k)
  {
    std::vector<std::int64_t> v(static_cast<std::size_t>(k + 1), 0);
    v.back() = 1;
    return CountPolynomial(std::move(v));
  }
  /// q^positive (q-1)^folds.
  static CountPolynomial cell(int positive, int folds)
  {
    CountPolynomial p = q_power(positive);
    const CountPolynomial q_minus_one({-1, 1});
    for (int i = 0; i < folds; ++i) p = p * q_minus_one;
    return p;
  }

  const std::vector<std::int64_t>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }

  std::int64_t eval(std::int64_t q) const
  {
    std::int64_t acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * q + *it;
    return acc;
  }

  friend CountPolynomial operator+(const CountPolynomial& a, const CountPolynomial& b)
  {
    std::vector<std::int64_t> v(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
    return CountPolynomial(std::move(v));
  }
  friend CountPolynomial operator*(const CountPolynomial& a, const CountPolynomial& b)
  {
    if (a.c_.empty() || b.c_.empty()) return {};
    std::vector<std::int64_t> v(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    return CountPolynomial(std::move(v));
  }
  CountPolynomial& operator+=(const CountPolynomial& o) { return *this = *this + o; }
  friend bool operator==(const CountPolynomial&, const CountPolynomial&) = default;

  /// "q^3-2q^2+q"
  std::string to_string() const
  {
    if (c_.empty()) return "0";
    std::string s;
    for (int k = degree(); k >= 0; --k) {
      const std::int64_t c = c_[static_cast<std::size_t>(k)];
      if (c == 0) continue;
      const std::int64_t mag = c < 0 ? -c : c;
      if (c < 0)
        s += "-";
      else if (!s.empty())
        s += "+";
      if (mag != 1 || k == 0) s += std::to_string(mag);
      if (k >= 1) s += "q";
      if (k >= 2) s += "^" + std::to_string(k);
    }
    return s;
  }

 private:
  void trim()
  {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<std::int64_t> c_;
};

struct FoldedPath {
  Word type_word;
  std::vector<StepKind> kinds;
  /// v_0 = 1, then the alcove after each step.
  std::vector<AffineWeylElement> alcoves;
  /// gamma_k, all in -R^+ + Z delta.
  std::vector<AffineRoot> walls;
  AffineWeylElement endpoint;

  int count(StepKind k) const { return static_cast<int>(std::count(kinds.begin(), kinds.end(), k)); }
  /// Dimension of the cell C^{#P} x (C^x)^{#F}.
  int dimension() const { return count(StepKind::PositiveCrossing) + count(StepKind::Fold); }
  std::string kinds_string() const
  {
    std::string s;
    for (auto k : kinds) s += step_code(k);
    return s;
  }
};

enum class StepOption { ForcedPositive, Branch };

inline StepOption step_options(const AffineWeylGroup& W, const AffineWeylElement& v, int j)
{
  return in_RU(W.act(v, W.simple_root(j))) ? StepOption::ForcedPositive : StepOption::Branch;
}

inline CountPolynomial count_polynomial(const FoldedPath& p)
{
  return CountPolynomial::cell(p.count(StepKind::PositiveCrossing), p.count(StepKind::Fold));
}

class NonReducedWord : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct EnumerateOptions {
  bool allow_nonreduced = false;
  /// Worker threads; output is identical for every value.
  unsigned jobs = 1;
};

namespace detail {

struct PathState {
  std::vector<StepKind> kinds;
  std::vector<AffineWeylElement> alcoves;
  std::vector<AffineRoot> walls;
};

// Children of a partial path at step k, Fold before ZeroCrossing.
inline std::vector<PathState> expand(const AffineWeylGroup& W, const Word& w, const PathState& s)
{
  const std::size_t k = s.kinds.size();
  const int j = w[k];
  const AffineWeylElement& v = s.alcoves.back();
  const AffineRoot root = W.act(v, W.simple_root(j));
  std::vector<PathState> out;
  auto child = [&](StepKind kind) {
    PathState c = s;
    c.kinds.push_back(kind);
    c.walls.push_back(kind == StepKind::PositiveCrossing ? root : -root);
    c.alcoves.push_back(kind == StepKind::Fold ? v : W.mul(v, W.simple_reflection(j)));
    out.push_back(std::move(c));
  };
  if (in_RU(root)) {
    child(StepKind::PositiveCrossing);
  } else {
    child(StepKind::Fold);
    child(StepKind::ZeroCrossing);
  }
  return out;
}

inline void dfs(const AffineWeylGroup& W, const Word& w, PathState& s, std::vector<FoldedPath>& out)
{
  if (s.kinds.size() == w.size()) {
    out.push_back(FoldedPath{w, s.kinds, s.alcoves, s.walls, s.alcoves.back()});
    return;
  }
  for (auto& c : expand(W, w, s)) dfs(W, w, c, out);
}

}  // namespace detail

/// All labeled folded paths of type w in depth-first order (Fold explored
/// before ZeroCrossing).
inline std::vector<FoldedPath> enumerate_folded_paths(const AffineWeylGroup& W, const Word& w,
                                                      const EnumerateOptions& opts = {})
{
  for (int i : w)
    if (i < 0 || i > W.rank()) throw std::out_of_range("word letter " + std::to_string(i) + " out of range");
  if (!opts.allow_nonreduced && !W.is_reduced(w)) throw NonReducedWord("word " + word_to_string(w) + " is not reduced");

  detail::PathState root{{}, {W.identity()}, {}};
  std::vector<FoldedPath> out;
  if (opts.jobs <= 1) {
    detail::dfs(W, w, root, out);
    return out;
  }
  // breadth-first split of the tree until there is enough work per thread
  std::vector<detail::PathState> frontier{root};
  while (frontier.size() < 4 * static_cast<std::size_t>(opts.jobs) && frontier.front().kinds.size() < w.size()) {
    std::vector<detail::PathState> next;
    for (const auto& s : frontier)
      for (auto& c : detail::expand(W, w, s)) next.push_back(std::move(c));
    frontier = std::move(next);
  }
  const std::size_t chunks = std::min<std::size_t>(opts.jobs, frontier.size());
  std::vector<std::future<std::vector<FoldedPath>>> parts;
  for (std::size_t t = 0; t < chunks; ++t) {
    const std::size_t lo = frontier.size() * t / chunks, hi = frontier.size() * (t + 1) / chunks;
    parts.push_back(std::async(std::launch::async, [&W, &w, &frontier, lo, hi] {
      std::vector<FoldedPath> local;
      for (std::size_t i = lo; i < hi; ++i) {
        auto s = frontier[i];
        detail::dfs(W, w, s, local);
      }
      return local;
    }));
  }
  for (auto& f : parts) {
    auto local = f.get();
    out.insert(out.end(), std::make_move_iterator(local.begin()), std::make_move_iterator(local.end()));
  }
  return out;
}

struct Cell {
  std::vector<FoldedPath> paths;
  CountPolynomial count;
  std::vector<int> dimensions;
};

/// Folded paths grouped by endpoint; the map order is the canonical endpoint order.
inline std::map<AffineWeylElement, Cell> cells_by_endpoint(const AffineWeylGroup& W, const Word& w,
                                                           const EnumerateOptions& opts = {})
{
  std::map<AffineWeylElement, Cell> cells;
  for (auto& p : enumerate_folded_paths(W, w, opts)) {
    Cell& c = cells[p.endpoint];
    c.count += count_polynomial(p);
    c.dimensions.push_back(p.dimension());
    c.paths.push_back(std::move(p));
  }
  return cells;
}

}  // namespace affold
