#pragma once

// Finite-type Cartan data, root and coroot lattices, the finite Weyl group.
//
// Conventions: a[i][j] = alpha_i(h_j) = <h_j, alpha_i>. Roots are integer
// vectors on the simple roots alpha_1..alpha_n, coweights integer vectors on
// the simple coroots h_1..h_n. Simple indices in this header are 0-based;
// affine words (affine.hpp) use letters 1..n for these and 0 for the affine
// node.

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "affold/scalar.hpp"

namespace affold {

using IntVec = std::vector<int>;

/// Square integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(int n, int fill = 0) : n_(n), a_(static_cast<std::size_t>(n * n), fill) {}
  static IntMatrix identity(int n)
  {
    IntMatrix m(n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  int size() const { return n_; }
  int& operator()(int r, int c) { return a_[static_cast<std::size_t>(r * n_ + c)]; }
  int operator()(int r, int c) const { return a_[static_cast<std::size_t>(r * n_ + c)]; }

  friend IntMatrix operator*(const IntMatrix& x, const IntMatrix& y)
  {
    IntMatrix m(x.n_);
    for (int r = 0; r < x.n_; ++r)
      for (int k = 0; k < x.n_; ++k) {
        const int v = x(r, k);
        if (v == 0) continue;
        for (int c = 0; c < x.n_; ++c) m(r, c) += v * y(k, c);
      }
    return m;
  }

  IntVec apply(const IntVec& v) const
  {
    IntVec out(static_cast<std::size_t>(n_), 0);
    for (int r = 0; r < n_; ++r)
      for (int c = 0; c < n_; ++c) out[static_cast<std::size_t>(r)] += (*this)(r, c) * v[static_cast<std::size_t>(c)];
    return out;
  }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
  friend auto operator<=>(const IntMatrix&, const IntMatrix&) = default;

 private:
  int n_ = 0;
  std::vector<int> a_;
};

struct FiniteRoot {
  IntVec coords;

  int height() const
  {
    int h = 0;
    for (int c : coords) h += c;
    return h;
  }
  bool is_positive() const
  {
    return std::all_of(coords.begin(), coords.end(), [](int c) { return c >= 0; }) &&
           std::any_of(coords.begin(), coords.end(), [](int c) { return c > 0; });
  }
  bool is_negative() const
  {
    return std::all_of(coords.begin(), coords.end(), [](int c) { return c <= 0; }) &&
           std::any_of(coords.begin(), coords.end(), [](int c) { return c < 0; });
  }
  FiniteRoot operator-() const
  {
    FiniteRoot r{coords};
    for (auto& c : r.coords) c = -c;
    return r;
  }
  friend FiniteRoot operator+(const FiniteRoot& a, const FiniteRoot& b)
  {
    FiniteRoot r{a.coords};
    for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] += b.coords[i];
    return r;
  }
  friend bool operator==(const FiniteRoot&, const FiniteRoot&) = default;
  friend auto operator<=>(const FiniteRoot&, const FiniteRoot&) = default;
};

/// Element of Q^vee.
struct Coweight {
  IntVec coords;

  Coweight operator-() const
  {
    Coweight r{coords};
    for (auto& c : r.coords) c = -c;
    return r;
  }
  friend Coweight operator+(const Coweight& a, const Coweight& b)
  {
    Coweight r{a.coords};
    for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] += b.coords[i];
    return r;
  }
  friend Coweight operator*(int k, const Coweight& a)
  {
    Coweight r{a.coords};
    for (auto& c : r.coords) c *= k;
    return r;
  }
  friend bool operator==(const Coweight&, const Coweight&) = default;
  friend auto operator<=>(const Coweight&, const Coweight&) = default;
};

/// A finite Weyl group element, stored by its action on root coordinates and
/// on coweight coordinates (column j = image of the j-th basis vector).
struct FiniteWeylElement {
  IntMatrix root_action;
  IntMatrix coweight_action;

  friend bool operator==(const FiniteWeylElement&, const FiniteWeylElement&) = default;
  friend auto operator<=>(const FiniteWeylElement&, const FiniteWeylElement&) = default;
};

class CartanError : public std::invalid_argument {
 public:
  enum class Reason { NotCartan, NotFiniteType, Unsupported };
  CartanError(Reason reason, const std::string& what) : std::invalid_argument(what), reason_(reason) {}
  Reason reason() const { return reason_; }

 private:
  Reason reason_;
};

struct CartanDatum {
  int n = 0;
  std::vector<IntVec> a;
  /// "A2", "G2", "A1xA1", ...
  std::string type_label;
  /// Irreducible components: node indices and their type labels.
  std::vector<IntVec> components;
  std::vector<std::string> component_labels;
  /// Symmetrizer with eps_i a_ij = eps_j a_ji, normalized to 1 on the first
  /// node of every component.
  std::vector<Rational> symmetrizer;

  int entry(int i, int j) const { return a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
  bool irreducible() const { return components.size() == 1; }
};

namespace detail {

inline std::vector<IntVec> connected_components(const std::vector<IntVec>& a)
{
  const int n = static_cast<int>(a.size());
  std::vector<int> seen(static_cast<std::size_t>(n), 0);
  std::vector<IntVec> comps;
  for (int s = 0; s < n; ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    IntVec comp;
    std::queue<int> q;
    q.push(s);
    seen[static_cast<std::size_t>(s)] = 1;
    while (!q.empty()) {
      const int i = q.front();
      q.pop();
      comp.push_back(i);
      for (int j = 0; j < n; ++j)
        if (j != i && !seen[static_cast<std::size_t>(j)] && a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] != 0) {
          seen[static_cast<std::size_t>(j)] = 1;
          q.push(j);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(comp);
  }
  return comps;
}

inline bool positive_definite(std::vector<std::vector<Rational>> s)
{
  const std::size_t n = s.size();
  for (std::size_t k = 0; k < n; ++k) {
    if (s[k][k] <= 0) return false;
    for (std::size_t r = k + 1; r < n; ++r) {
      const Rational f = s[r][k] / s[k][k];
      for (std::size_t c = k; c < n; ++c) s[r][c] -= f * s[k][c];
    }
  }
  return true;
}

// Dynkin type of one finite-type component, from its bond structure.
inline std::string classify_component(const CartanDatum& d, const IntVec& comp)
{
  const int k = static_cast<int>(comp.size());
  const std::string rank = std::to_string(k);
  int max_bond = 0;
  std::vector<int> degree(comp.size(), 0);
  for (std::size_t x = 0; x < comp.size(); ++x)
    for (std::size_t y = 0; y < comp.size(); ++y) {
      if (x == y) continue;
      const int prod = d.entry(comp[x], comp[y]) * d.entry(comp[y], comp[x]);
      if (prod) ++degree[x];
      max_bond = std::max(max_bond, prod);
    }
  if (k == 1) return "A1";
  if (max_bond == 3) return "G2";
  if (max_bond == 2) {
    if (k == 2) return "B2";
    // short roots carry the larger symmetrizer entry
    Rational hi = d.symmetrizer[static_cast<std::size_t>(comp[0])];
    for (int i : comp) hi = std::max(hi, d.symmetrizer[static_cast<std::size_t>(i)]);
    int shorts = 0;
    for (int i : comp) shorts += d.symmetrizer[static_cast<std::size_t>(i)] == hi ? 1 : 0;
    if (k == 4 && shorts == 2) return "F4";
    return shorts == 1 ? "B" + rank : "C" + rank;
  }
  // simply laced: a path (A) or a tree with one trivalent node (D, E)
  int branch = -1;
  for (std::size_t x = 0; x < comp.size(); ++x)
    if (degree[x] == 3) branch = static_cast<int>(x);
  if (branch < 0) return "A" + rank;
  std::vector<int> arms;
  for (std::size_t y = 0; y < comp.size(); ++y) {
    if (static_cast<int>(y) == branch || d.entry(comp[static_cast<std::size_t>(branch)], comp[y]) == 0) continue;
    int len = 1;
    int prev = branch, cur = static_cast<int>(y);
    for (bool more = true; more;) {
      more = false;
      for (std::size_t z = 0; z < comp.size(); ++z) {
        const int zi = static_cast<int>(z);
        if (zi == prev || zi == cur || d.entry(comp[static_cast<std::size_t>(cur)], comp[z]) == 0) continue;
        prev = cur;
        cur = zi;
        ++len;
        more = true;
        break;
      }
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1) return "D" + rank;
  return "E" + rank;
}

}  // namespace detail

/// Checks the Cartan axioms and finite type; assigns the classification tag.
inline CartanDatum validate_cartan(const std::vector<IntVec>& m)
{
  using R = CartanError::Reason;
  const std::size_t n = m.size();
  if (n == 0) throw CartanError(R::NotCartan, "empty matrix");
  for (const auto& row : m)
    if (row.size() != n) throw CartanError(R::NotCartan, "matrix is not square");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j && m[i][j] != 2) throw CartanError(R::NotCartan, "diagonal entry is not 2");
      if (i != j && m[i][j] > 0) throw CartanError(R::NotCartan, "positive off-diagonal entry");
      if (i != j && (m[i][j] == 0) != (m[j][i] == 0)) throw CartanError(R::NotCartan, "a_ij = 0 but a_ji != 0");
    }

  CartanDatum d;
  d.n = static_cast<int>(n);
  d.a = m;
  d.components = detail::connected_components(m);

  d.symmetrizer.assign(n, Rational(0));
  for (const auto& comp : d.components) {
    std::queue<int> q;
    d.symmetrizer[static_cast<std::size_t>(comp[0])] = 1;
    q.push(comp[0]);
    while (!q.empty()) {
      const auto i = static_cast<std::size_t>(q.front());
      q.pop();
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i || m[i][j] == 0 || d.symmetrizer[j] != 0) continue;
        d.symmetrizer[j] = d.symmetrizer[i] * m[i][j] / m[j][i];
        q.push(static_cast<int>(j));
      }
    }
  }
  std::vector<std::vector<Rational>> s(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) s[i][j] = d.symmetrizer[i] * m[i][j];
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (s[i][j] != s[j][i]) throw CartanError(R::NotFiniteType, "matrix is not symmetrizable");
  if (!detail::positive_definite(s))
    throw CartanError(R::NotFiniteType, "symmetrized matrix is not positive definite");

  std::string label;
  for (const auto& comp : d.components) {
    d.component_labels.push_back(detail::classify_component(d, comp));
    label += (label.empty() ? "" : "x") + d.component_labels.back();
  }
  d.type_label = label;
  return d;
}

/// Standard (Bourbaki-numbered) Cartan matrix for a label such as "A2", "G2",
/// "B3" or a product "A1xA1".
inline CartanDatum cartan_from_label(const std::string& label)
{
  using R = CartanError::Reason;
  std::vector<std::string> parts;
  {
    std::string cur;
    for (char ch : label) {
      if (ch == 'x' || ch == '*') {
        parts.push_back(cur);
        cur.clear();
      } else if (ch != ' ') {
        cur += ch;
      }
    }
    parts.push_back(cur);
  }
  std::vector<std::vector<IntVec>> blocks;
  for (const auto& part : parts) {
    if (part.size() < 2) throw CartanError(R::Unsupported, "bad type label '" + label + "'");
    const char family = static_cast<char>(std::toupper(static_cast<unsigned char>(part[0])));
    int r = 0;
    try {
      std::size_t pos = 0;
      r = std::stoi(part.substr(1), &pos);
      if (pos != part.size() - 1) throw std::invalid_argument(part);
    } catch (const std::exception&) {
      throw CartanError(R::Unsupported, "bad type label '" + label + "'");
    }
    std::vector<IntVec> a(static_cast<std::size_t>(r), IntVec(static_cast<std::size_t>(r), 0));
    auto set = [&](int i, int j, int v) { a[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = v; };
    auto bond = [&](int i, int j) { set(i, j, -1), set(j, i, -1); };
    for (int i = 1; i <= r; ++i) set(i, i, 2);
    switch (family) {
      case 'A':
        if (r < 1) throw CartanError(R::Unsupported, "A_n needs n >= 1");
        for (int i = 1; i < r; ++i) bond(i, i + 1);
        break;
      case 'B':
      case 'C':
        if (r < 2) throw CartanError(R::Unsupported, "B_n/C_n need n >= 2");
        for (int i = 1; i < r - 1; ++i) bond(i, i + 1);
        // alpha_n short in B, long in C
        set(r - 1, r, family == 'B' ? -2 : -1);
        set(r, r - 1, family == 'B' ? -1 : -2);
        break;
      case 'D':
        if (r < 4) throw CartanError(R::Unsupported, "D_n needs n >= 4");
        for (int i = 1; i < r - 1; ++i) bond(i, i + 1);
        bond(r - 2, r);
        break;
      case 'E':
        if (r < 6 || r > 8) throw CartanError(R::Unsupported, "E_n needs 6 <= n <= 8");
        bond(1, 3), bond(3, 4), bond(2, 4);
        for (int i = 4; i < r; ++i) bond(i, i + 1);
        break;
      case 'F':
        if (r != 4) throw CartanError(R::Unsupported, "F_n needs n = 4");
        bond(1, 2), bond(3, 4);
        set(2, 3, -2), set(3, 2, -1);
        break;
      case 'G':
        if (r != 2) throw CartanError(R::Unsupported, "G_n needs n = 2");
        set(1, 2, -1), set(2, 1, -3);
        break;
      default:
        throw CartanError(R::Unsupported, "unknown family in '" + label + "'");
    }
    blocks.push_back(std::move(a));
  }
  std::size_t total = 0;
  for (const auto& b : blocks) total += b.size();
  std::vector<IntVec> m(total, IntVec(total, 0));
  std::size_t off = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) m[off + i][off + j] = b[i][j];
    off += b.size();
  }
  return validate_cartan(m);
}

/// Roots, coroots and Weyl group operations for a finite-type datum.
/// Simple reflection indices here are 0-based.
class RootSystem {
 public:
  explicit RootSystem(CartanDatum datum) : d_(std::move(datum))
  {
    const int n = d_.n;
    // BFS closure of the simple roots, carrying coroots alongside
    std::queue<FiniteRoot> q;
    for (int i = 0; i < n; ++i) {
      FiniteRoot r{unit(i)};
      coroot_of_.emplace(r, Coweight{unit(i)});
      q.push(r);
    }
    while (!q.empty()) {
      const FiniteRoot r = q.front();
      q.pop();
      const Coweight cr = coroot_of_.at(r);
      for (int i = 0; i < n; ++i) {
        FiniteRoot s = reflect_root(i, r);
        if (coroot_of_.count(s)) continue;
        coroot_of_.emplace(s, reflect_coweight(i, cr));
        q.push(std::move(s));
      }
    }
    for (const auto& [r, _] : coroot_of_) roots_.push_back(r);
    std::stable_sort(roots_.begin(), roots_.end(), [](const FiniteRoot& x, const FiniteRoot& y) {
      const bool px = x.is_positive(), py = y.is_positive();
      if (px != py) return px;
      return px ? x.height() < y.height() : x.height() > y.height();
    });
    for (const auto& r : roots_)
      if (r.is_positive()) positive_.push_back(r);
    for (const auto& comp : d_.components) {
      FiniteRoot best;
      int best_h = -1;
      for (const auto& r : positive_) {
        bool inside = true;
        for (int i = 0; i < n; ++i)
          if (r.coords[static_cast<std::size_t>(i)] != 0 && std::find(comp.begin(), comp.end(), i) == comp.end())
            inside = false;
        if (inside && r.height() > best_h) best = r, best_h = r.height();
      }
      highest_.push_back(best);
    }
  }

  const CartanDatum& datum() const { return d_; }
  int rank() const { return d_.n; }

  /// <lam, mu> = sum_ij lam_j mu_i a_ij.
  int pairing(const Coweight& lam, const FiniteRoot& mu) const
  {
    check_dim(lam.coords), check_dim(mu.coords);
    int s = 0;
    for (int i = 0; i < d_.n; ++i)
      for (int j = 0; j < d_.n; ++j)
        s += lam.coords[static_cast<std::size_t>(j)] * mu.coords[static_cast<std::size_t>(i)] * d_.entry(i, j);
    return s;
  }

  FiniteRoot reflect_root(int i, const FiniteRoot& mu) const
  {
    check_index(i);
    FiniteRoot r{mu.coords};
    r.coords[static_cast<std::size_t>(i)] -= pairing(Coweight{unit(i)}, mu);
    return r;
  }
  Coweight reflect_coweight(int i, const Coweight& lam) const
  {
    check_index(i);
    Coweight r{lam.coords};
    r.coords[static_cast<std::size_t>(i)] -= pairing(lam, FiniteRoot{unit(i)});
    return r;
  }

  /// All roots: positive ones by increasing height, then negative ones.
  const std::vector<FiniteRoot>& roots() const { return roots_; }
  const std::vector<FiniteRoot>& positive_roots() const { return positive_; }
  bool is_root(const FiniteRoot& r) const { return coroot_of_.count(r) != 0; }
  const Coweight& coroot(const FiniteRoot& r) const
  {
    auto it = coroot_of_.find(r);
    if (it == coroot_of_.end()) throw std::invalid_argument("not a root");
    return it->second;
  }

  /// Highest root; requires an irreducible datum.
  const FiniteRoot& highest_root() const
  {
    if (!d_.irreducible())
      throw CartanError(CartanError::Reason::Unsupported, "highest root of reducible datum " + d_.type_label +
                                                              " is per component; use highest_roots()");
    return highest_.front();
  }
  const std::vector<FiniteRoot>& highest_roots() const { return highest_; }

  // Weyl group

  FiniteWeylElement identity() const { return {IntMatrix::identity(d_.n), IntMatrix::identity(d_.n)}; }

  FiniteWeylElement simple_reflection(int i) const
  {
    check_index(i);
    auto e = identity();
    for (int k = 0; k < d_.n; ++k) {
      e.root_action(i, k) -= d_.entry(k, i);
      e.coweight_action(i, k) -= d_.entry(i, k);
    }
    return e;
  }

  /// s_beta: mu -> mu - <beta^vee, mu> beta, lam -> lam - <lam, beta> beta^vee.
  FiniteWeylElement reflection(const FiniteRoot& beta) const
  {
    const Coweight& bv = coroot(beta);
    FiniteWeylElement e = identity();
    for (int j = 0; j < d_.n; ++j) {
      const int pr = pairing(bv, FiniteRoot{unit(j)});
      const int pc = pairing(Coweight{unit(j)}, beta);
      for (int r = 0; r < d_.n; ++r) {
        e.root_action(r, j) -= pr * beta.coords[static_cast<std::size_t>(r)];
        e.coweight_action(r, j) -= pc * bv.coords[static_cast<std::size_t>(r)];
      }
    }
    return e;
  }

  FiniteWeylElement mul(const FiniteWeylElement& x, const FiniteWeylElement& y) const
  {
    return {x.root_action * y.root_action, x.coweight_action * y.coweight_action};
  }

  FiniteRoot act(const FiniteWeylElement& w, const FiniteRoot& mu) const { return {w.root_action.apply(mu.coords)}; }
  Coweight act(const FiniteWeylElement& w, const Coweight& lam) const { return {w.coweight_action.apply(lam.coords)}; }

  bool has_right_descent(const FiniteWeylElement& w, int i) const
  {
    return act(w, FiniteRoot{unit(i)}).is_negative();
  }

  /// Some reduced word (0-based letters), found by peeling right descents.
  IntVec reduced_word(const FiniteWeylElement& w) const
  {
    IntVec word;
    FiniteWeylElement x = w;
    for (bool found = true; found;) {
      found = false;
      for (int i = 0; i < d_.n; ++i)
        if (has_right_descent(x, i)) {
          word.push_back(i);
          x = mul(x, simple_reflection(i));
          found = true;
          break;
        }
    }
    std::reverse(word.begin(), word.end());
    return word;
  }

  FiniteWeylElement from_word(const IntVec& word) const
  {
    FiniteWeylElement e = identity();
    for (int i : word) e = mul(e, simple_reflection(i));
    return e;
  }

  FiniteWeylElement inverse(const FiniteWeylElement& w) const
  {
    auto word = reduced_word(w);
    std::reverse(word.begin(), word.end());
    return from_word(word);
  }

  int length(const FiniteWeylElement& w) const { return static_cast<int>(reduced_word(w).size()); }

  /// Lexicographically smallest reduced word (0-based letters): greedy on the
  /// smallest left descent.
  IntVec canonical_word(const FiniteWeylElement& w) const
  {
    IntVec word;
    FiniteWeylElement x = inverse(w);
    for (bool found = true; found;) {
      found = false;
      for (int i = 0; i < d_.n; ++i)
        if (has_right_descent(x, i)) {
          word.push_back(i);
          x = mul(x, simple_reflection(i));
          found = true;
          break;
        }
    }
    return word;
  }

  /// All elements of W_0 by breadth-first search; finite type guarantees termination.
  std::vector<FiniteWeylElement> weyl_group_elements() const
  {
    std::set<FiniteWeylElement> seen{identity()};
    std::vector<FiniteWeylElement> out{identity()};
    for (std::size_t k = 0; k < out.size(); ++k)
      for (int i = 0; i < d_.n; ++i) {
        auto y = mul(out[k], simple_reflection(i));
        if (seen.insert(y).second) out.push_back(std::move(y));
      }
    return out;
  }

  IntVec unit(int i) const
  {
    IntVec v(static_cast<std::size_t>(d_.n), 0);
    v[static_cast<std::size_t>(i)] = 1;
    return v;
  }

 private:
  void check_index(int i) const
  {
    if (i < 0 || i >= d_.n) throw std::out_of_range("simple index out of range");
  }
  void check_dim(const IntVec& v) const
  {
    if (static_cast<int>(v.size()) != d_.n) throw std::invalid_argument("dimension mismatch");
  }

  CartanDatum d_;
  std::map<FiniteRoot, Coweight> coroot_of_;
  std::vector<FiniteRoot> roots_;
  std::vector<FiniteRoot> positive_;
  std::vector<FiniteRoot> highest_;
};

inline std::string to_string(const IntVec& v)
{
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  out << ")";
  return out.str();
}

}  // namespace affold
