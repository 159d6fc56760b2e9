#pragma once

// Affine roots alpha + k delta, the affine Weyl group W = Q^vee x| W_0 acting on
// them, lengths and reduced words, and alcove geometry in rank <= 2.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <memory>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "affold/rootdata.hpp"
#include "affold/scalar.hpp"

namespace affold {

/// Real affine root alpha + k delta.
struct AffineRoot {
  FiniteRoot finite;
  int delta = 0;

  AffineRoot operator-() const { return {-finite, -delta}; }
  friend bool operator==(const AffineRoot&, const AffineRoot&) = default;
  friend auto operator<=>(const AffineRoot&, const AffineRoot&) = default;
};

/// (R^+ + Z_{>=0} delta) u (-R^+ + Z_{>0} delta): root subgroups inside I.
inline bool in_RI(const AffineRoot& b)
{
  return b.finite.is_positive() ? b.delta >= 0 : b.delta > 0;
}

/// -R^+ + Z delta: root subgroups inside U^-.
inline bool in_RU(const AffineRoot& b) { return b.finite.is_negative(); }

/// t_{translation} * finite.
struct AffineWeylElement {
  Coweight translation;
  FiniteWeylElement finite;

  friend bool operator==(const AffineWeylElement&, const AffineWeylElement&) = default;
  friend auto operator<=>(const AffineWeylElement&, const AffineWeylElement&) = default;
};

/// Letters 0..n; 0 is the affine node with alpha_0 = -phi + delta.
using Word = std::vector<int>;

inline std::string word_to_string(const Word& w)
{
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
  return s;
}

inline Word parse_word(const std::string& text)
{
  Word w;
  if (text.find_first_not_of(' ') == std::string::npos) return w;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    const auto b = item.find_first_not_of(' '), e = item.find_last_not_of(' ');
    if (b == std::string::npos) throw std::invalid_argument("empty letter in word '" + text + "'");
    item = item.substr(b, e - b + 1);
    std::size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(item, &pos);
    } catch (const std::logic_error&) {
      pos = 0;
    }
    if (pos == 0 || pos != item.size()) throw std::invalid_argument("bad word letter '" + item + "'");
    w.push_back(v);
  }
  if (text.back() == ',') throw std::invalid_argument("empty letter in word '" + text + "'");
  return w;
}

class LengthCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Point of h_R with rational coordinates on h_1..h_n.
using RationalPoint = std::vector<Rational>;

struct Alcove {
  std::vector<RationalPoint> vertices;
  RationalPoint barycenter;
};

class AffineWeylGroup {
 public:
  explicit AffineWeylGroup(std::shared_ptr<const RootSystem> rs) : rs_(std::move(rs))
  {
    phi_ = rs_->highest_root();  // throws for reducible data
    phi_coroot_ = rs_->coroot(phi_);
    s_phi_ = rs_->reflection(phi_);
  }
  explicit AffineWeylGroup(CartanDatum d) : AffineWeylGroup(std::make_shared<const RootSystem>(std::move(d))) {}

  const RootSystem& root_system() const { return *rs_; }
  std::shared_ptr<const RootSystem> root_system_ptr() const { return rs_; }
  int rank() const { return rs_->rank(); }
  const FiniteRoot& highest_root() const { return phi_; }

  AffineWeylElement identity() const { return {Coweight{IntVec(static_cast<std::size_t>(rank()), 0)}, rs_->identity()}; }

  AffineWeylElement translation(const Coweight& lam) const { return {lam, rs_->identity()}; }
  AffineWeylElement finite(const FiniteWeylElement& w) const
  {
    return {Coweight{IntVec(static_cast<std::size_t>(rank()), 0)}, w};
  }

  /// s_i for i >= 1 is (0, s_i); s_0 = t_{phi^vee} s_phi.
  AffineWeylElement simple_reflection(int i) const
  {
    check_letter(i);
    if (i == 0) return {phi_coroot_, s_phi_};
    return finite(rs_->simple_reflection(i - 1));
  }

  AffineRoot simple_root(int i) const
  {
    check_letter(i);
    if (i == 0) return {-phi_, 1};
    return {FiniteRoot{rs_->unit(i - 1)}, 0};
  }

  /// (t_lam u)(t_mu v) = t_{lam + u mu} uv.
  AffineWeylElement mul(const AffineWeylElement& x, const AffineWeylElement& y) const
  {
    return {x.translation + rs_->act(x.finite, y.translation), rs_->mul(x.finite, y.finite)};
  }

  AffineWeylElement inverse(const AffineWeylElement& g) const
  {
    const auto winv = rs_->inverse(g.finite);
    return {-rs_->act(winv, g.translation), winv};
  }

  /// t_lam w (mu + k delta) = w mu + (k - <lam, w mu>) delta.
  AffineRoot act(const AffineWeylElement& g, const AffineRoot& b) const
  {
    FiniteRoot wmu = rs_->act(g.finite, b.finite);
    const int k = b.delta - rs_->pairing(g.translation, wmu);
    return {std::move(wmu), k};
  }

  AffineWeylElement from_word(const Word& w) const
  {
    AffineWeylElement g = identity();
    for (int i : w) g = mul(g, simple_reflection(i));
    return g;
  }

  /// l(g s_i) < l(g)  iff  g alpha_i is not in R^I.
  bool has_right_descent(const AffineWeylElement& g, int i) const { return !in_RI(act(g, simple_root(i))); }

  /// Reduced word by repeatedly peeling the smallest right descent.
  Word reduced_word(const AffineWeylElement& g) const
  {
    Word word;
    AffineWeylElement x = g;
    for (bool found = true; found;) {
      found = false;
      for (int i = 0; i <= rank(); ++i)
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

  int length(const AffineWeylElement& g) const { return static_cast<int>(reduced_word(g).size()); }

  bool is_reduced(const Word& w) const
  {
    // every inversion root along a reduced word lies in R^I
    AffineWeylElement g = identity();
    for (int i : w) {
      if (!in_RI(act(g, simple_root(i)))) return false;
      g = mul(g, simple_reflection(i));
    }
    return true;
  }

  /// All reduced words for g, in lexicographic order.
  std::vector<Word> all_reduced_words(const AffineWeylElement& g, int cap) const
  {
    const int len = length(g);
    if (len > cap) throw LengthCapExceeded("length " + std::to_string(len) + " exceeds cap " + std::to_string(cap));
    std::vector<Word> out;
    Word suffix;
    collect_words(g, suffix, out);
    for (auto& w : out) std::reverse(w.begin(), w.end());
    std::sort(out.begin(), out.end());
    return out;
  }

  /// beta_k = s_{i_1} ... s_{i_{k-1}} alpha_{i_k}.
  std::vector<AffineRoot> inversion_sequence(const Word& w) const
  {
    std::vector<AffineRoot> out;
    AffineWeylElement g = identity();
    for (int i : w) {
      out.push_back(act(g, simple_root(i)));
      g = mul(g, simple_reflection(i));
    }
    return out;
  }

  /// Lexicographically smallest reduced expression of the finite part, as
  /// letters 1..n.
  Word finite_word(const FiniteWeylElement& w) const
  {
    Word word = rs_->canonical_word(w);
    for (auto& i : word) ++i;
    return word;
  }

  FiniteWeylElement finite_from_word(const Word& w) const
  {
    IntVec zero_based;
    for (int i : w) {
      if (i < 1 || i > rank()) throw std::out_of_range("finite word letter out of range");
      zero_based.push_back(i - 1);
    }
    return rs_->from_word(zero_based);
  }

  // Alcove geometry. Points are written on the basis h_1..h_n; the affine root
  // alpha + k delta is the affine function x -> <x, alpha> + k, and g acts by
  // x -> w x + lam.

  RationalPoint act_point(const AffineWeylElement& g, const RationalPoint& x) const
  {
    const int n = rank();
    RationalPoint y(static_cast<std::size_t>(n), Rational(0));
    for (int r = 0; r < n; ++r) {
      for (int c = 0; c < n; ++c) y[static_cast<std::size_t>(r)] += g.finite.coweight_action(r, c) * x[static_cast<std::size_t>(c)];
      y[static_cast<std::size_t>(r)] += g.translation.coords[static_cast<std::size_t>(r)];
    }
    return y;
  }

  Rational evaluate(const AffineRoot& b, const RationalPoint& x) const
  {
    Rational s = b.delta;
    for (int j = 0; j < rank(); ++j)
      s += x[static_cast<std::size_t>(j)] * rs_->pairing(Coweight{rs_->unit(j)}, b.finite);
    return s;
  }

  /// Vertices and barycenter of g A_0; rank <= 2 only.
  Alcove alcove_position(const AffineWeylElement& g) const
  {
    const int n = rank();
    if (n > 2) throw std::invalid_argument("alcove geometry supports rank <= 2 only");
    std::vector<RationalPoint> base{RationalPoint(static_cast<std::size_t>(n), Rational(0))};
    for (int i = 0; i < n; ++i) {
      // fundamental coweight omega_i / m_i, where phi = sum m_i alpha_i
      RationalPoint w = fundamental_coweight(i);
      for (auto& c : w) c /= phi_.coords[static_cast<std::size_t>(i)];
      base.push_back(std::move(w));
    }
    Alcove a;
    RationalPoint bary(static_cast<std::size_t>(n), Rational(0));
    for (const auto& v : base) {
      a.vertices.push_back(act_point(g, v));
      for (int k = 0; k < n; ++k) bary[static_cast<std::size_t>(k)] += a.vertices.back()[static_cast<std::size_t>(k)];
    }
    for (auto& c : bary) c /= static_cast<int>(base.size());
    a.barycenter = std::move(bary);
    return a;
  }

  /// x with <x, alpha_j> = delta_ij.
  RationalPoint fundamental_coweight(int i) const
  {
    const int n = rank();
    // solve sum_k a_jk x_k = delta_ij by Gauss-Jordan over Q
    std::vector<std::vector<Rational>> m(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n + 1)));
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) m[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] = rs_->datum().entry(j, k);
      m[static_cast<std::size_t>(j)][static_cast<std::size_t>(n)] = (j == i) ? 1 : 0;
    }
    for (int c = 0; c < n; ++c) {
      int piv = c;
      while (m[static_cast<std::size_t>(piv)][static_cast<std::size_t>(c)] == 0) ++piv;
      std::swap(m[static_cast<std::size_t>(piv)], m[static_cast<std::size_t>(c)]);
      const Rational inv = 1 / m[static_cast<std::size_t>(c)][static_cast<std::size_t>(c)];
      for (auto& v : m[static_cast<std::size_t>(c)]) v *= inv;
      for (int r = 0; r < n; ++r) {
        if (r == c) continue;
        const Rational f = m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
        if (f == 0) continue;
        for (int k = 0; k <= n; ++k)
          m[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)] -= f * m[static_cast<std::size_t>(c)][static_cast<std::size_t>(k)];
      }
    }
    RationalPoint x(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) x[static_cast<std::size_t>(k)] = m[static_cast<std::size_t>(k)][static_cast<std::size_t>(n)];
    return x;
  }

  std::string to_string(const AffineRoot& b) const;

 private:
  void check_letter(int i) const
  {
    if (i < 0 || i > rank()) throw std::out_of_range("word letter " + std::to_string(i) + " out of range 0.." + std::to_string(rank()));
  }

  void collect_words(const AffineWeylElement& g, Word& suffix, std::vector<Word>& out) const
  {
    bool any = false;
    for (int i = 0; i <= rank(); ++i) {
      if (!has_right_descent(g, i)) continue;
      any = true;
      suffix.push_back(i);
      collect_words(mul(g, simple_reflection(i)), suffix, out);
      suffix.pop_back();
    }
    if (!any) out.push_back(suffix);
  }

  std::shared_ptr<const RootSystem> rs_;
  FiniteRoot phi_;
  Coweight phi_coroot_;
  FiniteWeylElement s_phi_;
};

/// "-a1-a2+2d" style rendering of an affine root.
inline std::string AffineWeylGroup::to_string(const AffineRoot& b) const
{
  std::ostringstream out;
  bool first = true;
  for (int i = 0; i < rank(); ++i) {
    const int c = b.finite.coords[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    if (c < 0)
      out << "-";
    else if (!first)
      out << "+";
    if (c != 1 && c != -1) out << (c < 0 ? -c : c);
    out << "a" << (i + 1);
    first = false;
  }
  if (b.delta != 0) {
    if (b.delta < 0)
      out << "-";
    else if (!first)
      out << "+";
    const int k = b.delta < 0 ? -b.delta : b.delta;
    if (k != 1) out << k;
    out << "d";
  }
  if (first && b.delta == 0) out << "0";
  return out.str();
}

}  // namespace affold
