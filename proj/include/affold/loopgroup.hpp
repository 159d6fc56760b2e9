#pragma once

// SL_n over F(t): root subgroup generators, Iwahori / U^- / monomial tests,
// the per-step Iwahori normalization, the matrix folding executor, finite
// Bruhat labels and finite-field brute-force cell counts.
//
// Affine root alpha + k delta with alpha = e_a - e_b acts through
// x_{alpha + k delta}(c) = 1 + c t^k E_ab.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <future>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "affold/affine.hpp"
#include "affold/folding.hpp"
#include "affold/rational_function.hpp"
#include "affold/scalar.hpp"

#ifndef AFFOLD_CHECK_INVARIANTS
#ifdef NDEBUG
#define AFFOLD_CHECK_INVARIANTS 0
#else
#define AFFOLD_CHECK_INVARIANTS 1
#endif
#endif

namespace affold {

/// n x n matrix over F(t).
template <class F>
class GroupMatrix {
 public:
  using RF = RationalFunction<F>;

  GroupMatrix() = default;
  explicit GroupMatrix(int n) : n_(n), e_(static_cast<std::size_t>(n * n)) {}
  GroupMatrix(int n, std::vector<RF> entries) : n_(n), e_(std::move(entries))
  {
    if (e_.size() != static_cast<std::size_t>(n * n)) throw std::invalid_argument("GroupMatrix: wrong entry count");
  }
  static GroupMatrix identity(int n)
  {
    GroupMatrix m(n);
    for (int i = 0; i < n; ++i) m(i, i) = RF(1);
    return m;
  }

  int size() const { return n_; }
  RF& operator()(int r, int c) { return e_[static_cast<std::size_t>(r * n_ + c)]; }
  const RF& operator()(int r, int c) const { return e_[static_cast<std::size_t>(r * n_ + c)]; }

  friend GroupMatrix operator*(const GroupMatrix& x, const GroupMatrix& y)
  {
    if (x.n_ != y.n_) throw std::invalid_argument("GroupMatrix: size mismatch");
    GroupMatrix m(x.n_);
    for (int r = 0; r < x.n_; ++r)
      for (int k = 0; k < x.n_; ++k) {
        const RF& v = x(r, k);
        if (v.is_zero()) continue;
        for (int c = 0; c < x.n_; ++c)
          if (!y(k, c).is_zero()) m(r, c) += v * y(k, c);
      }
#if AFFOLD_CHECK_INVARIANTS
    if (m.determinant() != RF(1)) throw std::logic_error("GroupMatrix: product left SL_n");
#endif
    return m;
  }
  friend GroupMatrix operator+(const GroupMatrix& x, const GroupMatrix& y)
  {
    GroupMatrix m(x.n_);
    for (std::size_t i = 0; i < m.e_.size(); ++i) m.e_[i] = x.e_[i] + y.e_[i];
    return m;
  }
  GroupMatrix scaled(const RF& f) const
  {
    GroupMatrix m(*this);
    for (auto& v : m.e_) v = v * f;
    return m;
  }
  /// Product without the SL_n check, for intermediate non-group matrices.
  static GroupMatrix raw_product(const GroupMatrix& x, const GroupMatrix& y)
  {
    GroupMatrix m(x.n_);
    for (int r = 0; r < x.n_; ++r)
      for (int k = 0; k < x.n_; ++k)
        for (int c = 0; c < x.n_; ++c) m(r, c) += x(r, k) * y(k, c);
    return m;
  }

  RF determinant() const
  {
    std::vector<RF> a(e_);
    RF det(1);
    for (int c = 0; c < n_; ++c) {
      int piv = c;
      while (piv < n_ && a[static_cast<std::size_t>(piv * n_ + c)].is_zero()) ++piv;
      if (piv == n_) return RF();
      if (piv != c) {
        for (int k = 0; k < n_; ++k) std::swap(a[static_cast<std::size_t>(piv * n_ + k)], a[static_cast<std::size_t>(c * n_ + k)]);
        det = -det;
      }
      const RF p = a[static_cast<std::size_t>(c * n_ + c)];
      det = det * p;
      for (int r = c + 1; r < n_; ++r) {
        const RF f = a[static_cast<std::size_t>(r * n_ + c)] / p;
        if (f.is_zero()) continue;
        for (int k = c; k < n_; ++k) a[static_cast<std::size_t>(r * n_ + k)] -= f * a[static_cast<std::size_t>(c * n_ + k)];
      }
    }
    return det;
  }

  GroupMatrix inverse() const
  {
    std::vector<RF> a(e_);
    GroupMatrix inv = identity(n_);
    auto at = [&](int r, int c) -> RF& { return a[static_cast<std::size_t>(r * n_ + c)]; };
    for (int c = 0; c < n_; ++c) {
      int piv = c;
      while (piv < n_ && at(piv, c).is_zero()) ++piv;
      if (piv == n_) throw std::domain_error("GroupMatrix: singular");
      for (int k = 0; k < n_; ++k) std::swap(at(piv, k), at(c, k)), std::swap(inv(piv, k), inv(c, k));
      const RF p = at(c, c).inverse();
      for (int k = 0; k < n_; ++k) at(c, k) = at(c, k) * p, inv(c, k) = inv(c, k) * p;
      for (int r = 0; r < n_; ++r) {
        if (r == c || at(r, c).is_zero()) continue;
        const RF f = at(r, c);
        for (int k = 0; k < n_; ++k) {
          at(r, k) -= f * at(c, k);
          inv(r, k) -= f * inv(c, k);
        }
      }
    }
    return inv;
  }

  friend bool operator==(const GroupMatrix&, const GroupMatrix&) = default;

  std::string to_string() const
  {
    std::ostringstream out;
    for (int r = 0; r < n_; ++r) {
      out << "[";
      for (int c = 0; c < n_; ++c) out << (c ? ", " : "") << (*this)(r, c).to_string();
      out << "]" << (r + 1 < n_ ? "\n" : "");
    }
    return out.str();
  }

 private:
  int n_ = 0;
  std::vector<RF> e_;
};

/// All entries integral and ev_{t=0} upper triangular with nonzero diagonal.
template <class F>
bool in_iwahori(const GroupMatrix<F>& m)
{
  for (int r = 0; r < m.size(); ++r)
    for (int c = 0; c < m.size(); ++c) {
      const auto& e = m(r, c);
      if (!e.is_integral()) return false;
      const F v = e.eval_at_zero();
      if (r > c && !is_zero(v)) return false;
      if (r == c && is_zero(v)) return false;
    }
  return true;
}

/// Lower triangular with unit diagonal.
template <class F>
bool in_uminus(const GroupMatrix<F>& m)
{
  for (int r = 0; r < m.size(); ++r)
    for (int c = r; c < m.size(); ++c) {
      if (r == c && m(r, c) != RationalFunction<F>(1)) return false;
      if (r != c && !m(r, c).is_zero()) return false;
    }
  return true;
}

/// One nonzero entry per row and column, each a nonzero constant times t^k.
template <class F>
bool is_monomial(const GroupMatrix<F>& m)
{
  const int n = m.size();
  std::vector<int> col_hits(static_cast<std::size_t>(n), 0);
  for (int r = 0; r < n; ++r) {
    int hits = 0;
    for (int c = 0; c < n; ++c) {
      const auto& e = m(r, c);
      if (e.is_zero()) continue;
      if (!e.num().is_monomial() || !e.den().is_monomial()) return false;
      ++hits;
      ++col_hits[static_cast<std::size_t>(c)];
    }
    if (hits != 1) return false;
  }
  for (int h : col_hits)
    if (h != 1) return false;
  return true;
}

/// One factor x_wall(coeff) of u.
template <class F>
struct UFactor {
  AffineRoot wall;
  F coeff;
};

template <class F>
struct Normalized {
  F c_tilde;
  GroupMatrix<F> b_prime;
};

/// Matrix realization of the affine Weyl group of type A_{n-1} inside SL_n(F(t)).
template <class F>
class LoopGroup {
 public:
  using RF = RationalFunction<F>;
  using Matrix = GroupMatrix<F>;

  explicit LoopGroup(AffineWeylGroup W) : W_(std::move(W)), n_(W_.rank() + 1)
  {
    const auto& d = W_.root_system().datum();
    const auto standard = cartan_from_label("A" + std::to_string(d.n));
    if (d.a != standard.a)
      throw CartanError(CartanError::Reason::Unsupported,
                        "matrix realization needs type A with standard numbering, got " + d.type_label);
  }

  const AffineWeylGroup& weyl_group() const { return W_; }
  int size() const { return n_; }

  /// Matrix position (a, b) of the finite root e_a - e_b.
  std::pair<int, int> position(const FiniteRoot& r) const
  {
    const bool pos = r.is_positive();
    int first = -1, last = -1;
    for (int i = 0; i < W_.rank(); ++i) {
      const int c = r.coords[static_cast<std::size_t>(i)];
      if (c == 0) continue;
      if (c != (pos ? 1 : -1) || (last >= 0 && last != i - 1)) throw std::invalid_argument("not a type A root");
      if (first < 0) first = i;
      last = i;
    }
    if (first < 0) throw std::invalid_argument("zero is not a root");
    return pos ? std::pair{first, last + 1} : std::pair{last + 1, first};
  }

  Matrix x_root(const AffineRoot& beta, const RF& f) const
  {
    auto [a, b] = position(beta.finite);
    Matrix m = Matrix::identity(n_);
    m(a, b) = f * RF::t(beta.delta);
    return m;
  }
  Matrix x_simple(int j, const F& c) const { return x_root(W_.simple_root(j), RF(c)); }

  /// n_beta(g) = x_beta(g) x_{-beta}(-g^{-1}) x_beta(g).
  Matrix n_root(const AffineRoot& beta, const RF& g) const
  {
    if (g.is_zero()) throw std::domain_error("n_root: g must be invertible");
    return x_root(beta, g) * x_root(-beta, -g.inverse()) * x_root(beta, g);
  }
  Matrix n_simple(int j) const { return n_root(W_.simple_root(j), RF(1)); }
  /// n_j^{-1} = n_j(-1).
  Matrix n_simple_inv(int j) const { return n_root(W_.simple_root(j), RF(-1)); }

  /// diag(g^{<lam, e_a>}).
  Matrix h_cochar(const Coweight& lam, const RF& g) const
  {
    if (g.is_zero()) throw std::domain_error("h_cochar: g must be invertible");
    Matrix m = Matrix::identity(n_);
    for (int a = 0; a < n_; ++a) {
      const int e = exponent(lam, a);
      RF v(1);
      const RF base = e >= 0 ? g : g.inverse();
      for (int k = 0; k < (e >= 0 ? e : -e); ++k) v = v * base;
      m(a, a) = v;
    }
    return m;
  }
  /// h_{alpha_j^vee}(g) = n_j(g) n_j^{-1}.
  Matrix h_coroot(int j, const RF& g) const { return n_root(W_.simple_root(j), g) * n_simple_inv(j); }
  /// t_lam = h_lam(t^{-1}).
  Matrix t_translation(const Coweight& lam) const { return h_cochar(lam, RF::t(-1)); }

  /// Image in the affine Weyl group of a monomial matrix (kernel H).
  AffineWeylElement monomial_to_weyl(const Matrix& m) const
  {
    if (m.size() != n_ || !is_monomial(m)) throw std::invalid_argument("monomial_to_weyl: matrix is not monomial");
    std::vector<int> image(static_cast<std::size_t>(n_)), row_val(static_cast<std::size_t>(n_));
    for (int r = 0; r < n_; ++r)
      for (int c = 0; c < n_; ++c)
        if (!m(r, c).is_zero()) {
          image[static_cast<std::size_t>(c)] = r;
          row_val[static_cast<std::size_t>(r)] = m(r, c).valuation();
        }
    // reduced word of the permutation via right descents w(i) > w(i+1)
    IntVec word;
    for (bool found = true; found;) {
      found = false;
      for (int i = 0; i + 1 < n_; ++i)
        if (image[static_cast<std::size_t>(i)] > image[static_cast<std::size_t>(i + 1)]) {
          std::swap(image[static_cast<std::size_t>(i)], image[static_cast<std::size_t>(i + 1)]);
          word.push_back(i);
          found = true;
          break;
        }
    }
    std::reverse(word.begin(), word.end());
    // row a of t_lam n_w h has valuation -<lam, e_a>
    Coweight lam{IntVec(static_cast<std::size_t>(n_ - 1), 0)};
    int running = 0;
    for (int a = 0; a + 1 < n_; ++a) {
      running -= row_val[static_cast<std::size_t>(a)];
      lam.coords[static_cast<std::size_t>(a)] = running;
    }
    if (running - row_val[static_cast<std::size_t>(n_ - 1)] != 0)
      throw std::invalid_argument("monomial_to_weyl: translation not in the coroot lattice");
    return {lam, W_.root_system().from_word(word)};
  }

  /// Reads c from m = x_gamma(c); c must be a constant.
  F root_coefficient(const Matrix& m, const AffineRoot& gamma) const
  {
    auto [a, b] = position(gamma.finite);
    const RF c = m(a, b) * RF::t(-gamma.delta);
    const F value = c.is_zero() ? F(0) : c.constant_value();
    if (m != x_root(gamma, RF(value))) throw std::logic_error("matrix is not in the root subgroup of " + W_.to_string(gamma));
    return value;
  }

  /// The unique c~ and b' in I with b x_j(c) n_j^{-1} = x_j(c~) n_j^{-1} b'.
  ///
  /// N(u) = n_j x_j(-u) b x_j(c) n_j^{-1} is affine-linear in u; every Laurent
  /// coefficient that must vanish for N(u) to lie in I gives one linear
  /// equation in u.
  Normalized<F> iwahori_normalize(const Matrix& b, int j, const F& c) const
  {
    const Matrix m = b * x_simple(j, c) * n_simple_inv(j);
    const Matrix nj = n_simple(j);
    const Matrix A = Matrix::raw_product(nj, m);
    Matrix E = x_root(W_.simple_root(j), RF(1));
    for (int i = 0; i < n_; ++i) E(i, i) = RF();
    const Matrix B = Matrix::raw_product(Matrix::raw_product(nj, E), m).scaled(RF(-1));

    bool solved = false;
    F u(0);
    std::vector<std::pair<F, F>> equations;
    for (int r = 0; r < n_; ++r)
      for (int col = 0; col < n_; ++col) {
        const RF& ea = A(r, col);
        const RF& eb = B(r, col);
        const int bound = r > col ? 1 : 0;
        int lo = bound;
        if (!ea.is_zero()) lo = std::min(lo, ea.valuation());
        if (!eb.is_zero()) lo = std::min(lo, eb.valuation());
        for (int k = lo; k < bound; ++k) {
          const F ca = ea.laurent_coeff(k), cb = eb.laurent_coeff(k);
          if (is_zero(ca) && is_zero(cb)) continue;
          equations.emplace_back(ca, cb);
          if (!solved && !is_zero(cb)) {
            u = -ca / cb;
            solved = true;
          }
        }
      }
    if (!solved) throw std::logic_error("iwahori_normalize: no constraint determines c~ (is b in I?)");
    for (const auto& [ca, cb] : equations)
      if (!is_zero(ca + u * cb)) throw std::logic_error("iwahori_normalize: inconsistent constraints (is b in I?)");
    Matrix bp = A + B.scaled(RF(u));
    if (!in_iwahori(bp)) throw std::logic_error("iwahori_normalize: b' is not in I (is b in I?)");
    return {u, std::move(bp)};
  }

 private:
  // <lam, e_a> for lam = sum m_i (e_i - e_{i+1})
  int exponent(const Coweight& lam, int a) const
  {
    const int r = W_.rank();
    const int cur = a < r ? lam.coords[static_cast<std::size_t>(a)] : 0;
    const int prev = a > 0 ? lam.coords[static_cast<std::size_t>(a - 1)] : 0;
    return cur - prev;
  }

  AffineWeylGroup W_;
  int n_;
};

template <class F>
struct ExecutorState {
  GroupMatrix<F> u;
  std::vector<UFactor<F>> u_factors;
  AffineWeylElement v;
  GroupMatrix<F> v_rep;
  GroupMatrix<F> b;
  std::vector<StepKind> kinds;
  /// c~ of every step.
  std::vector<F> normalized_labels;
};

/// Consumes x_{i_1}(c_1) n_{i_1}^{-1} x_{i_2}(c_2) n_{i_2}^{-1} ... one step at a
/// time, keeping the product in the form u * v_rep * b.
template <class F>
class FoldingExecutor {
 public:
  explicit FoldingExecutor(const LoopGroup<F>& G) : G_(G)
  {
    const int n = G.size();
    s_ = {GroupMatrix<F>::identity(n), {}, G.weyl_group().identity(), GroupMatrix<F>::identity(n),
          GroupMatrix<F>::identity(n), {}, {}};
  }

  const ExecutorState<F>& state() const { return s_; }

  void step(int j, const F& c)
  {
    using RF = RationalFunction<F>;
    const auto& W = G_.weyl_group();
    auto [ct, bprime] = G_.iwahori_normalize(s_.b, j, c);
    const AffineRoot root = W.act(s_.v, W.simple_root(j));
    const auto v_rep_inv = s_.v_rep.inverse();
    if (in_RU(root)) {
      const F coeff = G_.root_coefficient(s_.v_rep * G_.x_simple(j, ct) * v_rep_inv, root);
      absorb(root, coeff);
      cross(j);
      s_.b = std::move(bprime);
      s_.kinds.push_back(StepKind::PositiveCrossing);
    } else if (!is_zero(ct)) {
      // x_j(c~) n_j^{-1} = x_{-alpha_j}(c~^{-1}) x_j(-c~) h_{alpha_j^vee}(c~)
      const F inv = F(1) / ct;
      const auto neg = -W.simple_root(j);
      const F coeff = G_.root_coefficient(s_.v_rep * G_.x_root(neg, RF(inv)) * v_rep_inv, -root);
      absorb(-root, coeff);
      s_.b = G_.x_simple(j, -ct) * G_.h_coroot(j, RF(ct)) * bprime;
      s_.kinds.push_back(StepKind::Fold);
    } else {
      absorb(-root, F(0));
      cross(j);
      s_.b = std::move(bprime);
      s_.kinds.push_back(StepKind::ZeroCrossing);
    }
    s_.normalized_labels.push_back(ct);
  }

 private:
  void absorb(const AffineRoot& gamma, const F& coeff)
  {
    s_.u = s_.u * G_.x_root(gamma, RationalFunction<F>(coeff));
    s_.u_factors.push_back({gamma, coeff});
  }
  void cross(int j)
  {
    const auto& W = G_.weyl_group();
    s_.v = W.mul(s_.v, W.simple_reflection(j));
    s_.v_rep = s_.v_rep * G_.n_simple_inv(j);
  }

  const LoopGroup<F>& G_;
  ExecutorState<F> s_;
};

template <class F>
ExecutorState<F> execute_folding(const LoopGroup<F>& G, const Word& w, const std::vector<F>& labels)
{
  if (w.size() != labels.size())
    throw std::invalid_argument("execute_folding: " + std::to_string(labels.size()) + " labels for a word of length " +
                                std::to_string(w.size()));
  FoldingExecutor<F> ex(G);
  for (std::size_t k = 0; k < w.size(); ++k) ex.step(w[k], labels[k]);
  return ex.state();
}

/// x_{i_1}(c_1) n_{i_1}^{-1} ... x_{i_l}(c_l) n_{i_l}^{-1} with finite letters 1..n.
template <class F>
GroupMatrix<F> bruhat_point_finite(const LoopGroup<F>& G, const Word& w, const std::vector<F>& labels)
{
  if (w.size() != labels.size()) throw std::invalid_argument("bruhat_point_finite: label count mismatch");
  auto m = GroupMatrix<F>::identity(G.size());
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (w[k] < 1 || w[k] > G.weyl_group().rank()) throw std::out_of_range("finite word letter out of range");
    m = m * G.x_simple(w[k], labels[k]) * G.n_simple_inv(w[k]);
  }
  return m;
}

/// m1 B = m2 B  iff  m2^{-1} m1 is upper triangular.
template <class F>
bool coset_equal_B(const GroupMatrix<F>& m1, const GroupMatrix<F>& m2)
{
  const auto q = m2.inverse() * m1;
  for (int r = 0; r < q.size(); ++r)
    for (int c = 0; c < r; ++c)
      if (!q(r, c).is_zero()) return false;
  return true;
}

class GuardExceeded : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Runs the executor on all p^l label tuples over F_p and tallies endpoints.
inline std::map<AffineWeylElement, std::int64_t> brute_force_cells(const LoopGroup<ModP>& G, const Word& w,
                                                                  std::uint32_t p, unsigned jobs = 1)
{
  if (!is_prime(p)) throw std::invalid_argument("brute_force_cells: " + std::to_string(p) + " is not prime");
  std::uint64_t total = 1;
  for (std::size_t k = 0; k < w.size(); ++k) {
    total *= p;
    if (total > 1000000) throw GuardExceeded("brute_force_cells: p^l exceeds 10^6");
  }
  auto run_range = [&G, &w, p](std::uint64_t lo, std::uint64_t hi) {
    std::map<AffineWeylElement, std::int64_t> tally;
    std::vector<ModP> labels(w.size());
    for (std::uint64_t idx = lo; idx < hi; ++idx) {
      std::uint64_t x = idx;
      for (std::size_t k = 0; k < w.size(); ++k) {
        labels[k] = ModP(static_cast<long long>(x % p), p);
        x /= p;
      }
      const auto st = execute_folding(G, w, labels);
      ++tally[G.monomial_to_weyl(st.v_rep)];
    }
    return tally;
  };
  if (jobs <= 1) return run_range(0, total);
  std::vector<std::future<std::map<AffineWeylElement, std::int64_t>>> parts;
  for (unsigned t = 0; t < jobs; ++t)
    parts.push_back(std::async(std::launch::async, run_range, total * t / jobs, total * (t + 1) / jobs));
  std::map<AffineWeylElement, std::int64_t> merged;
  for (auto& f : parts)
    for (const auto& [k, v] : f.get()) merged[k] += v;
  return merged;
}

}  // namespace affold
