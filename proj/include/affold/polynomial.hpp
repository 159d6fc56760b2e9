#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "affold/scalar.hpp"

namespace affold {

/// Dense univariate polynomial in t over a field F, coefficients in ascending
/// order with no trailing zeros (the zero polynomial has no coefficients).
template <class F>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(const F& c)
  {
    if (!affold::is_zero(c)) coeffs_.push_back(c);
  }
  explicit Polynomial(std::vector<F> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static Polynomial monomial(const F& c, std::size_t degree)
  {
    if (affold::is_zero(c)) return {};
    std::vector<F> v(degree + 1, F(0));
    v[degree] = c;
    return Polynomial(std::move(v));
  }

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<F>& coeffs() const { return coeffs_; }
  F coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : F(0); }
  const F& lead() const { return coeffs_.back(); }

  /// Largest k with t^k dividing this polynomial; undefined for zero.
  std::size_t t_order() const
  {
    std::size_t k = 0;
    while (k < coeffs_.size() && affold::is_zero(coeffs_[k])) ++k;
    return k;
  }

  bool is_monomial() const
  {
    if (is_zero()) return false;
    return t_order() + 1 == coeffs_.size();
  }

  /// Exact division by t^k; requires k <= t_order().
  Polynomial shift_down(std::size_t k) const
  {
    if (k == 0) return *this;
    return Polynomial(std::vector<F>(coeffs_.begin() + static_cast<std::ptrdiff_t>(k), coeffs_.end()));
  }

  Polynomial shift_up(std::size_t k) const
  {
    if (k == 0 || is_zero()) return *this;
    std::vector<F> v(k, F(0));
    v.insert(v.end(), coeffs_.begin(), coeffs_.end());
    return Polynomial(std::move(v));
  }

  Polynomial scaled(const F& c) const
  {
    if (affold::is_zero(c)) return {};
    std::vector<F> v(coeffs_);
    for (auto& x : v) x = x * c;
    return Polynomial(std::move(v));
  }

  Polynomial monic() const { return is_zero() ? *this : scaled(F(1) / lead()); }

  F eval(const F& x) const
  {
    F acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b)
  {
    std::vector<F> v(std::max(a.coeffs_.size(), b.coeffs_.size()), F(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] = a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] = v[i] + b.coeffs_[i];
    return Polynomial(std::move(v));
  }
  Polynomial operator-() const { return scaled(F(-1)); }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b)
  {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<F> v(a.coeffs_.size() + b.coeffs_.size() - 1, F(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (affold::is_zero(a.coeffs_[i])) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] = v[i + j] + a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(v));
  }

  /// Euclidean division: returns (quotient, remainder).
  friend std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b)
  {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    if (a.degree() < b.degree()) return {Polynomial(), a};
    std::vector<F> rem(a.coeffs_);
    std::vector<F> quo(static_cast<std::size_t>(a.degree() - b.degree() + 1), F(0));
    const F inv_lead = F(1) / b.lead();
    for (int k = a.degree() - b.degree(); k >= 0; --k) {
      const F q = rem[static_cast<std::size_t>(k + b.degree())] * inv_lead;
      quo[static_cast<std::size_t>(k)] = q;
      if (affold::is_zero(q)) continue;
      for (int j = 0; j <= b.degree(); ++j)
        rem[static_cast<std::size_t>(k + j)] = rem[static_cast<std::size_t>(k + j)] - q * b.coeffs_[static_cast<std::size_t>(j)];
    }
    return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
  }

  /// Monic gcd (zero if both are zero).
  friend Polynomial gcd(Polynomial a, Polynomial b)
  {
    while (!b.is_zero()) {
      auto r = divmod(a, b).second;
      a = std::move(b);
      b = std::move(r);
    }
    return a.monic();
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim()
  {
    while (!coeffs_.empty() && affold::is_zero(coeffs_.back())) coeffs_.pop_back();
  }

  std::vector<F> coeffs_;
};

}  // namespace affold
