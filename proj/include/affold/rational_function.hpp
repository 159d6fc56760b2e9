#pragma once

#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "affold/polynomial.hpp"
#include "affold/scalar.hpp"

namespace affold {

/// Exact element of F(t), kept as num/den with gcd(num, den) = 1 and den monic.
/// The t-adic valuation stands in for the valuation on F((t)).
template <class F>
class RationalFunction {
 public:
  using Poly = Polynomial<F>;

  RationalFunction() : num_(), den_(F(1)) {}
  RationalFunction(const F& c) : num_(c), den_(F(1)) {}
  RationalFunction(int c) : RationalFunction(F(c)) {}
  RationalFunction(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

  /// c * t^k for any integer k.
  static RationalFunction monomial(const F& c, int k)
  {
    if (k >= 0) return RationalFunction(Poly::monomial(c, static_cast<std::size_t>(k)), Poly(F(1)));
    return RationalFunction(Poly(c), Poly::monomial(F(1), static_cast<std::size_t>(-k)));
  }
  static RationalFunction t(int k = 1) { return monomial(F(1), k); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }

  /// ord_t(num) - ord_t(den); throws on zero (valuation +infinity).
  int valuation() const
  {
    if (is_zero()) throw std::domain_error("valuation of zero");
    return static_cast<int>(num_.t_order()) - static_cast<int>(den_.t_order());
  }

  bool is_integral() const { return is_zero() || valuation() >= 0; }
  bool is_unit_integral() const { return !is_zero() && valuation() == 0; }

  bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }
  F constant_value() const
  {
    if (!is_constant()) throw std::logic_error("rational function is not constant: " + to_string());
    return num_.coeff(0);
  }

  /// Coefficient of t^m in the Laurent expansion at t = 0.
  F laurent_coeff(int m) const
  {
    if (is_zero()) return F(0);
    const int v = valuation();
    if (m < v) return F(0);
    const auto p = num_.shift_down(num_.t_order());
    const auto q = den_.shift_down(den_.t_order());
    // power series of p/q up to index m - v
    const std::size_t upto = static_cast<std::size_t>(m - v);
    std::vector<F> s(upto + 1, F(0));
    const F inv_q0 = F(1) / q.coeff(0);
    for (std::size_t k = 0; k <= upto; ++k) {
      F acc = p.coeff(k);
      for (std::size_t i = 1; i <= k && i <= static_cast<std::size_t>(q.degree()); ++i)
        acc = acc - q.coeff(i) * s[k - i];
      s[k] = acc * inv_q0;
    }
    return s[upto];
  }

  /// ev_{t=0}; defined for integral elements only.
  F eval_at_zero() const
  {
    if (is_zero()) return F(0);
    const int v = valuation();
    if (v < 0) throw std::domain_error("ev_{t=0} of non-integral element " + to_string());
    return v > 0 ? F(0) : laurent_coeff(0);
  }

  RationalFunction inverse() const
  {
    if (is_zero()) throw std::domain_error("inverse of zero rational function");
    return RationalFunction(den_, num_);
  }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b)
  {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  RationalFunction operator-() const
  {
    RationalFunction r(*this);
    r.num_ = -r.num_;
    return r;
  }
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b)
  {
    if (a.is_zero() || b.is_zero()) return {};
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) { return a * b.inverse(); }
  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }

  friend bool operator==(const RationalFunction& a, const RationalFunction& b)
  {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// Laurent-polynomial form ("1/2 - 5/12*t", "1/6*t^-2") when the denominator
  /// is a power of t, "(num)/(den)" otherwise.
  std::string to_string() const
  {
    if (is_zero()) return "0";
    if (den_.is_monomial()) {
      const int shift = -static_cast<int>(den_.t_order());
      return poly_string(num_, shift);
    }
    return "(" + poly_string(num_, 0) + ")/(" + poly_string(den_, 0) + ")";
  }

 private:
  void normalize()
  {
    if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
    if (num_.is_zero()) {
      den_ = Poly(F(1));
      return;
    }
    const std::size_t common_t = std::min(num_.t_order(), den_.t_order());
    num_ = num_.shift_down(common_t);
    den_ = den_.shift_down(common_t);
    if (den_.degree() > 0 && !den_.is_monomial()) {
      const auto g = gcd(num_, den_);
      if (g.degree() > 0) {
        num_ = divmod(num_, g).first;
        den_ = divmod(den_, g).first;
      }
    }
    const F inv = F(1) / den_.lead();
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }

  static std::string poly_string(const Poly& p, int shift)
  {
    std::ostringstream out;
    bool first = true;
    for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
      const F& c = p.coeffs()[k];
      if (affold::is_zero(c)) continue;
      std::string cs = ScalarTraits<F>::to_string(c);
      const int e = static_cast<int>(k) + shift;
      bool neg = !cs.empty() && cs[0] == '-';
      if (neg) cs.erase(0, 1);
      if (first)
        out << (neg ? "-" : "");
      else
        out << (neg ? " - " : " + ");
      first = false;
      if (e == 0) {
        out << cs;
        continue;
      }
      if (cs != "1") out << cs << "*";
      out << "t";
      if (e != 1) out << "^" << e;
    }
    return out.str();
  }

  Poly num_;
  Poly den_;
};

}  // namespace affold
