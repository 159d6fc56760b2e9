#pragma once

// Exact scalar fields used by the matrix layer: the rationals (GMP) and prime
// fields F_p with a runtime modulus.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace affold {

using Rational = mpq_class;

inline bool is_prime(std::uint64_t p)
{
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

/// Element of F_p. The modulus travels with the value so that generic code can
/// write `F(0)` and `F(1)`: such literals carry modulus 0 and adopt the modulus
/// of whatever they are combined with.
class ModP {
 public:
  ModP(long long v = 0) : v_(v), p_(0) {}
  ModP(long long v, std::uint32_t p) : p_(p)
  {
    if (p == 0) throw std::invalid_argument("ModP: modulus must be positive");
    v_ = reduce(v, p);
  }

  long long value() const { return v_; }
  std::uint32_t modulus() const { return p_; }

  friend ModP operator+(const ModP& a, const ModP& b)
  {
    const auto p = common(a, b);
    return p ? ModP(a.v_ + b.v_, p) : ModP(a.v_ + b.v_);
  }
  friend ModP operator-(const ModP& a, const ModP& b)
  {
    const auto p = common(a, b);
    return p ? ModP(a.v_ - b.v_, p) : ModP(a.v_ - b.v_);
  }
  friend ModP operator*(const ModP& a, const ModP& b)
  {
    const auto p = common(a, b);
    if (!p) return ModP(a.v_ * b.v_);
    return ModP(reduce(a.v_, p) * reduce(b.v_, p), p);
  }
  friend ModP operator/(const ModP& a, const ModP& b) { return a * b.inverse(); }
  ModP operator-() const { return p_ ? ModP(-v_, p_) : ModP(-v_); }
  ModP& operator+=(const ModP& o) { return *this = *this + o; }
  ModP& operator-=(const ModP& o) { return *this = *this - o; }
  ModP& operator*=(const ModP& o) { return *this = *this * o; }
  ModP& operator/=(const ModP& o) { return *this = *this / o; }

  ModP inverse() const
  {
    if (p_ == 0) {
      if (v_ == 1 || v_ == -1) return *this;
      throw std::logic_error("ModP: cannot invert an integer literal without a modulus");
    }
    if (v_ == 0) throw std::domain_error("ModP: division by zero");
    // Fermat; p is prime
    long long result = 1, base = v_, e = static_cast<long long>(p_) - 2;
    while (e > 0) {
      if (e & 1) result = result * base % p_;
      base = base * base % p_;
      e >>= 1;
    }
    return ModP(result, p_);
  }

  friend bool operator==(const ModP& a, const ModP& b)
  {
    const auto p = common(a, b);
    if (!p) return a.v_ == b.v_;
    return reduce(a.v_, p) == reduce(b.v_, p);
  }

 private:
  static long long reduce(long long v, std::uint32_t p)
  {
    const long long m = static_cast<long long>(p);
    long long r = v % m;
    return r < 0 ? r + m : r;
  }
  static std::uint32_t common(const ModP& a, const ModP& b)
  {
    if (a.p_ && b.p_ && a.p_ != b.p_) throw std::invalid_argument("ModP: mixed moduli");
    return a.p_ ? a.p_ : b.p_;
  }

  long long v_;
  std::uint32_t p_;
};

// Per-field helpers for printing and parsing.
template <class F>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static std::string name() { return "rational"; }
  static std::string to_string(const Rational& x) { return x.get_str(); }
  static Rational parse(const std::string& s)
  {
    Rational r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal '" + s + "'");
    r.canonicalize();
    return r;
  }
};

template <>
struct ScalarTraits<ModP> {
  static std::string name() { return "fp"; }
  static std::string to_string(const ModP& x) { return std::to_string(x.value()); }
  // Plain integers only; the caller attaches the modulus.
  static ModP parse(const std::string& s, std::uint32_t p)
  {
    std::size_t pos = 0;
    long long v = std::stoll(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("bad F_p literal '" + s + "'");
    return ModP(v, p);
  }
};

/// n/d in lowest terms (mpq_class(n, d) leaves the fraction as given).
inline Rational ratio(long n, long d)
{
  if (d == 0) throw std::domain_error("zero denominator");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
inline bool is_zero(const ModP& x) { return x == ModP(0); }

}  // namespace affold
