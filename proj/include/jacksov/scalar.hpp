#pragma once

// The coefficient fields the library is instantiated with:
//   Rational: exact rationals, used when the coupling g is a fixed number;
//   RatFunc:  exact rational functions of the coupling variable g.
// Both expose the same operations, so every algorithm above this layer is
// templated on the scalar type and works identically in either field.

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "jacksov/poly.hpp"
#include "jacksov/rational.hpp"

namespace jacksov {

// Polynomials in g with rational coefficients.
using GPoly = Poly<Rational>;

// Positive rational c such that p / c has coprime integer coefficients.
inline Rational content(const GPoly& p) {
  if (p.is_zero()) throw std::logic_error("content of zero polynomial");
  mpz_class num_gcd = 0;
  mpz_class den_lcm = 1;
  for (const auto& c : p.coeffs()) {
    if (sgn(c) == 0) continue;
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(),
            c.get_num().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(),
            c.get_den().get_mpz_t());
  }
  Rational r(abs(num_gcd), den_lcm);
  r.canonicalize();
  return r;
}

// p / content(p), sign-adjusted so the leading coefficient is positive.
// The result has coprime integer coefficients.
inline GPoly primitive_part(const GPoly& p) {
  if (p.is_zero()) return p;
  Rational c = content(p);
  if (sgn(p.leading()) < 0) c = -c;
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(p.degree()) + 1);
  for (const auto& q : p.coeffs()) out.push_back(Rational(q / c));
  return GPoly(std::move(out));
}

// gcd over Q[g], computed on primitive integer parts with pseudo-remainders
// so no rational coefficients appear mid-run.  Returns a primitive
// polynomial with positive leading coefficient (1 if coprime).
inline GPoly gcd(const GPoly& a, const GPoly& b) {
  GPoly x = primitive_part(a);
  GPoly y = primitive_part(b);
  if (x.is_zero()) return y;
  if (y.is_zero()) return x;
  while (!y.is_zero()) {
    // pseudo-remainder: lc(y)^(deg x - deg y + 1) * x reduced mod y
    GPoly r = x;
    const long dy = y.degree();
    while (!r.is_zero() && r.degree() >= dy) {
      const long shift = r.degree() - dy;
      const Rational lr = r.leading();
      r *= y.leading();
      r -= (y * lr).times_power(shift);
    }
    x = y;
    y = r.is_zero() ? GPoly() : primitive_part(r);
  }
  return x;
}

// Reduced fraction num/den of polynomials in g.  Canonical form: num and den
// coprime, den with coprime integer coefficients and positive leading one.
class RatFunc {
 public:
  RatFunc() : num_(), den_(1) {}
  RatFunc(long v) : num_(v), den_(1) {}  // NOLINT: implicit constant
  explicit RatFunc(const Rational& v) : num_(GPoly(v)), den_(1) {}
  explicit RatFunc(GPoly num) : num_(std::move(num)), den_(1) { reduce(); }
  RatFunc(GPoly num, GPoly den) : num_(std::move(num)), den_(std::move(den)) {
    reduce();
  }

  // the coupling variable itself
  static RatFunc g() { return RatFunc(GPoly::var()); }

  const GPoly& num() const { return num_; }
  const GPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFunc operator-(const RatFunc& a) {
    RatFunc r = a;
    r.num_ = -r.num_;
    return r;
  }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw std::domain_error("division by zero scalar");
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
  }
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) {
    return !(a == b);
  }

  // Value at g = g0; the denominator must not vanish there.
  Rational at(const Rational& g0) const {
    Rational d = den_.eval(g0);
    if (sgn(d) == 0) {
      throw std::domain_error("pole at g = " + rational_to_string(g0));
    }
    return Rational(num_.eval(g0) / d);
  }

 private:
  void reduce() {
    if (den_.is_zero()) throw std::domain_error("zero denominator");
    if (num_.is_zero()) {
      den_ = GPoly(1);
      return;
    }
    if (den_.degree() > 0 || num_.degree() > 0) {
      GPoly common = jacksov::gcd(num_, den_);
      if (common.degree() > 0) {
        num_ = num_.divide_exact(common);
        den_ = den_.divide_exact(common);
      }
    }
    Rational scale = content(den_);
    if (sgn(den_.leading()) < 0) scale = -scale;
    if (scale != 1) {
      num_ = num_ * Rational(1 / scale);
      den_ = den_ * Rational(1 / scale);
    }
  }

  GPoly num_;
  GPoly den_;
};

inline bool is_zero(const RatFunc& a) { return a.is_zero(); }

// Checked division; the Rational overload guards against GMP's hard trap on
// zero denominators.
inline Rational field_div(const Rational& a, const Rational& b) {
  if (sgn(b) == 0) throw std::domain_error("division by zero scalar");
  return Rational(a / b);
}
inline RatFunc field_div(const RatFunc& a, const RatFunc& b) { return a / b; }

template <class S>
S from_rational(const Rational& v) {
  return S(v);
}
template <>
inline Rational from_rational<Rational>(const Rational& v) {
  return v;
}

// Rising factorial a(a+1)...(a+k-1); 1 when k = 0.
template <class S>
S pochhammer(const S& a, long k) {
  if (k < 0) throw std::invalid_argument("pochhammer needs k >= 0");
  S r = S(1);
  S f = a;
  for (long i = 0; i < k; ++i) {
    r = S(r * f);
    f = S(f + S(1));
  }
  return r;
}

inline Rational specialize(const RatFunc& s, const Rational& g0) {
  return s.at(g0);
}

}  // namespace jacksov
