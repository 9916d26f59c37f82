#pragma once

// Dense univariate polynomials over an arbitrary commutative coefficient
// ring C.  C must be default-constructible to zero, constructible from long,
// and support +, -, *, ==.  Division (divmod) additionally needs C to be a
// field.

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace jacksov {

template <class C>
class Poly {
 public:
  Poly() = default;
  Poly(long v) {  // NOLINT: implicit constant embedding
    if (v != 0) c_.push_back(C(v));
  }
  explicit Poly(C c0) {
    c_.push_back(std::move(c0));
    trim();
  }
  explicit Poly(std::vector<C> cs) : c_(std::move(cs)) { trim(); }

  static Poly var() {
    Poly p;
    p.c_ = {C(0), C(1)};
    return p;
  }

  // degree of zero is -1
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<C>& coeffs() const { return c_; }

  C coeff(long i) const {
    if (i < 0 || i >= static_cast<long>(c_.size())) return C(0);
    return c_[static_cast<std::size_t>(i)];
  }

  const C& leading() const {
    if (c_.empty()) throw std::logic_error("leading() of zero polynomial");
    return c_.back();
  }

  Poly& operator+=(const Poly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), C(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), C(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  Poly& operator*=(const Poly& o) {
    *this = *this * o;
    return *this;
  }
  Poly& operator*=(const C& s) {
    for (auto& c : c_) c = C(c * s);
    trim();
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(const Poly& a) {
    Poly r;
    r.c_.reserve(a.c_.size());
    for (const auto& c : a.c_) r.c_.push_back(C(-c));
    return r;
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    Poly r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, C(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      for (std::size_t j = 0; j < b.c_.size(); ++j) {
        r.c_[i + j] += a.c_[i] * b.c_[j];
      }
    }
    r.trim();
    return r;
  }
  friend Poly operator*(Poly a, const C& s) { return a *= s; }
  friend Poly operator*(const C& s, Poly a) { return a *= s; }

  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (!(a.c_[i] == b.c_[i])) return false;
    }
    return true;
  }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  C eval(const C& t) const {
    C acc = C(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = C(acc * t + c_[i]);
    return acc;
  }

  Poly times_power(long k) const {
    if (is_zero()) return Poly();
    Poly r;
    r.c_.assign(c_.size() + static_cast<std::size_t>(k), C(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
      r.c_[i + static_cast<std::size_t>(k)] = c_[i];
    }
    return r;
  }

  static Poly pow(Poly base, long e) {
    Poly r = Poly(1);
    while (e > 0) {
      if (e & 1) r = r * base;
      e >>= 1;
      if (e) base = base * base;
    }
    return r;
  }

  // Field-coefficient division with remainder: a = q*b + r, deg r < deg b.
  static void divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    q = Poly();
    r = a;
    const long db = b.degree();
    while (!r.is_zero() && r.degree() >= db) {
      const long shift = r.degree() - db;
      C f = C(r.leading() / b.leading());
      Poly t = (b * f).times_power(shift);
      Poly qt = Poly(f).times_power(shift);
      q += qt;
      r -= t;
    }
  }

  Poly divide_exact(const Poly& b) const {
    Poly q, r;
    divmod(*this, b, q, r);
    if (!r.is_zero()) throw std::logic_error("inexact polynomial division");
    return q;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == C(0)) c_.pop_back();
  }

  std::vector<C> c_;  // c_[i] is the coefficient of the i-th power
};

}  // namespace jacksov
