#pragma once

// Exact rational scalars backed by GMP, plus small integer combinatorics
// helpers used throughout the library.

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace jacksov {

// mpq_class maintains the invariants we need: gcd(|num|, den) = 1, den > 0.
using Rational = mpq_class;

inline bool is_zero(const Rational& a) { return sgn(a) == 0; }

// Parses "p", "-p", "p/q" or "-p/q" (decimal digits, q > 0). Anything else,
// including a zero denominator, is rejected.
inline Rational parse_rational(const std::string& text) {
  const auto fail = [&] {
    throw std::invalid_argument("bad rational literal: '" + text + "'");
  };
  std::size_t i = 0;
  if (i < text.size() && text[i] == '-') ++i;
  std::size_t digits = 0;
  while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i, ++digits;
  if (digits == 0) fail();
  if (i < text.size()) {
    if (text[i] != '/') fail();
    ++i;
    digits = 0;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i, ++digits;
    if (digits == 0 || i != text.size()) fail();
  }
  mpq_class v;
  if (v.set_str(text, 10) != 0) fail();
  if (sgn(v.get_den()) == 0) {
    throw std::invalid_argument("zero denominator in '" + text + "'");
  }
  v.canonicalize();
  return v;
}

// Canonical text form, denominator always explicit: "3/1", "-2/5".
inline std::string rational_to_string(const Rational& a) {
  return a.get_num().get_str() + "/" + a.get_den().get_str();
}

inline mpz_class factorial_mpz(long n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

inline mpz_class binomial_mpz(long n, long k) {
  if (k < 0 || k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

}  // namespace jacksov
