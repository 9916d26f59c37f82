#pragma once

// The Baxter-type operator Q_z as an exact algebraic map on symmetric
// polynomials, its polynomial eigenvalues q_lambda(z) by two independent
// routes, the proportionality constant beta_lambda, the hypergeometric
// parameter lists, and the order-n ODE residual check on formal power series.

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "jacksov/jack.hpp"
#include "jacksov/partition.hpp"
#include "jacksov/poly.hpp"
#include "jacksov/scalar.hpp"
#include "jacksov/sympoly.hpp"

namespace jacksov {

template <class S>
using ZPoly = Poly<S>;

// Polynomial in z whose coefficients are symmetric polynomials in y.
template <class S>
struct SymZPoly {
  long n = 0;
  std::vector<SymPoly<S>> coeffs;  // index = power of z; trailing nonzero

  void trim() {
    while (!coeffs.empty() && coeffs.back().terms.empty()) coeffs.pop_back();
  }
  long degree_z() const { return static_cast<long>(coeffs.size()) - 1; }

  friend bool operator==(const SymZPoly& a, const SymZPoly& b) {
    return a.n == b.n && a.coeffs == b.coeffs;
  }
};

// q(z) * P(y) as a SymZPoly
template <class S>
SymZPoly<S> separated_product(const ZPoly<S>& q, const SymPoly<S>& p) {
  SymZPoly<S> out;
  out.n = p.n;
  for (long d = 0; d <= q.degree(); ++d) {
    out.coeffs.push_back(scale(p, q.coeff(d)));
  }
  out.trim();
  return out;
}

// z * v
template <class S>
SymZPoly<S> shift_z(const SymZPoly<S>& v) {
  SymZPoly<S> out = v;
  SymPoly<S> zero;
  zero.n = v.n;
  out.coeffs.insert(out.coeffs.begin(), zero);
  out.trim();
  return out;
}

// (multiplication by a fixed symmetric polynomial) applied per z-coefficient
template <class S>
SymZPoly<S> mul_each(const SymZPoly<S>& v, const SymPoly<S>& f) {
  SymZPoly<S> out;
  out.n = v.n;
  for (const auto& c : v.coeffs) out.coeffs.push_back(mul(c, f));
  out.trim();
  return out;
}

namespace detail {

// One substituted elementary symmetric polynomial: the degree-i elementary in
// x rewritten over y with one marker eta per chosen index,
//   e_i(x) -> sum_{|T|=i} (1 + sum_{t in T} eta_t) prod_{t in T} y_t.
// Terms are (eta exponent | y exponent) pairs, all with coefficient 1.
struct EtaTerm {
  std::vector<long> eta;
  std::vector<long> y;
};

inline std::vector<EtaTerm> eta_elementary(long i, long n) {
  std::vector<EtaTerm> out;
  std::vector<long> subset;
  auto rec = [&](auto&& self, long next) -> void {
    if (static_cast<long>(subset.size()) == i) {
      std::vector<long> y(static_cast<std::size_t>(n), 0);
      for (long t : subset) y[static_cast<std::size_t>(t)] = 1;
      const EtaTerm base{std::vector<long>(static_cast<std::size_t>(n), 0),
                         y};
      out.push_back(base);
      for (long t : subset) {
        EtaTerm marked = base;
        marked.eta[static_cast<std::size_t>(t)] = 1;
        out.push_back(std::move(marked));
      }
      return;
    }
    for (long v = next; v < n; ++v) {
      subset.push_back(v);
      self(self, v + 1);
      subset.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace detail

// Exact image of a symmetric polynomial under Q_z.  Steps: expand the input
// over products of elementary symmetric polynomials; substitute each factor
// by its marked form over y; expand; then send each marker monomial eta^k to
//   (z-1)^{|k|} * prod_i (g)_{k_i} / (ng)_{|k|},
// binomially expanded in z.  The result is polynomial in z of degree at most
// deg p, with symmetric y-coefficients.
template <class S>
SymZPoly<S> qz_apply(const SymPoly<S>& p, const S& g) {
  const long n = p.n;
  long maxdeg = 0;
  for (const auto& [lam, c] : p.terms) maxdeg = std::max(maxdeg, weight(lam));

  std::vector<RawPoly<S>> z_raw(static_cast<std::size_t>(maxdeg) + 1);
  for (auto& r : z_raw) r.n = n;

  // per-power lists of the substituted elementary factors
  std::vector<std::vector<detail::EtaTerm>> eta_e;
  for (long i = 0; i <= n; ++i) eta_e.push_back(detail::eta_elementary(i, n));

  for (const auto& [a, c] : expand_in_e(p)) {
    // product over the chosen elementary factors, as (eta|y) -> multiplicity
    std::map<std::vector<long>, S> acc;
    acc.emplace(std::vector<long>(static_cast<std::size_t>(2 * n), 0), S(1));
    for (long i = 0; i < n; ++i) {
      for (long rep = 0; rep < a[static_cast<std::size_t>(i)]; ++rep) {
        std::map<std::vector<long>, S> next;
        for (const auto& [key, mult] : acc) {
          for (const auto& term : eta_e[static_cast<std::size_t>(i) + 1]) {
            std::vector<long> k = key;
            for (long v = 0; v < n; ++v) {
              k[static_cast<std::size_t>(v)] +=
                  term.eta[static_cast<std::size_t>(v)];
              k[static_cast<std::size_t>(n + v)] +=
                  term.y[static_cast<std::size_t>(v)];
            }
            add_term(next, k, mult);
          }
        }
        acc = std::move(next);
      }
    }
    // marker monomials to (z-1)-weights, expanded into z powers
    for (const auto& [key, mult] : acc) {
      long total = 0;
      for (long v = 0; v < n; ++v) total += key[static_cast<std::size_t>(v)];
      S w = S(1);
      for (long v = 0; v < n; ++v) {
        w = S(w * pochhammer(g, key[static_cast<std::size_t>(v)]));
      }
      w = field_div(w, pochhammer(S(S(n) * g), total));
      w = S(w * c * mult);
      if (is_zero(w)) continue;
      const std::vector<long> yexp(key.begin() + n, key.end());
      for (long d = 0; d <= total; ++d) {
        Rational sign((total - d) % 2 == 0 ? 1 : -1);
        Rational binom(binomial_mpz(total, d));
        S coeff = S(w * from_rational<S>(Rational(sign * binom)));
        add_term(z_raw[static_cast<std::size_t>(d)].terms, yexp, coeff);
      }
    }
  }

  SymZPoly<S> out;
  out.n = n;
  for (auto& r : z_raw) out.coeffs.push_back(collect_m(r));
  out.trim();
  return out;
}

// Eigenvalue polynomial of Q_z on the Jack polynomial labelled by lambda,
// from the explicit multiple sum with prefix-sum Pochhammer ratios.
template <class S>
ZPoly<S> q_eigenvalue_sum(const Partition& lambda, long n, const S& g) {
  if (lambda.length() != n || n < 1) {
    throw std::invalid_argument("length mismatch");
  }
  const ZPoly<S> one_minus_z =
      ZPoly<S>(std::vector<S>{S(1), S(-1)});
  ZPoly<S> sum;
  std::vector<long> k(static_cast<std::size_t>(n > 0 ? n - 1 : 0), 0);
  auto rec = [&](auto&& self, long i) -> void {
    if (i == n - 1) {
      S scalar = S(1);
      long total = 0, prefix = 0;
      for (long j = 0; j < n - 1; ++j) {
        const long kj = k[static_cast<std::size_t>(j)];
        const long gap = lambda[j] - lambda[j + 1];
        prefix += kj;
        total += kj;
        Rational fall = Rational(pochhammer(Rational(-gap), kj) /
                                 Rational(factorial_mpz(kj)));
        scalar = S(scalar * from_rational<S>(fall));
        scalar = S(scalar * pochhammer(S(S(j + 1) * g), prefix));
        scalar = field_div(scalar, pochhammer(S(S(j + 2) * g), prefix));
      }
      sum += ZPoly<S>::pow(one_minus_z, total) * scalar;
      return;
    }
    for (long v = 0; v <= lambda[i] - lambda[i + 1]; ++v) {
      k[static_cast<std::size_t>(i)] = v;
      self(self, i + 1);
    }
    k[static_cast<std::size_t>(i)] = 0;
  };
  rec(rec, 0);
  return sum.times_power(lambda[n - 1]);
}

// beta_lambda = prod_{i=1}^{n-1} ((n-i+1)g)_{lambda_i - lambda_n} /
//                                ((n-i)g)_{lambda_i - lambda_n}
template <class S>
S beta_lambda(const Partition& lambda, long n, const S& g) {
  if (lambda.length() != n) throw std::invalid_argument("length mismatch");
  S num = S(1), den = S(1);
  for (long i = 1; i <= n - 1; ++i) {
    const long d = lambda[i - 1] - lambda[n - 1];
    num = S(num * pochhammer(S(S(n - i + 1) * g), d));
    den = S(den * pochhammer(S(S(n - i) * g), d));
  }
  return field_div(num, den);
}

// The same eigenvalue polynomial scaled by beta_lambda, from the independent
// finite sum with suffix-sum Pochhammer ratios.
template <class S>
ZPoly<S> f_polynomial(const Partition& lambda, long n, const S& g) {
  if (lambda.length() != n || n < 1) {
    throw std::invalid_argument("length mismatch");
  }
  const ZPoly<S> one_minus_z =
      ZPoly<S>(std::vector<S>{S(1), S(-1)});
  const ZPoly<S> z = ZPoly<S>::var();
  long gap_total = 0;
  for (long j = 0; j + 1 < n; ++j) gap_total += lambda[j] - lambda[j + 1];

  ZPoly<S> sum;
  std::vector<long> k(static_cast<std::size_t>(n > 0 ? n - 1 : 0), 0);
  auto rec = [&](auto&& self, long i) -> void {
    if (i == n - 1) {
      S scalar = S(1);
      long total = 0;
      for (long j = 0; j < n - 1; ++j) {
        total += k[static_cast<std::size_t>(j)];
      }
      long suffix = total;
      for (long j = 0; j < n - 1; ++j) {
        const long kj = k[static_cast<std::size_t>(j)];
        const long gap = lambda[j] - lambda[j + 1];
        const long drop = lambda[j] - lambda[n - 1];
        Rational fall = Rational(pochhammer(Rational(-gap), kj) /
                                 Rational(factorial_mpz(kj)));
        scalar = S(scalar * from_rational<S>(fall));
        const S base_num = S(S(1 - drop) - S(n - j) * g);
        const S base_den = S(S(1 - drop) - S(n - j - 1) * g);
        scalar = S(scalar * pochhammer(base_num, suffix));
        scalar = field_div(scalar, pochhammer(base_den, suffix));
        suffix -= kj;
      }
      ZPoly<S> zfac = ZPoly<S>::pow(z, total) *
                      (total % 2 == 0 ? S(1) : S(-1));
      zfac = zfac * ZPoly<S>::pow(one_minus_z, gap_total - total);
      sum += zfac * scalar;
      return;
    }
    for (long v = 0; v <= lambda[i] - lambda[i + 1]; ++v) {
      k[static_cast<std::size_t>(i)] = v;
      self(self, i + 1);
    }
    k[static_cast<std::size_t>(i)] = 0;
  };
  rec(rec, 0);
  return sum.times_power(lambda[n - 1]);
}

template <class S>
struct HypergeomParams {
  std::vector<S> a;  // n entries
  std::vector<S> b;  // n-1 entries, b_i = a_i + g
};

template <class S>
HypergeomParams<S> hypergeom_params(const Partition& lambda, long n,
                                    const S& g) {
  if (lambda.length() != n) throw std::invalid_argument("length mismatch");
  HypergeomParams<S> out;
  for (long i = 1; i <= n; ++i) {
    out.a.push_back(S(S(lambda[n - 1] - lambda[i - 1] + 1) -
                      S(n - i + 1) * g));
  }
  for (long i = 1; i <= n - 1; ++i) {
    out.b.push_back(S(out.a[static_cast<std::size_t>(i - 1)] + g));
  }
  return out;
}

// First `order` power-series coefficients of the separation ODE applied to
//   u(z) = z^{-lambda_n} (1-z)^{ng-1} f_lambda(z);
// all must vanish.  The fractional power is a formal binomial series, and
// z^{-lambda_n} cancels exactly against the z^{lambda_n} prefactor of f.
template <class S>
std::vector<S> baxter_residual(const Partition& lambda, long n, long order,
                               const S& g) {
  if (order < 1) throw std::invalid_argument("order must be >= 1");
  const ZPoly<S> f = f_polynomial(lambda, n, g);
  const long shift = lambda[n - 1];

  // u_m via Cauchy product of the shifted polynomial and the binomial series
  std::vector<S> u(static_cast<std::size_t>(order) + 1, S(0));
  const S s_exp = S(S(1) - S(n) * g);  // series coeff m: (1-ng)_m / m!
  std::vector<S> binom(static_cast<std::size_t>(order) + 1, S(0));
  for (long m = 0; m <= order; ++m) {
    binom[static_cast<std::size_t>(m)] =
        S(pochhammer(s_exp, m) *
          from_rational<S>(Rational(Rational(1) /
                                    Rational(factorial_mpz(m)))));
  }
  for (long i = 0; i + shift <= f.degree(); ++i) {
    const S fi = f.coeff(i + shift);
    if (is_zero(fi)) continue;
    for (long m = i; m <= order; ++m) {
      u[static_cast<std::size_t>(m)] =
          S(u[static_cast<std::size_t>(m)] +
            fi * binom[static_cast<std::size_t>(m - i)]);
    }
  }

  const HypergeomParams<S> par = hypergeom_params(lambda, n, g);
  std::vector<S> residual;
  for (long m = 0; m < order; ++m) {
    S left = S(u[static_cast<std::size_t>(m)] * S(m));
    for (const S& b : par.b) left = S(left * (S(m - 1) + b));
    S right = S(0);
    if (m >= 1) {
      right = u[static_cast<std::size_t>(m - 1)];
      for (const S& a : par.a) right = S(right * (S(m - 1) + a));
    }
    residual.push_back(S(left - right));
  }
  return residual;
}

template <class S>
std::vector<S> baxter_residual(const Partition& lambda, long n, const S& g) {
  return baxter_residual(lambda, n, 2 * (lambda[0] + n), g);
}

}  // namespace jacksov
