#pragma once

// Jack polynomials in their monic m-basis normalisation, computed by
// diagonalising the second-order Sutherland-type operator
//   H = sum_i (x_i d/dx_i)^2 + g sum_{i<j} (x_i+x_j)/(x_i-x_j) (x_i d/dx_i - x_j d/dx_j)
// on each dominance lower set.  The solve is triangular: the image of m_mu
// under H only touches partitions dominated by mu.

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "jacksov/partition.hpp"
#include "jacksov/scalar.hpp"
#include "jacksov/sympoly.hpp"

namespace jacksov {

inline std::string partition_to_string(const Partition& p) {
  std::string s = "(";
  for (long i = 0; i < p.length(); ++i) {
    if (i) s += ",";
    s += std::to_string(p[i]);
  }
  return s + ")";
}

// H applied to a symmetric polynomial, exactly.  The Euler-squared part is
// diagonal on raw monomials.  For each pair i<j the first-order part is
//   g (x_i+x_j) * [(x_i d_i - x_j d_j) p] / (x_i - x_j);
// the quotient is expanded termwise over orbit pairs {a, swap_ij(a)} using
//   x^a - x^swap = x_i^b x_j^b (x_i - x_j) * sum_t x_i^{d-1-t} x_j^t
// for a_i = b+d > a_j = b.  Divisibility needs equal coefficients on the two
// orbit members, which is exactly symmetry of p; unequal coefficients mean a
// nonzero remainder and are reported as an internal bug.
template <class S>
SymPoly<S> apply_H(const SymPoly<S>& p, const S& g) {
  const RawPoly<S> raw = expand_raw(p);
  RawPoly<S> image;
  image.n = p.n;
  for (const auto& [expo, c] : raw.terms) {
    long euler2 = 0;
    for (long e : expo) euler2 += e * e;
    if (euler2 != 0) add_term(image.terms, expo, S(c * S(euler2)));
  }
  for (long i = 0; i < p.n; ++i) {
    for (long j = i + 1; j < p.n; ++j) {
      for (const auto& [expo, c] : raw.terms) {
        const long ai = expo[static_cast<std::size_t>(i)];
        const long aj = expo[static_cast<std::size_t>(j)];
        if (ai <= aj) continue;  // orbit handled at its (ai > aj) member
        std::vector<long> swapped = expo;
        std::swap(swapped[static_cast<std::size_t>(i)],
                  swapped[static_cast<std::size_t>(j)]);
        const auto partner = raw.terms.find(swapped);
        if (partner == raw.terms.end() || !(partner->second == c)) {
          throw std::logic_error(
              "apply_H: nonzero remainder dividing by x_i - x_j "
              "(input not symmetric)");
        }
        // (x_i d_i - x_j d_j)(x^a + x^swap) = (ai - aj)(x^a - x^swap)
        const S f = S(c * S(ai - aj) * g);
        // (x_i + x_j) * quotient, quotient = x_i^aj x_j^aj sum_t x_i^{d-1-t} x_j^t
        for (long t = 0; t < ai - aj; ++t) {
          std::vector<long> base = expo;
          base[static_cast<std::size_t>(i)] = aj + (ai - aj - 1 - t);
          base[static_cast<std::size_t>(j)] = aj + t;
          std::vector<long> up_i = base;
          ++up_i[static_cast<std::size_t>(i)];
          std::vector<long> up_j = base;
          ++up_j[static_cast<std::size_t>(j)];
          add_term(image.terms, up_i, f);
          add_term(image.terms, up_j, f);
        }
      }
    }
  }
  return collect_m(image);
}

// h(lambda) = sum_i lambda_i (lambda_i + g (n+1-2i))
template <class S>
S h_eigenvalue(const Partition& lambda, long n, const S& g) {
  if (lambda.length() != n) throw std::invalid_argument("length mismatch");
  S acc = S(0);
  for (long i = 1; i <= n; ++i) {
    const long li = lambda[i - 1];
    acc = S(acc + S(li) * (S(li) + S(n + 1 - 2 * i) * g));
  }
  return acc;
}

template <class S>
struct JackExpansion {
  Partition lambda;
  long n = 0;
  SymPoly<S> poly;  // unit coefficient at lambda, support in lower_set(lambda)
};

// Jack polynomials for one fixed coupling value, with memoisation.  Results
// are handed out by reference into the table; the table must outlive them.
// Not internally synchronised: concurrent workers use one table each.
template <class S>
class JackTable {
 public:
  explicit JackTable(S g) : g_(std::move(g)) {}

  const S& coupling() const { return g_; }

  const JackExpansion<S>& jack(const Partition& lambda) {
    const auto key = lambda.parts;
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    JackExpansion<S> result = solve(lambda);
    return memo_.emplace(key, std::move(result)).first->second;
  }

 private:
  JackExpansion<S> solve(const Partition& lambda) const {
    const long n = lambda.length();
    const std::vector<Partition> lower = lower_set(lambda);
    const S h_top = h_eigenvalue(lambda, n, g_);

    // images H m_nu for every nu in the lower set
    std::map<Partition, SymPoly<S>> h_images;
    for (const Partition& nu : lower) {
      h_images.emplace(nu, apply_H(m_basis<S>(nu, n), g_));
    }

    SymPoly<S> expansion;
    expansion.n = n;
    expansion.terms.emplace(lambda, S(1));
    for (std::size_t idx = 1; idx < lower.size(); ++idx) {
      const Partition& mu = lower[idx];
      // (h(lambda) - h(mu)) v_mu = sum_{nu already solved} v_nu [H m_nu]_mu
      S rhs = S(0);
      for (const auto& [nu, v_nu] : expansion.terms) {
        const auto& img = h_images.at(nu).terms;
        const auto hit = img.find(mu);
        if (hit != img.end()) rhs = S(rhs + v_nu * hit->second);
      }
      const S denom = S(h_top - h_eigenvalue(mu, n, g_));
      if (is_zero(denom)) {
        throw std::domain_error(
            "spectral collision: h" + partition_to_string(lambda) +
            " = h" + partition_to_string(mu) + " at this coupling");
      }
      if (is_zero(rhs)) continue;
      expansion.terms.emplace(mu, field_div(rhs, denom));
    }
    return JackExpansion<S>{lambda, n, std::move(expansion)};
  }

  S g_;
  std::map<std::vector<long>, JackExpansion<S>> memo_;
};

// c_lambda = prod_{i<j} ((j-i+1)g)_{lambda_i - lambda_j} / ((j-i)g)_{lambda_i - lambda_j}
template <class S>
S eval_at_ones(const Partition& lambda, long n, const S& g) {
  if (lambda.length() != n) throw std::invalid_argument("length mismatch");
  S num = S(1);
  S den = S(1);
  for (long i = 1; i <= n; ++i) {
    for (long j = i + 1; j <= n; ++j) {
      const long d = lambda[i - 1] - lambda[j - 1];
      num = S(num * pochhammer(S(S(j - i + 1) * g), d));
      den = S(den * pochhammer(S(S(j - i) * g), d));
    }
  }
  return field_div(num, den);
}

template <class S>
RawPoly<S> restricted_jack(JackTable<S>& table, const Partition& lambda,
                           long k) {
  return restrict_tail_to_one(table.jack(lambda).poly, k);
}

}  // namespace jacksov
