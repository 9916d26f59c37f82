#pragma once

// Sparse symmetric polynomials over a generic coefficient ring S, kept in two
// interchangeable forms: the m-basis (partition -> coefficient) and the raw
// expanded form (exponent vector -> coefficient).  Operators act on whichever
// form is natural; conversion back to the m-basis asserts symmetry, which
// doubles as a correctness check on every operator implementation.

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "jacksov/partition.hpp"
#include "jacksov/poly.hpp"

namespace jacksov {

template <class C>
bool is_zero(const Poly<C>& p) {
  return p.is_zero();
}

template <class S>
S spow(S base, long e) {
  S r = S(1);
  while (e > 0) {
    if (e & 1) r = S(r * base);
    e >>= 1;
    if (e) base = S(base * base);
  }
  return r;
}

// Symmetric polynomial in n variables, coefficients on monomial symmetric
// functions m_lambda.  No zero coefficients are stored.
template <class S>
struct SymPoly {
  long n = 0;
  std::map<Partition, S> terms;

  friend bool operator==(const SymPoly& a, const SymPoly& b) {
    return a.n == b.n && a.terms == b.terms;
  }
};

// Plain multivariate polynomial in n variables: exponent vector -> coefficient.
template <class S>
struct RawPoly {
  long n = 0;
  std::map<std::vector<long>, S> terms;

  friend bool operator==(const RawPoly& a, const RawPoly& b) {
    return a.n == b.n && a.terms == b.terms;
  }
};

template <class K, class S>
void add_term(std::map<K, S>& terms, const K& key, const S& c) {
  auto it = terms.find(key);
  if (it == terms.end()) {
    if (!is_zero(c)) terms.emplace(key, c);
  } else {
    it->second = S(it->second + c);
    if (is_zero(it->second)) terms.erase(it);
  }
}

template <class S>
SymPoly<S> m_basis(const Partition& lambda, long n) {
  if (lambda.length() != n) throw std::invalid_argument("length mismatch");
  SymPoly<S> p;
  p.n = n;
  p.terms.emplace(lambda, S(1));
  return p;
}

// number of distinct permutations of the parts: n! / prod(multiplicities!)
inline long orbit_size(const Partition& lambda) {
  long total = 1;
  for (long i = 1; i <= lambda.length(); ++i) total *= i;
  long denom = 1;
  long run = 1;
  for (long i = 1; i < lambda.length(); ++i) {
    run = (lambda[i] == lambda[i - 1]) ? run + 1 : 1;
    denom *= run;
  }
  return total / denom;
}

template <class S>
RawPoly<S> expand_raw(const SymPoly<S>& p) {
  RawPoly<S> out;
  out.n = p.n;
  for (const auto& [lambda, c] : p.terms) {
    std::vector<long> v = lambda.parts;
    std::sort(v.begin(), v.end());
    do {
      add_term(out.terms, v, c);
    } while (std::next_permutation(v.begin(), v.end()));
  }
  return out;
}

// Collects a raw polynomial into the m-basis.  Throws if the input is not
// symmetric (orbit coefficients unequal or orbit incomplete).
template <class S>
SymPoly<S> collect_m(const RawPoly<S>& p) {
  SymPoly<S> out;
  out.n = p.n;
  std::map<Partition, long> seen;
  for (const auto& [expo, c] : p.terms) {
    std::vector<long> v = expo;
    std::sort(v.begin(), v.end(), std::greater<long>());
    Partition key(std::move(v));
    auto it = out.terms.find(key);
    if (it == out.terms.end()) {
      out.terms.emplace(key, c);
      seen[key] = 1;
    } else {
      if (!(it->second == c)) {
        throw std::logic_error("raw polynomial is not symmetric");
      }
      ++seen[key];
    }
  }
  for (const auto& [key, cnt] : seen) {
    if (cnt != orbit_size(key)) {
      throw std::logic_error("raw polynomial is not symmetric");
    }
  }
  return out;
}

template <class S>
SymPoly<S> elementary(long r, long n) {
  if (r < 0 || r > n) throw std::invalid_argument("elementary needs 0<=r<=n");
  std::vector<long> parts(static_cast<std::size_t>(n), 0);
  for (long i = 0; i < r; ++i) parts[static_cast<std::size_t>(i)] = 1;
  return m_basis<S>(Partition(std::move(parts)), n);
}

template <class S>
RawPoly<S> raw_mul(const RawPoly<S>& a, const RawPoly<S>& b) {
  if (a.n != b.n) throw std::invalid_argument("variable count mismatch");
  RawPoly<S> out;
  out.n = a.n;
  for (const auto& [ea, ca] : a.terms) {
    for (const auto& [eb, cb] : b.terms) {
      std::vector<long> e = ea;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      add_term(out.terms, e, S(ca * cb));
    }
  }
  return out;
}

template <class S>
SymPoly<S> mul(const SymPoly<S>& a, const SymPoly<S>& b) {
  if (a.n != b.n) throw std::invalid_argument("variable count mismatch");
  return collect_m(raw_mul(expand_raw(a), expand_raw(b)));
}

template <class S>
SymPoly<S> add(const SymPoly<S>& a, const SymPoly<S>& b) {
  if (a.n != b.n) throw std::invalid_argument("variable count mismatch");
  SymPoly<S> out = a;
  for (const auto& [k, c] : b.terms) add_term(out.terms, k, c);
  return out;
}

template <class S>
SymPoly<S> scale(const SymPoly<S>& p, const S& s) {
  SymPoly<S> out;
  out.n = p.n;
  if (is_zero(s)) return out;
  for (const auto& [k, c] : p.terms) {
    S v = S(c * s);
    if (!is_zero(v)) out.terms.emplace(k, std::move(v));
  }
  return out;
}

template <class S>
SymPoly<S> sub(const SymPoly<S>& a, const SymPoly<S>& b) {
  return add(a, scale(b, S(-1)));
}

// product e_1^{a_1} ... e_n^{a_n}
template <class S>
SymPoly<S> E_from_exponents(const std::vector<long>& a, long n) {
  RawPoly<S> acc = expand_raw(m_basis<S>(
      Partition(std::vector<long>(static_cast<std::size_t>(n), 0)), n));
  for (long i = 0; i < n; ++i) {
    const RawPoly<S> e = expand_raw(elementary<S>(i + 1, n));
    for (long rep = 0; rep < a[static_cast<std::size_t>(i)]; ++rep) {
      acc = raw_mul(acc, e);
    }
  }
  return collect_m(acc);
}

// e_1^{lambda_1-lambda_2} e_2^{lambda_2-lambda_3} ... e_n^{lambda_n},
// expanded into the m-basis.
template <class S>
SymPoly<S> E_basis(const Partition& lambda, long n) {
  if (lambda.length() != n) throw std::invalid_argument("length mismatch");
  std::vector<long> expo(static_cast<std::size_t>(n), 0);
  for (long i = 0; i < n; ++i) {
    expo[static_cast<std::size_t>(i)] =
        (i + 1 < n) ? lambda[i] - lambda[i + 1] : lambda[i];
  }
  return E_from_exponents<S>(expo, n);
}

// Unique representation of p as a polynomial in e_1..e_n, as an association
// (exponents of e_1..e_n) -> coefficient.  Triangular elimination: the
// lex-greatest remaining m-term determines the next e-exponent.
template <class S>
std::map<std::vector<long>, S> expand_in_e(const SymPoly<S>& p) {
  std::map<std::vector<long>, S> out;
  std::map<Partition, S> rem = p.terms;
  while (!rem.empty()) {
    const auto top = std::prev(rem.end());
    const Partition lambda = top->first;
    const S c = top->second;
    std::vector<long> a(static_cast<std::size_t>(p.n), 0);
    for (long i = 0; i < p.n; ++i) {
      a[static_cast<std::size_t>(i)] =
          (i + 1 < p.n) ? lambda[i] - lambda[i + 1] : lambda[i];
    }
    out.emplace(a, c);
    const SymPoly<S> e_expanded = E_from_exponents<S>(a, p.n);
    for (const auto& [mu, cm] : e_expanded.terms) {
      add_term(rem, mu, S(S(-1) * c * cm));
    }
  }
  return out;
}

template <class S>
SymPoly<S> from_e_expansion(const std::map<std::vector<long>, S>& e, long n) {
  SymPoly<S> out;
  out.n = n;
  for (const auto& [a, c] : e) {
    for (const auto& [mu, cm] : E_from_exponents<S>(a, n).terms) {
      add_term(out.terms, mu, S(c * cm));
    }
  }
  return out;
}

template <class S>
S evaluate(const RawPoly<S>& p, const std::vector<S>& point) {
  if (static_cast<long>(point.size()) != p.n) {
    throw std::invalid_argument("point length mismatch");
  }
  S acc = S(0);
  for (const auto& [expo, c] : p.terms) {
    S term = c;
    for (std::size_t i = 0; i < expo.size(); ++i) {
      term = S(term * spow(point[i], expo[i]));
    }
    acc = S(acc + term);
  }
  return acc;
}

template <class S>
S evaluate(const SymPoly<S>& p, const std::vector<S>& point) {
  return evaluate(expand_raw(p), point);
}

// m_lambda(1,...,1) is the orbit size, so evaluation at all-ones never needs
// the raw expansion.
template <class S>
S evaluate_at_ones(const SymPoly<S>& p) {
  S acc = S(0);
  for (const auto& [lambda, c] : p.terms) {
    acc = S(acc + c * S(orbit_size(lambda)));
  }
  return acc;
}

// p(x_1,...,x_{n-1}, 0) as a symmetric polynomial in n-1 variables.
template <class S>
SymPoly<S> restrict_last_to_zero(const SymPoly<S>& p) {
  if (p.n < 1) throw std::invalid_argument("needs at least one variable");
  RawPoly<S> out;
  out.n = p.n - 1;
  for (const auto& [expo, c] : expand_raw(p).terms) {
    if (expo.back() != 0) continue;
    out.terms.emplace(std::vector<long>(expo.begin(), expo.end() - 1), c);
  }
  return collect_m(out);
}

// p(x_1,...,x_k, 1, ..., 1) as a raw polynomial in the first k variables.
template <class S>
RawPoly<S> restrict_tail_to_one(const SymPoly<S>& p, long k) {
  if (k < 0 || k > p.n) throw std::invalid_argument("bad variable count");
  RawPoly<S> out;
  out.n = k;
  for (const auto& [expo, c] : expand_raw(p).terms) {
    std::vector<long> head(expo.begin(), expo.begin() + k);
    add_term(out.terms, head, c);
  }
  return out;
}

}  // namespace jacksov
