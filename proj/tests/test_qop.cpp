#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "jacksov/qop.hpp"

using namespace jacksov;

namespace {
Partition P(std::vector<long> v) { return Partition(std::move(v)); }
const RatFunc G = RatFunc::g();

RatFunc rf(long num) { return RatFunc(num); }

// one-variable RawPoly -> polynomial in that variable
template <class S>
Poly<S> as_univariate(const RawPoly<S>& r) {
  Poly<S> out;
  for (const auto& [expo, c] : r.terms) {
    out += Poly<S>(c).times_power(expo.at(0));
  }
  return out;
}
}  // namespace

TEST_CASE("qz_apply basics") {
  SECTION("constants are fixed") {
    auto img = qz_apply(m_basis<RatFunc>(P({0, 0}), 2), G);
    REQUIRE(img.degree_z() == 0);
    REQUIRE(img.coeffs[0] == m_basis<RatFunc>(P({0, 0}), 2));
  }
  SECTION("first elementary, two variables") {
    auto img = qz_apply(elementary<RatFunc>(1, 2), G);
    const auto half = RatFunc(Rational(1, 2));
    REQUIRE(img.degree_z() == 1);
    REQUIRE(img.coeffs[0] == scale(elementary<RatFunc>(1, 2), half));
    REQUIRE(img.coeffs[1] == scale(elementary<RatFunc>(1, 2), half));
  }
  SECTION("top elementary is multiplied by z") {
    for (long n = 2; n <= 3; ++n) {
      auto img = qz_apply(elementary<RatFunc>(n, n), G);
      REQUIRE(img.degree_z() == 1);
      REQUIRE(img.coeffs[0].terms.empty());
      REQUIRE(img.coeffs[1] == elementary<RatFunc>(n, n));
    }
  }
  SECTION("z-degree bounded by input degree") {
    for (const auto& lam : {P({2, 1, 0}), P({3, 0, 0}), P({2, 2, 1})}) {
      auto img = qz_apply(m_basis<RatFunc>(lam, 3), G);
      REQUIRE(img.degree_z() <= weight(lam));
    }
  }
}

TEST_CASE("q_eigenvalue_sum worked examples") {
  REQUIRE(q_eigenvalue_sum(P({0, 0}), 2, G) == ZPoly<RatFunc>(1));
  const auto half = RatFunc(Rational(1, 2));
  ZPoly<RatFunc> expect10(std::vector<RatFunc>{half, half});
  REQUIRE(q_eigenvalue_sum(P({1, 0}), 2, G) == expect10);
  REQUIRE(q_eigenvalue_sum(P({1, 1}), 2, G) == ZPoly<RatFunc>::var());
}

TEST_CASE("beta_lambda") {
  REQUIRE(beta_lambda(P({3, 3, 3}), 3, G) == rf(1));
  REQUIRE(beta_lambda(P({1, 0}), 2, G) == rf(2));
  // 3(3g+1)/(2g+1)
  RatFunc expect(GPoly(std::vector<Rational>{3, 9}),
                 GPoly(std::vector<Rational>{1, 2}));
  REQUIRE(beta_lambda(P({2, 1, 0}), 3, G) == expect);
}

TEST_CASE("f_polynomial worked examples and proportionality") {
  REQUIRE(f_polynomial(P({0, 0}), 2, G) == ZPoly<RatFunc>(1));
  ZPoly<RatFunc> expect10(std::vector<RatFunc>{rf(1), rf(1)});
  REQUIRE(f_polynomial(P({1, 0}), 2, G) == expect10);
  REQUIRE(f_polynomial(P({1, 1}), 2, G) == ZPoly<RatFunc>::var());

  for (long n = 2; n <= 3; ++n) {
    for (long w = 0; w <= 4; ++w) {
      for (const auto& lam : enumerate(n, w)) {
        REQUIRE(f_polynomial(lam, n, G) ==
                q_eigenvalue_sum(lam, n, G) * beta_lambda(lam, n, G));
      }
    }
  }
}

TEST_CASE("hypergeom_params") {
  auto par = hypergeom_params(P({1, 0}), 2, G);
  REQUIRE(par.a.size() == 2);
  REQUIRE(par.b.size() == 1);
  REQUIRE(par.a[0] == rf(-2) * G);
  REQUIRE(par.a[1] == rf(1) - G);
  REQUIRE(par.b[0] == rf(0) - G);

  auto zero = hypergeom_params(P({0, 0, 0}), 3, G);
  for (long i = 0; i < 3; ++i) {
    REQUIRE(zero.a[static_cast<std::size_t>(i)] ==
            rf(1) - rf(3 - i) * G);
  }
  for (std::size_t i = 0; i < zero.b.size(); ++i) {
    REQUIRE(zero.b[i] - zero.a[i] == G);
  }
}

TEST_CASE("jack polynomials are eigenfunctions of Q_z") {
  SECTION("symbolic coupling") {
    JackTable<RatFunc> table(G);
    for (long n = 2; n <= 3; ++n) {
      for (long w = 0; w <= 4; ++w) {
        for (const auto& lam : enumerate(n, w)) {
          const auto& jx = table.jack(lam).poly;
          REQUIRE(qz_apply(jx, G) ==
                  separated_product(q_eigenvalue_sum(lam, n, G), jx));
        }
      }
    }
  }
  SECTION("numeric coupling") {
    const Rational g0(2);
    JackTable<Rational> table(g0);
    for (const auto& lam : {P({3, 2, 0}), P({4, 1, 1}), P({2, 2, 2})}) {
      const auto& jx = table.jack(lam).poly;
      REQUIRE(qz_apply(jx, g0) ==
              separated_product(q_eigenvalue_sum(lam, 3, g0), jx));
    }
  }
}

TEST_CASE("commutation with multiplication by the top elementary") {
  const long n = 2;
  for (long w = 0; w <= 3; ++w) {
    for (const auto& lam : enumerate(n, w)) {
      SymPoly<RatFunc> p = m_basis<RatFunc>(lam, n);
      SymPoly<RatFunc> enp = mul(elementary<RatFunc>(n, n), p);
      REQUIRE(qz_apply(enp, G) ==
              shift_z(mul_each(qz_apply(p, G), elementary<RatFunc>(n, n))));
    }
  }
}

TEST_CASE("triangularity of Q_z on elementary products") {
  for (long n = 2; n <= 3; ++n) {
    for (long w = 0; w <= 4; ++w) {
      for (const auto& lam : enumerate(n, w)) {
        const auto ls = lower_set(lam);
        auto img = qz_apply(E_basis<RatFunc>(lam, n), G);
        for (const auto& zc : img.coeffs) {
          for (const auto& [mu, c] : zc.terms) {
            REQUIRE(std::find(ls.begin(), ls.end(), mu) != ls.end());
          }
        }
      }
    }
  }
}

TEST_CASE("restricted jack at x1=z reproduces the eigenvalue") {
  JackTable<RatFunc> table(G);
  for (long n = 2; n <= 3; ++n) {
    for (long w = 0; w <= 4; ++w) {
      for (const auto& lam : enumerate(n, w)) {
        Poly<RatFunc> restricted =
            as_univariate(restricted_jack(table, lam, 1));
        RatFunc inv_c = RatFunc(1) / eval_at_ones(lam, n, G);
        REQUIRE(q_eigenvalue_sum(lam, n, G) == restricted * inv_c);
      }
    }
  }
}

TEST_CASE("small-z leading behaviour") {
  for (long n = 2; n <= 3; ++n) {
    for (long w = 0; w <= 4; ++w) {
      for (const auto& lam : enumerate(n, w)) {
        const auto q = q_eigenvalue_sum(lam, n, G);
        const long bottom = lam[n - 1];
        for (long d = 0; d < bottom; ++d) REQUIRE(is_zero(q.coeff(d)));
        REQUIRE(q.coeff(bottom) == RatFunc(1) / beta_lambda(lam, n, G));
      }
    }
  }
}

TEST_CASE("separation ODE residual vanishes") {
  for (const RatFunc& r : baxter_residual(P({0, 0}), 2, 10L, G)) {
    REQUIRE(is_zero(r));
  }
  for (const RatFunc& r : baxter_residual(P({1, 0}), 2, 15L, G)) {
    REQUIRE(is_zero(r));
  }
  for (const RatFunc& r : baxter_residual(P({2, 1}), 2, 15L, G)) {
    REQUIRE(is_zero(r));
  }
  SECTION("default truncation") {
    for (const RatFunc& r : baxter_residual(P({2, 1, 0}), 3, G)) {
      REQUIRE(is_zero(r));
    }
  }
  SECTION("numeric coupling") {
    for (const Rational& r :
         baxter_residual(P({3, 1}), 2, 20L, Rational(1, 2))) {
      REQUIRE(is_zero(r));
    }
  }
}
