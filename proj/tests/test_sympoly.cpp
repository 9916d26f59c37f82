#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "jacksov/scalar.hpp"
#include "jacksov/sympoly.hpp"

using namespace jacksov;

namespace {
Partition P(std::vector<long> v) { return Partition(std::move(v)); }
using SP = SymPoly<Rational>;
using RP = RawPoly<Rational>;
}  // namespace

TEST_CASE("m-basis raw expansion") {
  RP m10 = expand_raw(m_basis<Rational>(P({1, 0}), 2));
  REQUIRE(m10.terms.size() == 2);
  REQUIRE(m10.terms.at({1, 0}) == 1);
  REQUIRE(m10.terms.at({0, 1}) == 1);

  RP m11 = expand_raw(m_basis<Rational>(P({1, 1}), 2));
  REQUIRE(m11.terms.size() == 1);
  REQUIRE(m11.terms.at({1, 1}) == 1);

  RP m210 = expand_raw(m_basis<Rational>(P({2, 1, 0}), 3));
  REQUIRE(m210.terms.size() == 6);
}

TEST_CASE("collect_m validates symmetry") {
  RP bad;
  bad.n = 2;
  bad.terms[{1, 0}] = 1;  // orbit partner (0,1) missing
  REQUIRE_THROWS_AS(collect_m(bad), std::logic_error);

  RP bad2;
  bad2.n = 2;
  bad2.terms[{1, 0}] = 1;
  bad2.terms[{0, 1}] = 2;  // unequal orbit coefficients
  REQUIRE_THROWS_AS(collect_m(bad2), std::logic_error);

  SP p = m_basis<Rational>(P({3, 1, 0}), 3);
  REQUIRE(collect_m(expand_raw(p)) == p);
}

TEST_CASE("elementary") {
  REQUIRE(elementary<Rational>(0, 3) ==
          m_basis<Rational>(P({0, 0, 0}), 3));
  REQUIRE(elementary<Rational>(2, 2) == m_basis<Rational>(P({1, 1}), 2));
  REQUIRE(elementary<Rational>(1, 3) == m_basis<Rational>(P({1, 0, 0}), 3));
  REQUIRE_THROWS_AS(elementary<Rational>(3, 2), std::invalid_argument);
}

TEST_CASE("E basis products") {
  SP e1 = E_basis<Rational>(P({1, 0}), 2);
  REQUIRE(e1 == m_basis<Rational>(P({1, 0}), 2));
  SP e2 = E_basis<Rational>(P({1, 1}), 2);
  REQUIRE(e2 == m_basis<Rational>(P({1, 1}), 2));

  SP sq = E_basis<Rational>(P({2, 0}), 2);  // e1^2
  REQUIRE(sq.terms.at(P({2, 0})) == 1);
  REQUIRE(sq.terms.at(P({1, 1})) == 2);
  REQUIRE(sq.terms.size() == 2);
}

TEST_CASE("E basis is dominance-triangular with natural coefficients") {
  for (long n = 2; n <= 3; ++n) {
    for (long w = 0; w <= 5; ++w) {
      for (const auto& lam : enumerate(n, w)) {
        SP e = E_basis<Rational>(lam, n);
        REQUIRE(e.terms.at(lam) == 1);
        for (const auto& [mu, c] : e.terms) {
          REQUIRE(dominance_leq(mu, lam));
          REQUIRE(c > 0);
          REQUIRE(c.get_den() == 1);
        }
      }
    }
  }
}

TEST_CASE("mul") {
  SP one = m_basis<Rational>(P({0, 0}), 2);
  SP m10 = m_basis<Rational>(P({1, 0}), 2);
  REQUIRE(mul(one, m10) == m10);

  SP prod = mul(m10, m10);
  REQUIRE(prod.terms.at(P({2, 0})) == 1);
  REQUIRE(prod.terms.at(P({1, 1})) == 2);

  SP e2 = elementary<Rational>(2, 2);
  REQUIRE(mul(e2, e2) == m_basis<Rational>(P({2, 2}), 2));

  REQUIRE_THROWS_AS(mul(m10, m_basis<Rational>(P({1, 0, 0}), 3)),
                    std::invalid_argument);

  SECTION("commutative, associative, evaluation-compatible") {
    SP a = add(m_basis<Rational>(P({2, 0}), 2),
               scale(m_basis<Rational>(P({1, 1}), 2), Rational(3)));
    SP b = add(m_basis<Rational>(P({1, 0}), 2),
               m_basis<Rational>(P({0, 0}), 2));
    SP c = m_basis<Rational>(P({1, 1}), 2);
    REQUIRE(mul(a, b) == mul(b, a));
    REQUIRE(mul(mul(a, b), c) == mul(a, mul(b, c)));
    const std::vector<Rational> pt{Rational(2), Rational(-3)};
    REQUIRE(evaluate(mul(a, b), pt) ==
            Rational(evaluate(a, pt) * evaluate(b, pt)));
  }
}

TEST_CASE("expand_in_e") {
  SP m11 = m_basis<Rational>(P({1, 1}), 2);
  auto e11 = expand_in_e(m11);
  REQUIRE(e11.size() == 1);
  REQUIRE(e11.at({0, 1}) == 1);

  SP m20 = m_basis<Rational>(P({2, 0}), 2);
  auto e20 = expand_in_e(m20);
  REQUIRE(e20.size() == 2);
  REQUIRE(e20.at({2, 0}) == 1);
  REQUIRE(e20.at({0, 1}) == -2);

  SP one = m_basis<Rational>(P({0, 0, 0}), 3);
  auto eone = expand_in_e(one);
  REQUIRE(eone.size() == 1);
  REQUIRE(eone.at({0, 0, 0}) == 1);

  SECTION("round trip on all m_lambda") {
    for (long n = 2; n <= 4; ++n) {
      for (long w = 0; w <= 6; ++w) {
        for (const auto& lam : enumerate(n, w)) {
          SP p = m_basis<Rational>(lam, n);
          REQUIRE(from_e_expansion(expand_in_e(p), n) == p);
        }
      }
    }
  }
}

TEST_CASE("evaluate") {
  SP m10 = m_basis<Rational>(P({1, 0}), 2);
  REQUIRE(evaluate(m10, {Rational(1), Rational(1)}) == 2);
  REQUIRE(evaluate_at_ones(m10) == 2);

  // m_(1,1) at (z, 1) -> z, checked over the z-polynomial ring
  using ZP = Poly<Rational>;
  SymPoly<ZP> m11z;
  m11z.n = 2;
  m11z.terms.emplace(P({1, 1}), ZP(1));
  REQUIRE(evaluate(m11z, {ZP::var(), ZP(1)}) == ZP::var());

  SP e2 = elementary<Rational>(2, 2);
  REQUIRE(evaluate(e2, {Rational(3), Rational(4)}) == 12);
}

TEST_CASE("restrict_tail_to_one") {
  SP m10 = m_basis<Rational>(P({1, 0}), 2);
  RP r = restrict_tail_to_one(m10, 1);
  REQUIRE(r.n == 1);
  REQUIRE(r.terms.at({1}) == 1);
  REQUIRE(r.terms.at({0}) == 1);  // x1 + 1

  SP m11 = m_basis<Rational>(P({1, 1}), 2);
  RP full = restrict_tail_to_one(m11, 2);
  REQUIRE(full == expand_raw(m11));
  RP none = restrict_tail_to_one(m11, 0);
  REQUIRE(none.terms.at(std::vector<long>{}) == 1);
  REQUIRE_THROWS_AS(restrict_tail_to_one(m11, 3), std::invalid_argument);
}
