#include <catch2/catch_amalgamated.hpp>

#include <string>
#include <vector>

#include "jacksov/jack.hpp"
#include "jacksov/json_io.hpp"
#include "jacksov/qop.hpp"
#include "jacksov/sov.hpp"
#include "jacksov/sympoly.hpp"
#include "jacksov/verify.hpp"

using namespace jacksov;

namespace {
const RatFunc G = RatFunc::g();

template <class T, class Parse>
void roundtrip(const T& x, Parse&& parse) {
  const Json j = Json::parse(json_of(x).dump());
  REQUIRE(parse(j) == x);
}
}  // namespace

TEST_CASE("scalar serialization round-trips") {
  for (const Rational& a :
       {Rational(0), Rational(7), Rational(-3, 4), Rational(22, 7)}) {
    roundtrip(a, JsonScalar<Rational>::parse);
  }
  const RatFunc vals[] = {RatFunc(0), RatFunc(5), G,
                          field_div(pochhammer(G, 3), RatFunc(G + RatFunc(2))),
                          RatFunc(1) / (G * G - RatFunc(4))};
  for (const RatFunc& f : vals) {
    roundtrip(f, JsonScalar<RatFunc>::parse);
  }
  // a plain rational is accepted as a constant coupling function
  REQUIRE(JsonScalar<RatFunc>::parse(Json("3/2")) == RatFunc(Rational(3, 2)));
}

TEST_CASE("partition serialization round-trips") {
  for (const auto& parts : std::vector<std::vector<long>>{
           {}, {3}, {2, 1, 0}, {4, 4, 1, 0}}) {
    roundtrip(Partition(std::vector<long>(parts)), partition_from_json);
  }
  REQUIRE(json_of(Partition({2, 1, 0})).dump() == "[2,1,0]");
}

TEST_CASE("symmetric polynomial serialization round-trips") {
  JackTable<RatFunc> table(G);
  for (long n = 1; n <= 3; ++n) {
    for (long w = 0; w <= 4; ++w) {
      for (const Partition& lam : enumerate(n, w)) {
        roundtrip(table.jack(lam).poly, sympoly_from_json<RatFunc>);
        const auto back =
            jack_from_json<RatFunc>(Json::parse(json_of(table.jack(lam)).dump()));
        REQUIRE(back.lambda == lam);
        REQUIRE(back.n == n);
        REQUIRE(back.poly == table.jack(lam).poly);
      }
    }
  }
  JackTable<Rational> tq(Rational(2, 3));
  roundtrip(tq.jack(Partition({3, 1, 0})).poly, sympoly_from_json<Rational>);
  CHECK_THROWS(sympoly_from_json<Rational>(Json{{"n", 2}, {"terms", "x"}}));
}

TEST_CASE("spectral polynomial serialization round-trips") {
  {
    const auto q = q_eigenvalue_sum(Partition({2, 1, 0}), 3, G);
    REQUIRE(zpoly_from_json<RatFunc>(Json::parse(json_of_zpoly(q).dump())) == q);
  }
  {
    const auto q = q_eigenvalue_sum(Partition({2, 0}), 2, Rational(3));
    REQUIRE(zpoly_from_json<Rational>(Json::parse(json_of_zpoly(q).dump())) ==
            q);
  }
  JackTable<RatFunc> table(G);
  roundtrip(qz_apply(table.jack(Partition({2, 1})).poly, G),
            symzpoly_from_json<RatFunc>);
  roundtrip(separate_via_q(table.jack(Partition({2, 1, 0})).poly, 3, G),
            multizpoly_from_json<RatFunc>);
  JackTable<Rational> tq(Rational(1, 2));
  roundtrip(separate_via_q(tq.jack(Partition({2, 0})).poly, 2, Rational(1, 2)),
            multizpoly_from_json<Rational>);
}

TEST_CASE("monomial keys are canonicalised on parse") {
  const Json j{{"terms",
                Json::array({Json{{"monomial",
                                   Json::array({Json::array({2, 1}),
                                                Json::array({1, 2}),
                                                Json::array({2, 3})})},
                                  {"coeff", "5/1"}}})}};
  const auto q = multizpoly_from_json<Rational>(j);
  MultiZPoly<Rational> expect;
  expect.terms.emplace(
      MultiZPoly<Rational>::Key{{1, 2}, {2, 4}}, Rational(5));
  REQUIRE(q == expect);
}

TEST_CASE("quadrature report serialization round-trips doubles exactly") {
  QuadReport r;
  r.computed = 1.0 / 3.0;
  r.expected = 0.1;
  r.relative_error = 2.220446049250313e-16;
  r.evaluations = 262144;
  const Json j = Json::parse(json_of(r).dump());
  const QuadReport back = quadreport_from_json(j);
  REQUIRE(back.computed == r.computed);
  REQUIRE(back.expected == r.expected);
  REQUIRE(back.relative_error == r.relative_error);
  REQUIRE(back.evaluations == r.evaluations);
}

TEST_CASE("verify report serializes its failures") {
  VerifyReport r;
  r.suite = "demo";
  r.g_mode = "symbolic";
  r.cases = 3;
  r.failures.push_back({"n=2 lambda=[1,0]", "a", "b"});
  const Json j = json_of(r);
  REQUIRE(j.at("suite") == "demo");
  REQUIRE(j.at("failures").size() == 1);
  REQUIRE(j.at("failures")[0].at("case") == "n=2 lambda=[1,0]");
}
