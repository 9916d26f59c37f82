#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "jacksov/partition.hpp"

using namespace jacksov;

namespace {
Partition P(std::vector<long> v) { return Partition(std::move(v)); }
}  // namespace

TEST_CASE("weight") {
  REQUIRE(weight(P({0, 0, 0})) == 0);
  REQUIRE(weight(P({2, 1, 0})) == 3);
  REQUIRE(weight(P({6, 6, 2, 0})) == 14);
}

TEST_CASE("partition validation") {
  REQUIRE_THROWS_AS(P({1, 2}), std::invalid_argument);
  REQUIRE_THROWS_AS(P({1, -1}), std::invalid_argument);
}

TEST_CASE("dominance") {
  REQUIRE(dominance_leq(P({1, 1}), P({2, 0})));
  REQUIRE_FALSE(dominance_leq(P({2, 0}), P({1, 1})));
  REQUIRE_FALSE(dominance_leq(P({1, 0}), P({2, 0})));  // weights differ
  REQUIRE_THROWS_AS(dominance_leq(P({1, 0}), P({1, 0, 0})),
                    std::invalid_argument);

  SECTION("partial order axioms") {
    for (long n = 1; n <= 4; ++n) {
      for (long w = 0; w <= 8; ++w) {
        const auto all = enumerate(n, w);
        for (const auto& a : all) {
          REQUIRE(dominance_leq(a, a));
          for (const auto& b : all) {
            if (dominance_leq(a, b) && dominance_leq(b, a)) REQUIRE(a == b);
            for (const auto& c : all) {
              if (dominance_leq(a, b) && dominance_leq(b, c)) {
                REQUIRE(dominance_leq(a, c));
              }
            }
          }
        }
      }
    }
  }
}

TEST_CASE("enumerate") {
  REQUIRE(enumerate(2, 2) == std::vector<Partition>{P({2, 0}), P({1, 1})});
  REQUIRE(enumerate(3, 0) == std::vector<Partition>{P({0, 0, 0})});
  REQUIRE(enumerate(2, 3) == std::vector<Partition>{P({3, 0}), P({2, 1})});
  REQUIRE(enumerate(3, 6).size() == 7);
  REQUIRE(enumerate(4, 8).size() == 15);

  SECTION("reverse-lexicographic order, no duplicates") {
    const auto all = enumerate(4, 7);
    for (std::size_t i = 0; i + 1 < all.size(); ++i) {
      REQUIRE(all[i] > all[i + 1]);
    }
  }
  SECTION("unique dominance minimum when w <= n") {
    for (long n = 1; n <= 4; ++n) {
      for (long w = 0; w <= n; ++w) {
        std::vector<long> bottom(static_cast<std::size_t>(n), 0);
        for (long i = 0; i < w; ++i) bottom[static_cast<std::size_t>(i)] = 1;
        const Partition min_p(bottom);
        for (const auto& mu : enumerate(n, w)) {
          REQUIRE(dominance_leq(min_p, mu));
          if (mu != min_p) REQUIRE_FALSE(dominance_leq(mu, min_p));
        }
      }
    }
  }
}

TEST_CASE("lower_set") {
  REQUIRE(lower_set(P({1, 0})) == std::vector<Partition>{P({1, 0})});
  REQUIRE(lower_set(P({2, 0})) ==
          std::vector<Partition>{P({2, 0}), P({1, 1})});
  REQUIRE(lower_set(P({2, 1, 0})) ==
          std::vector<Partition>{P({2, 1, 0}), P({1, 1, 1})});
  REQUIRE(lower_set(P({3, 1, 0})) ==
          std::vector<Partition>{P({3, 1, 0}), P({2, 2, 0}), P({2, 1, 1})});

  SECTION("lambda first, then strictly decreasing") {
    const Partition lam = P({4, 2, 1, 0});
    const auto ls = lower_set(lam);
    REQUIRE(ls.front() == lam);
    for (std::size_t i = 0; i + 1 < ls.size(); ++i) REQUIRE(ls[i] > ls[i + 1]);
    for (const auto& mu : ls) REQUIRE(dominance_leq(mu, lam));
  }
}

TEST_CASE("flat_and_natural") {
  auto [flat, nat] = flat_and_natural(P({3, 2, 1}));
  REQUIRE(flat == P({2, 1, 0}));
  REQUIRE(nat == P({2, 1}));

  auto [flat2, nat2] = flat_and_natural(P({2, 2}));
  REQUIRE(flat2 == P({0, 0}));
  REQUIRE(nat2 == P({0}));

  auto [flat3, nat3] = flat_and_natural(P({5, 0}));
  REQUIRE(flat3 == P({5, 0}));
  REQUIRE(nat3 == P({5}));

  REQUIRE_THROWS_AS(flat_and_natural(P({3})), std::invalid_argument);
}
