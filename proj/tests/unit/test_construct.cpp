#include "doctest.h"
#include "test_util.hpp"
#include "twinperm/construct.hpp"
#include "twinperm/detect.hpp"

using namespace twinperm;

TEST_CASE("pi-k literal values") {
  CHECK(build_pi_k(2, 12) == Permutation{4, 5, 6, 9, 8, 7, 1, 2, 3, 12, 11, 10});
  CHECK(build_pi_k(2, 3) == Permutation{1, 2, 3});  // reduced (-3,-2,-1)
  CHECK(build_pi_rk(2, 2, 12) == build_pi_k(2, 12));
  CHECK(alternating_blocks_raw(3, 6) == Permutation{-3, -2, -1, 6, 5, 4});
  CHECK_THROWS_AS(build_pi_k(2, 7), InvalidInput);
  CHECK_THROWS_AS(build_pi_k(1, 3), InvalidInput);
  CHECK_THROWS_AS(build_pi_rk(3, 1, 2), InvalidInput);
}

TEST_CASE("pi-k avoids tight 2-twins of length 2k-1 and 2k") {
  for (std::size_t k = 2; k <= 4; ++k) {
    const std::size_t block = 2 * k - 1;
    for (std::size_t n = block; n <= 8 * block; n += block) {
      const Permutation p = build_pi_k(k, n);
      CHECK(p.is_canonical());
      CHECK(p.size() == n);
      CHECK_FALSE(detect_tight(p, 2, 2 * k - 1).found);
      CHECK_FALSE(detect_tight(p, 2, 2 * k).found);
    }
  }
}

TEST_CASE("pi-rk avoids tight r-twins of length 2k-1 and 2k") {
  const std::pair<std::size_t, std::size_t> cases[] = {{3, 2}, {3, 3}, {4, 2}};
  for (auto [r, k] : cases) {
    const std::size_t block = r * k - 1;
    for (std::size_t n = block; n <= 6 * block; n += block) {
      const Permutation p = build_pi_rk(r, k, n);
      CHECK(p.is_canonical());
      CHECK_FALSE(detect_tight(p, r, 2 * k - 1).found);
      CHECK_FALSE(detect_tight(p, r, 2 * k).found);
    }
  }
}

TEST_CASE("quadratic family") {
  CHECK(build_quadratic(3) == Permutation{11, 2, 3, 8, 7, 6, 5, 4, 9, 10, 1});
  CHECK(build_quadratic(4) == Permutation{1, 22, 3, 20, 19, 6, 7, 8, 15, 14, 13, 12,
                                          11, 10, 9, 16, 17, 18, 5, 4, 21, 2, 23});
  CHECK(build_quadratic(5) == Permutation{37, 2, 35, 4, 33, 6, 7, 30, 29, 28, 11, 12, 13,
                                          14, 23, 22, 21, 20, 19, 18, 17, 16, 15, 24, 25,
                                          26, 27, 10, 9, 8, 31, 32, 5, 34, 3, 36, 1});
  for (std::size_t r = 3; r <= 12; ++r) {
    const Permutation p = build_quadratic(r);
    CHECK(p.size() == r * (r + 5) - 13);
    CHECK(p.is_canonical());
  }
  for (std::size_t r = 3; r <= 5; ++r) CHECK_FALSE(detect_tight(build_quadratic(r), r, 2).found);
  CHECK_THROWS_AS(build_quadratic(2), InvalidInput);
}

TEST_CASE("small witnesses") {
  CHECK(build_small_witness("pi2") == Permutation{1, 4, 3, 2, 5});
  CHECK_FALSE(detect_tight(build_small_witness("pi2"), 2, 2).found);
  CHECK_FALSE(detect_tight(build_small_witness("pi3"), 3, 2).found);
  CHECK(small_witness_names().size() == 7);
  for (const auto& name : small_witness_names()) CHECK(build_small_witness(name).is_canonical());
  CHECK_THROWS_AS(build_small_witness("pi9"), InvalidInput);
}

TEST_CASE("alternating shape and block r_max") {
  CHECK(build_alternating(3) == Permutation{1, 2, 3});
  for (std::size_t n = 1; n <= 20; ++n) {
    const Permutation p = build_alternating(n);
    REQUIRE(p.is_canonical());
    for (std::size_t i = 1; i < n; ++i) {
      // 1-based i: ascent unless i mod 4 is 3 or 0.
      const bool up = i % 4 == 1 || i % 4 == 2;
      CHECK((p[i - 1] < p[i]) == up);
    }
    if (n >= 2) CHECK(r_max(p, 2, TwinKind::block).r_max == (n + 2) / 4);
  }
  CHECK(r_max(build_alternating(6), 2, TwinKind::block).r_max == 2);
  CHECK(r_max(build_alternating(10), 2, TwinKind::block).r_max == 3);
}

TEST_CASE("avoider for a given length") {
  for (std::size_t r = 2; r <= 3; ++r) {
    for (std::size_t ell = 3; ell <= 6; ++ell) {
      const Permutation p = avoider_for_length(r, ell, 40);
      CHECK(p.size() == 40);
      CHECK(p.is_canonical());
      CHECK_FALSE(detect_tight(p, r, ell).found);
    }
  }
  CHECK_THROWS_AS(avoider_for_length(2, 2, 10), InvalidInput);
}

TEST_CASE("build dispatch") {
  ConstructionSpec s;
  s.family = "pi-k";
  s.k = 2;
  s.n = 12;
  CHECK(build(s) == build_pi_k(2, 12));
  s.family = "intro-example";
  s.name = "intro-block4";
  CHECK(build(s).size() == 18);
  s.family = "pi-rk";
  CHECK_THROWS_AS(build(s), InvalidInput);
  s.family = "nope";
  CHECK_THROWS_AS(build(s), InvalidInput);
}
