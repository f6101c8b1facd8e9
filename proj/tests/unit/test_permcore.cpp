#include <array>
#include <map>
#include <sstream>

#include "doctest.h"
#include "test_util.hpp"
#include "twinperm/text_format.hpp"

using namespace twinperm;

TEST_CASE("reduce maps to ranks 1..n") {
  CHECK(reduce(std::vector<Value>{12, 6, 7}).values().size() == 3);
  const Pattern p = reduce(std::vector<Value>{12, 6, 7});
  CHECK(std::vector<Value>(p.values().begin(), p.values().end()) == std::vector<Value>{3, 1, 2});
  const Pattern q = reduce(std::vector<Value>{-5, 40, 0, 3});
  CHECK(std::vector<Value>(q.values().begin(), q.values().end()) ==
        std::vector<Value>{1, 4, 2, 3});
  CHECK(reduce(std::vector<Value>{}).size() == 0);
}

TEST_CASE("reduce agrees with the quadratic order type") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Permutation p = random_permutation(1 + seed % 17, seed);
    const Pattern r = reduce(p);
    const oracle::Seq t = oracle::order_type(testutil::seq(p));
    for (std::size_t i = 0; i < p.size(); ++i) CHECK(r[i] == t[i] + 1);
  }
}

TEST_CASE("similarity") {
  CHECK(is_similar(Permutation{2, 1, 3}, Permutation{5, 4, 8}));
  CHECK(is_similar(Permutation{15, 7, 17}, Permutation{12, 9, 16}));
  CHECK_FALSE(is_similar(Permutation{1, 2}, Permutation{2, 1}));
  CHECK_FALSE(is_similar(Permutation{1, 2}, Permutation{1, 2, 3}));
}

TEST_CASE("permutation construction rejects duplicates") {
  CHECK_THROWS_AS(Permutation({1, 2, 2}), InvalidInput);
  CHECK(Permutation{3, 1, 2}.is_canonical());
  CHECK_FALSE(Permutation{0, 1, 2}.is_canonical());
  CHECK_THROWS_AS(Permutation({1, 5}).require_canonical("x"), InvalidInput);
  CHECK_THROWS_AS(Pattern::from_values({1, 3}), InvalidInput);
}

TEST_CASE("symmetries form the Klein group") {
  const Permutation p{2, 4, 1, 3, 5};
  CHECK(apply_symmetry(p, Symmetry::reverse) == Permutation{5, 3, 1, 4, 2});
  CHECK(apply_symmetry(p, Symmetry::complement) == Permutation{4, 2, 5, 3, 1});
  for (Symmetry a : kAllSymmetries) {
    CHECK(apply_symmetry(apply_symmetry(p, a), a) == p);
    for (Symmetry b : kAllSymmetries) {
      CHECK(apply_symmetry(apply_symmetry(p, a), b) == apply_symmetry(p, compose(a, b)));
    }
  }
  CHECK(map_position(2, 5, Symmetry::reverse) == 4);
  CHECK(map_position(2, 5, Symmetry::complement) == 2);
  CHECK(symmetry_name(Symmetry::reverse_complement) == "reverse-complement");
}

TEST_CASE("text format") {
  auto p = parse_permutation_line("12,6,7,2 5 4");
  REQUIRE(p);
  CHECK(*p == Permutation{12, 6, 7, 2, 5, 4});
  CHECK_FALSE(parse_permutation_line("   "));
  CHECK_FALSE(parse_permutation_line("# comment"));
  CHECK_THROWS_AS(parse_permutation_line("1,,2"), InvalidInput);
  CHECK_THROWS_AS(parse_permutation_line("1,2,"), InvalidInput);
  CHECK_THROWS_AS(parse_permutation_line("1 x"), InvalidInput);
  CHECK_THROWS_AS(parse_permutation_line("1 1"), InvalidInput);

  std::istringstream in("1 2 3\n\n# skip\n3,1,2\n");
  const auto all = parse_permutations(in);
  REQUIRE(all.size() == 2);
  CHECK(format_permutation(all[1]) == "3 1 2");
}

TEST_CASE("random permutations are reproducible and canonical") {
  CHECK(random_permutation(50, 9) == random_permutation(50, 9));
  CHECK_FALSE(random_permutation(50, 9) == random_permutation(50, 10));
  CHECK(random_permutation(200, 1).is_canonical());
  CHECK_THROWS_AS(random_permutation(0, 1), InvalidInput);
  CHECK(derive_seed(1, 2) != derive_seed(1, 3));
  CHECK(derive_seed(1, 2) != derive_seed(2, 2));
}

TEST_CASE("random permutations of length 3 are close to uniform") {
  std::map<std::vector<Value>, int> freq;
  const int trials = 60000;
  for (int i = 0; i < trials; ++i) {
    const Permutation p = random_permutation(3, derive_seed(77, static_cast<std::uint64_t>(i)));
    ++freq[std::vector<Value>(p.values().begin(), p.values().end())];
  }
  REQUIRE(freq.size() == 6);
  // Chi-square with 5 degrees of freedom; 20.5 is the 0.999 quantile.
  double chi2 = 0;
  for (const auto& [k, c] : freq) {
    const double e = trials / 6.0;
    chi2 += (c - e) * (c - e) / e;
  }
  CHECK(chi2 < 20.5);
}
