#include <cmath>

#include "doctest.h"
#include "test_util.hpp"
#include "twinperm/matching.hpp"
#include "twinperm/montecarlo.hpp"

using namespace twinperm;

TEST_CASE("exact twin probability on fixed positions") {
  const Eq1Result a = check_eq1(4, 2, 2, {{1, 2}, {3, 4}});
  CHECK(a.exact == Rational{1, 2});
  CHECK(a.count == 12);
  CHECK(a.total == 24);
  CHECK(a.matches);
  const Eq1Result b = check_eq1(6, 3, 2, {{1, 2}, {3, 4}, {5, 6}});
  CHECK(b.exact == Rational{1, 4});
  CHECK(b.theoretical == Rational{1, 4});
  const Eq1Result c = check_eq1(6, 2, 3, {{1, 3, 5}, {2, 4, 6}});
  CHECK(c.exact == Rational{1, 6});
  CHECK(c.count == oracle::count_twins_on(6, {{1, 3, 5}, {2, 4, 6}}));
  CHECK_THROWS_AS(check_eq1(4, 2, 2, {{1, 2}, {2, 3}}), InvalidInput);
  CHECK_THROWS_AS(check_eq1(9, 2, 2, {{1, 2}, {3, 4}}), ResourceLimit);
  CHECK_THROWS_AS(check_eq1(4, 2, 2, {{1, 2}}), InvalidInput);
}

TEST_CASE("independence of disjoint families") {
  const IndependenceResult a = check_independence(8, 2, 2, {{1, 2}, {3, 4}}, {{5, 6}, {7, 8}});
  CHECK(a.lhs == Rational{1, 4});
  CHECK(a.rhs == Rational{1, 4});
  CHECK(a.equal);
  const IndependenceResult b = check_independence(8, 2, 2, {{1, 3}, {5, 7}}, {{2, 4}, {6, 8}});
  CHECK(b.lhs == Rational{1, 4});
  CHECK(b.equal);
  CHECK_THROWS_AS(check_independence(4, 2, 2, {{1, 2}, {3, 4}}, {{1, 3}, {2, 4}}), InvalidInput);
}

TEST_CASE("rationals") {
  CHECK(Rational::of(12, 24) == Rational{1, 2});
  CHECK((Rational{1, 6} * Rational{3, 4}) == Rational{1, 8});
  CHECK(Rational{3, 8}.str() == "3/8");
  CHECK_THROWS_AS(Rational::of(1, 0), InvalidInput);
}

TEST_CASE("summaries") {
  const TrialStats s = summarize(Statistic::bt_len, 100, 2, 7, {4, 1, 3, 2, 5});
  CHECK(s.trials == 5);
  CHECK(s.mean == doctest::Approx(3.0));
  CHECK(s.variance == doctest::Approx(2.5));
  CHECK(s.min == 1);
  CHECK(s.max == 5);
  CHECK(s.q50 == doctest::Approx(3.0));
  CHECK(s.q05 == doctest::Approx(1.2));
  CHECK(s.q95 == doctest::Approx(4.8));
  CHECK(summarize(Statistic::bt_len, 100, 2, 7, {3}).variance == 0.0);
  CHECK_THROWS_AS(summarize(Statistic::bt_len, 100, 2, 7, {}), InvalidInput);
}

TEST_CASE("reference values use natural logarithms") {
  const double n = 1000;
  const double base = std::log(n) / std::log(std::log(n));
  CHECK(reference_value(Statistic::bt_len, 1000, 2) == doctest::Approx(2 * base));
  CHECK(reference_value(Statistic::bt_len, 1000, 3) == doctest::Approx(1.5 * base));
  CHECK(reference_value(Statistic::tt_len, 1000, 3) == doctest::Approx(base / 2));
  CHECK(reference_value(Statistic::btt_len, 1000, 2) == doctest::Approx(base));
}

TEST_CASE("tight length cap is a valid tail bound") {
  // Direct evaluation of the first-moment tail above the cap.
  const auto log_e = [](double n, double r, double k) {
    return std::log(n - r * k + 1) + std::lgamma(r * k + 1) - std::lgamma(r + 1) -
           (2 * r - 1) * std::lgamma(k + 1);
  };
  for (std::size_t n : {100, 1000, 10000}) {
    for (std::size_t r : {2, 3}) {
      for (double eps : {1e-3, 1e-9}) {
        const std::size_t cap = tight_length_cap(n, r, eps);
        double tail = 0;
        for (std::size_t k = cap + 1; k <= n / r; ++k) {
          tail += std::exp(log_e(double(n), double(r), double(k)));
        }
        CHECK(tail <= eps);
        CHECK(tail + std::exp(log_e(double(n), double(r), double(cap))) > eps);
      }
    }
  }
}

TEST_CASE("sampling is reproducible across worker counts") {
  for (Statistic s : {Statistic::bt_len, Statistic::tt_len, Statistic::btt_len,
                      Statistic::match2_success}) {
    EstimateOptions one;
    EstimateOptions four;
    four.workers = 4;
    const auto a = sample_stat(s, 60, 2, 12, 99, one);
    const auto b = sample_stat(s, 60, 2, 12, 99, four);
    CHECK(a == b);
  }
  const TrialStats x = estimate_stat(Statistic::bt_len, 200, 3, 20, 5);
  const TrialStats y = estimate_stat(Statistic::bt_len, 200, 3, 20, 5, EstimateOptions{3});
  CHECK(x.mean == y.mean);
  CHECK(x.q95 == y.q95);
}

TEST_CASE("exhaustive mode averages over all of S_n") {
  EstimateOptions ex;
  ex.exhaustive = true;
  const TrialStats s = estimate_stat(Statistic::bt_len, 4, 2, 1, 0, ex);
  CHECK(s.trials == 24);
  // Every permutation of length 4 has block 2-twins of length 1; length 2
  // needs pattern(p1 p2) == pattern(p3 p4) (or other disjoint pairs).
  double sum = 0;
  oracle::Seq p{1, 2, 3, 4};
  do {
    sum += oracle::has_block(p, 2, 2) ? 2 : 1;
  } while (std::next_permutation(p.begin(), p.end()));
  CHECK(s.mean == doctest::Approx(sum / 24));
}

TEST_CASE("sampling guards") {
  CHECK_THROWS_AS(estimate_stat(Statistic::bt_len, 10, 1, 5, 0), InvalidInput);
  CHECK_THROWS_AS(estimate_stat(Statistic::match2_success, 11, 2, 5, 0), InvalidInput);
  CHECK_THROWS_AS(estimate_stat(Statistic::tt_len, 20000, 2, 1, 0), ResourceLimit);
  EstimateOptions ex;
  ex.exhaustive = true;
  CHECK_THROWS_AS(estimate_stat(Statistic::bt_len, 10, 2, 1, 0, ex), ResourceLimit);
  EstimateOptions bad;
  bad.tail_eps = 0;
  CHECK_THROWS_AS(estimate_stat(Statistic::tt_len, 50, 2, 1, 0, bad), InvalidInput);
  CHECK(parse_statistic("btt_len") == Statistic::btt_len);
  CHECK_THROWS_AS(parse_statistic("x"), InvalidInput);
}

TEST_CASE("half matching on identity and reversal") {
  for (std::size_t n = 2; n <= 100; n += 2) {
    const Permutation id = Permutation::identity(n);
    const auto inc = match2(id, Orientation::increasing);
    REQUIRE(inc);
    CHECK(inc->pairs.size() == n / 2);
    CHECK(certificate_error(id, inc->as_twins()).empty());
    CHECK_FALSE(match2(id, Orientation::decreasing));
    const Permutation rev = apply_symmetry(id, Symmetry::reverse);
    CHECK_FALSE(match2(rev, Orientation::increasing));
  }
  CHECK_THROWS_AS(match2(Permutation{1, 2, 3}, Orientation::increasing), InvalidInput);
}

TEST_CASE("half matching certificates are r-twins of length 2") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Permutation p = random_permutation(2 * (1 + seed % 12), seed);
    for (Orientation o : {Orientation::increasing, Orientation::decreasing}) {
      const auto m = match2(p, o);
      if (!m) continue;
      const TwinsCertificate c = m->as_twins();
      CHECK(c.r == p.size() / 2);
      CHECK(certificate_error(p, c).empty());
      const Value want = o == Orientation::increasing ? 1 : 2;
      CHECK(c.pattern[0] == want);
    }
  }
}

TEST_CASE("degree statistics") {
  const DegreeStats d = degree_stats(random_permutation(400, 3));
  CHECK(d.r == 200);
  CHECK(d.min_degree <= d.max_degree);
  CHECK(d.min_codegree <= d.max_codegree);
  CHECK(d.max_degree <= 200);
  CHECK_THROWS_AS(degree_stats(Permutation{1, 2, 3}), InvalidInput);
}
