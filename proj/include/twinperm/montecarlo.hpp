#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "twinperm/permutation.hpp"

namespace twinperm {

enum class Statistic : std::uint8_t { bt_len, tt_len, btt_len, match2_success };

std::string_view statistic_name(Statistic s);
Statistic parse_statistic(std::string_view name);

struct TrialStats {
  Statistic statistic = Statistic::bt_len;
  std::size_t n = 0;
  std::size_t r = 0;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  double mean = 0;
  double variance = 0;  // unbiased; 0 for a single trial
  double min = 0;
  double max = 0;
  double q05 = 0;  // quantiles interpolate linearly between order statistics
  double q50 = 0;
  double q95 = 0;
  double reference = 0;
};

inline constexpr std::size_t kMaxTightTrialLength = 10'000;
inline constexpr std::size_t kMaxBlockTrialLength = 1'000'000;
inline constexpr std::size_t kMaxExhaustiveLength = 9;

struct EstimateOptions {
  std::size_t workers = 1;
  // Every permutation of [n] once (trials is then n!).
  bool exhaustive = false;
  // tt_len only: tail bound handed to tight_length_cap.
  double tail_eps = 1e-3;
};

/**
 * Samples the statistic over `trials` uniform permutations; trial i uses
 * derive_seed(seed, i), so results do not depend on the worker count.
 *
 * tt_len scans k downward from tight_length_cap(n, r, options.tail_eps)
 * rather than n/r, so a trial undercounts with probability at most tail_eps.
 * match2_success needs even n and records whether both orientations match.
 */
TrialStats estimate_stat(Statistic statistic, std::size_t n, std::size_t r,
                         std::uint64_t trials, std::uint64_t seed,
                         const EstimateOptions& options = {});

/// Raw per-trial values in trial order (same sampling as estimate_stat).
std::vector<double> sample_stat(Statistic statistic, std::size_t n, std::size_t r,
                                std::uint64_t trials, std::uint64_t seed,
                                const EstimateOptions& options = {});

/// Summary of raw values; quantiles are order statistics with linear interpolation.
TrialStats summarize(Statistic statistic, std::size_t n, std::size_t r, std::uint64_t seed,
                     std::vector<double> values);

/// ln n / ln ln n scaled by r/(r-1) (bt_len) or 1/(r-1) (tt_len, btt_len); 1 for match2_success.
double reference_value(Statistic statistic, std::size_t n, std::size_t r);

/**
 * Smallest K such that the expected number of (window, partition) pairs
 * forming tight r-twins of any length k > K is at most `eps`:
 * sum over k > K of (n-rk+1) * (rk)!/(r! k!^r) / k!^(r-1).
 */
std::size_t tight_length_cap(std::size_t n, std::size_t r, double eps = 1e-9);

/// Exact fraction with a reduced numerator and denominator.
struct Rational {
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  static Rational of(std::uint64_t num, std::uint64_t den);
  bool operator==(const Rational&) const = default;
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string str() const;
};

Rational operator*(const Rational& a, const Rational& b);

using PositionFamily = std::vector<std::vector<std::size_t>>;

struct Eq1Result {
  Rational exact;        // fraction of permutations with r-twins on the sets
  Rational theoretical;  // 1 / k!^(r-1)
  std::uint64_t count = 0;
  std::uint64_t total = 0;
  bool matches = false;  // count * k!^(r-1) == n!
};

inline constexpr std::size_t kMaxExactLength = 8;

/**
 * Exact probability, over all n! permutations, that the subsequences at the
 * given r disjoint k-sets (1-based, any order) are pairwise similar.
 */
Eq1Result check_eq1(std::size_t n, std::size_t r, std::size_t k, const PositionFamily& sets);

struct IndependenceResult {
  Rational lhs;  // P(E1 and E2)
  Rational rhs;  // P(E1) * P(E2)
  bool equal = false;
};

/// Two families whose unions are disjoint; both probabilities by exact count.
IndependenceResult check_independence(std::size_t n, std::size_t r, std::size_t k,
                                      const PositionFamily& sets1, const PositionFamily& sets2);

}  // namespace twinperm
