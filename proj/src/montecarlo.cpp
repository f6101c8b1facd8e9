#include "twinperm/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numeric>
#include <string>
#include <thread>

#include "twinperm/detect.hpp"
#include "twinperm/matching.hpp"

namespace twinperm {

namespace {

double log_expected_tight(std::size_t n, std::size_t r, std::size_t k) {
  const double rr = static_cast<double>(r);
  const double kk = static_cast<double>(k);
  const double windows = static_cast<double>(n - r * k + 1);
  return std::log(windows) + std::lgamma(rr * kk + 1) - std::lgamma(rr + 1) -
         (2 * rr - 1) * std::lgamma(kk + 1);
}

double one_trial(Statistic s, const Permutation& p, std::size_t r, std::size_t cap) {
  switch (s) {
    case Statistic::bt_len:
      return static_cast<double>(max_len(p, r, TwinKind::block).k_max);
    case Statistic::tt_len: {
      MaxLenOptions o;
      o.k_limit = cap;
      return static_cast<double>(max_len(p, r, TwinKind::tight, o).k_max);
    }
    case Statistic::btt_len:
      return static_cast<double>(max_len(p, r, TwinKind::block_tight).k_max);
    case Statistic::match2_success:
      return match2(p, Orientation::increasing) && match2(p, Orientation::decreasing) ? 1.0
                                                                                      : 0.0;
  }
  return 0.0;
}

void check_guards(Statistic s, std::size_t n, std::size_t r, std::uint64_t trials,
                  const EstimateOptions& options) {
  if (r < 2) throw InvalidInput("estimate: r must be at least 2");
  if (n < r) throw InvalidInput("estimate: n must be at least r");
  if (!options.exhaustive && trials < 1) throw InvalidInput("estimate: trials must be positive");
  if (!(options.tail_eps > 0 && options.tail_eps < 1)) {
    throw InvalidInput("estimate: tail_eps must lie in (0, 1)");
  }
  if (s == Statistic::match2_success && n % 2 != 0) {
    throw InvalidInput("estimate: match2_success needs even n");
  }
  if ((s == Statistic::tt_len || s == Statistic::btt_len) && n > kMaxTightTrialLength) {
    throw ResourceLimit("estimate: tight statistics are limited to n <= " +
                        std::to_string(kMaxTightTrialLength));
  }
  if (n > kMaxBlockTrialLength) {
    throw ResourceLimit("estimate: n is limited to " + std::to_string(kMaxBlockTrialLength));
  }
  if (options.exhaustive && n > kMaxExhaustiveLength) {
    throw ResourceLimit("estimate: exhaustive mode is limited to n <= " +
                        std::to_string(kMaxExhaustiveLength));
  }
}

}  // namespace

std::string_view statistic_name(Statistic s) {
  switch (s) {
    case Statistic::bt_len: return "bt_len";
    case Statistic::tt_len: return "tt_len";
    case Statistic::btt_len: return "btt_len";
    case Statistic::match2_success: return "match2_success";
  }
  return "?";
}

Statistic parse_statistic(std::string_view name) {
  for (Statistic s : {Statistic::bt_len, Statistic::tt_len, Statistic::btt_len,
                      Statistic::match2_success}) {
    if (statistic_name(s) == name) return s;
  }
  throw InvalidInput("unknown statistic: " + std::string(name));
}

double reference_value(Statistic statistic, std::size_t n, std::size_t r) {
  if (statistic == Statistic::match2_success) return 1.0;
  const double ln = std::log(static_cast<double>(n));
  const double base = ln / std::log(ln);
  const double rr = static_cast<double>(r);
  return statistic == Statistic::bt_len ? rr / (rr - 1) * base : base / (rr - 1);
}

std::size_t tight_length_cap(std::size_t n, std::size_t r, double eps) {
  if (r < 2 || n < r) return 0;
  const std::size_t top = n / r;
  // Walk down from the top, accumulating the tail until it would exceed eps.
  double tail = 0;
  const double log_eps = std::log(eps);
  for (std::size_t k = top; k >= 1; --k) {
    const double le = log_expected_tight(n, r, k);
    const double next = le > log_eps + 50 ? HUGE_VAL : tail + std::exp(le);
    if (next > eps) return k;
    tail = next;
  }
  return 0;
}

std::vector<double> sample_stat(Statistic statistic, std::size_t n, std::size_t r,
                                std::uint64_t trials, std::uint64_t seed,
                                const EstimateOptions& options) {
  check_guards(statistic, n, r, trials, options);
  const std::size_t cap =
      statistic == Statistic::tt_len ? tight_length_cap(n, r, options.tail_eps) : 0;

  std::vector<std::vector<Value>> all;
  if (options.exhaustive) {
    std::vector<Value> v(n);
    std::iota(v.begin(), v.end(), Value{1});
    do {
      all.push_back(v);
    } while (std::next_permutation(v.begin(), v.end()));
    trials = all.size();
  }

  std::vector<double> values(trials);
  std::atomic<std::uint64_t> next{0};
  const auto work = [&] {
    for (;;) {
      const std::uint64_t i = next.fetch_add(1);
      if (i >= trials) break;
      const Permutation p = options.exhaustive ? Permutation(all[i])
                                               : random_permutation(n, derive_seed(seed, i));
      values[i] = one_trial(statistic, p, r, cap);
    }
  };
  const std::size_t w = std::clamp<std::size_t>(options.workers, 1, trials);
  if (w == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t i = 0; i < w; ++i) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  return values;
}

TrialStats summarize(Statistic statistic, std::size_t n, std::size_t r, std::uint64_t seed,
                     std::vector<double> values) {
  if (values.empty()) throw InvalidInput("summarize: no values");
  TrialStats st;
  st.statistic = statistic;
  st.n = n;
  st.r = r;
  st.trials = values.size();
  st.seed = seed;
  st.reference = reference_value(statistic, n, r);

  const double count = static_cast<double>(values.size());
  double sum = 0;
  for (double v : values) sum += v;
  st.mean = sum / count;
  double ss = 0;
  for (double v : values) ss += (v - st.mean) * (v - st.mean);
  st.variance = values.size() > 1 ? ss / (count - 1) : 0.0;

  std::sort(values.begin(), values.end());
  st.min = values.front();
  st.max = values.back();
  const auto quantile = [&](double q) {
    const double h = (count - 1) * q;
    const auto lo = static_cast<std::size_t>(std::floor(h));
    const std::size_t hi = std::min(lo + 1, values.size() - 1);
    return values[lo] + (h - static_cast<double>(lo)) * (values[hi] - values[lo]);
  };
  st.q05 = quantile(0.05);
  st.q50 = quantile(0.50);
  st.q95 = quantile(0.95);
  return st;
}

TrialStats estimate_stat(Statistic statistic, std::size_t n, std::size_t r,
                         std::uint64_t trials, std::uint64_t seed,
                         const EstimateOptions& options) {
  return summarize(statistic, n, r, seed, sample_stat(statistic, n, r, trials, seed, options));
}

}  // namespace twinperm
