#include "twinperm/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <limits>
#include <numeric>
#include <string>
#include <thread>

#include "twinperm/detect.hpp"

namespace twinperm {

namespace {

constexpr std::size_t kNoShard = std::numeric_limits<std::size_t>::max();

// Insertion tree over order types. vals[0..m) is always a permutation of [m].
class Grower {
 public:
  Grower(std::size_t n, std::size_t r, std::size_t k)
      : n_(n), m_win_(r * k), solver_(r, k), vals_(n) {}

  std::uint64_t nodes = 0;
  std::uint64_t pruned = 0;

  void load(std::span<const Value> prefix) {
    std::copy(prefix.begin(), prefix.end(), vals_.begin());
    m_ = prefix.size();
  }
  std::span<const Value> current() const { return {vals_.data(), m_}; }
  std::size_t size() const { return m_; }

  // Appends a last entry of rank v; false (and nothing appended) if the new window has twins.
  bool push(Value v) {
    ++nodes;
    for (std::size_t i = 0; i < m_; ++i) vals_[i] += static_cast<Value>(vals_[i] >= v);
    vals_[m_++] = v;
    if (m_ >= m_win_ && solver_.solve({vals_.data() + m_ - m_win_, m_win_})) {
      pop();
      ++pruned;
      return false;
    }
    return true;
  }

  void pop() {
    const Value v = vals_[--m_];
    for (std::size_t i = 0; i < m_; ++i) vals_[i] -= static_cast<Value>(vals_[i] > v);
  }

  // Ranks allowed for the next entry; the second entry is fixed above the first.
  Value first_rank() const { return m_ == 1 ? 2 : 1; }

  // Depth-first to length n. `stop` is polled once per node.
  template <typename Stop>
  bool dfs(Stop&& stop) {
    if (m_ == n_) return true;
    if (stop()) return false;
    for (Value v = first_rank(); v <= static_cast<Value>(m_ + 1); ++v) {
      if (!push(v)) continue;
      if (dfs(stop)) return true;
      pop();
    }
    return false;
  }

  // Collects every surviving prefix of length `depth`.
  void collect(std::size_t depth, std::vector<std::vector<Value>>& out) {
    if (m_ == depth) {
      out.emplace_back(vals_.begin(), vals_.begin() + static_cast<std::ptrdiff_t>(m_));
      return;
    }
    for (Value v = first_rank(); v <= static_cast<Value>(m_ + 1); ++v) {
      if (!push(v)) continue;
      collect(depth, out);
      pop();
    }
  }

 private:
  std::size_t n_;
  std::size_t m_win_;
  TightWindowSolver solver_;
  std::vector<Value> vals_;
  std::size_t m_ = 0;
};

void validate(std::size_t r, std::size_t k) {
  if (r < 2) throw InvalidInput("search: r must be at least 2");
  if (k < 1) throw InvalidInput("search: k must be at least 1");
}

}  // namespace

std::string_view outcome_name(SearchOutcome o) {
  return o == SearchOutcome::avoider_found ? "avoider-found" : "exhausted";
}

SearchReport exists_avoider(std::size_t n, std::size_t r, std::size_t k,
                            const SearchOptions& options) {
  validate(r, k);
  if (n == 0) throw InvalidInput("search: n must be positive");
  const auto t0 = std::chrono::steady_clock::now();
  SearchReport rep;
  rep.r = r;
  rep.k = k;
  rep.n = n;
  rep.worker_count = std::max<std::size_t>(1, options.workers);
  const auto finish = [&] {
    rep.wall_time_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
  };

  if (n < r * k) {
    rep.outcome = SearchOutcome::avoider_found;
    rep.witness = Permutation::identity(n);
    return finish();
  }

  Grower root(n, r, k);
  const Value one = 1;
  root.load({&one, 1});
  const std::size_t depth = std::min(n, options.shard_depth ? options.shard_depth : 6);
  std::vector<std::vector<Value>> shards;
  root.collect(depth, shards);
  rep.nodes_visited = root.nodes + 1;
  rep.prefixes_pruned = root.pruned;

  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> best{kNoShard};
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<std::uint64_t> pruned{0};
  std::vector<std::vector<Value>> found(shards.size());

  const auto work = [&] {
    Grower g(n, r, k);
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= shards.size() || i > best.load()) break;
      g.load(shards[i]);
      const bool hit = g.dfs([&] { return best.load(std::memory_order_relaxed) < i; });
      if (hit) {
        found[i].assign(g.current().begin(), g.current().end());
        std::size_t cur = best.load();
        while (i < cur && !best.compare_exchange_weak(cur, i)) {
        }
      }
    }
    nodes += g.nodes;
    pruned += g.pruned;
  };

  if (rep.worker_count == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < rep.worker_count; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  rep.nodes_visited += nodes.load();
  rep.prefixes_pruned += pruned.load();
  const std::size_t b = best.load();
  if (b != kNoShard) {
    rep.outcome = SearchOutcome::avoider_found;
    rep.witness = Permutation(found[b]);
  } else {
    rep.outcome = SearchOutcome::exhausted;
  }
  return finish();
}

std::optional<Permutation> naive_avoider(std::size_t n, std::size_t r, std::size_t k) {
  validate(r, k);
  if (n == 0) throw InvalidInput("search: n must be positive");
  if (n > 10) throw ResourceLimit("naive enumeration is limited to n <= 10");
  std::vector<Value> v(n);
  std::iota(v.begin(), v.end(), Value{1});
  const std::size_t m = r * k;
  TightWindowSolver solver(r, k);
  do {
    bool twins = false;
    for (std::size_t s = 0; s + m <= n && !twins; ++s) twins = solver.solve({v.data() + s, m});
    if (!twins) return Permutation(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return std::nullopt;
}

FResult compute_f(std::size_t r, std::size_t k, std::size_t n_max, const SearchOptions& options,
                  bool allow_large) {
  validate(r, k);
  if (n_max < r * k) throw InvalidInput("compute_f: n_max must be at least r*k");
  if (n_max > kMaxSearchLength && !allow_large) {
    throw ResourceLimit("compute_f: n_max above " + std::to_string(kMaxSearchLength) +
                        " needs an explicit override");
  }
  FResult out;
  for (std::size_t n = r * k; n <= n_max; ++n) {
    out.reports.push_back(exists_avoider(n, r, k, options));
    if (out.reports.back().outcome == SearchOutcome::exhausted) {
      out.value = n;
      break;
    }
  }
  return out;
}

std::uint64_t count_Q(std::size_t r, std::size_t k, std::size_t workers) {
  if (r < 1 || k < 1) throw InvalidInput("count_Q: r and k must be positive");
  const std::size_t m = r * k;
  if (m > kMaxQLength) {
    throw ResourceLimit("count_Q: r*k must be at most " + std::to_string(kMaxQLength));
  }
  std::atomic<std::size_t> next{1};
  std::atomic<std::uint64_t> total{0};
  const auto work = [&] {
    TightWindowSolver solver(r, k);
    std::vector<Value> v(m);
    for (;;) {
      const auto first = static_cast<Value>(next.fetch_add(1));
      if (first > static_cast<Value>(m)) break;
      v[0] = first;
      std::size_t at = 1;
      for (Value x = 1; x <= static_cast<Value>(m); ++x) {
        if (x != first) v[at++] = x;
      }
      std::uint64_t local = 0;
      do {
        local += solver.solve(v) ? 1 : 0;
      } while (std::next_permutation(v.begin() + 1, v.end()));
      total += local;
    }
  };
  const std::size_t w = std::clamp<std::size_t>(workers, 1, m);
  if (w == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t i = 0; i < w; ++i) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  return total.load();
}

}  // namespace twinperm
