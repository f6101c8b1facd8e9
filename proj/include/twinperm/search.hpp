#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "twinperm/permutation.hpp"

namespace twinperm {

enum class SearchOutcome : std::uint8_t { avoider_found, exhausted };

std::string_view outcome_name(SearchOutcome o);

/**
 * Result of an exhaustive avoider search. Outcome and witness do not depend
 * on the worker count; node and prune counters may.
 */
struct SearchReport {
  std::size_t r = 0;
  std::size_t k = 0;
  std::size_t n = 0;
  SearchOutcome outcome = SearchOutcome::exhausted;
  std::optional<Permutation> witness;
  std::uint64_t nodes_visited = 0;
  std::uint64_t prefixes_pruned = 0;
  double wall_time_s = 0.0;
  std::size_t worker_count = 1;
};

struct SearchOptions {
  std::size_t workers = 1;
  // Depth at which the tree is cut into shards (0 = automatic).
  std::size_t shard_depth = 0;
};

/**
 * Is there a length-n permutation without tight r-twins of length k?
 *
 * Permutations are grown by appending a last entry of every relative rank,
 * which keeps the order type of every earlier window fixed; a prefix whose
 * newest rk-window holds twins is cut. Only prefixes starting with an ascent
 * are explored: complementation preserves twins and swaps the two starts.
 * The witness is the first avoider in that generation order.
 */
SearchReport exists_avoider(std::size_t n, std::size_t r, std::size_t k,
                            const SearchOptions& options = {});

/// Full n! sweep with no pruning and no symmetry; first avoider in lexicographic order.
std::optional<Permutation> naive_avoider(std::size_t n, std::size_t r, std::size_t k);

struct FResult {
  std::optional<std::size_t> value;  // empty: exceeds n_max
  std::vector<SearchReport> reports;
};

inline constexpr std::size_t kMaxSearchLength = 14;

/// Smallest n in [rk, n_max] whose search is exhausted. n_max > 14 needs allow_large.
FResult compute_f(std::size_t r, std::size_t k, std::size_t n_max,
                  const SearchOptions& options = {}, bool allow_large = false);

inline constexpr std::size_t kMaxQLength = 10;

/// Permutations of [rk] that split entirely into r similar subsequences of length k.
std::uint64_t count_Q(std::size_t r, std::size_t k, std::size_t workers = 1);

}  // namespace twinperm
