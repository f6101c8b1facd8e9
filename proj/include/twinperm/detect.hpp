#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "twinperm/permutation.hpp"

namespace twinperm {

enum class TwinKind : std::uint8_t { block, tight, block_tight };

std::string_view kind_name(TwinKind kind);

/// Accepts "block", "tight", "block-tight" (and "blocktight"); throws InvalidInput otherwise.
TwinKind parse_kind(std::string_view name);

/**
 * A checkable witness: r position sets (1-based, each sorted, size k) whose
 * subsequences all reduce to `pattern`.
 */
struct TwinsCertificate {
  TwinKind kind = TwinKind::tight;
  std::size_t r = 0;
  std::size_t k = 0;
  std::vector<std::vector<std::size_t>> position_sets;
  Pattern pattern;
};

/// Empty string when `cert` is a valid certificate for `host`, else the first violation found.
std::string certificate_error(const Permutation& host, const TwinsCertificate& cert);

struct DetectOutcome {
  bool found = false;
  std::optional<TwinsCertificate> certificate;
};

/**
 * r pairwise-disjoint length-k intervals sharing one pattern. Windows are
 * bucketed by pattern and each bucket is scanned greedily; the reported
 * bucket is the one whose r-th greedy interval ends first (ties: smaller
 * pattern).
 */
DetectOutcome detect_block(const Permutation& p, std::size_t r, std::size_t k);

/// Some length-rk window splits into r similar subsequences. Leftmost window wins.
DetectOutcome detect_tight(const Permutation& p, std::size_t r, std::size_t k);

/// Tight twins inside the single window starting at 1-based `start`.
DetectOutcome detect_tight_window(const Permutation& p, std::size_t r, std::size_t k,
                                  std::size_t start);

/// r consecutive similar blocks. Leftmost start wins.
DetectOutcome detect_blocktight(const Permutation& p, std::size_t r, std::size_t k);

DetectOutcome detect(const Permutation& p, TwinKind kind, std::size_t r, std::size_t k);

struct MaxLenOptions {
  // Block containment is monotone in k, so the block scan ascends and stops
  // at the first miss. Clearing this forces a full descending scan.
  bool monotone_block = true;
  // Upper bound on k for tight and block-tight scans (0 = floor(n/r)).
  std::size_t k_limit = 0;
};

struct MaxLenResult {
  std::size_t k_max = 0;
  std::optional<TwinsCertificate> certificate;
};

MaxLenResult max_len(const Permutation& p, std::size_t r, TwinKind kind,
                     const MaxLenOptions& options = {});

struct RMaxResult {
  std::size_t r_max = 1;
  std::optional<TwinsCertificate> certificate;
  bool matching_shortcut = false;  // tight, k=2: settled by the bipartite pre-check
};

/// Largest r with twins of the given kind and length k. kind must be block or tight.
RMaxResult r_max(const Permutation& p, std::size_t k, TwinKind kind);

/**
 * Brute force: every split of the window positions into r unordered classes
 * of size k, tested by pairwise reduction. Requires |window| = rk <= 12.
 */
bool oracle_tight(const Permutation& window, std::size_t r, std::size_t k);

/**
 * Decides whether a window of length rk splits into r similar subsequences
 * of length k. Reusable across windows of the same shape.
 *
 * Positions are assigned left to right. Groups open in label order (removes
 * the r! relabelings) and hold at most k entries. Every group appends to a
 * shared code: code[l] is the number of earlier group entries below entry l,
 * fixed by whichever group first reaches length l+1. Because all groups'
 * prefixes are then order-isomorphic, the count alone pins the new entry's
 * relation to every earlier one.
 *
 * Lookahead: a group shorter than the longest one must still take entries
 * falling into the value gaps that the longest group's extra entries
 * dictate, in order. Ignoring the constraints among those future entries
 * leaves a subsequence test that earliest-match greedy decides exactly; if
 * even that fails, or leaves too little room for the group's remaining
 * entries, the node is dead. For windows up to 128 entries each greedy step
 * is a mask lookup.
 */
class TightWindowSolver {
 public:
  TightWindowSolver(std::size_t r, std::size_t k);

  /// window.size() must equal r*k.
  bool solve(std::span<const Value> window);

  /**
   * Calls `visit` with the labels of every split of the window, in
   * lexicographic order, until it returns false. Returns the number visited.
   */
  std::size_t for_each_solution(std::span<const Value> window,
                                const std::function<bool(std::span<const std::uint8_t>)>& visit);

  /// After a successful solve: group index (0-based, opening order) of each window position.
  std::span<const std::uint8_t> assignment() const { return label_; }

  std::uint64_t nodes() const { return nodes_; }

 private:
  bool place(std::size_t t);
  bool followers_feasible(std::size_t next) const;

  std::size_t r_;
  std::size_t k_;
  std::size_t m_;
  __extension__ using Mask = unsigned __int128;

  std::span<const Value> w_;          // window as ranks 0..m-1
  std::vector<Value> ranks_;
  std::vector<std::size_t> order_;
  std::vector<Mask> below_;           // below_[v]: positions whose rank is < v (m <= 128)
  std::vector<Value> groups_;         // r_ rows of k_ values, in window order
  std::vector<Value> sorted_;         // same rows, ascending
  std::vector<std::uint16_t> len_;
  std::vector<std::uint16_t> code_;   // k_ entries
  std::vector<std::uint16_t> cover_;  // cover_[l]: groups with length > l
  std::vector<std::uint8_t> label_;
  std::size_t opened_ = 0;
  std::uint64_t nodes_ = 0;
  const std::function<bool(std::span<const std::uint8_t>)>* visit_ = nullptr;
  std::size_t visited_ = 0;
};

/// Builds a certificate for tight twins from a solved window starting at 0-based `start`.
TwinsCertificate tight_certificate(const Permutation& p, std::size_t start, std::size_t r,
                                   std::size_t k, std::span<const std::uint8_t> labels);

}  // namespace twinperm
