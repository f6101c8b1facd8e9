#include <algorithm>
#include <cstdint>
#include <numeric>
#include <tuple>
#include <vector>

#include "detect_internal.hpp"
#include "twinperm/kernels.hpp"

namespace twinperm {

namespace detail {

namespace {

struct Best {
  std::size_t count = 0;
  std::size_t end = 0;  // end (exclusive, 0-based) of the deciding greedy window
  std::size_t first = 0;  // index into the sorted order where the bucket starts
  std::size_t last = 0;
};

// Decides whether bucket [first, last) of `starts` beats `best`.
void consider(const std::vector<std::uint32_t>& starts, std::size_t first, std::size_t last,
              std::size_t k, std::size_t target, Best& best, bool& have) {
  std::size_t count = 0;
  std::size_t free_from = 0;
  std::size_t deciding_end = 0;
  for (std::size_t i = first; i < last; ++i) {
    const std::size_t s = starts[i];
    if (count > 0 && s < free_from) continue;
    ++count;
    free_from = s + k;
    deciding_end = free_from;
    if (target > 0 && count == target) break;
  }
  if (target > 0) {
    if (count < target) return;
    if (!have || deciding_end < best.end) {
      best = {count, deciding_end, first, last};
      have = true;
    }
    return;
  }
  if (!have || count > best.count || (count == best.count && deciding_end < best.end)) {
    best = {count, deciding_end, first, last};
    have = true;
  }
}

}  // namespace

BlockScan scan_blocks(const Permutation& p, std::size_t k, std::size_t target) {
  BlockScan out;
  const std::size_t n = p.size();
  if (k == 0 || n < k) return out;
  const std::size_t windows = n - k + 1;
  const auto vals = p.values();

  std::vector<std::uint32_t> order(windows);
  std::iota(order.begin(), order.end(), 0U);
  std::vector<std::uint16_t> ranks;

  // Patterns compare lexicographically by rank vector. For k <= 16 the
  // vector packs into one word (first rank in the top nibble).
  std::vector<std::uint64_t> codes;
  std::vector<std::uint16_t> all_ranks;
  const bool packed = k <= 16;
  if (packed) {
    codes.resize(windows);
    ranks.resize(k);
    for (std::size_t s = 0; s < windows; ++s) {
      kernels::window_ranks(vals.subspan(s, k), ranks);
      std::uint64_t c = 0;
      for (std::size_t i = 0; i < k; ++i) c = (c << 4) | ranks[i];
      codes[s] = c;
    }
    std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
      return std::tie(codes[a], a) < std::tie(codes[b], b);
    });
  } else {
    all_ranks.resize(windows * k);
    for (std::size_t s = 0; s < windows; ++s) {
      kernels::window_ranks(vals.subspan(s, k), std::span(all_ranks).subspan(s * k, k));
    }
    std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
      const auto* ra = all_ranks.data() + std::size_t{a} * k;
      const auto* rb = all_ranks.data() + std::size_t{b} * k;
      const auto c = std::lexicographical_compare_three_way(ra, ra + k, rb, rb + k);
      return c != 0 ? c < 0 : a < b;
    });
  }
  const auto same = [&](std::uint32_t a, std::uint32_t b) {
    if (packed) return codes[a] == codes[b];
    return std::equal(all_ranks.begin() + std::size_t{a} * k,
                      all_ranks.begin() + std::size_t{a + 1} * k,
                      all_ranks.begin() + std::size_t{b} * k);
  };

  Best best;
  bool have = false;
  for (std::size_t i = 0; i < windows;) {
    std::size_t j = i + 1;
    while (j < windows && same(order[i], order[j])) ++j;
    // A bucket smaller than the target can never qualify.
    if (target == 0 || j - i >= target) consider(order, i, j, k, target, best, have);
    i = j;
  }
  if (!have) return out;

  TwinsCertificate cert;
  cert.kind = TwinKind::block;
  cert.k = k;
  std::size_t free_from = 0;
  for (std::size_t i = best.first; i < best.last && cert.position_sets.size() < best.count; ++i) {
    const std::size_t s = order[i];
    if (!cert.position_sets.empty() && s < free_from) continue;
    free_from = s + k;
    std::vector<std::size_t> set(k);
    std::iota(set.begin(), set.end(), s + 1);
    cert.position_sets.push_back(std::move(set));
  }
  cert.r = cert.position_sets.size();
  cert.pattern = reduce(vals.subspan(order[best.first], k));
  out.count = best.count;
  out.certificate = std::move(cert);
  return out;
}

}  // namespace detail

DetectOutcome detect_block(const Permutation& p, std::size_t r, std::size_t k) {
  if (r < 1 || k < 1) throw InvalidInput("detect_block: r and k must be positive");
  DetectOutcome out;
  if (p.size() < r * k) return out;
  auto scan = detail::scan_blocks(p, k, r);
  if (scan.certificate) {
    out.found = true;
    out.certificate = std::move(scan.certificate);
  }
  return out;
}

}  // namespace twinperm
