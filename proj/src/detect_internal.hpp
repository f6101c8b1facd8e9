#pragma once

#include <cstddef>
#include <optional>

#include "twinperm/detect.hpp"

namespace twinperm::detail {

struct BlockScan {
  std::size_t count = 0;  // greedy disjoint occurrences in the chosen bucket
  std::optional<TwinsCertificate> certificate;
};

/**
 * target > 0: the bucket reaching `target` disjoint windows whose target-th
 * window ends first. target == 0: the bucket with the most disjoint windows.
 * The certificate lists the first greedy windows (target of them, or all).
 */
BlockScan scan_blocks(const Permutation& p, std::size_t k, std::size_t target);

}  // namespace twinperm::detail
