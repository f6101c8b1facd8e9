#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "twinperm/permutation.hpp"

namespace twinperm {

/**
 * Raw sequence (-rev A_1) (rev A_2) (-rev A_3) (rev A_4) ... with
 * A_m = ((m-1)b+1, ..., mb) and block length b. n must be a multiple of b.
 */
Permutation alternating_blocks_raw(std::size_t block, std::size_t n);

/// Reduced alternating-block sequence with block length 2k-1 (k >= 2).
Permutation build_pi_k(std::size_t k, std::size_t n);

/// Same scheme with block length rk-1 (r, k >= 2).
Permutation build_pi_rk(std::size_t r, std::size_t k, std::size_t n);

/// The mirrored zigzag around 0 (r >= 4), before reduction.
Permutation quadratic_raw(std::size_t r);

/// Length r(r+5)-13; no tight r-twins of length 2. r = 3 gives the literal pi3.
Permutation build_quadratic(std::size_t r);

/**
 * Literal permutations: pi2, pi3, pi12, intro-tight2, intro-tight4,
 * intro-block4, intro-blocktight4.
 */
Permutation build_small_witness(std::string_view name);
const std::vector<std::string>& small_witness_names();

/// Up-up-down-down shape with period 4: identity with every descending run reversed.
Permutation build_alternating(std::size_t n);

/**
 * Length-n permutation without tight r-twins of length ell (ell >= 3):
 * k = floor((ell+1)/2) puts ell in {2k-1, 2k}; the pi_rk sequence is built
 * to full blocks and its first n entries are reduced.
 */
Permutation avoider_for_length(std::size_t r, std::size_t ell, std::size_t n);

struct ConstructionSpec {
  std::string family;  // pi-k | pi-rk | quadratic | pi2 | pi3 | alternating | intro-example
  std::optional<std::size_t> r;
  std::optional<std::size_t> k;
  std::optional<std::size_t> n;
  std::string name;  // intro-example only
};

Permutation build(const ConstructionSpec& spec);

}  // namespace twinperm
