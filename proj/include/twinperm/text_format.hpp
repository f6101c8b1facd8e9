#pragma once

#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "twinperm/permutation.hpp"

namespace twinperm {

/**
 * Shared permutation text format: one permutation per line, decimal integers
 * separated by single spaces or commas. Blank lines and lines whose first
 * non-blank character is '#' carry no permutation.
 */
std::optional<Permutation> parse_permutation_line(std::string_view line);

/// Parses every permutation in a stream, in order.
std::vector<Permutation> parse_permutations(std::istream& in);

/// Space-separated decimal values, no trailing newline.
std::string format_permutation(std::span<const Value> values);
inline std::string format_permutation(const Permutation& p) {
  return format_permutation(p.values());
}

}  // namespace twinperm
