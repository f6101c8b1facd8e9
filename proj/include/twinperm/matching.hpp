#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "twinperm/detect.hpp"
#include "twinperm/permutation.hpp"

namespace twinperm {

enum class Orientation : std::uint8_t { increasing, decreasing };

std::string_view orientation_name(Orientation o);
Orientation parse_orientation(std::string_view name);

/**
 * Perfect matching between the halves U = {1..n/2} and W = {n/2+1..n}
 * (1-based positions) where every pair (i, j) has p(i) < p(j) (increasing)
 * or p(i) > p(j) (decreasing). Pairs are sorted by i.
 */
struct MatchCertificate {
  Orientation orientation = Orientation::increasing;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;

  /// The pairs as tight (n/2)-twins of length 2, positions shifted by `offset`.
  TwinsCertificate as_twins(std::size_t offset = 0) const;
};

/// Hopcroft-Karp on the bitset graph. Throws InvalidInput on odd or empty input.
std::optional<MatchCertificate> match2(std::span<const Value> values, Orientation o);
inline std::optional<MatchCertificate> match2(const Permutation& p, Orientation o) {
  return match2(p.values(), o);
}

/**
 * Degrees X(i) and co-degrees Y(i,j) of the increasing half graph (all
 * vertices, all same-side pairs), against the bands r/2 +- r^(2/3) and
 * r/3 +- r^(2/3) with r = n/2.
 */
struct DegreeStats {
  std::size_t r = 0;
  std::size_t min_degree = 0;
  std::size_t max_degree = 0;
  std::size_t min_codegree = 0;
  std::size_t max_codegree = 0;
  std::size_t degrees_outside = 0;
  std::size_t codegrees_outside = 0;
  bool degrees_in_band() const { return degrees_outside == 0; }
  bool codegrees_in_band() const { return codegrees_outside == 0; }
};

DegreeStats degree_stats(const Permutation& p);

}  // namespace twinperm
