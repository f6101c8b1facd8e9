#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string_view>
#include <vector>

#include "twinperm/errors.hpp"

namespace twinperm {

using Value = std::int32_t;

/**
 * A finite sequence of pairwise distinct integers.
 *
 * Values may be arbitrary (negative values show up in intermediate
 * constructions). A permutation is canonical when its value set is exactly
 * {1, ..., n}; that state is checked, not stored.
 */
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<Value> values);
  Permutation(std::initializer_list<Value> values);

  static Permutation identity(std::size_t n);

  std::size_t size() const { return values_.size(); }
  bool empty() const { return values_.empty(); }
  std::span<const Value> values() const { return values_; }
  Value operator[](std::size_t i) const { return values_[i]; }

  bool is_canonical() const;

  /// Throws InvalidInput unless canonical.
  void require_canonical(std::string_view context) const;

  bool operator==(const Permutation&) const = default;

 private:
  std::vector<Value> values_;
};

/// A permutation of [m] in reduced form; the representative of an order type.
class Pattern {
 public:
  Pattern() = default;

  /// Validates that `values` is a permutation of {1..m}.
  static Pattern from_values(std::vector<Value> values);

  std::size_t size() const { return values_.size(); }
  std::span<const Value> values() const { return values_; }
  Value operator[](std::size_t i) const { return values_[i]; }
  Permutation as_permutation() const { return Permutation(values_); }

  bool operator==(const Pattern&) const = default;
  auto operator<=>(const Pattern&) const = default;

 private:
  friend Pattern reduce(std::span<const Value> values);
  explicit Pattern(std::vector<Value> values) : values_(std::move(values)) {}
  std::vector<Value> values_;
};

/// Replaces each value by its rank (smallest -> 1). Throws on duplicates.
Pattern reduce(std::span<const Value> values);
inline Pattern reduce(const Permutation& p) { return reduce(p.values()); }

/// Same length and same relative order.
bool is_similar(std::span<const Value> a, std::span<const Value> b);
inline bool is_similar(const Permutation& a, const Permutation& b) {
  return is_similar(a.values(), b.values());
}

/**
 * Position-reversal and value-complement symmetries. Bit 0 is reversal,
 * bit 1 is complement, so composition is XOR of the tags.
 */
enum class Symmetry : std::uint8_t {
  identity = 0,
  reverse = 1,
  complement = 2,
  reverse_complement = 3,
};

inline constexpr Symmetry kAllSymmetries[] = {Symmetry::identity, Symmetry::reverse,
                                              Symmetry::complement,
                                              Symmetry::reverse_complement};

constexpr Symmetry compose(Symmetry a, Symmetry b) {
  return static_cast<Symmetry>(static_cast<std::uint8_t>(a) ^ static_cast<std::uint8_t>(b));
}

std::string_view symmetry_name(Symmetry s);

Permutation apply_symmetry(const Permutation& p, Symmetry s);

/// Maps a 1-based position of p through the positional part of s.
std::size_t map_position(std::size_t position, std::size_t n, Symmetry s);

/**
 * Uniform random canonical permutation of [n], deterministic in (n, seed).
 *
 * The generator is std::mt19937_64 seeded with splitmix64(seed); indices are
 * drawn with Lemire's unbiased multiply-and-reject method and applied as a
 * Fisher-Yates shuffle from the back. The stream is fixed by the standard, so
 * output is identical across platforms, runs and thread counts.
 */
Permutation random_permutation(std::size_t n, std::uint64_t seed);

std::uint64_t splitmix64(std::uint64_t x);

/// Independent per-trial seed: a stateless mix of (base, index).
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index);

}  // namespace twinperm
