#pragma once

// Comparison kernels shared by the detectors and the matching code.
//
// Every kernel has a portable scalar reference and, on x86-64, an AVX2
// variant. The variant is picked once at startup from CPUID and can be
// overridden (tests pin each ISA in turn and compare outputs).

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

#include "twinperm/permutation.hpp"

namespace twinperm::kernels {

enum class Isa : std::uint8_t { scalar, avx2 };

std::string_view isa_name(Isa isa);

/// Whether this binary contains, and this CPU runs, the given variant.
bool isa_supported(Isa isa);

/// Widest supported variant.
Isa best_isa();

/// Variant currently used by the dispatched entry points.
Isa active_isa();

/// Selects a variant; throws InvalidInput when unsupported.
void set_isa(Isa isa);

/// Number of entries of `values` strictly below `pivot`.
std::size_t count_less(std::span<const Value> values, Value pivot);

/**
 * Bit i of `bits` is set iff values[i] < pivot (less_mask) or
 * values[i] > pivot (greater_mask). `bits` must hold ceil(size/64) words;
 * bits past values.size() are cleared.
 */
void less_mask(std::span<const Value> values, Value pivot, std::span<std::uint64_t> bits);
void greater_mask(std::span<const Value> values, Value pivot, std::span<std::uint64_t> bits);

/// ranks[i] = number of window entries below window[i] (0-based ranks).
void window_ranks(std::span<const Value> window, std::span<std::uint16_t> ranks);

inline std::size_t mask_words(std::size_t bits) { return (bits + 63) / 64; }

}  // namespace twinperm::kernels
