#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

#include "twinperm/permutation.hpp"

namespace twinperm::kernels {

struct KernelTable {
  std::size_t (*count_less)(std::span<const Value>, Value);
  void (*less_mask)(std::span<const Value>, Value, std::span<std::uint64_t>);
  void (*greater_mask)(std::span<const Value>, Value, std::span<std::uint64_t>);
  void (*window_ranks)(std::span<const Value>, std::span<std::uint16_t>);
};

namespace scalar {
extern const KernelTable table;
}

#if TWINPERM_HAVE_AVX2
namespace avx2 {
extern const KernelTable table;
}
#endif

}  // namespace twinperm::kernels
