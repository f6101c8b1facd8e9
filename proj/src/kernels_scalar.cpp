#include <algorithm>

#include "kernels_impl.hpp"

namespace twinperm::kernels::scalar {

namespace {

std::size_t count_less(std::span<const Value> values, Value pivot) {
  std::size_t c = 0;
  for (Value v : values) c += static_cast<std::size_t>(v < pivot);
  return c;
}

template <typename Cmp>
void compare_mask(std::span<const Value> values, Value pivot, std::span<std::uint64_t> bits,
                  Cmp cmp) {
  std::fill(bits.begin(), bits.end(), 0);
  for (std::size_t i = 0; i < values.size(); ++i) {
    bits[i / 64] |= static_cast<std::uint64_t>(cmp(values[i], pivot)) << (i % 64);
  }
}

void less_mask(std::span<const Value> values, Value pivot, std::span<std::uint64_t> bits) {
  compare_mask(values, pivot, bits, [](Value a, Value b) { return a < b; });
}

void greater_mask(std::span<const Value> values, Value pivot, std::span<std::uint64_t> bits) {
  compare_mask(values, pivot, bits, [](Value a, Value b) { return a > b; });
}

void window_ranks(std::span<const Value> window, std::span<std::uint16_t> ranks) {
  for (std::size_t i = 0; i < window.size(); ++i) {
    ranks[i] = static_cast<std::uint16_t>(count_less(window, window[i]));
  }
}

}  // namespace

const KernelTable table{count_less, less_mask, greater_mask, window_ranks};

}  // namespace twinperm::kernels::scalar
