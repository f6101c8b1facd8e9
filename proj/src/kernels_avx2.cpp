// Compiled with -mavx2; only reached after a CPUID check.
#include <immintrin.h>

#include <algorithm>

#include "kernels_impl.hpp"

namespace twinperm::kernels::avx2 {

namespace {

inline unsigned lt_bits(const Value* p, __m256i pivot) {
  const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p));
  return static_cast<unsigned>(_mm256_movemask_ps(_mm256_castsi256_ps(_mm256_cmpgt_epi32(pivot, v))));
}

inline unsigned gt_bits(const Value* p, __m256i pivot) {
  const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p));
  return static_cast<unsigned>(_mm256_movemask_ps(_mm256_castsi256_ps(_mm256_cmpgt_epi32(v, pivot))));
}

std::size_t count_less(std::span<const Value> values, Value pivot) {
  const __m256i pv = _mm256_set1_epi32(pivot);
  const Value* p = values.data();
  const std::size_t n = values.size();
  std::size_t i = 0;
  std::size_t c = 0;
  if (n >= 16) {
    // Accumulate lane-wise: cmpgt yields -1 per hit.
    __m256i acc = _mm256_setzero_si256();
    for (; i + 8 <= n; i += 8) {
      const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p + i));
      acc = _mm256_sub_epi32(acc, _mm256_cmpgt_epi32(pv, v));
    }
    __m128i s = _mm_add_epi32(_mm256_castsi256_si128(acc), _mm256_extracti128_si256(acc, 1));
    s = _mm_add_epi32(s, _mm_shuffle_epi32(s, 0x4E));
    s = _mm_add_epi32(s, _mm_shuffle_epi32(s, 0xB1));
    c = static_cast<std::size_t>(_mm_cvtsi128_si32(s));
  } else {
    for (; i + 8 <= n; i += 8) c += static_cast<std::size_t>(_mm_popcnt_u32(lt_bits(p + i, pv)));
  }
  for (; i < n; ++i) c += static_cast<std::size_t>(p[i] < pivot);
  return c;
}

template <bool Less>
void compare_mask(std::span<const Value> values, Value pivot, std::span<std::uint64_t> bits) {
  std::fill(bits.begin(), bits.end(), 0);
  const __m256i pv = _mm256_set1_epi32(pivot);
  const Value* p = values.data();
  const std::size_t n = values.size();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const std::uint64_t m = Less ? lt_bits(p + i, pv) : gt_bits(p + i, pv);
    // i is a multiple of 8, so the byte never straddles two words.
    bits[i / 64] |= m << (i % 64);
  }
  for (; i < n; ++i) {
    const bool hit = Less ? p[i] < pivot : p[i] > pivot;
    bits[i / 64] |= static_cast<std::uint64_t>(hit) << (i % 64);
  }
}

void less_mask(std::span<const Value> values, Value pivot, std::span<std::uint64_t> bits) {
  compare_mask<true>(values, pivot, bits);
}

void greater_mask(std::span<const Value> values, Value pivot, std::span<std::uint64_t> bits) {
  compare_mask<false>(values, pivot, bits);
}

void window_ranks(std::span<const Value> window, std::span<std::uint16_t> ranks) {
  const std::size_t n = window.size();
  if (n <= 8) {
    // One masked load holds the whole window; padding lanes never compare below.
    alignas(32) Value buf[8];
    std::fill(std::begin(buf), std::end(buf), INT32_MAX);
    std::copy(window.begin(), window.end(), buf);
    const __m256i w = _mm256_load_si256(reinterpret_cast<const __m256i*>(buf));
    for (std::size_t i = 0; i < n; ++i) {
      const __m256i pv = _mm256_set1_epi32(window[i]);
      const auto m = static_cast<unsigned>(
          _mm256_movemask_ps(_mm256_castsi256_ps(_mm256_cmpgt_epi32(pv, w))));
      ranks[i] = static_cast<std::uint16_t>(_mm_popcnt_u32(m));
    }
    return;
  }
  for (std::size_t i = 0; i < n; ++i) {
    ranks[i] = static_cast<std::uint16_t>(count_less(window, window[i]));
  }
}

}  // namespace

const KernelTable table{count_less, less_mask, greater_mask, window_ranks};

}  // namespace twinperm::kernels::avx2
