#include "twinperm/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

#include "kernels_impl.hpp"

namespace twinperm::kernels {

namespace {

const KernelTable* table_for(Isa isa) {
#if TWINPERM_HAVE_AVX2
  if (isa == Isa::avx2) return &avx2::table;
#endif
  (void)isa;
  return &scalar::table;
}

// TWINPERM_ISA=scalar pins the scalar path; unknown or unsupported values are ignored.
Isa startup_isa() {
  const char* env = std::getenv("TWINPERM_ISA");
  if (env && std::string_view(env) == "scalar") return Isa::scalar;
  return best_isa();
}

std::atomic<const KernelTable*>& active_table() {
  static std::atomic<const KernelTable*> t{table_for(startup_isa())};
  return t;
}

std::atomic<Isa>& active_tag() {
  static std::atomic<Isa> tag{startup_isa()};
  return tag;
}

const KernelTable& table() { return *active_table().load(std::memory_order_relaxed); }

}  // namespace

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::scalar: return "scalar";
    case Isa::avx2: return "avx2";
  }
  return "?";
}

bool isa_supported(Isa isa) {
  switch (isa) {
    case Isa::scalar: return true;
    case Isa::avx2:
#if TWINPERM_HAVE_AVX2
      return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
#else
      return false;
#endif
  }
  return false;
}

Isa best_isa() { return isa_supported(Isa::avx2) ? Isa::avx2 : Isa::scalar; }

Isa active_isa() { return active_tag().load(std::memory_order_relaxed); }

void set_isa(Isa isa) {
  if (!isa_supported(isa)) {
    throw InvalidInput("kernel variant not available: " + std::string(isa_name(isa)));
  }
  active_table().store(table_for(isa), std::memory_order_relaxed);
  active_tag().store(isa, std::memory_order_relaxed);
}

std::size_t count_less(std::span<const Value> values, Value pivot) {
  return table().count_less(values, pivot);
}

void less_mask(std::span<const Value> values, Value pivot, std::span<std::uint64_t> bits) {
  table().less_mask(values, pivot, bits);
}

void greater_mask(std::span<const Value> values, Value pivot, std::span<std::uint64_t> bits) {
  table().greater_mask(values, pivot, bits);
}

void window_ranks(std::span<const Value> window, std::span<std::uint16_t> ranks) {
  table().window_ranks(window, ranks);
}

}  // namespace twinperm::kernels
