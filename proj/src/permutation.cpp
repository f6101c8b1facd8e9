#include "twinperm/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>

namespace twinperm {

namespace {

bool has_duplicates(std::span<const Value> values) {
  std::vector<Value> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end();
}

__extension__ using u128 = unsigned __int128;

// Lemire's nearly-divisionless bounded draw in [0, bound).
std::uint64_t bounded(std::mt19937_64& gen, std::uint64_t bound) {
  u128 m = static_cast<u128>(gen()) * bound;
  auto low = static_cast<std::uint64_t>(m);
  if (low < bound) {
    const std::uint64_t threshold = -bound % bound;
    while (low < threshold) {
      m = static_cast<u128>(gen()) * bound;
      low = static_cast<std::uint64_t>(m);
    }
  }
  return static_cast<std::uint64_t>(m >> 64);
}

}  // namespace

Permutation::Permutation(std::vector<Value> values) : values_(std::move(values)) {
  if (has_duplicates(values_)) {
    throw InvalidInput("permutation values must be pairwise distinct");
  }
}

Permutation::Permutation(std::initializer_list<Value> values)
    : Permutation(std::vector<Value>(values)) {}

Permutation Permutation::identity(std::size_t n) {
  std::vector<Value> v(n);
  std::iota(v.begin(), v.end(), Value{1});
  return Permutation(std::move(v));
}

bool Permutation::is_canonical() const {
  const auto n = static_cast<Value>(values_.size());
  // Distinctness is a class invariant, so the range check suffices.
  return std::all_of(values_.begin(), values_.end(),
                     [n](Value v) { return v >= 1 && v <= n; });
}

void Permutation::require_canonical(std::string_view context) const {
  if (!is_canonical()) {
    throw InvalidInput(std::string(context) + ": permutation must have values exactly 1..n");
  }
}

Pattern Pattern::from_values(std::vector<Value> values) {
  Permutation p(values);
  p.require_canonical("pattern");
  return Pattern(std::move(values));
}

Pattern reduce(std::span<const Value> values) {
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  std::vector<Value> ranks(values.size());
  for (std::size_t r = 0; r < order.size(); ++r) {
    if (r > 0 && values[order[r]] == values[order[r - 1]]) {
      throw InvalidInput("reduce: duplicate value " + std::to_string(values[order[r]]));
    }
    ranks[order[r]] = static_cast<Value>(r + 1);
  }
  return Pattern(std::move(ranks));
}

bool is_similar(std::span<const Value> a, std::span<const Value> b) {
  if (a.size() != b.size()) return false;
  // Pairwise comparison avoids materialising both reductions.
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      if ((a[i] < a[j]) != (b[i] < b[j])) return false;
    }
  }
  return true;
}

std::string_view symmetry_name(Symmetry s) {
  switch (s) {
    case Symmetry::identity: return "identity";
    case Symmetry::reverse: return "reverse";
    case Symmetry::complement: return "complement";
    case Symmetry::reverse_complement: return "reverse-complement";
  }
  return "?";
}

Permutation apply_symmetry(const Permutation& p, Symmetry s) {
  p.require_canonical("apply_symmetry");
  const auto bits = static_cast<std::uint8_t>(s);
  std::vector<Value> out(p.values().begin(), p.values().end());
  if (bits & 1U) std::reverse(out.begin(), out.end());
  if (bits & 2U) {
    const auto n1 = static_cast<Value>(out.size() + 1);
    for (auto& v : out) v = n1 - v;
  }
  return Permutation(std::move(out));
}

std::size_t map_position(std::size_t position, std::size_t n, Symmetry s) {
  return (static_cast<std::uint8_t>(s) & 1U) ? n + 1 - position : position;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
  return splitmix64(splitmix64(base) ^ (index * 0xD1B54A32D192ED03ULL + 0x8CB92BA72F3D8DD7ULL));
}

Permutation random_permutation(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw InvalidInput("random_permutation: n must be at least 1");
  std::mt19937_64 gen(splitmix64(seed));
  std::vector<Value> v(n);
  std::iota(v.begin(), v.end(), Value{1});
  for (std::size_t i = n - 1; i > 0; --i) {
    const auto j = static_cast<std::size_t>(bounded(gen, i + 1));
    std::swap(v[i], v[j]);
  }
  return Permutation(std::move(v));
}

}  // namespace twinperm
