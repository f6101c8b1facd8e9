#include "twinperm/construct.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace twinperm {

namespace {

std::size_t need(const std::optional<std::size_t>& v, std::string_view what,
                 std::string_view family) {
  if (!v) throw InvalidInput(std::string(family) + " requires --" + std::string(what));
  return *v;
}

const std::map<std::string, std::vector<Value>, std::less<>>& literals() {
  static const std::map<std::string, std::vector<Value>, std::less<>> table{
      {"pi2", {1, 4, 3, 2, 5}},
      {"pi3", {11, 2, 3, 8, 7, 6, 5, 4, 9, 10, 1}},
      {"pi12", {4, 5, 6, 9, 8, 7, 1, 2, 3, 12, 11, 10}},
      {"intro-tight2", {12, 6, 7, 2, 5, 4, 1, 3, 8, 13, 10, 9, 11}},
      {"intro-tight4", {14, 18, 2, 5, 4, 1, 15, 12, 7, 17, 8, 9, 16, 3, 6, 10, 11, 13}},
      {"intro-block4", {14, 2, 1, 3, 18, 6, 10, 5, 4, 8, 15, 7, 17, 11, 13, 12, 9, 16}},
      {"intro-blocktight4", {14, 18, 6, 2, 1, 3, 5, 4, 8, 15, 7, 17, 12, 9, 16, 10, 11, 13}},
  };
  return table;
}

Permutation reduced(const Permutation& raw) { return reduce(raw).as_permutation(); }

}  // namespace

Permutation alternating_blocks_raw(std::size_t block, std::size_t n) {
  if (block == 0) throw InvalidInput("block length must be positive");
  if (n == 0 || n % block != 0) {
    throw InvalidInput("n must be a positive multiple of the block length " +
                       std::to_string(block));
  }
  std::vector<Value> out;
  out.reserve(n);
  for (std::size_t m = 1; m * block <= n; ++m) {
    const bool negative = m % 2 == 1;
    for (std::size_t i = m * block; i > (m - 1) * block; --i) {
      const auto v = static_cast<Value>(i);
      out.push_back(negative ? -v : v);
    }
  }
  return Permutation(std::move(out));
}

Permutation build_pi_k(std::size_t k, std::size_t n) {
  if (k < 2) throw InvalidInput("pi-k requires k >= 2");
  return reduced(alternating_blocks_raw(2 * k - 1, n));
}

Permutation build_pi_rk(std::size_t r, std::size_t k, std::size_t n) {
  if (r < 2 || k < 2) throw InvalidInput("pi-rk requires r >= 2 and k >= 2");
  return reduced(alternating_blocks_raw(r * k - 1, n));
}

Permutation quadratic_raw(std::size_t r) {
  if (r < 4) throw InvalidInput("the mirrored zigzag requires r >= 4");
  // Segment lengths: r-1, r-1, r-2, ..., 1, then singletons up to index 3r-7.
  std::vector<std::vector<Value>> segs;
  Value next = 1;
  for (std::size_t m = 0; m <= 3 * r - 7; ++m) {
    const std::size_t len = m == 0 ? r - 1 : (m < r ? r - m : 1);
    std::vector<Value> seg(len);
    for (auto& v : seg) v = next++;
    segs.push_back(std::move(seg));
  }
  std::vector<Value> right{0};
  for (std::size_t m = 0; m < segs.size(); ++m) {
    const Value sign = m % 2 == 0 ? -1 : 1;
    for (Value v : segs[m]) right.push_back(sign * v);
  }
  std::vector<Value> out;
  for (std::size_t i = right.size(); i-- > 1;) out.push_back(-right[i]);
  out.insert(out.end(), right.begin(), right.end());
  return Permutation(std::move(out));
}

Permutation build_quadratic(std::size_t r) {
  if (r < 3) throw InvalidInput("quadratic requires r >= 3");
  if (r == 3) return build_small_witness("pi3");
  const auto shift = static_cast<Value>(r * (r - 1) / 2 + 3 * r - 6);
  const Permutation raw = quadratic_raw(r);
  std::vector<Value> out(raw.values().begin(), raw.values().end());
  for (auto& v : out) v += shift;
  return Permutation(std::move(out));
}

Permutation build_small_witness(std::string_view name) {
  const auto& table = literals();
  const auto it = table.find(name);
  if (it == table.end()) throw InvalidInput("unknown witness name: " + std::string(name));
  return Permutation(it->second);
}

const std::vector<std::string>& small_witness_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, values] : literals()) out.push_back(name);
    return out;
  }();
  return names;
}

Permutation build_alternating(std::size_t n) {
  if (n == 0) throw InvalidInput("alternating requires n >= 1");
  std::vector<Value> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<Value>(i + 1);
  // 1-based descents sit at i = 3, 4 (mod 4), so positions 4q+3 .. 4q+5 fall.
  for (std::size_t lo = 3; lo < n; lo += 4) {
    const std::size_t hi = std::min(lo + 2, n);
    std::reverse(v.begin() + static_cast<std::ptrdiff_t>(lo - 1),
                 v.begin() + static_cast<std::ptrdiff_t>(hi));
  }
  return Permutation(std::move(v));
}

Permutation avoider_for_length(std::size_t r, std::size_t ell, std::size_t n) {
  if (r < 2) throw InvalidInput("avoider_for_length requires r >= 2");
  if (ell < 3) throw InvalidInput("avoider_for_length requires ell >= 3");
  if (n == 0) throw InvalidInput("avoider_for_length requires n >= 1");
  const std::size_t k = (ell + 1) / 2;
  const std::size_t block = r * k - 1;
  const std::size_t full = (n + block - 1) / block * block;
  const Permutation raw = alternating_blocks_raw(block, full);
  return reduced(Permutation(std::vector<Value>(raw.values().begin(),
                                                raw.values().begin() +
                                                    static_cast<std::ptrdiff_t>(n))));
}

Permutation build(const ConstructionSpec& spec) {
  const std::string& f = spec.family;
  if (f == "pi-k") return build_pi_k(need(spec.k, "k", f), need(spec.n, "n", f));
  if (f == "pi-rk") {
    return build_pi_rk(need(spec.r, "r", f), need(spec.k, "k", f), need(spec.n, "n", f));
  }
  if (f == "quadratic") return build_quadratic(need(spec.r, "r", f));
  if (f == "pi2" || f == "pi3") return build_small_witness(f);
  if (f == "alternating") return build_alternating(need(spec.n, "n", f));
  if (f == "intro-example") {
    if (spec.name.empty()) throw InvalidInput("intro-example requires --name");
    return build_small_witness(spec.name);
  }
  throw InvalidInput("unknown construction family: " + f);
}

}  // namespace twinperm
