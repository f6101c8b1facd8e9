#pragma once

// Slow, independent reference implementations used to cross-check the
// library. Nothing here calls into the detectors or the solver.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <vector>

namespace oracle {

using Seq = std::vector<int>;

// ranks[i] = number of entries below a[i]; quadratic on purpose.
inline Seq order_type(const Seq& a) {
  Seq out(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) out[i] += a[j] < a[i];
  }
  return out;
}

inline bool all_same_type(const std::vector<Seq>& parts) {
  const Seq first = order_type(parts[0]);
  for (std::size_t i = 1; i < parts.size(); ++i) {
    if (order_type(parts[i]) != first) return false;
  }
  return true;
}

// Every labelling of the window with r labels, k of each, first occurrences
// in label order. Patterns are compared only once the labelling is complete.
inline bool splits_into_similar(const Seq& w, std::size_t r, std::size_t k) {
  if (w.size() != r * k) return false;
  std::vector<std::size_t> label(w.size());
  std::vector<std::size_t> fill(r, 0);
  const auto go = [&](auto&& self, std::size_t t, std::size_t opened) -> bool {
    if (t == w.size()) {
      std::vector<Seq> parts(r);
      for (std::size_t i = 0; i < w.size(); ++i) parts[label[i]].push_back(w[i]);
      return all_same_type(parts);
    }
    for (std::size_t c = 0; c < std::min(opened + 1, r); ++c) {
      if (fill[c] == k) continue;
      label[t] = c;
      ++fill[c];
      const bool hit = self(self, t + 1, std::max(opened, c + 1));
      --fill[c];
      if (hit) return true;
    }
    return false;
  };
  return go(go, 0, 0);
}

inline bool has_tight(const Seq& p, std::size_t r, std::size_t k) {
  const std::size_t m = r * k;
  for (std::size_t s = 0; s + m <= p.size(); ++s) {
    if (splits_into_similar(Seq(p.begin() + s, p.begin() + s + m), r, k)) return true;
  }
  return false;
}

inline Seq slice(const Seq& p, std::size_t start, std::size_t len) {
  return Seq(p.begin() + static_cast<long>(start), p.begin() + static_cast<long>(start + len));
}

// Any r pairwise disjoint length-k intervals with equal order types.
inline bool has_block(const Seq& p, std::size_t r, std::size_t k) {
  if (r * k > p.size()) return false;
  std::vector<std::size_t> start(r);
  const auto go = [&](auto&& self, std::size_t i, std::size_t from) -> bool {
    if (i == r) {
      std::vector<Seq> parts;
      for (std::size_t s : start) parts.push_back(slice(p, s, k));
      return all_same_type(parts);
    }
    for (std::size_t s = from; s + k <= p.size(); ++s) {
      start[i] = s;
      if (self(self, i + 1, s + k)) return true;
    }
    return false;
  };
  return go(go, 0, 0);
}

inline bool has_blocktight(const Seq& p, std::size_t r, std::size_t k) {
  const std::size_t m = r * k;
  for (std::size_t s = 0; s + m <= p.size(); ++s) {
    std::vector<Seq> parts;
    for (std::size_t i = 0; i < r; ++i) parts.push_back(slice(p, s + i * k, k));
    if (all_same_type(parts)) return true;
  }
  return false;
}

inline std::uint64_t factorial(std::size_t n) {
  std::uint64_t f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

// Q(r, k) by plain enumeration of S_rk.
inline std::uint64_t count_q(std::size_t r, std::size_t k) {
  Seq p(r * k);
  std::iota(p.begin(), p.end(), 1);
  std::uint64_t count = 0;
  do {
    count += splits_into_similar(p, r, k);
  } while (std::next_permutation(p.begin(), p.end()));
  return count;
}

// Largest r with block r-twins of length k (1 when none).
inline std::size_t block_rmax(const Seq& p, std::size_t k) {
  for (std::size_t r = p.size() / k; r >= 2; --r) {
    if (has_block(p, r, k)) return r;
  }
  return 1;
}

// Number of permutations of [n] whose entries on the given position sets
// (1-based) have pairwise equal order types.
inline std::uint64_t count_twins_on(std::size_t n, const std::vector<std::vector<std::size_t>>& sets) {
  Seq p(n);
  std::iota(p.begin(), p.end(), 1);
  std::uint64_t count = 0;
  do {
    std::vector<Seq> parts;
    for (const auto& s : sets) {
      Seq part;
      for (std::size_t pos : s) part.push_back(p[pos - 1]);
      parts.push_back(part);
    }
    count += all_same_type(parts);
  } while (std::next_permutation(p.begin(), p.end()));
  return count;
}

}  // namespace oracle
