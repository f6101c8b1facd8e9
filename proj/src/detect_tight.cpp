#include <algorithm>
#include <bit>
#include <numeric>
#include <limits>
#include <string>

#include "twinperm/detect.hpp"

namespace twinperm {

TightWindowSolver::TightWindowSolver(std::size_t r, std::size_t k)
    : r_(r), k_(k), m_(r * k) {
  if (r < 1 || k < 1) throw InvalidInput("tight solver: r and k must be positive");
  if (r > 255 || k > 65535) throw InvalidInput("tight solver: r or k too large");
  groups_.resize(r * k);
  sorted_.resize(r * k);
  len_.resize(r);
  code_.resize(k);
  cover_.resize(k);
  label_.resize(m_);
  ranks_.resize(m_);
  order_.resize(m_);
  if (m_ <= 128) below_.resize(m_ + 1);
}

bool TightWindowSolver::solve(std::span<const Value> window) {
  if (window.size() != m_) throw InvalidInput("tight solver: window length must be r*k");
  std::iota(order_.begin(), order_.end(), std::size_t{0});
  std::sort(order_.begin(), order_.end(),
            [&](std::size_t a, std::size_t b) { return window[a] < window[b]; });
  for (std::size_t v = 0; v < m_; ++v) ranks_[order_[v]] = static_cast<Value>(v);
  if (!below_.empty()) {
    below_[0] = 0;
    for (std::size_t v = 0; v < m_; ++v) below_[v + 1] = below_[v] | (Mask{1} << order_[v]);
  }
  w_ = ranks_;
  std::fill(len_.begin(), len_.end(), 0);
  std::fill(cover_.begin(), cover_.end(), 0);
  opened_ = 0;
  nodes_ = 0;
  return place(0);
}

std::size_t TightWindowSolver::for_each_solution(
    std::span<const Value> window, const std::function<bool(std::span<const std::uint8_t>)>& visit) {
  visit_ = &visit;
  visited_ = 0;
  try {
    solve(window);
  } catch (...) {
    visit_ = nullptr;
    throw;
  }
  visit_ = nullptr;
  return visited_;
}

bool TightWindowSolver::followers_feasible(std::size_t next) const {
  std::size_t maxlen = 0;
  std::size_t lead = 0;
  for (std::size_t j = 0; j < opened_; ++j) {
    if (len_[j] > maxlen) {
      maxlen = len_[j];
      lead = j;
    }
  }
  const Value* ref = groups_.data() + lead * k_;
  const bool masks = !below_.empty();
  for (std::size_t j = 0; j < opened_; ++j) {
    const std::size_t l = len_[j];
    if (l == maxlen) continue;
    const Value* sorted = sorted_.data() + j * k_;
    std::size_t pos = next;
    for (std::size_t i = l; i < maxlen; ++i) {
      std::size_t c = 0;
      for (std::size_t q = 0; q < l; ++q) c += static_cast<std::size_t>(ref[q] < ref[i]);
      // Ranks are 0..m-1, so -1 and m are open sentinels.
      const Value lo = c > 0 ? sorted[c - 1] : -1;
      const Value hi = c < l ? sorted[c] : static_cast<Value>(m_);
      if (masks) {
        if (pos >= m_) return false;
        const Mask hits = (below_[static_cast<std::size_t>(hi)] & ~below_[static_cast<std::size_t>(lo + 1)]) >> pos;
        if (hits == 0) return false;
        const auto low = static_cast<std::uint64_t>(hits);
        pos += low ? static_cast<std::size_t>(std::countr_zero(low))
                   : 64 + static_cast<std::size_t>(std::countr_zero(static_cast<std::uint64_t>(hits >> 64)));
      } else {
        while (pos < m_ && !(lo < w_[pos] && w_[pos] < hi)) ++pos;
        if (pos == m_) return false;
      }
      ++pos;
    }
    // pos is one past the earliest end of the gap chain; k_ - maxlen entries still follow.
    if (pos + (k_ - maxlen) > m_) return false;
  }
  return true;
}

bool TightWindowSolver::place(std::size_t t) {
  if (t == m_) {
    if (!visit_) return true;
    ++visited_;
    return !(*visit_)(label_);
  }
  ++nodes_;
  const Value x = w_[t];
  const std::size_t limit = std::min(opened_, r_ - 1);
  for (std::size_t j = 0; j <= limit; ++j) {
    const std::size_t l = len_[j];
    if (l == k_) continue;
    Value* g = groups_.data() + j * k_;
    Value* sorted = sorted_.data() + j * k_;
    const auto c = static_cast<std::uint16_t>(std::lower_bound(sorted, sorted + l, x) - sorted);
    if (cover_[l] > 0) {
      if (code_[l] != c) continue;
    } else {
      code_[l] = c;
    }
    g[l] = x;
    std::copy_backward(sorted + c, sorted + l, sorted + l + 1);
    sorted[c] = x;
    ++cover_[l];
    ++len_[j];
    const bool opens = j == opened_;
    if (opens) ++opened_;
    label_[t] = static_cast<std::uint8_t>(j);
    if (followers_feasible(t + 1) && place(t + 1)) return true;
    if (opens) --opened_;
    --len_[j];
    --cover_[l];
    std::copy(sorted + c + 1, sorted + l + 1, sorted + c);
  }
  return false;
}

TwinsCertificate tight_certificate(const Permutation& p, std::size_t start, std::size_t r,
                                   std::size_t k, std::span<const std::uint8_t> labels) {
  TwinsCertificate cert;
  cert.kind = TwinKind::tight;
  cert.r = r;
  cert.k = k;
  cert.position_sets.assign(r, {});
  for (std::size_t t = 0; t < labels.size(); ++t) {
    cert.position_sets[labels[t]].push_back(start + t + 1);
  }
  std::vector<Value> first;
  for (std::size_t pos : cert.position_sets[0]) first.push_back(p[pos - 1]);
  cert.pattern = reduce(first);
  return cert;
}

DetectOutcome detect_tight(const Permutation& p, std::size_t r, std::size_t k) {
  if (r < 1 || k < 1) throw InvalidInput("detect_tight: r and k must be positive");
  DetectOutcome out;
  const std::size_t m = r * k;
  if (p.size() < m) return out;
  TightWindowSolver solver(r, k);
  const auto vals = p.values();
  for (std::size_t s = 0; s + m <= p.size(); ++s) {
    if (solver.solve(vals.subspan(s, m))) {
      out.found = true;
      out.certificate = tight_certificate(p, s, r, k, solver.assignment());
      return out;
    }
  }
  return out;
}

DetectOutcome detect_tight_window(const Permutation& p, std::size_t r, std::size_t k,
                                  std::size_t start) {
  if (r < 1 || k < 1) throw InvalidInput("detect_tight: r and k must be positive");
  const std::size_t m = r * k;
  if (start < 1 || start - 1 + m > p.size()) throw InvalidInput("window outside the permutation");
  DetectOutcome out;
  TightWindowSolver solver(r, k);
  if (solver.solve(p.values().subspan(start - 1, m))) {
    out.found = true;
    out.certificate = tight_certificate(p, start - 1, r, k, solver.assignment());
  }
  return out;
}

namespace {

struct PartitionOracle {
  std::span<const Value> w;
  std::size_t r;
  std::size_t k;
  std::vector<std::size_t> cls;
  std::vector<std::size_t> size;

  bool all_similar() const {
    std::vector<std::vector<Value>> parts(r);
    for (std::size_t t = 0; t < w.size(); ++t) parts[cls[t]].push_back(w[t]);
    const Pattern first = reduce(parts[0]);
    for (std::size_t c = 1; c < r; ++c) {
      if (!(reduce(parts[c]) == first)) return false;
    }
    return true;
  }

  bool go(std::size_t t, std::size_t used) {
    if (t == w.size()) return all_similar();
    for (std::size_t c = 0; c < std::min(used + 1, r); ++c) {
      if (size[c] == k) continue;
      cls[t] = c;
      ++size[c];
      const bool hit = go(t + 1, std::max(used, c + 1));
      --size[c];
      if (hit) return true;
    }
    return false;
  }
};

}  // namespace

bool oracle_tight(const Permutation& window, std::size_t r, std::size_t k) {
  if (r < 1 || k < 1) throw InvalidInput("oracle_tight: r and k must be positive");
  if (window.size() != r * k) throw InvalidInput("oracle_tight: window length must equal r*k");
  if (r * k > 12) throw InvalidInput("oracle_tight: r*k must be at most 12");
  PartitionOracle o{window.values(), r, k, std::vector<std::size_t>(r * k),
                    std::vector<std::size_t>(r)};
  return o.go(0, 0);
}

}  // namespace twinperm
