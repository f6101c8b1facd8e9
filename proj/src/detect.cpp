#include "twinperm/detect.hpp"

#include <numeric>

#include "detect_internal.hpp"
#include "twinperm/matching.hpp"

namespace twinperm {

namespace {

// Block b (values at b[0..k)) has the same order type as block a.
bool same_order(const Value* a, const Value* b, std::size_t k) {
  for (std::size_t t = 1; t < k; ++t) {
    for (std::size_t i = 0; i < t; ++i) {
      if ((a[i] < a[t]) != (b[i] < b[t])) return false;
    }
  }
  return true;
}

TwinsCertificate interval_certificate(const Permutation& p, TwinKind kind,
                                      std::span<const std::size_t> starts, std::size_t k) {
  TwinsCertificate cert;
  cert.kind = kind;
  cert.r = starts.size();
  cert.k = k;
  for (std::size_t s : starts) {
    std::vector<std::size_t> set(k);
    std::iota(set.begin(), set.end(), s + 1);
    cert.position_sets.push_back(std::move(set));
  }
  cert.pattern = reduce(p.values().subspan(starts.front(), k));
  return cert;
}

}  // namespace

DetectOutcome detect_blocktight(const Permutation& p, std::size_t r, std::size_t k) {
  if (r < 1 || k < 1) throw InvalidInput("detect_blocktight: r and k must be positive");
  DetectOutcome out;
  const std::size_t n = p.size();
  if (n < r * k) return out;
  const Value* v = p.values().data();
  for (std::size_t s = 0; s + r * k <= n; ++s) {
    bool ok = true;
    for (std::size_t b = 1; b < r && ok; ++b) ok = same_order(v + s, v + s + b * k, k);
    if (!ok) continue;
    std::vector<std::size_t> starts(r);
    for (std::size_t b = 0; b < r; ++b) starts[b] = s + b * k;
    out.found = true;
    out.certificate = interval_certificate(p, TwinKind::block_tight, starts, k);
    return out;
  }
  return out;
}

DetectOutcome detect(const Permutation& p, TwinKind kind, std::size_t r, std::size_t k) {
  switch (kind) {
    case TwinKind::block: return detect_block(p, r, k);
    case TwinKind::tight: return detect_tight(p, r, k);
    case TwinKind::block_tight: return detect_blocktight(p, r, k);
  }
  throw InvalidInput("unknown twin kind");
}

MaxLenResult max_len(const Permutation& p, std::size_t r, TwinKind kind,
                     const MaxLenOptions& options) {
  if (r < 1) throw InvalidInput("max_len: r must be positive");
  MaxLenResult out;
  const std::size_t n = p.size();
  if (n < r) return out;
  std::size_t top = n / r;

  if (kind == TwinKind::block && options.monotone_block) {
    for (std::size_t k = 1; k <= top; ++k) {
      auto d = detect_block(p, r, k);
      if (!d.found) break;
      out.k_max = k;
      out.certificate = std::move(d.certificate);
    }
    return out;
  }
  if (kind != TwinKind::block && options.k_limit > 0) top = std::min(top, options.k_limit);
  for (std::size_t k = top; k >= 1; --k) {
    auto d = detect(p, kind, r, k);
    if (d.found) {
      out.k_max = k;
      out.certificate = std::move(d.certificate);
      return out;
    }
  }
  return out;
}

RMaxResult r_max(const Permutation& p, std::size_t k, TwinKind kind) {
  const std::size_t n = p.size();
  if (k < 1) throw InvalidInput("r_max: k must be positive");
  if (n < k) throw InvalidInput("r_max: permutation shorter than k");
  RMaxResult out;

  if (kind == TwinKind::block) {
    auto scan = detail::scan_blocks(p, k, 0);
    out.r_max = scan.count;
    out.certificate = std::move(scan.certificate);
    return out;
  }
  if (kind != TwinKind::tight) throw InvalidInput("r_max: kind must be block or tight");

  if (k == 1) {
    std::vector<std::size_t> starts(n);
    std::iota(starts.begin(), starts.end(), std::size_t{0});
    out.r_max = n;
    out.certificate = interval_certificate(p, TwinKind::tight, starts, 1);
    return out;
  }
  for (std::size_t r = n / k; r >= 2; --r) {
    const std::size_t m = r * k;
    if (k == 2) {
      for (std::size_t s = 0; s + m <= n; ++s) {
        for (Orientation o : {Orientation::increasing, Orientation::decreasing}) {
          if (auto mc = match2(p.values().subspan(s, m), o)) {
            out.r_max = r;
            out.certificate = mc->as_twins(s);
            out.matching_shortcut = true;
            return out;
          }
        }
      }
    }
    auto d = detect_tight(p, r, k);
    if (d.found) {
      out.r_max = r;
      out.certificate = std::move(d.certificate);
      return out;
    }
  }
  const std::size_t first = 0;
  out.r_max = 1;
  out.certificate = interval_certificate(p, TwinKind::tight, {&first, 1}, k);
  return out;
}

}  // namespace twinperm
