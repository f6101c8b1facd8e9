#include <algorithm>
#include <string>

#include "twinperm/detect.hpp"

namespace twinperm {

std::string_view kind_name(TwinKind kind) {
  switch (kind) {
    case TwinKind::block: return "block";
    case TwinKind::tight: return "tight";
    case TwinKind::block_tight: return "block-tight";
  }
  return "?";
}

TwinKind parse_kind(std::string_view name) {
  if (name == "block") return TwinKind::block;
  if (name == "tight") return TwinKind::tight;
  if (name == "block-tight" || name == "blocktight") return TwinKind::block_tight;
  throw InvalidInput("unknown twin kind: " + std::string(name));
}

std::string certificate_error(const Permutation& host, const TwinsCertificate& cert) {
  const std::size_t n = host.size();
  if (cert.r < 1 || cert.k < 1) return "r and k must be positive";
  if (cert.position_sets.size() != cert.r) return "expected r position sets";
  if (cert.pattern.size() != cert.k) return "pattern length differs from k";

  std::vector<char> used(n + 1, 0);
  std::vector<Value> sub(cert.k);
  for (const auto& set : cert.position_sets) {
    if (set.size() != cert.k) return "position set of wrong size";
    for (std::size_t i = 0; i < set.size(); ++i) {
      if (set[i] < 1 || set[i] > n) return "position out of range";
      if (i > 0 && set[i] <= set[i - 1]) return "position set not strictly increasing";
      if (used[set[i]]) return "position sets overlap";
      used[set[i]] = 1;
      sub[i] = host[set[i] - 1];
    }
    if (!(reduce(sub) == cert.pattern)) return "subsequence does not reduce to the pattern";
  }

  const auto is_interval = [](const std::vector<std::size_t>& s) {
    return s.back() - s.front() + 1 == s.size();
  };
  if (cert.kind == TwinKind::block || cert.kind == TwinKind::block_tight) {
    for (const auto& set : cert.position_sets) {
      if (!is_interval(set)) return "block is not an interval";
    }
  }
  if (cert.kind == TwinKind::tight || cert.kind == TwinKind::block_tight) {
    std::size_t lo = n + 1;
    std::size_t hi = 0;
    for (const auto& set : cert.position_sets) {
      lo = std::min(lo, set.front());
      hi = std::max(hi, set.back());
    }
    if (hi - lo + 1 != cert.r * cert.k) return "union of positions is not an interval";
  }
  if (cert.kind == TwinKind::block_tight) {
    auto starts = cert.position_sets;
    std::sort(starts.begin(), starts.end());
    for (std::size_t j = 1; j < starts.size(); ++j) {
      if (starts[j].front() != starts[j - 1].back() + 1) return "blocks are not consecutive";
    }
  }
  return {};
}

}  // namespace twinperm
