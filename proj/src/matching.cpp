#include "twinperm/matching.hpp"

#include <bit>
#include <cmath>
#include <limits>
#include <queue>
#include <string>

#include "twinperm/kernels.hpp"

namespace twinperm {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

// Row-major bitset adjacency: row i is a mask over the opposite side.
struct BitGraph {
  std::size_t rows = 0;
  std::size_t words = 0;
  std::vector<std::uint64_t> bits;

  std::span<std::uint64_t> row(std::size_t i) { return {bits.data() + i * words, words}; }
  std::span<const std::uint64_t> row(std::size_t i) const {
    return {bits.data() + i * words, words};
  }
};

// Row i of U: W entries above (greater) or below (less) value u[i].
BitGraph half_graph(std::span<const Value> from, std::span<const Value> to, bool greater) {
  BitGraph g;
  g.rows = from.size();
  g.words = kernels::mask_words(to.size());
  g.bits.assign(g.rows * g.words, 0);
  for (std::size_t i = 0; i < from.size(); ++i) {
    if (greater) {
      kernels::greater_mask(to, from[i], g.row(i));
    } else {
      kernels::less_mask(to, from[i], g.row(i));
    }
  }
  return g;
}

template <typename F>
void for_each_bit(std::span<const std::uint64_t> row, F&& f) {
  for (std::size_t w = 0; w < row.size(); ++w) {
    std::uint64_t b = row[w];
    while (b) {
      f(w * 64 + static_cast<std::size_t>(std::countr_zero(b)));
      b &= b - 1;
    }
  }
}

class HopcroftKarp {
 public:
  explicit HopcroftKarp(const BitGraph& g)
      : g_(g), mate_u_(g.rows, kNone), mate_w_(g.rows, kNone), dist_(g.rows) {}

  std::size_t run() {
    std::size_t matched = 0;
    while (bfs()) {
      for (std::size_t u = 0; u < g_.rows; ++u) {
        if (mate_u_[u] == kNone && dfs(u)) ++matched;
      }
    }
    return matched;
  }

  const std::vector<std::size_t>& mate_u() const { return mate_u_; }

 private:
  bool bfs() {
    std::queue<std::size_t> q;
    bool reachable_free = false;
    for (std::size_t u = 0; u < g_.rows; ++u) {
      if (mate_u_[u] == kNone) {
        dist_[u] = 0;
        q.push(u);
      } else {
        dist_[u] = kNone;
      }
    }
    while (!q.empty()) {
      const std::size_t u = q.front();
      q.pop();
      for_each_bit(g_.row(u), [&](std::size_t w) {
        const std::size_t next = mate_w_[w];
        if (next == kNone) {
          reachable_free = true;
        } else if (dist_[next] == kNone) {
          dist_[next] = dist_[u] + 1;
          q.push(next);
        }
      });
    }
    return reachable_free;
  }

  bool dfs(std::size_t u) {
    const auto row = g_.row(u);
    for (std::size_t wi = 0; wi < row.size(); ++wi) {
      std::uint64_t b = row[wi];
      while (b) {
        const std::size_t w = wi * 64 + static_cast<std::size_t>(std::countr_zero(b));
        b &= b - 1;
        const std::size_t next = mate_w_[w];
        if (next == kNone || (dist_[next] == dist_[u] + 1 && dfs(next))) {
          mate_u_[u] = w;
          mate_w_[w] = u;
          return true;
        }
      }
    }
    dist_[u] = kNone;
    return false;
  }

  const BitGraph& g_;
  std::vector<std::size_t> mate_u_;
  std::vector<std::size_t> mate_w_;
  std::vector<std::size_t> dist_;
};

}  // namespace

std::string_view orientation_name(Orientation o) {
  return o == Orientation::increasing ? "increasing" : "decreasing";
}

Orientation parse_orientation(std::string_view name) {
  if (name == "increasing") return Orientation::increasing;
  if (name == "decreasing") return Orientation::decreasing;
  throw InvalidInput("unknown orientation: " + std::string(name));
}

TwinsCertificate MatchCertificate::as_twins(std::size_t offset) const {
  TwinsCertificate cert;
  cert.kind = TwinKind::tight;
  cert.r = pairs.size();
  cert.k = 2;
  for (const auto& [i, j] : pairs) cert.position_sets.push_back({i + offset, j + offset});
  cert.pattern = Pattern::from_values(orientation == Orientation::increasing
                                          ? std::vector<Value>{1, 2}
                                          : std::vector<Value>{2, 1});
  return cert;
}

std::optional<MatchCertificate> match2(std::span<const Value> values, Orientation o) {
  const std::size_t n = values.size();
  if (n == 0 || n % 2 != 0) throw InvalidInput("match2: length must be even and positive");
  const std::size_t half = n / 2;
  const auto u = values.first(half);
  const auto w = values.subspan(half);
  const BitGraph g = half_graph(u, w, o == Orientation::increasing);
  HopcroftKarp hk(g);
  if (hk.run() != half) return std::nullopt;
  MatchCertificate cert;
  cert.orientation = o;
  for (std::size_t i = 0; i < half; ++i) cert.pairs.emplace_back(i + 1, half + hk.mate_u()[i] + 1);
  return cert;
}

DegreeStats degree_stats(const Permutation& p) {
  const std::size_t n = p.size();
  if (n == 0 || n % 2 != 0) throw InvalidInput("degree_stats: length must be even and positive");
  const std::size_t r = n / 2;
  const auto u = p.values().first(r);
  const auto w = p.values().subspan(r);
  // Edge iℓ for i in U, ℓ in W whenever p(i) < p(ℓ).
  const BitGraph gu = half_graph(u, w, true);
  const BitGraph gw = half_graph(w, u, false);

  const double rr = static_cast<double>(r);
  const double slack = std::pow(rr, 2.0 / 3.0);
  DegreeStats s;
  s.r = r;
  s.min_degree = s.min_codegree = std::numeric_limits<std::size_t>::max();

  const auto popcount_row = [](std::span<const std::uint64_t> row) {
    std::size_t c = 0;
    for (auto b : row) c += static_cast<std::size_t>(std::popcount(b));
    return c;
  };
  const auto side = [&](const BitGraph& g) {
    for (std::size_t i = 0; i < g.rows; ++i) {
      const std::size_t d = popcount_row(g.row(i));
      s.min_degree = std::min(s.min_degree, d);
      s.max_degree = std::max(s.max_degree, d);
      if (std::abs(static_cast<double>(d) - rr / 2) > slack) ++s.degrees_outside;
      for (std::size_t j = i + 1; j < g.rows; ++j) {
        std::size_t c = 0;
        const auto a = g.row(i);
        const auto b = g.row(j);
        for (std::size_t t = 0; t < g.words; ++t) c += static_cast<std::size_t>(std::popcount(a[t] & b[t]));
        s.min_codegree = std::min(s.min_codegree, c);
        s.max_codegree = std::max(s.max_codegree, c);
        if (std::abs(static_cast<double>(c) - rr / 3) > slack) ++s.codegrees_outside;
      }
    }
  };
  side(gu);
  side(gw);
  if (r < 2) s.min_codegree = s.max_codegree = 0;
  return s;
}

}  // namespace twinperm
