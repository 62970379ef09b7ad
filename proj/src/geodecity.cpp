#include "geodex/geodecity.hpp"

#include <algorithm>
#include <stdexcept>

#include "geodex/detail/bits.hpp"

namespace geodex {

using detail::for_each_bit;

bool walk_is_valid(const Digraph& g, const Walk& walk) {
  if (walk.vertices.empty()) return false;
  for (int v : walk.vertices)
    if (v < 0 || v >= g.n()) return false;
  for (std::size_t i = 0; i + 1 < walk.vertices.size(); ++i)
    if (!g.has_arc(walk.vertices[i], walk.vertices[i + 1])) return false;
  return true;
}

namespace {

inline std::uint8_t sat2(int x) { return static_cast<std::uint8_t>(x >= 2 ? 2 : x); }

// Collects up to `want` distinct walks of length <= max_len from s to v,
// walking the per-level counts backwards. Deterministic: shorter walks
// first, then lexicographic by predecessor.
void collect_walks(const Digraph& g, const std::vector<std::vector<std::uint8_t>>& cnt, int s, int v, int max_len,
                   int want, std::vector<Walk>& out) {
  for (int len = 0; len <= max_len && static_cast<int>(out.size()) < want; ++len) {
    if (!cnt[static_cast<std::size_t>(len)][static_cast<std::size_t>(v)]) continue;
    // DFS backwards from (v, len) enumerating suffix stacks.
    std::vector<int> suffix{v};
    // explicit stack of (vertex, level, next predecessor to try)
    struct Frame {
      int vertex;
      int level;
      int next_pred;
    };
    std::vector<Frame> stack{{v, len, 0}};
    while (!stack.empty() && static_cast<int>(out.size()) < want) {
      Frame& f = stack.back();
      if (f.level == 0) {
        if (f.vertex == s) {
          Walk w;
          w.vertices.assign(suffix.rbegin(), suffix.rend());
          out.push_back(std::move(w));
        }
        stack.pop_back();
        suffix.pop_back();
        continue;
      }
      bool descended = false;
      for (int u = f.next_pred; u < g.n(); ++u) {
        if (!g.has_arc(u, f.vertex)) continue;
        if (!cnt[static_cast<std::size_t>(f.level - 1)][static_cast<std::size_t>(u)]) continue;
        f.next_pred = u + 1;
        suffix.push_back(u);
        stack.push_back({u, f.level - 1, 0});
        descended = true;
        break;
      }
      if (!descended) {
        stack.pop_back();
        suffix.pop_back();
      }
    }
  }
}

}  // namespace

GeodecityReport is_k_geodetic(const Digraph& g, int k) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  const int n = g.n();
  GeodecityReport report;
  report.k = k;
  report.is_k_geodetic = true;
  // Walks longer than n revisit a vertex and so contain a closed walk of
  // length <= n that itself violates geodecity; levels beyond n add nothing.
  const int keff = std::min(k, n);

  for (int s = 0; s < n; ++s) {
    std::vector<std::vector<std::uint8_t>> cnt(static_cast<std::size_t>(keff) + 1,
                                               std::vector<std::uint8_t>(static_cast<std::size_t>(n), 0));
    std::vector<std::uint8_t> cum(static_cast<std::size_t>(n), 0);
    cnt[0][static_cast<std::size_t>(s)] = 1;
    cum[static_cast<std::size_t>(s)] = 1;
    for (int t = 1; t <= keff; ++t) {
      const auto& prev = cnt[static_cast<std::size_t>(t) - 1];
      auto& cur = cnt[static_cast<std::size_t>(t)];
      for (int u = 0; u < n; ++u) {
        if (!prev[static_cast<std::size_t>(u)]) continue;
        for_each_bit(g.row(u), g.row_words(), [&](int v) {
          cur[static_cast<std::size_t>(v)] = sat2(cur[static_cast<std::size_t>(v)] + prev[static_cast<std::size_t>(u)]);
        });
      }
      for (int v = 0; v < n; ++v) {
        int total = cum[static_cast<std::size_t>(v)] + cur[static_cast<std::size_t>(v)];
        if (total >= 2) {
          std::vector<Walk> walks;
          collect_walks(g, cnt, s, v, t, 2, walks);
          report.is_k_geodetic = false;
          report.witness = std::make_pair(walks.at(0), walks.at(1));
          return report;
        }
        cum[static_cast<std::size_t>(v)] = sat2(total);
      }
    }
  }
  return report;
}

std::optional<int> geodetic_girth(const Digraph& g) {
  for (int k = 1; k <= g.n(); ++k)
    if (!is_k_geodetic(g, k).is_k_geodetic) return k - 1;
  return std::nullopt;
}

std::vector<std::uint8_t> walk_count_matrix(const Digraph& g, int k) {
  if (k < 0) throw std::invalid_argument("k must be >= 0");
  const int n = g.n();
  const int keff = std::min(k, n);
  std::vector<std::uint8_t> total(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
  // Saturated dynamic programme over exact lengths, one row per source.
  for (int s = 0; s < n; ++s) {
    std::vector<std::uint8_t> level(static_cast<std::size_t>(n), 0);
    level[static_cast<std::size_t>(s)] = 1;
    std::uint8_t* row = total.data() + static_cast<std::size_t>(s) * n;
    row[s] = 1;
    for (int t = 1; t <= keff; ++t) {
      std::vector<std::uint8_t> next(static_cast<std::size_t>(n), 0);
      for (int u = 0; u < n; ++u) {
        if (!level[static_cast<std::size_t>(u)]) continue;
        for_each_bit(g.row(u), g.row_words(), [&](int v) {
          next[static_cast<std::size_t>(v)] =
              sat2(next[static_cast<std::size_t>(v)] + level[static_cast<std::size_t>(u)]);
        });
      }
      for (int v = 0; v < n; ++v) row[v] = sat2(row[v] + next[static_cast<std::size_t>(v)]);
      level = std::move(next);
    }
  }
  return total;
}

}  // namespace geodex
