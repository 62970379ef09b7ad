// Shared helpers for the unit tests: seeded random digraphs and small
// brute-force oracles that are deliberately independent of the library's
// own algorithms.
#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "geodex/digraph.hpp"

namespace geodex::testutil {

inline Digraph random_digraph(std::mt19937_64& rng, int n, double arc_probability) {
  Digraph g(n);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v && coin(rng) < arc_probability) g.add_arc(u, v);
  return g;
}

inline Digraph apply_permutation(const Digraph& g, const std::vector<int>& pi) {
  Digraph h(g.n());
  for (int u = 0; u < g.n(); ++u)
    for (int v : g.out_neighbors(u)) h.add_arc(pi[u], pi[v]);
  return h;
}

inline std::vector<int> random_permutation(std::mt19937_64& rng, int n) {
  std::vector<int> pi(n);
  std::iota(pi.begin(), pi.end(), 0);
  std::shuffle(pi.begin(), pi.end(), rng);
  return pi;
}

/// Adjacency matrix as a string, row-major. Total order on labeled digraphs.
inline std::string adjacency_string(const Digraph& g) {
  std::string s(static_cast<std::size_t>(g.n()) * g.n(), '0');
  for (int u = 0; u < g.n(); ++u)
    for (int v : g.out_neighbors(u)) s[static_cast<std::size_t>(u) * g.n() + v] = '1';
  return s;
}

/// Brute-force canonical key: lexicographically smallest adjacency string
/// over all n! relabelings. Independent of the refinement-based canonical
/// form; usable up to n around 8.
inline std::string brute_canonical_key(const Digraph& g) {
  std::vector<int> pi(g.n());
  std::iota(pi.begin(), pi.end(), 0);
  std::string best;
  do {
    std::string s = adjacency_string(apply_permutation(g, pi));
    if (best.empty() || s < best) best = s;
  } while (std::next_permutation(pi.begin(), pi.end()));
  return best;
}

/// All automorphisms of g by brute force over permutations.
inline std::vector<std::vector<int>> brute_automorphisms(const Digraph& g) {
  std::vector<int> pi(g.n());
  std::iota(pi.begin(), pi.end(), 0);
  std::vector<std::vector<int>> autos;
  do {
    if (apply_permutation(g, pi) == g) autos.push_back(pi);
  } while (std::next_permutation(pi.begin(), pi.end()));
  return autos;
}

/// Walks of length exactly len from u, as vertex sequences; naive DFS.
inline void naive_walks_from(const Digraph& g, int u, int len, std::vector<int>& cur,
                             std::vector<std::vector<int>>& out) {
  if (len == 0) {
    out.push_back(cur);
    return;
  }
  for (int v : g.out_neighbors(u)) {
    cur.push_back(v);
    naive_walks_from(g, v, len - 1, cur, out);
    cur.pop_back();
  }
}

/// Number of walks u->v of length <= k, the definitional count behind
/// k-geodecity (trivial length-0 walk included).
inline long long naive_walk_count(const Digraph& g, int u, int v, int k) {
  long long total = u == v ? 1 : 0;
  for (int len = 1; len <= k; ++len) {
    std::vector<std::vector<int>> walks;
    std::vector<int> cur{u};
    naive_walks_from(g, u, len, cur, walks);
    for (const auto& w : walks)
      if (w.back() == v) ++total;
  }
  return total;
}

inline bool naive_is_k_geodetic(const Digraph& g, int k) {
  for (int u = 0; u < g.n(); ++u)
    for (int v = 0; v < g.n(); ++v)
      if (naive_walk_count(g, u, v, k) > 1) return false;
  return true;
}

}  // namespace geodex::testutil
