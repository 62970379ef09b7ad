#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "geodex/digraph.hpp"

namespace geodex {

/// A directed walk listed as its vertex sequence; length = number of arcs.
/// A single vertex is the trivial walk of length 0.
struct Walk {
  std::vector<int> vertices;
  int length() const { return static_cast<int>(vertices.size()) - 1; }
  bool operator==(const Walk&) const = default;
};

/// True iff consecutive vertices are joined by arcs of g.
bool walk_is_valid(const Digraph& g, const Walk& walk);

struct GeodecityReport {
  bool is_k_geodetic = false;
  int k = 0;
  /// Present exactly when the check fails: two distinct walks of length
  /// <= k with the same first and the same last vertex.
  std::optional<std::pair<Walk, Walk>> witness;
};

/// A digraph is k-geodetic when every ordered vertex pair is joined by at
/// most one walk of length <= k. The length-0 walk counts, so a closed
/// walk of length <= k is itself a violation. Decision: per-source BFS
/// counting walks per level with saturation at 2 and early exit; the
/// witness pair is reconstructed from the level counts.
GeodecityReport is_k_geodetic(const Digraph& g, int k);

/// Largest k such that g is k-geodetic (>= 1 always, for loop-free simple
/// digraphs). Returns nullopt ("infinite") when g is k-geodetic for every
/// k, i.e. when it is n-geodetic: cycles have length at most n, so an
/// n-geodetic digraph is acyclic with unique bounded paths. Ascending
/// linear scan; desk-scale inputs don't justify a bisection.
std::optional<int> geodetic_girth(const Digraph& g);

/// n*n row-major matrix; entry (u,v) = min(2, number of walks u->v of
/// length <= k), counting the trivial walk on the diagonal. Independent
/// oracle used by the tests to cross-check is_k_geodetic.
std::vector<std::uint8_t> walk_count_matrix(const Digraph& g, int k);

}  // namespace geodex
