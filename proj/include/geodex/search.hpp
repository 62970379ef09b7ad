#pragma once

#include <optional>
#include <string>
#include <vector>

#include "geodex/canonical.hpp"
#include "geodex/digraph.hpp"

namespace geodex {

/// One of the three census problems: unconstrained maximum size, maximum
/// size over strongly connected digraphs, or the source/sink-free census.
/// min_size restricts collection (and search effort) to digraphs with at
/// least that many arcs; it never changes which sizes are feasible, so a
/// correct min_size at most speeds the search up.
struct SearchConstraints {
  int n = 1;
  int k = 2;
  bool require_strong = false;
  bool forbid_sources_sinks = false;
  std::optional<long long> min_size;

  friend bool operator==(const SearchConstraints&, const SearchConstraints&) = default;
};

struct SearchOptions {
  int threads = 1;
  /// Depth at which the augmentation tree is cut into independent
  /// subtree tasks. Fixed partition + per-subtree accumulators make the
  /// result identical for every thread count.
  int split_depth = 2;
  long long max_nodes = 100'000'000;
  double max_seconds = 300.0;
  /// Pruning toggles. All prunes are sound (they never remove a state
  /// that could lead to a collectable digraph), so flipping them changes
  /// nodes_explored only; tests rely on exactly that.
  bool prune_size_ceiling = true;
  bool prune_walk_budget = true;
  bool prune_degree_cap = true;
  bool prune_dead_vertex = true;
  /// When nonempty, completed subtree results are appended here and a
  /// rerun with the same constraints resumes, skipping finished work.
  std::string checkpoint_path;
};

struct CensusRecord {
  SearchConstraints constraints;
  /// Largest size among digraphs satisfying the constraints, or nullopt
  /// if none was found (e.g. min_size above the true maximum).
  std::optional<long long> max_size;
  long long class_count = 0;
  /// One digraph per isomorphism class at max_size, in canonical
  /// labeling, ordered by canonical form.
  std::vector<Digraph> representatives;
  long long nodes_explored = 0;
  /// Wall-clock time; the only field allowed to differ between runs.
  double wall_seconds = 0.0;
  bool complete = true;
  std::string status = "complete";
};

/// ⌊n(n−1)·known_ex_m / (m(m−1))⌋: any digraph property closed under
/// taking induced subdigraphs obeys this averaging ceiling, with
/// known_ex_m an upper bound on the maximum size at order m.
long long exclusion_bound(int n, int m, long long known_ex_m);

/// Certificate check, independent of the search engine.
bool verify_extremal_witness(const Digraph& g, const SearchConstraints& c, long long claimed_size);

/// Exhaustive census by canonical arc-augmentation: every isomorphism
/// class of digraph in which all pairs have at most one walk of length
/// at most k is visited exactly once (minus soundly pruned subtrees).
/// Budget overruns yield complete=false with an explanatory status,
/// never a silently truncated answer.
CensusRecord extremal_search(const SearchConstraints& c, const SearchOptions& opts = {});

}  // namespace geodex
