#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace geodex {

/// Dense, loop-free simple digraph on vertices 0..n-1.
///
/// Out-adjacency is stored as one packed bit row per vertex: bit v of row u
/// is set iff the arc u->v is present. Rows make the walk-counting and
/// search inner loops cheap word operations. Values are treated as
/// immutable once built: builders assemble a Digraph and everything else
/// takes it by const reference.
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(int n);

  int n() const { return n_; }
  long long m() const { return m_; }

  bool has_arc(int u, int v) const;

  /// Inserts u->v. Idempotent. Throws std::invalid_argument on a loop and
  /// std::out_of_range on a bad vertex.
  void add_arc(int u, int v);
  void remove_arc(int u, int v);

  int out_degree(int u) const;
  int in_degree(int v) const;
  std::vector<int> out_neighbors(int u) const;
  std::vector<int> in_neighbors(int v) const;

  /// Words per row (n bits rounded up to whole 64-bit words).
  int row_words() const { return words_; }
  const std::uint64_t* row(int u) const { return bits_.data() + static_cast<std::size_t>(u) * words_; }

  Digraph converse() const;

  /// Subdigraph induced by `vertices`, relabeled 0..|vertices|-1 in the
  /// given order. Rejects out-of-range and duplicate vertices.
  Digraph induced_subdigraph(const std::vector<int>& vertices) const;

  /// Two reachability sweeps from vertex 0. Orders 0 and 1 are strongly
  /// connected by convention.
  bool is_strongly_connected() const;

  /// (vertices with in-degree 0, vertices with out-degree 0), ascending.
  std::pair<std::vector<int>, std::vector<int>> sources_and_sinks() const;

  /// Length of a shortest directed cycle; nullopt if acyclic.
  std::optional<int> directed_girth() const;

  /// True iff the underlying simple graph contains K4 minus an edge
  /// (two triangles sharing an edge).
  bool underlying_contains_diamond() const;

  bool operator==(const Digraph&) const = default;

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  int words_ = 0;
  long long m_ = 0;
  std::vector<std::uint64_t> bits_;
};

struct DegreeProfile {
  std::vector<int> out_degrees;
  std::vector<int> in_degrees;
  int max_out = 0;
  int max_in = 0;
};

DegreeProfile degree_profile(const Digraph& g);

}  // namespace geodex
