#pragma once

#include <map>
#include <string>
#include <vector>

#include "geodex/digraph.hpp"

namespace geodex {

/// A digraph together with one human-readable label per vertex.
struct LabeledDigraph {
  Digraph digraph;
  std::vector<std::string> labels;
};

/// Permutation digraph P(d,k): vertices are the k-permutations of
/// {0..d+k-1}; x0 x1..x(k-1) -> x1..x(k-1) xk for every symbol xk not in
/// the source word. Order (d+k)(d+k-1)...(d+1), size n*d, diregular of
/// degree d, k-geodetic. Requires d,k >= 2.
LabeledDigraph permutation_digraph(int d, int k);

/// Orientation of the complete bipartite graph on X = {x_1..x_a},
/// Y = {y_1..y_b}: the first t matched pairs carry x_i -> y_i, every other
/// pair carries y_j -> x_i. t = 0 orients everything Y -> X (b sources,
/// a sinks). Requires a,b >= 1 and 0 <= t <= min(a,b).
LabeledDigraph oriented_bipartite(int a, int b, int t);

/// oriented_bipartite(r,r,r) with one matching arc x_1 -> y_1 expanded
/// into a directed triangle through a new vertex z (arcs y_1 -> z and
/// z -> x_1 added, nothing removed). Order 2r+1, size r^2 + 2, strongly
/// connected and 2-geodetic. Requires r >= 2.
LabeledDigraph triangle_expansion(int r);

/// The A/B/B'/C/D families of 2-geodetic source/sink-free digraphs of
/// order 2r+1 and size r^2+2. Construction is valid for r >= 3; the
/// "these are exactly the extremal classes" guarantee only holds from
/// kFamilyClassificationMinR upward. B takes 0 <= t <= r-1 (t of the y_i
/// feed y, the rest feed z); B' is the converse of B.
LabeledDigraph family_a(int r);
LabeledDigraph family_b(int r, int t);
LabeledDigraph family_b_prime(int r, int t);
LabeledDigraph family_c(int r);
LabeledDigraph family_d(int r);

inline constexpr int kFamilyClassificationMinR = 5;

/// G(n,k) for n = k*r + s with 0 <= s <= r (rejected otherwise, as is
/// n < k+1): r directed paths u_{i,1}..u_{i,k} plus s hub vertices v_t,
/// wired so the result is k-geodetic, strongly connected, and of size
/// r^2 + (k-2)r + 2s. When s = 0 the simplified form is emitted
/// (paths chained through column 2 with the closing arcs u_{i,k} ->
/// u_{i,1}). `variant_rule3_to_first_column` redirects the rule-iii arcs
/// u_{i,k} -> u_{j,2} (i > s, j <= s) to u_{j,1}; both variants satisfy
/// the same invariants.
LabeledDigraph g_construction(int n, int k, bool variant_rule3_to_first_column = false);

enum class FixtureName { Hoof, C3, Diamond, TwoTrianglesMatched6 };

/// Small named examples used throughout the tests: the "hoof" (two
/// internally disjoint 2-paths with common endpoints), the directed
/// triangle, the 5-arc diamond orientation, and the 6-vertex digraph made
/// of two directed triangles joined by a perfect matching.
LabeledDigraph fixture(FixtureName name);

/// Sum_{t=0..k} d^t. Throws std::overflow_error if it does not fit 64 bits.
unsigned long long moore_bound(int d, int k);

enum class Family {
  PermutationDigraph,
  OrientedBipartite,
  TriangleExpansion,
  FamilyA,
  FamilyB,
  FamilyBPrime,
  FamilyC,
  FamilyD,
  GConstruction,
  FixtureDigraph,
};

/// Tagged construction request with named integer parameters; used by the
/// CLI and the bindings. Unknown or missing parameters are rejected.
struct ConstructionSpec {
  Family family;
  std::map<std::string, long long> params;
  bool variant = false;
};

LabeledDigraph build_construction(const ConstructionSpec& spec);

/// CLI-facing family names: permutation, bipartite, triangle-expansion,
/// family-a, family-b, family-b-prime, family-c, family-d, g, fixture.
Family family_from_name(const std::string& name);
FixtureName fixture_from_name(const std::string& name);

}  // namespace geodex
