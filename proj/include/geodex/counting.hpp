#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "geodex/digraph.hpp"

namespace geodex {

using BigInt = boost::multiprecision::cpp_int;

enum class PatternKind { Cycle, Path };

struct CountReport {
  PatternKind pattern = PatternKind::Cycle;
  int length = 0;
  BigInt count = 0;
  /// Largest number of counted patterns through any single arc.
  long long per_arc_max = 0;
};

/// Number of directed cycles with exactly `len` arcs (len >= 2), each
/// cycle counted once as a cyclic sequence (not per starting vertex).
/// Enumeration roots each cycle at its smallest vertex.
CountReport count_directed_cycles(const Digraph& g, int len);

/// Number of directed paths with exactly `len` arcs (len >= 1) on
/// pairwise distinct vertices.
CountReport count_directed_paths(const Digraph& g, int len);

/// floor((n/6)(sqrt(4n-3) - 1)), evaluated in exact integer arithmetic:
/// an upper bound on the number of directed triangles in any 2-geodetic
/// digraph of order n.
long long triangle_upper_bound(long long n);

/// ceil(sum_{i=1..n} i^(1/k)), evaluated term-wise with directed rounding
/// so the result is a certified upper bound on the number of directed
/// (k+1)-cycles in any k-geodetic digraph of order n.
BigInt cycle_count_upper_bound(long long n, int k);

/// True iff (min out-degree)^k <= n, the exact form of
/// min out-degree <= n^(1/k).
bool min_out_degree_bound_check(const Digraph& g, int k);

}  // namespace geodex
