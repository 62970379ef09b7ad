#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "geodex/digraph.hpp"

namespace geodex {

/// Canonical form of a digraph: the lexicographically largest row-major
/// adjacency bit string over all vertex orderings, packed MSB-first into
/// 64-bit words. Equal forms <=> isomorphic digraphs; the ordering makes
/// deterministic "sort by canonical form" outputs possible.
struct CanonicalForm {
  int n = 0;
  std::vector<std::uint64_t> words;

  auto operator<=>(const CanonicalForm&) const = default;
  bool bit(int i, int j) const {
    long long b = static_cast<long long>(i) * n + j;
    return (words[static_cast<std::size_t>(b / 64)] >> (63 - b % 64)) & 1u;
  }
  std::vector<std::uint8_t> bytes() const;
};

struct CanonicalResult {
  CanonicalForm form;
  /// labeling[v] = position of v in the canonical ordering.
  std::vector<int> labeling;
  /// Generators (as images: gen[v] = image of v) of the automorphism
  /// group discovered during the canonical search. They are always
  /// genuine automorphisms; they are not guaranteed to generate the full
  /// group, which is fine for orbit-based pruning.
  std::vector<std::vector<int>> automorphism_generators;
};

/// Colour refinement on (out,in)-degrees to each cell, plus
/// individualization backtracking with automorphism-orbit pruning.
/// Exact at every order.
CanonicalResult canonicalize(const Digraph& g);

CanonicalForm canonical_form(const Digraph& g);

Digraph digraph_from_canonical(const CanonicalForm& form);

bool are_isomorphic(const Digraph& a, const Digraph& b);

std::size_t hash_value(const CanonicalForm& form) noexcept;

}  // namespace geodex

template <>
struct std::hash<geodex::CanonicalForm> {
  std::size_t operator()(const geodex::CanonicalForm& f) const noexcept { return geodex::hash_value(f); }
};
