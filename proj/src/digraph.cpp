#include "geodex/digraph.hpp"

#include <algorithm>
#include <stdexcept>

#include "geodex/detail/bits.hpp"

namespace geodex {

using detail::for_each_bit;
using detail::words_for;

Digraph::Digraph(int n) {
  if (n < 0) throw std::invalid_argument("digraph order must be nonnegative");
  n_ = n;
  words_ = words_for(n);
  bits_.assign(static_cast<std::size_t>(n_) * words_, 0);
}

void Digraph::check_vertex(int v) const {
  if (v < 0 || v >= n_) throw std::out_of_range("vertex out of range");
}

bool Digraph::has_arc(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return detail::get_bit(row(u), v);
}

void Digraph::add_arc(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("loops are not allowed");
  std::uint64_t* r = bits_.data() + static_cast<std::size_t>(u) * words_;
  if (!detail::get_bit(r, v)) {
    detail::set_bit(r, v);
    ++m_;
  }
}

void Digraph::remove_arc(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  std::uint64_t* r = bits_.data() + static_cast<std::size_t>(u) * words_;
  if (detail::get_bit(r, v)) {
    detail::clear_bit(r, v);
    --m_;
  }
}

int Digraph::out_degree(int u) const {
  check_vertex(u);
  return detail::popcount_words(row(u), words_);
}

int Digraph::in_degree(int v) const {
  check_vertex(v);
  int c = 0;
  for (int u = 0; u < n_; ++u) c += detail::get_bit(row(u), v);
  return c;
}

std::vector<int> Digraph::out_neighbors(int u) const {
  check_vertex(u);
  std::vector<int> out;
  for_each_bit(row(u), words_, [&](int v) { out.push_back(v); });
  return out;
}

std::vector<int> Digraph::in_neighbors(int v) const {
  check_vertex(v);
  std::vector<int> in;
  for (int u = 0; u < n_; ++u)
    if (detail::get_bit(row(u), v)) in.push_back(u);
  return in;
}

Digraph Digraph::converse() const {
  Digraph h(n_);
  for (int u = 0; u < n_; ++u)
    for_each_bit(row(u), words_, [&](int v) { h.add_arc(v, u); });
  return h;
}

Digraph Digraph::induced_subdigraph(const std::vector<int>& vertices) const {
  std::vector<char> seen(static_cast<std::size_t>(n_), 0);
  for (int v : vertices) {
    check_vertex(v);
    if (seen[static_cast<std::size_t>(v)]) throw std::invalid_argument("duplicate vertex in induced set");
    seen[static_cast<std::size_t>(v)] = 1;
  }
  Digraph h(static_cast<int>(vertices.size()));
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = 0; j < vertices.size(); ++j)
      if (i != j && detail::get_bit(row(vertices[i]), vertices[j])) h.add_arc(static_cast<int>(i), static_cast<int>(j));
  return h;
}

namespace {

// Closure of {start} under the given adjacency rows; returns the reached set.
std::vector<std::uint64_t> reach_set(const Digraph& g, const std::vector<std::uint64_t>& rows, int start) {
  const int words = g.row_words();
  std::vector<std::uint64_t> seen(static_cast<std::size_t>(words), 0);
  std::vector<std::uint64_t> frontier(static_cast<std::size_t>(words), 0);
  detail::set_bit(seen.data(), start);
  detail::set_bit(frontier.data(), start);
  bool grew = true;
  while (grew) {
    std::vector<std::uint64_t> next(static_cast<std::size_t>(words), 0);
    for_each_bit(frontier.data(), words, [&](int u) {
      const std::uint64_t* r = rows.data() + static_cast<std::size_t>(u) * words;
      for (int w = 0; w < words; ++w) next[static_cast<std::size_t>(w)] |= r[w];
    });
    grew = false;
    for (int w = 0; w < words; ++w) {
      std::uint64_t fresh = next[static_cast<std::size_t>(w)] & ~seen[static_cast<std::size_t>(w)];
      frontier[static_cast<std::size_t>(w)] = fresh;
      seen[static_cast<std::size_t>(w)] |= fresh;
      if (fresh) grew = true;
    }
  }
  return seen;
}

std::vector<std::uint64_t> all_rows(const Digraph& g, bool transposed) {
  const int words = g.row_words();
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(g.n()) * words, 0);
  for (int u = 0; u < g.n(); ++u)
    for_each_bit(g.row(u), words, [&](int v) {
      if (transposed)
        detail::set_bit(rows.data() + static_cast<std::size_t>(v) * words, u);
      else
        detail::set_bit(rows.data() + static_cast<std::size_t>(u) * words, v);
    });
  return rows;
}

}  // namespace

bool Digraph::is_strongly_connected() const {
  if (n_ <= 1) return true;
  auto fwd = reach_set(*this, all_rows(*this, false), 0);
  if (detail::popcount_words(fwd.data(), words_) != n_) return false;
  auto bwd = reach_set(*this, all_rows(*this, true), 0);
  return detail::popcount_words(bwd.data(), words_) == n_;
}

std::pair<std::vector<int>, std::vector<int>> Digraph::sources_and_sinks() const {
  std::vector<int> indeg(static_cast<std::size_t>(n_), 0);
  std::vector<int> sources, sinks;
  for (int u = 0; u < n_; ++u)
    for_each_bit(row(u), words_, [&](int v) { ++indeg[static_cast<std::size_t>(v)]; });
  for (int v = 0; v < n_; ++v) {
    if (indeg[static_cast<std::size_t>(v)] == 0) sources.push_back(v);
    if (detail::popcount_words(row(v), words_) == 0) sinks.push_back(v);
  }
  return {sources, sinks};
}

std::optional<int> Digraph::directed_girth() const {
  // For each start vertex, BFS distances; a cycle through `s` has length
  // dist(s, u) + 1 for some arc u->s.
  int best = -1;
  for (int s = 0; s < n_; ++s) {
    std::vector<int> dist(static_cast<std::size_t>(n_), -1);
    std::vector<int> queue{s};
    dist[static_cast<std::size_t>(s)] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      int u = queue[head];
      if (detail::get_bit(row(u), s)) {
        int len = dist[static_cast<std::size_t>(u)] + 1;
        if (len >= 2 && (best < 0 || len < best)) best = len;
      }
      for_each_bit(row(u), words_, [&](int v) {
        if (dist[static_cast<std::size_t>(v)] < 0) {
          dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
          queue.push_back(v);
        }
      });
    }
  }
  if (best < 0) return std::nullopt;
  return best;
}

bool Digraph::underlying_contains_diamond() const {
  // und[u] = neighbours of u in the underlying simple graph.
  std::vector<std::uint64_t> und(static_cast<std::size_t>(n_) * words_, 0);
  for (int u = 0; u < n_; ++u)
    for_each_bit(row(u), words_, [&](int v) {
      detail::set_bit(und.data() + static_cast<std::size_t>(u) * words_, v);
      detail::set_bit(und.data() + static_cast<std::size_t>(v) * words_, u);
    });
  for (int u = 0; u < n_; ++u) {
    const std::uint64_t* ru = und.data() + static_cast<std::size_t>(u) * words_;
    for (int v = u + 1; v < n_; ++v) {
      if (!detail::get_bit(ru, v)) continue;
      const std::uint64_t* rv = und.data() + static_cast<std::size_t>(v) * words_;
      int common = 0;
      for (int w = 0; w < words_; ++w) common += std::popcount(ru[w] & rv[w]);
      if (common >= 2) return true;
    }
  }
  return false;
}

DegreeProfile degree_profile(const Digraph& g) {
  DegreeProfile p;
  p.out_degrees.resize(static_cast<std::size_t>(g.n()));
  p.in_degrees.assign(static_cast<std::size_t>(g.n()), 0);
  for (int u = 0; u < g.n(); ++u) {
    p.out_degrees[static_cast<std::size_t>(u)] = g.out_degree(u);
    for_each_bit(g.row(u), g.row_words(), [&](int v) { ++p.in_degrees[static_cast<std::size_t>(v)]; });
  }
  for (int v = 0; v < g.n(); ++v) {
    p.max_out = std::max(p.max_out, p.out_degrees[static_cast<std::size_t>(v)]);
    p.max_in = std::max(p.max_in, p.in_degrees[static_cast<std::size_t>(v)]);
  }
  return p;
}

}  // namespace geodex
