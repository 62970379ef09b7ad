#include <doctest.h>

#include <random>
#include <stdexcept>

#include "geodex/digraph.hpp"
#include "test_util.hpp"

using namespace geodex;
using namespace geodex::testutil;

TEST_CASE("arc insertion, removal, degrees") {
  Digraph g(4);
  CHECK(g.n() == 4);
  CHECK(g.m() == 0);
  g.add_arc(0, 1);
  g.add_arc(0, 2);
  g.add_arc(2, 3);
  CHECK(g.m() == 3);
  g.add_arc(0, 1);  // idempotent
  CHECK(g.m() == 3);
  CHECK(g.has_arc(0, 1));
  CHECK(!g.has_arc(1, 0));
  CHECK(g.out_degree(0) == 2);
  CHECK(g.in_degree(3) == 1);
  CHECK(g.out_neighbors(0) == std::vector<int>{1, 2});
  CHECK(g.in_neighbors(1) == std::vector<int>{0});
  g.remove_arc(0, 1);
  CHECK(g.m() == 2);
  CHECK(!g.has_arc(0, 1));
  g.remove_arc(0, 1);  // idempotent
  CHECK(g.m() == 2);
}

TEST_CASE("loops and bad vertices are rejected") {
  Digraph g(3);
  CHECK_THROWS_AS(g.add_arc(1, 1), std::invalid_argument);
  CHECK_THROWS_AS(g.add_arc(0, 3), std::out_of_range);
  CHECK_THROWS_AS(g.add_arc(-1, 0), std::out_of_range);
  CHECK(g.m() == 0);
}

TEST_CASE("converse reverses every arc and is an involution") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    Digraph g = random_digraph(rng, 9, 0.3);
    Digraph c = g.converse();
    CHECK(c.m() == g.m());
    for (int u = 0; u < g.n(); ++u)
      for (int v = 0; v < g.n(); ++v)
        if (u != v) CHECK(g.has_arc(u, v) == c.has_arc(v, u));
    CHECK(c.converse() == g);
  }
}

TEST_CASE("induced subdigraph relabels in the given order") {
  Digraph g(5);
  g.add_arc(0, 2);
  g.add_arc(2, 4);
  g.add_arc(4, 0);
  g.add_arc(1, 3);
  Digraph h = g.induced_subdigraph({4, 0, 2});
  CHECK(h.n() == 3);
  CHECK(h.m() == 3);
  CHECK(h.has_arc(0, 1));  // 4 -> 0
  CHECK(h.has_arc(1, 2));  // 0 -> 2
  CHECK(h.has_arc(2, 0));  // 2 -> 4
  CHECK_THROWS_AS(g.induced_subdigraph({0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(g.induced_subdigraph({5}), std::out_of_range);
}

TEST_CASE("strong connectivity") {
  Digraph c3(3);
  c3.add_arc(0, 1);
  c3.add_arc(1, 2);
  c3.add_arc(2, 0);
  CHECK(c3.is_strongly_connected());
  c3.remove_arc(2, 0);
  CHECK(!c3.is_strongly_connected());
  CHECK(Digraph(1).is_strongly_connected());
  CHECK(Digraph(0).is_strongly_connected());
  CHECK(!Digraph(2).is_strongly_connected());
}

TEST_CASE("sources and sinks") {
  Digraph g(4);
  g.add_arc(0, 1);
  g.add_arc(1, 2);
  auto [sources, sinks] = g.sources_and_sinks();
  CHECK(sources == std::vector<int>{0, 3});
  CHECK(sinks == std::vector<int>{2, 3});
}

TEST_CASE("directed girth") {
  Digraph g(5);
  g.add_arc(0, 1);
  g.add_arc(1, 2);
  g.add_arc(2, 3);
  CHECK(!g.directed_girth().has_value());
  g.add_arc(3, 0);
  REQUIRE(g.directed_girth().has_value());
  CHECK(*g.directed_girth() == 4);
  g.add_arc(2, 0);
  CHECK(*g.directed_girth() == 3);
}

TEST_CASE("diamond detection in the underlying graph") {
  // Two triangles sharing an edge, as an orientation.
  Digraph g(4);
  g.add_arc(0, 1);
  g.add_arc(1, 2);
  g.add_arc(2, 0);
  g.add_arc(1, 3);
  g.add_arc(3, 0);
  CHECK(g.underlying_contains_diamond());
  Digraph c4(4);
  c4.add_arc(0, 1);
  c4.add_arc(1, 2);
  c4.add_arc(2, 3);
  c4.add_arc(3, 0);
  CHECK(!c4.underlying_contains_diamond());
}

TEST_CASE("degree profile") {
  Digraph g(4);
  g.add_arc(0, 1);
  g.add_arc(0, 2);
  g.add_arc(0, 3);
  g.add_arc(1, 0);
  DegreeProfile p = degree_profile(g);
  CHECK(p.out_degrees == std::vector<int>{3, 1, 0, 0});
  CHECK(p.in_degrees == std::vector<int>{1, 1, 1, 1});
  CHECK(p.max_out == 3);
  CHECK(p.max_in == 1);
}

TEST_CASE("rows pack bits consistently with the neighbor lists") {
  std::mt19937_64 rng(11);
  Digraph g = random_digraph(rng, 70, 0.1);  // forces two words per row
  CHECK(g.row_words() == 2);
  long long arcs = 0;
  for (int u = 0; u < g.n(); ++u) {
    for (int v : g.out_neighbors(u)) {
      CHECK(g.has_arc(u, v));
      ++arcs;
    }
  }
  CHECK(arcs == g.m());
}
