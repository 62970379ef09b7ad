// Census engine: agreement with a from-scratch enumerator over every arc
// subset at small orders, pruning soundness, determinism across thread
// counts and split depths, budget handling, checkpoint resume, the
// averaging bound, and the witness verifier.
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "geodex/canonical.hpp"
#include "geodex/constructions.hpp"
#include "geodex/geodecity.hpp"
#include "geodex/search.hpp"
#include "test_util.hpp"

using namespace geodex;
using namespace geodex::testutil;

namespace {

// ---------------------------------------------------------------------------
// Independent enumerator: walks straight over all 2^(n(n-1)) arc subsets
// with saturating matrix powers, its own reachability scan, and brute-force
// relabeling keys. Shares no code with the engine under test.

struct NaiveCensus {
  long long max_size = -1;
  std::set<std::string> extremal_keys;
};

constexpr int kMaxNaive = 5;

struct MaskGraph {
  int n;
  int adj[kMaxNaive][kMaxNaive] = {};
};

MaskGraph decode_mask(int n, unsigned mask) {
  MaskGraph g{n, {}};
  int bit = 0;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      if (u == v) continue;
      if (mask & (1u << bit)) g.adj[u][v] = 1;
      ++bit;
    }
  return g;
}

bool mask_k_geodetic(const MaskGraph& g, int k) {
  int total[kMaxNaive][kMaxNaive] = {};
  int cur[kMaxNaive][kMaxNaive] = {};
  for (int u = 0; u < g.n; ++u) {
    total[u][u] = 1;
    for (int v = 0; v < g.n; ++v) {
      cur[u][v] = g.adj[u][v];
      total[u][v] += cur[u][v];
      if (total[u][v] > 1) return false;
    }
  }
  for (int step = 2; step <= k; ++step) {
    int next[kMaxNaive][kMaxNaive] = {};
    for (int u = 0; u < g.n; ++u)
      for (int w = 0; w < g.n; ++w)
        if (cur[u][w])
          for (int v = 0; v < g.n; ++v) {
            next[u][v] += cur[u][w] * g.adj[w][v];
            if (next[u][v] > 2) next[u][v] = 2;
          }
    for (int u = 0; u < g.n; ++u)
      for (int v = 0; v < g.n; ++v) {
        cur[u][v] = next[u][v];
        total[u][v] += cur[u][v];
        if (total[u][v] > 1) return false;
      }
  }
  return true;
}

bool mask_strong(const MaskGraph& g) {
  if (g.n <= 1) return true;
  for (int dir = 0; dir < 2; ++dir) {
    bool seen[kMaxNaive] = {};
    int stack[kMaxNaive], top = 0;
    seen[0] = true;
    stack[top++] = 0;
    while (top) {
      int u = stack[--top];
      for (int v = 0; v < g.n; ++v) {
        bool arc = dir == 0 ? g.adj[u][v] : g.adj[v][u];
        if (arc && !seen[v]) {
          seen[v] = true;
          stack[top++] = v;
        }
      }
    }
    for (int v = 0; v < g.n; ++v)
      if (!seen[v]) return false;
  }
  return true;
}

bool mask_source_sink_free(const MaskGraph& g) {
  for (int u = 0; u < g.n; ++u) {
    int out = 0, in = 0;
    for (int v = 0; v < g.n; ++v) {
      out += g.adj[u][v];
      in += g.adj[v][u];
    }
    if (out == 0 || in == 0) return false;
  }
  return true;
}

Digraph mask_to_digraph(const MaskGraph& g) {
  Digraph d(g.n);
  for (int u = 0; u < g.n; ++u)
    for (int v = 0; v < g.n; ++v)
      if (g.adj[u][v]) d.add_arc(u, v);
  return d;
}

NaiveCensus naive_census(int n, int k, bool strong, bool noss) {
  REQUIRE(n <= kMaxNaive);
  NaiveCensus out;
  std::vector<unsigned> extremal;
  const unsigned bits = static_cast<unsigned>(n) * (n - 1);
  for (unsigned mask = 0; mask < (1u << bits); ++mask) {
    long long m = __builtin_popcount(mask);
    if (m < out.max_size) continue;
    MaskGraph g = decode_mask(n, mask);
    if (!mask_k_geodetic(g, k)) continue;
    if (strong && !mask_strong(g)) continue;
    if (noss && !mask_source_sink_free(g)) continue;
    if (m > out.max_size) {
      out.max_size = m;
      extremal.clear();
    }
    extremal.push_back(mask);
  }
  for (unsigned mask : extremal) out.extremal_keys.insert(brute_canonical_key(mask_to_digraph(decode_mask(n, mask))));
  return out;
}

std::set<std::string> representative_keys(const CensusRecord& rec) {
  std::set<std::string> keys;
  for (const Digraph& g : rec.representatives) keys.insert(brute_canonical_key(g));
  return keys;
}

void check_record_wellformed(const CensusRecord& rec) {
  CHECK(rec.complete);
  CHECK(rec.status == "complete");
  REQUIRE(rec.max_size.has_value());
  CHECK(rec.class_count == static_cast<long long>(rec.representatives.size()));
  std::vector<CanonicalForm> forms;
  for (const Digraph& g : rec.representatives) {
    CHECK(verify_extremal_witness(g, rec.constraints, *rec.max_size));
    CHECK(is_k_geodetic(g, rec.constraints.k).is_k_geodetic);
    CanonicalForm f = canonical_form(g);
    // Representatives are emitted in canonical labeling...
    CHECK(digraph_from_canonical(f) == g);
    forms.push_back(f);
  }
  // ...ordered by canonical form, without duplicates.
  CHECK(std::is_sorted(forms.begin(), forms.end()));
  CHECK(std::adjacent_find(forms.begin(), forms.end()) == forms.end());
}

}  // namespace

TEST_CASE("search agrees with exhaustive arc-subset enumeration at small orders") {
  for (int n = 2; n <= 5; ++n) {
    for (int k : {2, 3}) {
      for (int variant = 0; variant < 3; ++variant) {
        bool strong = variant == 1, noss = variant == 2;
        NaiveCensus expect = naive_census(n, k, strong, noss);
        SearchConstraints c{n, k, strong, noss, std::nullopt};
        CensusRecord rec = extremal_search(c);
        if (expect.max_size < 0) {
          // e.g. no strongly connected 2-geodetic digraph on 2 vertices.
          CHECK(rec.complete);
          CHECK(!rec.max_size.has_value());
          CHECK(rec.class_count == 0);
          CHECK(rec.representatives.empty());
          continue;
        }
        check_record_wellformed(rec);
        CHECK(rec.max_size == std::optional<long long>(expect.max_size));
        CHECK(rec.class_count == static_cast<long long>(expect.extremal_keys.size()));
        CHECK(representative_keys(rec) == expect.extremal_keys);
      }
    }
  }
}

TEST_CASE("known extremal sizes and classification counts at the spot values") {
  // Unconstrained: floor(n^2/4).
  for (int n = 4; n <= 6; ++n) {
    CensusRecord rec = extremal_search({n, 2, false, false, std::nullopt});
    CHECK(rec.max_size == std::optional<long long>(static_cast<long long>(n) * n / 4));
  }
  // Strongly connected: r^2+2 at odd orders, r^2 at even.
  CensusRecord s5 = extremal_search({5, 2, true, false, std::nullopt});
  CHECK(s5.max_size == std::optional<long long>(6));
  CensusRecord s6 = extremal_search({6, 2, true, false, std::nullopt});
  CHECK(s6.max_size == std::optional<long long>(9));
  check_record_wellformed(s5);
  check_record_wellformed(s6);
}

TEST_CASE("minimum-size floor never changes the answer, only the work") {
  SearchConstraints base{7, 2, false, true, std::nullopt};
  CensusRecord free_run = extremal_search(base);
  check_record_wellformed(free_run);
  CHECK(free_run.max_size == std::optional<long long>(11));
  CHECK(free_run.class_count == 29);

  SearchConstraints seeded = base;
  seeded.min_size = 11;
  CensusRecord seeded_run = extremal_search(seeded);
  CHECK(seeded_run.max_size == free_run.max_size);
  CHECK(seeded_run.class_count == free_run.class_count);
  std::set<CanonicalForm> a, b;
  for (const Digraph& g : free_run.representatives) a.insert(canonical_form(g));
  for (const Digraph& g : seeded_run.representatives) b.insert(canonical_form(g));
  CHECK(a == b);
  CHECK(seeded_run.nodes_explored <= free_run.nodes_explored);

  // A floor above the true maximum comes back empty but complete.
  SearchConstraints impossible = base;
  impossible.min_size = 12;
  CensusRecord none = extremal_search(impossible);
  CHECK(none.complete);
  CHECK(!none.max_size.has_value());
  CHECK(none.class_count == 0);
  CHECK(none.representatives.empty());
}

TEST_CASE("prune toggles change nodes explored but never the census") {
  std::vector<SearchConstraints> cases{
      {6, 2, false, false, std::nullopt},
      {6, 2, true, false, std::nullopt},
      {6, 2, false, true, std::nullopt},
      {7, 3, true, false, std::nullopt},
  };
  for (const SearchConstraints& c : cases) {
    CensusRecord base = extremal_search(c);
    check_record_wellformed(base);
    for (int off = 0; off < 5; ++off) {
      SearchOptions opt;
      if (off == 0 || off == 4) opt.prune_size_ceiling = false;
      if (off == 1 || off == 4) opt.prune_walk_budget = false;
      if (off == 2 || off == 4) opt.prune_degree_cap = false;
      if (off == 3 || off == 4) opt.prune_dead_vertex = false;
      CensusRecord rec = extremal_search(c, opt);
      CHECK(rec.max_size == base.max_size);
      CHECK(rec.class_count == base.class_count);
      std::vector<CanonicalForm> fa, fb;
      for (const Digraph& g : base.representatives) fa.push_back(canonical_form(g));
      for (const Digraph& g : rec.representatives) fb.push_back(canonical_form(g));
      CHECK(fa == fb);
    }
  }
}

TEST_CASE("identical records for every thread count and split depth") {
  SearchConstraints c{6, 2, false, true, std::nullopt};
  CensusRecord base = extremal_search(c);
  for (int threads : {1, 2, 4}) {
    for (int depth : {0, 1, 3}) {
      SearchOptions opt;
      opt.threads = threads;
      opt.split_depth = depth;
      CensusRecord rec = extremal_search(c, opt);
      CHECK(rec.max_size == base.max_size);
      CHECK(rec.class_count == base.class_count);
      CHECK(rec.nodes_explored == base.nodes_explored);
      CHECK(rec.complete == base.complete);
      CHECK(rec.status == base.status);
      REQUIRE(rec.representatives.size() == base.representatives.size());
      for (std::size_t i = 0; i < rec.representatives.size(); ++i)
        CHECK(rec.representatives[i] == base.representatives[i]);
    }
  }
}

TEST_CASE("maximum size is monotone in the geodecity level and the constraints") {
  long long prev = 1'000;
  for (int k = 2; k <= 5; ++k) {
    CensusRecord rec = extremal_search({6, k, false, false, std::nullopt});
    REQUIRE(rec.max_size.has_value());
    CHECK(*rec.max_size <= prev);
    prev = *rec.max_size;
    CensusRecord strong = extremal_search({6, k, true, false, std::nullopt});
    REQUIRE(strong.max_size.has_value());
    CHECK(*strong.max_size <= *rec.max_size);
  }
}

TEST_CASE("budget overruns yield flagged partial records, never silent truncation") {
  SearchConstraints c{7, 2, false, false, std::nullopt};
  SearchOptions tiny;
  tiny.max_nodes = 5;
  CensusRecord rec = extremal_search(c, tiny);
  CHECK(!rec.complete);
  CHECK(rec.status == "node budget exceeded; partial result");
  if (rec.max_size) CHECK(*rec.max_size <= 12);

  SearchOptions brief;
  brief.max_seconds = 1e-9;
  CensusRecord timed = extremal_search(c, brief);
  CHECK(!timed.complete);
  CHECK(timed.status == "time budget exceeded; partial result");
}

TEST_CASE("invalid constraints and options are rejected") {
  CHECK_THROWS_AS(extremal_search({0, 2, false, false, std::nullopt}), std::invalid_argument);
  CHECK_THROWS_AS(extremal_search({4, 1, false, false, std::nullopt}), std::invalid_argument);
  SearchOptions bad;
  bad.threads = 0;
  CHECK_THROWS_AS(extremal_search({4, 2, false, false, std::nullopt}, bad), std::invalid_argument);
  bad = SearchOptions{};
  bad.split_depth = -1;
  CHECK_THROWS_AS(extremal_search({4, 2, false, false, std::nullopt}, bad), std::invalid_argument);
  bad = SearchOptions{};
  bad.max_nodes = 0;
  CHECK_THROWS_AS(extremal_search({4, 2, false, false, std::nullopt}, bad), std::invalid_argument);
  bad = SearchOptions{};
  bad.max_seconds = 0.0;
  CHECK_THROWS_AS(extremal_search({4, 2, false, false, std::nullopt}, bad), std::invalid_argument);
}

TEST_CASE("averaging ceiling from a smaller order") {
  // Induced subdigraphs on m vertices carry at most known_ex_m arcs each;
  // averaging over all of them gives the ceiling.
  for (long long r = 2; r <= 6; ++r) {
    CHECK(exclusion_bound(static_cast<int>(2 * r), static_cast<int>(2 * r - 1), r * (r - 1)) == r * r);
    CHECK(exclusion_bound(static_cast<int>(2 * r + 1), static_cast<int>(2 * r), r * r) < r * r + r + 1);
  }
  CHECK(exclusion_bound(9, 9, 17) == 17);
  CHECK(exclusion_bound(4, 2, 1) == 6);
  CHECK_THROWS_AS(exclusion_bound(4, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(exclusion_bound(3, 4, 1), std::invalid_argument);
  CHECK_THROWS_AS(exclusion_bound(4, 3, -1), std::invalid_argument);
}

TEST_CASE("witness verifier accepts the known extremal digraphs and nothing else") {
  CHECK(verify_extremal_witness(g_construction(12, 3).digraph, {12, 3, true, false, std::nullopt}, 20));
  CHECK(verify_extremal_witness(triangle_expansion(4).digraph, {9, 2, true, false, std::nullopt}, 18));
  // Source/sink side conditions.
  Digraph ob = oriented_bipartite(4, 4, 0).digraph;
  CHECK(!verify_extremal_witness(ob, {8, 2, true, false, std::nullopt}, 16));
  CHECK(!verify_extremal_witness(ob, {8, 2, false, true, std::nullopt}, 16));
  CHECK(verify_extremal_witness(ob, {8, 2, false, false, std::nullopt}, 16));
  // Wrong order, wrong size, unmet floor.
  CHECK(!verify_extremal_witness(ob, {9, 2, false, false, std::nullopt}, 16));
  CHECK(!verify_extremal_witness(ob, {8, 2, false, false, std::nullopt}, 15));
  CHECK(!verify_extremal_witness(ob, {8, 2, false, false, 17}, 16));
  // Wrong geodecity level. A one-directional orientation has no walk longer
  // than one arc, so it stays geodetic at every level; use a strongly
  // connected witness instead, whose closed walks cap the level.
  CHECK(verify_extremal_witness(ob, {8, 3, false, false, std::nullopt}, 16));
  CHECK(!verify_extremal_witness(triangle_expansion(4).digraph, {9, 3, false, false, std::nullopt}, 18));
  // Not geodetic at all.
  CHECK(!verify_extremal_witness(fixture(FixtureName::Hoof).digraph, {4, 2, false, false, std::nullopt}, 4));
}

TEST_CASE("checkpointed searches resume and reproduce the uncheckpointed record") {
  namespace fs = std::filesystem;
  SearchConstraints c{6, 2, true, false, std::nullopt};
  CensusRecord fresh = extremal_search(c);
  check_record_wellformed(fresh);

  fs::path path = fs::temp_directory_path() / "geodex_test_resume.ckpt";
  fs::remove(path);
  SearchOptions opt;
  opt.checkpoint_path = path.string();
  opt.split_depth = 3;

  // First pass: abort partway through the subtree list.
  SearchOptions partial = opt;
  partial.max_nodes = fresh.nodes_explored / 2;
  CensusRecord first = extremal_search(c, partial);
  CHECK(!first.complete);

  // Second pass: same configuration, full budget; finishes the rest.
  CensusRecord resumed = extremal_search(c, opt);
  CHECK(resumed.complete);
  CHECK(resumed.max_size == fresh.max_size);
  CHECK(resumed.class_count == fresh.class_count);
  CHECK(resumed.nodes_explored == fresh.nodes_explored);
  std::set<CanonicalForm> fa, fb;
  for (const Digraph& g : fresh.representatives) fa.insert(canonical_form(g));
  for (const Digraph& g : resumed.representatives) fb.insert(canonical_form(g));
  CHECK(fa == fb);

  // Third pass: everything already done; still the same record.
  CensusRecord replay = extremal_search(c, opt);
  CHECK(replay.complete);
  CHECK(replay.max_size == fresh.max_size);
  CHECK(replay.class_count == fresh.class_count);
  CHECK(replay.nodes_explored == fresh.nodes_explored);

  // A checkpoint written for different constraints is rejected.
  SearchConstraints other{6, 2, false, true, std::nullopt};
  CHECK_THROWS_AS(extremal_search(other, opt), std::invalid_argument);
  // So is one with a different option fingerprint.
  SearchOptions reshaped = opt;
  reshaped.split_depth = 1;
  CHECK_THROWS_AS(extremal_search(c, reshaped), std::invalid_argument);
  fs::remove(path);

  // Unrecognized bytes are rejected up front.
  fs::path garbage = fs::temp_directory_path() / "geodex_test_garbage.ckpt";
  {
    std::ofstream out(garbage, std::ios::binary);
    out << "not a checkpoint";
  }
  SearchOptions bad = opt;
  bad.checkpoint_path = garbage.string();
  CHECK_THROWS_AS(extremal_search(c, bad), std::invalid_argument);
  fs::remove(garbage);
}
