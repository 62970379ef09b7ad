#include "geodex/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <limits>
#include <mutex>
#include <set>
#include <stdexcept>
#include <thread>
#include <utility>

#include <json.hpp>

#include "geodex/detail/bits.hpp"
#include "geodex/digraph6.hpp"
#include "geodex/geodecity.hpp"

namespace geodex {
namespace {

using detail::words_for;

// ---------------------------------------------------------------------------
// Reachability state. ro(t,v) is the set of vertices reachable from v by a
// walk of length <= t (v itself included via t=0); ri is the same in the
// converse. In a digraph where every ordered pair has at most one walk of
// length <= k these sets grow by exactly one vertex per walk, which is what
// makes the slot test and the walk budgets below exact.
struct Reach {
  int n = 0, w = 0, k = 0;
  std::vector<std::uint64_t> out, in;   // (k+1) * n * w words, cumulative
  std::vector<long long> walks_total;   // walks_total[t] = sum_v |level t of v|, t in [0,k]
  std::vector<int> out_sz, in_sz;       // (k+1) * n level sizes; [t*n+v] = |level t of v|

  const std::uint64_t* ro(int t, int v) const {
    return out.data() + (static_cast<std::size_t>(t) * n + v) * w;
  }
  const std::uint64_t* ri(int t, int v) const {
    return in.data() + (static_cast<std::size_t>(t) * n + v) * w;
  }
  int osz(int t, int v) const { return out_sz[static_cast<std::size_t>(t) * n + v]; }
  int isz(int t, int v) const { return in_sz[static_cast<std::size_t>(t) * n + v]; }
};

void build_reach(const Digraph& g, int k, Reach& r) {
  const int n = g.n(), w = g.row_words();
  r.n = n;
  r.w = w;
  r.k = k;
  r.out.assign(static_cast<std::size_t>(k + 1) * n * w, 0);
  r.in.assign(static_cast<std::size_t>(k + 1) * n * w, 0);
  r.walks_total.assign(k + 1, 0);
  r.walks_total[0] = n;

  if (w == 1) {
    // Single-word rows: the shape every search actually runs at.
    std::uint64_t conv[64] = {};
    std::uint64_t rows[64];
    for (int u = 0; u < n; ++u) {
      rows[u] = g.row(u)[0];
      std::uint64_t f = rows[u];
      while (f) {
        conv[std::countr_zero(f)] |= 1ull << u;
        f &= f - 1;
      }
    }
    auto run1 = [&](std::uint64_t* dst, const std::uint64_t* nbr) {
      for (int v = 0; v < n; ++v) {
        std::uint64_t prev = 1ull << v;
        dst[v] = prev;
        std::uint64_t frontier = prev;
        for (int t = 1; t <= k; ++t) {
          std::uint64_t cur = prev;
          std::uint64_t f = frontier;
          while (f) {
            cur |= nbr[std::countr_zero(f)];
            f &= f - 1;
          }
          dst[static_cast<std::size_t>(t) * n + v] = cur;
          frontier = cur & ~prev;
          prev = cur;
        }
      }
    };
    run1(r.out.data(), rows);
    run1(r.in.data(), conv);
  } else {
    std::vector<std::uint64_t> conv(static_cast<std::size_t>(n) * w, 0);
    for (int u = 0; u < n; ++u)
      detail::for_each_bit(g.row(u), w, [&](int v) { detail::set_bit(conv.data() + static_cast<std::size_t>(v) * w, u); });

    auto run = [&](std::vector<std::uint64_t>& dst, auto row_of) {
      std::vector<std::uint64_t> frontier(w);
      for (int v = 0; v < n; ++v) {
        std::uint64_t* lvl0 = dst.data() + static_cast<std::size_t>(v) * w;
        detail::set_bit(lvl0, v);
        std::copy(lvl0, lvl0 + w, frontier.begin());
        for (int t = 1; t <= k; ++t) {
          const std::uint64_t* prev = dst.data() + (static_cast<std::size_t>(t - 1) * n + v) * w;
          std::uint64_t* cur = dst.data() + (static_cast<std::size_t>(t) * n + v) * w;
          std::copy(prev, prev + w, cur);
          detail::for_each_bit(frontier.data(), w, [&](int a) {
            const std::uint64_t* row = row_of(a);
            for (int wi = 0; wi < w; ++wi) cur[wi] |= row[wi];
          });
          for (int wi = 0; wi < w; ++wi) frontier[wi] = cur[wi] & ~prev[wi];
        }
      }
    };
    run(r.out, [&](int a) { return g.row(a); });
    run(r.in, [&](int a) { return conv.data() + static_cast<std::size_t>(a) * w; });
  }

  r.out_sz.assign(static_cast<std::size_t>(k + 1) * n, 0);
  r.in_sz.assign(static_cast<std::size_t>(k + 1) * n, 0);
  for (int v = 0; v < n; ++v) {
    r.out_sz[v] = 1;
    r.in_sz[v] = 1;
  }
  for (int t = 1; t <= k; ++t) {
    long long s = 0;
    for (int v = 0; v < n; ++v) {
      int so = detail::popcount_words(r.ro(t, v), w) - detail::popcount_words(r.ro(t - 1, v), w);
      int si = detail::popcount_words(r.ri(t, v), w) - detail::popcount_words(r.ri(t - 1, v), w);
      r.out_sz[static_cast<std::size_t>(t) * n + v] = so;
      r.in_sz[static_cast<std::size_t>(t) * n + v] = si;
      s += so;
    }
    r.walks_total[t] = s;
  }
}

// Reach of g + (u,v) from the reach of g, for single-word rows. Every walk
// that is new in the child passes through (u,v) exactly once (a second use
// would close a walk of length <= k at u or v, which the slot test has
// excluded), so it splits as a ->(s) u -> v ->(t) b with both halves walks
// of g: the out-rows that change are exactly those of the vertices that
// reach u within k-1, gaining v's out-ball shifted by their level, and
// symmetrically for the in-rows.
void extend_reach(const Reach& rg, const Digraph& h, int k, int u, int v, Reach& rh) {
  if (rg.w != 1) {
    build_reach(h, k, rh);
    return;
  }
  const int n = rg.n;
  rh.n = n;
  rh.w = 1;
  rh.k = k;
  rh.out = rg.out;
  rh.in = rg.in;
  rh.out_sz = rg.out_sz;
  rh.in_sz = rg.in_sz;
  rh.walks_total = rg.walks_total;

  const std::uint64_t* go = rg.out.data();
  const std::uint64_t* gi = rg.in.data();
  std::uint64_t* ho = rh.out.data();
  std::uint64_t* hi = rh.in.data();
  for (int s = 0; s + 1 <= k; ++s) {
    std::uint64_t f = gi[static_cast<std::size_t>(s) * n + u];
    if (s) f &= ~gi[static_cast<std::size_t>(s - 1) * n + u];
    while (f) {
      const int a = std::countr_zero(f);
      f &= f - 1;
      int prev = rg.osz(0, a);
      for (int t = 1; t <= s; ++t) prev += rg.osz(t, a);
      for (int t = s + 1; t <= k; ++t) {
        std::uint64_t* row = ho + static_cast<std::size_t>(t) * n + a;
        *row |= go[static_cast<std::size_t>(t - 1 - s) * n + v];
        const int cur = std::popcount(*row);
        const int ex = cur - prev;
        prev = cur;
        std::size_t idx = static_cast<std::size_t>(t) * n + a;
        rh.walks_total[t] += ex - rh.out_sz[idx];
        rh.out_sz[idx] = ex;
      }
    }
  }
  for (int s = 0; s + 1 <= k; ++s) {
    std::uint64_t f = go[static_cast<std::size_t>(s) * n + v];
    if (s) f &= ~go[static_cast<std::size_t>(s - 1) * n + v];
    while (f) {
      const int b = std::countr_zero(f);
      f &= f - 1;
      int prev = rg.isz(0, b);
      for (int t = 1; t <= s; ++t) prev += rg.isz(t, b);
      for (int t = s + 1; t <= k; ++t) {
        std::uint64_t* row = hi + static_cast<std::size_t>(t) * n + b;
        *row |= gi[static_cast<std::size_t>(t - 1 - s) * n + u];
        const int cur = std::popcount(*row);
        rh.in_sz[static_cast<std::size_t>(t) * n + b] = cur - prev;
        prev = cur;
      }
    }
  }
}

// Precondition: every ordered pair of g has at most one walk of length
// <= k, and u != v, (u,v) not an arc. Adding (u,v) creates the walks
// a ->(s) u -> v ->(t) b with s+1+t <= k; the pair (a,b) breaks iff it
// already has a walk of length <= k, which includes a == b (closed-walk
// case) since a is in ro(k,a). The new walk itself is unique per (a,b)
// because the walks a->u and v->b are.
bool slot_addable(const Reach& r, int u, int v) {
  const int w = r.w, k = r.k;
  if (w == 1) {
    const std::uint64_t* out = r.out.data();
    const std::uint64_t* in = r.in.data();
    const int n = r.n;
    const std::uint64_t* outk = out + static_cast<std::size_t>(k) * n;
    for (int s = 0; s + 1 <= k; ++s) {
      std::uint64_t f = in[static_cast<std::size_t>(s) * n + u];
      if (s) f &= ~in[static_cast<std::size_t>(s - 1) * n + u];
      const std::uint64_t tv = out[static_cast<std::size_t>(k - 1 - s) * n + v];
      while (f) {
        if (outk[std::countr_zero(f)] & tv) return false;
        f &= f - 1;
      }
    }
    return true;
  }
  for (int s = 0; s + 1 <= k; ++s) {
    const std::uint64_t* cur = r.ri(s, u);
    const std::uint64_t* prev = s ? r.ri(s - 1, u) : nullptr;
    const std::uint64_t* tv = r.ro(k - 1 - s, v);
    bool bad = false;
    for (int wi = 0; wi < w && !bad; ++wi) {
      std::uint64_t f = prev ? (cur[wi] & ~prev[wi]) : cur[wi];
      detail::for_each_bit64(f, [&](int b) {
        const std::uint64_t* ra = r.ro(k, wi * 64 + b);
        for (int wj = 0; wj < w; ++wj)
          if (ra[wj] & tv[wj]) {
            bad = true;
            return;
          }
      });
    }
    if (bad) return false;
  }
  return true;
}

using Slot = std::pair<int, int>;

// Kept slots are the candidates that pass the slot test. Existing arcs
// always fail it -- the pair already has its length-one walk -- so the
// candidate list may contain them; `used` is merely skipped a bit sooner.
void filter_addable(const Reach& r, const std::vector<Slot>& candidates, Slot used, std::vector<Slot>& out) {
  out.clear();
  out.reserve(candidates.size());
  for (const Slot& s : candidates)
    if (s != used && slot_addable(r, s.first, s.second)) out.push_back(s);
}

std::vector<Slot> all_slots(int n) {
  std::vector<Slot> s;
  s.reserve(static_cast<std::size_t>(n) * (n - 1));
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v) s.emplace_back(u, v);
  return s;
}

// Arc score used to pick the canonical deletion arc: the number of walks
// of length <= k that run through the arc, packed with the endpoint
// degrees as a tie-refiner. Isomorphism-invariant since it is computed
// from walk-level sizes alone. The deletion arc is the score maximum,
// with ties broken by canonical position, so any child whose just-added
// arc scores below the maximum can be rejected without canonical work.
void arc_scores(const Digraph& g, const Reach& r, std::vector<Slot>& arcs, std::vector<std::uint64_t>& scores) {
  const int n = g.n(), k = r.k;
  thread_local std::vector<int> ocum;
  ocum.assign(static_cast<std::size_t>(k) * n, 0);
  for (int v = 0; v < n; ++v) {
    int so = 0;
    for (int t = 0; t + 1 <= k; ++t) {
      so += r.osz(t, v);
      ocum[static_cast<std::size_t>(t) * n + v] = so;
    }
  }
  arcs.clear();
  scores.clear();
  for (int u = 0; u < n; ++u)
    detail::for_each_bit(g.row(u), g.row_words(), [&](int v) {
      std::uint64_t through = 0;
      for (int s = 0; s + 1 <= k; ++s)
        through += static_cast<std::uint64_t>(r.isz(s, u)) * ocum[static_cast<std::size_t>(k - 1 - s) * n + v];
      arcs.emplace_back(u, v);
      scores.push_back((through << 24) | (static_cast<std::uint64_t>(r.osz(1, u)) << 18) |
                       (static_cast<std::uint64_t>(r.isz(1, v)) << 12) |
                       (static_cast<std::uint64_t>(r.isz(1, u)) << 6) | static_cast<std::uint64_t>(r.osz(1, v)));
    });
}

// Deletion arc of g: maximum score, ties broken by position in the
// canonical adjacency matrix. Invariant up to the automorphism orbit of
// the arc, which is all the parent test needs.
Slot canonical_deletion_arc(const std::vector<Slot>& arcs, const std::vector<std::uint64_t>& scores,
                            std::uint64_t max_score, const std::vector<int>& labeling, int n) {
  long long best = -1;
  Slot arc{-1, -1};
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    if (scores[i] != max_score) continue;
    const long long pos = static_cast<long long>(labeling[arcs[i].first]) * n + labeling[arcs[i].second];
    if (pos > best) {
      best = pos;
      arc = arcs[i];
    }
  }
  return arc;
}

// Whether b lies in the orbit of a under the group generated by gens,
// acting on ordered pairs. Forward closure suffices: the generators have
// finite order, so inverses are reachable by repeated application. Orbits
// are tiny in practice, which makes this closure much cheaper than
// building the full pair partition.
bool same_pair_orbit(const std::vector<std::vector<int>>& gens, Slot a, Slot b, int n) {
  if (a == b) return true;
  thread_local std::vector<std::uint64_t> seen;
  thread_local std::vector<int> queue;
  seen.assign((static_cast<std::size_t>(n) * n + 63) / 64, 0);
  queue.clear();
  auto push = [&](int code) {
    if (seen[code >> 6] & (1ull << (code & 63))) return;
    seen[code >> 6] |= 1ull << (code & 63);
    queue.push_back(code);
  };
  push(a.first * n + a.second);
  const int want = b.first * n + b.second;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const int pu = queue[i] / n, pv = queue[i] % n;
    for (const auto& sg : gens) {
      const int img = sg[pu] * n + sg[pv];
      if (img == want) return true;
      push(img);
    }
  }
  return false;
}

struct Collector {
  /// Collection threshold: sizes below it are never recorded. It is fixed
  /// for the whole search; expansion decisions never read the evolving
  /// best, so the explored node set is a pure function of the constraints
  /// and stays identical across thread counts, split depths, and resumes.
  long long floor = 0;
  long long best = -1;
  std::set<CanonicalForm> forms;
  long long nodes = 0;

  void offer(long long m, const CanonicalForm& f) {
    if (m < floor || m < best) return;
    if (m > best) {
      best = m;
      forms.clear();
    }
    forms.insert(f);
  }
  void merge_from(const Collector& o) {
    nodes += o.nodes;
    if (o.best > best) {
      best = o.best;
      forms = o.forms;
    } else if (o.best == best && best >= 0) {
      forms.insert(o.forms.begin(), o.forms.end());
    }
  }
};

// ---------------------------------------------------------------------------
// Checkpoint file: "GDXCHK01", u32 header length, header JSON (must match
// exactly on resume), then per-subtree records
//   u32 index, i64 nodes, i64 best, u32 count, count * (u32 len, digraph6).
// Records are appended with a single flushed write per subtree, so a
// truncated tail (crash) loses at most the record being written.
constexpr char kCkptMagic[8] = {'G', 'D', 'X', 'C', 'H', 'K', '0', '1'};

std::string checkpoint_header(const SearchConstraints& c, const SearchOptions& o) {
  nlohmann::json j{{"version", 3},
                   {"n", c.n},
                   {"k", c.k},
                   {"require_strong", c.require_strong},
                   {"forbid_sources_sinks", c.forbid_sources_sinks},
                   {"min_size", c.min_size ? nlohmann::json(*c.min_size) : nlohmann::json()},
                   {"split_depth", o.split_depth},
                   {"prunes", {o.prune_size_ceiling, o.prune_walk_budget, o.prune_degree_cap, o.prune_dead_vertex}}};
  return j.dump();
}

struct CheckpointIO {
  std::mutex mu;
  std::FILE* f = nullptr;

  ~CheckpointIO() {
    if (f) std::fclose(f);
  }

  // Loads completed subtree records; returns false (and starts a fresh
  // file) if the file does not exist. Throws on a header mismatch.
  bool open(const std::string& path, const std::string& header, std::vector<std::pair<int, Collector>>& loaded) {
    std::ifstream in(path, std::ios::binary);
    if (in) {
      char magic[8];
      std::uint32_t hlen = 0;
      in.read(magic, 8);
      in.read(reinterpret_cast<char*>(&hlen), 4);
      if (!in || !std::equal(magic, magic + 8, kCkptMagic) || hlen > (1u << 20))
        throw std::invalid_argument("checkpoint file is not in a recognized format");
      std::string h(hlen, '\0');
      in.read(h.data(), hlen);
      if (!in || h != header)
        throw std::invalid_argument("checkpoint was written for a different search configuration");
      while (true) {
        std::uint32_t idx = 0, cnt = 0;
        std::int64_t nodes = 0, best = 0;
        in.read(reinterpret_cast<char*>(&idx), 4);
        in.read(reinterpret_cast<char*>(&nodes), 8);
        in.read(reinterpret_cast<char*>(&best), 8);
        in.read(reinterpret_cast<char*>(&cnt), 4);
        if (!in) break;
        Collector col;
        col.nodes = nodes;
        col.best = best;
        bool ok = true;
        for (std::uint32_t i = 0; i < cnt && ok; ++i) {
          std::uint32_t len = 0;
          in.read(reinterpret_cast<char*>(&len), 4);
          if (!in || len > (1u << 20)) {
            ok = false;
            break;
          }
          std::string s(len, '\0');
          in.read(s.data(), len);
          if (!in) {
            ok = false;
            break;
          }
          col.forms.insert(canonical_form(parse_digraph6(s)));
        }
        if (!ok) break;  // truncated tail: redo that subtree
        loaded.emplace_back(static_cast<int>(idx), std::move(col));
      }
      in.close();
      f = std::fopen(path.c_str(), "ab");
      if (!f) throw std::runtime_error("cannot append to checkpoint file: " + path);
      return true;
    }
    f = std::fopen(path.c_str(), "wb");
    if (!f) throw std::runtime_error("cannot create checkpoint file: " + path);
    std::uint32_t hlen = static_cast<std::uint32_t>(header.size());
    std::fwrite(kCkptMagic, 1, 8, f);
    std::fwrite(&hlen, 4, 1, f);
    std::fwrite(header.data(), 1, header.size(), f);
    std::fflush(f);
    return false;
  }

  void append(int index, const Collector& col) {
    std::string buf;
    auto put = [&buf](const void* p, std::size_t len) { buf.append(static_cast<const char*>(p), len); };
    std::uint32_t idx = static_cast<std::uint32_t>(index), cnt = static_cast<std::uint32_t>(col.forms.size());
    std::int64_t nodes = col.nodes, best = col.best;
    put(&idx, 4);
    put(&nodes, 8);
    put(&best, 8);
    put(&cnt, 4);
    for (const auto& form : col.forms) {
      std::string s = emit_digraph6(digraph_from_canonical(form));
      std::uint32_t len = static_cast<std::uint32_t>(s.size());
      put(&len, 4);
      put(s.data(), s.size());
    }
    std::lock_guard<std::mutex> lock(mu);
    std::fwrite(buf.data(), 1, buf.size(), f);
    std::fflush(f);
  }
};

// ---------------------------------------------------------------------------
struct Engine {
  SearchConstraints c;
  SearchOptions opt;
  int n, k;
  bool degree_bounded;  // strong or source/sink-free: min in/out degree 1 in any collectable digraph
  long long floor_sz;
  int degree_cap;

  std::atomic<long long> nodes_seen{0};
  std::atomic<int> abort_reason{0};  // 0 none, 1 nodes, 2 time
  std::chrono::steady_clock::time_point deadline;

  // Subtree handed to a worker: the digraph together with its already
  // reduced addable-slot list. Carrying the list (instead of refiltering
  // from scratch) preserves the deletions inherited from ancestors, which
  // keeps worker subtrees identical to what the recursive walk would do.
  struct Task {
    Digraph g;
    std::vector<Slot> addable;
  };
  std::vector<Task> tasks;
  Collector prefix;
  // Size every collectable must reach, frozen at construction. All prune
  // decisions use this static value rather than the best size found so
  // far, so the explored node set cannot depend on traversal order.
  long long required_static = 0;

  Engine(const SearchConstraints& c_, const SearchOptions& o_) : c(c_), opt(o_), n(c_.n), k(c_.k) {
    degree_bounded = c.require_strong || c.forbid_sources_sinks;
    floor_sz = c.min_size.value_or(0);
    required_static = floor_sz;
    degree_cap = k > 0 ? (n - 1) / k : n;
  }

  bool aborted() const { return abort_reason.load(std::memory_order_relaxed) != 0; }

  void count_node() {
    long long seen = nodes_seen.fetch_add(1, std::memory_order_relaxed) + 1;
    if (seen >= opt.max_nodes) {
      int want = 0;
      abort_reason.compare_exchange_strong(want, 1);
    } else if ((seen & 1023) == 0 && std::chrono::steady_clock::now() >= deadline) {
      int want = 0;
      abort_reason.compare_exchange_strong(want, 2);
    }
  }

  bool satisfies(const Digraph& g) const {
    if (c.forbid_sources_sinks || c.require_strong) {
      auto [sources, sinks] = g.sources_and_sinks();
      if (c.forbid_sources_sinks && (!sources.empty() || !sinks.empty())) return false;
    }
    if (c.require_strong && !g.is_strongly_connected()) return false;
    return true;
  }

  // Strong connectivity of g together with every addable arc, evaluated
  // on plain row masks so no Digraph is materialized on the hot path.
  bool closure_strong(const Digraph& g, const std::vector<Slot>& addable) {
    const int w = g.row_words();
    thread_local std::vector<std::uint64_t> rows, conv, seen, frontier, next;
    rows.assign(static_cast<std::size_t>(n) * w, 0);
    conv.assign(static_cast<std::size_t>(n) * w, 0);
    for (int u = 0; u < n; ++u) {
      const std::uint64_t* src = g.row(u);
      std::copy(src, src + w, rows.begin() + static_cast<std::size_t>(u) * w);
    }
    for (auto [u, v] : addable) detail::set_bit(rows.data() + static_cast<std::size_t>(u) * w, v);
    for (int u = 0; u < n; ++u)
      detail::for_each_bit(rows.data() + static_cast<std::size_t>(u) * w, w,
                           [&](int v) { detail::set_bit(conv.data() + static_cast<std::size_t>(v) * w, u); });
    auto reaches_all = [&](const std::uint64_t* mat) {
      seen.assign(w, 0);
      frontier.assign(w, 0);
      detail::set_bit(seen.data(), 0);
      detail::set_bit(frontier.data(), 0);
      bool grew = true;
      while (grew) {
        next.assign(w, 0);
        detail::for_each_bit(frontier.data(), w, [&](int a) {
          const std::uint64_t* row = mat + static_cast<std::size_t>(a) * w;
          for (int i = 0; i < w; ++i) next[i] |= row[i];
        });
        grew = false;
        for (int i = 0; i < w; ++i) {
          const std::uint64_t add = next[i] & ~seen[i];
          frontier[i] = add;
          seen[i] |= add;
          if (add) grew = true;
        }
      }
      return detail::popcount_words(seen.data(), w) == n;
    };
    return reaches_all(rows.data()) && reaches_all(conv.data());
  }

  // Budget-only subset of prune() that needs no addable list; used to
  // discard children before their slot filtering is even attempted.
  bool budget_dead(const Digraph& g, const Reach& r, long long required) {
    const long long m = g.m();
    const long long target = std::max(required, m + 1);
    const long long need = target - m;
    const long long budget = static_cast<long long>(n) * (n - 1);
    long long pairs_now = 0;
    for (int t = 1; t <= k; ++t) pairs_now += r.walks_total[t];
    // Every added arc gives its own endpoints a first walk.
    if (pairs_now + need > budget) return true;
    if (!degree_bounded) return false;

    long long w2 = 0, w3 = 0, v3 = 0;
    thread_local std::vector<long long> nbr2_out, nbr2_in, nbr3_out, nbr3_in;
    nbr2_out.assign(n, 0);
    nbr2_in.assign(n, 0);
    for (int v = 0; v < n; ++v)
      w2 += std::max<long long>(r.isz(1, v), 1) * std::max<long long>(r.osz(1, v), 1);
    for (int u = 0; u < n; ++u)
      detail::for_each_bit(g.row(u), r.w, [&](int v) {
        long long du = std::max<long long>(r.isz(1, u), 1);
        long long dv = std::max<long long>(r.osz(1, v), 1);
        w3 += du * dv;
        nbr2_out[u] += dv;
        nbr2_in[v] += du;
      });
    if (k >= 3) {
      nbr3_out.assign(n, 0);
      nbr3_in.assign(n, 0);
      for (int u = 0; u < n; ++u)
        detail::for_each_bit(g.row(u), r.w, [&](int v) {
          nbr3_out[u] += nbr2_out[v];
          nbr3_in[v] += nbr2_in[u];
        });
      for (int v = 0; v < n; ++v) v3 += nbr3_out[v];
    }
    long long total = 0, run = 0;
    for (int t = 1; t <= k; ++t) {
      run = std::max(run, r.walks_total[t]);
      long long lb = std::max(run, target);
      if (t >= 2) lb = std::max({lb, 2 * target - n, w2});
      if (t >= 3) lb = std::max({lb, w3, v3});
      total += lb;
    }
    if (total > budget) return true;

    thread_local std::vector<long long> rm;
    rm.assign(k + 1, 0);
    for (int v = 0; v < n; ++v) {
      for (int dir = 0; dir < 2; ++dir) {
        const long long d = dir == 0 ? r.osz(1, v) : r.isz(1, v);
        long long run2 = 0, phi = 0;
        for (int t = 1; t <= k; ++t) {
          run2 = std::max<long long>(run2, dir == 0 ? r.osz(t, v) : r.isz(t, v));
          if (t == 2) run2 = std::max(run2, dir == 0 ? nbr2_out[v] : nbr2_in[v]);
          if (t == 3) run2 = std::max(run2, dir == 0 ? nbr3_out[v] : nbr3_in[v]);
          phi += std::max(run2, std::max<long long>(d, 1));
        }
        if (phi > n - 1) return true;
      }
    }
    return false;
  }

  // All prunes reason about descendants only: a state is pruned when no
  // proper supergraph of it can both stay walk-unique and be collected.
  // Anything collectable strictly below this node has at least
  // max(required, m+1) arcs; every bound below holds for any such
  // supergraph H (walk counts, degrees, levels, and balls only grow along
  // arc addition, levels stay disjoint because H is still walk-unique,
  // and in the degree-bounded modes H has minimum in- and out-degree 1).
  // Ancestors of a collectable digraph therefore always survive.
  //
  // On top of the yes/no answer, the addable list is reduced in place:
  // a slot gets deleted once no collectable descendant of this node can
  // ever use it. Deletions are inherited by the whole subtree (children
  // filter the parent's list), shrink the branching factor, and feed the
  // ceiling, dead-vertex, and connectivity prunes.
  bool prune(const Digraph& g, const Reach& r, std::vector<Slot>& addable, long long required) {
    const long long m = g.m();
    const long long target = std::max(required, m + 1);
    const long long need = target - m;
    // Every arc a descendant ever gains comes from the current addable
    // list, so fewer slots than missing arcs is already fatal.
    if (static_cast<long long>(addable.size()) < need) return true;
    if (opt.prune_size_ceiling) {
      // (u,v) and (v,u) can never both be added: a 2-cycle is a closed
      // walk of length 2 <= k on top of the trivial one. The addable list
      // stays in lexicographic order, so pair lookup can bisect.
      long long rev = 0;
      for (auto [u, v] : addable)
        if (u < v && std::binary_search(addable.begin(), addable.end(), Slot{v, u})) ++rev;
      if (m + static_cast<long long>(addable.size()) - rev < target) return true;
    }
    if (opt.prune_walk_budget) {
      // Sum over ordered pairs of "has a walk of length <= k": at most
      // n(n-1) in any walk-unique digraph.
      const long long budget = static_cast<long long>(n) * (n - 1);
      long long pairs_now = 0;
      for (int t = 1; t <= k; ++t) pairs_now += r.walks_total[t];

      // Cumulative ball sizes: ocum[t*n+v] = |out-ball of radius t at v|.
      thread_local std::vector<int> ocum, icum;
      ocum.assign(static_cast<std::size_t>(k + 1) * n, 0);
      icum.assign(static_cast<std::size_t>(k + 1) * n, 0);
      for (int v = 0; v < n; ++v) {
        int so = 0, si = 0;
        for (int t = 0; t <= k; ++t) {
          so += r.osz(t, v);
          si += r.isz(t, v);
          ocum[static_cast<std::size_t>(t) * n + v] = so;
          icum[static_cast<std::size_t>(t) * n + v] = si;
        }
      }
      // Walks out of v land on pairwise distinct vertices other than v,
      // so at most n-1 ever exist; slack is what v can still absorb.
      thread_local std::vector<int> slack_out, slack_in;
      slack_out.assign(n, 0);
      slack_in.assign(n, 0);
      for (int v = 0; v < n; ++v) {
        slack_out[v] = n - ocum[static_cast<std::size_t>(k) * n + v];
        slack_in[v] = n - icum[static_cast<std::size_t>(k) * n + v];
      }

      long long w2 = 0, w3 = 0, v3 = 0;
      thread_local std::vector<long long> nbr2_out, nbr2_in, nbr3_out, nbr3_in;
      thread_local std::vector<int> room_out, room_in;
      room_out.assign(n, std::numeric_limits<int>::max());
      room_in.assign(n, std::numeric_limits<int>::max());
      if (degree_bounded) {
        // With minimum in/out degree 1 in the final digraph, walk counts
        // are nondecreasing in the length (every walk extends, distinct
        // walks stay distinct), the length-2 count is exactly
        // sum_v d-(v) d+(v), the length-3 count is exactly
        // sum_arcs d-(u) d+(v), and composing current 2-step counts over
        // current arcs floors the length-3 count a second way; current
        // degrees bound final ones below.
        nbr2_out.assign(n, 0);
        nbr2_in.assign(n, 0);
        for (int v = 0; v < n; ++v)
          w2 += std::max<long long>(r.isz(1, v), 1) * std::max<long long>(r.osz(1, v), 1);
        for (int u = 0; u < n; ++u)
          detail::for_each_bit(g.row(u), r.w, [&](int v) {
            long long du = std::max<long long>(r.isz(1, u), 1);
            long long dv = std::max<long long>(r.osz(1, v), 1);
            w3 += du * dv;
            nbr2_out[u] += dv;
            nbr2_in[v] += du;
          });
        if (k >= 3) {
          nbr3_out.assign(n, 0);
          nbr3_in.assign(n, 0);
          for (int u = 0; u < n; ++u)
            detail::for_each_bit(g.row(u), r.w, [&](int v) {
              nbr3_out[u] += nbr2_out[v];
              nbr3_in[v] += nbr2_in[u];
            });
          for (int v = 0; v < n; ++v) v3 += nbr3_out[v];
        }
        long long total = 0, run = 0;
        for (int t = 1; t <= k; ++t) {
          run = std::max(run, r.walks_total[t]);
          long long lb = std::max(run, target);
          if (t >= 2) lb = std::max({lb, 2 * target - n, w2});
          if (t >= 3) lb = std::max({lb, w3, v3});
          total += lb;
        }
        if (total > budget) return true;

        // Degree room: the level-size floors rm[] hold for every
        // collectable descendant, every level is at least the final
        // degree D, and the levels pack into n-1 slots, so the largest
        // D with phi(D) <= n-1 caps the degree v can ever reach.
        thread_local std::vector<long long> rm;
        rm.assign(k + 1, 0);
        for (int v = 0; v < n; ++v) {
          for (int dir = 0; dir < 2; ++dir) {
            const long long d = dir == 0 ? r.osz(1, v) : r.isz(1, v);
            long long run2 = 0;
            for (int t = 1; t <= k; ++t) {
              run2 = std::max<long long>(run2, dir == 0 ? r.osz(t, v) : r.isz(t, v));
              if (t == 2) run2 = std::max(run2, dir == 0 ? nbr2_out[v] : nbr2_in[v]);
              if (t == 3) run2 = std::max(run2, dir == 0 ? nbr3_out[v] : nbr3_in[v]);
              rm[t] = run2;
            }
            auto phi = [&](long long deg) {
              long long s = 0;
              for (int t = 1; t <= k; ++t) s += std::max(rm[t], deg);
              return s;
            };
            long long cap = std::max<long long>(d, 1);
            if (phi(cap) > n - 1) return true;
            while (phi(cap + 1) <= n - 1) ++cap;
            if (opt.prune_degree_cap) cap = std::min<long long>(cap, degree_cap);
            (dir == 0 ? room_out : room_in)[v] = static_cast<int>(cap - d);
          }
        }
      }

      // Slot costs. Adding (x,y) to any walk-unique supergraph creates a
      // fresh walk for every pair (a,b) with a at some exact in-level s
      // of x and b in the out-ball of y of radius k-1-s: such pairs are
      // currently walk-free (otherwise the slot would not be addable
      // there), pairwise distinct, and off-diagonal, and levels and balls
      // only grow along a branch, so the cost computed here is a lower
      // bound at every later node too.
      //
      // First reduction pass: a slot whose tail (head) has no degree room
      // left, or whose single-arc spend already overflows the tail's out
      // or the head's in slack, can never be used below this node.
      thread_local std::vector<long long> costs;
      costs.clear();
      const int* ok1 = ocum.data() + static_cast<std::size_t>(k - 1) * n;
      const int* ik1 = icum.data() + static_cast<std::size_t>(k - 1) * n;
      {
        std::size_t keep = 0;
        for (const Slot& s : addable) {
          const auto [x, y] = s;
          if (room_out[x] <= 0 || room_in[y] <= 0) continue;
          if (ok1[y] > slack_out[x] || ik1[x] > slack_in[y]) continue;
          long long cost = 0;
          for (int t = 0; t + 1 <= k; ++t)
            cost += static_cast<long long>(r.isz(t, x)) * ocum[static_cast<std::size_t>(k - 1 - t) * n + y];
          addable[keep++] = s;
          costs.push_back(cost);
        }
        addable.resize(keep);
      }

      // Iterated reduction. Arcs in the same unordered vertex pair
      // exclude each other (a 2-cycle closes a walk of length 2), so any
      // `need` future arcs occupy `need` distinct pairs, each costing at
      // least its pair's cheaper direction: reaching the target spends at
      // least the `need` cheapest pair minima on top of pairs_now. A slot
      // whose own cost plus the cheapest need-1 other pair minima busts
      // the budget is unusable everywhere below and gets deleted, which
      // can cascade.
      thread_local std::vector<long long> pair_min, group_sorted, slot_group;
      thread_local std::vector<int> bkt_cnt, bkt_off, bkt_val;
      for (int round = 0; round < 4; ++round) {
        const long long live = static_cast<long long>(addable.size());
        if (live < need) return true;

        pair_min.assign(static_cast<std::size_t>(n) * n, -1);
        group_sorted.clear();
        slot_group.resize(addable.size());
        for (std::size_t i = 0; i < addable.size(); ++i) {
          const auto [x, y] = addable[i];
          const std::size_t key = static_cast<std::size_t>(std::min(x, y)) * n + std::max(x, y);
          slot_group[i] = static_cast<long long>(key);
          if (pair_min[key] < 0 || costs[i] < pair_min[key]) pair_min[key] = costs[i];
        }
        for (std::size_t i = 0; i < addable.size(); ++i) {
          const std::size_t key = static_cast<std::size_t>(slot_group[i]);
          if (pair_min[key] >= 0) {
            group_sorted.push_back(pair_min[key]);
            pair_min[key] = -pair_min[key] - 2;  // mark collected; recover via -(v+2)
          }
        }
        for (auto& v : pair_min)
          if (v < -1) v = -v - 2;
        if (static_cast<long long>(group_sorted.size()) < need) return true;
        std::sort(group_sorted.begin(), group_sorted.end());
        long long spend = 0;
        for (std::size_t i = 0; i < static_cast<std::size_t>(need); ++i) spend += group_sorted[i];
        if (pairs_now + spend > budget) return true;

        // Per-vertex rooms under the current list: how many of the
        // cheapest single-arc spends at v pack into its slack, further
        // capped by the degree room. Buckets are laid out CSR-style per
        // tail (then per head) and sorted in place.
        auto pack_rooms = [&](bool out_side) {
          bkt_cnt.assign(n, 0);
          for (auto [x, y] : addable) ++bkt_cnt[out_side ? x : y];
          bkt_off.assign(n + 1, 0);
          for (int v = 0; v < n; ++v) bkt_off[v + 1] = bkt_off[v] + bkt_cnt[v];
          bkt_val.resize(addable.size());
          bkt_cnt.assign(n, 0);
          for (auto [x, y] : addable) {
            const int v = out_side ? x : y;
            bkt_val[bkt_off[v] + bkt_cnt[v]++] = out_side ? ok1[y] : ik1[x];
          }
          long long room = 0;
          for (int v = 0; v < n; ++v) {
            const int lo = bkt_off[v], hi = bkt_off[v + 1];
            if (lo == hi) continue;
            std::sort(bkt_val.begin() + lo, bkt_val.begin() + hi);
            int fit = 0;
            long long left = out_side ? slack_out[v] : slack_in[v];
            for (int i = lo; i < hi && bkt_val[i] <= left; ++i) {
              left -= bkt_val[i];
              ++fit;
            }
            room += std::min<long long>(fit, out_side ? room_out[v] : room_in[v]);
          }
          return room;
        };
        if (m + std::min(pack_rooms(true), pack_rooms(false)) < target) return true;

        // Deletion threshold: the cheapest need-1 pair minima among the
        // OTHER pairs; when the candidate's own pair minimum sits inside
        // that prefix, swapping in the boundary value corrects the sum.
        long long prefix = 0;
        for (std::size_t i = 0; i + 1 < static_cast<std::size_t>(need); ++i) prefix += group_sorted[i];
        const long long boundary = group_sorted[static_cast<std::size_t>(need) - 1];
        std::size_t keep = 0;
        for (std::size_t i = 0; i < addable.size(); ++i) {
          const long long c0 = costs[i];
          const long long gm = pair_min[static_cast<std::size_t>(slot_group[i])];
          long long others = prefix;
          if (need >= 2 && gm < boundary) others += boundary - gm;
          if (pairs_now + c0 + others > budget) continue;
          addable[keep] = addable[i];
          costs[keep] = c0;
          ++keep;
        }
        if (keep == addable.size()) break;
        addable.resize(keep);
        costs.resize(keep);
      }

      if (static_cast<long long>(addable.size()) < need) return true;
    }
    if (opt.prune_degree_cap && degree_bounded) {
      // With minimum degree 1 everywhere, levels never shrink along t, so
      // k*d(v) <= n-1.
      for (int v = 0; v < n; ++v)
        if (r.osz(1, v) > degree_cap || r.isz(1, v) > degree_cap) return true;
    }
    if (opt.prune_dead_vertex && degree_bounded && n > 1) {
      thread_local std::vector<std::uint8_t> out_ok, in_ok;
      out_ok.assign(n, 0);
      in_ok.assign(n, 0);
      for (auto [u, v] : addable) {
        out_ok[u] = 1;
        in_ok[v] = 1;
      }
      for (int v = 0; v < n; ++v) {
        if (r.osz(1, v) == 0 && !out_ok[v]) return true;
        if (r.isz(1, v) == 0 && !in_ok[v]) return true;
      }
      // Every arc a descendant can ever gain is in the addable list, so
      // if even the union of g with all of them is not strongly
      // connected, no descendant is either.
      if (c.require_strong && !closure_strong(g, addable)) return true;
    }
    return false;
  }

  // Canonical-augmentation step for one accepted tree node g (already
  // counted and offered by the caller). Children are pruned before any
  // canonical work: a child that can neither be collected itself nor
  // lead anywhere is skipped without the acceptance test, which is safe
  // because only offered or expanded nodes need the exactly-once
  // guarantee. depth_left > 0 keeps recursing; at 0 accepted children
  // are stashed as parallel tasks instead.
  void expand(const Digraph& g, const CanonicalResult& cg, const Reach& rg, const std::vector<Slot>& addable,
              int depth_left, Collector& col) {
    if (addable.empty()) return;

    // One candidate per known automorphism orbit of the addable slots,
    // tried in lexicographic order. Each new representative floods its
    // whole orbit (forward closure over the generators reaches inverses
    // too, the generators having finite order), which is far cheaper than
    // partitioning all n^2 ordered pairs up front.
    std::vector<Slot> reps;
    if (cg.automorphism_generators.empty()) {
      reps = addable;
    } else {
      thread_local std::vector<std::uint64_t> seen;
      thread_local std::vector<int> queue;
      seen.assign((static_cast<std::size_t>(n) * n + 63) / 64, 0);
      for (const Slot& s : addable) {
        const int code = s.first * n + s.second;
        if (seen[code >> 6] & (1ull << (code & 63))) continue;
        reps.push_back(s);
        seen[code >> 6] |= 1ull << (code & 63);
        queue.assign(1, code);
        for (std::size_t i = 0; i < queue.size(); ++i) {
          const int pu = queue[i] / n, pv = queue[i] % n;
          for (const auto& sg : cg.automorphism_generators) {
            const int img = sg[pu] * n + sg[pv];
            if (!(seen[img >> 6] & (1ull << (img & 63)))) {
              seen[img >> 6] |= 1ull << (img & 63);
              queue.push_back(img);
            }
          }
        }
      }
    }

    // Sorted degree-pair profile of g: a mismatch against the profile of
    // a child minus its canonical arc refutes isomorphism without running
    // the canonical labeler. Degrees fit in a byte (n <= 64).
    std::vector<int> gsig(n);
    for (int v = 0; v < n; ++v) gsig[v] = (rg.isz(1, v) << 8) | rg.osz(1, v);
    std::sort(gsig.begin(), gsig.end());

    const long long mh = g.m() + 1;
    std::set<CanonicalForm> sibling_forms;
    Digraph h(n);
    Reach rh;
    std::vector<Slot> addable_h;
    for (const Slot& e : reps) {
      if (aborted()) return;
      // A child's addable slots are a subset of this node's minus the one
      // just used, so when that cannot reach the requirement the whole
      // branch is dead without even building the child.
      if (opt.prune_size_ceiling && mh < required_static &&
          mh + static_cast<long long>(addable.size()) - 1 < required_static)
        continue;

      h = g;
      h.add_arc(e.first, e.second);
      extend_reach(rg, h, k, e.first, e.second, rh);
      const bool collectable = mh >= col.floor && satisfies(h);

      // Parent test: h survives iff deleting its canonical arc gives
      // back (an isomorphic copy of) g. Every isomorphism class is
      // reached exactly once globally: reachable via its canonical
      // deletion chain, and the test pins the parent class, so two
      // different parents can never both produce it.
      //
      // Score prescreen, run before any other per-child work: the
      // deletion arc always achieves the maximum arc score, and every
      // class is reachable through a slot whose added arc achieves it
      // (the chain witness maps to the deletion arc, and scores are
      // isomorphism-invariant), so a child whose new arc scores below
      // the maximum is rejected here without paying for slot filtering,
      // pruning, or a canonical labeling. Scratch vectors are
      // thread-local but fully consumed before the recursive call below.
      thread_local std::vector<Slot> harcs;
      thread_local std::vector<std::uint64_t> hscores;
      arc_scores(h, rh, harcs, hscores);
      std::uint64_t max_score = 0;
      std::uint64_t e_score = 0;
      for (std::size_t i = 0; i < harcs.size(); ++i) {
        if (hscores[i] > max_score) max_score = hscores[i];
        if (harcs[i] == e) e_score = hscores[i];
      }
      if (e_score < max_score) continue;

      // Cheap slot-free budget test next: doomed children die here
      // without paying for slot filtering or the full prune.
      if (!collectable && opt.prune_walk_budget && budget_dead(h, rh, required_static)) continue;
      filter_addable(rh, addable, e, addable_h);
      const bool dead = prune(h, rh, addable_h, required_static);
      if (dead && !collectable) continue;

      CanonicalResult ch = canonicalize(h);
      Slot astar = canonical_deletion_arc(harcs, hscores, max_score, ch.labeling, n);
      bool accept;
      if (astar == e) {
        accept = true;
      } else if (!ch.automorphism_generators.empty() && same_pair_orbit(ch.automorphism_generators, e, astar, n)) {
        accept = true;
      } else {
        // Deleting e from h gives back g itself, so h minus astar can
        // only match g if the degree profiles already agree.
        thread_local std::vector<int> hsig;
        hsig.resize(n);
        for (int v = 0; v < n; ++v) {
          const int din = rg.isz(1, v) + (v == e.second) - (v == astar.second);
          const int dout = rg.osz(1, v) + (v == e.first) - (v == astar.first);
          hsig[v] = (din << 8) | dout;
        }
        std::sort(hsig.begin(), hsig.end());
        if (hsig != gsig) {
          accept = false;
        } else {
          Digraph hm = h;
          hm.remove_arc(astar.first, astar.second);
          accept = canonical_form(hm) == cg.form;
        }
      }
      if (!accept) continue;
      // An over-split orbit partition (generators are not guaranteed to
      // generate the full group) can surface the same child class twice.
      if (!sibling_forms.insert(ch.form).second) continue;

      count_node();
      col.nodes += 1;
      if (collectable) col.offer(mh, ch.form);
      if (dead) continue;
      if (depth_left == 0) {
        tasks.push_back({h, addable_h});
      } else {
        expand(h, ch, rh, addable_h, depth_left - 1, col);
      }
    }
  }

  CensusRecord run() {
    auto t0 = std::chrono::steady_clock::now();
    deadline = t0 + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                        std::chrono::duration<double>(opt.max_seconds));

    CheckpointIO ckpt;
    std::vector<std::pair<int, Collector>> loaded;
    bool resuming = false;
    if (!opt.checkpoint_path.empty())
      resuming = ckpt.open(opt.checkpoint_path, checkpoint_header(c, opt), loaded);

    const std::vector<Slot> slots = all_slots(n);
    Digraph root(n);
    prefix.floor = floor_sz;
    {
      count_node();
      prefix.nodes += 1;
      Reach r0;
      build_reach(root, k, r0);
      std::vector<Slot> a0;
      filter_addable(r0, slots, Slot{-1, -1}, a0);
      CanonicalResult c0 = canonicalize(root);
      if (0 >= prefix.floor && satisfies(root)) prefix.offer(0, c0.form);
      if (!prune(root, r0, a0, required_static)) expand(root, c0, r0, a0, opt.split_depth, prefix);
    }

    std::vector<Collector> results(tasks.size());
    std::vector<std::uint8_t> done(tasks.size(), 0);
    if (resuming)
      for (auto& [idx, col] : loaded)
        if (idx >= 0 && static_cast<std::size_t>(idx) < tasks.size()) {
          results[idx] = std::move(col);
          done[idx] = 1;
        }

    if (!tasks.empty() && !aborted()) {
      std::atomic<std::size_t> next{0};
      int nthreads = std::max(1, std::min<int>(opt.threads, static_cast<int>(tasks.size())));
      auto work = [&]() {
        while (!aborted()) {
          std::size_t i = next.fetch_add(1);
          if (i >= tasks.size()) break;
          if (done[i]) continue;
          Collector col;
          col.floor = floor_sz;
          // The task carries the addable list the recursive walk would
          // have used; the subtree root itself was already pruned and
          // counted when it was pushed, so the worker only expands.
          const Task& t = tasks[i];
          Reach rt;
          build_reach(t.g, k, rt);
          expand(t.g, canonicalize(t.g), rt, t.addable, -1, col);
          results[i] = std::move(col);
          if (!aborted()) {
            done[i] = 1;
            if (ckpt.f) ckpt.append(static_cast<int>(i), results[i]);
          }
        }
      };
      if (nthreads == 1) {
        work();
      } else {
        std::vector<std::thread> pool;
        pool.reserve(nthreads);
        for (int i = 0; i < nthreads; ++i) pool.emplace_back(work);
        for (auto& th : pool) th.join();
      }
    }

    Collector total = prefix;
    for (std::size_t i = 0; i < results.size(); ++i) total.merge_from(results[i]);

    CensusRecord rec;
    rec.constraints = c;
    rec.nodes_explored = total.nodes;
    if (total.best >= 0) {
      rec.max_size = total.best;
      rec.class_count = static_cast<long long>(total.forms.size());
      for (const auto& f : total.forms) rec.representatives.push_back(digraph_from_canonical(f));
    }
    int reason = abort_reason.load();
    rec.complete = reason == 0;
    if (reason == 1)
      rec.status = "node budget exceeded; partial result";
    else if (reason == 2)
      rec.status = "time budget exceeded; partial result";
    rec.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rec;
  }

};

}  // namespace

long long exclusion_bound(int n, int m, long long known_ex_m) {
  if (m < 2 || n < m) throw std::invalid_argument("exclusion_bound needs 2 <= m <= n");
  if (known_ex_m < 0) throw std::invalid_argument("known_ex_m must be nonnegative");
  unsigned __int128 num = static_cast<unsigned __int128>(n) * (n - 1) * static_cast<unsigned __int128>(known_ex_m);
  unsigned __int128 den = static_cast<unsigned __int128>(m) * (m - 1);
  return static_cast<long long>(num / den);
}

bool verify_extremal_witness(const Digraph& g, const SearchConstraints& c, long long claimed_size) {
  if (g.n() != c.n || g.m() != claimed_size) return false;
  if (!is_k_geodetic(g, c.k).is_k_geodetic) return false;
  if (c.require_strong && !g.is_strongly_connected()) return false;
  if (c.forbid_sources_sinks) {
    auto [sources, sinks] = g.sources_and_sinks();
    if (!sources.empty() || !sinks.empty()) return false;
  }
  if (c.min_size && claimed_size < *c.min_size) return false;
  return true;
}

CensusRecord extremal_search(const SearchConstraints& c, const SearchOptions& opts) {
  if (c.n < 1) throw std::invalid_argument("search needs n >= 1");
  if (c.k < 2) throw std::invalid_argument("search needs k >= 2");
  if (opts.split_depth < 0 || opts.threads < 1 || opts.max_nodes < 1 || opts.max_seconds <= 0)
    throw std::invalid_argument("invalid search options");
  Engine engine(c, opts);
  return engine.run();
}

}  // namespace geodex
