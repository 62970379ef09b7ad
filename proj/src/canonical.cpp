#include "geodex/canonical.hpp"

#include <algorithm>
#include <bit>
#include <cstring>
#include <numeric>
#include <stdexcept>

#include "geodex/detail/bits.hpp"

namespace geodex {
namespace {

using detail::words_for;

// Ordered-partition canonical search. The partition is an ordering
// `ord` of the vertices plus `end[i]` flags marking the last position
// of each cell. Refinement splits cells by (out,in)-degree towards a
// queue of splitter sets until stable; the branching step individualizes
// one vertex of the first non-singleton cell. Leaves are discrete
// partitions; the canonical form is the lexicographic maximum of the
// packed adjacency matrix over all leaves reached. Automorphisms appear
// as pairs of leaves with equal forms and prune sibling branches via the
// orbits of the subgroup fixing the individualized prefix pointwise.
class CanonSearch {
 public:
  explicit CanonSearch(const Digraph& g)
      : n_(g.n()), w_(g.row_words()), fwords_(words_for(n_ * n_)) {
    out_.assign(static_cast<std::size_t>(n_) * w_, 0);
    in_.assign(static_cast<std::size_t>(n_) * w_, 0);
    for (int u = 0; u < n_; ++u) {
      const std::uint64_t* row = g.row(u);
      std::copy(row, row + w_, out_.begin() + static_cast<std::size_t>(u) * w_);
      detail::for_each_bit(row, w_, [&](int v) { detail::set_bit(in_.data() + static_cast<std::size_t>(v) * w_, u); });
    }
    key_.resize(n_);
    uf_.resize(n_);
  }

  CanonicalResult run() {
    CanonicalResult res;
    res.form.n = n_;
    if (n_ == 0) return res;

    std::vector<int> ord(n_);
    std::iota(ord.begin(), ord.end(), 0);
    std::vector<std::uint8_t> end(n_, 0);
    end[n_ - 1] = 1;

    // The splitter queue is a flat LIFO of w_-word masks.
    std::vector<std::uint64_t> queue(w_, 0);
    for (int v = 0; v < n_; ++v) detail::set_bit(queue.data(), v);
    refine(ord, end, queue);
    descend(ord, end);

    res.form.words = std::move(best_form_);
    res.labeling.assign(n_, -1);
    for (int i = 0; i < n_; ++i) res.labeling[best_order_[i]] = i;
    res.automorphism_generators = std::move(gens_);
    return res;
  }

 private:
  const std::uint64_t* out_row(int v) const { return out_.data() + static_cast<std::size_t>(v) * w_; }
  const std::uint64_t* in_row(int v) const { return in_.data() + static_cast<std::size_t>(v) * w_; }

  // Splits every cell by the key (|out(v) & S|, |in(v) & S|) for each
  // splitter S until the queue drains. Subcell order is ascending key,
  // which fixes the refinement deterministically. All subcells re-enter
  // the queue; correctness needs only that every potential splitter is
  // eventually processed.
  void refine(std::vector<int>& ord, std::vector<std::uint8_t>& end, std::vector<std::uint64_t>& queue) {
    std::uint32_t* key = key_.data();
    while (!queue.empty()) {
      const std::size_t qtop = queue.size() - w_;
      spl_.assign(queue.begin() + qtop, queue.end());
      queue.resize(qtop);
      const std::uint64_t* s = spl_.data();
      int pos = 0;
      while (pos < n_) {
        int e = pos;
        while (!end[e]) ++e;
        if (e > pos) {
          bool mixed = false;
          for (int i = pos; i <= e; ++i) {
            int v = ord[i];
            std::uint32_t co = 0, ci = 0;
            for (int wi = 0; wi < w_; ++wi) {
              co += static_cast<std::uint32_t>(std::popcount(out_row(v)[wi] & s[wi]));
              ci += static_cast<std::uint32_t>(std::popcount(in_row(v)[wi] & s[wi]));
            }
            key[v] = (co << 16) | ci;
            if (key[v] != key[ord[pos]]) mixed = true;
          }
          if (mixed) {
            // Stable insertion sort by key; cells are nearly always tiny.
            for (int i = pos + 1; i <= e; ++i) {
              int v = ord[i];
              int j = i - 1;
              while (j >= pos && key[ord[j]] > key[v]) {
                ord[j + 1] = ord[j];
                --j;
              }
              ord[j + 1] = v;
            }
            int start = pos;
            for (int i = pos; i <= e; ++i) {
              if (i == e || key[ord[i]] != key[ord[i + 1]]) {
                end[i] = 1;
                std::size_t at = queue.size();
                queue.resize(at + w_, 0);
                for (int jj = start; jj <= i; ++jj) detail::set_bit(queue.data() + at, ord[jj]);
                start = i + 1;
              }
            }
          }
        }
        pos = e + 1;
      }
    }
  }

  void descend(std::vector<int>& ord, std::vector<std::uint8_t>& end) {
    int cs = -1, ce = -1;
    for (int pos = 0; pos < n_; ++pos) {
      int e = pos;
      while (!end[e]) ++e;
      if (e > pos) {
        cs = pos;
        ce = e;
        break;
      }
      pos = e;
    }
    if (cs < 0) {
      process_leaf(ord);
      return;
    }

    std::vector<int> cand(ord.begin() + cs, ord.begin() + ce + 1);
    std::vector<int> tried;
    std::vector<int> ord2(n_);
    std::vector<std::uint8_t> end2(n_);
    std::vector<std::uint64_t> queue;
    for (int v : cand) {
      if (in_orbit_of_tried(v, tried)) continue;
      tried.push_back(v);

      ord2 = ord;
      end2 = end;
      auto it = std::find(ord2.begin() + cs, ord2.begin() + ce + 1, v);
      std::rotate(ord2.begin() + cs, it, it + 1);
      end2[cs] = 1;

      queue.assign(2 * static_cast<std::size_t>(w_), 0);
      detail::set_bit(queue.data(), v);           // popped second
      for (int i = cs + 1; i <= ce; ++i) detail::set_bit(queue.data() + w_, ord2[i]);  // popped first
      refine(ord2, end2, queue);

      path_.push_back(v);
      descend(ord2, end2);
      path_.pop_back();
    }
  }

  // True iff some already-tried candidate lies in v's orbit under the
  // subgroup generated by the automorphisms found so far that fix the
  // current individualization path pointwise. Those map this node's
  // subtree onto an already-explored sibling subtree leaf-for-leaf, so
  // skipping v loses no forms and no further automorphism orbits at
  // this node (orbit membership is an equivalence).
  bool in_orbit_of_tried(int v, const std::vector<int>& tried) {
    if (tried.empty() || gens_.empty()) return false;
    int* parent = uf_.data();
    std::iota(uf_.begin(), uf_.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x = parent[x];
      }
      return x;
    };
    for (const auto& g : gens_) {
      bool fixes = true;
      for (int p : path_) {
        if (g[p] != p) {
          fixes = false;
          break;
        }
      }
      if (!fixes) continue;
      for (int x = 0; x < n_; ++x) {
        int a = find(x), b = find(g[x]);
        if (a != b) parent[a] = b;
      }
    }
    int fv = find(v);
    for (int u : tried)
      if (find(u) == fv) return true;
    return false;
  }

  void process_leaf(const std::vector<int>& ord) {
    lab_.resize(n_);
    for (int i = 0; i < n_; ++i) lab_[ord[i]] = i;
    leaf_form_.assign(fwords_, 0);
    for (int i = 0; i < n_; ++i) {
      int u = ord[i];
      detail::for_each_bit(out_row(u), w_, [&](int v) {
        long long b = static_cast<long long>(i) * n_ + lab_[v];
        leaf_form_[static_cast<std::size_t>(b / 64)] |= 1ull << (63 - b % 64);
      });
    }
    if (first_order_.empty()) {
      first_form_ = leaf_form_;
      first_order_ = ord;
      best_form_ = leaf_form_;
      best_order_ = ord;
      return;
    }
    if (leaf_form_ == first_form_) {
      record_automorphism(first_order_, ord);
      return;
    }
    if (leaf_form_ == best_form_) {
      record_automorphism(best_order_, ord);
      return;
    }
    if (leaf_form_ > best_form_) {
      best_form_ = leaf_form_;
      best_order_ = ord;
    }
  }

  // Two orderings with equal forms yield the automorphism a[i] -> b[i].
  void record_automorphism(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> g(n_);
    bool identity = true;
    for (int i = 0; i < n_; ++i) {
      g[a[i]] = b[i];
      if (a[i] != b[i]) identity = false;
    }
    if (identity) return;
    for (int u = 0; u < n_; ++u) {
      const std::uint64_t* row = out_row(u);
      bool ok = true;
      detail::for_each_bit(row, w_, [&](int v) {
        if (!detail::get_bit(out_row(g[u]), g[v])) ok = false;
      });
      if (!ok || detail::popcount_words(row, w_) != detail::popcount_words(out_row(g[u]), w_))
        throw std::logic_error("internal error: leaf pair is not an automorphism");
    }
    for (const auto& h : gens_)
      if (h == g) return;
    gens_.push_back(std::move(g));
  }

  int n_, w_, fwords_;
  std::vector<std::uint64_t> out_, in_;
  std::vector<std::uint64_t> first_form_, best_form_;
  std::vector<int> first_order_, best_order_;
  std::vector<std::vector<int>> gens_;
  std::vector<int> path_;
  std::vector<std::uint32_t> key_;
  std::vector<std::uint64_t> spl_;
  std::vector<int> uf_;
  std::vector<int> lab_;
  std::vector<std::uint64_t> leaf_form_;
};

}  // namespace

std::vector<std::uint8_t> CanonicalForm::bytes() const {
  std::vector<std::uint8_t> out(words.size() * 8);
  for (std::size_t i = 0; i < words.size(); ++i)
    for (int b = 0; b < 8; ++b) out[i * 8 + b] = static_cast<std::uint8_t>(words[i] >> (56 - 8 * b));
  return out;
}

CanonicalResult canonicalize(const Digraph& g) {
  if (g.n() > 2048) throw std::invalid_argument("canonical labeling supports at most 2048 vertices");
  return CanonSearch(g).run();
}

CanonicalForm canonical_form(const Digraph& g) { return canonicalize(g).form; }

Digraph digraph_from_canonical(const CanonicalForm& form) {
  Digraph g(form.n);
  for (int i = 0; i < form.n; ++i)
    for (int j = 0; j < form.n; ++j)
      if (form.bit(i, j)) g.add_arc(i, j);
  return g;
}

bool are_isomorphic(const Digraph& a, const Digraph& b) {
  if (a.n() != b.n() || a.m() != b.m()) return false;
  return canonical_form(a) == canonical_form(b);
}

std::size_t hash_value(const CanonicalForm& form) noexcept {
  std::uint64_t h = 1469598103934665603ull ^ static_cast<std::uint64_t>(form.n);
  for (std::uint64_t w : form.words) {
    h ^= w;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

}  // namespace geodex
