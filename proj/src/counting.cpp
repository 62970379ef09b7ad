#include "geodex/counting.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "geodex/detail/bits.hpp"

namespace geodex {

using detail::for_each_bit;

namespace {

struct PatternCounter {
  const Digraph& g;
  BigInt count = 0;
  std::vector<long long> per_arc;  // n*n, row-major

  explicit PatternCounter(const Digraph& g_) : g(g_), per_arc(static_cast<std::size_t>(g_.n()) * g_.n(), 0) {}

  void record(const std::vector<int>& verts, bool closed) {
    ++count;
    for (std::size_t i = 0; i + 1 < verts.size(); ++i)
      ++per_arc[static_cast<std::size_t>(verts[i]) * g.n() + verts[i + 1]];
    if (closed) ++per_arc[static_cast<std::size_t>(verts.back()) * g.n() + verts.front()];
  }

  long long per_arc_max() const {
    long long best = 0;
    for (long long c : per_arc) best = std::max(best, c);
    return best;
  }
};

}  // namespace

CountReport count_directed_cycles(const Digraph& g, int len) {
  if (len < 2) throw std::invalid_argument("cycle length must be >= 2");
  PatternCounter counter(g);
  std::vector<int> path;
  std::vector<char> on_path(static_cast<std::size_t>(g.n()), 0);
  // Each cycle is rooted at its smallest vertex, so deeper vertices are
  // restricted to indices above the root.
  auto extend = [&](auto&& self, int root) -> void {
    int u = path.back();
    if (static_cast<int>(path.size()) == len) {
      if (g.has_arc(u, root)) counter.record(path, /*closed=*/true);
      return;
    }
    for_each_bit(g.row(u), g.row_words(), [&](int v) {
      if (v <= root || on_path[static_cast<std::size_t>(v)]) return;
      on_path[static_cast<std::size_t>(v)] = 1;
      path.push_back(v);
      self(self, root);
      path.pop_back();
      on_path[static_cast<std::size_t>(v)] = 0;
    });
  };
  for (int root = 0; root < g.n(); ++root) {
    path.assign(1, root);
    on_path[static_cast<std::size_t>(root)] = 1;
    extend(extend, root);
    on_path[static_cast<std::size_t>(root)] = 0;
  }
  CountReport report;
  report.pattern = PatternKind::Cycle;
  report.length = len;
  report.count = std::move(counter.count);
  report.per_arc_max = counter.per_arc_max();
  return report;
}

CountReport count_directed_paths(const Digraph& g, int len) {
  if (len < 1) throw std::invalid_argument("path length must be >= 1");
  PatternCounter counter(g);
  std::vector<int> path;
  std::vector<char> on_path(static_cast<std::size_t>(g.n()), 0);
  auto extend = [&](auto&& self) -> void {
    if (static_cast<int>(path.size()) == len + 1) {
      counter.record(path, /*closed=*/false);
      return;
    }
    for_each_bit(g.row(path.back()), g.row_words(), [&](int v) {
      if (on_path[static_cast<std::size_t>(v)]) return;
      on_path[static_cast<std::size_t>(v)] = 1;
      path.push_back(v);
      self(self);
      path.pop_back();
      on_path[static_cast<std::size_t>(v)] = 0;
    });
  };
  for (int start = 0; start < g.n(); ++start) {
    path.assign(1, start);
    on_path[static_cast<std::size_t>(start)] = 1;
    extend(extend);
    on_path[static_cast<std::size_t>(start)] = 0;
  }
  CountReport report;
  report.pattern = PatternKind::Path;
  report.length = len;
  report.count = std::move(counter.count);
  report.per_arc_max = counter.per_arc_max();
  return report;
}

long long triangle_upper_bound(long long n) {
  if (n < 1 || n > 1'000'000'000) throw std::invalid_argument("order out of range");
  const long long x = 4 * n - 3;
  long long s = static_cast<long long>(std::sqrt(static_cast<double>(x)));
  while (s > 0 && s * s > x) --s;
  while ((s + 1) * (s + 1) <= x) ++s;
  if (s * s == x) return n * (s - 1) / 6;
  // Largest q with (6q+n)^2 <= n^2 (4n-3); sqrt(x) is irrational here so
  // equality never binds the other side.
  const unsigned __int128 rhs = static_cast<unsigned __int128>(n) * n * x;
  long long lo = n * (s - 1) / 6;
  long long hi = lo + n / 6 + 2;
  while (lo < hi) {
    long long mid = lo + (hi - lo + 1) / 2;
    unsigned __int128 lhs = static_cast<unsigned __int128>(6 * mid + n);
    if (lhs * lhs <= rhs)
      lo = mid;
    else
      hi = mid - 1;
  }
  return lo;
}

namespace {

BigInt pow_k(const BigInt& a, int k) {
  BigInt acc = 1;
  for (int t = 0; t < k; ++t) acc *= a;
  return acc;
}

// Smallest integer a with a^k >= t (t >= 1).
BigInt kth_root_ceil(const BigInt& t, int k, double hint) {
  BigInt a = static_cast<long long>(std::max(1.0, hint));
  while (pow_k(a, k) < t) ++a;
  while (a > 1 && pow_k(a - 1, k) >= t) --a;
  return a;
}

}  // namespace

BigInt cycle_count_upper_bound(long long n, int k) {
  if (n < 1 || n > 10'000'000) throw std::invalid_argument("order out of range");
  if (k < 1 || k > 64) throw std::invalid_argument("k out of range");
  // Each term i^(1/k) is rounded up to the next multiple of 2^-32; the
  // sum of upper bounds is then rounded up to an integer.
  constexpr int kPrecision = 32;
  const BigInt one = BigInt(1) << kPrecision;
  BigInt scaled_sum = 0;
  for (long long i = 1; i <= n; ++i) {
    BigInt target = BigInt(i) << (kPrecision * k);
    double hint = std::pow(static_cast<double>(i), 1.0 / k) * std::ldexp(1.0, kPrecision);
    scaled_sum += kth_root_ceil(target, k, hint);
  }
  return (scaled_sum + one - 1) >> kPrecision;
}

bool min_out_degree_bound_check(const Digraph& g, int k) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (g.n() == 0) return true;
  long long dmin = g.n();
  for (int v = 0; v < g.n(); ++v) dmin = std::min<long long>(dmin, g.out_degree(v));
  long long acc = 1;
  for (int t = 0; t < k; ++t) {
    acc *= dmin;
    if (acc > g.n()) return false;
    if (acc == 0) break;
  }
  return acc <= g.n();
}

}  // namespace geodex
