#include "geodex/constructions.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>

namespace geodex {

namespace {

std::string subscript(const char* base, int i) { return std::string(base) + "_" + std::to_string(i); }

long long checked_order(long long n) {
  constexpr long long kMaxOrder = 2'000'000;
  if (n > kMaxOrder) throw std::invalid_argument("construction order too large");
  return n;
}

}  // namespace

LabeledDigraph permutation_digraph(int d, int k) {
  if (d < 2 || k < 2) throw std::invalid_argument("permutation digraph requires d >= 2 and k >= 2");
  const int symbols = d + k;
  long long order = 1;
  for (int t = 0; t < k; ++t) order = checked_order(order * (symbols - t));

  // Enumerate the k-permutations of {0..symbols-1} in lexicographic order.
  std::vector<std::vector<int>> words;
  words.reserve(static_cast<std::size_t>(order));
  std::vector<int> word;
  std::vector<char> used(static_cast<std::size_t>(symbols), 0);
  auto emit = [&](auto&& self) -> void {
    if (static_cast<int>(word.size()) == k) {
      words.push_back(word);
      return;
    }
    for (int s = 0; s < symbols; ++s) {
      if (used[static_cast<std::size_t>(s)]) continue;
      used[static_cast<std::size_t>(s)] = 1;
      word.push_back(s);
      self(self);
      word.pop_back();
      used[static_cast<std::size_t>(s)] = 0;
    }
  };
  emit(emit);

  auto encode = [k](const std::vector<int>& w) {
    std::uint64_t key = 0;
    for (int i = 0; i < k; ++i) key = (key << 6) | static_cast<std::uint64_t>(w[static_cast<std::size_t>(i)]);
    return key;
  };
  std::unordered_map<std::uint64_t, int> index;
  index.reserve(words.size() * 2);
  for (std::size_t i = 0; i < words.size(); ++i) index[encode(words[i])] = static_cast<int>(i);

  LabeledDigraph out;
  out.digraph = Digraph(static_cast<int>(words.size()));
  out.labels.reserve(words.size());
  for (const auto& w : words) {
    std::string label;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (symbols > 10 && i) label += '.';
      label += std::to_string(w[i]);
    }
    out.labels.push_back(std::move(label));
  }
  for (std::size_t i = 0; i < words.size(); ++i) {
    const auto& w = words[i];
    std::vector<int> shifted(w.begin() + 1, w.end());
    shifted.push_back(0);
    for (int s = 0; s < symbols; ++s) {
      if (std::find(w.begin(), w.end(), s) != w.end()) continue;
      shifted.back() = s;
      out.digraph.add_arc(static_cast<int>(i), index.at(encode(shifted)));
    }
  }
  return out;
}

LabeledDigraph oriented_bipartite(int a, int b, int t) {
  if (a < 1 || b < 1) throw std::invalid_argument("both sides must be nonempty");
  if (t < 0 || t > std::min(a, b)) throw std::invalid_argument("matching size must satisfy 0 <= t <= min(a,b)");
  LabeledDigraph out;
  out.digraph = Digraph(a + b);
  for (int i = 0; i < a; ++i) out.labels.push_back(subscript("x", i + 1));
  for (int j = 0; j < b; ++j) out.labels.push_back(subscript("y", j + 1));
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) {
      if (i == j && i < t)
        out.digraph.add_arc(i, a + j);  // matched pair x_i -> y_i
      else
        out.digraph.add_arc(a + j, i);
    }
  return out;
}

LabeledDigraph triangle_expansion(int r) {
  if (r < 2) throw std::invalid_argument("triangle expansion requires r >= 2");
  LabeledDigraph base = oriented_bipartite(r, r, r);
  LabeledDigraph out;
  out.digraph = Digraph(2 * r + 1);
  out.labels = std::move(base.labels);
  out.labels.push_back("z");
  for (int u = 0; u < base.digraph.n(); ++u)
    for (int v : base.digraph.out_neighbors(u)) out.digraph.add_arc(u, v);
  const int x1 = 0, y1 = r, z = 2 * r;
  out.digraph.add_arc(y1, z);  // x_1 -> y_1 -> z -> x_1 is the new triangle
  out.digraph.add_arc(z, x1);
  return out;
}

namespace {

// Shared skeleton of the odd-order extremal families: vertices
// x, y, z, x_1..x_{r-1}, y_1..y_{r-1}; K_{r-1,r-1} between the x_i and y_i
// oriented y_j -> x_i except for `matched` pairs carrying x_i -> y_i; plus
// the directed triangle x -> y -> z -> x.
struct FamilyBuilder {
  int r;
  LabeledDigraph out;
  int x = 0, y = 1, z = 2;

  explicit FamilyBuilder(int r_) : r(r_) {
    if (r < 3) throw std::invalid_argument("family construction requires r >= 3");
    out.digraph = Digraph(2 * r + 1);
    out.labels = {"x", "y", "z"};
    for (int i = 1; i < r; ++i) out.labels.push_back(subscript("x", i));
    for (int i = 1; i < r; ++i) out.labels.push_back(subscript("y", i));
    out.digraph.add_arc(x, y);
    out.digraph.add_arc(y, z);
    out.digraph.add_arc(z, x);
  }

  int xi(int i) const { return 2 + i; }          // 1 <= i <= r-1
  int yi(int i) const { return r + 1 + i; }      // 1 <= i <= r-1

  // Bipartite part with x_i -> y_i for i <= matched, all else y_j -> x_i.
  void bipartite(int matched) {
    for (int i = 1; i < r; ++i)
      for (int j = 1; j < r; ++j) {
        if (i == j && i <= matched)
          out.digraph.add_arc(xi(i), yi(i));
        else
          out.digraph.add_arc(yi(j), xi(i));
      }
  }
};

}  // namespace

LabeledDigraph family_a(int r) {
  FamilyBuilder b(r);
  b.bipartite(r - 2);
  auto& g = b.out.digraph;
  g.add_arc(b.xi(r - 1), b.x);
  for (int i = 1; i <= r - 2; ++i) g.add_arc(b.x, b.xi(i));
  g.add_arc(b.y, b.yi(r - 1));
  for (int i = 1; i <= r - 2; ++i) g.add_arc(b.yi(i), b.y);
  return std::move(b.out);
}

LabeledDigraph family_b(int r, int t) {
  if (t < 0 || t > r - 1) throw std::invalid_argument("family B requires 0 <= t <= r-1");
  FamilyBuilder b(r);
  b.bipartite(r - 1);
  auto& g = b.out.digraph;
  for (int i = 1; i <= r - 1; ++i) g.add_arc(b.x, b.xi(i));
  for (int i = 1; i <= t; ++i) g.add_arc(b.yi(i), b.y);
  for (int i = t + 1; i <= r - 1; ++i) g.add_arc(b.yi(i), b.z);
  return std::move(b.out);
}

LabeledDigraph family_b_prime(int r, int t) {
  LabeledDigraph base = family_b(r, t);
  return {base.digraph.converse(), std::move(base.labels)};
}

LabeledDigraph family_c(int r) {
  FamilyBuilder b(r);
  b.bipartite(r - 2);
  auto& g = b.out.digraph;
  g.add_arc(b.xi(r - 1), b.z);
  g.add_arc(b.z, b.yi(r - 1));
  for (int i = 1; i <= r - 2; ++i) g.add_arc(b.y, b.xi(i));
  for (int i = 1; i <= r - 2; ++i) g.add_arc(b.yi(i), b.x);
  return std::move(b.out);
}

LabeledDigraph family_d(int r) {
  FamilyBuilder b(r);
  b.bipartite(r - 1);
  auto& g = b.out.digraph;
  g.add_arc(b.z, b.xi(1));
  g.add_arc(b.yi(1), b.z);
  for (int i = 2; i <= r - 1; ++i) g.add_arc(b.y, b.xi(i));
  for (int i = 2; i <= r - 1; ++i) g.add_arc(b.yi(i), b.x);
  return std::move(b.out);
}

LabeledDigraph g_construction(int n, int k, bool variant_rule3_to_first_column) {
  if (k < 2) throw std::invalid_argument("G(n,k) requires k >= 2");
  if (n < k + 1) throw std::invalid_argument("G(n,k) requires n >= k+1");
  const int r = n / k;
  const int s = n - k * r;
  if (s > r) throw std::invalid_argument("G(n,k) requires n = k*r + s with s <= r");

  LabeledDigraph out;
  out.digraph = Digraph(n);
  auto u = [k](int i, int j) { return (i - 1) * k + (j - 1); };  // 1-based path i, column j
  const int vbase = r * k;
  for (int i = 1; i <= r; ++i)
    for (int j = 1; j <= k; ++j) out.labels.push_back("u_{" + std::to_string(i) + "," + std::to_string(j) + "}");
  for (int t = 1; t <= s; ++t) out.labels.push_back(subscript("v", t));
  auto& g = out.digraph;

  if (s == 0) {
    for (int i = 1; i <= r; ++i)
      for (int j = 2; j <= k - 1; ++j) g.add_arc(u(i, j), u(i, j + 1));
    for (int i = 1; i <= r; ++i)
      for (int i2 = 1; i2 <= r; ++i2)
        if (i != i2) g.add_arc(u(i, 1), u(i2, 2));
    for (int i = 1; i <= r; ++i) g.add_arc(u(i, k), u(i, 1));
    return out;
  }

  for (int i = 1; i <= r; ++i)
    for (int j = 1; j <= k - 1; ++j) g.add_arc(u(i, j), u(i, j + 1));
  for (int i = 1; i <= s; ++i) g.add_arc(u(i, k), vbase + (i - 1));
  for (int i = s + 1; i <= r; ++i)
    for (int j = 1; j <= s; ++j) g.add_arc(u(i, k), u(j, variant_rule3_to_first_column ? 1 : 2));
  for (int i = s + 1; i <= r; ++i)
    for (int i2 = s + 1; i2 <= r; ++i2)
      if (i != i2) g.add_arc(u(i, k), u(i2, 1));
  for (int t = 1; t <= s; ++t)
    for (int i = 1; i <= r; ++i) g.add_arc(vbase + (t - 1), u(i, 1));
  return out;
}

LabeledDigraph fixture(FixtureName name) {
  LabeledDigraph out;
  switch (name) {
    case FixtureName::Hoof: {
      out.digraph = Digraph(4);
      out.labels = {"u", "w", "x", "v"};
      out.digraph.add_arc(0, 1);
      out.digraph.add_arc(0, 2);
      out.digraph.add_arc(1, 3);
      out.digraph.add_arc(2, 3);
      return out;
    }
    case FixtureName::C3: {
      out.digraph = Digraph(3);
      out.labels = {"u", "w", "v"};
      out.digraph.add_arc(0, 1);
      out.digraph.add_arc(1, 2);
      out.digraph.add_arc(2, 0);
      return out;
    }
    case FixtureName::Diamond: {
      out.digraph = Digraph(4);
      out.labels = {"x", "y", "z", "z'"};
      out.digraph.add_arc(0, 1);
      out.digraph.add_arc(1, 2);
      out.digraph.add_arc(2, 0);
      out.digraph.add_arc(1, 3);
      out.digraph.add_arc(3, 0);
      return out;
    }
    case FixtureName::TwoTrianglesMatched6: {
      out.digraph = Digraph(6);
      out.labels = {"u_0", "u_1", "u_2", "v_0", "v_1", "v_2"};
      out.digraph.add_arc(0, 1);
      out.digraph.add_arc(1, 2);
      out.digraph.add_arc(2, 0);
      out.digraph.add_arc(4, 3);
      out.digraph.add_arc(5, 4);
      out.digraph.add_arc(3, 5);
      out.digraph.add_arc(0, 3);
      out.digraph.add_arc(1, 4);
      out.digraph.add_arc(2, 5);
      return out;
    }
  }
  throw std::invalid_argument("unknown fixture");
}

unsigned long long moore_bound(int d, int k) {
  if (d < 1 || k < 0) throw std::invalid_argument("moore bound requires d >= 1 and k >= 0");
  unsigned long long total = 0;
  unsigned long long power = 1;
  for (int t = 0; t <= k; ++t) {
    if (total > ~power) throw std::overflow_error("moore bound exceeds 64 bits");
    total += power;
    if (t < k) {
      if (power > ~0ULL / static_cast<unsigned long long>(d)) throw std::overflow_error("moore bound exceeds 64 bits");
      power *= static_cast<unsigned long long>(d);
    }
  }
  return total;
}

namespace {

long long take_param(const ConstructionSpec& spec, const char* name) {
  auto it = spec.params.find(name);
  if (it == spec.params.end()) throw std::invalid_argument(std::string("missing parameter: ") + name);
  return it->second;
}

int take_int(const ConstructionSpec& spec, const char* name) {
  long long v = take_param(spec, name);
  if (v < -1'000'000'000 || v > 1'000'000'000) throw std::invalid_argument(std::string("parameter out of range: ") + name);
  return static_cast<int>(v);
}

}  // namespace

LabeledDigraph build_construction(const ConstructionSpec& spec) {
  switch (spec.family) {
    case Family::PermutationDigraph:
      return permutation_digraph(take_int(spec, "d"), take_int(spec, "k"));
    case Family::OrientedBipartite:
      return oriented_bipartite(take_int(spec, "a"), take_int(spec, "b"), take_int(spec, "t"));
    case Family::TriangleExpansion:
      return triangle_expansion(take_int(spec, "r"));
    case Family::FamilyA:
      return family_a(take_int(spec, "r"));
    case Family::FamilyB:
      return family_b(take_int(spec, "r"), take_int(spec, "t"));
    case Family::FamilyBPrime:
      return family_b_prime(take_int(spec, "r"), take_int(spec, "t"));
    case Family::FamilyC:
      return family_c(take_int(spec, "r"));
    case Family::FamilyD:
      return family_d(take_int(spec, "r"));
    case Family::GConstruction:
      return g_construction(take_int(spec, "n"), take_int(spec, "k"), spec.variant);
    case Family::FixtureDigraph: {
      auto it = spec.params.find("fixture");
      if (it == spec.params.end()) throw std::invalid_argument("missing parameter: fixture");
      return fixture(static_cast<FixtureName>(it->second));
    }
  }
  throw std::invalid_argument("unknown construction family");
}

Family family_from_name(const std::string& name) {
  if (name == "permutation") return Family::PermutationDigraph;
  if (name == "bipartite") return Family::OrientedBipartite;
  if (name == "triangle-expansion") return Family::TriangleExpansion;
  if (name == "family-a") return Family::FamilyA;
  if (name == "family-b") return Family::FamilyB;
  if (name == "family-b-prime") return Family::FamilyBPrime;
  if (name == "family-c") return Family::FamilyC;
  if (name == "family-d") return Family::FamilyD;
  if (name == "g") return Family::GConstruction;
  if (name == "fixture") return Family::FixtureDigraph;
  throw std::invalid_argument("unknown construction family: " + name);
}

FixtureName fixture_from_name(const std::string& name) {
  if (name == "hoof") return FixtureName::Hoof;
  if (name == "c3") return FixtureName::C3;
  if (name == "diamond") return FixtureName::Diamond;
  if (name == "two-triangles-6") return FixtureName::TwoTrianglesMatched6;
  throw std::invalid_argument("unknown fixture: " + name);
}

}  // namespace geodex
