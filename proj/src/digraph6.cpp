#include "geodex/digraph6.hpp"

#include <cstdint>

namespace geodex {

namespace {

constexpr char kHeader[] = ">>digraph6<<";
constexpr int kOffset = 63;
constexpr long long kMaxSmallN = 62;
constexpr long long kMaxMediumN = 258047;          // 2^18 - 1
constexpr long long kMaxLargeN = 68719476735LL;    // 2^36 - 1

int need_byte(std::string_view line, std::size_t pos, const char* what) {
  if (pos >= line.size()) throw Digraph6ParseError(std::string("truncated input, expected ") + what, line.size());
  unsigned char c = static_cast<unsigned char>(line[pos]);
  if (c < 63 || c > 126) throw Digraph6ParseError("byte outside digraph6 range [63,126]", pos);
  return static_cast<int>(c);
}

}  // namespace

Digraph parse_digraph6(std::string_view line) {
  std::size_t pos = 0;
  if (line.substr(0, sizeof(kHeader) - 1) == kHeader) pos = sizeof(kHeader) - 1;
  if (pos >= line.size() || line[pos] != '&') throw Digraph6ParseError("expected '&' type byte", pos);
  ++pos;

  long long n;
  int b0 = need_byte(line, pos, "size");
  if (b0 < 126) {
    n = b0 - kOffset;
    ++pos;
  } else {
    int b1 = need_byte(line, pos + 1, "size");
    if (b1 < 126) {
      n = 0;
      for (int i = 1; i <= 3; ++i) n = (n << 6) | (need_byte(line, pos + i, "size") - kOffset);
      pos += 4;
    } else {
      n = 0;
      for (int i = 2; i <= 7; ++i) n = (n << 6) | (need_byte(line, pos + i, "size") - kOffset);
      pos += 8;
    }
  }
  // Anything above this would need a multi-gigabyte line; reject before
  // n*n can overflow or the adjacency allocation can be attempted.
  constexpr long long kMaxPracticalN = 16'000'000;
  if (n > kMaxLargeN || n > kMaxPracticalN) throw Digraph6ParseError("size field out of range", pos);

  const long long nbits = n * n;
  const std::size_t nbytes = static_cast<std::size_t>((nbits + 5) / 6);
  if (line.size() < pos + nbytes) throw Digraph6ParseError("truncated adjacency data", line.size());
  if (line.size() > pos + nbytes) throw Digraph6ParseError("trailing bytes after adjacency data", pos + nbytes);

  Digraph g(static_cast<int>(n));
  for (std::size_t i = 0; i < nbytes; ++i) {
    int bits = need_byte(line, pos + i, "adjacency data") - kOffset;
    for (int b = 0; b < 6; ++b) {
      if (((bits >> (5 - b)) & 1) == 0) continue;
      long long idx = static_cast<long long>(i) * 6 + b;
      if (idx >= nbits) throw Digraph6ParseError("nonzero padding bit", pos + i);
      int u = static_cast<int>(idx / n);
      int v = static_cast<int>(idx % n);
      if (u == v) throw Digraph6ParseError("diagonal (loop) bit set", pos + i);
      g.add_arc(u, v);
    }
  }
  return g;
}

std::string emit_digraph6(const Digraph& g) {
  const long long n = g.n();
  std::string out = "&";
  if (n <= kMaxSmallN) {
    out.push_back(static_cast<char>(n + kOffset));
  } else if (n <= kMaxMediumN) {
    out.push_back(static_cast<char>(126));
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kOffset));
  } else {
    out.push_back(static_cast<char>(126));
    out.push_back(static_cast<char>(126));
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kOffset));
  }
  const long long nbits = n * n;
  int acc = 0;
  int filled = 0;
  for (long long idx = 0; idx < nbits; ++idx) {
    int u = static_cast<int>(idx / n);
    int v = static_cast<int>(idx % n);
    acc = (acc << 1) | (g.has_arc(u, v) ? 1 : 0);
    if (++filled == 6) {
      out.push_back(static_cast<char>(acc + kOffset));
      acc = 0;
      filled = 0;
    }
  }
  if (filled) out.push_back(static_cast<char>((acc << (6 - filled)) + kOffset));
  return out;
}

}  // namespace geodex
