#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "geodex/digraph.hpp"

namespace geodex {

/// Parse failure for a digraph6 line; `byte_offset` is the 0-based offset
/// of the offending byte within the line.
class Digraph6ParseError : public std::runtime_error {
 public:
  Digraph6ParseError(const std::string& message, std::size_t byte_offset)
      : std::runtime_error(message + " (byte " + std::to_string(byte_offset) + ")"), byte_offset_(byte_offset) {}
  std::size_t byte_offset() const { return byte_offset_; }

 private:
  std::size_t byte_offset_;
};

/// Decodes one digraph6 line: optional ">>digraph6<<" header, '&', the
/// 6-bit size encoding of n, then the n^2 row-major adjacency bits packed
/// big-endian six per byte with offset 63. Rejects malformed input
/// (bad characters, wrong length, nonzero padding, diagonal bits) with a
/// byte offset.
Digraph parse_digraph6(std::string_view line);

/// Encodes in the same format, header omitted.
std::string emit_digraph6(const Digraph& g);

}  // namespace geodex
