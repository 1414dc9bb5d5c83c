#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include "hyperchrome/hypergraph.hpp"

namespace hyperchrome::cli {

/// Malformed hypergraph file; `line` is 1-based, 0 when not tied to a line.
class FormatError : public std::runtime_error {
  public:
    FormatError(std::size_t line, const std::string& what);
    std::size_t line() const noexcept { return line_; }

  private:
    std::size_t line_;
};

/// Text format:
///
///   c optional comment lines
///   p h <k> <n> <m>
///   e <v1> ... <vk>        (m lines, vertices 1..n)
///
/// Blank lines and lines starting with 'c' are ignored anywhere.
Hypergraph parse_hypergraph(std::string_view text);

/// Normalized form: header, then edges in sorted order with sorted vertices.
std::string serialize_hypergraph(const Hypergraph& g);

/// 64-bit FNV-1a of raw bytes.
std::uint64_t fnv1a64(std::string_view bytes);

}  // namespace hyperchrome::cli
