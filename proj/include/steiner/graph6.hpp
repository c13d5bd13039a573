#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "steiner/graph.hpp"

namespace steiner {

// Parse failure for a graph6 line; byte_offset points at the offending byte.
class graph6_error : public std::runtime_error {
 public:
  graph6_error(const std::string& what, std::size_t byte_offset)
      : std::runtime_error(what + " (byte " + std::to_string(byte_offset) + ")"),
        byte_offset_(byte_offset) {}
  std::size_t byte_offset() const { return byte_offset_; }

 private:
  std::size_t byte_offset_;
};

// One graph6 line (no trailing newline).  Strict: every byte must be
// printable graph6 data, the length must match the order header exactly,
// and padding bits must be zero.
Graph decode_graph6(std::string_view line);

// Canonical graph6 line for g: minimal order header, zero padding.
std::string encode_graph6(const Graph& g);

// Plain text exchange format:
//   n m
//   u v        (one line per edge)
Graph parse_edge_list(std::string_view text);
std::string format_edge_list(const Graph& g);

}  // namespace steiner
