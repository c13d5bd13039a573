#include "steiner/graph6.hpp"

#include <sstream>

namespace steiner {

namespace {

constexpr int kBias = 63;    // printable offset: data bytes are 63..126
constexpr int kMaxByte = 126;

int data_at(std::string_view line, std::size_t pos) {
  unsigned char ch = static_cast<unsigned char>(line[pos]);
  if (ch < kBias || ch > kMaxByte)
    throw graph6_error("byte outside graph6 range 63..126", pos);
  return ch - kBias;
}

}  // namespace

Graph decode_graph6(std::string_view line) {
  if (line.empty()) throw graph6_error("empty graph6 line", 0);

  std::size_t pos = 0;
  long long n;
  int first = data_at(line, pos);
  if (first < 63) {
    n = first;
    pos = 1;
  } else {
    // '~' prefix: three 6-bit groups, big-endian.
    if (line.size() < 2) throw graph6_error("truncated order header", 1);
    if (static_cast<unsigned char>(line[1]) == '~')
      throw graph6_error("8-byte order encoding not supported", 1);
    if (line.size() < 4) throw graph6_error("truncated order header", line.size());
    n = 0;
    for (pos = 1; pos < 4; ++pos) n = (n << 6) | data_at(line, pos);
    if (n < 63) throw graph6_error("non-minimal order header", 0);
  }

  long long bit_count = n * (n - 1) / 2;
  std::size_t expected = pos + static_cast<std::size_t>((bit_count + 5) / 6);
  if (line.size() < expected)
    throw graph6_error("line shorter than order header implies", line.size());
  if (line.size() > expected)
    throw graph6_error("trailing bytes after graph data", expected);

  std::vector<std::pair<int, int>> edges;
  int buffer = 0, bits_left = 0;
  std::size_t byte_pos = pos;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (bits_left == 0) {
        buffer = data_at(line, byte_pos++);
        bits_left = 6;
      }
      if ((buffer >> (bits_left - 1)) & 1) edges.emplace_back(i, j);
      --bits_left;
    }
  }
  if (bits_left > 0 && (buffer & ((1 << bits_left) - 1)) != 0)
    throw graph6_error("nonzero padding bits", byte_pos - 1);

  return Graph(static_cast<int>(n), edges);
}

std::string encode_graph6(const Graph& g) {
  int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else if (n <= 258047) {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 63) + kBias));
    out.push_back(static_cast<char>(((n >> 6) & 63) + kBias));
    out.push_back(static_cast<char>((n & 63) + kBias));
  } else {
    throw std::invalid_argument("graph too large for supported graph6 encoding");
  }
  int buffer = 0, bits = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      buffer = (buffer << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(buffer + kBias));
        buffer = 0;
        bits = 0;
      }
    }
  }
  if (bits > 0) out.push_back(static_cast<char>((buffer << (6 - bits)) + kBias));
  return out;
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  long long n, m;
  if (!(in >> n >> m)) throw std::invalid_argument("edge list: expected 'n m' header");
  if (n < 0 || m < 0) throw std::invalid_argument("edge list: negative count");
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    int u, v;
    if (!(in >> u >> v))
      throw std::invalid_argument("edge list: expected " + std::to_string(m) +
                                  " edges, got " + std::to_string(i));
    edges.emplace_back(u, v);
  }
  std::string leftover;
  if (in >> leftover) throw std::invalid_argument("edge list: trailing tokens");
  return Graph(static_cast<int>(n), edges);
}

std::string format_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

}  // namespace steiner
