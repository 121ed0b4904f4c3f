#include "remh/io.hpp"

#include <cctype>
#include <cstdio>

#include "remh/errors.hpp"

namespace remh {

namespace {

constexpr std::size_t kMaxVertices = 1 << 20;  // sanity cap for parsed inputs
constexpr const char* kHeader = ">>graph6<<";

std::size_t triangle_bits(long long n) {
  return static_cast<std::size_t>(n * (n - 1) / 2);
}

}  // namespace

Graph parse_graph6(const std::string& text) {
  // Trim trailing whitespace; record where the payload starts.
  std::size_t end = text.size();
  while (end > 0 && std::isspace(static_cast<unsigned char>(text[end - 1])))
    --end;
  std::size_t pos = 0;
  if (text.compare(0, std::char_traits<char>::length(kHeader), kHeader) == 0)
    pos = std::char_traits<char>::length(kHeader);
  if (pos >= end) throw ParseError("empty graph6 input", pos);

  auto byte_at = [&](std::size_t i) -> int {
    if (i >= end) throw ParseError("truncated graph6 input", i);
    unsigned char c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126)
      throw ParseError("byte outside graph6 alphabet", i);
    return c - 63;
  };

  long long n;
  if (text[pos] == '~') {
    if (pos + 1 < end && text[pos + 1] == '~')
      throw ParseError("graph6 inputs beyond 258047 vertices are not supported",
                       pos + 1);
    n = (static_cast<long long>(byte_at(pos + 1)) << 12) |
        (static_cast<long long>(byte_at(pos + 2)) << 6) |
        static_cast<long long>(byte_at(pos + 3));
    pos += 4;
  } else {
    n = byte_at(pos);
    pos += 1;
  }
  if (n > static_cast<long long>(kMaxVertices))
    throw ParseError("vertex count exceeds supported maximum", pos);

  const std::size_t nbits = triangle_bits(n);
  const std::size_t nbytes = (nbits + 5) / 6;
  if (end - pos < nbytes) throw ParseError("truncated graph6 input", end);
  if (end - pos > nbytes)
    throw ParseError("trailing bytes after graph6 payload", pos + nbytes);

  Graph g(static_cast<int>(n));
  std::size_t bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      int group = byte_at(pos + bit / 6);
      if ((group >> (5 - bit % 6)) & 1) g.add_edge(i, j);
    }
  }
  // Padding bits of the final byte must be zero.
  for (std::size_t b = nbits; b < nbytes * 6; ++b) {
    int group = byte_at(pos + b / 6);
    if ((group >> (5 - b % 6)) & 1)
      throw ParseError("non-zero graph6 padding bits", pos + b / 6);
  }
  return g;
}

std::string to_graph6(const Graph& g) {
  const long long n = g.vertex_count();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  } else {
    throw PreconditionError("graph too large for supported graph6 forms");
  }
  int group = 0, filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      group = (group << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(group + 63));
        group = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0)
    out.push_back(static_cast<char>((group << (6 - filled)) + 63));
  return out;
}

namespace {

// Parses a non-negative decimal integer at text[pos...], advancing pos.
long long parse_number(const std::string& text, std::size_t& pos) {
  std::size_t start = pos;
  long long value = 0;
  while (pos < text.size() &&
         std::isdigit(static_cast<unsigned char>(text[pos]))) {
    value = value * 10 + (text[pos] - '0');
    if (value > static_cast<long long>(kMaxVertices) * 2)
      throw ParseError("number out of range", start);
    ++pos;
  }
  if (pos == start) throw ParseError("expected a number", pos);
  return value;
}

void skip_spaces(const std::string& text, std::size_t& pos) {
  while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' ||
                               text[pos] == '\r'))
    ++pos;
}

}  // namespace

Graph parse_edge_list(const std::string& text) {
  std::size_t pos = 0;
  auto next_line = [&]() -> bool {  // move to the next non-blank content
    while (pos < text.size()) {
      skip_spaces(text, pos);
      if (pos < text.size() && text[pos] == '\n') {
        ++pos;
        continue;
      }
      return pos < text.size();
    }
    return false;
  };

  if (!next_line()) throw ParseError("empty edge-list input", pos);
  long long n = parse_number(text, pos);
  skip_spaces(text, pos);
  if (pos < text.size() && text[pos] != '\n')
    throw ParseError("unexpected token after vertex count", pos);

  Graph g(static_cast<int>(n));
  while (next_line()) {
    std::size_t line_start = pos;
    long long u = parse_number(text, pos);
    skip_spaces(text, pos);
    long long v = parse_number(text, pos);
    skip_spaces(text, pos);
    if (pos < text.size() && text[pos] != '\n')
      throw ParseError("unexpected token after edge", pos);
    if (u >= n || v >= n)
      throw ParseError("edge endpoint out of range", line_start);
    if (u == v) throw ParseError("self-loop", line_start);
    if (g.has_edge(static_cast<int>(u), static_cast<int>(v)))
      throw ParseError("duplicate edge", line_start);
    g.add_edge(static_cast<int>(u), static_cast<int>(v));
  }
  return g;
}

std::string to_edge_list(const Graph& g) {
  std::string out = std::to_string(g.vertex_count());
  out.push_back('\n');
  for (auto [u, v] : g.edges()) {
    out += std::to_string(u);
    out.push_back(' ');
    out += std::to_string(v);
    out.push_back('\n');
  }
  return out;
}

Graph parse_graph(const std::string& text, GraphFormat format) {
  if (format == GraphFormat::graph6) return parse_graph6(text);
  if (format == GraphFormat::edge_list) return parse_edge_list(text);
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (std::isdigit(static_cast<unsigned char>(c)))
      return parse_edge_list(text);
    return parse_graph6(text);
  }
  throw ParseError("empty graph input", 0);
}

std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ull;  // FNV-1a 64-bit offset basis
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string fingerprint(const Graph& g) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "fnv1a64:%016llx",
                static_cast<unsigned long long>(fnv1a64(to_graph6(g))));
  return buf;
}

}  // namespace remh
