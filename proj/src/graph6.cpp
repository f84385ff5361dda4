#include "twocycles/graph6.hpp"

namespace twocycles {

namespace {

constexpr int kBias = 63;

int sextet(std::string_view s, std::size_t pos) {
  const unsigned char c = static_cast<unsigned char>(s[pos]);
  if (c < 63 || c > 126) throw ParseError(pos, "illegal character");
  return c - kBias;
}

}  // namespace

Graph parse_graph6(std::string_view line) {
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
  if (line.starts_with(">>graph6<<")) line.remove_prefix(10);
  if (line.empty()) throw ParseError(0, "empty line");

  std::size_t pos = 0;
  long n = 0;
  if (line[0] == '~') {
    if (line.size() >= 2 && line[1] == '~') throw ParseError(1, "order exceeds 64");
    if (line.size() < 4) throw ParseError(line.size(), "truncated length header");
    for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | sextet(line, i);
    if (n < 63) throw ParseError(0, "non-canonical long length header");
    pos = 4;
  } else {
    n = sextet(line, 0);
    pos = 1;
  }
  if (n < 1 || n > kMaxOrder) throw ParseError(0, "order " + std::to_string(n) + " outside [1, 64]");

  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t body = (bits + 5) / 6;
  if (line.size() - pos < body) throw ParseError(line.size(), "truncated adjacency data");
  if (line.size() - pos > body) throw ParseError(pos + body, "trailing characters");

  Graph g(static_cast<int>(n));
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int chunk = sextet(line, pos + k / 6);
      if ((chunk >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  if (bits % 6 != 0) {
    const std::size_t last = pos + body - 1;
    const int pad = static_cast<int>(6 - bits % 6);
    if (sextet(line, last) & ((1 << pad) - 1)) throw ParseError(last, "nonzero padding bits");
  } else if (body > 0) {
    sextet(line, pos + body - 1);
  }
  return g;
}

std::string encode_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
  }
  int chunk = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      chunk = (chunk << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(chunk + kBias));
        chunk = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((chunk << (6 - filled)) + kBias));
  return out;
}

}  // namespace twocycles
