#include "visipoly/graph6.hpp"

#include "visipoly/errors.hpp"

namespace visipoly {

// graph6 packs the upper-triangle adjacency bits in column order
// (0,1),(0,2),(1,2),(0,3),... into 6-bit chunks, each stored as chunk+63.
// The leading byte is 63+n for n <= 62.

namespace {
constexpr int kBias = 63;
constexpr int kMaxByte = 126;
constexpr std::string_view kHeader = ">>graph6<<";
}  // namespace

Graph parse_graph6(std::string_view text) {
  if (text.substr(0, kHeader.size()) == kHeader) text.remove_prefix(kHeader.size());
  if (text.empty()) throw Graph6Error("empty graph6 record");

  const unsigned char size_byte = static_cast<unsigned char>(text[0]);
  if (size_byte == kMaxByte)
    throw Graph6Error("multi-byte graph6 size header (order > 62) is not supported");
  if (size_byte < kBias || size_byte > kMaxByte)
    throw Graph6Error("invalid graph6 size byte " + std::to_string(size_byte));
  const int n = size_byte - kBias;
  if (n == 0) throw Graph6Error("graph6 record of order 0 (graphs must have >= 1 vertex)");

  const long bits_needed = static_cast<long>(n) * (n - 1) / 2;
  const std::size_t payload_len = static_cast<std::size_t>((bits_needed + 5) / 6);
  if (text.size() - 1 < payload_len)
    throw Graph6Error("graph6 record truncated: order " + std::to_string(n) + " needs " +
                      std::to_string(payload_len) + " payload bytes, got " +
                      std::to_string(text.size() - 1));
  if (text.size() - 1 > payload_len)
    throw Graph6Error("trailing garbage after graph6 record of order " + std::to_string(n));

  Graph g(n);
  long bit = 0;
  int row = 0, col = 1;
  for (std::size_t k = 0; k < payload_len; ++k) {
    const unsigned char b = static_cast<unsigned char>(text[1 + k]);
    if (b < kBias || b > kMaxByte)
      throw Graph6Error("graph6 byte out of range at position " + std::to_string(1 + k));
    const int chunk = b - kBias;
    for (int shift = 5; shift >= 0; --shift, ++bit) {
      const int value = (chunk >> shift) & 1;
      if (bit < bits_needed) {
        if (value) g.add_edge(row, col);
        if (++row == col) {
          row = 0;
          ++col;
        }
      } else if (value) {
        throw Graph6Error("nonzero padding bits in graph6 record");
      }
    }
  }
  return g;
}

std::string encode_graph6(const Graph& g) {
  const int n = g.order();
  if (n > 62)
    throw Graph6Error("order " + std::to_string(n) + " exceeds single-byte graph6 limit of 62");
  std::string out;
  out.push_back(static_cast<char>(kBias + n));

  int chunk = 0, filled = 0;
  for (int col = 1; col < n; ++col) {
    for (int row = 0; row < col; ++row) {
      chunk = (chunk << 1) | (g.has_edge(row, col) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(kBias + chunk));
        chunk = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(kBias + (chunk << (6 - filled))));
  return out;
}

}  // namespace visipoly
