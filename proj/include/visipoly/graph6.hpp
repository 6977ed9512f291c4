#pragma once

#include <string>
#include <string_view>

#include "visipoly/graph.hpp"

namespace visipoly {

/// Decodes one graph6 record (an optional ">>graph6<<" prefix is stripped).
/// Supports the single-byte size header, i.e. orders 1..62; larger orders
/// and the null graph are rejected. Strict: payload length must be exact
/// and padding bits must be zero, so encode(parse(s)) == s for every
/// accepted header-free record.
Graph parse_graph6(std::string_view text);

/// Canonical graph6 string (no header, no newline) for a graph of order
/// <= 62. parse_graph6(encode_graph6(g)) reproduces g exactly.
std::string encode_graph6(const Graph& g);

}  // namespace visipoly
