#pragma once

#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "visipoly/graph.hpp"
#include "visipoly/graph6.hpp"

// Shared test graphs and the committed graph6 corpora.
namespace fixtures {

// C5 on 0..4 plus a pendant vertex 5 attached at 0. Known to have
// intersecting maximal families for Q={3,5}.
inline visipoly::Graph pendant_c5() {
  visipoly::Graph g(6);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(2, 3);
  g.add_edge(3, 4);
  g.add_edge(4, 0);
  g.add_edge(0, 5);
  return g;
}

// Five-vertex near-cycle with two chords at vertex 2; absolute-clear.
inline visipoly::Graph clear_base() {
  visipoly::Graph g(5);
  g.add_edge(1, 2);
  g.add_edge(2, 3);
  g.add_edge(3, 4);
  g.add_edge(4, 0);
  g.add_edge(0, 2);
  g.add_edge(2, 4);
  return g;
}

// clear_base plus the edge 0-3: stays absolute-clear.
inline visipoly::Graph clear_base_plus_03() {
  visipoly::Graph g = clear_base();
  g.add_edge(0, 3);
  return g;
}

// clear_base plus the edge 0-1: no longer absolute-clear.
inline visipoly::Graph clear_base_plus_01() {
  visipoly::Graph g = clear_base();
  g.add_edge(0, 1);
  return g;
}

inline std::string data_path(const std::string& name) {
  return std::string(VISIPOLY_TEST_DATA_DIR) + "/" + name;
}

inline std::vector<std::string> corpus_lines(int order) {
  std::ifstream in(data_path("connected_" + std::to_string(order) + ".g6"));
  if (!in) throw std::runtime_error("missing corpus for order " + std::to_string(order));
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) lines.push_back(line);
  }
  return lines;
}

inline std::vector<visipoly::Graph> connected_corpus(int order) {
  std::vector<visipoly::Graph> out;
  for (const std::string& line : corpus_lines(order)) out.push_back(visipoly::parse_graph6(line));
  return out;
}

inline std::vector<visipoly::Graph> connected_corpus_upto(int max_order) {
  std::vector<visipoly::Graph> out;
  for (int n = 1; n <= max_order; ++n)
    for (visipoly::Graph& g : connected_corpus(n)) out.push_back(std::move(g));
  return out;
}

}  // namespace fixtures
