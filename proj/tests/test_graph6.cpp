#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "visipoly/errors.hpp"
#include "visipoly/graph6.hpp"

using namespace visipoly;

TEST_SUITE("graph6") {

TEST_CASE("reference decodings") {
  const Graph k2 = parse_graph6("A_");
  CHECK(k2.order() == 2);
  CHECK(k2.has_edge(0, 1));

  const Graph k3 = parse_graph6("Bw");
  CHECK(k3.order() == 3);
  CHECK(k3.is_complete());

  // parse succeeds on disconnected graphs; connectivity is not its concern
  const Graph e5 = parse_graph6("D??");
  CHECK(e5.order() == 5);
  CHECK(e5.edge_count() == 0);

  CHECK(parse_graph6("@").order() == 1);

  const Graph pet = parse_graph6("IheA@GUAo");  // Petersen
  CHECK(pet.order() == 10);
  CHECK(pet.edge_count() == 15);
  for (int v = 0; v < 10; ++v) CHECK(pet.degree(v) == 3);
}

TEST_CASE("reference encodings") {
  CHECK(encode_graph6(standard_graph(GraphKind::complete, 2)) == "A_");
  CHECK(encode_graph6(standard_graph(GraphKind::complete, 3)) == "Bw");
  CHECK(encode_graph6(standard_graph(GraphKind::path, 3)) == "Bg");
  CHECK(encode_graph6(standard_graph(GraphKind::path, 4)) == "Ch");
  CHECK(encode_graph6(standard_graph(GraphKind::cycle, 5)) == "Dhc");
  CHECK(encode_graph6(standard_graph(GraphKind::cycle, 6)) == "EhEG");
  CHECK(encode_graph6(standard_graph(GraphKind::cycle, 8)) == "GhCGKC");
  CHECK(encode_graph6(standard_graph(GraphKind::complete, 7)) == "F~~~w");
  CHECK(encode_graph6(Graph(5)) == "D??");
  CHECK(encode_graph6(fixtures::pendant_c5()) == "Ehe?");
}

TEST_CASE("header prefix is stripped") {
  const Graph g = parse_graph6(">>graph6<<A_");
  CHECK(g.order() == 2);
  CHECK(g.has_edge(0, 1));
}

TEST_CASE("parse then encode is the identity on every labeled graph of order <= 4") {
  for (int n = 1; n <= 4; ++n) {
    std::vector<std::pair<int, int>> pairs;
    for (int j = 1; j < n; ++j)
      for (int i = 0; i < j; ++i) pairs.emplace_back(i, j);
    for (unsigned mask = 0; mask < (1u << pairs.size()); ++mask) {
      Graph g(n);
      for (std::size_t k = 0; k < pairs.size(); ++k)
        if ((mask >> k) & 1) g.add_edge(pairs[k].first, pairs[k].second);
      const std::string text = encode_graph6(g);
      const Graph back = parse_graph6(text);
      CHECK(back.order() == g.order());
      CHECK(back.edges() == g.edges());
    }
  }
}

TEST_CASE("round trip on random graphs up to order 10") {
  std::mt19937 rng(23);
  for (int rep = 0; rep < 200; ++rep) {
    const int n = 1 + static_cast<int>(rng() % 10);
    Graph g(n);
    for (int j = 1; j < n; ++j)
      for (int i = 0; i < j; ++i)
        if (rng() % 2) g.add_edge(i, j);
    const Graph back = parse_graph6(encode_graph6(g));
    CHECK(back.edges() == g.edges());
  }
}

TEST_CASE("encode then parse is the identity on the committed corpora") {
  for (int order = 1; order <= 6; ++order) {
    for (const std::string& line : fixtures::corpus_lines(order)) {
      const Graph g = parse_graph6(line);
      CHECK(g.order() == order);
      CHECK(encode_graph6(g) == line);
    }
  }
  CHECK(fixtures::corpus_lines(5).size() == 21);
  CHECK(fixtures::corpus_lines(6).size() == 112);
}

TEST_CASE("random byte strings never crash the parser") {
  std::mt19937 rng(41);
  for (int rep = 0; rep < 2000; ++rep) {
    std::string text(rng() % 12, '\0');
    for (char& ch : text) ch = static_cast<char>(rng() % 256);
    try {
      const Graph g = parse_graph6(text);
      CHECK(encode_graph6(g) == text);  // anything accepted must round-trip
    } catch (const Graph6Error&) {
    }
  }
}

TEST_CASE("malformed records are rejected") {
  CHECK_THROWS_AS(parse_graph6(""), Graph6Error);
  CHECK_THROWS_AS(parse_graph6("?"), Graph6Error);            // order 0
  CHECK_THROWS_AS(parse_graph6("~??"), Graph6Error);          // multi-byte size
  CHECK_THROWS_AS(parse_graph6("B"), Graph6Error);            // truncated payload
  CHECK_THROWS_AS(parse_graph6("A_X"), Graph6Error);          // trailing garbage
  CHECK_THROWS_AS(parse_graph6(std::string("A") + char(32)), Graph6Error);  // byte < 63
  CHECK_THROWS_AS(parse_graph6("A`"), Graph6Error);           // nonzero padding bits
  CHECK_THROWS_AS(parse_graph6(std::string(1, char(62))), Graph6Error);     // bad size byte
  CHECK_THROWS_AS(encode_graph6(Graph(63)), Graph6Error);     // too large to encode
}

}  // TEST_SUITE
