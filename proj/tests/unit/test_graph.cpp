#include <random>
#include <sstream>

#include "doctest.h"
#include "oracles.hpp"
#include "sqenergy/errors.hpp"
#include "sqenergy/families.hpp"
#include "sqenergy/graph.hpp"
#include "sqenergy/graph6.hpp"
#include "sqenergy/operations.hpp"
#include "sqenergy/structure.hpp"

using namespace sqe;

TEST_CASE("graph construction rejects loops and repeated edges") {
  CHECK_THROWS_AS(Graph::from_edges(3, {{0, 0}}), DomainError);
  CHECK_THROWS_AS(Graph::from_edges(3, {{0, 1}, {1, 0}}), DomainError);
  CHECK_THROWS_AS(Graph::from_edges(3, {{0, 3}}), DomainError);
  const Graph g = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
  CHECK(g.size() == 3);
  CHECK(g.degree(1) == 2);
  CHECK(g.max_degree() == 2);
  CHECK(g.adjacent(2, 1));
  CHECK_FALSE(g.adjacent(0, 3));
}

TEST_CASE("builder add/remove report changes") {
  GraphBuilder b(3);
  CHECK(b.add_edge(0, 1));
  CHECK_FALSE(b.add_edge(1, 0));
  CHECK(b.remove_edge(0, 1));
  CHECK_FALSE(b.remove_edge(0, 1));
  CHECK(std::move(b).build().size() == 0);
}

TEST_CASE("rows wider than one word") {
  const Graph p = path_graph(130);
  CHECK(p.words_per_row() == 3);
  CHECK(p.adjacent(64, 65));
  CHECK(p.adjacent(128, 129));
  CHECK(p.degree(64) == 2);
  CHECK(from_graph6(to_graph6(p)) == p);
}

TEST_CASE("graph6 known strings") {
  CHECK(to_graph6(complete_graph(3)) == "Bw");
  CHECK(to_graph6(complete_graph(4)) == "C~");
  CHECK(to_graph6(Graph(0)) == "?");
  CHECK(to_graph6(Graph(1)) == "@");
  CHECK(from_graph6("Bw") == complete_graph(3));
  CHECK(from_graph6(">>graph6<<Bw\n") == complete_graph(3));
  CHECK(from_graph6("Dhc") == cycle_graph(5));
}

TEST_CASE("graph6 long header round trip") {
  const Graph s = star_graph(70);
  const std::string text = to_graph6(s);
  CHECK(text[0] == '~');
  CHECK(from_graph6(text) == s);
}

TEST_CASE("graph6 errors carry offsets and line numbers") {
  CHECK_THROWS_AS(from_graph6(""), ParseError);
  CHECK_THROWS_AS(from_graph6("B"), ParseError);
  try {
    from_graph6("B\x01");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 1);
  }
  std::istringstream in("Bw\n\nC~\nBad!\n");
  std::size_t seen = 0;
  try {
    read_graph6_stream(in, [&](Graph&&, std::size_t) { ++seen; });
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 4);
    CHECK(std::string(e.what()).find("line 4") != std::string::npos);
  }
  CHECK(seen == 2);
}

TEST_CASE("graph6 round trip on random graphs") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const Graph g = oracle::random_graph(1 + i % 40, 0.3, rng);
    CHECK(from_graph6(to_graph6(g)) == g);
  }
}

TEST_CASE("families") {
  CHECK(path_graph(5).size() == 4);
  CHECK(cycle_graph(6).size() == 6);
  CHECK(star_graph(6).degree(0) == 5);
  CHECK(complete_graph(6).size() == 15);
  CHECK(complete_bipartite_graph(2, 3).size() == 6);
  CHECK(barbell_graph(4).size() == 13);
  const Graph xb = extended_barbell_graph(4);
  CHECK(xb.order() == 9);
  CHECK(xb.size() == 14);
  CHECK(xb.degree(8) == 2);
  CHECK(un3_graph(6).size() == 6);
  const Graph h = hkn_graph(7, 5);
  CHECK(h.size() == 7);
  CHECK(h.degree(5) == 2);
  CHECK(h.degree(4) == 3);
  CHECK(threshold_graph("id").size() == 2);
  CHECK(threshold_graph("dd") == complete_graph(3));
  CHECK_THROWS_AS(threshold_graph("ix"), DomainError);
  CHECK_THROWS_AS(cycle_graph(2), DomainError);
  CHECK_THROWS_AS(hkn_graph(5, 4), DomainError);
  CHECK(generate_family(parse_family("H_kn"), {{"n", "5"}, {"k", "3"}}) == hkn_graph(5, 3));
  CHECK_THROWS_AS(parse_family("petersen"), DomainError);
  CHECK_THROWS_AS(generate_family(Family::kCycle, {}), DomainError);
}

TEST_CASE("operations") {
  const Graph p2 = path_graph(2);
  const Graph p3 = path_graph(3);
  CHECK(join(p2, p3).size() == 1 + 2 + 6);
  CHECK(disjoint_union(p2, p3).order() == 5);
  CHECK(kronecker(p2, p3).size() == 2 * 1 * 2);
  CHECK(complement(complete_graph(4)).size() == 0);
  CHECK(add_leaf(p3, 1).degree(1) == 3);
  CHECK(delete_edge(p3, Edge::make(0, 1)).size() == 1);
  CHECK_THROWS_AS(delete_edge(p3, Edge::make(0, 2)), DomainError);
  CHECK(add_edge(p3, Edge::make(0, 2)) == cycle_graph(3));

  // Star K_{1,3} with centre 0: move leaf 3 from 0 to leaf 1.
  const Graph s = star_graph(4);
  const std::vector<Vertex> moved{3};
  const Graph m = move_neighbors(s, 1, 0, moved);
  CHECK(m.adjacent(1, 3));
  CHECK_FALSE(m.adjacent(0, 3));
  CHECK(m.size() == s.size());
  const std::vector<Vertex> bad{1};
  CHECK_THROWS_AS(move_neighbors(s, 1, 0, bad), DomainError);

  const std::vector<Vertex> keep{1, 2, 3};
  const auto sub = induced_subgraph(cycle_graph(5), keep);
  CHECK(sub.graph == path_graph(3));
  CHECK(sub.original_of == keep);
}

TEST_CASE("structure") {
  CHECK(is_connected(Graph(0)));
  CHECK(is_connected(Graph(1)));
  CHECK_FALSE(is_connected(Graph(2)));
  CHECK(is_bipartite(cycle_graph(6)));
  CHECK_FALSE(is_bipartite(cycle_graph(7)));
  CHECK(articulation_points(path_graph(4)) == std::vector<Vertex>{1, 2});
  CHECK(articulation_points(cycle_graph(5)).empty());
  CHECK(dominating_vertices(star_graph(5)) == std::vector<Vertex>{0});
  CHECK(connected_components(disjoint_union(path_graph(3), path_graph(2))).size() == 2);

  const auto cp = cactus_profile(extended_barbell_graph(3));
  CHECK(cp.is_cactus);
  CHECK(cp.odd_count == 2);
  CHECK_FALSE(cactus_profile(complete_graph(4)).is_cactus);
  CHECK(unicyclic_cycle(hkn_graph(6, 3))->size() == 3);
  CHECK_FALSE(unicyclic_cycle(path_graph(4)).has_value());
}
