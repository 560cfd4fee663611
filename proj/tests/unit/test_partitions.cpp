#include <algorithm>
#include <cmath>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "sqenergy/errors.hpp"
#include "sqenergy/families.hpp"
#include "sqenergy/operations.hpp"
#include "sqenergy/partitions.hpp"
#include "sqenergy/spectral.hpp"

using namespace sqe;

namespace {

constexpr double kInterlaceSlack = 1e-8;

// Random partition of 0..n-1 into at most p blocks.
Partition random_partition(std::size_t n, std::size_t p, std::mt19937_64& rng) {
  std::vector<std::vector<Vertex>> blocks(p);
  std::uniform_int_distribution<std::size_t> pick(0, p - 1);
  for (Vertex v = 0; v < n; ++v) blocks[pick(rng)].push_back(v);
  std::erase_if(blocks, [](const auto& b) { return b.empty(); });
  return Partition::make(n, blocks);
}

// Adds independent or adjacent copies of random vertices.
Graph with_twins(const Graph& g, std::size_t copies, std::mt19937_64& rng) {
  Graph out = g;
  std::uniform_int_distribution<int> coin(0, 1);
  for (std::size_t c = 0; c < copies; ++c) {
    std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(out.order() - 1));
    const Vertex v = pick(rng);
    GraphBuilder b(out.order() + 1);
    for (const Edge& e : out.edges()) b.add_edge(e.u, e.v);
    const auto w = static_cast<Vertex>(out.order());
    for (Vertex x : out.neighbors(v)) b.add_edge(x, w);
    if (coin(rng)) b.add_edge(v, w);
    out = std::move(b).build();
  }
  return out;
}

}  // namespace

TEST_CASE("partition parsing and validation") {
  const auto x = Partition::parse(6, "0,1;2;3,4,5");
  CHECK(x.block_count() == 3);
  CHECK(x.block_of(4) == 2);
  CHECK(x.to_string() == "0,1;2;3,4,5");
  CHECK_THROWS_AS(Partition::parse(3, "0,1"), DomainError);
  CHECK_THROWS_AS(Partition::parse(3, "0,1;1,2"), DomainError);
  CHECK_THROWS_AS(Partition::parse(3, "0,1;x"), DomainError);
  CHECK_THROWS_AS(Partition::parse(3, "0,1;2,3"), DomainError);
  CHECK_THROWS_AS(Partition::make(2, {{0, 1}, {}}), DomainError);
}

TEST_CASE("star quotient") {
  const auto q = quotient_matrix(star_graph(5), Partition::parse(5, "0;1,2,3,4"));
  CHECK(q.equitable);
  CHECK(q.at(0, 1) == 4.0);
  CHECK(q.at(1, 0) == 1.0);
  CHECK(satisfies_ms_eq_sb(star_graph(5), q));
  const auto s = quotient_spectrum(q);
  CHECK(s.values[0] == doctest::Approx(2.0));
  CHECK(s.values[1] == doctest::Approx(-2.0));
}

TEST_CASE("quotient eigenvalues interlace the graph spectrum") {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 300; ++i) {
    const std::size_t n = 3 + i % 9;
    const Graph g = oracle::random_graph(n, 0.45, rng);
    const Partition x = random_partition(n, 1 + i % n, rng);
    const auto mu = quotient_spectrum(quotient_matrix(g, x)).values;
    const auto lambda = oracle::eigen_spectrum(g);
    const std::size_t p = mu.size();
    for (std::size_t k = 0; k < p; ++k) {
      CHECK(mu[k] <= lambda[k] + kInterlaceSlack);
      CHECK(mu[k] >= lambda[n - p + k] - kInterlaceSlack);
    }
  }
}

TEST_CASE("equitable refinement") {
  std::mt19937_64 rng(43);
  for (int i = 0; i < 100; ++i) {
    const Graph g = oracle::random_graph(2 + i % 10, 0.4, rng);
    const auto x = coarsest_equitable_refinement(g, Partition::trivial(g.order()));
    const auto q = quotient_matrix(g, x);
    CHECK(q.equitable);
    CHECK(is_equitable(g, x));
    CHECK(satisfies_ms_eq_sb(g, q));
    // Equitable quotient eigenvalues are graph eigenvalues.
    const auto lambda = oracle::eigen_spectrum(g);
    for (double m : quotient_spectrum(q).values) {
      const bool hit = std::any_of(lambda.begin(), lambda.end(), [&](double l) { return std::abs(l - m) < 1e-8; });
      CHECK(hit);
    }
  }
  CHECK(coarsest_equitable_refinement(cycle_graph(7), Partition::trivial(7)).block_count() == 1);
  CHECK(coarsest_equitable_refinement(path_graph(5), Partition::trivial(5)).block_count() == 3);
}

TEST_CASE("twins") {
  const auto t = find_twins(complete_bipartite_graph(2, 3));
  REQUIRE(t.size() == 2);
  CHECK(t[0].vertices == std::vector<Vertex>{0, 1});
  CHECK(t[0].kind == TwinKind::kIndependent);
  CHECK(t[1].multiplicity() == 2);
  const auto k = find_twins(complete_graph(4));
  REQUIRE(k.size() == 1);
  CHECK(k[0].kind == TwinKind::kAdjacent);
  CHECK(k[0].alpha == -1.0);
  const std::vector<Vertex> pair{0, 1};
  CHECK(twin_kind_of(complete_graph(4), pair) == TwinKind::kAdjacent);
  CHECK_FALSE(twin_kind_of(path_graph(4), pair).has_value());
}

TEST_CASE("twin quotient spectrum equals the dense spectrum") {
  std::mt19937_64 rng(47);
  for (int i = 0; i < 150; ++i) {
    const Graph g = with_twins(oracle::random_connected(3 + i % 6, 0.5, rng), 1 + i % 5, rng);
    const auto x = coarsest_equitable_refinement(g, twin_partition(g));
    auto ours = twin_quotient_spectrum(g, x).values;
    const auto ref = oracle::eigen_spectrum(g);
    REQUIRE(ours.size() == ref.size());
    for (std::size_t k = 0; k < ref.size(); ++k) CHECK(std::abs(ours[k] - ref[k]) < 1e-8);
  }
  CHECK_THROWS_AS(twin_quotient_spectrum(path_graph(4), Partition::parse(4, "0,1;2,3")), DomainError);
}

TEST_CASE("edge cut quotient") {
  const Graph g = complete_graph(5);
  const std::vector<Vertex> s{0, 1};
  const auto q = edge_cut_quotient(g, s);
  CHECK(q.c == 6);
  CHECK(q.d1 == 1.0);
  CHECK(q.d2 == 2.0);
  // B = [[1, 3], [2, 2]] has eigenvalues 4 and -1.
  CHECK(q.lambda_plus == doctest::Approx(4.0));
  CHECK(q.lambda_minus == doctest::Approx(-1.0));
  CHECK(q.determinant_sign < 0);
  CHECK(q.s_plus_lower == doctest::Approx(16.0));
  const std::vector<Vertex> none;
  CHECK_THROWS_AS(edge_cut_quotient(g, none), DomainError);
}
