#include <algorithm>
#include <cmath>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "sqenergy/bounds.hpp"
#include "sqenergy/charpoly.hpp"
#include "sqenergy/enumerate.hpp"
#include "sqenergy/errors.hpp"
#include "sqenergy/families.hpp"
#include "sqenergy/graph6.hpp"
#include "sqenergy/operations.hpp"
#include "sqenergy/spectral.hpp"
#include "sqenergy/structure.hpp"

using namespace sqe;

namespace {

constexpr double kSlack = 1e-8;

oracle::Squares truth(const Graph& g) { return oracle::squares(oracle::eigen_spectrum(g)); }

double truth_for(const Graph& g, Target t) {
  const auto s = truth(g);
  if (t == Target::kSPlus) return s.plus;
  if (t == Target::kSMinus) return s.minus;
  return std::min(s.plus, s.minus);
}

bool has_rule(const std::vector<BoundCertificate>& cs, Rule r) {
  return std::any_of(cs.begin(), cs.end(), [&](const BoundCertificate& c) { return c.rule == r; });
}

// Two triangles and two 4-cycles sharing cut vertices, plus three leaves.
Graph cactus14() {
  return Graph::from_edges(14, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {3, 4}, {0, 4}, {1, 5}, {5, 6}, {6, 7},
                                {1, 7}, {3, 8}, {8, 9}, {9, 10}, {3, 10}, {2, 11}, {4, 12}, {5, 13}});
}

}  // namespace

TEST_CASE("rule names round trip") {
  for (int i = 0; i <= static_cast<int>(Rule::kExtendedBarbell); ++i) {
    const auto r = static_cast<Rule>(i);
    CHECK(parse_rule(rule_name(r)) == r);
  }
  CHECK_FALSE(parse_rule("nope").has_value());
}

TEST_CASE("structural rules") {
  const Graph k6 = complete_graph(6);
  const auto avg = check_avg_degree(k6);
  REQUIRE(avg);
  CHECK(avg->bound_value == doctest::Approx(25.0));
  CHECK(avg->conclusive);
  CHECK_FALSE(check_avg_degree(path_graph(6)).has_value());

  const auto span = check_spanning_structures(star_graph(6));
  CHECK(has_rule(span, Rule::kDominatingVertex));
  CHECK(has_rule(span, Rule::kSpanningBipartite));
  CHECK(find_clique(k6).size() == 6);
  CHECK(find_clique(cycle_graph(5)).size() == 2);
  CHECK(find_clique(join(complete_graph(5), path_graph(10))).size() == 7);

  const auto j = check_join(join(cycle_graph(5), path_graph(3)));
  REQUIRE(j);
  CHECK(j->bound_value == 7.0);
  CHECK_FALSE(check_join(cycle_graph(6)).has_value());
  const std::pair<std::vector<Vertex>, std::vector<Vertex>> bad{{0, 1}, {2, 3, 4}};
  CHECK_FALSE(check_join(cycle_graph(5), bad).has_value());
}

TEST_CASE("Kronecker certificate") {
  const Graph c5 = cycle_graph(5);
  const Graph k3 = complete_graph(3);
  const Graph g = kronecker(c5, k3);
  const auto c = check_kronecker(g, c5, k3);
  REQUIRE(c);
  CHECK(c->bound_value == 16.0);
  CHECK(c->conclusive);
  CHECK(c->bound_value <= truth_for(g, Target::kBoth) + kSlack);
  CHECK(rederive_bound(g, *c) == c->bound_value);
  CHECK_THROWS_AS(check_kronecker(g, k3, k3), DomainError);
  CHECK_FALSE(check_kronecker(kronecker(c5, path_graph(2)), c5, path_graph(2)).has_value());
}

TEST_CASE("interlacing bounds on random instances") {
  std::mt19937_64 rng(101);
  for (int i = 0; i < 200; ++i) {
    const Graph g = oracle::random_connected(4 + i % 6, 0.5, rng);
    const auto s = truth(g);
    const auto edges = g.edges();
    const Edge e = edges[static_cast<std::size_t>(i) % edges.size()];
    if (const auto b = edge_deletion_bound(g, e)) {
      CHECK(b->s_plus_lower <= s.plus + kSlack);
      CHECK(b->s_minus_lower <= s.minus + kSlack);
    }
    std::vector<Vertex> keep;
    for (Vertex v = 0; v < g.order(); ++v) {
      if ((v + static_cast<Vertex>(i)) % 3) keep.push_back(v);
    }
    const auto ind = induced_subgraph_bound(g, keep);
    CHECK(ind.s_plus_lower <= s.plus + kSlack);
    CHECK(ind.s_minus_lower <= s.minus + kSlack);
    const auto ec = energy_count_bound(g);
    CHECK(ec.s_plus_lower <= s.plus + kSlack);
    CHECK(ec.s_minus_lower <= s.minus + kSlack);
  }
  CHECK_THROWS_AS(edge_deletion_bound(path_graph(4), Edge::make(0, 2)), DomainError);
}

TEST_CASE("moving neighbours") {
  std::mt19937_64 rng(103);
  int checked = 0;
  for (int i = 0; i < 400; ++i) {
    const Graph g = oracle::random_connected(5 + i % 5, 0.45, rng);
    const Vertex u = static_cast<Vertex>(i % g.order());
    const Vertex v = static_cast<Vertex>((i + 1) % g.order());
    std::vector<Vertex> movable;
    for (Vertex w : g.neighbors(v)) {
      if (w != u && !g.adjacent(u, w)) movable.push_back(w);
    }
    if (movable.empty()) continue;
    ++checked;
    const auto b = moving_neighbors_bound(g, u, v, movable);
    const auto moved = truth(b.moved);
    const auto orig = truth(g);
    CHECK(b.s_plus_lower_weak <= moved.plus + kSlack);
    if (b.s_plus_lower_strong) CHECK(*b.s_plus_lower_strong <= moved.plus + kSlack);
    CHECK(b.s_minus_lower <= moved.minus + kSlack);
    CHECK(b.reverse_s_plus_lower <= orig.plus + kSlack);
    CHECK(b.reverse_s_minus_lower <= orig.minus + kSlack);
  }
  CHECK(checked > 100);
}

TEST_CASE("induced bipartite and cacti") {
  const Graph t = path_graph(7);
  const std::vector<Vertex> none;
  const auto c = induced_bipartite_bound(t, none);
  CHECK(c.bound_value == 6.0);
  CHECK(c.conclusive);
  const std::vector<Vertex> zero{0};
  CHECK_THROWS_AS(induced_bipartite_bound(complete_graph(4), zero), DomainError);

  // Too few even cycles for the counting condition; one deletion still suffices.
  const Graph g = cactus14();
  CHECK_FALSE(cactus_condition(g));
  const auto cut = cactus_odd_cycle_transversal(g);
  REQUIRE(cut);
  CHECK(*cut == std::vector<Vertex>{0});
  const auto cert = induced_bipartite_bound(g, *cut);
  CHECK(cert.bound_value == 13.0);
  CHECK(cert.conclusive);
  CHECK(cert.bound_value <= truth_for(g, Target::kBoth) + kSlack);
  CHECK_FALSE(cactus_odd_cycle_transversal(complete_graph(4)).has_value());

  // Triangle with a 4-cycle hanging from each corner: l = 3 = k (Delta - 1).
  const Graph h = Graph::from_edges(12, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {3, 4}, {4, 5}, {0, 5}, {1, 6}, {6, 7},
                                         {7, 8}, {1, 8}, {2, 9}, {9, 10}, {10, 11}, {2, 11}});
  CHECK(cactus_condition(h));
  const auto hc = induced_bipartite_bound(h, *cactus_odd_cycle_transversal(h));
  CHECK(*hc.witness.value("coarse_bound") >= 11.0);
  CHECK(hc.bound_value <= truth_for(h, Target::kBoth) + kSlack);
  CHECK(bipartite_deletion_set(complete_graph(4), 2)->size() == 2);
  CHECK_FALSE(bipartite_deletion_set(complete_graph(5), 2).has_value());
}

TEST_CASE("quotient rules") {
  std::mt19937_64 rng(107);
  for (int i = 0; i < 100; ++i) {
    const Graph g = oracle::random_connected(4 + i % 6, 0.5, rng);
    const auto s = truth(g);
    const auto q = quotient_bound(g, Partition::parse(g.order(), "0;1" + [&] {
                                    std::string rest;
                                    for (Vertex v = 2; v < g.order(); ++v) rest += "," + std::to_string(v);
                                    return rest;
                                  }()));
    CHECK(q.s_plus_lower <= s.plus + kSlack);
    CHECK(q.s_minus_lower <= s.minus + kSlack);
    for (const auto& c : check_edge_cut(g)) CHECK(c.bound_value <= truth_for(g, c.target) + kSlack);
  }
  const auto sj = check_self_join(join(cycle_graph(8), cycle_graph(8)));
  REQUIRE(sj);
  CHECK(sj->conclusive);
  CHECK_FALSE(check_self_join(join(cycle_graph(7), cycle_graph(7))).has_value());
}

TEST_CASE("unicyclic fractional bound") {
  // PAPER: the threshold at n = 100 is 7.38 to two decimals.
  CHECK(std::abs(m0(100) - 7.38) < 0.01);
  for (std::size_t m = 1; m <= 8; ++m) {
    const Graph c = cycle_graph(2 * m + 1);
    const auto u = unicyclic_fractional_bound(c);
    REQUIRE(u);
    CHECK(u->m == m);
    CHECK(u->homomorphism_bound <= truth_for(c, Target::kBoth) + kSlack);
    if (m >= 2) CHECK(*u->fractional_bound <= truth_for(c, Target::kBoth) + kSlack);
  }
  CHECK_FALSE(unicyclic_fractional_bound(cycle_graph(6)).has_value());
  CHECK_FALSE(unicyclic_fractional_bound(complete_graph(4)).has_value());
  const auto h = check_unicyclic_fractional(hkn_graph(30, 15));
  REQUIRE(h);
  CHECK(h->conclusive);
}

TEST_CASE("two positive eigenvalues: majorization") {
  std::size_t seen = 0;
  for (std::size_t n = 4; n <= 6; ++n) {
    for (const auto& g : connected_graphs(n)) {
      const auto r = majorization_two_positive(g);
      const bool two = exact_inertia(char_poly_exact(g)).positive == 2;
      CHECK(r.has_value() == two);
      if (!r) continue;
      ++seen;
      CHECK(r->first.totals_equal);
      CHECK(r->second.bound_value <= truth_for(g, r->second.target) + kSlack);
    }
  }
  CHECK(seen > 20);
}

TEST_CASE("rank bound") {
  const auto cs = rank_bound(complete_graph(8));
  CHECK(has_rule(cs, Rule::kRank));
  for (const auto& c : cs) CHECK(c.bound_value <= truth_for(complete_graph(8), c.target) + kSlack);
}

TEST_CASE("extended barbell closed form") {
  for (std::size_t k = 3; k <= 10; ++k) {
    const auto cf = extended_barbell_closed_form(k);
    const BigRational kk(static_cast<long>(k));
    CHECK(cf.f_at_k_minus_1 == BigRational(-2));
    CHECK(cf.f_at_minus_1 == 2 * kk - 2);
    CHECK(cf.f_at_minus_9_5 == BigRational(14, 25) * kk - BigRational(194, 125));
    CHECK(cf.ordering_ok);
    CHECK(cf.dense_max_diff < 1e-8);
    CHECK(cf.exact_minus_one_multiplicity == cf.n - 4);
    CHECK(cf.exact_k_minus_1_multiplicity >= 1);
    const double km1 = static_cast<double>(k - 1);
    CHECK(cf.s_plus > 2.0 * km1 * km1);
    CHECK(cf.s_minus > static_cast<double>(cf.n - 1));
    CHECK(cf.conclusive);
    CHECK(detect_extended_barbell(extended_barbell_graph(k)) == k);
  }
  // DERIVED (numpy): s+ and s- of the k = 4 graph.
  const auto cf4 = extended_barbell_closed_form(4);
  CHECK(cf4.s_plus == doctest::Approx(19.556108404));
  CHECK(cf4.s_minus == doctest::Approx(8.443891596));
  CHECK_FALSE(detect_extended_barbell(barbell_graph(4)).has_value());
  CHECK_THROWS_AS(extended_barbell_closed_form(2), DomainError);
}

TEST_CASE("H_n^3 quotient analysis") {
  for (std::size_t n = 5; n <= 20; ++n) {
    const auto a = h3n_quotient_analysis(n);
    REQUIRE(a.mu.size() == 4);
    for (double x : a.mu) {
      double v = 0.0;
      for (std::size_t i = a.p_b.coeffs.size(); i-- > 0;) v = v * x + a.p_b.coeffs[i].convert_to<double>();
      CHECK(std::abs(v) < 1e-6);
    }
  }
  CHECK_THROWS_AS(h3n_quotient_analysis(4), DomainError);
}

TEST_CASE("every certificate on small connected graphs is sound and re-derivable") {
  CertifyOptions opts;
  opts.include_inconclusive = true;
  std::size_t count = 0;
  for (std::size_t n = 2; n <= 6; ++n) {
    for (const auto& g : connected_graphs(n)) {
      for (const auto& c : certify_graph(g, opts)) {
        ++count;
        CHECK(c.bound_value <= truth_for(g, c.target) + kSlack);
        const auto again = rederive_bound(g, c);
        REQUIRE(again);
        CHECK(*again == doctest::Approx(c.bound_value).epsilon(1e-9));
      }
    }
  }
  CHECK(count > 500);
}

TEST_CASE("tampered witnesses are rejected") {
  const Graph g = star_graph(6);
  auto certs = certify_graph(g);
  const auto dom = std::find_if(certs.begin(), certs.end(),
                                [](const BoundCertificate& c) { return c.rule == Rule::kDominatingVertex; });
  REQUIRE(dom != certs.end());
  dom->witness.sets.front().second = {3};
  CHECK_FALSE(rederive_bound(g, *dom).has_value());
}

TEST_CASE("trees are certified by the induced bipartite rule") {
  std::mt19937_64 rng(109);
  for (int i = 0; i < 30; ++i) {
    // Random recursive tree.
    const std::size_t n = 3 + i % 12;
    GraphBuilder b(n);
    for (Vertex v = 1; v < n; ++v) b.add_edge(v, std::uniform_int_distribution<Vertex>(0, v - 1)(rng));
    const Graph t = std::move(b).build();
    const auto cs = certify_graph(t);
    const bool ok = std::any_of(cs.begin(), cs.end(), [](const BoundCertificate& c) {
      return c.rule == Rule::kInducedBipartite && c.conclusive && c.target == Target::kBoth;
    });
    CHECK(ok);
  }
}
