#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "sqenergy/canonical.hpp"
#include "sqenergy/enumerate.hpp"
#include "sqenergy/errors.hpp"
#include "sqenergy/families.hpp"
#include "sqenergy/format.hpp"
#include "sqenergy/graph6.hpp"
#include "sqenergy/operations.hpp"
#include "sqenergy/serialize.hpp"
#include "sqenergy/structure.hpp"
#include "sqenergy/survey.hpp"

using namespace sqe;

namespace {

struct Table1Row {
  std::size_t n, total, plus_gt, minus_gt, equal, bipartite;
};

// PAPER: counts of connected graphs by the sign of s+ - s-.
constexpr Table1Row kTable1[] = {
    {2, 1, 0, 0, 1, 1},       {3, 2, 1, 0, 1, 1},       {4, 6, 3, 0, 3, 3},
    {5, 21, 15, 1, 5, 5},     {6, 112, 93, 2, 17, 17},  {7, 853, 795, 14, 44, 44},
};

struct Table2Col {
  std::size_t n, total;
  double min_plus, min_minus;
};

// PAPER: non-bipartite unicyclic minima, 6 decimals (trailing zeros dropped).
constexpr Table2Col kTable2[] = {
    {3, 1, 4.0, 2.0},
    {4, 1, 4.806063, 3.193937},
    {5, 4, 4.763932, 4.096788},
    {6, 8, 5.8548, 5.073208},
    {7, 23, 6.797054, 6.060343},
    {8, 55, 7.786641, 7.051905},
    {9, 155, 8.78153, 8.045829},
    {10, 403, 9.778404, 9.041196},
};

}  // namespace

TEST_CASE("canonical labelling agrees with brute-force isomorphism") {
  std::mt19937_64 rng(201);
  for (int i = 0; i < 400; ++i) {
    const std::size_t n = 1 + i % 6;
    const Graph a = oracle::random_graph(n, 0.5, rng);
    const Graph b = (i % 2) ? oracle::random_permutation_of(a, rng) : oracle::random_graph(n, 0.5, rng);
    CHECK(isomorphic(a, b) == oracle::brute_isomorphic(a, b));
  }
}

TEST_CASE("canonical form is invariant under relabelling") {
  std::mt19937_64 rng(203);
  const std::vector<Graph> hard{cycle_graph(12), complete_bipartite_graph(5, 6), hkn_graph(14, 5),
                                extended_barbell_graph(6), complement(cycle_graph(9))};
  for (const auto& g : hard) {
    const auto key = canonical_graph6(g);
    for (int r = 0; r < 10; ++r) CHECK(canonical_graph6(oracle::random_permutation_of(g, rng)) == key);
  }
  for (int i = 0; i < 100; ++i) {
    const Graph g = oracle::random_graph(10 + i % 30, 0.3, rng);
    CHECK(canonical_graph6(oracle::random_permutation_of(g, rng)) == canonical_graph6(g));
  }
  CHECK_FALSE(isomorphic(cycle_graph(6), disjoint_union(cycle_graph(3), cycle_graph(3))));
  CHECK_THROWS_AS(canonical_labelling(path_graph(65)), DomainError);
}

TEST_CASE("connected enumeration counts and distinctness") {
  // Known totals of connected graphs.
  const std::size_t counts[] = {0, 1, 1, 2, 6, 21, 112, 853};
  for (std::size_t n = 1; n <= 7; ++n) {
    const auto gs = connected_graphs(n);
    CHECK(gs.size() == counts[n]);
    std::set<std::string> keys;
    for (const auto& g : gs) {
      CHECK(is_connected(g));
      keys.insert(canonical_graph6(g));
    }
    CHECK(keys.size() == gs.size());
  }
  CHECK_THROWS_AS(connected_graphs(0), DomainError);
  CHECK_THROWS_AS(connected_graphs(11), DomainError);
}

TEST_CASE("unicyclic generator agrees with filtered connected graphs") {
  for (std::size_t n = 3; n <= 8; ++n) {
    std::set<std::string> filtered;
    for (const auto& g : connected_graphs(n)) {
      if (g.size() == n && !is_bipartite(g)) filtered.insert(canonical_graph6(g));
    }
    std::set<std::string> generated;
    for (const auto& g : unicyclic_nonbipartite_graphs(n)) generated.insert(canonical_graph6(g));
    CHECK(generated == filtered);
    CHECK(unicyclic_nonbipartite_graphs(n).size() == generated.size());
  }
  CHECK(unicyclic_nonbipartite_graphs(11).size() == 1116);
  CHECK_THROWS_AS(unicyclic_nonbipartite_graphs(15), DomainError);
  CHECK_THROWS_AS(unicyclic_nonbipartite_graphs(2), DomainError);
  // Rooted trees by size.
  const std::size_t trees[] = {0, 1, 1, 2, 4, 9, 20, 48, 115, 286, 719};
  for (std::size_t s = 1; s <= 10; ++s) CHECK(rooted_tree_count(s) == trees[s]);
}

TEST_CASE("Table 1 rows") {
  for (const auto& row : kTable1) {
    const auto gs = connected_graphs(row.n);
    const auto r = survey(gs);
    CHECK(r.total == row.total);
    CHECK(r.s_plus_gt == row.plus_gt);
    CHECK(r.s_minus_gt == row.minus_gt);
    CHECK(r.equal == row.equal);
    CHECK(r.bipartite == row.bipartite);
    CHECK(r.nonbipartite_equal == 0);
    CHECK(r.s_plus_gt + r.s_minus_gt + r.equal == r.total);
    CHECK(r.conjecture_failures == 0);
    CHECK(r.min_slack_plus >= -1e-9);
    CHECK(r.min_slack_minus >= -1e-9);
  }
}

TEST_CASE("Table 2 columns and minimisers") {
  for (const auto& col : kTable2) {
    const auto gs = unicyclic_nonbipartite_graphs(col.n);
    const auto r = survey(gs);
    CHECK(r.total == col.total);
    CHECK(std::abs(r.min_s_plus.value - col.min_plus) <= 1e-6);
    CHECK(std::abs(r.min_s_minus.value - col.min_minus) <= 1e-6);
    CHECK(r.min_s_plus.unique());
    CHECK(r.min_s_minus.unique());
    if (col.n >= 7) CHECK(isomorphic(from_graph6(r.min_s_plus.graph6.front()), hkn_graph(col.n, 5)));
    if (col.n >= 5) CHECK(isomorphic(from_graph6(r.min_s_minus.graph6.front()), hkn_graph(col.n, 3)));
    for (const auto& g : gs) {
      const auto p = energy_profile(g);
      CHECK(p.s_plus + p.s_minus == doctest::Approx(2.0 * static_cast<double>(col.n)).epsilon(1e-10));
    }
  }
}

TEST_CASE("survey is deterministic across thread counts") {
  const auto gs = connected_graphs(6);
  std::vector<std::string> one, four;
  SurveyOptions a;
  a.threads = 1;
  a.record_sink = [&](const SurveyRecord& r) { one.push_back(to_json(r)); };
  SurveyOptions b;
  b.threads = 4;
  b.record_sink = [&](const SurveyRecord& r) { four.push_back(to_json(r)); };
  const auto ra = survey(gs, a);
  const auto rb = survey(gs, b);
  CHECK(one == four);
  CHECK(to_json(ra) == to_json(rb));

  const std::vector<Graph> mixed{path_graph(3), path_graph(4)};
  CHECK_THROWS_AS(survey(mixed), DomainError);
  CHECK(survey(std::vector<Graph>{}).total == 0);
}

TEST_CASE("survey records") {
  const auto r = survey_record(complete_graph(3), true);
  CHECK(r.graph6 == "Bw");
  CHECK(r.s_plus == doctest::Approx(4.0));
  CHECK(r.conjecture_ok == std::pair{true, true});
  CHECK_FALSE(r.certificates.empty());
  CHECK(to_json(r).find("\"s_plus\":4.0") != std::string::npos);
}

TEST_CASE("m0 curve and leaf profiles") {
  const auto curve = m0_curve(3, 100);
  CHECK(curve.size() == 98);
  CHECK(curve.back().first == 100);
  CHECK(std::abs(curve.back().second - 7.38) < 0.01);
  CHECK_THROWS_AS(m0_curve(2, 5), DomainError);

  for (const auto& t : {path_graph(6), star_graph(7)}) {
    for (const auto& inc : leaf_increment_profile(t)) {
      CHECK(inc.d_plus == doctest::Approx(1.0));
      CHECK(inc.d_minus == doctest::Approx(1.0));
    }
  }
  CHECK_THROWS_AS(leaf_increment_profile(Graph(3)), DomainError);

  // Some 9-vertex non-bipartite unicyclic graph has a vertex whose pendant
  // leaf raises s- by less than one.
  bool found = false;
  for (const auto& g : unicyclic_nonbipartite_graphs(9)) {
    for (const auto& inc : leaf_increment_profile(g)) found = found || inc.d_minus < 1.0 - 1e-9;
    if (found) break;
  }
  CHECK(found);
}

TEST_CASE("certificate coverage") {
  SUBCASE("trees") {
    std::vector<Graph> trees;
    for (const auto& g : connected_graphs(7)) {
      if (g.size() == 6) trees.push_back(g);
    }
    const auto t = certify_corpus(trees, 2);
    const auto row = t.rows[static_cast<std::size_t>(Rule::kInducedBipartite)];
    CHECK(row.conclusive == trees.size());
    CHECK(t.certified_both == trees.size());
  }
  SUBCASE("connected n = 6") {
    const auto gs = connected_graphs(6);
    const auto t = certify_corpus(gs, 2);
    CHECK(t.graphs == 112);
    CHECK(t.conjecture_failures == 0);
    CHECK(t.unsound == 0);
    CHECK(t.rederive_failures == 0);
  }
  SUBCASE("extended barbells") {
    std::vector<Graph> gs;
    for (std::size_t k = 3; k <= 10; ++k) gs.push_back(extended_barbell_graph(k));
    const auto t = certify_corpus(gs, 2);
    CHECK(t.rows[static_cast<std::size_t>(Rule::kExtendedBarbell)].conclusive == gs.size());
  }
}

TEST_CASE("six-decimal formatting") {
  CHECK(format_fixed6(-0.0) == "0.000000");
  CHECK(format_fixed6(-1e-9) == "0.000000");
  CHECK(format_fixed6(4.8060626) == "4.806063");
  CHECK(near_rounding_boundary(1.0000005));
  CHECK_FALSE(near_rounding_boundary(1.0000004));
}
