#pragma once

#include <cstddef>
#include <functional>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sqenergy/bounds.hpp"
#include "sqenergy/graph.hpp"
#include "sqenergy/spectral.hpp"

namespace sqe {

// s+ and s- count as equal within this absolute difference.
inline constexpr double kEqualTolerance = 1e-8;
// Minima within this distance of each other are ties.
inline constexpr double kTieTolerance = 1e-9;
// s± >= n - 1 - kConjectureSlack counts as satisfying the conjecture.
inline constexpr double kConjectureSlack = 1e-9;

struct SurveyRecord {
  std::string graph6;
  std::size_t n = 0;
  std::size_t m = 0;
  double s_plus = 0.0;
  double s_minus = 0.0;
  double energy = 0.0;
  Inertia inertia;
  bool bipartite = false;
  bool fragile = false;
  std::pair<bool, bool> conjecture_ok{false, false};
  std::vector<std::string> certificates;  // conclusive rule names
};

struct Extremum {
  double value = std::numeric_limits<double>::infinity();
  std::vector<std::string> graph6;  // every witness within kTieTolerance

  bool unique() const noexcept { return graph6.size() == 1; }
};

struct SurveyReport {
  std::size_t n = 0;
  std::size_t total = 0;
  std::size_t s_plus_gt = 0;
  std::size_t s_minus_gt = 0;
  std::size_t equal = 0;
  std::size_t bipartite = 0;
  // Non-bipartite graphs counted as equal.
  std::size_t nonbipartite_equal = 0;
  // Smallest |s+ - s-| over non-bipartite graphs.
  double nonbipartite_min_gap = std::numeric_limits<double>::infinity();
  Extremum min_s_plus;
  Extremum min_s_minus;
  // min over the corpus of s± - (n - 1)
  double min_slack_plus = std::numeric_limits<double>::infinity();
  double min_slack_minus = std::numeric_limits<double>::infinity();
  std::size_t conjecture_failures = 0;
  std::size_t fragile = 0;
  // Minima whose 6-decimal rounding is within the boundary threshold.
  bool min_near_rounding_boundary = false;
};

struct SurveyOptions {
  unsigned threads = 1;
  bool certificates = false;
  std::function<void(const SurveyRecord&)> record_sink;
};

/// SQENERGY_THREADS if set and positive, else the hardware concurrency.
unsigned default_thread_count();

SurveyRecord survey_record(const Graph& g, bool certificates = false);

/// Per-graph work runs on up to `threads` workers; the reduction runs in input
/// order, so reports and record streams are identical for any thread count.
/// DomainError when the graphs do not share one order.
SurveyReport survey(std::span<const Graph> graphs, const SurveyOptions& opts = {});

std::vector<std::pair<std::size_t, double>> m0_curve(std::size_t n_lo, std::size_t n_hi);

struct LeafIncrement {
  Vertex v = 0;
  double d_plus = 0.0;   // s+(G^v) - s+(G)
  double d_minus = 0.0;  // s-(G^v) - s-(G)
};

/// G^v adds a leaf at v. Requires a connected graph.
std::vector<LeafIncrement> leaf_increment_profile(const Graph& g);

struct CoverageRow {
  Rule rule = Rule::kAvgDegree;
  std::size_t fired = 0;
  std::size_t conclusive = 0;
};

struct CoverageTable {
  std::size_t graphs = 0;
  std::vector<CoverageRow> rows;  // every rule, in enum order
  std::size_t certified_plus = 0;
  std::size_t certified_minus = 0;
  std::size_t certified_both = 0;
  std::vector<std::string> uncertified;  // graph6 of graphs missing a target
  // Bounds above the directly computed value + 1e-8.
  std::size_t unsound = 0;
  // Certificates whose witness did not re-derive the stated bound.
  std::size_t rederive_failures = 0;
  std::size_t conjecture_failures = 0;
};

CoverageTable certify_corpus(std::span<const Graph> graphs, unsigned threads = 1);

}  // namespace sqe
