#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sqenergy/charpoly.hpp"
#include "sqenergy/graph.hpp"
#include "sqenergy/partitions.hpp"
#include "sqenergy/spectral.hpp"

namespace sqe {

// A certificate is conclusive when bound_value >= n - 1 - kConclusiveSlack.
inline constexpr double kConclusiveSlack = 1e-9;

enum class Rule {
  kAvgDegree,
  kDominatingVertex,
  kSpanningBipartite,
  kClique,
  kJoin,
  kKronecker,
  kInducedBipartite,
  kEdgeCut,
  kEdgeCutTwins,
  kSelfJoin,
  kQuotient,
  kTwinQuotient,
  kUnicyclicFractional,
  kMajorization,
  kRank,
  kExtendedBarbell,
};

enum class Target { kSPlus, kSMinus, kBoth };

std::string_view rule_name(Rule r);
std::optional<Rule> parse_rule(std::string_view name);
std::string_view target_name(Target t);

/// Rule-specific evidence. Vertex sets are sorted and use the labels of the
/// certified graph; `labels` carries graph6 strings (e.g. Kronecker factors).
struct Witness {
  std::vector<std::pair<std::string, std::vector<Vertex>>> sets;
  std::vector<std::pair<std::string, double>> values;
  std::vector<std::pair<std::string, std::string>> labels;

  const std::vector<Vertex>* set(std::string_view key) const;
  std::optional<double> value(std::string_view key) const;
  const std::string* label(std::string_view key) const;
};

struct BoundCertificate {
  Rule rule = Rule::kAvgDegree;
  Target target = Target::kSPlus;
  double bound_value = 0.0;
  Witness witness;
  bool conclusive = false;
  std::size_t n = 0;
};

/// Sets `conclusive` from bound_value and n.
BoundCertificate finish(BoundCertificate c);

/// Independent re-derivation of a certificate's bound from its witness and
/// the graph alone. Returns nullopt when the witness does not check out.
std::optional<double> rederive_bound(const Graph& g, const BoundCertificate& c);

// --- structural rules --------------------------------------------------------

std::optional<BoundCertificate> check_avg_degree(const Graph& g);

/// Dominating vertex, spanning K_{r,n-r} and large clique.
std::vector<BoundCertificate> check_spanning_structures(const Graph& g);

/// Largest clique found: exact branch and bound for n <= 12, greedy beyond.
std::vector<Vertex> find_clique(const Graph& g);

/// Split (V1, V2) with every V1-V2 pair adjacent. Taken from the components
/// of the complement, balanced as well as possible.
std::optional<std::pair<std::vector<Vertex>, std::vector<Vertex>>> find_join_split(const Graph& g);

std::optional<BoundCertificate> check_join(
    const Graph& g, std::optional<std::pair<std::vector<Vertex>, std::vector<Vertex>>> split = std::nullopt);

/// g must equal kronecker(f1, f2) (checked). Both factors of order >= 3 and
/// satisfying the conjecture numerically; the bound covers both targets.
std::optional<BoundCertificate> check_kronecker(const Graph& g, const Graph& f1, const Graph& f2);

// --- interlacing bounds ------------------------------------------------------

struct EdgeDeletionBound {
  double s_plus_lower = 0.0;   // s+(H) - theta_2^2
  double s_minus_lower = 0.0;  // s-(H) - theta_n^2
  double theta_2 = 0.0;
  double theta_n = 0.0;
};

/// Bounds for g from H = g - e. nullopt when H has fewer than two positive or
/// two negative eigenvalues. DomainError when e is not an edge.
std::optional<EdgeDeletionBound> edge_deletion_bound(const Graph& g, Edge e);

struct MovingNeighborsBound {
  Graph moved;                   // G_{u,v}
  double s_plus_lower_weak = 0;  // s+(G) - lambda_1^2
  std::optional<double> s_plus_lower_strong;  // s+(G) - lambda_2^2
  double s_minus_lower = 0;                   // s-(G) - lambda_n^2
  // Reverse move: bounds for G from G_{u,v}.
  double reverse_s_plus_lower = 0;   // s+(G_{u,v}) - theta_1^2
  double reverse_s_minus_lower = 0;  // s-(G_{u,v}) - theta_n^2
  bool perron_condition = false;     // x_u >= x_v - 1e-12 |x|_inf
  bool disjoint_condition = false;   // N(v) ∩ (N(u) ∪ {u}) = ∅ and moved = N(v)
};

/// Lower bounds on s±(G_{u,v}) in terms of G.
MovingNeighborsBound moving_neighbors_bound(const Graph& g, Vertex u, Vertex v, std::span<const Vertex> moved);

struct LowerBoundPair {
  double s_plus_lower = 0.0;
  double s_minus_lower = 0.0;
};

/// s±(G[keep]).
LowerBoundPair induced_subgraph_bound(const Graph& g, std::span<const Vertex> keep);

/// g - deletions must be bipartite (DomainError otherwise). The certificate
/// covers both targets with bound |E(g - deletions)|; the coarser
/// |E| - |S| Delta appears in the witness as "coarse_bound".
BoundCertificate induced_bipartite_bound(const Graph& g, std::span<const Vertex> deletions);

/// One vertex per odd cycle of a cactus, greedily preferring vertices lying on
/// the most uncovered odd cycles. nullopt for non-cacti.
std::optional<std::vector<Vertex>> cactus_odd_cycle_transversal(const Graph& g);

/// Smallest deletion set making g bipartite, searched exhaustively up to
/// `max_size` vertices (maximising remaining edges among the smallest sets).
std::optional<std::vector<Vertex>> bipartite_deletion_set(const Graph& g, std::size_t max_size);

/// Whether the cactus condition ell >= k (Delta - 1) holds.
bool cactus_condition(const Graph& g);

/// s±(B) for the quotient matrix B of `x`.
LowerBoundPair quotient_bound(const Graph& g, const Partition& x);

/// Certificates from the edge-cut quotient of S: s+ >= lambda_+^2 (or the
/// trace form when det >= 0) and, when lambda_- < -1, s- >= lambda_-^2 plus
/// one per -1 eigenvalue forced by adjacent twin classes (lambda_n <= lambda_-
/// keeps them distinct). Candidate sets S: every single vertex and every twin
/// class.
std::vector<BoundCertificate> check_edge_cut(const Graph& g);

/// G = H v H' with |H| = |H'| = r >= 8 and both average degrees <= r/2.
std::optional<BoundCertificate> check_self_join(const Graph& g);

/// Quotient of the coarsest equitable refinement of {V}; one certificate per
/// target.
std::vector<BoundCertificate> check_quotient(const Graph& g);

/// Full spectrum from the twin quotient of the coarsest equitable refinement
/// of the twin partition.
std::vector<BoundCertificate> check_twin_quotient(const Graph& g);

// --- spectral rules ----------------------------------------------------------

/// pi / (2 arccos((n-1)/(n+1))) - 1/2.
double m0(std::size_t n);

struct UnicyclicFractional {
  std::size_t cycle_length = 0;
  std::size_t m = 0;  // cycle_length = 2m + 1
  std::size_t n = 0;
  std::optional<double> fractional_bound;  // 2mn/(2m+1), m >= 2
  double m0 = 0.0;
  // 2n cos(pi/(2m+1)) / (1 + cos(pi/(2m+1))), edge-transitive homomorphism
  double homomorphism_bound = 0.0;
  bool conclusive = false;  // for both targets
};

/// nullopt unless g is connected unicyclic with an odd cycle.
std::optional<UnicyclicFractional> unicyclic_fractional_bound(const Graph& g);
std::optional<BoundCertificate> check_unicyclic_fractional(const Graph& g);

struct MajorizationReport {
  std::vector<double> mu;
  std::vector<double> theta;
  std::vector<bool> prefix_ok;  // k = 1..nu-1
  bool totals_equal = false;
};

/// Requires pi = 2 (cross-checked exactly when n <= 64), connected, n >= 4.
std::optional<std::pair<MajorizationReport, BoundCertificate>> majorization_two_positive(const Graph& g);

/// s+ >= E^2 / (4 pi), s- >= E^2 / (4 nu). Zero counts give a zero bound.
LowerBoundPair energy_count_bound(const Graph& g);

/// Certificates for the targets whose eigenvalue count is at most
/// rank^2 / (4 (n-1)). Connected, n >= 3.
std::vector<BoundCertificate> rank_bound(const Graph& g);

// --- closed forms ------------------------------------------------------------

struct ExtendedBarbellClosedForm {
  std::size_t k = 0;
  std::size_t n = 0;
  IntPolynomial f;                 // x^3 - (k-2) x^2 - (1+k) x + 2(k-2)
  std::vector<double> mu;          // roots of f, mu_1 > mu_2 > mu_3
  Spectrum spectrum;               // {k-1, -1^(n-4)} ∪ roots of f
  double s_plus = 0.0;
  double s_minus = 0.0;
  BigRational f_at_k_minus_1;      // -2
  BigRational f_at_minus_1;        // 2k - 2
  BigRational f_at_minus_9_5;      // 14k/25 - 194/125
  bool ordering_ok = false;        // mu_1 > k-1 > mu_2 > -1 > mu_3, mu_3 < -9/5
  double dense_max_diff = 0.0;     // against the dense eigensolver
  // Root multiplicities in the exact characteristic polynomial (k <= 31).
  std::optional<std::size_t> exact_minus_one_multiplicity;
  std::optional<std::size_t> exact_k_minus_1_multiplicity;
  bool conclusive = false;
};

/// DomainError for k < 3.
ExtendedBarbellClosedForm extended_barbell_closed_form(std::size_t k);

/// If g is two K_k (k >= 3) joined through a degree-two vertex, returns k.
std::optional<std::size_t> detect_extended_barbell(const Graph& g);
std::optional<BoundCertificate> check_extended_barbell(const Graph& g);

struct H3nQuotientAnalysis {
  std::size_t n = 0;
  IntPolynomial p_b;          // x^4 - x^3 - (n-1) x^2 + (n-3) x + 2(n-4)
  std::vector<double> mu;     // roots, non-increasing
  double s_minus_gap = 0.0;   // mu_3^2 + mu_4^2 - (n-2)
};

/// DomainError for n < 5.
H3nQuotientAnalysis h3n_quotient_analysis(std::size_t n);

// --- aggregate ---------------------------------------------------------------

struct CertifyOptions {
  // Largest deletion set tried by the induced-bipartite search on non-cacti.
  std::size_t bipartite_search_depth = 2;
  bool include_inconclusive = false;
};

/// Runs every rule that needs no auxiliary input.
std::vector<BoundCertificate> certify_graph(const Graph& g, const CertifyOptions& opts = {});

}  // namespace sqe
