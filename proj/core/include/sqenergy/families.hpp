#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>

#include "sqenergy/graph.hpp"

namespace sqe {

enum class Family {
  kPath,
  kCycle,
  kStar,
  kComplete,
  kCompleteBipartite,
  kBarbell,
  kExtendedBarbell,
  kUn3,
  kHkn,
  kThreshold,
};

Family parse_family(std::string_view name);
std::string_view family_name(Family f);

Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
// K_{1,n-1}; vertex 0 is the centre.
Graph star_graph(std::size_t n);
Graph complete_graph(std::size_t n);
// K_{a,b}: sides {0..a-1} and {a..a+b-1}.
Graph complete_bipartite_graph(std::size_t a, std::size_t b);
// Two K_k joined by the edge (k-1, k).
Graph barbell_graph(std::size_t k);

/// Two K_k (vertices 0..k-1 and k..2k-1) joined through the degree-two
/// vertex 2k, which is adjacent to k-1 and k. Order 2k+1, requires k >= 3.
Graph extended_barbell_graph(std::size_t k);

/// Star K_{1,n-1} (centre 0) plus the edge 1-2. Requires n >= 3.
Graph un3_graph(std::size_t n);

/// C_k on 0..k-1 with a star glued at cycle vertex k-1: vertex k is the star
/// centre and k+1..n-1 its remaining leaves. Requires k >= 3, n >= k+2.
Graph hkn_graph(std::size_t n, std::size_t k);

/// Threshold graph from a creation string over {'i','d'} starting at K_1;
/// 'i' appends an isolated vertex, 'd' a dominating one.
Graph threshold_graph(std::string_view creation);

/// Dispatcher used by the CLI. Recognised keys: n, k, a, b, seq.
Graph generate_family(Family family, const std::map<std::string, std::string>& params);

}  // namespace sqe
