#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "sqenergy/graph.hpp"

namespace sqe {

// Canonical labelling is implemented for graphs of at most this order.
inline constexpr std::size_t kCanonicalMaxOrder = 64;

struct CanonicalLabelling {
  // label[v] is the canonical position of vertex v.
  std::vector<Vertex> label;
  // Row i is the neighbourhood mask of the vertex labelled i, after relabelling.
  std::vector<std::uint64_t> key;
};

/// Individualisation-refinement search for the labelling whose relabelled
/// adjacency rows are lexicographically largest. Twin transpositions and
/// automorphisms found at equal leaves prune the search tree.
/// DomainError above kCanonicalMaxOrder.
CanonicalLabelling canonical_labelling(const Graph& g);

Graph canonical_graph(const Graph& g);
std::string canonical_graph6(const Graph& g);
bool isomorphic(const Graph& a, const Graph& b);

}  // namespace sqe
