#pragma once

#include <span>
#include <vector>

#include "sqenergy/graph.hpp"

namespace sqe {

// Vertices of g keep their labels, h's are shifted by |V(g)|.
Graph join(const Graph& g, const Graph& h);
Graph disjoint_union(const Graph& g, const Graph& h);

// (i, j) is vertex i * |V(h)| + j.
Graph kronecker(const Graph& g, const Graph& h);

Graph complement(const Graph& g);

/// Moves the edges v-w (w in moved) to u-w. Requires u != v and
/// moved ⊆ N(v) \ (N(u) ∪ {u}); violations throw DomainError naming the vertex.
Graph move_neighbors(const Graph& g, Vertex u, Vertex v, std::span<const Vertex> moved);

Graph delete_edge(const Graph& g, Edge e);
Graph add_edge(const Graph& g, Edge e);

// New vertex n is attached to v.
Graph add_leaf(const Graph& g, Vertex v);

struct InducedSubgraph {
  Graph graph;
  // original_of[i] is the vertex of the parent graph that became vertex i.
  std::vector<Vertex> original_of;
};

/// Vertices of `keep` are relabelled 0..|keep|-1 in ascending order.
InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> keep);

// Induced subgraph on V \ removed.
InducedSubgraph delete_vertices(const Graph& g, std::span<const Vertex> removed);

/// Applies `label[v]` as the new name of v (label must be a permutation).
Graph relabel(const Graph& g, std::span<const Vertex> label);

}  // namespace sqe
