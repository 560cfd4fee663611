#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "sqenergy/graph.hpp"

namespace sqe {

struct GraphStats {
  std::size_t n = 0;
  std::size_t m = 0;
  double avg_degree = 0.0;
  std::size_t max_degree = 0;
  bool connected = false;
  bool bipartite = false;
  // Colour 0/1 per vertex; present iff bipartite.
  std::optional<std::vector<std::uint8_t>> bipartition;
};

GraphStats stats(const Graph& g);

// The empty graph and K_1 count as connected.
bool is_connected(const Graph& g);
std::optional<std::vector<std::uint8_t>> two_coloring(const Graph& g);
inline bool is_bipartite(const Graph& g) { return two_coloring(g).has_value(); }

std::vector<std::vector<Vertex>> connected_components(const Graph& g);

// Sorted list of cut vertices.
std::vector<Vertex> articulation_points(const Graph& g);

// Vertices adjacent to every other vertex.
std::vector<Vertex> dominating_vertices(const Graph& g);

struct CactusProfile {
  bool is_cactus = false;
  // Each cycle as its vertices in cyclic order, starting at the smallest.
  std::vector<std::vector<Vertex>> cycles;
  std::size_t odd_count = 0;
  std::size_t even_count = 0;
};

/// Requires a connected graph (DomainError otherwise). When the graph is not
/// a cactus `cycles` is empty.
CactusProfile cactus_profile(const Graph& g);

/// Exactly one cycle. Returns the cycle's vertices in order when g is
/// connected unicyclic.
std::optional<std::vector<Vertex>> unicyclic_cycle(const Graph& g);

}  // namespace sqe
