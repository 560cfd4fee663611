#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "sqenergy/graph.hpp"

namespace sqe {

inline constexpr std::size_t kMaxConnectedOrder = 10;
inline constexpr std::size_t kMaxUnicyclicOrder = 14;
inline constexpr std::size_t kMaxUnicyclicOrderExtended = 18;

using GraphSink = std::function<void(const Graph&)>;

/// One canonically labelled representative per isomorphism class of
/// connected graphs on n vertices (1 <= n <= 10), in a fixed order.
/// Canonical augmentation: a child of P is kept when a canonically chosen
/// minimum-degree non-cut vertex deletes back to P, then siblings are
/// deduplicated.
void enumerate_connected(std::size_t n, const GraphSink& sink);
std::vector<Graph> connected_graphs(std::size_t n);

/// Connected unicyclic graphs on n vertices whose cycle is odd, one per
/// isomorphism class. 3 <= n <= 14, or up to 18 with `extended`.
/// Built as an odd cycle with a rooted tree hanging from each cycle vertex;
/// tree sequences are kept when lexicographically least under rotation and
/// reflection.
void enumerate_unicyclic_nonbipartite(std::size_t n, const GraphSink& sink, bool extended = false);
std::vector<Graph> unicyclic_nonbipartite_graphs(std::size_t n, bool extended = false);

/// Number of rooted unlabelled trees on s vertices (s >= 1), from the same
/// generator the unicyclic enumeration uses.
std::size_t rooted_tree_count(std::size_t s);

}  // namespace sqe
