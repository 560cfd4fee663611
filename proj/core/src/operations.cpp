#include "sqenergy/operations.hpp"

#include <algorithm>

#include "sqenergy/errors.hpp"

namespace sqe {

namespace {

void check_vertex(const Graph& g, Vertex v, const char* what) {
  if (v >= g.order()) {
    throw DomainError(std::string(what) + " " + std::to_string(v) + " is not a vertex (order " +
                      std::to_string(g.order()) + ")");
  }
}

}  // namespace

Graph disjoint_union(const Graph& g, const Graph& h) {
  const auto shift = static_cast<Vertex>(g.order());
  GraphBuilder b(g.order() + h.order());
  for (const Edge& e : g.edges()) b.add_edge(e.u, e.v);
  for (const Edge& e : h.edges()) b.add_edge(e.u + shift, e.v + shift);
  return std::move(b).build();
}

Graph join(const Graph& g, const Graph& h) {
  const auto shift = static_cast<Vertex>(g.order());
  GraphBuilder b(GraphBuilder(disjoint_union(g, h)));
  for (Vertex i = 0; i < g.order(); ++i) {
    for (Vertex j = 0; j < h.order(); ++j) b.add_edge(i, j + shift);
  }
  return std::move(b).build();
}

Graph kronecker(const Graph& g, const Graph& h) {
  const std::size_t m = h.order();
  GraphBuilder b(g.order() * m);
  const auto he = h.edges();
  for (const Edge& ge : g.edges()) {
    for (const Edge& e : he) {
      b.add_edge(static_cast<Vertex>(ge.u * m + e.u), static_cast<Vertex>(ge.v * m + e.v));
      b.add_edge(static_cast<Vertex>(ge.u * m + e.v), static_cast<Vertex>(ge.v * m + e.u));
    }
  }
  return std::move(b).build();
}

Graph complement(const Graph& g) {
  GraphBuilder b(g.order());
  for (Vertex i = 0; i < g.order(); ++i) {
    for (Vertex j = i + 1; j < g.order(); ++j) {
      if (!g.adjacent(i, j)) b.add_edge(i, j);
    }
  }
  return std::move(b).build();
}

Graph move_neighbors(const Graph& g, Vertex u, Vertex v, std::span<const Vertex> moved) {
  check_vertex(g, u, "u");
  check_vertex(g, v, "v");
  if (u == v) throw DomainError("move_neighbors: u and v must differ");
  GraphBuilder b(g);
  for (Vertex w : moved) {
    check_vertex(g, w, "moved vertex");
    if (w == u || w == v) throw DomainError("move_neighbors: moved set contains u or v (" + std::to_string(w) + ")");
    if (!g.adjacent(v, w)) {
      throw DomainError("move_neighbors: " + std::to_string(w) + " is not a neighbour of v=" + std::to_string(v));
    }
    if (g.adjacent(u, w)) {
      throw DomainError("move_neighbors: " + std::to_string(w) + " is already a neighbour of u=" + std::to_string(u));
    }
    if (!b.remove_edge(v, w)) throw DomainError("move_neighbors: vertex " + std::to_string(w) + " listed twice");
    b.add_edge(u, w);
  }
  return std::move(b).build();
}

Graph delete_edge(const Graph& g, Edge e) {
  check_vertex(g, e.u, "edge endpoint");
  check_vertex(g, e.v, "edge endpoint");
  GraphBuilder b(g);
  if (e.u == e.v || !b.remove_edge(e.u, e.v)) {
    throw DomainError("delete_edge: " + std::to_string(e.u) + "-" + std::to_string(e.v) + " is not an edge");
  }
  return std::move(b).build();
}

Graph add_edge(const Graph& g, Edge e) {
  GraphBuilder b(g);
  if (!b.add_edge(e.u, e.v)) {
    throw DomainError("add_edge: " + std::to_string(e.u) + "-" + std::to_string(e.v) + " already present");
  }
  return std::move(b).build();
}

Graph add_leaf(const Graph& g, Vertex v) {
  check_vertex(g, v, "leaf anchor");
  GraphBuilder b(g.order() + 1);
  for (const Edge& e : g.edges()) b.add_edge(e.u, e.v);
  b.add_edge(v, static_cast<Vertex>(g.order()));
  return std::move(b).build();
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
  std::vector<Vertex> sorted(keep.begin(), keep.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw DomainError("induced_subgraph: repeated vertex in selection");
  }
  for (Vertex v : sorted) check_vertex(g, v, "selected vertex");
  GraphBuilder b(sorted.size());
  for (Vertex i = 0; i < sorted.size(); ++i) {
    for (Vertex j = i + 1; j < sorted.size(); ++j) {
      if (g.adjacent(sorted[i], sorted[j])) b.add_edge(i, j);
    }
  }
  return {std::move(b).build(), std::move(sorted)};
}

InducedSubgraph delete_vertices(const Graph& g, std::span<const Vertex> removed) {
  std::vector<bool> gone(g.order(), false);
  for (Vertex v : removed) {
    check_vertex(g, v, "deleted vertex");
    gone[v] = true;
  }
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!gone[v]) keep.push_back(v);
  }
  return induced_subgraph(g, keep);
}

Graph relabel(const Graph& g, std::span<const Vertex> label) {
  if (label.size() != g.order()) throw DomainError("relabel: label size mismatch");
  std::vector<bool> seen(g.order(), false);
  for (Vertex l : label) {
    if (l >= g.order() || seen[l]) throw DomainError("relabel: labels do not form a permutation");
    seen[l] = true;
  }
  GraphBuilder b(g.order());
  for (const Edge& e : g.edges()) b.add_edge(label[e.u], label[e.v]);
  return std::move(b).build();
}

}  // namespace sqe
