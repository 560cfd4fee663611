#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace sqe {

using Vertex = std::uint32_t;

// Undirected edge, always stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  static Edge make(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

class GraphBuilder;

/// Simple undirected graph on vertices 0..n-1.
///
/// Adjacency rows are packed bitsets of `words_per_row()` 64-bit words; for
/// n <= 64 every row is a single word, which is what the enumeration and
/// canonical-form code relies on. Graph values are immutable; use
/// GraphBuilder or the free functions in operations.hpp to derive new graphs.
class Graph {
 public:
  Graph() = default;

  /// Edgeless graph on n vertices.
  explicit Graph(std::size_t n);

  /// Throws DomainError on loops, out-of-range endpoints or repeated edges.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);
  static Graph from_edges(std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> edges);

  std::size_t order() const noexcept { return n_; }
  std::size_t size() const noexcept { return m_; }
  std::size_t words_per_row() const noexcept { return words_; }

  bool adjacent(Vertex a, Vertex b) const noexcept {
    return (rows_[a * words_ + (b >> 6)] >> (b & 63)) & 1U;
  }
  std::size_t degree(Vertex v) const noexcept;
  std::span<const std::uint64_t> row(Vertex v) const noexcept {
    return {rows_.data() + v * words_, words_};
  }
  // Single-word neighbourhood mask; only meaningful when order() <= 64.
  std::uint64_t mask(Vertex v) const noexcept { return rows_[v * words_]; }

  std::vector<Vertex> neighbors(Vertex v) const;
  std::vector<Edge> edges() const;
  std::size_t max_degree() const noexcept;

  // Row-major dense 0/1 adjacency matrix.
  std::vector<double> adjacency_matrix() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.rows_ == b.rows_;
  }

 private:
  friend class GraphBuilder;

  std::size_t n_ = 0;
  std::size_t m_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> rows_;
};

/// Mutable staging area for constructing a Graph.
class GraphBuilder {
 public:
  explicit GraphBuilder(std::size_t n);
  explicit GraphBuilder(const Graph& g);

  std::size_t order() const noexcept { return n_; }
  bool adjacent(Vertex a, Vertex b) const noexcept {
    return (rows_[a * words_ + (b >> 6)] >> (b & 63)) & 1U;
  }

  // Both return false (and change nothing) when the edge is already
  // present / absent. Loops and out-of-range vertices throw DomainError.
  bool add_edge(Vertex a, Vertex b);
  bool remove_edge(Vertex a, Vertex b);

  Graph build() &&;
  Graph build() const&;

 private:
  void check(Vertex a, Vertex b) const;

  std::size_t n_;
  std::size_t m_ = 0;
  std::size_t words_;
  std::vector<std::uint64_t> rows_;
};

/// Sorted vertex list -> "0,3,5" for diagnostics.
std::string to_string(std::span<const Vertex> vs);

}  // namespace sqe
