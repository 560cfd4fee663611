#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sqenergy/graph.hpp"
#include "sqenergy/spectral.hpp"

namespace sqe {

/// Ordered list of disjoint, non-empty vertex blocks covering 0..n-1.
/// Vertices inside a block are kept sorted.
class Partition {
 public:
  Partition() = default;

  /// Validates coverage and disjointness; DomainError otherwise.
  static Partition make(std::size_t n, std::vector<std::vector<Vertex>> blocks);
  // Single block {V}.
  static Partition trivial(std::size_t n);
  // "0,1;2;3,4,5" (blocks separated by ';', vertices by ',').
  static Partition parse(std::size_t n, std::string_view text);

  std::size_t order() const noexcept { return n_; }
  std::size_t block_count() const noexcept { return blocks_.size(); }
  const std::vector<std::vector<Vertex>>& blocks() const noexcept { return blocks_; }
  const std::vector<Vertex>& block(std::size_t i) const { return blocks_.at(i); }
  std::size_t block_of(Vertex v) const { return block_of_.at(v); }

  std::string to_string() const;

  friend bool operator==(const Partition& a, const Partition& b) { return a.blocks_ == b.blocks_; }

 private:
  std::size_t n_ = 0;
  std::vector<std::vector<Vertex>> blocks_;
  std::vector<std::size_t> block_of_;
};

struct QuotientMatrix {
  std::size_t p = 0;
  std::vector<double> entries;  // row-major p x p, b_ij = edge_counts_ij / |X_i|
  // Exact number of (ordered) adjacencies from block i into block j.
  std::vector<std::int64_t> edge_counts;
  Partition partition;
  bool equitable = false;

  double at(std::size_t i, std::size_t j) const { return entries[i * p + j]; }
};

QuotientMatrix quotient_matrix(const Graph& g, const Partition& x);

/// Eigenvalues of B. B = D^-1 S^T A S is diagonally similar to a symmetric
/// matrix, so imaginary parts above 1e-9 raise NumericalError.
Spectrum quotient_spectrum(const QuotientMatrix& q);

/// Exact check of A S = S B (as rationals): every vertex of block i has
/// b_ij neighbours in block j. Equivalent to the equitable flag.
bool satisfies_ms_eq_sb(const Graph& g, const QuotientMatrix& q);

/// Colour refinement from `seed`: splits blocks by neighbour-count signature
/// until stable. Blocks of the result are ordered by (size, smallest vertex).
Partition coarsest_equitable_refinement(const Graph& g, const Partition& seed);

bool is_equitable(const Graph& g, const Partition& x);

enum class TwinKind { kIndependent, kAdjacent };

struct TwinClass {
  std::vector<Vertex> vertices;  // sorted, size >= 2
  TwinKind kind = TwinKind::kIndependent;
  double alpha = 0.0;  // 0 for independent, -1 for adjacent twins

  std::size_t multiplicity() const noexcept { return vertices.size() - 1; }
};

/// Maximal twin classes ordered by smallest vertex.
std::vector<TwinClass> find_twins(const Graph& g);

/// If every pair in `block` is a twin pair of one kind, returns that kind.
std::optional<TwinKind> twin_kind_of(const Graph& g, std::span<const Vertex> block);

/// Spectrum assembled from twin eigenvalues and the quotient spectrum. Every
/// non-singleton block must be a twin class (DomainError naming the first
/// offender) and the partition must be equitable.
Spectrum twin_quotient_spectrum(const Graph& g, const Partition& x);

/// Partition whose non-singleton blocks are the maximal twin classes.
Partition twin_partition(const Graph& g);

struct EdgeCutQuotient {
  std::size_t s = 0;  // |S|
  double d1 = 0.0;    // average degree of G[S]
  double d2 = 0.0;    // average degree of G[V \ S]
  std::size_t c = 0;  // edges with exactly one end in S
  double lambda_plus = 0.0;
  double lambda_minus = 0.0;
  double determinant = 0.0;  // d1 d2 - c^2 / (s (n - s))
  int determinant_sign = 0;
  double s_plus_lower = 0.0;
  std::optional<double> s_minus_lower;
};

/// Two-block quotient for the cut (S, V \ S). DomainError for S empty or S = V.
EdgeCutQuotient edge_cut_quotient(const Graph& g, std::span<const Vertex> s);

}  // namespace sqe
