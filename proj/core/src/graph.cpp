#include "sqenergy/graph.hpp"

#include <algorithm>
#include <sstream>

#include "sqenergy/errors.hpp"

namespace sqe {

namespace {

std::size_t words_for(std::size_t n) { return (n + 63) / 64; }

}  // namespace

Graph::Graph(std::size_t n) : n_(n), words_(words_for(n)), rows_(n * words_for(n), 0) {}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  GraphBuilder b(n);
  for (const Edge& e : edges) {
    if (!b.add_edge(e.u, e.v)) {
      throw DomainError("duplicate edge " + std::to_string(e.u) + "-" + std::to_string(e.v));
    }
  }
  return std::move(b).build();
}

Graph Graph::from_edges(std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> edges) {
  std::vector<Edge> es;
  es.reserve(edges.size());
  for (auto [a, b] : edges) es.push_back(Edge::make(a, b));
  return from_edges(n, es);
}

std::size_t Graph::degree(Vertex v) const noexcept {
  std::size_t d = 0;
  for (std::uint64_t w : row(v)) d += static_cast<std::size_t>(std::popcount(w));
  return d;
}

std::size_t Graph::max_degree() const noexcept {
  std::size_t best = 0;
  for (Vertex v = 0; v < n_; ++v) best = std::max(best, degree(v));
  return best;
}

std::vector<Vertex> Graph::neighbors(Vertex v) const {
  std::vector<Vertex> out;
  auto r = row(v);
  for (std::size_t w = 0; w < r.size(); ++w) {
    std::uint64_t bits = r[w];
    while (bits) {
      out.push_back(static_cast<Vertex>(w * 64 + std::countr_zero(bits)));
      bits &= bits - 1;
    }
  }
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex a = 0; a < n_; ++a) {
    for (Vertex b : neighbors(a)) {
      if (a < b) out.push_back({a, b});
    }
  }
  return out;
}

std::vector<double> Graph::adjacency_matrix() const {
  std::vector<double> a(n_ * n_, 0.0);
  for (Vertex i = 0; i < n_; ++i) {
    for (Vertex j : neighbors(i)) a[i * n_ + j] = 1.0;
  }
  return a;
}

GraphBuilder::GraphBuilder(std::size_t n) : n_(n), words_(words_for(n)), rows_(n * words_for(n), 0) {}

GraphBuilder::GraphBuilder(const Graph& g) : n_(g.n_), m_(g.m_), words_(g.words_), rows_(g.rows_) {}

void GraphBuilder::check(Vertex a, Vertex b) const {
  if (a >= n_ || b >= n_) {
    throw DomainError("vertex out of range: edge " + std::to_string(a) + "-" + std::to_string(b) +
                      " in a graph of order " + std::to_string(n_));
  }
  if (a == b) throw DomainError("self-loop at vertex " + std::to_string(a));
}

bool GraphBuilder::add_edge(Vertex a, Vertex b) {
  check(a, b);
  if (adjacent(a, b)) return false;
  rows_[a * words_ + (b >> 6)] |= std::uint64_t{1} << (b & 63);
  rows_[b * words_ + (a >> 6)] |= std::uint64_t{1} << (a & 63);
  ++m_;
  return true;
}

bool GraphBuilder::remove_edge(Vertex a, Vertex b) {
  check(a, b);
  if (!adjacent(a, b)) return false;
  rows_[a * words_ + (b >> 6)] &= ~(std::uint64_t{1} << (b & 63));
  rows_[b * words_ + (a >> 6)] &= ~(std::uint64_t{1} << (a & 63));
  --m_;
  return true;
}

Graph GraphBuilder::build() && {
  Graph g;
  g.n_ = n_;
  g.m_ = m_;
  g.words_ = words_;
  g.rows_ = std::move(rows_);
  return g;
}

Graph GraphBuilder::build() const& {
  GraphBuilder copy(*this);
  return std::move(copy).build();
}

std::string to_string(std::span<const Vertex> vs) {
  std::ostringstream os;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) os << ',';
    os << vs[i];
  }
  return os.str();
}

}  // namespace sqe
