#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include <Eigen/Dense>

#include "sqenergy/operations.hpp"
#include "sqenergy/structure.hpp"

namespace sqe::oracle {

std::vector<double> eigen_spectrum(const std::vector<double>& a, std::size_t n) {
  Eigen::MatrixXd m(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = a[i * n + j];
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
  std::vector<double> out(es.eigenvalues().data(), es.eigenvalues().data() + n);
  std::sort(out.rbegin(), out.rend());
  return out;
}

std::vector<double> eigen_spectrum(const Graph& g) {
  if (g.order() == 0) return {};
  return eigen_spectrum(g.adjacency_matrix(), g.order());
}

Squares squares(const std::vector<double>& spectrum, double tol) {
  Squares s;
  for (double x : spectrum) {
    if (x > tol) s.plus += x * x;
    if (x < -tol) s.minus += x * x;
  }
  return s;
}

BigInt bareiss_det(std::vector<BigInt> m, std::size_t n) {
  if (n == 0) return 1;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k * n + k] == 0) {
      std::size_t r = k + 1;
      while (r < n && m[r * n + k] == 0) ++r;
      if (r == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m[k * n + j], m[r * n + j]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i * n + j] = (m[i * n + j] * m[k * n + k] - m[i * n + k] * m[k * n + j]) / prev;
      }
    }
    prev = m[k * n + k];
  }
  return sign * m[n * n - 1];
}

bool brute_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  const std::size_t n = a.order();
  std::vector<Vertex> p(n);
  std::iota(p.begin(), p.end(), Vertex{0});
  do {
    bool ok = true;
    for (Vertex u = 0; u < n && ok; ++u) {
      for (Vertex v = u + 1; v < n && ok; ++v) ok = a.adjacent(u, v) == b.adjacent(p[u], p[v]);
    }
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

Graph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (coin(rng)) b.add_edge(u, v);
    }
  }
  return std::move(b).build();
}

Graph random_connected(std::size_t n, double p, std::mt19937_64& rng) {
  for (;;) {
    Graph g = random_graph(n, p, rng);
    if (is_connected(g)) return g;
  }
}

Graph random_permutation_of(const Graph& g, std::mt19937_64& rng) {
  std::vector<Vertex> label(g.order());
  std::iota(label.begin(), label.end(), Vertex{0});
  std::shuffle(label.begin(), label.end(), rng);
  return relabel(g, label);
}

}  // namespace sqe::oracle
