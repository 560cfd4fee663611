#pragma once

// Reference implementations used only by the tests. They share no code with
// the library beyond the Graph container.

#include <cstdint>
#include <random>
#include <vector>

#include "sqenergy/charpoly.hpp"
#include "sqenergy/graph.hpp"

namespace sqe::oracle {

// Eigen's SelfAdjointEigenSolver, non-increasing.
std::vector<double> eigen_spectrum(const Graph& g);
std::vector<double> eigen_spectrum(const std::vector<double>& a, std::size_t n);

struct Squares {
  double plus = 0.0;
  double minus = 0.0;
};
Squares squares(const std::vector<double>& spectrum, double tol = 1e-9);

// det(M) by fraction-free Bareiss elimination.
BigInt bareiss_det(std::vector<BigInt> m, std::size_t n);

// Exhaustive isomorphism test over all n! bijections.
bool brute_isomorphic(const Graph& a, const Graph& b);

// G(n, p) with a fixed engine.
Graph random_graph(std::size_t n, double p, std::mt19937_64& rng);
// Retries until connected (n >= 1).
Graph random_connected(std::size_t n, double p, std::mt19937_64& rng);
Graph random_permutation_of(const Graph& g, std::mt19937_64& rng);

}  // namespace sqe::oracle
