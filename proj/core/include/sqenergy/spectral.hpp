#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "sqenergy/graph.hpp"

namespace sqe {

/// max(1e-9, n * eps * max(1, lambda_1)).
double zero_tolerance(std::size_t n, double lambda1);

struct Spectrum {
  std::vector<double> values;  // non-increasing
  double zero_tol = 1e-9;

  std::size_t size() const noexcept { return values.size(); }
  double largest() const { return values.front(); }
  double smallest() const { return values.back(); }
};

/// Sorts `values` non-increasing and applies the zero tolerance policy.
Spectrum make_spectrum(std::vector<double> values);

Spectrum eigenvalues(const Graph& g);

struct Inertia {
  std::size_t positive = 0;
  std::size_t zero = 0;
  std::size_t negative = 0;

  friend bool operator==(const Inertia&, const Inertia&) = default;
};

Inertia inertia_of(const Spectrum& spec);

struct EnergyProfile {
  double s_plus = 0.0;
  double s_minus = 0.0;
  double energy = 0.0;
  Inertia inertia;
  // Some |lambda| lies in (zero_tol, 10 * zero_tol]: sign classification is
  // close to the tolerance and should be confirmed exactly.
  bool fragile = false;
};

EnergyProfile energy_profile(const Spectrum& spec);
inline EnergyProfile energy_profile(const Graph& g) { return energy_profile(eigenvalues(g)); }

/// Unit positive eigenvector for lambda_1 of a connected graph with at least
/// one edge. Power iteration on A + I seeded with the all-ones vector, with a
/// Rayleigh-quotient residual test; slow spectral gaps are finished by
/// shifted inverse iteration. DomainError for disconnected or edgeless input.
std::vector<double> perron_vector(const Graph& g);

}  // namespace sqe
