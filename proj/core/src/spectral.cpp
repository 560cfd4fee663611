#include "sqenergy/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>

#include "sqenergy/errors.hpp"
#include "sqenergy/structure.hpp"
#include "sqenergy/symmetric_eigen.hpp"

namespace sqe {

double zero_tolerance(std::size_t n, double lambda1) {
  const double scaled =
      static_cast<double>(n) * std::numeric_limits<double>::epsilon() * std::max(1.0, lambda1);
  return std::max(1e-9, scaled);
}

Spectrum make_spectrum(std::vector<double> values) {
  std::sort(values.begin(), values.end(), std::greater<>());
  Spectrum s;
  s.zero_tol = zero_tolerance(values.size(), values.empty() ? 0.0 : values.front());
  s.values = std::move(values);
  return s;
}

Spectrum eigenvalues(const Graph& g) {
  return make_spectrum(symmetric_eigenvalues(g.adjacency_matrix(), g.order()));
}

Inertia inertia_of(const Spectrum& spec) {
  Inertia in;
  for (double x : spec.values) {
    if (x > spec.zero_tol) {
      ++in.positive;
    } else if (x < -spec.zero_tol) {
      ++in.negative;
    } else {
      ++in.zero;
    }
  }
  return in;
}

EnergyProfile energy_profile(const Spectrum& spec) {
  EnergyProfile p;
  p.inertia = inertia_of(spec);
  for (double x : spec.values) {
    const double a = std::abs(x);
    if (a > spec.zero_tol && a <= 10.0 * spec.zero_tol) p.fragile = true;
    if (x > spec.zero_tol) {
      p.s_plus += x * x;
      p.energy += x;
    } else if (x < -spec.zero_tol) {
      p.s_minus += x * x;
      p.energy -= x;
    }
  }
  return p;
}

namespace {

void multiply(const Graph& g, const std::vector<double>& x, std::vector<double>& y) {
  for (Vertex i = 0; i < g.order(); ++i) {
    double s = 0.0;
    for (Vertex j : g.neighbors(i)) s += x[j];
    y[i] = s;
  }
}

double norm2(const std::vector<double>& x) {
  return std::sqrt(std::inner_product(x.begin(), x.end(), x.begin(), 0.0));
}

// Solves (A - shift I) y = b by Gaussian elimination with partial pivoting.
std::vector<double> shifted_solve(const Graph& g, double shift, std::vector<double> b) {
  const std::size_t n = g.order();
  std::vector<double> m = g.adjacency_matrix();
  for (std::size_t i = 0; i < n; ++i) m[i * n + i] -= shift;
  const double tiny = 1e-300;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (std::abs(m[r * n + col]) > std::abs(m[piv * n + col])) piv = r;
    }
    if (piv != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(m[col * n + c], m[piv * n + c]);
      std::swap(b[col], b[piv]);
    }
    if (std::abs(m[col * n + col]) < tiny) m[col * n + col] = tiny;
    for (std::size_t r = col + 1; r < n; ++r) {
      const double f = m[r * n + col] / m[col * n + col];
      if (f == 0.0) continue;
      for (std::size_t c = col; c < n; ++c) m[r * n + c] -= f * m[col * n + c];
      b[r] -= f * b[col];
    }
  }
  std::vector<double> y(n, 0.0);
  for (std::size_t i = n; i-- > 0;) {
    double s = b[i];
    for (std::size_t c = i + 1; c < n; ++c) s -= m[i * n + c] * y[c];
    y[i] = s / m[i * n + i];
  }
  return y;
}

}  // namespace

std::vector<double> perron_vector(const Graph& g) {
  if (g.size() == 0) throw DomainError("perron_vector: graph has no edges");
  if (!is_connected(g)) throw DomainError("perron_vector: graph is not connected");

  const std::size_t n = g.order();
  std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n)));
  std::vector<double> ax(n);
  constexpr double kTol = 1e-12;
  constexpr int kPowerSteps = 5000;

  auto residual = [&](double& rho) {
    multiply(g, x, ax);
    rho = std::inner_product(x.begin(), x.end(), ax.begin(), 0.0);
    double r = 0.0;
    for (std::size_t i = 0; i < n; ++i) r = std::max(r, std::abs(ax[i] - rho * x[i]));
    return r;
  };

  double rho = 0.0;
  bool converged = false;
  for (int step = 0; step < kPowerSteps; ++step) {
    if (residual(rho) <= kTol * rho) {
      converged = true;
      break;
    }
    // (A + I) x keeps the iteration away from the -rho eigenvalue of bipartite graphs.
    for (std::size_t i = 0; i < n; ++i) ax[i] += x[i];
    const double nrm = norm2(ax);
    for (std::size_t i = 0; i < n; ++i) x[i] = ax[i] / nrm;
  }
  // Small spectral gap: finish with inverse iteration at the Rayleigh quotient.
  for (int step = 0; !converged && step < 8; ++step) {
    auto y = shifted_solve(g, rho * (1.0 + 1e-14) + 1e-14, x);
    const double nrm = norm2(y);
    double sign = std::accumulate(y.begin(), y.end(), 0.0) < 0.0 ? -1.0 : 1.0;
    for (std::size_t i = 0; i < n; ++i) x[i] = sign * y[i] / nrm;
    converged = residual(rho) <= kTol * rho;
  }
  if (!converged) throw NumericalError("perron_vector: iteration did not converge");
  for (double v : x) {
    if (!(v > 0.0)) throw NumericalError("perron_vector: non-positive entry in Perron vector");
  }
  return x;
}

}  // namespace sqe
