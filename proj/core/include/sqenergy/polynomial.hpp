#pragma once

#include <span>
#include <vector>

namespace sqe {

/// Evaluates sum c[k] x^k.
double poly_eval(std::span<const double> coeffs, double x);

/// Real roots (non-increasing) of a polynomial whose roots are all real,
/// coefficients ascending. Roots of the derivative bracket the roots, which
/// are then located by bisection; a repeated root shows up as a derivative
/// root with a near-zero value and is reported with its multiplicity.
std::vector<double> real_roots(std::span<const double> coeffs);

}  // namespace sqe
