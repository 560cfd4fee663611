#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "sqenergy/graph.hpp"
#include "sqenergy/spectral.hpp"

namespace sqe {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

// Graphs above this order are refused by the exact path.
inline constexpr std::size_t kExactCharPolyMaxOrder = 64;

/// Exact integer polynomial, coefficients in ascending degree order.
struct IntPolynomial {
  std::vector<BigInt> coeffs;

  std::size_t degree() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
  const BigInt& coefficient(std::size_t k) const { return coeffs.at(k); }

  BigRational evaluate(const BigRational& x) const;
  BigInt evaluate(const BigInt& x) const;

  /// Multiplicity of `root` as a root, by repeated exact synthetic division.
  std::size_t root_multiplicity(const BigInt& root) const;
  // Number of trailing zero coefficients.
  std::size_t zero_multiplicity() const;

  std::vector<double> to_double() const;
  std::string to_string() const;

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;
};

IntPolynomial multiply(const IntPolynomial& a, const IntPolynomial& b);

/// det(xI - M) for a square integer matrix (row-major) by Faddeev-LeVerrier
/// over arbitrary-precision integers. The divisions by k are exact.
IntPolynomial char_poly_exact(std::span<const std::int64_t> m, std::size_t n);

/// det(xI - A(G)). DomainError when order() > kExactCharPolyMaxOrder.
IntPolynomial char_poly_exact(const Graph& g);

struct RankResult {
  std::size_t rank = 0;
  bool exact = false;    // false: counted from the tolerance-classified spectrum
  bool fragile = false;  // only set on the fallback path
};

RankResult rank_exact(const Graph& g);

/// Inertia of a real-rooted polynomial via Descartes' rule of signs (exact for
/// characteristic polynomials of symmetric matrices).
Inertia exact_inertia(const IntPolynomial& p);

}  // namespace sqe
