#include "sqenergy/charpoly.hpp"

#include <sstream>

#include "sqenergy/errors.hpp"

namespace sqe {

namespace {

// Faddeev-LeVerrier: M_1 = I, c_{n-k} = -tr(A M_k) / k, M_{k+1} = A M_k + c_{n-k} I.
// `times_a(src, dst)` must write A * src into dst (both n x n, row-major).
template <class TimesA>
IntPolynomial faddeev_leverrier(std::size_t n, TimesA&& times_a) {
  IntPolynomial p;
  p.coeffs.assign(n + 1, BigInt(0));
  p.coeffs[n] = 1;
  std::vector<BigInt> mk(n * n, BigInt(0));
  for (std::size_t i = 0; i < n; ++i) mk[i * n + i] = 1;
  std::vector<BigInt> amk(n * n, BigInt(0));
  for (std::size_t k = 1; k <= n; ++k) {
    times_a(mk, amk);
    BigInt trace = 0;
    for (std::size_t i = 0; i < n; ++i) trace += amk[i * n + i];
    BigInt q, r;
    boost::multiprecision::divide_qr(trace, BigInt(k), q, r);
    if (r != 0) throw NumericalError("Faddeev-LeVerrier: inexact division (matrix not integral?)");
    const BigInt c = -q;
    p.coeffs[n - k] = c;
    if (k == n) break;
    mk.swap(amk);
    for (std::size_t i = 0; i < n; ++i) mk[i * n + i] += c;
  }
  return p;
}

}  // namespace

BigRational IntPolynomial::evaluate(const BigRational& x) const {
  BigRational acc = 0;
  for (std::size_t k = coeffs.size(); k-- > 0;) acc = acc * x + BigRational(coeffs[k]);
  return acc;
}

BigInt IntPolynomial::evaluate(const BigInt& x) const {
  BigInt acc = 0;
  for (std::size_t k = coeffs.size(); k-- > 0;) acc = acc * x + coeffs[k];
  return acc;
}

std::size_t IntPolynomial::root_multiplicity(const BigInt& root) const {
  std::vector<BigInt> c = coeffs;
  std::size_t mult = 0;
  while (c.size() > 1) {
    // Synthetic division by (x - root), highest degree first.
    std::vector<BigInt> q(c.size() - 1);
    BigInt carry = 0;
    for (std::size_t k = c.size(); k-- > 1;) {
      carry = carry * root + c[k];
      q[k - 1] = carry;
    }
    const BigInt rem = carry * root + c[0];
    if (rem != 0) break;
    ++mult;
    c = std::move(q);
  }
  return mult;
}

std::size_t IntPolynomial::zero_multiplicity() const {
  std::size_t k = 0;
  while (k < coeffs.size() && coeffs[k] == 0) ++k;
  return k;
}

std::vector<double> IntPolynomial::to_double() const {
  std::vector<double> out;
  out.reserve(coeffs.size());
  for (const auto& c : coeffs) out.push_back(c.convert_to<double>());
  return out;
}

std::string IntPolynomial::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    const BigInt& c = coeffs[k];
    if (c == 0) continue;
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (mag != 1 || k == 0) os << mag;
    if (k >= 1) os << 'x';
    if (k >= 2) os << '^' << k;
    first = false;
  }
  if (first) os << '0';
  return os.str();
}

IntPolynomial multiply(const IntPolynomial& a, const IntPolynomial& b) {
  IntPolynomial r;
  if (a.coeffs.empty() || b.coeffs.empty()) return r;
  r.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs.size(); ++j) r.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
  }
  return r;
}

IntPolynomial char_poly_exact(std::span<const std::int64_t> m, std::size_t n) {
  if (m.size() != n * n) throw DomainError("char_poly_exact: matrix size mismatch");
  return faddeev_leverrier(n, [&](const std::vector<BigInt>& src, std::vector<BigInt>& dst) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        BigInt s = 0;
        for (std::size_t k = 0; k < n; ++k) {
          if (m[i * n + k] != 0) s += src[k * n + j] * m[i * n + k];
        }
        dst[i * n + j] = s;
      }
    }
  });
}

IntPolynomial char_poly_exact(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kExactCharPolyMaxOrder) {
    throw DomainError("char_poly_exact: order " + std::to_string(n) + " exceeds the exact-path cap of " +
                      std::to_string(kExactCharPolyMaxOrder));
  }
  std::vector<std::vector<Vertex>> nbrs(n);
  for (Vertex v = 0; v < n; ++v) nbrs[v] = g.neighbors(v);
  return faddeev_leverrier(n, [&](const std::vector<BigInt>& src, std::vector<BigInt>& dst) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) dst[i * n + j] = 0;
      for (Vertex k : nbrs[i]) {
        for (std::size_t j = 0; j < n; ++j) dst[i * n + j] += src[k * n + j];
      }
    }
  });
}

RankResult rank_exact(const Graph& g) {
  RankResult r;
  if (g.order() <= kExactCharPolyMaxOrder) {
    r.rank = g.order() - char_poly_exact(g).zero_multiplicity();
    r.exact = true;
    return r;
  }
  const auto profile = energy_profile(eigenvalues(g));
  r.rank = profile.inertia.positive + profile.inertia.negative;
  r.fragile = profile.fragile;
  return r;
}

Inertia exact_inertia(const IntPolynomial& p) {
  auto sign_changes = [](const std::vector<BigInt>& c) {
    std::size_t changes = 0;
    int last = 0;
    for (const auto& x : c) {
      const int s = x.sign();
      if (s == 0) continue;
      if (last != 0 && s != last) ++changes;
      last = s;
    }
    return changes;
  };
  Inertia in;
  in.zero = p.zero_multiplicity();
  in.positive = sign_changes(p.coeffs);
  std::vector<BigInt> neg = p.coeffs;
  for (std::size_t k = 1; k < neg.size(); k += 2) neg[k] = -neg[k];
  in.negative = sign_changes(neg);
  return in;
}

}  // namespace sqe
