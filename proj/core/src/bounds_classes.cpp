#include <algorithm>
#include <cmath>

#include "sqenergy/bounds.hpp"
#include "sqenergy/errors.hpp"
#include "sqenergy/families.hpp"
#include "sqenergy/operations.hpp"
#include "sqenergy/polynomial.hpp"
#include "sqenergy/structure.hpp"

namespace sqe {

namespace {

IntPolynomial from_coeffs(std::initializer_list<long long> c) {
  IntPolynomial p;
  for (long long x : c) p.coeffs.emplace_back(x);
  return p;
}

bool is_clique(const Graph& g, std::span<const Vertex> s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (!g.adjacent(s[i], s[j])) return false;
    }
  }
  return true;
}

}  // namespace

ExtendedBarbellClosedForm extended_barbell_closed_form(std::size_t k) {
  if (k < 3) throw DomainError("extended_barbell_closed_form: requires k >= 3, got k = " + std::to_string(k));
  ExtendedBarbellClosedForm r;
  r.k = k;
  r.n = 2 * k + 1;
  const auto kk = static_cast<long long>(k);
  r.f = from_coeffs({2 * (kk - 2), -(1 + kk), -(kk - 2), 1});
  const auto fd = r.f.to_double();
  r.mu = real_roots(fd);

  std::vector<double> values{static_cast<double>(k - 1)};
  values.insert(values.end(), r.n - 4, -1.0);
  values.insert(values.end(), r.mu.begin(), r.mu.end());
  r.spectrum = make_spectrum(std::move(values));
  const auto prof = energy_profile(r.spectrum);
  r.s_plus = prof.s_plus;
  r.s_minus = prof.s_minus;

  r.f_at_k_minus_1 = r.f.evaluate(BigRational(kk - 1));
  r.f_at_minus_1 = r.f.evaluate(BigRational(-1));
  r.f_at_minus_9_5 = r.f.evaluate(BigRational(-9, 5));

  const double km1 = static_cast<double>(k - 1);
  r.ordering_ok = r.mu.size() == 3 && r.mu[0] > km1 && km1 > r.mu[1] && r.mu[1] > -1.0 && -1.0 > r.mu[2] &&
                  r.mu[2] < -1.8;

  const auto g = extended_barbell_graph(k);
  const auto dense = eigenvalues(g);
  for (std::size_t i = 0; i < r.n; ++i) {
    r.dense_max_diff = std::max(r.dense_max_diff, std::abs(dense.values[i] - r.spectrum.values[i]));
  }
  if (r.n <= kExactCharPolyMaxOrder) {
    const auto p = char_poly_exact(g);
    r.exact_minus_one_multiplicity = p.root_multiplicity(BigInt(-1));
    r.exact_k_minus_1_multiplicity = p.root_multiplicity(BigInt(kk - 1));
  }
  const double km1sq = km1 * km1;
  r.conclusive = r.s_plus > 2.0 * km1sq && r.s_minus > static_cast<double>(r.n - 1);
  return r;
}

std::optional<std::size_t> detect_extended_barbell(const Graph& g) {
  const std::size_t n = g.order();
  if (n < 7 || n % 2 == 0) return std::nullopt;
  const std::size_t k = (n - 1) / 2;
  if (g.size() != k * (k - 1) + 2) return std::nullopt;
  for (Vertex mid = 0; mid < n; ++mid) {
    if (g.degree(mid) != 2) continue;
    const auto nb = g.neighbors(mid);
    if (g.adjacent(nb[0], nb[1])) continue;
    const std::vector<Vertex> drop{mid};
    const auto rest = delete_vertices(g, drop);
    const auto comps = connected_components(rest.graph);
    if (comps.size() != 2 || comps[0].size() != k || comps[1].size() != k) continue;
    if (is_clique(rest.graph, comps[0]) && is_clique(rest.graph, comps[1])) return k;
  }
  return std::nullopt;
}

std::optional<BoundCertificate> check_extended_barbell(const Graph& g) {
  const auto k = detect_extended_barbell(g);
  if (!k) return std::nullopt;
  BoundCertificate c;
  c.rule = Rule::kExtendedBarbell;
  c.target = Target::kBoth;
  c.n = g.order();
  const double km1 = static_cast<double>(*k - 1);
  const double s_plus_lower = 2.0 * km1 * km1;
  // -1 with multiplicity n-4 and mu_3 < -9/5.
  const double s_minus_lower = static_cast<double>(c.n - 4) + 81.0 / 25.0;
  c.bound_value = std::min(s_plus_lower, s_minus_lower);
  c.witness.values.emplace_back("k", static_cast<double>(*k));
  c.witness.values.emplace_back("s_plus_lower", s_plus_lower);
  c.witness.values.emplace_back("s_minus_lower", s_minus_lower);
  return finish(std::move(c));
}

H3nQuotientAnalysis h3n_quotient_analysis(std::size_t n) {
  if (n < 5) throw DomainError("h3n_quotient_analysis: requires n >= 5, got n = " + std::to_string(n));
  H3nQuotientAnalysis r;
  r.n = n;
  const auto nn = static_cast<long long>(n);
  r.p_b = from_coeffs({2 * (nn - 4), nn - 3, -(nn - 1), -1, 1});
  r.mu = real_roots(r.p_b.to_double());
  if (r.mu.size() != 4) throw NumericalError("h3n_quotient_analysis: expected four real roots");
  r.s_minus_gap = r.mu[2] * r.mu[2] + r.mu[3] * r.mu[3] - static_cast<double>(n - 2);
  return r;
}

}  // namespace sqe
