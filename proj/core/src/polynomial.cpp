#include "sqenergy/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace sqe {

double poly_eval(std::span<const double> coeffs, double x) {
  double acc = 0.0;
  for (std::size_t k = coeffs.size(); k-- > 0;) acc = acc * x + coeffs[k];
  return acc;
}

namespace {

double magnitude_at(std::span<const double> coeffs, double x) {
  double acc = 0.0;
  const double ax = std::abs(x);
  for (std::size_t k = coeffs.size(); k-- > 0;) acc = acc * ax + std::abs(coeffs[k]);
  return acc;
}

double bisect(std::span<const double> c, double lo, double hi) {
  double flo = poly_eval(c, lo);
  for (int it = 0; it < 300; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double fm = poly_eval(c, mid);
    if (fm == 0.0) return mid;
    if ((fm < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

std::vector<double> real_roots(std::span<const double> coeffs_in) {
  std::vector<double> c(coeffs_in.begin(), coeffs_in.end());
  while (!c.empty() && c.back() == 0.0) c.pop_back();
  if (c.size() <= 1) return {};
  const double lead = c.back();
  for (double& x : c) x /= lead;
  const std::size_t d = c.size() - 1;
  if (d == 1) return {-c[0]};

  double bound = 0.0;
  for (std::size_t k = 0; k < d; ++k) bound = std::max(bound, std::abs(c[k]));
  bound += 1.0;

  std::vector<double> deriv(d);
  for (std::size_t k = 1; k <= d; ++k) deriv[k - 1] = c[k] * static_cast<double>(k);
  const auto crit_all = real_roots(deriv);

  // Distinct critical points (descending) with their multiplicity in p'.
  std::vector<std::pair<double, std::size_t>> crit;
  for (double r : crit_all) {
    if (!crit.empty() && std::abs(crit.back().first - r) <= 1e-9 * (1.0 + std::abs(r))) {
      ++crit.back().second;
    } else {
      crit.emplace_back(r, 1);
    }
  }

  std::vector<double> roots;
  std::vector<bool> is_root(crit.size(), false);
  for (std::size_t i = 0; i < crit.size(); ++i) {
    const double x = crit[i].first;
    if (std::abs(poly_eval(c, x)) <= 1e-10 * magnitude_at(c, x)) {
      is_root[i] = true;
      roots.insert(roots.end(), crit[i].second + 1, x);
    }
  }

  // Between consecutive critical points p is monotone: at most one root.
  std::vector<double> pts{bound};
  for (const auto& [x, m] : crit) pts.push_back(x);
  pts.push_back(-bound);
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const bool hi_root = i > 0 && is_root[i - 1];
    const bool lo_root = i < crit.size() && is_root[i];
    if (hi_root || lo_root) continue;
    const double hi = pts[i];
    const double lo = pts[i + 1];
    const double fhi = poly_eval(c, hi);
    const double flo = poly_eval(c, lo);
    if (fhi == 0.0) {
      roots.push_back(hi);
    } else if ((fhi < 0.0) != (flo < 0.0)) {
      roots.push_back(bisect(c, lo, hi));
    }
  }
  std::sort(roots.begin(), roots.end(), std::greater<>());
  return roots;
}

}  // namespace sqe
