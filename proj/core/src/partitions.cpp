#include "sqenergy/partitions.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "sqenergy/errors.hpp"

namespace sqe {

Partition Partition::make(std::size_t n, std::vector<std::vector<Vertex>> blocks) {
  Partition p;
  p.n_ = n;
  p.block_of_.assign(n, static_cast<std::size_t>(-1));
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    auto& b = blocks[i];
    if (b.empty()) throw DomainError("partition: block " + std::to_string(i) + " is empty");
    std::sort(b.begin(), b.end());
    for (Vertex v : b) {
      if (v >= n) throw DomainError("partition: vertex " + std::to_string(v) + " out of range");
      if (p.block_of_[v] != static_cast<std::size_t>(-1)) {
        throw DomainError("partition: vertex " + std::to_string(v) + " appears in more than one block");
      }
      p.block_of_[v] = i;
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (p.block_of_[v] == static_cast<std::size_t>(-1)) {
      throw DomainError("partition: vertex " + std::to_string(v) + " is not covered");
    }
  }
  p.blocks_ = std::move(blocks);
  return p;
}

Partition Partition::trivial(std::size_t n) {
  std::vector<Vertex> all(n);
  for (Vertex v = 0; v < n; ++v) all[v] = v;
  std::vector<std::vector<Vertex>> blocks;
  if (n) blocks.push_back(std::move(all));
  return make(n, std::move(blocks));
}

Partition Partition::parse(std::size_t n, std::string_view text) {
  std::vector<std::vector<Vertex>> blocks;
  std::vector<Vertex> cur;
  std::size_t i = 0;
  auto flush = [&] {
    blocks.push_back(std::move(cur));
    cur.clear();
  };
  while (i < text.size()) {
    const char ch = text[i];
    if (ch == ';') {
      flush();
      ++i;
    } else if (ch == ',' || ch == ' ') {
      ++i;
    } else {
      Vertex v = 0;
      auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), v);
      if (ec != std::errc()) {
        throw DomainError("partition: cannot parse '" + std::string(text) + "' at position " + std::to_string(i));
      }
      cur.push_back(v);
      i = static_cast<std::size_t>(ptr - text.data());
    }
  }
  flush();
  return make(n, std::move(blocks));
}

std::string Partition::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (i) os << ';';
    os << sqe::to_string(blocks_[i]);
  }
  return os.str();
}

namespace {

std::int64_t count_into(const Graph& g, Vertex v, const std::vector<Vertex>& block) {
  std::int64_t c = 0;
  for (Vertex w : block) c += g.adjacent(v, w) ? 1 : 0;
  return c;
}

}  // namespace

QuotientMatrix quotient_matrix(const Graph& g, const Partition& x) {
  if (x.order() != g.order()) throw DomainError("quotient_matrix: partition order does not match graph");
  QuotientMatrix q;
  q.p = x.block_count();
  q.partition = x;
  q.entries.assign(q.p * q.p, 0.0);
  q.edge_counts.assign(q.p * q.p, 0);
  q.equitable = true;
  for (std::size_t i = 0; i < q.p; ++i) {
    const auto& bi = x.block(i);
    for (std::size_t j = 0; j < q.p; ++j) {
      const auto& bj = x.block(j);
      std::int64_t total = 0;
      std::int64_t first = -1;
      for (Vertex v : bi) {
        const std::int64_t c = count_into(g, v, bj);
        total += c;
        if (first < 0) {
          first = c;
        } else if (c != first) {
          q.equitable = false;
        }
      }
      q.edge_counts[i * q.p + j] = total;
      q.entries[i * q.p + j] = static_cast<double>(total) / static_cast<double>(bi.size());
    }
  }
  return q;
}

bool is_equitable(const Graph& g, const Partition& x) { return quotient_matrix(g, x).equitable; }

bool satisfies_ms_eq_sb(const Graph& g, const QuotientMatrix& q) {
  const auto& x = q.partition;
  for (Vertex v = 0; v < g.order(); ++v) {
    const std::size_t i = x.block_of(v);
    const auto size_i = static_cast<std::int64_t>(x.block(i).size());
    for (std::size_t j = 0; j < q.p; ++j) {
      // (AS)_{v,j} == (SB)_{v,j}  <=>  |N(v) ∩ X_j| * |X_i| == count_ij
      if (count_into(g, v, x.block(j)) * size_i != q.edge_counts[i * q.p + j]) return false;
    }
  }
  return true;
}

Spectrum quotient_spectrum(const QuotientMatrix& q) {
  const auto p = static_cast<Eigen::Index>(q.p);
  Eigen::MatrixXd b(p, p);
  for (Eigen::Index i = 0; i < p; ++i) {
    for (Eigen::Index j = 0; j < p; ++j) b(i, j) = q.entries[static_cast<std::size_t>(i * p + j)];
  }
  Eigen::EigenSolver<Eigen::MatrixXd> solver(b, false);
  if (solver.info() != Eigen::Success) throw NumericalError("quotient_spectrum: eigensolver failed");
  std::vector<double> values;
  values.reserve(q.p);
  for (Eigen::Index i = 0; i < p; ++i) {
    const auto z = solver.eigenvalues()(i);
    if (std::abs(z.imag()) > 1e-9) {
      throw NumericalError("quotient_spectrum: eigenvalue with imaginary part " + std::to_string(z.imag()));
    }
    values.push_back(z.real());
  }
  return make_spectrum(std::move(values));
}

Partition coarsest_equitable_refinement(const Graph& g, const Partition& seed) {
  const std::size_t n = g.order();
  if (seed.order() != n) throw DomainError("refinement: seed partition order does not match graph");
  std::vector<std::size_t> colour(n);
  for (Vertex v = 0; v < n; ++v) colour[v] = seed.block_of(v);
  std::size_t colours = seed.block_count();
  while (true) {
    std::vector<std::vector<std::size_t>> sig(n);
    for (Vertex v = 0; v < n; ++v) {
      sig[v].assign(colours + 1, 0);
      sig[v][0] = colour[v];
      for (Vertex w : g.neighbors(v)) ++sig[v][colour[w] + 1];
    }
    std::map<std::vector<std::size_t>, std::size_t> ids;
    for (Vertex v = 0; v < n; ++v) ids.emplace(sig[v], 0);
    std::size_t next = 0;
    for (auto& [key, id] : ids) id = next++;
    for (Vertex v = 0; v < n; ++v) colour[v] = ids[sig[v]];
    if (next == colours) break;
    colours = next;
  }
  std::vector<std::vector<Vertex>> blocks(colours);
  for (Vertex v = 0; v < n; ++v) blocks[colour[v]].push_back(v);
  std::sort(blocks.begin(), blocks.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a.front() < b.front();
  });
  return Partition::make(n, std::move(blocks));
}

namespace {

std::vector<std::uint64_t> closed_row(const Graph& g, Vertex v) {
  auto r = g.row(v);
  std::vector<std::uint64_t> out(r.begin(), r.end());
  out[v >> 6] |= std::uint64_t{1} << (v & 63);
  return out;
}

std::vector<std::uint64_t> open_row(const Graph& g, Vertex v) {
  auto r = g.row(v);
  return {r.begin(), r.end()};
}

}  // namespace

std::vector<TwinClass> find_twins(const Graph& g) {
  std::vector<TwinClass> out;
  auto group = [&](TwinKind kind, auto row_of) {
    std::map<std::vector<std::uint64_t>, std::vector<Vertex>> buckets;
    for (Vertex v = 0; v < g.order(); ++v) buckets[row_of(g, v)].push_back(v);
    for (auto& [key, members] : buckets) {
      if (members.size() < 2) continue;
      TwinClass c;
      c.vertices = std::move(members);
      c.kind = kind;
      c.alpha = kind == TwinKind::kAdjacent ? -1.0 : 0.0;
      out.push_back(std::move(c));
    }
  };
  group(TwinKind::kIndependent, open_row);
  group(TwinKind::kAdjacent, closed_row);
  std::sort(out.begin(), out.end(),
            [](const TwinClass& a, const TwinClass& b) { return a.vertices.front() < b.vertices.front(); });
  return out;
}

std::optional<TwinKind> twin_kind_of(const Graph& g, std::span<const Vertex> block) {
  if (block.size() < 2) return std::nullopt;
  const Vertex first = block[0];
  const bool adjacent = g.adjacent(first, block[1]);
  const auto ref = adjacent ? closed_row(g, first) : open_row(g, first);
  for (std::size_t i = 1; i < block.size(); ++i) {
    const auto row = adjacent ? closed_row(g, block[i]) : open_row(g, block[i]);
    if (row != ref) return std::nullopt;
  }
  return adjacent ? TwinKind::kAdjacent : TwinKind::kIndependent;
}

Partition twin_partition(const Graph& g) {
  std::vector<std::vector<Vertex>> blocks;
  std::vector<bool> used(g.order(), false);
  for (auto& c : find_twins(g)) {
    for (Vertex v : c.vertices) used[v] = true;
    blocks.push_back(std::move(c.vertices));
  }
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!used[v]) blocks.push_back({v});
  }
  std::sort(blocks.begin(), blocks.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a.front() < b.front();
  });
  return Partition::make(g.order(), std::move(blocks));
}

Spectrum twin_quotient_spectrum(const Graph& g, const Partition& x) {
  if (x.order() != g.order()) throw DomainError("twin_quotient_spectrum: partition order does not match graph");
  std::vector<double> values;
  for (std::size_t i = 0; i < x.block_count(); ++i) {
    const auto& b = x.block(i);
    if (b.size() < 2) continue;
    const auto kind = twin_kind_of(g, b);
    if (!kind) {
      throw DomainError("twin_quotient_spectrum: block " + std::to_string(i) + " {" + to_string(b) +
                        "} is not a twin class");
    }
    values.insert(values.end(), b.size() - 1, *kind == TwinKind::kAdjacent ? -1.0 : 0.0);
  }
  const auto q = quotient_matrix(g, x);
  if (!q.equitable) throw DomainError("twin_quotient_spectrum: partition is not equitable");
  const auto qs = quotient_spectrum(q);
  values.insert(values.end(), qs.values.begin(), qs.values.end());
  return make_spectrum(std::move(values));
}

EdgeCutQuotient edge_cut_quotient(const Graph& g, std::span<const Vertex> s) {
  const std::size_t n = g.order();
  std::vector<bool> in_s(n, false);
  for (Vertex v : s) {
    if (v >= n) throw DomainError("edge_cut_quotient: vertex " + std::to_string(v) + " out of range");
    in_s[v] = true;
  }
  const auto size_s = static_cast<std::size_t>(std::count(in_s.begin(), in_s.end(), true));
  if (size_s == 0 || size_s == n) throw DomainError("edge_cut_quotient: S must be a non-empty proper subset");

  std::int64_t e1 = 0;
  std::int64_t e2 = 0;
  std::int64_t cut = 0;
  for (const Edge& e : g.edges()) {
    if (in_s[e.u] && in_s[e.v]) {
      ++e1;
    } else if (!in_s[e.u] && !in_s[e.v]) {
      ++e2;
    } else {
      ++cut;
    }
  }
  EdgeCutQuotient r;
  r.s = size_s;
  r.c = static_cast<std::size_t>(cut);
  const double ds = static_cast<double>(size_s);
  const double dt = static_cast<double>(n - size_s);
  r.d1 = 2.0 * static_cast<double>(e1) / ds;
  r.d2 = 2.0 * static_cast<double>(e2) / dt;
  const double cc = static_cast<double>(cut) * static_cast<double>(cut) / (ds * dt);
  r.determinant = r.d1 * r.d2 - cc;
  // Exact sign: d1 d2 - c^2/(s(n-s)) = (4 e1 e2 - c^2) / (s (n-s)).
  const std::int64_t num = 4 * e1 * e2 - cut * cut;
  r.determinant_sign = (num > 0) - (num < 0);
  const double disc = std::sqrt((r.d1 - r.d2) * (r.d1 - r.d2) + 4.0 * cc);
  r.lambda_plus = 0.5 * (r.d1 + r.d2 + disc);
  r.lambda_minus = 0.5 * (r.d1 + r.d2 - disc);
  if (r.determinant_sign >= 0) {
    r.s_plus_lower = r.d1 * r.d1 + r.d2 * r.d2 + 2.0 * cc;
  } else {
    r.s_plus_lower = r.lambda_plus * r.lambda_plus;
    r.s_minus_lower = r.lambda_minus * r.lambda_minus;
  }
  return r;
}

}  // namespace sqe
