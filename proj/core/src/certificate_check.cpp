// Re-derivation of certificate bounds from the witness. Each branch checks
// the structure it is handed against the graph and recomputes the number
// without calling the search code that produced the witness.

#include <algorithm>
#include <cmath>
#include <numbers>

#include "sqenergy/bounds.hpp"
#include "sqenergy/graph6.hpp"
#include "sqenergy/operations.hpp"
#include "sqenergy/structure.hpp"

namespace sqe {

namespace {

using Maybe = std::optional<double>;

bool valid_set(const Graph& g, const std::vector<Vertex>* s) {
  if (!s) return false;
  for (std::size_t i = 0; i < s->size(); ++i) {
    if ((*s)[i] >= g.order()) return false;
    if (i && (*s)[i - 1] >= (*s)[i]) return false;
  }
  return true;
}

// left/right cover V disjointly and every cross pair is adjacent.
bool complete_split(const Graph& g, const std::vector<Vertex>* a, const std::vector<Vertex>* b) {
  if (!valid_set(g, a) || !valid_set(g, b) || a->empty() || b->empty()) return false;
  if (a->size() + b->size() != g.order()) return false;
  std::vector<bool> seen(g.order(), false);
  for (const auto* s : {a, b}) {
    for (Vertex v : *s) {
      if (seen[v]) return false;
      seen[v] = true;
    }
  }
  for (Vertex x : *a) {
    for (Vertex y : *b) {
      if (!g.adjacent(x, y)) return false;
    }
  }
  return true;
}

std::size_t edges_in(const Graph& g, const std::vector<Vertex>& s) {
  std::size_t e = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) e += g.adjacent(s[i], s[j]) ? 1 : 0;
  }
  return e;
}

std::optional<Partition> partition_from(const Graph& g, const Witness& w) {
  std::vector<std::vector<Vertex>> blocks;
  for (std::size_t i = 0;; ++i) {
    const auto* b = w.set("block" + std::to_string(i));
    if (!b) break;
    blocks.push_back(*b);
  }
  try {
    return Partition::make(g.order(), std::move(blocks));
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

Maybe pick(Target t, double plus, double minus) {
  switch (t) {
    case Target::kSPlus:
      return plus;
    case Target::kSMinus:
      return minus;
    case Target::kBoth:
      return std::min(plus, minus);
  }
  return std::nullopt;
}

Inertia graph_inertia(const Graph& g, std::size_t& rank) {
  if (g.order() <= kExactCharPolyMaxOrder) {
    const auto p = char_poly_exact(g);
    rank = g.order() - p.zero_multiplicity();
    return exact_inertia(p);
  }
  const auto in = inertia_of(eigenvalues(g));
  rank = in.positive + in.negative;
  return in;
}

}  // namespace

std::optional<double> rederive_bound(const Graph& g, const BoundCertificate& c) {
  const std::size_t n = g.order();
  if (c.n != n || n == 0) return std::nullopt;
  const auto& w = c.witness;
  const double nd = static_cast<double>(n);

  switch (c.rule) {
    case Rule::kAvgDegree: {
      const double d = 2.0 * static_cast<double>(g.size()) / nd;
      const auto claimed = w.value("avg_degree");
      if (!claimed || std::abs(*claimed - d) > 1e-12 * std::max(1.0, d)) return std::nullopt;
      return d * d;
    }
    case Rule::kDominatingVertex: {
      const auto* s = w.set("vertex");
      if (!valid_set(g, s) || s->size() != 1 || g.degree(s->front()) != n - 1) return std::nullopt;
      return nd - 1.0;
    }
    case Rule::kSpanningBipartite: {
      const auto* a = w.set("left");
      if (!complete_split(g, a, w.set("right"))) return std::nullopt;
      const double r = static_cast<double>(a->size());
      return r * (nd - r);
    }
    case Rule::kJoin:
      if (!complete_split(g, w.set("left"), w.set("right"))) return std::nullopt;
      return nd - 1.0;
    case Rule::kClique: {
      const auto* s = w.set("clique");
      if (!valid_set(g, s) || s->size() < 2 || edges_in(g, *s) != s->size() * (s->size() - 1) / 2) {
        return std::nullopt;
      }
      const double r = static_cast<double>(s->size() - 1);
      return r * r;
    }
    case Rule::kKronecker: {
      const auto* l1 = w.label("factor1");
      const auto* l2 = w.label("factor2");
      if (!l1 || !l2) return std::nullopt;
      const auto f1 = from_graph6(*l1);
      const auto f2 = from_graph6(*l2);
      if (!(kronecker(f1, f2) == g) || f1.order() < 3 || f2.order() < 3) return std::nullopt;
      for (const auto* f : {&f1, &f2}) {
        const auto p = energy_profile(*f);
        const double need = static_cast<double>(f->order() - 1) - kConclusiveSlack;
        if (p.s_plus < need || p.s_minus < need) return std::nullopt;
      }
      return 2.0 * static_cast<double>(f1.order() - 1) * static_cast<double>(f2.order() - 1);
    }
    case Rule::kInducedBipartite: {
      const auto* s = w.set("deleted");
      if (!valid_set(g, s)) return std::nullopt;
      const auto h = delete_vertices(g, *s);
      if (!is_bipartite(h.graph)) return std::nullopt;
      return static_cast<double>(h.graph.size());
    }
    case Rule::kEdgeCut: {
      const auto* s = w.set("s");
      if (!valid_set(g, s) || s->empty() || s->size() >= n) return std::nullopt;
      const auto q = edge_cut_quotient(g, *s);
      if (c.target == Target::kSPlus) return q.s_plus_lower;
      if (c.target == Target::kSMinus && q.s_minus_lower) return *q.s_minus_lower;
      return std::nullopt;
    }
    case Rule::kEdgeCutTwins: {
      const auto* s = w.set("s");
      if (c.target != Target::kSMinus || !valid_set(g, s) || s->empty() || s->size() >= n) return std::nullopt;
      const auto q = edge_cut_quotient(g, *s);
      if (!q.s_minus_lower || !(q.lambda_minus < -1.0 - 1e-9)) return std::nullopt;
      std::vector<bool> used(n, false);
      double extra = 0.0;
      for (std::size_t i = 0;; ++i) {
        const auto* t = w.set("twins" + std::to_string(i));
        if (!t) break;
        if (!valid_set(g, t) || t->size() < 2) return std::nullopt;
        if (twin_kind_of(g, *t) != TwinKind::kAdjacent) return std::nullopt;
        for (Vertex v : *t) {
          if (used[v]) return std::nullopt;
          used[v] = true;
        }
        extra += static_cast<double>(t->size() - 1);
      }
      return *q.s_minus_lower + extra;
    }
    case Rule::kSelfJoin: {
      const auto* a = w.set("left");
      const auto* b = w.set("right");
      if (!complete_split(g, a, b) || a->size() != b->size() || a->size() < 8) return std::nullopt;
      const std::size_t r = a->size();
      if (4 * edges_in(g, *a) > r * r || 4 * edges_in(g, *b) > r * r) return std::nullopt;
      const auto q = edge_cut_quotient(g, *a);
      if (!q.s_minus_lower || c.target != Target::kSMinus) return std::nullopt;
      return *q.s_minus_lower;
    }
    case Rule::kQuotient: {
      const auto x = partition_from(g, w);
      if (!x) return std::nullopt;
      const auto b = quotient_bound(g, *x);
      return pick(c.target, b.s_plus_lower, b.s_minus_lower);
    }
    case Rule::kTwinQuotient: {
      const auto x = partition_from(g, w);
      if (!x) return std::nullopt;
      try {
        const auto p = energy_profile(twin_quotient_spectrum(g, *x));
        return pick(c.target, p.s_plus, p.s_minus);
      } catch (const std::exception&) {
        return std::nullopt;
      }
    }
    case Rule::kUnicyclicFractional: {
      const auto cyc = unicyclic_cycle(g);
      const auto* s = w.set("cycle");
      if (!cyc || !valid_set(g, s) || cyc->size() % 2 == 0) return std::nullopt;
      auto sorted = *cyc;
      std::sort(sorted.begin(), sorted.end());
      if (sorted != *s) return std::nullopt;
      const double m = static_cast<double>((cyc->size() - 1) / 2);
      const double cs = std::cos(std::numbers::pi / (2.0 * m + 1.0));
      double bound = 2.0 * nd * cs / (1.0 + cs);
      if (m >= 2.0) bound = std::max(bound, 2.0 * m * nd / (2.0 * m + 1.0));
      return bound;
    }
    case Rule::kMajorization: {
      if (n < 4 || !is_connected(g) || c.target != Target::kSPlus) return std::nullopt;
      std::size_t rank = 0;
      if (graph_inertia(g, rank).positive != 2) return std::nullopt;
      return nd - 1.0;
    }
    case Rule::kRank: {
      if (n < 3 || !is_connected(g)) return std::nullopt;
      std::size_t rank = 0;
      const auto in = graph_inertia(g, rank);
      const std::size_t count = c.target == Target::kSPlus ? in.positive : in.negative;
      if (c.target == Target::kBoth || count == 0 || 4 * (n - 1) * count > rank * rank) return std::nullopt;
      return static_cast<double>(rank * rank) / (4.0 * static_cast<double>(count));
    }
    case Rule::kExtendedBarbell: {
      const auto k = detect_extended_barbell(g);
      if (!k) return std::nullopt;
      const double km1 = static_cast<double>(*k - 1);
      return pick(c.target, 2.0 * km1 * km1, nd - 4.0 + 81.0 / 25.0);
    }
  }
  return std::nullopt;
}

}  // namespace sqe
