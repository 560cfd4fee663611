#include "sqenergy/bounds.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <numeric>

#include "sqenergy/errors.hpp"
#include "sqenergy/graph6.hpp"
#include "sqenergy/operations.hpp"
#include "sqenergy/structure.hpp"

namespace sqe {

namespace {

constexpr std::array<std::pair<Rule, std::string_view>, 16> kRuleNames{{
    {Rule::kAvgDegree, "avg_degree"},
    {Rule::kDominatingVertex, "dominating_vertex"},
    {Rule::kSpanningBipartite, "spanning_bipartite"},
    {Rule::kClique, "clique"},
    {Rule::kJoin, "join"},
    {Rule::kKronecker, "kronecker"},
    {Rule::kInducedBipartite, "induced_bipartite"},
    {Rule::kEdgeCut, "edge_cut"},
    {Rule::kEdgeCutTwins, "edge_cut_twins"},
    {Rule::kSelfJoin, "self_join"},
    {Rule::kQuotient, "quotient"},
    {Rule::kTwinQuotient, "twin_quotient"},
    {Rule::kUnicyclicFractional, "unicyclic_fractional"},
    {Rule::kMajorization, "majorization"},
    {Rule::kRank, "rank"},
    {Rule::kExtendedBarbell, "extended_barbell"},
}};

BoundCertificate make_cert(const Graph& g, Rule rule, Target target, double bound) {
  BoundCertificate c;
  c.rule = rule;
  c.target = target;
  c.bound_value = bound;
  c.n = g.order();
  return finish(std::move(c));
}

std::vector<Vertex> complement_of(std::size_t n, std::span<const Vertex> s) {
  std::vector<bool> in(n, false);
  for (Vertex v : s) in[v] = true;
  std::vector<Vertex> out;
  for (Vertex v = 0; v < n; ++v) {
    if (!in[v]) out.push_back(v);
  }
  return out;
}

std::size_t edges_within(const Graph& g, std::span<const Vertex> s) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) count += g.adjacent(s[i], s[j]) ? 1 : 0;
  }
  return count;
}

void add_partition(Witness& w, const Partition& x) {
  for (std::size_t i = 0; i < x.block_count(); ++i) {
    w.sets.emplace_back("block" + std::to_string(i), x.block(i));
  }
}

// Max clique by branch and bound over single-word masks.
void expand_clique(const Graph& g, std::uint64_t current, std::size_t current_size, std::uint64_t candidates,
                   std::uint64_t& best, std::size_t& best_size) {
  if (candidates == 0) {
    if (current_size > best_size) {
      best = current;
      best_size = current_size;
    }
    return;
  }
  while (candidates) {
    if (current_size + static_cast<std::size_t>(std::popcount(candidates)) <= best_size) return;
    const int v = std::countr_zero(candidates);
    candidates &= candidates - 1;
    expand_clique(g, current | (std::uint64_t{1} << v), current_size + 1, candidates & g.mask(v), best, best_size);
  }
}

}  // namespace

std::string_view rule_name(Rule r) {
  for (const auto& [rule, name] : kRuleNames) {
    if (rule == r) return name;
  }
  return "unknown";
}

std::optional<Rule> parse_rule(std::string_view name) {
  for (const auto& [rule, rname] : kRuleNames) {
    if (rname == name) return rule;
  }
  return std::nullopt;
}

std::string_view target_name(Target t) {
  switch (t) {
    case Target::kSPlus:
      return "s_plus";
    case Target::kSMinus:
      return "s_minus";
    case Target::kBoth:
      return "both";
  }
  return "both";
}

const std::vector<Vertex>* Witness::set(std::string_view key) const {
  for (const auto& [k, v] : sets) {
    if (k == key) return &v;
  }
  return nullptr;
}

std::optional<double> Witness::value(std::string_view key) const {
  for (const auto& [k, v] : values) {
    if (k == key) return v;
  }
  return std::nullopt;
}

const std::string* Witness::label(std::string_view key) const {
  for (const auto& [k, v] : labels) {
    if (k == key) return &v;
  }
  return nullptr;
}

BoundCertificate finish(BoundCertificate c) {
  const double need = c.n == 0 ? 0.0 : static_cast<double>(c.n - 1);
  c.conclusive = c.bound_value >= need - kConclusiveSlack;
  return c;
}

std::optional<BoundCertificate> check_avg_degree(const Graph& g) {
  const std::size_t n = g.order();
  if (n == 0) return std::nullopt;
  const double d = 2.0 * static_cast<double>(g.size()) / static_cast<double>(n);
  if (d * d < static_cast<double>(n - 1) - kConclusiveSlack) return std::nullopt;
  auto c = make_cert(g, Rule::kAvgDegree, Target::kSPlus, d * d);
  c.witness.values.emplace_back("avg_degree", d);
  return c;
}

std::vector<Vertex> find_clique(const Graph& g) {
  const std::size_t n = g.order();
  if (n == 0) return {};
  if (n <= 12) {
    std::uint64_t best = 0;
    std::size_t best_size = 0;
    const std::uint64_t all = (n == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
    expand_clique(g, 0, 0, all, best, best_size);
    std::vector<Vertex> out;
    for (Vertex v = 0; v < n; ++v) {
      if ((best >> v) & 1U) out.push_back(v);
    }
    return out;
  }
  // Greedy from every start vertex, always taking the candidate of largest degree.
  std::vector<Vertex> best;
  for (Vertex start = 0; start < n; ++start) {
    std::vector<Vertex> clique{start};
    std::vector<Vertex> cand = g.neighbors(start);
    while (!cand.empty()) {
      const Vertex pick = *std::max_element(cand.begin(), cand.end(), [&](Vertex a, Vertex b) {
        return g.degree(a) != g.degree(b) ? g.degree(a) < g.degree(b) : a > b;
      });
      clique.push_back(pick);
      std::erase_if(cand, [&](Vertex w) { return w == pick || !g.adjacent(w, pick); });
    }
    if (clique.size() > best.size()) best = std::move(clique);
  }
  std::sort(best.begin(), best.end());
  return best;
}

std::optional<std::pair<std::vector<Vertex>, std::vector<Vertex>>> find_join_split(const Graph& g) {
  const std::size_t n = g.order();
  if (n < 2) return std::nullopt;
  const auto comps = connected_components(complement(g));
  if (comps.size() < 2) return std::nullopt;
  // Subset sum over component sizes, aiming for n/2.
  const std::size_t c = comps.size();
  std::vector<std::vector<char>> reach(c + 1, std::vector<char>(n + 1, 0));
  reach[0][0] = 1;
  for (std::size_t i = 0; i < c; ++i) {
    for (std::size_t s = 0; s <= n; ++s) {
      if (!reach[i][s]) continue;
      reach[i + 1][s] = 1;
      if (s + comps[i].size() <= n) reach[i + 1][s + comps[i].size()] = 1;
    }
  }
  std::size_t target = 0;
  for (std::size_t s = 1; s < n; ++s) {
    if (!reach[c][s]) continue;
    const auto dist = [&](std::size_t x) { return x * 2 > n ? x * 2 - n : n - x * 2; };
    if (target == 0 || dist(s) < dist(target)) target = s;
  }
  std::vector<Vertex> left;
  std::size_t s = target;
  for (std::size_t i = c; i-- > 0;) {
    if (reach[i][s]) continue;  // component i not needed
    left.insert(left.end(), comps[i].begin(), comps[i].end());
    s -= comps[i].size();
  }
  std::sort(left.begin(), left.end());
  auto right = complement_of(n, left);
  return std::make_pair(std::move(left), std::move(right));
}

std::vector<BoundCertificate> check_spanning_structures(const Graph& g) {
  std::vector<BoundCertificate> out;
  const std::size_t n = g.order();
  if (n < 2) return out;
  const auto dom = dominating_vertices(g);
  if (!dom.empty()) {
    auto c = make_cert(g, Rule::kDominatingVertex, Target::kSPlus, static_cast<double>(n - 1));
    c.witness.sets.emplace_back("vertex", std::vector<Vertex>{dom.front()});
    out.push_back(std::move(c));
  }
  if (auto split = find_join_split(g)) {
    const double r = static_cast<double>(split->first.size());
    auto c = make_cert(g, Rule::kSpanningBipartite, Target::kSPlus, r * (static_cast<double>(n) - r));
    c.witness.sets.emplace_back("left", split->first);
    c.witness.sets.emplace_back("right", split->second);
    out.push_back(std::move(c));
  }
  const auto clique = find_clique(g);
  if (clique.size() >= 2) {
    const double r = static_cast<double>(clique.size() - 1);
    if (r * r >= static_cast<double>(n - 1) - kConclusiveSlack) {
      auto c = make_cert(g, Rule::kClique, Target::kSPlus, r * r);
      c.witness.sets.emplace_back("clique", clique);
      out.push_back(std::move(c));
    }
  }
  return out;
}

std::optional<BoundCertificate> check_join(
    const Graph& g, std::optional<std::pair<std::vector<Vertex>, std::vector<Vertex>>> split) {
  const std::size_t n = g.order();
  if (!split) split = find_join_split(g);
  if (!split) return std::nullopt;
  auto& [left, right] = *split;
  std::sort(left.begin(), left.end());
  std::sort(right.begin(), right.end());
  if (left.empty() || right.empty() || left.size() + right.size() != n) return std::nullopt;
  std::vector<bool> seen(n, false);
  for (Vertex v : left) {
    if (v >= n || seen[v]) return std::nullopt;
    seen[v] = true;
  }
  for (Vertex v : right) {
    if (v >= n || seen[v]) return std::nullopt;
    seen[v] = true;
  }
  for (Vertex a : left) {
    for (Vertex b : right) {
      if (!g.adjacent(a, b)) return std::nullopt;
    }
  }
  auto c = make_cert(g, Rule::kJoin, Target::kSPlus, static_cast<double>(n - 1));
  c.witness.sets.emplace_back("left", left);
  c.witness.sets.emplace_back("right", right);
  return c;
}

std::optional<BoundCertificate> check_kronecker(const Graph& g, const Graph& f1, const Graph& f2) {
  if (!(kronecker(f1, f2) == g)) throw DomainError("check_kronecker: graph is not the product of the given factors");
  const std::size_t a = f1.order();
  const std::size_t b = f2.order();
  if (a < 3 || b < 3) return std::nullopt;
  const auto p1 = energy_profile(f1);
  const auto p2 = energy_profile(f2);
  const auto ok = [](const EnergyProfile& p, std::size_t order) {
    const double need = static_cast<double>(order - 1) - kConclusiveSlack;
    return p.s_plus >= need && p.s_minus >= need;
  };
  if (!ok(p1, a) || !ok(p2, b)) return std::nullopt;
  auto c = make_cert(g, Rule::kKronecker, Target::kBoth,
                     2.0 * static_cast<double>(a - 1) * static_cast<double>(b - 1));
  c.witness.labels.emplace_back("factor1", to_graph6(f1));
  c.witness.labels.emplace_back("factor2", to_graph6(f2));
  return c;
}

std::optional<EdgeDeletionBound> edge_deletion_bound(const Graph& g, Edge e) {
  if (e.u >= g.order() || e.v >= g.order() || e.u == e.v || !g.adjacent(e.u, e.v)) {
    throw DomainError("edge_deletion_bound: " + std::to_string(e.u) + "-" + std::to_string(e.v) + " is not an edge");
  }
  const auto spec = eigenvalues(delete_edge(g, e));
  const auto p = energy_profile(spec);
  if (p.inertia.positive < 2 || p.inertia.negative < 2) return std::nullopt;
  EdgeDeletionBound r;
  r.theta_2 = spec.values[1];
  r.theta_n = spec.values.back();
  r.s_plus_lower = p.s_plus - r.theta_2 * r.theta_2;
  r.s_minus_lower = p.s_minus - r.theta_n * r.theta_n;
  return r;
}

MovingNeighborsBound moving_neighbors_bound(const Graph& g, Vertex u, Vertex v, std::span<const Vertex> moved) {
  MovingNeighborsBound r;
  r.moved = move_neighbors(g, u, v, moved);
  const auto spec = eigenvalues(g);
  const auto p = energy_profile(spec);
  const double l1 = spec.values.front();
  const double ln = spec.values.back();
  r.s_plus_lower_weak = p.s_plus - l1 * l1;
  r.s_minus_lower = p.s_minus - ln * ln;

  const auto nv = g.neighbors(v);
  bool disjoint = !g.adjacent(u, v);
  for (Vertex w : nv) disjoint = disjoint && !g.adjacent(u, w);
  std::vector<Vertex> sorted_moved(moved.begin(), moved.end());
  std::sort(sorted_moved.begin(), sorted_moved.end());
  r.disjoint_condition = disjoint && sorted_moved == nv;

  if (g.size() > 0 && is_connected(g)) {
    const auto x = perron_vector(g);
    const double inf = *std::max_element(x.begin(), x.end());
    r.perron_condition = x[u] >= x[v] - 1e-12 * inf;
  }
  if ((r.perron_condition || r.disjoint_condition) && spec.size() >= 2) {
    const double l2 = spec.values[1];
    r.s_plus_lower_strong = p.s_plus - l2 * l2;
  }

  const auto mspec = eigenvalues(r.moved);
  const auto mp = energy_profile(mspec);
  r.reverse_s_plus_lower = mp.s_plus - mspec.values.front() * mspec.values.front();
  r.reverse_s_minus_lower = mp.s_minus - mspec.values.back() * mspec.values.back();
  return r;
}

LowerBoundPair induced_subgraph_bound(const Graph& g, std::span<const Vertex> keep) {
  const auto h = induced_subgraph(g, keep);
  if (h.graph.order() == 0) return {};
  const auto p = energy_profile(h.graph);
  return {p.s_plus, p.s_minus};
}

BoundCertificate induced_bipartite_bound(const Graph& g, std::span<const Vertex> deletions) {
  std::vector<Vertex> del(deletions.begin(), deletions.end());
  std::sort(del.begin(), del.end());
  del.erase(std::unique(del.begin(), del.end()), del.end());
  const auto h = delete_vertices(g, del);
  if (!is_bipartite(h.graph)) {
    throw DomainError("induced_bipartite_bound: deleting {" + to_string(del) + "} leaves a non-bipartite graph");
  }
  auto c = make_cert(g, Rule::kInducedBipartite, Target::kBoth, static_cast<double>(h.graph.size()));
  const double coarse = static_cast<double>(g.size()) -
                        static_cast<double>(del.size()) * static_cast<double>(g.max_degree());
  c.witness.sets.emplace_back("deleted", std::move(del));
  c.witness.values.emplace_back("coarse_bound", coarse);
  return c;
}

std::optional<std::vector<Vertex>> cactus_odd_cycle_transversal(const Graph& g) {
  if (g.order() == 0 || !is_connected(g)) return std::nullopt;
  const auto prof = cactus_profile(g);
  if (!prof.is_cactus) return std::nullopt;
  std::vector<const std::vector<Vertex>*> open;
  for (const auto& cyc : prof.cycles) {
    if (cyc.size() % 2 == 1) open.push_back(&cyc);
  }
  std::vector<Vertex> chosen;
  std::vector<std::size_t> hits(g.order());
  while (!open.empty()) {
    std::fill(hits.begin(), hits.end(), 0);
    for (const auto* cyc : open) {
      for (Vertex v : *cyc) ++hits[v];
    }
    const auto best = static_cast<Vertex>(std::max_element(hits.begin(), hits.end()) - hits.begin());
    chosen.push_back(best);
    std::erase_if(open, [&](const std::vector<Vertex>* cyc) {
      return std::find(cyc->begin(), cyc->end(), best) != cyc->end();
    });
  }
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

std::optional<std::vector<Vertex>> bipartite_deletion_set(const Graph& g, std::size_t max_size) {
  const std::size_t n = g.order();
  if (is_bipartite(g)) return std::vector<Vertex>{};
  for (std::size_t k = 1; k <= std::min(max_size, n); ++k) {
    std::vector<Vertex> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    std::optional<std::vector<Vertex>> best;
    std::size_t best_edges = 0;
    while (true) {
      const auto h = delete_vertices(g, idx);
      if (is_bipartite(h.graph) && (!best || h.graph.size() > best_edges)) {
        best = idx;
        best_edges = h.graph.size();
      }
      // Next combination in lexicographic order.
      std::size_t i = k;
      while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (best) return best;
  }
  return std::nullopt;
}

bool cactus_condition(const Graph& g) {
  if (g.order() == 0 || !is_connected(g)) return false;
  const auto prof = cactus_profile(g);
  if (!prof.is_cactus) return false;
  const std::size_t delta = g.max_degree();
  return prof.even_count >= prof.odd_count * (delta == 0 ? 0 : delta - 1);
}

LowerBoundPair quotient_bound(const Graph& g, const Partition& x) {
  const auto p = energy_profile(quotient_spectrum(quotient_matrix(g, x)));
  return {p.s_plus, p.s_minus};
}

std::vector<BoundCertificate> check_edge_cut(const Graph& g) {
  std::vector<BoundCertificate> out;
  const std::size_t n = g.order();
  if (n < 2) return out;
  const auto twins = find_twins(g);
  std::vector<std::vector<Vertex>> candidates;
  for (Vertex v = 0; v < n; ++v) candidates.push_back({v});
  for (const auto& t : twins) {
    if (t.vertices.size() < n) candidates.push_back(t.vertices);
  }
  std::size_t twin_extra = 0;
  std::vector<const TwinClass*> adjacent_twins;
  for (const auto& t : twins) {
    if (t.kind == TwinKind::kAdjacent) {
      twin_extra += t.multiplicity();
      adjacent_twins.push_back(&t);
    }
  }

  std::optional<BoundCertificate> best_plus;
  std::optional<BoundCertificate> best_minus;
  for (const auto& s : candidates) {
    const auto q = edge_cut_quotient(g, s);
    if (!best_plus || q.s_plus_lower > best_plus->bound_value) {
      auto c = make_cert(g, Rule::kEdgeCut, Target::kSPlus, q.s_plus_lower);
      c.witness.sets.emplace_back("s", s);
      best_plus = std::move(c);
    }
    if (!q.s_minus_lower) continue;
    double bound = *q.s_minus_lower;
    Rule rule = Rule::kEdgeCut;
    if (q.lambda_minus < -1.0 - 1e-9 && twin_extra > 0) {
      bound += static_cast<double>(twin_extra);
      rule = Rule::kEdgeCutTwins;
    }
    if (!best_minus || bound > best_minus->bound_value) {
      auto c = make_cert(g, rule, Target::kSMinus, bound);
      c.witness.sets.emplace_back("s", s);
      if (rule == Rule::kEdgeCutTwins) {
        for (std::size_t i = 0; i < adjacent_twins.size(); ++i) {
          c.witness.sets.emplace_back("twins" + std::to_string(i), adjacent_twins[i]->vertices);
        }
      }
      c.witness.values.emplace_back("lambda_minus", q.lambda_minus);
      best_minus = std::move(c);
    }
  }
  if (best_plus) out.push_back(std::move(*best_plus));
  if (best_minus) out.push_back(std::move(*best_minus));
  return out;
}

std::optional<BoundCertificate> check_self_join(const Graph& g) {
  const std::size_t n = g.order();
  if (n < 16 || n % 2 != 0) return std::nullopt;
  const auto split = find_join_split(g);
  if (!split || split->first.size() != split->second.size()) return std::nullopt;
  const std::size_t r = n / 2;
  // Average degree <= r/2  <=>  4 |E(half)| <= r^2.
  if (4 * edges_within(g, split->first) > r * r || 4 * edges_within(g, split->second) > r * r) return std::nullopt;
  const auto q = edge_cut_quotient(g, split->first);
  if (!q.s_minus_lower) return std::nullopt;
  auto c = make_cert(g, Rule::kSelfJoin, Target::kSMinus, *q.s_minus_lower);
  c.witness.sets.emplace_back("left", split->first);
  c.witness.sets.emplace_back("right", split->second);
  return c;
}

std::vector<BoundCertificate> check_quotient(const Graph& g) {
  std::vector<BoundCertificate> out;
  if (g.order() == 0) return out;
  const auto x = coarsest_equitable_refinement(g, Partition::trivial(g.order()));
  const auto b = quotient_bound(g, x);
  for (auto [target, value] : {std::pair{Target::kSPlus, b.s_plus_lower}, std::pair{Target::kSMinus, b.s_minus_lower}}) {
    auto c = make_cert(g, Rule::kQuotient, target, value);
    add_partition(c.witness, x);
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<BoundCertificate> check_twin_quotient(const Graph& g) {
  std::vector<BoundCertificate> out;
  const std::size_t n = g.order();
  if (n < 3) return out;
  const auto x = coarsest_equitable_refinement(g, twin_partition(g));
  if (x.block_count() == n) return out;  // no reduction
  const auto p = energy_profile(twin_quotient_spectrum(g, x));
  for (auto [target, value] : {std::pair{Target::kSPlus, p.s_plus}, std::pair{Target::kSMinus, p.s_minus}}) {
    auto c = make_cert(g, Rule::kTwinQuotient, target, value);
    add_partition(c.witness, x);
    out.push_back(std::move(c));
  }
  return out;
}

double m0(std::size_t n) {
  const double nd = static_cast<double>(n);
  return std::numbers::pi / (2.0 * std::acos((nd - 1.0) / (nd + 1.0))) - 0.5;
}

std::optional<UnicyclicFractional> unicyclic_fractional_bound(const Graph& g) {
  const auto cyc = unicyclic_cycle(g);
  if (!cyc || cyc->size() % 2 == 0) return std::nullopt;
  UnicyclicFractional r;
  r.cycle_length = cyc->size();
  r.m = (r.cycle_length - 1) / 2;
  r.n = g.order();
  const double n = static_cast<double>(r.n);
  const double m = static_cast<double>(r.m);
  if (r.m >= 2) r.fractional_bound = 2.0 * m * n / (2.0 * m + 1.0);
  r.m0 = m0(r.n);
  const double c = std::cos(std::numbers::pi / (2.0 * m + 1.0));
  r.homomorphism_bound = 2.0 * n * c / (1.0 + c);
  const double best = std::max(r.homomorphism_bound, r.fractional_bound.value_or(0.0));
  r.conclusive = best >= n - 1.0 - kConclusiveSlack;
  return r;
}

std::optional<BoundCertificate> check_unicyclic_fractional(const Graph& g) {
  const auto r = unicyclic_fractional_bound(g);
  if (!r) return std::nullopt;
  auto c = make_cert(g, Rule::kUnicyclicFractional, Target::kBoth,
                     std::max(r->homomorphism_bound, r->fractional_bound.value_or(0.0)));
  auto cyc = *unicyclic_cycle(g);
  std::sort(cyc.begin(), cyc.end());
  c.witness.sets.emplace_back("cycle", std::move(cyc));
  c.witness.values.emplace_back("m", static_cast<double>(r->m));
  c.witness.values.emplace_back("m0", r->m0);
  if (r->fractional_bound) c.witness.values.emplace_back("fractional_bound", *r->fractional_bound);
  c.witness.values.emplace_back("homomorphism_bound", r->homomorphism_bound);
  return c;
}

std::optional<std::pair<MajorizationReport, BoundCertificate>> majorization_two_positive(const Graph& g) {
  const std::size_t n = g.order();
  if (n < 4 || !is_connected(g)) return std::nullopt;
  const auto spec = eigenvalues(g);
  const auto in = inertia_of(spec);
  if (in.positive != 2) return std::nullopt;
  if (n <= kExactCharPolyMaxOrder && exact_inertia(char_poly_exact(g)).positive != 2) return std::nullopt;

  MajorizationReport rep;
  const std::size_t nu = in.negative;
  rep.mu.assign(nu, 0.0);
  rep.mu[0] = spec.values[0];
  if (nu > 1) rep.mu[1] = spec.values[1];
  for (std::size_t i = 0; i < nu; ++i) rep.theta.push_back(std::abs(spec.values[n - 1 - i]));
  double sm = 0.0;
  double st = 0.0;
  for (std::size_t k = 0; k < nu; ++k) {
    sm += rep.mu[k];
    st += rep.theta[k];
    if (k + 1 < nu) rep.prefix_ok.push_back(sm >= st - 1e-9);
  }
  rep.totals_equal = std::abs(sm - st) <= 1e-8 * std::max(1.0, sm);

  auto c = make_cert(g, Rule::kMajorization, Target::kSPlus, static_cast<double>(n - 1));
  c.witness.values.emplace_back("positive", 2.0);
  return std::make_pair(std::move(rep), std::move(c));
}

LowerBoundPair energy_count_bound(const Graph& g) {
  const auto p = energy_profile(g);
  LowerBoundPair r;
  const double e2 = p.energy * p.energy;
  if (p.inertia.positive) r.s_plus_lower = e2 / (4.0 * static_cast<double>(p.inertia.positive));
  if (p.inertia.negative) r.s_minus_lower = e2 / (4.0 * static_cast<double>(p.inertia.negative));
  return r;
}

std::vector<BoundCertificate> rank_bound(const Graph& g) {
  std::vector<BoundCertificate> out;
  const std::size_t n = g.order();
  if (n < 3 || !is_connected(g)) return out;
  std::size_t rank = 0;
  Inertia in;
  if (n <= kExactCharPolyMaxOrder) {
    const auto p = char_poly_exact(g);
    rank = n - p.zero_multiplicity();
    in = exact_inertia(p);
  } else {
    in = inertia_of(eigenvalues(g));
    rank = in.positive + in.negative;
  }
  const double r2 = static_cast<double>(rank * rank);
  for (auto [target, count] : {std::pair{Target::kSPlus, in.positive}, std::pair{Target::kSMinus, in.negative}}) {
    if (count == 0 || 4 * (n - 1) * count > rank * rank) continue;
    auto c = make_cert(g, Rule::kRank, target, r2 / (4.0 * static_cast<double>(count)));
    c.witness.values.emplace_back("rank", static_cast<double>(rank));
    c.witness.values.emplace_back("count", static_cast<double>(count));
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<BoundCertificate> certify_graph(const Graph& g, const CertifyOptions& opts) {
  std::vector<BoundCertificate> all;
  auto take = [&](auto&& maybe) {
    if (maybe) all.push_back(std::move(*maybe));
  };
  auto take_all = [&](std::vector<BoundCertificate> v) {
    for (auto& c : v) all.push_back(std::move(c));
  };
  const bool connected = g.order() > 0 && is_connected(g);

  take(check_avg_degree(g));
  take_all(check_spanning_structures(g));
  take(check_join(g));

  std::optional<std::vector<Vertex>> del;
  if (connected) del = cactus_odd_cycle_transversal(g);
  if (!del) del = bipartite_deletion_set(g, opts.bipartite_search_depth);
  if (del) all.push_back(induced_bipartite_bound(g, *del));

  take_all(check_edge_cut(g));
  take(check_self_join(g));
  take_all(check_quotient(g));
  take_all(check_twin_quotient(g));
  if (connected) {
    take(check_unicyclic_fractional(g));
    if (auto mj = majorization_two_positive(g)) all.push_back(std::move(mj->second));
    take_all(rank_bound(g));
    take(check_extended_barbell(g));
  }
  if (!opts.include_inconclusive) std::erase_if(all, [](const BoundCertificate& c) { return !c.conclusive; });
  return all;
}

}  // namespace sqe
