#include "sqenergy/survey.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <string>
#include <thread>

#include "sqenergy/errors.hpp"
#include "sqenergy/format.hpp"
#include "sqenergy/graph6.hpp"
#include "sqenergy/operations.hpp"
#include "sqenergy/structure.hpp"

namespace sqe {

namespace {

constexpr double kSoundnessSlack = 1e-8;

// out[i] = f(in[i]) on up to `threads` workers pulling indices from a shared
// counter. Results land at fixed positions, so the output order never depends
// on scheduling.
template <class In, class Fn>
auto parallel_map(std::span<const In> in, unsigned threads, Fn f) {
  using Out = decltype(f(in[0]));
  std::vector<Out> out(in.size());
  const unsigned workers = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(in.size())));
  if (workers <= 1) {
    for (std::size_t i = 0; i < in.size(); ++i) out[i] = f(in[i]);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < in.size() && !failed; i = next++) {
          try {
            out[i] = f(in[i]);
          } catch (...) {
            if (!failed.exchange(true)) failure = std::current_exception();
          }
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

void offer(Extremum& e, double value, const std::string& g6) {
  if (value < e.value - kTieTolerance) {
    e.graph6.clear();
    e.value = value;
  } else if (value > e.value + kTieTolerance) {
    return;
  } else {
    e.value = std::min(e.value, value);
  }
  e.graph6.push_back(g6);
}

}  // namespace

unsigned default_thread_count() {
  if (const char* env = std::getenv("SQENERGY_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

SurveyRecord survey_record(const Graph& g, bool certificates) {
  SurveyRecord r;
  r.graph6 = to_graph6(g);
  r.n = g.order();
  r.m = g.size();
  const auto p = energy_profile(g);
  r.s_plus = p.s_plus;
  r.s_minus = p.s_minus;
  r.energy = p.energy;
  r.inertia = p.inertia;
  r.fragile = p.fragile;
  r.bipartite = is_bipartite(g);
  const double need = r.n == 0 ? 0.0 : static_cast<double>(r.n - 1) - kConjectureSlack;
  r.conjecture_ok = {r.s_plus >= need, r.s_minus >= need};
  if (certificates) {
    for (const auto& c : certify_graph(g)) r.certificates.emplace_back(rule_name(c.rule));
  }
  return r;
}

SurveyReport survey(std::span<const Graph> graphs, const SurveyOptions& opts) {
  SurveyReport rep;
  if (graphs.empty()) return rep;
  rep.n = graphs.front().order();
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    if (graphs[i].order() != rep.n) {
      throw DomainError("survey: graph " + std::to_string(i) + " has order " + std::to_string(graphs[i].order()) +
                        ", expected " + std::to_string(rep.n));
    }
  }
  const auto records = parallel_map(graphs, opts.threads,
                                    [&](const Graph& g) { return survey_record(g, opts.certificates); });
  const double need = rep.n == 0 ? 0.0 : static_cast<double>(rep.n - 1);
  for (const auto& r : records) {
    ++rep.total;
    const double gap = r.s_plus - r.s_minus;
    if (std::abs(gap) <= kEqualTolerance) {
      ++rep.equal;
      if (!r.bipartite) ++rep.nonbipartite_equal;
    } else if (gap > 0) {
      ++rep.s_plus_gt;
    } else {
      ++rep.s_minus_gt;
    }
    if (r.bipartite) {
      ++rep.bipartite;
    } else {
      rep.nonbipartite_min_gap = std::min(rep.nonbipartite_min_gap, std::abs(gap));
    }
    offer(rep.min_s_plus, r.s_plus, r.graph6);
    offer(rep.min_s_minus, r.s_minus, r.graph6);
    rep.min_slack_plus = std::min(rep.min_slack_plus, r.s_plus - need);
    rep.min_slack_minus = std::min(rep.min_slack_minus, r.s_minus - need);
    if (!r.conjecture_ok.first || !r.conjecture_ok.second) ++rep.conjecture_failures;
    if (r.fragile) ++rep.fragile;
    if (opts.record_sink) opts.record_sink(r);
  }
  rep.min_near_rounding_boundary =
      near_rounding_boundary(rep.min_s_plus.value) || near_rounding_boundary(rep.min_s_minus.value);
  return rep;
}

std::vector<std::pair<std::size_t, double>> m0_curve(std::size_t n_lo, std::size_t n_hi) {
  if (n_lo < 3 || n_hi < n_lo) {
    throw DomainError("m0_curve: need 3 <= n_lo <= n_hi, got " + std::to_string(n_lo) + ".." + std::to_string(n_hi));
  }
  std::vector<std::pair<std::size_t, double>> out;
  for (std::size_t n = n_lo; n <= n_hi; ++n) out.emplace_back(n, m0(n));
  return out;
}

std::vector<LeafIncrement> leaf_increment_profile(const Graph& g) {
  if (g.order() == 0 || !is_connected(g)) throw DomainError("leaf_increment_profile: graph must be connected");
  const auto base = energy_profile(g);
  std::vector<LeafIncrement> out;
  for (Vertex v = 0; v < g.order(); ++v) {
    const auto p = energy_profile(add_leaf(g, v));
    out.push_back({v, p.s_plus - base.s_plus, p.s_minus - base.s_minus});
  }
  return out;
}

CoverageTable certify_corpus(std::span<const Graph> graphs, unsigned threads) {
  struct PerGraph {
    std::string graph6;
    std::vector<BoundCertificate> certs;
    bool plus = false;
    bool minus = false;
    std::size_t unsound = 0;
    std::size_t rederive_failures = 0;
    bool conjecture_failure = false;
  };
  const auto results = parallel_map(graphs, threads, [](const Graph& g) {
    PerGraph r;
    r.graph6 = to_graph6(g);
    const auto p = energy_profile(g);
    const double need = g.order() == 0 ? 0.0 : static_cast<double>(g.order() - 1) - kConjectureSlack;
    r.conjecture_failure = p.s_plus < need || p.s_minus < need;
    CertifyOptions co;
    co.include_inconclusive = true;
    r.certs = certify_graph(g, co);
    for (const auto& c : r.certs) {
      const double truth = c.target == Target::kSPlus    ? p.s_plus
                           : c.target == Target::kSMinus ? p.s_minus
                                                         : std::min(p.s_plus, p.s_minus);
      if (c.bound_value > truth + kSoundnessSlack) ++r.unsound;
      const auto again = rederive_bound(g, c);
      if (!again || std::abs(*again - c.bound_value) > 1e-9 * std::max(1.0, std::abs(c.bound_value))) {
        ++r.rederive_failures;
      }
      if (!c.conclusive) continue;
      if (c.target != Target::kSMinus) r.plus = true;
      if (c.target != Target::kSPlus) r.minus = true;
    }
    return r;
  });

  CoverageTable t;
  for (int i = 0; i <= static_cast<int>(Rule::kExtendedBarbell); ++i) t.rows.push_back({static_cast<Rule>(i), 0, 0});
  for (const auto& r : results) {
    ++t.graphs;
    // A rule counts once per graph even when it emits one certificate per target.
    std::vector<bool> fired(t.rows.size(), false);
    std::vector<bool> conclusive(t.rows.size(), false);
    for (const auto& c : r.certs) {
      fired[static_cast<std::size_t>(c.rule)] = true;
      if (c.conclusive) conclusive[static_cast<std::size_t>(c.rule)] = true;
    }
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
      t.rows[i].fired += fired[i] ? 1 : 0;
      t.rows[i].conclusive += conclusive[i] ? 1 : 0;
    }
    t.certified_plus += r.plus ? 1 : 0;
    t.certified_minus += r.minus ? 1 : 0;
    t.certified_both += (r.plus && r.minus) ? 1 : 0;
    if (!r.plus || !r.minus) t.uncertified.push_back(r.graph6);
    t.unsound += r.unsound;
    t.rederive_failures += r.rederive_failures;
    t.conjecture_failures += r.conjecture_failure ? 1 : 0;
  }
  return t;
}

}  // namespace sqe
