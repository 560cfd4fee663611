#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <vector>

#include <fmt/format.h>

#include "CLI11.hpp"
#include "json.hpp"
#include "sqenergy/bounds.hpp"
#include "sqenergy/enumerate.hpp"
#include "sqenergy/errors.hpp"
#include "sqenergy/families.hpp"
#include "sqenergy/format.hpp"
#include "sqenergy/graph6.hpp"
#include "sqenergy/partitions.hpp"
#include "sqenergy/serialize.hpp"
#include "sqenergy/spectral.hpp"
#include "sqenergy/structure.hpp"
#include "sqenergy/survey.hpp"

namespace sqe::cli {

namespace {

// Flag combinations CLI11 cannot express; reported with exit status 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Source {
  std::string g6;
  std::string path;
};

void add_source(CLI::App* sub, Source& src) {
  auto* g = sub->add_option("--g6", src.g6, "Inline graph6 string");
  auto* f = sub->add_option("--input", src.path, "File of graph6 lines (default: standard input)");
  g->excludes(f);
}

// Streams the graphs named by `src`, falling back to standard input.
void for_each_graph(const Source& src, std::istream& in, const std::function<void(Graph&&)>& sink) {
  if (!src.g6.empty()) {
    sink(from_graph6(src.g6));
    return;
  }
  auto forward = [&](Graph&& g, std::size_t) { sink(std::move(g)); };
  if (!src.path.empty()) {
    std::ifstream file(src.path);
    if (!file) throw std::runtime_error("cannot read input file '" + src.path + "'");
    read_graph6_stream(file, forward);
    return;
  }
  read_graph6_stream(in, forward);
}

std::vector<Graph> collect(const Source& src, std::istream& in) {
  std::vector<Graph> out;
  for_each_graph(src, in, [&](Graph&& g) { out.push_back(std::move(g)); });
  return out;
}

std::string f6(double x) { return format_fixed6(x); }

std::string join(const std::vector<std::string>& xs, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += sep;
    out += xs[i];
  }
  return out;
}

// --- energies ----------------------------------------------------------------

struct EnergiesCmd {
  Source src;
  bool json = false;
};

void run_energies(const EnergiesCmd& c, std::istream& in, std::ostream& out) {
  if (!c.json) out << "graph6,n,m,s_plus,s_minus,energy,positive,zero,negative\n";
  for_each_graph(c.src, in, [&](Graph&& g) {
    const auto r = survey_record(g);
    if (c.json) {
      out << to_json(r) << '\n';
      return;
    }
    out << fmt::format("{},{},{},{},{},{},{},{},{}\n", r.graph6, r.n, r.m, f6(r.s_plus), f6(r.s_minus),
                       f6(r.energy), r.inertia.positive, r.inertia.zero, r.inertia.negative);
  });
}

// --- certify -----------------------------------------------------------------

struct CertifyCmd {
  Source src;
  bool json = false;
  bool all = false;
  bool coverage = false;
  std::size_t depth = 2;
  std::vector<std::string> rules;
  std::string factor1;
  std::string factor2;
  unsigned threads = 1;
};

std::string_view verdict_name(bool plus, bool minus) {
  if (plus && minus) return "both";
  if (plus) return "s_plus";
  if (minus) return "s_minus";
  return "none";
}

void run_coverage(const CertifyCmd& c, std::istream& in, std::ostream& out) {
  const auto graphs = collect(c.src, in);
  for (const auto& g : graphs) {
    if (!is_connected(g)) throw DomainError("certify --coverage: input graph " + to_graph6(g) + " is disconnected");
  }
  const auto t = certify_corpus(graphs, c.threads);
  if (c.json) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : t.rows) {
      rows.push_back({{"rule", rule_name(r.rule)}, {"fired", r.fired}, {"conclusive", r.conclusive}});
    }
    nlohmann::json j = {{"graphs", t.graphs},
                        {"rules", rows},
                        {"certified_s_plus", t.certified_plus},
                        {"certified_s_minus", t.certified_minus},
                        {"certified_both", t.certified_both},
                        {"uncertified", t.uncertified},
                        {"unsound", t.unsound},
                        {"rederive_failures", t.rederive_failures},
                        {"conjecture_failures", t.conjecture_failures}};
    out << j.dump() << '\n';
    return;
  }
  out << "rule,fired,conclusive\n";
  for (const auto& r : t.rows) out << fmt::format("{},{},{}\n", rule_name(r.rule), r.fired, r.conclusive);
  out << fmt::format("# graphs={} certified_s_plus={} certified_s_minus={} certified_both={} unsound={} "
                     "rederive_failures={} conjecture_failures={}\n",
                     t.graphs, t.certified_plus, t.certified_minus, t.certified_both, t.unsound,
                     t.rederive_failures, t.conjecture_failures);
  for (const auto& g6 : t.uncertified) out << "# uncertified " << g6 << '\n';
}

void run_certify(const CertifyCmd& c, std::istream& in, std::ostream& out) {
  std::vector<Rule> only;
  for (const auto& name : c.rules) {
    const auto r = parse_rule(name);
    if (!r) throw UsageError("unknown rule '" + name + "'");
    only.push_back(*r);
  }
  if (c.factor1.empty() != c.factor2.empty()) throw UsageError("--factor1 and --factor2 must be given together");
  if (c.coverage) {
    if (!only.empty() || !c.factor1.empty()) throw UsageError("--coverage cannot be combined with --rule or factors");
    run_coverage(c, in, out);
    return;
  }
  std::optional<std::pair<Graph, Graph>> factors;
  if (!c.factor1.empty()) factors.emplace(from_graph6(c.factor1), from_graph6(c.factor2));

  if (!c.json) out << "graph6,rule,target,bound,conclusive\n";
  for_each_graph(c.src, in, [&](Graph&& g) {
    CertifyOptions opts;
    opts.bipartite_search_depth = c.depth;
    opts.include_inconclusive = c.all;
    auto certs = certify_graph(g, opts);
    if (factors) {
      if (auto k = check_kronecker(g, factors->first, factors->second); k && (c.all || k->conclusive)) {
        certs.push_back(std::move(*k));
      }
    }
    if (!only.empty()) {
      std::erase_if(certs, [&](const BoundCertificate& b) {
        return std::find(only.begin(), only.end(), b.rule) == only.end();
      });
    }
    const std::string g6 = to_graph6(g);
    bool plus = false;
    bool minus = false;
    for (const auto& b : certs) {
      if (b.conclusive) {
        plus = plus || b.target != Target::kSMinus;
        minus = minus || b.target != Target::kSPlus;
      }
      if (c.json) {
        out << to_json(b) << '\n';
      } else {
        out << fmt::format("{},{},{},{},{}\n", g6, rule_name(b.rule), target_name(b.target), f6(b.bound_value),
                           b.conclusive ? "conclusive" : "inconclusive");
      }
    }
    const double need = g.order() == 0 ? 0.0 : static_cast<double>(g.order() - 1);
    if (c.json) {
      const nlohmann::json v = {{"graph6", g6},
                                {"verdict", verdict_name(plus, minus)},
                                {"target_value", g.order() == 0 ? 0 : g.order() - 1},
                                {"certified_s_plus", plus},
                                {"certified_s_minus", minus}};
      out << v.dump() << '\n';
    } else {
      out << fmt::format("{},verdict,{},{},{}\n", g6, verdict_name(plus, minus), f6(need),
                         plus && minus ? "conclusive" : "inconclusive");
    }
  });
}

// --- scan / unicyclic-min ----------------------------------------------------

struct ScanCmd {
  Source src;
  std::size_t n = 0;
  bool table1 = false;
  bool json = false;
  bool records = false;
  bool certificates = false;
  unsigned threads = 1;
};

void report_notes(const SurveyReport& r, std::ostream& err) {
  if (r.conjecture_failures) err << fmt::format("note: {} graphs fall below n-1\n", r.conjecture_failures);
  if (r.total && !r.min_s_plus.unique()) err << "note: min s_plus is attained by several classes\n";
  if (r.total && !r.min_s_minus.unique()) err << "note: min s_minus is attained by several classes\n";
  if (r.min_near_rounding_boundary) err << "note: a reported minimum lies near a 6-decimal rounding boundary\n";
}

SurveyReport survey_with_records(std::span<const Graph> graphs, const ScanCmd& c, std::ostream& out) {
  SurveyOptions opts;
  opts.threads = c.threads;
  opts.certificates = c.certificates;
  if (c.records) opts.record_sink = [&](const SurveyRecord& r) { out << to_json(r) << '\n'; };
  return survey(graphs, opts);
}

void run_scan(const ScanCmd& c, std::istream& in, std::ostream& out, std::ostream& err) {
  if (c.records && !c.json) throw UsageError("--records requires --json");
  const auto graphs = c.n ? connected_graphs(c.n) : collect(c.src, in);
  const auto r = survey_with_records(graphs, c, out);
  if (c.json) {
    out << to_json(r) << '\n';
  } else if (c.table1) {
    out << "n,total,s_plus_gt,s_minus_gt,equal,bipartite\n";
    out << fmt::format("{},{},{},{},{},{}\n", r.n, r.total, r.s_plus_gt, r.s_minus_gt, r.equal, r.bipartite);
  } else {
    out << "n,total,s_plus_gt,s_minus_gt,equal,bipartite,min_s_plus,min_s_plus_g6,min_s_minus,min_s_minus_g6\n";
    out << fmt::format("{},{},{},{},{},{},{},{},{},{}\n", r.n, r.total, r.s_plus_gt, r.s_minus_gt, r.equal,
                       r.bipartite, f6(r.min_s_plus.value), join(r.min_s_plus.graph6, ";"),
                       f6(r.min_s_minus.value), join(r.min_s_minus.graph6, ";"));
  }
  report_notes(r, err);
}

struct UnicyclicCmd {
  ScanCmd scan;
  bool extended = false;
};

void run_unicyclic_min(const UnicyclicCmd& c, std::istream& in, std::ostream& out, std::ostream& err) {
  const ScanCmd& s = c.scan;
  if (s.records && !s.json) throw UsageError("--records requires --json");
  if (s.n > kMaxUnicyclicOrder && !c.extended) {
    throw UsageError(fmt::format("--n {} needs --extended (default cap {})", s.n, kMaxUnicyclicOrder));
  }
  std::vector<Graph> graphs;
  if (s.n) {
    graphs = unicyclic_nonbipartite_graphs(s.n, c.extended);
  } else {
    graphs = collect(s.src, in);
    for (const auto& g : graphs) {
      if (!is_connected(g) || g.size() != g.order() || is_bipartite(g)) {
        throw DomainError("unicyclic-min: " + to_graph6(g) + " is not a connected non-bipartite unicyclic graph");
      }
    }
  }
  const auto r = survey_with_records(graphs, s, out);
  if (s.json) {
    out << to_json(r) << '\n';
  } else {
    out << "n,total,min_s_plus,min_s_plus_g6,min_s_minus,min_s_minus_g6\n";
    out << fmt::format("{},{},{},{},{},{}\n", r.n, r.total, f6(r.min_s_plus.value), join(r.min_s_plus.graph6, ";"),
                       f6(r.min_s_minus.value), join(r.min_s_minus.graph6, ";"));
  }
  if (s.n > kMaxUnicyclicOrder) err << "note: orders above 14 are an extended run; treat the minima as evidence\n";
  report_notes(r, err);
}

// --- family / quotient / leaf-profile / m0-curve -----------------------------

struct FamilyCmd {
  std::string name;
  std::map<std::string, std::string> params;
  bool energies = false;
};

void run_family(const FamilyCmd& c, std::ostream& out) {
  const Family f = parse_family(c.name);
  const Graph g = generate_family(f, c.params);
  if (!c.energies) {
    out << to_graph6(g) << '\n';
    return;
  }
  const auto r = survey_record(g);
  out << "graph6,n,m,s_plus,s_minus,energy,positive,zero,negative\n";
  out << fmt::format("{},{},{},{},{},{},{},{},{}\n", r.graph6, r.n, r.m, f6(r.s_plus), f6(r.s_minus),
                     f6(r.energy), r.inertia.positive, r.inertia.zero, r.inertia.negative);
}

struct QuotientCmd {
  Source src;
  std::string partition;
  bool twins = false;
  bool json = false;
};

void run_quotient(const QuotientCmd& c, std::istream& in, std::ostream& out) {
  if (c.twins && !c.partition.empty()) throw UsageError("--twins and --partition are mutually exclusive");
  if (!c.json) out << "graph6,partition,equitable,eigenvalues,s_plus_lower,s_minus_lower\n";
  for_each_graph(c.src, in, [&](Graph&& g) {
    Partition x;
    if (!c.partition.empty()) {
      x = Partition::parse(g.order(), c.partition);
    } else if (c.twins) {
      x = coarsest_equitable_refinement(g, twin_partition(g));
    } else {
      x = coarsest_equitable_refinement(g, Partition::trivial(g.order()));
    }
    const auto q = quotient_matrix(g, x);
    const auto spec = c.twins ? twin_quotient_spectrum(g, x) : quotient_spectrum(q);
    const auto b = energy_profile(spec);
    std::vector<std::string> ev;
    for (double v : spec.values) ev.push_back(f6(v));
    if (c.json) {
      nlohmann::json vals = nlohmann::json::array();
      for (double v : spec.values) vals.push_back(std::round(v * 1e6) / 1e6);
      const nlohmann::json j = {{"graph6", to_graph6(g)},   {"partition", x.to_string()},
                                {"equitable", q.equitable}, {"eigenvalues", vals},
                                {"s_plus_lower", std::round(b.s_plus * 1e6) / 1e6},
                                {"s_minus_lower", std::round(b.s_minus * 1e6) / 1e6}};
      out << j.dump() << '\n';
      return;
    }
    out << fmt::format("{},\"{}\",{},{},{},{}\n", to_graph6(g), x.to_string(), q.equitable ? "true" : "false",
                       join(ev, " "), f6(b.s_plus), f6(b.s_minus));
  });
}

void run_leaf_profile(const Source& src, std::istream& in, std::ostream& out) {
  out << "graph6,v,d_plus,d_minus\n";
  for_each_graph(src, in, [&](Graph&& g) {
    const std::string g6 = to_graph6(g);
    for (const auto& r : leaf_increment_profile(g)) {
      out << fmt::format("{},{},{},{}\n", g6, r.v, f6(r.d_plus), f6(r.d_minus));
    }
  });
}

void run_m0_curve(std::size_t lo, std::size_t hi, std::ostream& out) {
  out << "n,m0\n";
  for (const auto& [n, m] : m0_curve(lo, hi)) out << fmt::format("{},{}\n", n, f6(m));
}

std::vector<std::string> family_names() {
  std::vector<std::string> out;
  for (int i = 0; i <= static_cast<int>(Family::kThreshold); ++i) {
    out.emplace_back(family_name(static_cast<Family>(i)));
  }
  return out;
}

}  // namespace

int run(std::span<const std::string> args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Square positive and negative energies of graphs"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Help for every subcommand");

  std::string output_path;
  unsigned threads = default_thread_count();
  app.add_option("--output,-o", output_path, "Write results here instead of standard output");
  app.add_option("--threads", threads, "Worker cap for surveys (default: SQENERGY_THREADS or all cores)")
      ->check(CLI::PositiveNumber);

  EnergiesCmd energies;
  auto* s_energies = app.add_subcommand("energies", "s+, s-, energy and inertia per graph");
  add_source(s_energies, energies.src);
  s_energies->add_flag("--json", energies.json, "One JSON record per graph");

  CertifyCmd certify;
  auto* s_certify = app.add_subcommand("certify", "Bound certificates per graph, then a verdict line");
  add_source(s_certify, certify.src);
  s_certify->add_flag("--json", certify.json, "Emit certificate objects");
  s_certify->add_flag("--all", certify.all, "Include inconclusive certificates");
  s_certify->add_flag("--coverage", certify.coverage, "Per-rule coverage table over the whole input");
  s_certify->add_option("--rule", certify.rules, "Keep only these rules (repeatable)");
  s_certify->add_option("--depth", certify.depth, "Induced-bipartite deletion search depth")
      ->check(CLI::Range(0, 4));
  auto* f1 = s_certify->add_option("--factor1", certify.factor1, "Kronecker factor G (graph6)");
  auto* f2 = s_certify->add_option("--factor2", certify.factor2, "Kronecker factor H (graph6)");
  f1->needs(f2);
  f2->needs(f1);

  ScanCmd scan;
  auto* s_scan = app.add_subcommand("scan", "Survey all connected graphs of one order, or the input");
  add_source(s_scan, scan.src);
  auto* scan_n = s_scan->add_option("--n", scan.n, "Enumerate connected graphs of this order")
                     ->check(CLI::Range(std::size_t{1}, kMaxConnectedOrder));
  scan_n->excludes("--g6")->excludes("--input");
  s_scan->add_flag("--table1", scan.table1, "Only the count columns");
  s_scan->add_flag("--json", scan.json, "Report as JSON");
  s_scan->add_flag("--records", scan.records, "Per-graph JSON records before the report");
  s_scan->add_flag("--certificates", scan.certificates, "Attach conclusive rule names to records");

  UnicyclicCmd uni;
  auto* s_uni = app.add_subcommand("unicyclic-min", "Minima over non-bipartite unicyclic graphs");
  add_source(s_uni, uni.scan.src);
  auto* uni_n = s_uni->add_option("--n", uni.scan.n, "Enumerate graphs of this order")
                    ->check(CLI::Range(std::size_t{3}, kMaxUnicyclicOrderExtended));
  uni_n->excludes("--g6")->excludes("--input");
  s_uni->add_flag("--extended", uni.extended, "Allow orders 15..18");
  s_uni->add_flag("--json", uni.scan.json, "Report as JSON");
  s_uni->add_flag("--records", uni.scan.records, "Per-graph JSON records before the report");

  FamilyCmd family;
  std::string fam_n, fam_k, fam_a, fam_b, fam_seq;
  auto* s_family = app.add_subcommand("family", "Emit a named graph as graph6");
  s_family->add_option("name", family.name, "Family name")->required()->check(CLI::IsMember(family_names()));
  s_family->add_option("--n", fam_n, "Order");
  s_family->add_option("--k", fam_k, "Clique or cycle size");
  s_family->add_option("--a", fam_a, "First side of K_{a,b}");
  s_family->add_option("--b", fam_b, "Second side of K_{a,b}");
  s_family->add_option("--seq", fam_seq, "Threshold creation string over {i,d}");
  s_family->add_flag("--energies", family.energies, "Print the energies row instead of graph6");

  QuotientCmd quotient;
  auto* s_quot = app.add_subcommand("quotient", "Quotient matrix spectrum for a partition");
  add_source(s_quot, quotient.src);
  s_quot->add_option("--partition", quotient.partition,
                     "Blocks as \"0,1;2;3\" (default: coarsest equitable refinement)");
  s_quot->add_flag("--twins", quotient.twins, "Refine the twin partition and add twin eigenvalues");
  s_quot->add_flag("--json", quotient.json, "One JSON object per graph");

  Source leaf;
  auto* s_leaf = app.add_subcommand("leaf-profile", "s± increments from adding a leaf at each vertex");
  add_source(s_leaf, leaf);

  std::size_t m0_lo = 3;
  std::size_t m0_hi = 100;
  auto* s_m0 = app.add_subcommand("m0-curve", "Cycle-length threshold as a function of n");
  s_m0->add_option("--from", m0_lo, "Smallest n")->check(CLI::Range(std::size_t{3}, std::size_t{1000000}));
  s_m0->add_option("--to", m0_hi, "Largest n")->check(CLI::Range(std::size_t{3}, std::size_t{1000000}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == static_cast<int>(CLI::ExitCodes::Success) ? kExitOk : kExitUsage;
  }

  std::unique_ptr<std::ofstream> file;
  if (!output_path.empty()) {
    file = std::make_unique<std::ofstream>(output_path);
    if (!*file) {
      err << "error: cannot write '" << output_path << "'\n";
      return kExitComputation;
    }
  }
  std::ostream& sink = file ? *file : out;
  certify.threads = scan.threads = uni.scan.threads = threads;

  try {
    if (*s_energies) {
      run_energies(energies, in, sink);
    } else if (*s_certify) {
      run_certify(certify, in, sink);
    } else if (*s_scan) {
      run_scan(scan, in, sink, err);
    } else if (*s_uni) {
      run_unicyclic_min(uni, in, sink, err);
    } else if (*s_family) {
      for (auto [key, value] : {std::pair{"n", &fam_n}, {"k", &fam_k}, {"a", &fam_a}, {"b", &fam_b}, {"seq", &fam_seq}}) {
        if (!value->empty()) family.params[key] = *value;
      }
      run_family(family, sink);
    } else if (*s_quot) {
      run_quotient(quotient, in, sink);
    } else if (*s_leaf) {
      run_leaf_profile(leaf, in, sink);
    } else if (*s_m0) {
      if (m0_hi < m0_lo) throw UsageError("--to must be at least --from");
      run_m0_curve(m0_lo, m0_hi, sink);
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "input error: " << e.what() << '\n';
    return kExitComputation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitComputation;
  }
  sink.flush();
  return kExitOk;
}

}  // namespace sqe::cli
