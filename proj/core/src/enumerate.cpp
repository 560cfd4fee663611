#include "sqenergy/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "sqenergy/canonical.hpp"
#include "sqenergy/errors.hpp"
#include "sqenergy/operations.hpp"
#include "sqenergy/structure.hpp"

namespace sqe {

namespace {

Graph extend(const Graph& p, std::uint64_t attach) {
  const std::size_t m = p.order();
  GraphBuilder b(m + 1);
  for (const Edge& e : p.edges()) b.add_edge(e.u, e.v);
  for (Vertex s = 0; s < m; ++s) {
    if ((attach >> s) & 1U) b.add_edge(s, static_cast<Vertex>(m));
  }
  return std::move(b).build();
}

// Children of one parent, deduplicated, in attachment-mask order.
std::vector<Graph> children_of(const Graph& parent) {
  const std::size_t m = parent.order();
  const auto parent_key = canonical_labelling(parent).key;
  const auto v = static_cast<Vertex>(m);
  std::set<std::vector<std::uint64_t>> seen;
  std::vector<Graph> out;
  for (std::uint64_t s = 1; s < (std::uint64_t{1} << m); ++s) {
    const auto child = extend(parent, s);
    const std::size_t dv = static_cast<std::size_t>(std::popcount(s));

    const auto cuts = articulation_points(child);
    std::vector<bool> is_cut(m + 1, false);
    for (Vertex c : cuts) is_cut[c] = true;
    std::size_t dmin = dv;
    for (Vertex w = 0; w <= m; ++w) {
      if (!is_cut[w]) dmin = std::min(dmin, child.degree(w));
    }
    if (dv != dmin) continue;
    std::vector<Vertex> cand;
    for (Vertex w = 0; w <= m; ++w) {
      if (!is_cut[w] && child.degree(w) == dmin) cand.push_back(w);
    }

    const auto lab = canonical_labelling(child);
    if (cand.size() > 1) {
      const Vertex c = *std::max_element(cand.begin(), cand.end(),
                                         [&](Vertex a, Vertex b) { return lab.label[a] < lab.label[b]; });
      if (c != v) {
        const std::vector<Vertex> drop{c};
        if (canonical_labelling(delete_vertices(child, drop).graph).key != parent_key) continue;
      }
    }
    if (seen.insert(lab.key).second) out.push_back(relabel(child, lab.label));
  }
  return out;
}

struct RootedTree {
  std::size_t size = 1;
  std::vector<std::size_t> children;  // non-increasing ids
};

class TreeCatalogue {
 public:
  explicit TreeCatalogue(std::size_t max_size) : by_size_(max_size + 1) {
    if (max_size == 0) return;
    trees_.push_back(RootedTree{});
    by_size_[1].push_back(0);
    for (std::size_t s = 2; s <= max_size; ++s) {
      std::vector<RootedTree> found;
      std::vector<std::size_t> chosen;
      build(s, s - 1, trees_.size(), chosen, found);
      for (auto& t : found) {
        by_size_[s].push_back(trees_.size());
        trees_.push_back(std::move(t));
      }
    }
  }

  const RootedTree& tree(std::size_t id) const { return trees_[id]; }
  const std::vector<std::size_t>& of_size(std::size_t s) const { return by_size_.at(s); }

 private:
  // Non-increasing child id sequences with total size `remaining`, ids < bound.
  void build(std::size_t s, std::size_t remaining, std::size_t bound, std::vector<std::size_t>& chosen,
             std::vector<RootedTree>& found) const {
    if (remaining == 0) {
      found.push_back(RootedTree{s, chosen});
      return;
    }
    for (std::size_t id = bound; id-- > 0;) {
      if (trees_[id].size > remaining) continue;
      chosen.push_back(id);
      build(s, remaining - trees_[id].size, id + 1, chosen, found);
      chosen.pop_back();
    }
  }

  std::vector<RootedTree> trees_;
  std::vector<std::vector<std::size_t>> by_size_;
};

bool dihedral_minimal(const std::vector<std::size_t>& seq) {
  const std::size_t k = seq.size();
  for (std::size_t r = 0; r < k; ++r) {
    for (int dir : {1, -1}) {
      if (r == 0 && dir == 1) continue;
      for (std::size_t i = 0; i < k; ++i) {
        const std::size_t j = dir == 1 ? (r + i) % k : (r + k - i) % k;
        if (seq[j] < seq[i]) return false;
        if (seq[j] > seq[i]) break;
      }
    }
  }
  return true;
}

void attach(const TreeCatalogue& cat, std::size_t id, Vertex root, Vertex& next, GraphBuilder& b) {
  for (std::size_t child : cat.tree(id).children) {
    const Vertex w = next++;
    b.add_edge(root, w);
    attach(cat, child, w, next, b);
  }
}

class CycleSequences {
 public:
  CycleSequences(const TreeCatalogue& cat, std::size_t n, std::size_t k, const GraphSink& sink)
      : cat_(cat), n_(n), k_(k), sink_(sink) {}

  void run() {
    std::vector<std::size_t> seq;
    place(seq, n_);
  }

 private:
  void place(std::vector<std::size_t>& seq, std::size_t remaining) {
    const std::size_t slots = k_ - seq.size();
    if (slots == 0) {
      if (remaining == 0 && dihedral_minimal(seq)) emit(seq);
      return;
    }
    const std::size_t hi = remaining - (slots - 1);
    for (std::size_t s = 1; s <= hi; ++s) {
      for (std::size_t id : cat_.of_size(s)) {
        // The least rotation starts with the smallest id.
        if (!seq.empty() && id < seq.front()) continue;
        seq.push_back(id);
        place(seq, remaining - s);
        seq.pop_back();
      }
    }
  }

  void emit(const std::vector<std::size_t>& seq) {
    GraphBuilder b(n_);
    for (Vertex i = 0; i < k_; ++i) b.add_edge(i, static_cast<Vertex>((i + 1) % k_));
    auto next = static_cast<Vertex>(k_);
    for (Vertex i = 0; i < k_; ++i) attach(cat_, seq[i], i, next, b);
    sink_(std::move(b).build());
  }

  const TreeCatalogue& cat_;
  std::size_t n_;
  std::size_t k_;
  const GraphSink& sink_;
};

}  // namespace

void enumerate_connected(std::size_t n, const GraphSink& sink) {
  if (n < 1 || n > kMaxConnectedOrder) {
    throw DomainError("enumerate_connected: n must lie in 1.." + std::to_string(kMaxConnectedOrder) + ", got " +
                      std::to_string(n));
  }
  std::vector<Graph> level{Graph(1)};
  for (std::size_t order = 2; order <= n; ++order) {
    std::vector<Graph> next;
    for (const auto& p : level) {
      auto kids = children_of(p);
      if (order == n) {
        for (const auto& c : kids) sink(c);
      } else {
        for (auto& c : kids) next.push_back(std::move(c));
      }
    }
    level = std::move(next);
  }
  if (n == 1) sink(level.front());
}

std::vector<Graph> connected_graphs(std::size_t n) {
  std::vector<Graph> out;
  enumerate_connected(n, [&](const Graph& g) { out.push_back(g); });
  return out;
}

void enumerate_unicyclic_nonbipartite(std::size_t n, const GraphSink& sink, bool extended) {
  const std::size_t cap = extended ? kMaxUnicyclicOrderExtended : kMaxUnicyclicOrder;
  if (n < 3 || n > cap) {
    throw DomainError("enumerate_unicyclic_nonbipartite: n must lie in 3.." + std::to_string(cap) + ", got " +
                      std::to_string(n) + (extended ? "" : " (orders above 14 need the extended flag)"));
  }
  const TreeCatalogue cat(n - 2);
  for (std::size_t k = 3; k <= n; k += 2) CycleSequences(cat, n, k, sink).run();
}

std::vector<Graph> unicyclic_nonbipartite_graphs(std::size_t n, bool extended) {
  std::vector<Graph> out;
  enumerate_unicyclic_nonbipartite(n, [&](const Graph& g) { out.push_back(g); }, extended);
  return out;
}

std::size_t rooted_tree_count(std::size_t s) {
  if (s == 0) throw DomainError("rooted_tree_count: size must be positive");
  return TreeCatalogue(s).of_size(s).size();
}

}  // namespace sqe
