#include "sqenergy/canonical.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "sqenergy/errors.hpp"
#include "sqenergy/graph6.hpp"
#include "sqenergy/operations.hpp"

namespace sqe {

namespace {

using Cells = std::vector<std::vector<Vertex>>;
using Perm = std::vector<Vertex>;

class Search {
 public:
  explicit Search(const Graph& g) : g_(g), n_(g.order()), twin_rep_(n_) {
    // twin_rep_[v]: smallest vertex with the same open or closed neighbourhood.
    for (Vertex v = 0; v < n_; ++v) {
      twin_rep_[v] = v;
      const std::uint64_t open = g_.mask(v);
      const std::uint64_t closed = open | (std::uint64_t{1} << v);
      for (Vertex w = 0; w < v; ++w) {
        const std::uint64_t ow = g_.mask(w);
        if (ow == open || (ow | (std::uint64_t{1} << w)) == closed) {
          twin_rep_[v] = twin_rep_[w];
          break;
        }
      }
    }
  }

  CanonicalLabelling run() {
    Cells cells;
    if (n_) {
      cells.emplace_back(n_);
      std::iota(cells.back().begin(), cells.back().end(), Vertex{0});
    }
    std::vector<Vertex> prefix;
    descend(std::move(cells), prefix);
    CanonicalLabelling out;
    out.label = std::move(best_label_);
    out.key = std::move(best_key_);
    return out;
  }

 private:
  void refine(Cells& cells) const {
    std::vector<std::uint64_t> cm;
    std::vector<std::vector<std::uint8_t>> sig(n_);
    bool changed = true;
    while (changed) {
      changed = false;
      cm.assign(cells.size(), 0);
      for (std::size_t j = 0; j < cells.size(); ++j) {
        for (Vertex v : cells[j]) cm[j] |= std::uint64_t{1} << v;
      }
      Cells next;
      next.reserve(n_);
      for (auto& cell : cells) {
        if (cell.size() == 1) {
          next.push_back(std::move(cell));
          continue;
        }
        for (Vertex v : cell) {
          sig[v].resize(cm.size());
          for (std::size_t j = 0; j < cm.size(); ++j) {
            sig[v][j] = static_cast<std::uint8_t>(std::popcount(g_.mask(v) & cm[j]));
          }
        }
        std::stable_sort(cell.begin(), cell.end(), [&](Vertex a, Vertex b) { return sig[a] < sig[b]; });
        std::size_t start = 0;
        for (std::size_t i = 1; i <= cell.size(); ++i) {
          if (i == cell.size() || sig[cell[i]] != sig[cell[start]]) {
            std::vector<Vertex> part(cell.begin() + static_cast<std::ptrdiff_t>(start),
                                     cell.begin() + static_cast<std::ptrdiff_t>(i));
            std::sort(part.begin(), part.end());
            next.push_back(std::move(part));
            start = i;
          }
        }
        if (next.back().size() != cell.size()) changed = true;
      }
      cells = std::move(next);
    }
  }

  void leaf(const Cells& cells) {
    Perm label(n_);
    for (std::size_t i = 0; i < n_; ++i) label[cells[i][0]] = static_cast<Vertex>(i);
    std::vector<std::uint64_t> key(n_, 0);
    for (std::size_t i = 0; i < n_; ++i) {
      std::uint64_t row = 0;
      std::uint64_t m = g_.mask(cells[i][0]);
      while (m) {
        row |= std::uint64_t{1} << label[static_cast<Vertex>(std::countr_zero(m))];
        m &= m - 1;
      }
      key[i] = row;
    }
    if (best_key_.empty() || key > best_key_) {
      best_key_ = std::move(key);
      best_label_ = std::move(label);
      return;
    }
    if (key == best_key_) {
      // Same relabelled graph: best^-1 o this is an automorphism.
      Perm inv(n_);
      for (Vertex v = 0; v < n_; ++v) inv[best_label_[v]] = v;
      Perm gamma(n_);
      bool identity = true;
      for (Vertex v = 0; v < n_; ++v) {
        gamma[v] = inv[label[v]];
        identity = identity && gamma[v] == v;
      }
      if (!identity) automorphisms_.push_back(std::move(gamma));
    }
  }

  // Orbit representative of v under the automorphisms fixing `prefix`.
  std::vector<Vertex> stabiliser_orbits(const std::vector<Vertex>& prefix) const {
    std::vector<Vertex> parent(n_);
    std::iota(parent.begin(), parent.end(), Vertex{0});
    auto find = [&](Vertex x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& p : automorphisms_) {
      const bool fixes = std::all_of(prefix.begin(), prefix.end(), [&](Vertex x) { return p[x] == x; });
      if (!fixes) continue;
      for (Vertex v = 0; v < n_; ++v) {
        const Vertex a = find(v);
        const Vertex b = find(p[v]);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
    for (Vertex v = 0; v < n_; ++v) parent[v] = find(v);
    return parent;
  }

  void descend(Cells cells, std::vector<Vertex>& prefix) {
    refine(cells);
    if (cells.size() == n_) {
      leaf(cells);
      return;
    }
    std::size_t t = 0;
    while (cells[t].size() == 1) ++t;
    const std::vector<Vertex> target = cells[t];
    std::vector<Vertex> explored;
    for (Vertex v : target) {
      // A twin of an earlier cell member is reached by a transposition that
      // fixes the prefix.
      if (twin_rep_[v] != v &&
          std::find(target.begin(), target.end(), twin_rep_[v]) != target.end()) {
        continue;
      }
      if (!explored.empty()) {
        const auto orbit = stabiliser_orbits(prefix);
        const bool seen = std::any_of(explored.begin(), explored.end(),
                                      [&](Vertex w) { return orbit[w] == orbit[v]; });
        if (seen) continue;
      }
      Cells child;
      child.reserve(cells.size() + 1);
      for (std::size_t j = 0; j < cells.size(); ++j) {
        if (j != t) {
          child.push_back(cells[j]);
          continue;
        }
        child.push_back({v});
        std::vector<Vertex> rest;
        for (Vertex w : cells[j]) {
          if (w != v) rest.push_back(w);
        }
        child.push_back(std::move(rest));
      }
      prefix.push_back(v);
      descend(std::move(child), prefix);
      prefix.pop_back();
      explored.push_back(v);
    }
  }

  const Graph& g_;
  std::size_t n_;
  std::vector<Vertex> twin_rep_;
  std::vector<std::uint64_t> best_key_;
  Perm best_label_;
  std::vector<Perm> automorphisms_;
};

}  // namespace

CanonicalLabelling canonical_labelling(const Graph& g) {
  if (g.order() > kCanonicalMaxOrder) {
    throw DomainError("canonical_labelling: order " + std::to_string(g.order()) + " exceeds " +
                      std::to_string(kCanonicalMaxOrder));
  }
  return Search(g).run();
}

Graph canonical_graph(const Graph& g) { return relabel(g, canonical_labelling(g).label); }

std::string canonical_graph6(const Graph& g) { return to_graph6(canonical_graph(g)); }

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  return canonical_labelling(a).key == canonical_labelling(b).key;
}

}  // namespace sqe
