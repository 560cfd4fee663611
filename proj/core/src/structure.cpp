#include "sqenergy/structure.hpp"

#include <algorithm>
#include <functional>
#include <queue>

#include "sqenergy/errors.hpp"

namespace sqe {

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  std::vector<std::vector<Vertex>> comps;
  std::vector<bool> seen(g.order(), false);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp{s};
    seen[s] = true;
    for (std::size_t head = 0; head < comp.size(); ++head) {
      for (Vertex w : g.neighbors(comp[head])) {
        if (!seen[w]) {
          seen[w] = true;
          comp.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

bool is_connected(const Graph& g) { return g.order() <= 1 || connected_components(g).size() == 1; }

std::optional<std::vector<std::uint8_t>> two_coloring(const Graph& g) {
  constexpr std::uint8_t kUnset = 2;
  std::vector<std::uint8_t> colour(g.order(), kUnset);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (colour[s] != kUnset) continue;
    colour[s] = 0;
    std::queue<Vertex> q;
    q.push(s);
    while (!q.empty()) {
      const Vertex v = q.front();
      q.pop();
      for (Vertex w : g.neighbors(v)) {
        if (colour[w] == kUnset) {
          colour[w] = static_cast<std::uint8_t>(1 - colour[v]);
          q.push(w);
        } else if (colour[w] == colour[v]) {
          return std::nullopt;
        }
      }
    }
  }
  return colour;
}

GraphStats stats(const Graph& g) {
  GraphStats s;
  s.n = g.order();
  s.m = g.size();
  s.avg_degree = s.n ? 2.0 * static_cast<double>(s.m) / static_cast<double>(s.n) : 0.0;
  s.max_degree = g.max_degree();
  s.connected = is_connected(g);
  s.bipartition = two_coloring(g);
  s.bipartite = s.bipartition.has_value();
  return s;
}

std::vector<Vertex> dominating_vertices(const Graph& g) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) + 1 == g.order()) out.push_back(v);
  }
  return out;
}

namespace {

// Hopcroft-Tarjan lowpoint DFS. Calls on_block with the edges of each
// biconnected component as it is closed off.
struct BlockFinder {
  const Graph& g;
  std::vector<int> disc;
  std::vector<int> low;
  std::vector<bool> cut;
  std::vector<Edge> stack;
  std::function<void(std::vector<Edge>&&)> on_block;
  int timer = 0;

  explicit BlockFinder(const Graph& graph)
      : g(graph), disc(graph.order(), -1), low(graph.order(), 0), cut(graph.order(), false) {}

  void dfs(Vertex v, int parent) {
    disc[v] = low[v] = timer++;
    int children = 0;
    for (Vertex w : g.neighbors(v)) {
      if (disc[w] < 0) {
        ++children;
        stack.push_back(Edge::make(v, w));
        dfs(w, static_cast<int>(v));
        low[v] = std::min(low[v], low[w]);
        if (low[w] >= disc[v]) {
          if (parent >= 0) cut[v] = true;
          std::vector<Edge> block;
          const Edge top = Edge::make(v, w);
          while (true) {
            Edge e = stack.back();
            stack.pop_back();
            block.push_back(e);
            if (e == top) break;
          }
          if (on_block) on_block(std::move(block));
        }
      } else if (static_cast<int>(w) != parent && disc[w] < disc[v]) {
        stack.push_back(Edge::make(v, w));
        low[v] = std::min(low[v], disc[w]);
      }
    }
    if (parent < 0 && children > 1) cut[v] = true;
  }

  void run() {
    for (Vertex v = 0; v < g.order(); ++v) {
      if (disc[v] < 0) dfs(v, -1);
    }
  }
};

std::vector<Vertex> order_cycle(const std::vector<Edge>& block) {
  std::vector<Vertex> verts;
  for (const Edge& e : block) {
    verts.push_back(e.u);
    verts.push_back(e.v);
  }
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  auto nbrs = [&](Vertex x) {
    std::vector<Vertex> out;
    for (const Edge& e : block) {
      if (e.u == x) out.push_back(e.v);
      if (e.v == x) out.push_back(e.u);
    }
    std::sort(out.begin(), out.end());
    return out;
  };
  std::vector<Vertex> cycle{verts.front()};
  Vertex prev = verts.front();
  Vertex cur = nbrs(prev).front();
  while (cur != verts.front()) {
    cycle.push_back(cur);
    auto nb = nbrs(cur);
    const Vertex next = nb[0] == prev ? nb[1] : nb[0];
    prev = cur;
    cur = next;
  }
  return cycle;
}

}  // namespace

std::vector<Vertex> articulation_points(const Graph& g) {
  BlockFinder f(g);
  f.run();
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (f.cut[v]) out.push_back(v);
  }
  return out;
}

CactusProfile cactus_profile(const Graph& g) {
  if (!is_connected(g)) throw DomainError("cactus_profile: graph is not connected");
  CactusProfile p;
  p.is_cactus = true;
  BlockFinder f(g);
  f.on_block = [&](std::vector<Edge>&& block) {
    if (!p.is_cactus || block.size() == 1) return;
    std::vector<Vertex> verts;
    for (const Edge& e : block) {
      verts.push_back(e.u);
      verts.push_back(e.v);
    }
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    if (verts.size() != block.size()) {
      p.is_cactus = false;
      return;
    }
    p.cycles.push_back(order_cycle(block));
  };
  f.run();
  if (!p.is_cactus) {
    p.cycles.clear();
    return p;
  }
  std::sort(p.cycles.begin(), p.cycles.end());
  for (const auto& c : p.cycles) {
    if (c.size() % 2) {
      ++p.odd_count;
    } else {
      ++p.even_count;
    }
  }
  return p;
}

std::optional<std::vector<Vertex>> unicyclic_cycle(const Graph& g) {
  if (g.order() < 3 || g.size() != g.order() || !is_connected(g)) return std::nullopt;
  auto p = cactus_profile(g);
  if (!p.is_cactus || p.cycles.size() != 1) return std::nullopt;
  return p.cycles.front();
}

}  // namespace sqe
