#include "sqenergy/families.hpp"

#include <charconv>
#include <string>

#include "sqenergy/errors.hpp"

namespace sqe {

namespace {

struct FamilyName {
  Family family;
  std::string_view name;
};

constexpr FamilyName kNames[] = {
    {Family::kPath, "path"},
    {Family::kCycle, "cycle"},
    {Family::kStar, "star"},
    {Family::kComplete, "complete"},
    {Family::kCompleteBipartite, "complete_bipartite"},
    {Family::kBarbell, "barbell"},
    {Family::kExtendedBarbell, "extended_barbell"},
    {Family::kUn3, "U_n3"},
    {Family::kHkn, "H_kn"},
    {Family::kThreshold, "threshold"},
};

void require(bool ok, const std::string& constraint) {
  if (!ok) throw DomainError("invalid family parameters: " + constraint);
}

std::size_t param(const std::map<std::string, std::string>& params, const std::string& key) {
  auto it = params.find(key);
  if (it == params.end()) throw DomainError("missing family parameter '" + key + "'");
  std::size_t value = 0;
  const auto& s = it->second;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw DomainError("family parameter '" + key + "' is not a non-negative integer: " + s);
  }
  return value;
}

void add_clique(GraphBuilder& b, Vertex first, std::size_t k) {
  for (Vertex i = first; i < first + k; ++i) {
    for (Vertex j = i + 1; j < first + k; ++j) b.add_edge(i, j);
  }
}

}  // namespace

Family parse_family(std::string_view name) {
  for (const auto& f : kNames) {
    if (f.name == name) return f.family;
  }
  throw DomainError("unknown family '" + std::string(name) + "'");
}

std::string_view family_name(Family f) {
  for (const auto& entry : kNames) {
    if (entry.family == f) return entry.name;
  }
  return "?";
}

Graph path_graph(std::size_t n) {
  GraphBuilder b(n);
  for (Vertex i = 1; i < n; ++i) b.add_edge(i - 1, i);
  return std::move(b).build();
}

Graph cycle_graph(std::size_t n) {
  require(n >= 3, "cycle needs n >= 3");
  GraphBuilder b(n);
  for (Vertex i = 1; i < n; ++i) b.add_edge(i - 1, i);
  b.add_edge(static_cast<Vertex>(n - 1), 0);
  return std::move(b).build();
}

Graph star_graph(std::size_t n) {
  require(n >= 1, "star needs n >= 1");
  GraphBuilder b(n);
  for (Vertex i = 1; i < n; ++i) b.add_edge(0, i);
  return std::move(b).build();
}

Graph complete_graph(std::size_t n) {
  GraphBuilder b(n);
  add_clique(b, 0, n);
  return std::move(b).build();
}

Graph complete_bipartite_graph(std::size_t a, std::size_t b_size) {
  GraphBuilder b(a + b_size);
  for (Vertex i = 0; i < a; ++i) {
    for (Vertex j = 0; j < b_size; ++j) b.add_edge(i, static_cast<Vertex>(a + j));
  }
  return std::move(b).build();
}

Graph barbell_graph(std::size_t k) {
  require(k >= 2, "barbell needs k >= 2");
  GraphBuilder b(2 * k);
  add_clique(b, 0, k);
  add_clique(b, static_cast<Vertex>(k), k);
  b.add_edge(static_cast<Vertex>(k - 1), static_cast<Vertex>(k));
  return std::move(b).build();
}

Graph extended_barbell_graph(std::size_t k) {
  require(k >= 3, "extended_barbell needs k >= 3");
  GraphBuilder b(2 * k + 1);
  add_clique(b, 0, k);
  add_clique(b, static_cast<Vertex>(k), k);
  const auto mid = static_cast<Vertex>(2 * k);
  b.add_edge(static_cast<Vertex>(k - 1), mid);
  b.add_edge(mid, static_cast<Vertex>(k));
  return std::move(b).build();
}

Graph un3_graph(std::size_t n) {
  require(n >= 3, "U_n3 needs n >= 3");
  GraphBuilder b(n);
  for (Vertex i = 1; i < n; ++i) b.add_edge(0, i);
  b.add_edge(1, 2);
  return std::move(b).build();
}

Graph hkn_graph(std::size_t n, std::size_t k) {
  require(k >= 3, "H_kn needs k >= 3");
  require(n >= k + 2, "H_kn needs n >= k + 2");
  GraphBuilder b(n);
  for (Vertex i = 1; i < k; ++i) b.add_edge(i - 1, i);
  b.add_edge(static_cast<Vertex>(k - 1), 0);
  const auto centre = static_cast<Vertex>(k);
  b.add_edge(static_cast<Vertex>(k - 1), centre);
  for (Vertex leaf = centre + 1; leaf < n; ++leaf) b.add_edge(centre, leaf);
  return std::move(b).build();
}

Graph threshold_graph(std::string_view creation) {
  GraphBuilder b(creation.size() + 1);
  for (std::size_t i = 0; i < creation.size(); ++i) {
    const auto v = static_cast<Vertex>(i + 1);
    if (creation[i] == 'd') {
      for (Vertex u = 0; u < v; ++u) b.add_edge(u, v);
    } else if (creation[i] != 'i') {
      throw DomainError("threshold creation string may only contain 'i' and 'd', got '" +
                        std::string(1, creation[i]) + "' at position " + std::to_string(i));
    }
  }
  return std::move(b).build();
}

Graph generate_family(Family family, const std::map<std::string, std::string>& params) {
  switch (family) {
    case Family::kPath: return path_graph(param(params, "n"));
    case Family::kCycle: return cycle_graph(param(params, "n"));
    case Family::kStar: return star_graph(param(params, "n"));
    case Family::kComplete: return complete_graph(param(params, "n"));
    case Family::kCompleteBipartite: return complete_bipartite_graph(param(params, "a"), param(params, "b"));
    case Family::kBarbell: return barbell_graph(param(params, "k"));
    case Family::kExtendedBarbell: return extended_barbell_graph(param(params, "k"));
    case Family::kUn3: return un3_graph(param(params, "n"));
    case Family::kHkn: return hkn_graph(param(params, "n"), param(params, "k"));
    case Family::kThreshold: {
      auto it = params.find("seq");
      return threshold_graph(it == params.end() ? std::string_view{} : std::string_view{it->second});
    }
  }
  throw DomainError("unhandled family");
}

}  // namespace sqe
