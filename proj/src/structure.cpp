#include "twocycles/structure.hpp"

#include <vector>

#include "twocycles/hamilton.hpp"

namespace twocycles {

StructureKind kind_of(const StructureClass& s) {
  return static_cast<StructureKind>(s.index());
}

std::string_view to_string(StructureKind k) {
  switch (k) {
    case StructureKind::hamilton_cycle: return "hamilton_cycle";
    case StructureKind::near_bipartite: return "near_bipartite";
    case StructureKind::cone_over_cliques: return "cone_over_cliques";
  }
  return "?";
}

namespace {

bool is_clique(const Graph& g, VertexSet s) {
  for (Vertex v : s)
    if (!(s.without(v)).subset_of(g.neighbors(v))) return false;
  return true;
}

bool is_independent(const Graph& g, VertexSet s) {
  for (Vertex v : s)
    if (!g.neighbors(v).disjoint(s)) return false;
  return true;
}

bool fully_joined(const Graph& g, VertexSet a, VertexSet b) {
  for (Vertex v : a)
    if (!b.subset_of(g.neighbors(v))) return false;
  return true;
}

// Branch and bound over independent sets of a fixed size whose members all
// see exactly the complement (the near-bipartite shape forces N(s) = T).
class IndependentSetSearch {
 public:
  IndependentSetSearch(const Graph& g, int target) : g_(g), target_(target) {}

  std::optional<VertexSet> run() { return grow(VertexSet{}, g_.vertices()); }

 private:
  std::optional<VertexSet> grow(VertexSet chosen, VertexSet candidates) {
    if (chosen.size() == target_) {
      const VertexSet rest = g_.vertices() - chosen;
      if (fully_joined(g_, chosen, rest)) return chosen;
      return std::nullopt;
    }
    if (chosen.size() + candidates.size() < target_) return std::nullopt;
    for (Vertex v : candidates) {
      VertexSet next = (candidates - VertexSet::range(v + 1)) - g_.neighbors(v);
      if (chosen.empty()) {
        // later members must share v's neighbourhood
        VertexSet same;
        for (Vertex w : next)
          if (g_.neighbors(w) == g_.neighbors(v)) same = same.with(w);
        next = same;
      }
      if (auto hit = grow(chosen.with(v), next)) return hit;
      if (chosen.size() + (candidates - VertexSet::range(v + 1)).size() < target_) break;
    }
    return std::nullopt;
  }

  const Graph& g_;
  int target_;
};

std::optional<ConeOverCliquesCase> find_cone(const Graph& g) {
  const int n = g.order();
  for (Vertex c = 0; c < n; ++c) {
    if (g.degree(c) != n - 1) continue;
    const VertexSet rest = g.vertices().without(c);
    // component of the lowest remaining vertex
    VertexSet left = VertexSet::single(rest.lowest());
    VertexSet frontier = left;
    while (!frontier.empty()) {
      VertexSet next;
      for (Vertex v : frontier) next |= g.neighbors(v);
      next = (next & rest) - left;
      left |= next;
      frontier = next;
    }
    const VertexSet right = rest - left;
    if (right.empty() || !connected_within(g, right)) continue;
    if (is_clique(g, left) && is_clique(g, right)) return ConeOverCliquesCase{c, left, right};
  }
  return std::nullopt;
}

}  // namespace

StructureClass classify_near_hamiltonian(const Graph& g) {
  const int n = g.order();
  if (n < 3) throw InputError("classify_near_hamiltonian: order below 3");
  if (!sigma2_at_least(sigma2(g), n - 1))
    throw InputError("classify_near_hamiltonian: sigma2 < n - 1");
  if (auto c = find_hamilton_cycle(g, g.vertices())) return HamiltonCycleCase{std::move(*c)};
  if (n >= 5 && n % 2 == 1) {
    const int m = (n - 1) / 2;
    if (auto s = IndependentSetSearch(g, m + 1).run())
      return NearBipartiteCase{m, *s, g.vertices() - *s};
  }
  if (auto cone = find_cone(g)) return *cone;
  throw ContractError("classify_near_hamiltonian: no case applies although sigma2 >= n - 1");
}

bool verify_structure(const Graph& g, const StructureClass& s) {
  const int n = g.order();
  if (const auto* h = std::get_if<HamiltonCycleCase>(&s))
    return h->cycle.size() == n && is_cycle(g, h->cycle);
  if (const auto* nb = std::get_if<NearBipartiteCase>(&s)) {
    return n >= 5 && n % 2 == 1 && nb->m == (n - 1) / 2 && nb->independent.size() == nb->m + 1 &&
           nb->other.size() == nb->m && nb->independent.disjoint(nb->other) &&
           (nb->independent | nb->other) == g.vertices() && is_independent(g, nb->independent) &&
           fully_joined(g, nb->independent, nb->other);
  }
  const auto& cone = std::get<ConeOverCliquesCase>(s);
  if (cone.cut < 0 || cone.cut >= n || cone.left.empty() || cone.right.empty()) return false;
  const VertexSet rest = g.vertices().without(cone.cut);
  return cone.left.disjoint(cone.right) && (cone.left | cone.right) == rest &&
         g.neighbors(cone.cut) == rest && is_clique(g, cone.left) && is_clique(g, cone.right) &&
         cross_edges(g, cone.left, cone.right) == 0;
}

std::optional<StructureKind> classify_brute_force(const Graph& g) {
  const int n = g.order();
  if (n < 3 || n > 16) throw InputError("classify_brute_force: order outside [3, 16]");
  const std::uint32_t full = (1U << n) - 1;

  // reach[mask] = set of end vertices of paths from 0 covering exactly mask
  std::vector<std::uint32_t> reach(full + 1, 0);
  reach[1] = 1;
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    if (!(mask & 1) || reach[mask] == 0) continue;
    for (int v = 0; v < n; ++v) {
      if (!((reach[mask] >> v) & 1)) continue;
      for (int w = 0; w < n; ++w)
        if (!((mask >> w) & 1) && g.adjacent(v, w)) reach[mask | (1U << w)] |= 1U << w;
    }
  }
  for (int v = 1; v < n; ++v)
    if (((reach[full] >> v) & 1) && g.adjacent(0, v)) return StructureKind::hamilton_cycle;

  if (n >= 5 && n % 2 == 1) {
    const int m = (n - 1) / 2;
    for (std::uint32_t mask = 0; mask <= full; ++mask) {
      if (std::popcount(mask) != m + 1) continue;
      const VertexSet s(mask);
      const VertexSet t = g.vertices() - s;
      bool ok = true;
      for (Vertex a : s)
        for (Vertex b = 0; b < n && ok; ++b)
          if (b != a && g.adjacent(a, b) != t.contains(b)) ok = false;
      if (ok) return StructureKind::near_bipartite;
    }
  }

  for (Vertex c = 0; c < n; ++c) {
    bool hub = true;
    for (Vertex w = 0; w < n; ++w)
      if (w != c && !g.adjacent(c, w)) hub = false;
    if (!hub) continue;
    std::vector<Vertex> rest;
    for (Vertex w = 0; w < n; ++w)
      if (w != c) rest.push_back(w);
    const int r = static_cast<int>(rest.size());
    for (std::uint32_t pick = 1; pick + 1 < (1U << r); ++pick) {
      bool ok = true;
      for (int i = 0; i < r && ok; ++i)
        for (int j = i + 1; j < r && ok; ++j) {
          const bool same = ((pick >> i) & 1) == ((pick >> j) & 1);
          if (g.adjacent(rest[i], rest[j]) != same) ok = false;
        }
      if (ok) return StructureKind::cone_over_cliques;
    }
  }
  return std::nullopt;
}

bool elzahar_condition(const Graph& g, int n1, int n2) {
  if (n1 < 3 || n2 < 3 || n1 + n2 != g.order())
    throw InputError("elzahar_condition: need n1, n2 >= 3 and n1 + n2 = n");
  return g.min_degree() >= (n1 + 1) / 2 + (n2 + 1) / 2;
}

bool ore_condition(const Graph& g, int slack) {
  return sigma2_at_least(sigma2(g), g.order() + slack);
}

}  // namespace twocycles
