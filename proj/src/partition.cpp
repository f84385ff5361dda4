// Two-vertex exchange on a partition into two Hamilton-path sides, and the
// decomposition it leaves behind when it stalls.

#include <array>

#include "proof_support.hpp"
#include "twocycles/structure.hpp"

namespace twocycles {

namespace {

using detail::ProofContext;

Path inner(const Path& p) {
  return Path{std::vector<Vertex>(p.verts.begin() + 1, p.verts.end() - 1)};
}

int partition_score(const Graph& g, VertexSet a, VertexSet b) {
  return inner_edges(g, a) + inner_edges(g, b);
}

struct ExchangeResult {
  std::array<VertexSet, 2> side;
  int score = 0;
  std::optional<CyclePairCert> early;
  // Stalled state: side `a` lost its path ends s, t to the other side.
  int a = 0;
  VertexSet v1;
  VertexSet v2;
  Path v1_path;
};

class ExchangeEngine {
 public:
  ExchangeEngine(ProofContext& ctx, int n1, int n2) : ctx_(ctx), g_(ctx.g), len_{n1, n2} {}

  ExchangeResult run() {
    auto ham = find_hamilton_cycle(g_, g_.vertices());
    if (!ham) ctx_.fail("L2.6: no Hamilton cycle although sigma2 >= n + 2");
    const auto& hv = ham->vertices();
    path_[0].verts.assign(hv.begin(), hv.begin() + len_[0]);
    path_[1].verts.assign(hv.begin() + len_[0], hv.end());

    const int guard = g_.edge_count() + 2;
    for (int round = 0; round <= guard; ++round) {
      ExchangeResult r;
      r.side = {path_[0].vertex_set(), path_[1].vertex_set()};
      r.score = partition_score(g_, r.side[0], r.side[1]);

      std::array<std::optional<Cycle>, 2> closed{ctx_.try_close(path_[0]), ctx_.try_close(path_[1])};
      if (closed[0] && closed[1]) {
        r.early = CyclePairCert{std::move(*closed[0]), std::move(*closed[1])};
        return r;
      }
      const int a = closed[0] ? 1 : 0;
      const int b = 1 - a;
      const Vertex s = path_[a].front();
      const Vertex t = path_[a].back();
      r.a = a;
      r.v1 = r.side[a].without(s).without(t);
      r.v2 = r.side[b].with(s).with(t);
      r.v1_path = inner(path_[a]);

      Path p2;
      try {
        p2 = absorb_pair(g_, path_[b], s, t);
      } catch (const ContractError& e) {
        ctx_.fail(std::string("L2.6: absorbing the path ends failed: ") + e.what());
      }
      const int l1 = len_[a];
      const int l2 = len_[b];
      if (sigma2_at_least(sigma2(g_, r.v2), l2 + 3)) return r;

      auto pick = choose_pair(r.v1, r.v2, p2, l1, l2);
      if (!pick) ctx_.fail("L2.6: no exchange pair although sigma2(G[V2]) <= n2 + 2");
      const auto [x, y, rest_path] = *pick;

      Path grown;
      try {
        grown = absorb_pair(g_, r.v1_path, x, y);
      } catch (const ContractError& e) {
        ctx_.fail(std::string("L2.6: absorbing the exchange pair failed: ") + e.what());
      }
      const int next = partition_score(g_, grown.vertex_set(), rest_path.vertex_set());
      if (next < r.score + 2) ctx_.fail("L2.6: exchange raised the score by less than 2");
      path_[a] = std::move(grown);
      path_[b] = rest_path;
      ctx_.trace.add(ProofStep::lemma26, {s, t, x, y}, "exchange");
      ctx_.trace.steps.back().score = next;
    }
    ctx_.fail("L2.6: exchange did not terminate");
  }

 private:
  struct Pick {
    Vertex x;
    Vertex y;
    Path rest;  // Hamilton path of G[V2] - {x, y}
  };

  int side_degree_sum(Vertex x, Vertex y, VertexSet v2) const {
    return g_.degree_in(x, v2) + g_.degree_in(y, v2);
  }

  std::optional<Pick> choose_pair(VertexSet v1, VertexSet v2, const Path& p2, int l1, int l2) {
    // G[V2] not Hamiltonian: the ends of its Hamilton path
    if (!ctx_.try_close(p2)) {
      const Vertex x = p2.front();
      const Vertex y = p2.back();
      if (cross_edges(g_, VertexSet{x, y}, v1) >= l1) return Pick{x, y, inner(p2)};
    }
    // a low pair whose removal keeps a Hamilton path
    std::optional<std::pair<Vertex, Vertex>> low;
    for (Vertex x : v2) {
      for (Vertex y : (v2 - VertexSet::range(x + 1)) - g_.neighbors(x)) {
        if (side_degree_sum(x, y, v2) <= l2 + 2) {
          low = {x, y};
          break;
        }
      }
      if (low) break;
    }
    if (!low) return std::nullopt;
    {
      const auto [x, y] = *low;
      if (cross_edges(g_, VertexSet{x, y}, v1) >= l1)
        if (auto p = find_hamilton_path(g_, v2.without(x).without(y))) return Pick{x, y, *p};
    }
    // any low pair whose removal keeps a Hamilton path
    for (Vertex x : v2) {
      for (Vertex y : v2 - VertexSet::range(x + 1)) {
        if (side_degree_sum(x, y, v2) > l2 + 2) continue;
        if (cross_edges(g_, VertexSet{x, y}, v1) < l1) continue;
        if (auto p = find_hamilton_path(g_, v2.without(x).without(y))) {
          ctx_.trace.add(ProofStep::lemma25, {low->first, low->second, x, y});
          return Pick{x, y, *p};
        }
      }
    }
    return std::nullopt;
  }

  ProofContext& ctx_;
  const Graph& g_;
  std::array<int, 2> len_;
  std::array<Path, 2> path_;
};

void check_preconditions(const Graph& g, int n1, int n2, const char* who) {
  if (n1 < 5 || n2 < 5 || n1 + n2 != g.order())
    throw InputError(std::string(who) + ": need n1, n2 >= 5 and n1 + n2 = n");
  if (!ore_condition(g, 2)) throw InputError(std::string(who) + ": sigma2 < n + 2");
}

bool is_clique(const Graph& g, VertexSet s) {
  for (Vertex v : s)
    if (!s.without(v).subset_of(g.neighbors(v))) return false;
  return true;
}

bool fully_joined(const Graph& g, VertexSet a, VertexSet b) {
  for (Vertex v : a)
    if (!b.subset_of(g.neighbors(v))) return false;
  return true;
}

}  // namespace

std::string_view to_string(DecompositionCase c) {
  switch (c) {
    case DecompositionCase::all_pairs_hamiltonian: return "all_pairs_hamiltonian";
    case DecompositionCase::near_bipartite: return "near_bipartite";
    case DecompositionCase::cone_over_cliques: return "cone_over_cliques";
  }
  return "?";
}

Partition improve_partition(const Graph& g, int n1, int n2, SolveTrace& trace) {
  check_preconditions(g, n1, n2, "improve_partition");
  ProofContext ctx(g, trace);
  ExchangeResult r = ExchangeEngine(ctx, n1, n2).run();
  return Partition{r.side[0], r.side[1], r.score};
}

Partition improve_partition(const Graph& g, int n1, int n2) {
  SolveTrace trace;
  return improve_partition(g, n1, n2, trace);
}

bool validate_decomposition(const Graph& g, const Decomposition& d) {
  const int n = g.order();
  if (d.len1 < 5 || d.len2 < 5 || d.len1 + d.len2 != n) return false;
  if (!d.v1.disjoint(d.v2) || (d.v1 | d.v2) != g.vertices()) return false;
  if (d.v1.size() != d.len1 - 2 || d.v2.size() != d.len2 + 2) return false;
  if (d.v1_path.size() != d.v1.size() || d.v1_path.vertex_set() != d.v1 || !is_path(g, d.v1_path))
    return false;
  if (!sigma2_at_least(sigma2(g, d.v2), d.len2 + 3)) return false;

  switch (d.kind) {
    case DecompositionCase::all_pairs_hamiltonian:
      for (Vertex x : d.v2)
        for (Vertex y : d.v2 - VertexSet::range(x + 1))
          if (!find_hamilton_cycle(g, d.v2.without(x).without(y))) return false;
      return true;
    case DecompositionCase::near_bipartite: {
      if (d.len2 % 2 == 0) return false;
      const int m = (d.len2 - 1) / 2;
      if (d.independent.size() != m + 1 || d.other.size() != m + 2) return false;
      if (!d.independent.disjoint(d.other) || (d.independent | d.other) != d.v2) return false;
      for (Vertex s : d.independent)
        if (!g.neighbors(s).disjoint(d.independent)) return false;
      return fully_joined(g, d.independent, d.other);
    }
    case DecompositionCase::cone_over_cliques: {
      if (d.hubs.size() != 3 || d.left.empty() || d.right.empty()) return false;
      if (!d.hubs.disjoint(d.left) || !d.hubs.disjoint(d.right) || !d.left.disjoint(d.right))
        return false;
      if ((d.hubs | d.left | d.right) != d.v2) return false;
      return is_clique(g, d.left) && is_clique(g, d.right) &&
             cross_edges(g, d.left, d.right) == 0 && fully_joined(g, d.hubs, d.left | d.right);
    }
  }
  return false;
}

DecomposeOutcome lemma26_decompose(const Graph& g, int n1, int n2, SolveTrace& trace) {
  check_preconditions(g, n1, n2, "lemma26_decompose");
  ProofContext ctx(g, trace);
  ExchangeResult r = ExchangeEngine(ctx, n1, n2).run();
  if (r.early) return detail::ordered_pair(std::move(r.early->first), std::move(r.early->second), n1);

  Decomposition d;
  d.v1 = r.v1;
  d.v2 = r.v2;
  d.len1 = r.a == 0 ? n1 : n2;
  d.len2 = r.a == 0 ? n2 : n1;
  d.v1_path = r.v1_path;

  std::optional<std::pair<Vertex, Vertex>> bad;
  for (Vertex x : d.v2) {
    for (Vertex y : d.v2 - VertexSet::range(x + 1)) {
      if (!find_hamilton_cycle(g, d.v2.without(x).without(y))) {
        bad = {x, y};
        break;
      }
    }
    if (bad) break;
  }

  if (!bad) {
    d.kind = DecompositionCase::all_pairs_hamiltonian;
  } else {
    const auto [x, y] = *bad;
    const Subgraph h = induced(g, d.v2.without(x).without(y));
    StructureClass shape;
    try {
      shape = classify_near_hamiltonian(h.graph);
    } catch (const std::exception& e) {
      ctx.fail(std::string("L2.6: classifying G[V2] - {x, y} failed: ") + e.what());
    }
    if (const auto* nb = std::get_if<NearBipartiteCase>(&shape)) {
      d.kind = DecompositionCase::near_bipartite;
      d.independent = h.lift(nb->independent);
      d.other = h.lift(nb->other).with(x).with(y);
    } else if (const auto* cone = std::get_if<ConeOverCliquesCase>(&shape)) {
      d.kind = DecompositionCase::cone_over_cliques;
      d.hubs = VertexSet{h.to_host[cone->cut], x, y};
      d.left = h.lift(cone->left);
      d.right = h.lift(cone->right);
    } else {
      ctx.fail("L2.6: G[V2] - {x, y} reported Hamiltonian after exact search said otherwise");
    }
  }
  trace.add(ProofStep::lemma26, {}, std::string("decomposition ") + std::string(to_string(d.kind)));
  if (!validate_decomposition(g, d)) ctx.fail("L2.6: decomposition fails validation");
  return d;
}

DecomposeOutcome lemma26_decompose(const Graph& g, int n1, int n2) {
  SolveTrace trace;
  return lemma26_decompose(g, n1, n2, trace);
}

}  // namespace twocycles
