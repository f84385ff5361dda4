// Disjoint (3, n-3) and (4, n-4) cycles under sigma2(G) >= n + 2.
//
// A triangle C = {c0, c1, c2} is removed; G' = G - C has sigma2 >= |G'| - 1,
// so G' is Hamiltonian, near-bipartite, or a cone over two cliques, and each
// shape gets its own construction.

#include <algorithm>
#include <array>

#include "proof_support.hpp"
#include "twocycles/structure.hpp"

namespace twocycles {

namespace {

using detail::concat;
using detail::ProofContext;

using Triangle = std::array<Vertex, 3>;

Cycle lift(const Subgraph& sub, const Cycle& c) {
  std::vector<Vertex> vs;
  for (Vertex v : c.vertices()) vs.push_back(sub.to_host[v]);
  return Cycle(std::move(vs));
}

// G' Hamiltonian, looking for (4, n-4).
class HamiltonianRemainder {
 public:
  HamiltonianRemainder(ProofContext& ctx, const Triangle& tri, Cycle outer)
      : ctx_(ctx), g_(ctx.g), tri_(tri), outer_(std::move(outer)),
        rest_(outer_.vertex_set()) {}

  CyclePairCert solve() {
    const int n = g_.order();
    // Subcase 1.1: a non-adjacent pair with small degree sum inside G'.
    for (Vertex x : rest_) {
      for (Vertex y : (rest_ - VertexSet::range(x + 1)) - g_.neighbors(x)) {
        if (g_.degree_in(x, rest_) + g_.degree_in(y, rest_) > n - 2) continue;
        const Vertex hub = on_triangle(x).size() >= 2 ? x : y;
        ctx_.trace.add(ProofStep::prop1_case1, {x, y, hub}, "subcase 1.1");
        return subcase_small_pair(hub);
      }
    }
    // Subcase 1.2
    for (Vertex z : rest_) {
      if (on_triangle(z).size() < 2) continue;
      ctx_.trace.add(ProofStep::prop1_case1, {z}, "subcase 1.2, two triangle neighbours");
      if (auto cert = try_remove(z)) return *cert;
    }
    ctx_.trace.add(ProofStep::prop1_case1, {}, "subcase 1.2, sparse attachment");
    if (auto cert = sparse_attachment()) return *cert;
    ctx_.fail("Prop1 case 1: no (4, n-4) construction applies");
  }

 private:
  VertexSet on_triangle(Vertex z) const {
    return g_.neighbors(z) & VertexSet{tri_[0], tri_[1], tri_[2]};
  }

  // 4-cycle z a w b through two triangle neighbours a, b of z.
  std::optional<Cycle> four_cycle_at(Vertex z) const {
    const VertexSet nb = on_triangle(z);
    if (nb.size() < 2) return std::nullopt;
    const Vertex a = nb.lowest();
    const Vertex b = nb.without(a).lowest();
    Vertex w = tri_[0];
    for (Vertex t : tri_)
      if (t != a && t != b) w = t;
    return Cycle({z, a, w, b});
  }

  // Hamilton cycle of G' - z from the arc z+ ... z- of the outer cycle.
  std::optional<Cycle> outer_without(Vertex z) const {
    return ctx_.try_close(outer_.section(outer_.successor(z), outer_.predecessor(z)));
  }

  std::optional<CyclePairCert> try_remove(Vertex z) const {
    auto four = four_cycle_at(z);
    if (!four) return std::nullopt;
    auto rest = outer_without(z);
    if (!rest) return std::nullopt;
    return CyclePairCert{std::move(*four), std::move(*rest)};
  }

  CyclePairCert subcase_small_pair(Vertex y) {
    for (Vertex z : {y, outer_.successor(y), outer_.predecessor(y)})
      if (auto cert = try_remove(z)) return *cert;
    // z C'^-[y-, y2+] z together with a 4-cycle on (C - z) + {y, y+}.
    for (const Cycle& dir : {outer_, outer_.reversed()}) {
      const Vertex ym = dir.predecessor(y);
      const Vertex yp = dir.successor(y);
      const Vertex y2p = dir.successor(y, 2);
      for (Vertex z : tri_) {
        if (!g_.adjacent(z, ym) || !g_.adjacent(z, y2p)) continue;
        std::vector<Vertex> others;
        for (Vertex t : tri_)
          if (t != z) others.push_back(t);
        const Path arc = dir.reversed().section(ym, y2p);
        Cycle big(concat({{z}, arc.verts}));
        for (auto order : {std::array{others[0], others[1], yp, y},
                           std::array{others[0], others[1], y, yp}}) {
          Cycle four({order.begin(), order.end()});
          if (is_cycle(g_, four) && is_cycle(g_, big))
            return CyclePairCert{std::move(four), std::move(big)};
        }
      }
    }
    ctx_.fail("Prop1 subcase 1.1: no (4, n-4) construction around vertex " + std::to_string(y));
  }

  // Every vertex of G' has at most one triangle neighbour: 4-cycle v u x y and
  // w closed through a Hamilton path of G' - {x, y}.
  std::optional<CyclePairCert> sparse_attachment() const {
    for (Vertex u : tri_) {
      for (Vertex x : g_.neighbors(u) & rest_) {
        for (Vertex v : tri_) {
          if (v == u) continue;
          Vertex w = tri_[0];
          for (Vertex t : tri_)
            if (t != u && t != v) w = t;
          for (Vertex y : (g_.neighbors(x) & g_.neighbors(v) & rest_).without(x)) {
            const VertexSet inner = rest_.without(x).without(y);
            const VertexSet ends = g_.neighbors(w) & inner;
            for (Vertex a : ends) {
              for (Vertex b : ends - VertexSet::range(a + 1)) {
                auto p = find_hamilton_path_between(g_, a, b, inner);
                if (!p) continue;
                Cycle four({v, u, x, y});
                Cycle big(concat({{w}, p->verts}));
                if (is_cycle(g_, four) && is_cycle(g_, big))
                  return CyclePairCert{std::move(four), std::move(big)};
              }
            }
          }
        }
      }
    }
    return std::nullopt;
  }

  ProofContext& ctx_;
  const Graph& g_;
  Triangle tri_;
  Cycle outer_;
  VertexSet rest_;
};

// G' contains K_{m,m+1} and sits inside K_m + (m+1)K_1.
CyclePairCert near_bipartite_case(ProofContext& ctx, const Triangle& tri, VertexSet indep,
                                  VertexSet other, int small) {
  const Graph& g = ctx.g;
  ctx.trace.add(ProofStep::prop1_case2, indep.to_vector());
  const Vertex s = indep.lowest();
  std::vector<Vertex> rest_s = indep.without(s).to_vector();
  std::vector<Vertex> ts = other.to_vector();
  const std::size_t m = ts.size();
  if (m < 2 || rest_s.size() != m) ctx.fail("Prop1 case 2: unexpected side sizes");

  if (small == 4) {
    std::vector<Vertex> alt;
    for (std::size_t i = 0; i < m; ++i) {
      alt.push_back(rest_s[i]);
      alt.push_back(ts[i]);
    }
    return CyclePairCert{ctx.checked_cycle({tri[0], tri[1], tri[2], s}, "Prop1 case 2"),
                         ctx.checked_cycle(std::move(alt), "Prop1 case 2")};
  }

  Vertex w = tri[2];
  std::vector<Vertex> big;
  if (g.adjacent(ts[0], ts[1])) {
    // s'1 t1 t2 s'2 t3 s'3 ... t_m s'_m w
    big = {rest_s[0], ts[0], ts[1], rest_s[1]};
    for (std::size_t i = 2; i < m; ++i) {
      big.push_back(ts[i]);
      big.push_back(rest_s[i]);
    }
    big.push_back(w);
  } else {
    bool found = false;
    for (int pick = 0; pick < 2 && !found; ++pick) {
      for (Vertex c : tri) {
        if (g.adjacent(c, ts[pick])) {
          w = c;
          if (pick == 1) std::swap(ts[0], ts[1]);
          found = true;
          break;
        }
      }
    }
    if (!found) ctx.fail("Prop1 case 2: neither t1 nor t2 sees the triangle");
    // w t1 s'1 t2 s'2 ... t_m s'_m
    big = {w};
    for (std::size_t i = 0; i < m; ++i) {
      big.push_back(ts[i]);
      big.push_back(rest_s[i]);
    }
  }
  std::vector<Vertex> three{s};
  for (Vertex c : tri)
    if (c != w) three.push_back(c);
  return CyclePairCert{ctx.checked_cycle(std::move(three), "Prop1 case 2"),
                       ctx.checked_cycle(std::move(big), "Prop1 case 2")};
}

// G' = K_1 + (K_p u K_q) with cut vertex `cut`.
CyclePairCert cone_case(ProofContext& ctx, const Triangle& tri, Vertex cut, VertexSet left,
                        VertexSet right, int small) {
  const Graph& g = ctx.g;
  ctx.trace.add(ProofStep::prop1_case3, {cut});
  if (left.size() < right.size()) std::swap(left, right);
  const std::vector<Vertex> ps = left.to_vector();
  const std::vector<Vertex> qs = right.to_vector();
  const int n = g.order();

  if (n == 6) {
    // G' is a path x-cut-z; cut sees two triangle vertices.
    const VertexSet nb = g.neighbors(cut) & VertexSet{tri[0], tri[1], tri[2]};
    if (nb.size() < 2) ctx.fail("Prop1 case 3: middle vertex sees fewer than two of C");
    const Vertex v = nb.lowest();
    const Vertex w = nb.without(v).lowest();
    Vertex u = tri[0];
    for (Vertex t : tri)
      if (t != v && t != w) u = t;
    return CyclePairCert{ctx.checked_cycle({v, ps[0], cut}, "Prop1 case 3"),
                         ctx.checked_cycle({u, w, qs[0]}, "Prop1 case 3")};
  }

  const std::vector<Vertex> ps_tail(ps.begin() + 1, ps.end());
  const std::vector<Vertex> qs_tail(qs.begin() + 1, qs.end());
  if (small == 3) {
    // c0 c1 p1 | cut Q c2 (P - p1)
    return CyclePairCert{ctx.checked_cycle({tri[0], tri[1], ps[0]}, "Prop1 case 3"),
                         ctx.checked_cycle(concat({{cut}, qs, {tri[2]}, ps_tail}), "Prop1 case 3")};
  }
  Cycle four = ctx.checked_cycle({tri[0], ps[0], tri[1], qs[0]}, "Prop1 case 3");
  if (qs.size() >= 2)
    return CyclePairCert{std::move(four), ctx.checked_cycle(concat({{cut}, ps_tail, {tri[2]}, qs_tail}),
                                                             "Prop1 case 3")};
  if (ps_tail.size() < 2) ctx.fail("Prop1 case 3: cliques too small for (4, n-4)");
  std::vector<Vertex> big{cut, ps_tail[0], tri[2]};
  big.insert(big.end(), ps_tail.begin() + 1, ps_tail.end());
  return CyclePairCert{std::move(four), ctx.checked_cycle(std::move(big), "Prop1 case 3")};
}

}  // namespace

CyclePairCert prop1_small(const Graph& g, int small, SolveTrace& trace) {
  const int n = g.order();
  if (small != 3 && small != 4) throw InputError("prop1_small: small length must be 3 or 4");
  if (n < (small == 3 ? 6 : 8))
    throw InputError("prop1_small: order too small for (" + std::to_string(small) + ", n-" +
                     std::to_string(small) + ")");
  if (!ore_condition(g, 2)) throw InputError("prop1_small: sigma2 < n + 2");

  ProofContext ctx(g, trace);
  auto triangle = find_cycle_of_length(g, 3);
  if (!triangle) ctx.fail("Prop1: no triangle although sigma2 >= n + 2");
  Triangle tri{triangle->vertices()[0], triangle->vertices()[1], triangle->vertices()[2]};
  std::sort(tri.begin(), tri.end());
  const VertexSet rest = g.vertices() - VertexSet{tri[0], tri[1], tri[2]};

  const Subgraph sub = induced(g, rest);
  StructureClass shape;
  try {
    shape = classify_near_hamiltonian(sub.graph);
  } catch (const std::exception& e) {
    ctx.fail(std::string("Prop1: classifying G - C failed: ") + e.what());
  }
  const Cycle tri_cycle({tri[0], tri[1], tri[2]});

  CyclePairCert cert;
  if (const auto* h = std::get_if<HamiltonCycleCase>(&shape)) {
    Cycle outer = lift(sub, h->cycle);
    if (small == 3) {
      trace.add(ProofStep::prop1_case1, {tri[0], tri[1], tri[2]});
      cert = CyclePairCert{tri_cycle, std::move(outer)};
    } else {
      cert = HamiltonianRemainder(ctx, tri, std::move(outer)).solve();
    }
  } else if (const auto* nb = std::get_if<NearBipartiteCase>(&shape)) {
    cert = near_bipartite_case(ctx, tri, sub.lift(nb->independent), sub.lift(nb->other), small);
  } else {
    const auto& cone = std::get<ConeOverCliquesCase>(shape);
    cert = cone_case(ctx, tri, sub.to_host[cone.cut], sub.lift(cone.left), sub.lift(cone.right),
                     small);
  }
  if (!validate_cert(g, cert, small, n - small) || cert.first.size() != small)
    ctx.fail("Prop1: produced pair fails validation");
  return cert;
}

CyclePairCert prop1_small(const Graph& g, int small) {
  SolveTrace trace;
  return prop1_small(g, small, trace);
}

}  // namespace twocycles
