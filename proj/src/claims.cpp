// Disjoint (len1, len2) cycles from a decomposition V1 + V2.
//
// Every construction ends with a len1-cycle through V1 plus two or three
// vertices of V2 and a Hamilton cycle of what is left of V2.

#include "proof_support.hpp"
#include "twocycles/structure.hpp"

namespace twocycles {

namespace {

using detail::concat;
using detail::ProofContext;

std::vector<Vertex> walk(const Cycle& c, Vertex from, Vertex to) { return c.section(from, to).verts; }

class DecompositionSolver {
 public:
  DecompositionSolver(ProofContext& ctx, const Decomposition& d) : ctx_(ctx), g_(ctx.g), d_(d) {}

  CyclePairCert solve() {
    std::optional<CyclePairCert> cert;
    switch (d_.kind) {
      case DecompositionCase::all_pairs_hamiltonian: cert = claim1(); break;
      case DecompositionCase::near_bipartite: cert = claim2(d_.independent, d_.other); break;
      case DecompositionCase::cone_over_cliques: cert = claim3(); break;
    }
    if (cert) return *cert;
    if ((cert = exact_pair_search())) return *cert;
    ctx_.fail("decomposition admits no (len1, len2) pair");
  }

 private:
  // c1 must have length len1 and contain V1; the len2-cycle is searched for
  // on the rest, which the claims guarantee to be Hamiltonian.
  std::optional<CyclePairCert> finish(std::vector<Vertex> verts) const {
    Cycle c1(std::move(verts));
    if (c1.size() != d_.len1 || !d_.v1.subset_of(c1.vertex_set()) || !is_cycle(g_, c1))
      return std::nullopt;
    auto c2 = find_hamilton_cycle(g_, g_.vertices() - c1.vertex_set());
    if (!c2) return std::nullopt;
    return CyclePairCert{std::move(c1), std::move(*c2)};
  }

  std::optional<CyclePairCert> finish(const Cycle& c1) const { return finish(c1.vertices()); }

  std::optional<CyclePairCert> finish_with(std::vector<Vertex> first, std::vector<Vertex> second) const {
    CyclePairCert cert{Cycle(std::move(first)), Cycle(std::move(second))};
    if (!validate_cert(g_, cert, d_.len1, d_.len2) || cert.first.size() != d_.len1)
      return std::nullopt;
    return cert;
  }

  // Closes u...v together with the edge xy into a cycle.
  std::optional<std::vector<Vertex>> insert_pair(const Path& p, Vertex x, Vertex y) const {
    const Vertex u = p.front();
    const Vertex v = p.back();
    if (!g_.adjacent(x, y)) return std::nullopt;
    if (g_.adjacent(v, x) && g_.adjacent(y, u)) return concat({p.verts, {x, y}});
    if (g_.adjacent(v, y) && g_.adjacent(x, u)) return concat({p.verts, {y, x}});
    return std::nullopt;
  }

  Cycle hamilton_v2() const {
    auto c = find_hamilton_cycle(g_, d_.v2);
    if (!c) ctx_.fail("G[V2] is not Hamiltonian although sigma2(G[V2]) >= |V2| + 1");
    return *c;
  }

  // A Hamilton cycle of G[V1] from the path, or a consecutive pair of C2
  // inserted into the path.
  std::optional<CyclePairCert> prop2(const Cycle& c2, std::optional<Cycle>& c1) {
    c1 = ctx_.try_close(d_.v1_path);
    ctx_.trace.add(ProofStep::prop2, {d_.v1_path.front(), d_.v1_path.back()},
                   c1 ? "G[V1] Hamiltonian" : "closing through C2");
    for (Vertex x : c2.vertices()) {
      const Vertex y = c2.successor(x);
      if (auto verts = insert_pair(d_.v1_path, x, y))
        if (auto cert = finish(std::move(*verts))) return cert;
    }
    return std::nullopt;
  }

  // Hamilton cycle of G[V(p)] or nothing; otherwise the ends have common
  // neighbours in V2.
  std::optional<CyclePairCert> prop3(const Path& p) {
    ctx_.trace.add(ProofStep::prop3, {p.front(), p.back()});
    if (auto c = ctx_.try_close(p)) return finish(*c);
    return std::nullopt;
  }

  VertexSet common(Vertex a, Vertex b, VertexSet within) const {
    return g_.neighbors(a) & g_.neighbors(b) & within;
  }

  // C1 extended by a and b: as a block a-b inside one edge, or separately in
  // two distinct edges.
  std::vector<std::vector<Vertex>> extensions(const Cycle& c1, Vertex a, Vertex b) const {
    std::vector<std::vector<Vertex>> out;
    const int k = c1.size();
    const auto& cv = c1.vertices();
    auto edge_ok = [&](int i, Vertex z) { return g_.adjacent(cv[i], z) && g_.adjacent(cv[(i + 1) % k], z); };
    if (g_.adjacent(a, b)) {
      for (int i = 0; i < k; ++i) {
        const Vertex p = cv[i];
        const Vertex q = cv[(i + 1) % k];
        for (auto [f, s] : {std::pair{a, b}, std::pair{b, a}}) {
          if (g_.adjacent(p, f) && g_.adjacent(s, q)) {
            std::vector<Vertex> seq = walk(c1, q, p);
            seq.push_back(f);
            seq.push_back(s);
            out.push_back(std::move(seq));
          }
        }
      }
    }
    for (int i = 0; i < k; ++i) {
      if (!edge_ok(i, a)) continue;
      for (int j = 0; j < k; ++j) {
        if (j == i || !edge_ok(j, b)) continue;
        std::vector<Vertex> seq;
        for (int t = 0; t < k; ++t) {
          seq.push_back(cv[t]);
          if (t == i) seq.push_back(a);
          if (t == j) seq.push_back(b);
        }
        out.push_back(std::move(seq));
      }
    }
    return out;
  }

  std::optional<CyclePairCert> extend_and_finish(const Cycle& c1, Vertex a, Vertex b) const {
    for (auto& seq : extensions(c1, a, b))
      if (auto cert = finish(std::move(seq))) return cert;
    return std::nullopt;
  }

  // ---- (i) every G[V2] - {x, y} Hamiltonian --------------------------------

  std::optional<CyclePairCert> claim1() {
    const Cycle c2 = hamilton_v2();
    std::optional<Cycle> c1;
    if (auto cert = prop2(c2, c1)) return cert;
    if (!c1) return std::nullopt;

    const int l1 = d_.len1;
    for (Vertex u : d_.v1) {
      for (Vertex v : (d_.v1 - VertexSet::range(u + 1)) - g_.neighbors(u)) {
        if (g_.degree_in(u, d_.v1) + g_.degree_in(v, d_.v1) >= l1) continue;
        ctx_.trace.add(ProofStep::claim1_case1, {u, v});
        if (auto cert = claim1_case1(*c1, c2, u, v)) return cert;
        return std::nullopt;
      }
    }
    ctx_.trace.add(ProofStep::claim1_case2);
    return claim1_case2(*c1, c2);
  }

  std::optional<CyclePairCert> claim1_case1(const Cycle& c1, const Cycle& c2, Vertex u, Vertex v) {
    for (Vertex a : c2.vertices()) {
      const Vertex b = c2.successor(a);
      Vertex x = a;
      Vertex y = b;
      if (!(g_.adjacent(x, u) && g_.adjacent(x, v))) std::swap(x, y);
      if (!(g_.adjacent(x, u) && g_.adjacent(x, v))) continue;
      if (!g_.adjacent(y, u) && !g_.adjacent(y, v)) continue;

      const RotationResult rot = rotate_endpoints(g_, c1, u, v);
      if (rot.path && !rot.used_fallback) {
        const Path& p = *rot.path;  // u ... v
        std::vector<Vertex> seq = p.verts;
        if (g_.adjacent(y, u)) {
          seq.push_back(x);
          seq.push_back(y);
        } else {
          seq.push_back(y);
          seq.push_back(x);
        }
        if (auto cert = finish(std::move(seq))) return cert;
      }
      // C1^-[u^-, v] x C1[u, v^-] x'
      for (const Cycle& dir : {c1, c1.reversed()}) {
        const Vertex um = dir.predecessor(u);
        const Vertex vm = dir.predecessor(v);
        for (Vertex x2 : common(um, vm, d_.v2.without(x))) {
          auto seq = concat({walk(dir.reversed(), um, v), {x}, walk(dir, u, vm), {x2}});
          if (auto cert = finish(std::move(seq))) return cert;
        }
      }
    }
    return std::nullopt;
  }

  std::optional<CyclePairCert> claim1_case2(const Cycle& c1_fwd, const Cycle& c2_fwd) {
    const VertexSet v2 = d_.v2;
    bool any_multi = false;
    for (Vertex x : v2) any_multi = any_multi || g_.degree_in(x, d_.v1) >= 2;

    for (const Cycle& c1 : {c1_fwd, c1_fwd.reversed()}) {
      for (const Cycle& c2 : {c2_fwd, c2_fwd.reversed()}) {
        for (Vertex u : d_.v1) {
          for (Vertex x : g_.neighbors(u) & v2) {
            const Vertex up = c1.successor(u);
            const Vertex xp = c2.successor(x);
            // C1[u+, u] x x+
            if (auto cert = prop3(Path{concat({walk(c1, up, u), {x, xp}})})) return cert;
            if (any_multi) {
              if (auto cert = multi_attachment(c1, u, x, xp)) return cert;
              continue;
            }
            if (auto cert = dense_v2(c1, u, x, xp)) return cert;
          }
        }
      }
    }
    return std::nullopt;
  }

  // x has a second neighbour v in V1: u x P y with P a Hamilton path of
  // G[V1] - u from v to u+.
  std::optional<CyclePairCert> multi_attachment(const Cycle& c1, Vertex u, Vertex x, Vertex xp) {
    const Vertex up = c1.successor(u);
    for (Vertex y : common(up, xp, d_.v2.without(x).without(xp))) {
      for (Vertex v : (g_.neighbors(x) & d_.v1).without(u).without(up)) {
        auto p = find_hamilton_path_between(g_, v, up, d_.v1.without(u));
        if (!p) continue;
        if (auto cert = prop3(Path{concat({{u, x}, p->verts, {y}})})) return cert;
        for (Vertex z : common(u, y, d_.v2.without(x).without(y))) {
          // y C1[u+, u] z
          if (auto cert = finish(concat({{y}, walk(c1, up, u), {z}}))) return cert;
        }
      }
    }
    return std::nullopt;
  }

  // Every vertex of V2 has at most one neighbour in V1 and high degree in V2.
  std::optional<CyclePairCert> dense_v2(const Cycle& c1, Vertex u, Vertex x, Vertex xp) {
    const Vertex up = c1.successor(u);
    const Vertex um = c1.predecessor(u);
    const VertexSet pool = d_.v2.without(x).without(xp);
    for (Vertex w : common(up, xp, pool)) {
      // C1^-[u, u+] w x+
      if (auto cert = prop3(Path{concat({walk(c1.reversed(), u, up), {w, xp}})})) return cert;
    }
    for (Vertex y1 : common(up, xp, pool)) {
      for (Vertex y3 : common(um, xp, pool).without(y1)) {
        const VertexSet rest = d_.v2.without(y1).without(xp).without(y3);
        for (Vertex y2 : common(u, xp, pool).without(y1).without(y3)) {
          auto p = find_hamilton_path_between(g_, x, y2, rest);
          if (!p) continue;
          auto first = concat({walk(c1, up, um), {y3, xp, y1}});
          auto second = concat({{u}, p->verts});
          if (auto cert = finish_with(std::move(first), std::move(second))) return cert;
        }
      }
    }
    return std::nullopt;
  }

  // ---- (ii) K_{m+2,m+1} <= G[V2] <= K_{m+2} + (m+1)K_1 ------------------

  bool has_edge_without(VertexSet t, Vertex skip) const {
    const VertexSet rest = t.without(skip);
    for (Vertex a : rest)
      if (!g_.neighbors(a).disjoint(rest)) return true;
    return false;
  }

  bool has_p4(VertexSet t) const {
    for (Vertex a : t)
      for (Vertex b : g_.neighbors(a) & t)
        for (Vertex c : (g_.neighbors(b) & t).without(a))
          if (!(g_.neighbors(c) & t).without(a).without(b).empty()) return true;
    return false;
  }

  std::optional<CyclePairCert> claim2(VertexSet s_side, VertexSet t_side) {
    ctx_.trace.add(ProofStep::claim2, s_side.to_vector());
    const Path& p = d_.v1_path;
    Vertex u = p.front();
    Vertex v = p.back();
    const int l1 = d_.len1;
    if (!g_.adjacent(u, v) && g_.degree_in(u, d_.v1) + g_.degree_in(v, d_.v1) <= l1 - 3) {
      Path dir = p;
      if (g_.degree_in(u, d_.v2) < g_.degree_in(v, d_.v2)) {
        dir = p.reversed();
        std::swap(u, v);
      }
      for (Vertex t1 : g_.neighbors(u) & t_side) {
        if (!has_edge_without(t_side, t1)) continue;
        // t1 P s1
        for (Vertex s1 : g_.neighbors(v) & s_side)
          if (auto cert = finish(concat({{t1}, dir.verts, {s1}}))) return cert;
      }
      for (Vertex s : g_.neighbors(u) & s_side) {
        for (Vertex t : g_.neighbors(v) & t_side) {
          if (!has_edge_without(t_side, t)) continue;
          // s P t
          if (auto cert = finish(concat({{s}, dir.verts, {t}}))) return cert;
        }
      }
    }

    auto c1 = ctx_.try_close(p);
    if (!c1) return std::nullopt;

    if (has_p4(t_side)) {
      for (Vertex s1 : s_side) {
        if (2 * g_.degree_in(s1, d_.v1) < l1 - 1) continue;
        for (Vertex s2 : s_side - VertexSet::range(s1 + 1)) {
          if (2 * g_.degree_in(s2, d_.v1) < l1 - 1) continue;
          if (auto cert = extend_and_finish(*c1, s1, s2)) return cert;
          ctx_.trace.add(ProofStep::claim2_1, {s1, s2});
          if (auto cert = shared_pair(*c1, s1, s2, t_side)) return cert;
        }
      }
      return std::nullopt;
    }

    for (Vertex t1 : t_side) {
      if (g_.degree_in(t1, t_side) > 2 || !has_edge_without(t_side, t1)) continue;
      for (Vertex s : s_side)
        if (auto cert = extend_and_finish(*c1, t1, s)) return cert;
    }
    return std::nullopt;
  }

  // s1 and s2 see only the same consecutive pair {v1, v2} of C1.
  std::optional<CyclePairCert> shared_pair(const Cycle& c1_fwd, Vertex s1, Vertex s2,
                                           VertexSet t_side) {
    for (const Cycle& c1 : {c1_fwd, c1_fwd.reversed()}) {
      for (Vertex a : c1.vertices()) {
        const Vertex b = c1.successor(a);
        if (!(g_.adjacent(s1, a) && g_.adjacent(s1, b) && g_.adjacent(s2, a) && g_.adjacent(s2, b)))
          continue;
        const Vertex v3 = c1.successor(b);
        const Vertex v4 = c1.successor(v3);
        // s1 C1[v4, v3] t
        for (Vertex t : g_.neighbors(v3) & t_side) {
          if (!has_edge_without(t_side, t)) continue;
          if (auto cert = finish(concat({{s1}, walk(c1, v4, v3), {t}}))) return cert;
        }
        // s1 v2 s2 C1^-[v_{i-1}, v3] v_i C1[v_i+, v1]
        for (Vertex vi : g_.neighbors(v3) & d_.v1) {
          if (vi == b || vi == v4 || vi == a) continue;
          const Vertex before = c1.predecessor(vi);
          auto seq = concat({{s1, b, s2}, walk(c1.reversed(), before, v3), walk(c1, vi, a)});
          if (auto cert = finish(std::move(seq))) return cert;
        }
      }
    }
    return std::nullopt;
  }

  // ---- (iii) 3K_1 + (K_p u K_q) <= G[V2] <= K_3 + (K_p u K_q) ----------

  std::optional<CyclePairCert> claim3() {
    ctx_.trace.add(ProofStep::claim3, d_.hubs.to_vector());
    if (d_.len2 == 5) return claim2(d_.hubs, d_.left | d_.right);

    VertexSet big = d_.left;
    VertexSet small = d_.right;
    if (big.size() < small.size()) std::swap(big, small);
    const auto h = d_.hubs.to_vector();
    const auto ps = big.to_vector();
    const auto qs = small.to_vector();
    // h1 p1 .. p_{p-1} h2 p_p h3 q1 .. q_q
    std::vector<Vertex> seq{h[0]};
    seq.insert(seq.end(), ps.begin(), ps.end() - 1);
    seq.push_back(h[1]);
    seq.push_back(ps.back());
    seq.push_back(h[2]);
    seq.insert(seq.end(), qs.begin(), qs.end());
    const Cycle c2 = ctx_.checked_cycle(std::move(seq), "Claim3");

    std::optional<Cycle> c1;
    if (auto cert = prop2(c2, c1)) return cert;
    if (!c1) return std::nullopt;

    for (const Cycle& c1d : {*c1, c1->reversed()}) {
      for (const Cycle& c2d : {c2, c2.reversed()}) {
        for (Vertex x : d_.left | d_.right) {
          const Vertex xp = c2d.successor(x);
          for (Vertex w : c1d.vertices()) {
            const Vertex wp = c1d.successor(w);
            if (!g_.adjacent(x, w) || !g_.adjacent(x, wp)) continue;
            const Vertex w2p = c1d.successor(wp);
            // C1[w2+, w+] x x+
            if (auto cert = prop3(Path{concat({walk(c1d, w2p, wp), {x, xp}})})) return cert;
            for (Vertex z : common(w2p, xp, d_.v2.without(x).without(xp))) {
              // z C1[w2+, w] x w+
              if (auto cert = prop3(Path{concat({{z}, walk(c1d, w2p, w), {x, wp}})})) return cert;
              for (Vertex t : common(wp, z, d_.v2.without(x).without(z))) {
                // C1[w2+, w+] t z
                if (auto cert = finish(concat({walk(c1d, w2p, wp), {t, z}}))) return cert;
              }
            }
          }
        }
      }
    }
    return std::nullopt;
  }

  // ---- exact stand-in ------------------------------------------------------

  std::optional<CyclePairCert> exact_pair_search() {
    ctx_.trace.add(ProofStep::lemma26, {}, "exact pair search");
    ctx_.trace.steps.back().fallback = true;
    for (Vertex a : d_.v2) {
      for (Vertex b : d_.v2 - VertexSet::range(a + 1)) {
        const VertexSet side = d_.v1.with(a).with(b);
        auto c2 = find_hamilton_cycle(g_, g_.vertices() - side);
        if (!c2) continue;
        if (auto c1 = find_hamilton_cycle(g_, side)) return CyclePairCert{std::move(*c1), std::move(*c2)};
      }
    }
    return brute_force_oracle(g_, d_.len1, d_.len2);
  }

  ProofContext& ctx_;
  const Graph& g_;
  const Decomposition& d_;
};

}  // namespace

CyclePairCert solve_from_decomposition(const Graph& g, const Decomposition& d, SolveTrace& trace) {
  if (!validate_decomposition(g, d)) throw InputError("solve_from_decomposition: invalid decomposition");
  ProofContext ctx(g, trace);
  CyclePairCert cert = DecompositionSolver(ctx, d).solve();
  if (!validate_cert(g, cert, d.len1, d.len2) || cert.first.size() != d.len1)
    ctx.fail("decomposition pair fails validation");
  return cert;
}

CyclePairCert solve_from_decomposition(const Graph& g, const Decomposition& d) {
  SolveTrace trace;
  return solve_from_decomposition(g, d, trace);
}

}  // namespace twocycles
