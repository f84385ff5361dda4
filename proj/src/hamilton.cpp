#include "twocycles/hamilton.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace twocycles {

namespace {

// Depth-first search for a spanning path of G[within] that starts at a given
// vertex and ends inside `finals`. Fail-first ordering: successors with the
// fewest remaining neighbours are tried first. Prunes on disconnection and on
// vertices that could only ever be an endpoint.
class SpanningPathSearch {
 public:
  SpanningPathSearch(const Graph& g, VertexSet within, VertexSet finals)
      : g_(g), within_(within), finals_(finals) {}

  std::optional<Path> from(Vertex start) {
    path_.clear();
    path_.push_back(start);
    if (extend(start, within_.without(start))) return Path{path_};
    return std::nullopt;
  }

 private:
  bool extend(Vertex cur, VertexSet remaining) {
    if (remaining.empty()) return finals_.contains(cur);
    if ((finals_ & remaining).empty()) return false;
    const VertexSet live = remaining.with(cur);
    int endpoint_only = 0;
    for (Vertex r : remaining) {
      const int d = g_.degree_in(r, live);
      if (d == 0) return false;
      if (d == 1 && (!finals_.contains(r) || ++endpoint_only > 1)) return false;
    }
    if (!connected_within(g_, live)) return false;

    std::array<std::pair<int, Vertex>, kMaxOrder> order;
    int count = 0;
    for (Vertex c : g_.neighbors(cur) & remaining)
      order[count++] = {g_.degree_in(c, remaining), c};
    std::sort(order.begin(), order.begin() + count);
    for (int i = 0; i < count; ++i) {
      const Vertex next = order[i].second;
      path_.push_back(next);
      if (extend(next, remaining.without(next))) return true;
      path_.pop_back();
    }
    return false;
  }

  const Graph& g_;
  VertexSet within_;
  VertexSet finals_;
  std::vector<Vertex> path_;
};

// Vertices of `within` ordered by degree inside it, lowest index on ties.
std::vector<Vertex> by_degree(const Graph& g, VertexSet within) {
  std::vector<Vertex> vs = within.to_vector();
  std::stable_sort(vs.begin(), vs.end(), [&](Vertex a, Vertex b) {
    return g.degree_in(a, within) < g.degree_in(b, within);
  });
  return vs;
}

class CycleEnumerator {
 public:
  CycleEnumerator(const Graph& g, int k, const std::function<bool(const Cycle&)>& visit)
      : g_(g), k_(k), visit_(visit) {}

  bool run(VertexSet within) {
    for (Vertex anchor : within) {
      anchor_ = anchor;
      const VertexSet allowed = within - VertexSet::range(anchor + 1);
      if (g_.degree_in(anchor, allowed) < 2) continue;
      path_.assign(1, anchor);
      if (extend(anchor, allowed)) return true;
    }
    return false;
  }

 private:
  bool extend(Vertex cur, VertexSet unused) {
    const int have = static_cast<int>(path_.size());
    if (have == k_) {
      if (!g_.adjacent(cur, anchor_) || path_[1] > path_.back()) return false;
      return visit_(Cycle(path_));
    }
    VertexSet next = g_.neighbors(cur) & unused;
    if (have == k_ - 1) next &= g_.neighbors(anchor_);
    for (Vertex c : next) {
      path_.push_back(c);
      if (extend(c, unused.without(c))) return true;
      path_.pop_back();
    }
    return false;
  }

  const Graph& g_;
  int k_;
  const std::function<bool(const Cycle&)>& visit_;
  Vertex anchor_ = 0;
  std::vector<Vertex> path_;
};

}  // namespace

bool for_each_cycle(const Graph& g, int k, VertexSet within,
                    const std::function<bool(const Cycle&)>& visit) {
  if (k < 3 || k > within.size()) return false;
  return CycleEnumerator(g, k, visit).run(within);
}

std::optional<Cycle> find_hamilton_cycle(const Graph& g, VertexSet within) {
  if (within.size() < 3) return std::nullopt;
  for (Vertex v : within)
    if (g.degree_in(v, within) < 2) return std::nullopt;
  const Vertex anchor = by_degree(g, within).front();
  SpanningPathSearch search(g, within, g.neighbors(anchor) & within);
  if (auto p = search.from(anchor)) return Cycle(std::move(p->verts));
  return std::nullopt;
}

std::optional<Path> find_hamilton_path(const Graph& g, VertexSet within) {
  if (within.empty()) return std::nullopt;
  if (within.size() == 1) return Path{{within.lowest()}};
  if (!connected_within(g, within)) return std::nullopt;
  SpanningPathSearch search(g, within, within);
  for (Vertex start : by_degree(g, within))
    if (auto p = search.from(start)) return p;
  return std::nullopt;
}

std::optional<Path> find_hamilton_path_between(const Graph& g, Vertex u, Vertex v,
                                               std::optional<VertexSet> within) {
  const VertexSet w = within.value_or(g.vertices());
  if (u == v) throw InputError("find_hamilton_path_between: endpoints coincide");
  if (!w.contains(u) || !w.contains(v))
    throw InputError("find_hamilton_path_between: endpoint outside the vertex set");
  const bool from_v = g.degree_in(v, w) < g.degree_in(u, w);
  const Vertex start = from_v ? v : u;
  const Vertex stop = from_v ? u : v;
  SpanningPathSearch search(g, w, VertexSet::single(stop));
  auto p = search.from(start);
  if (p && from_v) return p->reversed();
  return p;
}

std::optional<Cycle> find_cycle_of_length(const Graph& g, int k, std::optional<VertexSet> within) {
  const VertexSet w = within.value_or(g.vertices());
  if (k < 3 || k > w.size())
    throw InputError("find_cycle_of_length: length " + std::to_string(k) +
                     " outside [3, " + std::to_string(w.size()) + "]");
  if (k == w.size()) return find_hamilton_cycle(g, w);
  std::optional<Cycle> found;
  for_each_cycle(g, k, w, [&](const Cycle& c) {
    found = c;
    return true;
  });
  return found;
}

Cycle close_path_ore(const Graph& g, const Path& p) {
  const int size = p.size();
  if (size < 3) throw ContractError("close_path_ore: path has fewer than 3 vertices");
  const Vertex u = p.front();
  const Vertex v = p.back();
  if (g.adjacent(u, v)) return Cycle(p.verts);
  for (int i = 0; i + 1 < size; ++i) {
    if (g.adjacent(u, p.verts[i + 1]) && g.adjacent(v, p.verts[i])) {
      std::vector<Vertex> cyc(p.verts.begin(), p.verts.begin() + i + 1);
      cyc.insert(cyc.end(), p.verts.rbegin(), p.verts.rend() - (i + 1));
      return Cycle(std::move(cyc));
    }
  }
  const VertexSet host = p.vertex_set();
  throw ContractError("close_path_ore: no crossing index; d(u)+d(v) = " +
                      std::to_string(g.degree_in(u, host) + g.degree_in(v, host)) + " < " +
                      std::to_string(size));
}

namespace {

// One rotation for the pair (u, v) using successors on `c`.
std::optional<Path> rotate_once(const Graph& g, const Cycle& c, Vertex u, Vertex v) {
  const Vertex up = c.successor(u);
  const Vertex vp = c.successor(v);
  const Path a = c.section(up, v);   // u+ ... v
  const Path b = c.section(vp, u);   // v+ ... u
  const auto& av = a.verts;
  const auto& bv = b.verts;
  for (std::size_t i = 0; i + 1 < av.size(); ++i) {
    if (g.adjacent(vp, av[i]) && g.adjacent(up, av[i + 1])) {
      // u ... v+ | a_i ... a_0 | a_{i+1} ... v
      Path out{{bv.rbegin(), bv.rend()}};
      for (std::size_t j = i + 1; j-- > 0;) out.verts.push_back(av[j]);
      out.verts.insert(out.verts.end(), av.begin() + static_cast<long>(i) + 1, av.end());
      return out;
    }
  }
  for (std::size_t j = 0; j + 1 < bv.size(); ++j) {
    if (g.adjacent(up, bv[j]) && g.adjacent(vp, bv[j + 1])) {
      // v ... u+ | b_j ... b_0 | b_{j+1} ... u, then reversed
      Path out{{av.rbegin(), av.rend()}};
      for (std::size_t i = j + 1; i-- > 0;) out.verts.push_back(bv[i]);
      out.verts.insert(out.verts.end(), bv.begin() + static_cast<long>(j) + 1, bv.end());
      return out.reversed();
    }
  }
  return std::nullopt;
}

}  // namespace

RotationResult rotate_endpoints(const Graph& g, const Cycle& c, Vertex u, Vertex v) {
  if (u == v) throw InputError("rotate_endpoints: endpoints coincide");
  if (!c.contains(u) || !c.contains(v))
    throw InputError("rotate_endpoints: endpoint not on the cycle");
  if (c.successor(u) == v) return {c.section(v, u).reversed(), false};
  if (c.successor(v) == u) return {c.section(u, v), false};

  const VertexSet host = c.vertex_set();
  const int n = host.size();
  const Cycle back = c.reversed();
  const bool succ_ok =
      g.degree_in(c.successor(u), host) + g.degree_in(c.successor(v), host) >= n + 1;
  const bool pred_ok =
      g.degree_in(c.predecessor(u), host) + g.degree_in(c.predecessor(v), host) >= n + 1;
  if (auto p = rotate_once(g, c, u, v)) return {std::move(p), false};
  if (auto p = rotate_once(g, back, u, v)) return {std::move(p), false};
  if (succ_ok || pred_ok)
    throw ContractError("rotate_endpoints: degree condition holds but no rotation applies");
  return {find_hamilton_path_between(g, u, v, host), true};
}

namespace {

struct Piece {
  std::vector<Vertex> verts;
  Vertex head() const { return verts.front(); }
  Vertex tail() const { return verts.back(); }
};

std::optional<Path> join_pieces(const Graph& g, const std::vector<const Piece*>& order,
                                const std::vector<bool>& flip) {
  Path out;
  for (std::size_t i = 0; i < order.size(); ++i) {
    const auto& vs = order[i]->verts;
    const Vertex first = flip[i] ? vs.back() : vs.front();
    if (!out.verts.empty() && !g.adjacent(out.verts.back(), first)) return std::nullopt;
    if (flip[i])
      out.verts.insert(out.verts.end(), vs.rbegin(), vs.rend());
    else
      out.verts.insert(out.verts.end(), vs.begin(), vs.end());
  }
  return out;
}

std::vector<Vertex> slice(const Path& p, int from, int to) {
  return {p.verts.begin() + from, p.verts.begin() + to};
}

}  // namespace

Path absorb_pair(const Graph& g, const Path& p, Vertex u, Vertex v) {
  const VertexSet vp = p.vertex_set();
  if (u == v || vp.contains(u) || vp.contains(v))
    throw InputError("absorb_pair: u and v must be distinct and off the path");
  const int k = p.length();
  const int attachments = g.degree_in(u, vp) + g.degree_in(v, vp);
  if (attachments < k + 2)
    throw ContractError("absorb_pair: e({u,v}, V(P)) = " + std::to_string(attachments) +
                        " < k + 2 = " + std::to_string(k + 2));
  const int s = p.size();
  const Piece pu{{u}};
  const Piece pv{{v}};

  // Both vertices as one block inside a single gap.
  if (g.adjacent(u, v)) {
    for (int c = 0; c <= s; ++c) {
      for (bool u_first : {true, false}) {
        Path out{slice(p, 0, c)};
        const Vertex x = u_first ? u : v;
        const Vertex y = u_first ? v : u;
        if (c > 0 && !g.adjacent(p.verts[c - 1], x)) continue;
        if (c < s && !g.adjacent(y, p.verts[c])) continue;
        out.verts.push_back(x);
        out.verts.push_back(y);
        out.verts.insert(out.verts.end(), p.verts.begin() + c, p.verts.end());
        return out;
      }
    }
  }

  // Separate gaps, path order kept.
  for (int c1 = 0; c1 <= s; ++c1) {
    for (int c2 = c1 + 1; c2 <= s; ++c2) {
      for (bool u_first : {true, false}) {
        const Piece a{slice(p, 0, c1)};
        const Piece m{slice(p, c1, c2)};
        const Piece z{slice(p, c2, s)};
        std::vector<const Piece*> order;
        if (!a.verts.empty()) order.push_back(&a);
        order.push_back(u_first ? &pu : &pv);
        order.push_back(&m);
        order.push_back(u_first ? &pv : &pu);
        if (!z.verts.empty()) order.push_back(&z);
        if (auto out = join_pieces(g, order, std::vector<bool>(order.size(), false))) return *out;
      }
    }
  }

  // General reassembly: at most two cuts, any order and orientation.
  for (int c1 = 0; c1 <= s; ++c1) {
    for (int c2 = c1; c2 <= s; ++c2) {
      std::vector<Piece> segs;
      for (auto [from, to] : {std::pair{0, c1}, std::pair{c1, c2}, std::pair{c2, s}})
        if (to > from) segs.push_back(Piece{slice(p, from, to)});
      std::vector<const Piece*> items{&pu, &pv};
      for (const auto& seg : segs) items.push_back(&seg);
      std::vector<int> idx(items.size());
      std::iota(idx.begin(), idx.end(), 0);
      do {
        std::vector<const Piece*> order;
        for (int i : idx) order.push_back(items[i]);
        const int free_bits = static_cast<int>(order.size());
        for (int mask = 0; mask < (1 << free_bits); ++mask) {
          std::vector<bool> flip(order.size());
          bool redundant = false;
          for (int i = 0; i < free_bits; ++i) {
            flip[i] = (mask >> i) & 1;
            if (flip[i] && order[i]->verts.size() == 1) redundant = true;
          }
          if (redundant) continue;
          if (auto out = join_pieces(g, order, flip)) return *out;
        }
      } while (std::next_permutation(idx.begin(), idx.end()));
    }
  }
  throw ContractError("absorb_pair: no placement found with e({u,v}, V(P)) = " +
                      std::to_string(attachments));
}

bool hamilton_connected_by_sigma(const Graph& g, std::optional<VertexSet> within) {
  const VertexSet w = within.value_or(g.vertices());
  return sigma2_at_least(sigma2(g, w), w.size() + 1);
}

bool is_balanced_complete_bipartite(const Graph& g) {
  const int n = g.order();
  if (n < 2 || n % 2 != 0) return false;
  const VertexSet right = g.neighbors(0);
  const VertexSet left = g.vertices() - right;
  if (left.size() != n / 2 || right.size() != n / 2) return false;
  for (Vertex x : left)
    if (g.neighbors(x) != right) return false;
  for (Vertex y : right)
    if (g.neighbors(y) != left) return false;
  return true;
}

}  // namespace twocycles
