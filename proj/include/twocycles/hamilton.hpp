#pragma once

#include <functional>
#include <optional>

#include "twocycles/graph.hpp"

namespace twocycles {

// Exact searches. `within` defaults to all of V(g); everything is computed in
// the induced subgraph G[within].

/// A k-cycle inside `within`, or nullopt iff none exists.
/// Throws InputError unless 3 <= k <= |within|.
std::optional<Cycle> find_cycle_of_length(const Graph& g, int k,
                                          std::optional<VertexSet> within = {});

/// Calls `visit` once per k-cycle of G[within] (rotation and reflection
/// deduplicated: the lowest vertex comes first and the second vertex is below
/// the last). Stops early when `visit` returns true; returns whether it did.
bool for_each_cycle(const Graph& g, int k, VertexSet within,
                    const std::function<bool(const Cycle&)>& visit);

std::optional<Cycle> find_hamilton_cycle(const Graph& g, VertexSet within);
std::optional<Path> find_hamilton_path(const Graph& g, VertexSet within);

/// Spanning path of G[within] from u to v. Throws InputError when u == v or
/// either endpoint lies outside `within`.
std::optional<Path> find_hamilton_path_between(const Graph& g, Vertex u, Vertex v,
                                               std::optional<VertexSet> within = {});

/// Closes a Hamilton path of G[V(p)] into a Hamilton cycle of the same set:
/// directly when the ends are adjacent, otherwise through the first index i
/// with front ~ p[i+1] and back ~ p[i]. Guaranteed when the end degrees
/// (counted inside V(p)) sum to at least |p|. ContractError when no such
/// index exists.
Cycle close_path_ore(const Graph& g, const Path& p);

struct RotationResult {
  std::optional<Path> path;
  /// The rotation found nothing and exact search produced `path`.
  bool used_fallback = false;
};

/// Hamilton path of G[V(c)] with ends u and v, built from the Hamilton cycle c
/// by a single rotation when d(u+)+d(v+) or d(u-)+d(v-) is large enough
/// (successor pair tried first). Falls back to exact search otherwise.
RotationResult rotate_endpoints(const Graph& g, const Cycle& c, Vertex u, Vertex v);

/// Hamilton path of G[V(p) + {u, v}] given e({u,v}, V(p)) >= |p| + 1.
///
/// The construction uses only the edges of p and the edges at u and v, so it
/// cuts p into at most three segments and reassembles them around u and v.
/// Placements keeping u and v together are tried before split placements.
/// ContractError when the edge count is below the bound and nothing fits.
Path absorb_pair(const Graph& g, const Path& p, Vertex u, Vertex v);

/// sigma2(G[within]) >= |within| + 1, which makes G[within] Hamilton-connected.
bool hamilton_connected_by_sigma(const Graph& g, std::optional<VertexSet> within = {});

/// Complete bipartite graph with equal sides (the exception to pancyclicity).
bool is_balanced_complete_bipartite(const Graph& g);

}  // namespace twocycles
