#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "twocycles/graph.hpp"

namespace twocycles {

// ---------------------------------------------------------------------------
// Trichotomy for sigma2(G) >= n - 1

struct HamiltonCycleCase {
  Cycle cycle;
};

/// K_{m,m+1} inside G inside K_m + (m+1)K_1: `independent` holds the m+1
/// pairwise non-adjacent vertices, each joined to all m vertices of `other`.
struct NearBipartiteCase {
  int m = 0;
  VertexSet independent;
  VertexSet other;
};

/// G = K_1 + (K_p u K_q): `cut` sees everything, `left` and `right` are
/// cliques with no edges between them.
struct ConeOverCliquesCase {
  Vertex cut = 0;
  VertexSet left;
  VertexSet right;
};

using StructureClass = std::variant<HamiltonCycleCase, NearBipartiteCase, ConeOverCliquesCase>;

enum class StructureKind { hamilton_cycle, near_bipartite, cone_over_cliques };

StructureKind kind_of(const StructureClass& s);
std::string_view to_string(StructureKind k);

/// Requires n >= 3 and sigma2(g) >= n - 1 (InputError otherwise). Returns the
/// first applicable case in the order Hamilton cycle, near-bipartite, cone.
/// ContractError if none applies.
StructureClass classify_near_hamiltonian(const Graph& g);

/// Re-checks a witness against g from scratch.
bool verify_structure(const Graph& g, const StructureClass& s);

/// Exhaustive reference classifier: subset-DP Hamiltonicity, all (m+1)-subsets
/// for the near-bipartite case, every vertex for the cone case. Returns
/// nullopt when no case applies. Intended for n <= 16.
std::optional<StructureKind> classify_brute_force(const Graph& g);

// ---------------------------------------------------------------------------
// Named families: a small closed algebra of graph constructions.
//
// Text syntax: K<k> complete, E<k> edgeless, B(a,b) complete bipartite,
// J(x,y,...) join, U(x,y,...) disjoint union. Vertices are numbered
// left operand first.

struct Family {
  enum class Kind { complete, edgeless, complete_bipartite, join, disjoint_union };

  Kind kind = Kind::complete;
  int a = 0;
  int b = 0;
  std::vector<Family> parts;

  static Family complete(int k) { return {Kind::complete, k, 0, {}}; }
  static Family edgeless(int k) { return {Kind::edgeless, k, 0, {}}; }
  static Family complete_bipartite(int a, int b) { return {Kind::complete_bipartite, a, b, {}}; }
  static Family join(std::vector<Family> parts) { return {Kind::join, 0, 0, std::move(parts)}; }
  static Family disjoint_union(std::vector<Family> parts) {
    return {Kind::disjoint_union, 0, 0, std::move(parts)};
  }

  int order() const;
};

/// Throws InputError when the total order exceeds 64.
Graph gen_family(const Family& f);
Family parse_family(std::string_view text);
std::string to_string(const Family& f);

// ---------------------------------------------------------------------------
// Degree conditions

/// delta(G) >= ceil(n1/2) + ceil(n2/2). Requires n1 + n2 = n, n1, n2 >= 3.
bool elzahar_condition(const Graph& g, int n1, int n2);

/// sigma2(G) >= n + slack, absent sigma2 counting as satisfied.
bool ore_condition(const Graph& g, int slack);

}  // namespace twocycles
