#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "twocycles/graph.hpp"

namespace twocycles {

// ---------------------------------------------------------------------------
// Trace

/// Fixed vocabulary of proof steps a solve can pass through.
enum class ProofStep {
  prop1_case1,   // "Prop1.C1"
  prop1_case2,   // "Prop1.C2"
  prop1_case3,   // "Prop1.C3"
  lemma25,       // "L2.5"
  lemma26,       // "L2.6"
  prop2,         // "Prop2"
  prop3,         // "Prop3"
  claim1_case1,  // "Claim1.C1"
  claim1_case2,  // "Claim1.C2"
  claim2,        // "Claim2"
  claim2_1,      // "Claim2.1"
  claim3,        // "Claim3"
  fallback,      // "Fallback"
};

std::string_view label(ProofStep s);
std::optional<ProofStep> parse_label(std::string_view text);

struct TraceStep {
  ProofStep step;
  std::vector<Vertex> vertices;
  /// Exact search stood in for a constructive step.
  bool fallback = false;
  /// Partition score after an exchange step.
  std::optional<int> score;
  std::string note;
};

struct SolveTrace {
  std::vector<TraceStep> steps;

  void add(ProofStep s, std::vector<Vertex> vertices = {}, std::string note = {});
  bool contains(ProofStep s) const;
  /// True when the oracle, not the proof pipeline, produced the answer.
  bool used_fallback() const { return contains(ProofStep::fallback); }
  /// Some step was flagged as an exact search standing in for a construction.
  bool used_exact_search() const;
  std::string to_json() const;
};

/// A constructive step of the proof pipeline failed. Carries the trace up to
/// the failure and the offending graph in graph6.
class ProofContractError : public ContractError {
 public:
  ProofContractError(const std::string& what, SolveTrace trace, std::string graph6)
      : ContractError(what), trace_(std::move(trace)), graph6_(std::move(graph6)) {}
  const SolveTrace& trace() const { return trace_; }
  const std::string& graph6() const { return graph6_; }

 private:
  SolveTrace trace_;
  std::string graph6_;
};

// ---------------------------------------------------------------------------
// Ground truth

/// Exact search: enumerates cycles of the shorter length (deduplicated) and
/// looks for the other length in the complement. Requires n1, n2 >= 3 and
/// n1 + n2 <= n. The returned `first` cycle has length n1.
std::optional<CyclePairCert> brute_force_oracle(const Graph& g, int n1, int n2);

// ---------------------------------------------------------------------------
// Proof pipeline

/// Disjoint (small, n - small) cycles for sigma2(G) >= n + 2 via the triangle
/// bootstrap. small must be 3 (n >= 6) or 4 (n >= 8). InputError on a
/// violated precondition, ProofContractError if a case cannot be completed.
CyclePairCert prop1_small(const Graph& g, int small, SolveTrace& trace);
CyclePairCert prop1_small(const Graph& g, int small);

/// W1 + W2 = V(G) with |W1| = n1, |W2| = n2, both inducing Hamilton paths.
struct Partition {
  VertexSet first;
  VertexSet second;
  int score = 0;  // e(W1) + e(W2)
};

/// Starts from a Hamilton cycle split into arcs of sizes n1, n2 and applies the
/// two-vertex exchange (each application raises the score by at least 2) until
/// it no longer applies or both sides are Hamiltonian. Requires
/// sigma2(G) >= n + 2, n1, n2 >= 5, n1 + n2 = n. Exchange steps are recorded in
/// `trace` with their scores.
Partition improve_partition(const Graph& g, int n1, int n2, SolveTrace& trace);
Partition improve_partition(const Graph& g, int n1, int n2);

enum class DecompositionCase {
  all_pairs_hamiltonian,  // (i)
  near_bipartite,         // (ii)
  cone_over_cliques,      // (iii)
};

std::string_view to_string(DecompositionCase c);

/// V1 + V2 = V(G) with |V1| = len1 - 2 and |V2| = len2 + 2, where (len1,
/// len2) is (n1, n2) or the swapped pair depending on which side of the
/// partition was non-Hamiltonian.
struct Decomposition {
  VertexSet v1;
  VertexSet v2;
  int len1 = 0;
  int len2 = 0;
  DecompositionCase kind = DecompositionCase::all_pairs_hamiltonian;
  /// Hamilton path of G[V1].
  Path v1_path;
  /// (ii): the m+1 independent vertices of G[V2] and the other m+2.
  VertexSet independent;
  VertexSet other;
  /// (iii): the three hub vertices and the two cliques.
  VertexSet hubs;
  VertexSet left;
  VertexSet right;
};

/// Re-checks every invariant of d against g exactly.
bool validate_decomposition(const Graph& g, const Decomposition& d);

/// Either the decomposition, or a cycle pair met on the way (both sides of
/// the partition turned out Hamiltonian). The pair's `first` has length n1.
using DecomposeOutcome = std::variant<Decomposition, CyclePairCert>;

DecomposeOutcome lemma26_decompose(const Graph& g, int n1, int n2, SolveTrace& trace);
DecomposeOutcome lemma26_decompose(const Graph& g, int n1, int n2);

/// Disjoint (d.len1, d.len2) cycles from a valid decomposition; `first` lies
/// on the V1 side and has length d.len1.
CyclePairCert solve_from_decomposition(const Graph& g, const Decomposition& d, SolveTrace& trace);
CyclePairCert solve_from_decomposition(const Graph& g, const Decomposition& d);

// ---------------------------------------------------------------------------
// Top level

enum class Strategy { proof_first, oracle_only, proof_only };

std::string_view to_string(Strategy s);
std::optional<Strategy> parse_strategy(std::string_view text);

struct SolveResult {
  std::optional<CyclePairCert> cert;
  SolveTrace trace;
  /// Set when the proof pipeline hit a contract error (proof_first only; the
  /// oracle then answered).
  std::optional<std::string> contract_error;
};

/// Disjoint (n1, n2) cycles with n1 + n2 = n, n1, n2 >= 3 (InputError
/// otherwise). proof_first runs the proof pipeline when sigma2 >= n + 2 and
/// falls back to the oracle on contract errors or weaker sigma2; proof_only
/// lets contract errors propagate and answers nothing below the threshold.
SolveResult find_disjoint_cycles(const Graph& g, int n1, int n2,
                                 Strategy strategy = Strategy::proof_first);

std::string cert_to_json(const CyclePairCert& c);

}  // namespace twocycles
