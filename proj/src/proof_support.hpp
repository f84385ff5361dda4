#pragma once

// Shared plumbing for the constructive proof pipeline (not installed).

#include <optional>
#include <string>
#include <vector>

#include "twocycles/graph.hpp"
#include "twocycles/graph6.hpp"
#include "twocycles/hamilton.hpp"
#include "twocycles/solver.hpp"

namespace twocycles::detail {

class ProofContext {
 public:
  ProofContext(const Graph& g, SolveTrace& trace) : g(g), trace(trace) {}

  [[noreturn]] void fail(const std::string& what) const {
    throw ProofContractError(what, trace, encode_graph6(g));
  }

  /// `verts` as a cycle of g, or a contract failure naming `where`.
  Cycle checked_cycle(std::vector<Vertex> verts, const char* where) const {
    Cycle c(std::move(verts));
    if (!is_cycle(g, c)) fail(std::string(where) + ": constructed sequence is not a cycle");
    return c;
  }

  std::optional<Cycle> try_close(const Path& p) const {
    try {
      return close_path_ore(g, p);
    } catch (const ContractError&) {
      return std::nullopt;
    }
  }

  const Graph& g;
  SolveTrace& trace;
};

inline std::vector<Vertex> concat(std::initializer_list<std::vector<Vertex>> parts) {
  std::vector<Vertex> out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

inline CyclePairCert ordered_pair(Cycle a, Cycle b, int first_len) {
  if (a.size() == first_len) return {std::move(a), std::move(b)};
  return {std::move(b), std::move(a)};
}

/// Lowest-index vertex of `s`, or -1 when empty.
inline Vertex lowest_or_none(VertexSet s) { return s.empty() ? -1 : s.lowest(); }

}  // namespace twocycles::detail
