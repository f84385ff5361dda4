#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace twocycles {

using Vertex = int;
inline constexpr int kMaxOrder = 64;

/// Caller supplied an argument outside an operation's domain.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A constructive step could not produce the object its argument guarantees.
/// Either an implementation bug or a counterexample; never an input problem.
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Set of vertex indices below 64, one bit per vertex.
class VertexSet {
 public:
  class iterator {
   public:
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;

    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr Vertex operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    constexpr bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t mask) : mask_(mask) {}
  constexpr VertexSet(std::initializer_list<Vertex> vs) {
    for (Vertex v : vs) mask_ |= bit(v);
  }

  /// {0, ..., n-1}
  static constexpr VertexSet range(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static constexpr VertexSet single(Vertex v) { return VertexSet(bit(v)); }
  template <class Range>
  static VertexSet of(const Range& vs) {
    VertexSet s;
    for (Vertex v : vs) s.mask_ |= bit(v);
    return s;
  }

  constexpr std::uint64_t mask() const { return mask_; }
  constexpr int size() const { return std::popcount(mask_); }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr bool contains(Vertex v) const { return (mask_ >> v) & 1U; }
  constexpr Vertex lowest() const { return std::countr_zero(mask_); }
  constexpr VertexSet with(Vertex v) const { return VertexSet(mask_ | bit(v)); }
  constexpr VertexSet without(Vertex v) const { return VertexSet(mask_ & ~bit(v)); }
  constexpr bool subset_of(VertexSet o) const { return (mask_ & ~o.mask_) == 0; }
  constexpr bool disjoint(VertexSet o) const { return (mask_ & o.mask_) == 0; }

  constexpr VertexSet operator|(VertexSet o) const { return VertexSet(mask_ | o.mask_); }
  constexpr VertexSet operator&(VertexSet o) const { return VertexSet(mask_ & o.mask_); }
  constexpr VertexSet operator-(VertexSet o) const { return VertexSet(mask_ & ~o.mask_); }
  constexpr VertexSet& operator|=(VertexSet o) {
    mask_ |= o.mask_;
    return *this;
  }
  constexpr VertexSet& operator&=(VertexSet o) {
    mask_ &= o.mask_;
    return *this;
  }
  constexpr VertexSet& operator-=(VertexSet o) {
    mask_ &= ~o.mask_;
    return *this;
  }
  constexpr bool operator==(const VertexSet&) const = default;

  constexpr iterator begin() const { return iterator(mask_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<Vertex> to_vector() const { return {begin(), end()}; }

 private:
  static constexpr std::uint64_t bit(Vertex v) { return std::uint64_t{1} << v; }
  std::uint64_t mask_ = 0;
};

/// Simple undirected graph on at most 64 vertices.
class Graph {
 public:
  Graph() = default;
  /// Edgeless graph on n vertices, 0 <= n <= 64.
  explicit Graph(int n);

  int order() const { return n_; }
  VertexSet vertices() const { return VertexSet::range(n_); }
  VertexSet neighbors(Vertex v) const { return VertexSet(adj_[v]); }
  bool adjacent(Vertex u, Vertex v) const { return (adj_[u] >> v) & 1U; }
  int degree(Vertex v) const { return std::popcount(adj_[v]); }
  int degree_in(Vertex v, VertexSet within) const {
    return std::popcount(adj_[v] & within.mask());
  }
  int edge_count() const;
  int min_degree() const;
  bool is_complete() const { return 2 * edge_count() == n_ * (n_ - 1); }

  /// Construction only; a finished Graph is treated as an immutable value.
  void add_edge(Vertex u, Vertex v);
  void remove_edge(Vertex u, Vertex v);

  bool operator==(const Graph& o) const;

 private:
  int n_ = 0;
  std::array<std::uint64_t, kMaxOrder> adj_{};
};

using Edge = std::pair<Vertex, Vertex>;

/// Checked construction: 3 <= n <= 64, no loops, endpoints in range.
/// Duplicate edges collapse.
Graph build_graph(int n, std::span<const Edge> edges);
Graph build_graph(int n, std::initializer_list<Edge> edges);

std::vector<Edge> edges_of(const Graph& g);

/// min d(x)+d(y) over non-adjacent x != y; nullopt when no such pair exists.
std::optional<int> sigma2(const Graph& g);
/// Same quantity for the induced subgraph G[within], degrees counted in it.
std::optional<int> sigma2(const Graph& g, VertexSet within);

/// Every threshold test treats an absent sigma2 as satisfied.
inline bool sigma2_at_least(const std::optional<int>& s, int threshold) {
  return !s || *s >= threshold;
}

int inner_edges(const Graph& g, VertexSet w);
/// Throws InputError when the two sets overlap.
int cross_edges(const Graph& g, VertexSet w, VertexSet w2);

/// G[within] relabelled onto 0..|within|-1 in ascending vertex order.
struct Subgraph {
  Graph graph;
  std::vector<Vertex> to_host;

  VertexSet lift(VertexSet local) const;
};
Subgraph induced(const Graph& g, VertexSet within);

/// Whether `within` induces a connected subgraph (the empty set counts).
bool connected_within(const Graph& g, VertexSet within);

// ---------------------------------------------------------------------------
// Paths and cycles

struct Path {
  std::vector<Vertex> verts;

  int size() const { return static_cast<int>(verts.size()); }
  /// Number of edges.
  int length() const { return size() - 1; }
  Vertex front() const { return verts.front(); }
  Vertex back() const { return verts.back(); }
  VertexSet vertex_set() const { return VertexSet::of(verts); }
  Path reversed() const;
  bool operator==(const Path&) const = default;
};

enum class Orientation { forward, backward };

/// Cyclic vertex sequence; `vertices()` is the traversal order of the current
/// orientation, so successor/predecessor follow it.
class Cycle {
 public:
  Cycle() = default;
  explicit Cycle(std::vector<Vertex> verts, Orientation o = Orientation::forward)
      : verts_(std::move(verts)), orientation_(o) {}

  const std::vector<Vertex>& vertices() const { return verts_; }
  int size() const { return static_cast<int>(verts_.size()); }
  Orientation orientation() const { return orientation_; }
  VertexSet vertex_set() const { return VertexSet::of(verts_); }

  /// Index of v in traversal order, or -1.
  int position(Vertex v) const;
  bool contains(Vertex v) const { return position(v) >= 0; }
  Vertex at(int i) const;  // cyclic index
  Vertex successor(Vertex v, int k = 1) const { return at(position(v) + k); }
  Vertex predecessor(Vertex v, int k = 1) const { return at(position(v) - k); }

  /// The same cycle traversed the other way.
  Cycle reversed() const;
  /// The section from u to v along the orientation, both ends included.
  Path section(Vertex u, Vertex v) const;

 private:
  std::vector<Vertex> verts_;
  Orientation orientation_ = Orientation::forward;
};

/// Two vertex-disjoint cycles; `first` carries the first requested length.
struct CyclePairCert {
  Cycle first;
  Cycle second;
};

bool is_path(const Graph& g, const Path& p);
bool is_cycle(const Graph& g, const Cycle& c);

/// Both sequences are cycles of g, disjoint, with lengths {n1, n2} in either
/// order. Never throws.
bool validate_cert(const Graph& g, const CyclePairCert& cert, int n1, int n2);

// ---------------------------------------------------------------------------
// Edge-list text format: "n m" then m lines "u v". Vertex labels are arbitrary
// tokens mapped to indices in first-seen order.

Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(const std::string& text);
std::string format_edge_list(const Graph& g);

}  // namespace twocycles
