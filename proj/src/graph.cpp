#include "twocycles/graph.hpp"

#include <algorithm>
#include <istream>
#include <limits>
#include <sstream>
#include <unordered_map>

namespace twocycles {

Graph::Graph(int n) : n_(n) {
  if (n < 0 || n > kMaxOrder)
    throw InputError("graph order " + std::to_string(n) + " outside [0, 64]");
}

int Graph::edge_count() const {
  int twice = 0;
  for (int v = 0; v < n_; ++v) twice += std::popcount(adj_[v]);
  return twice / 2;
}

int Graph::min_degree() const {
  int best = n_;
  for (int v = 0; v < n_; ++v) best = std::min(best, degree(v));
  return best;
}

void Graph::add_edge(Vertex u, Vertex v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_)
    throw InputError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                     ") has an endpoint outside [0, " + std::to_string(n_) + ")");
  if (u == v) throw InputError("loop at vertex " + std::to_string(u));
  adj_[u] |= std::uint64_t{1} << v;
  adj_[v] |= std::uint64_t{1} << u;
}

void Graph::remove_edge(Vertex u, Vertex v) {
  adj_[u] &= ~(std::uint64_t{1} << v);
  adj_[v] &= ~(std::uint64_t{1} << u);
}

bool Graph::operator==(const Graph& o) const {
  return n_ == o.n_ && std::equal(adj_.begin(), adj_.begin() + n_, o.adj_.begin());
}

Graph build_graph(int n, std::span<const Edge> edges) {
  if (n < 3 || n > kMaxOrder)
    throw InputError("graph order " + std::to_string(n) + " outside [3, 64]");
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

Graph build_graph(int n, std::initializer_list<Edge> edges) {
  return build_graph(n, std::span<const Edge>(edges.begin(), edges.size()));
}

std::vector<Edge> edges_of(const Graph& g) {
  std::vector<Edge> out;
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v : g.neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

std::optional<int> sigma2(const Graph& g, VertexSet within) {
  std::optional<int> best;
  for (Vertex x : within) {
    const VertexSet later = within - VertexSet::range(x + 1);
    const VertexSet non_adjacent = later - g.neighbors(x);
    if (non_adjacent.empty()) continue;
    const int dx = g.degree_in(x, within);
    for (Vertex y : non_adjacent) {
      const int s = dx + g.degree_in(y, within);
      if (!best || s < *best) best = s;
    }
  }
  return best;
}

std::optional<int> sigma2(const Graph& g) { return sigma2(g, g.vertices()); }

int inner_edges(const Graph& g, VertexSet w) {
  int twice = 0;
  for (Vertex v : w) twice += g.degree_in(v, w);
  return twice / 2;
}

int cross_edges(const Graph& g, VertexSet w, VertexSet w2) {
  if (!w.disjoint(w2)) throw InputError("cross_edges: vertex sets overlap");
  int count = 0;
  for (Vertex v : w) count += g.degree_in(v, w2);
  return count;
}

VertexSet Subgraph::lift(VertexSet local) const {
  VertexSet out;
  for (Vertex v : local) out = out.with(to_host[v]);
  return out;
}

Subgraph induced(const Graph& g, VertexSet within) {
  Subgraph sub{Graph(within.size()), within.to_vector()};
  const auto& host = sub.to_host;
  for (int i = 0; i < static_cast<int>(host.size()); ++i)
    for (int j = i + 1; j < static_cast<int>(host.size()); ++j)
      if (g.adjacent(host[i], host[j])) sub.graph.add_edge(i, j);
  return sub;
}

bool connected_within(const Graph& g, VertexSet within) {
  if (within.empty()) return true;
  VertexSet reached = VertexSet::single(within.lowest());
  VertexSet frontier = reached;
  while (!frontier.empty()) {
    VertexSet next;
    for (Vertex v : frontier) next |= g.neighbors(v);
    next = (next & within) - reached;
    reached |= next;
    frontier = next;
  }
  return reached == within;
}

Path Path::reversed() const { return Path{{verts.rbegin(), verts.rend()}}; }

int Cycle::position(Vertex v) const {
  auto it = std::find(verts_.begin(), verts_.end(), v);
  return it == verts_.end() ? -1 : static_cast<int>(it - verts_.begin());
}

Vertex Cycle::at(int i) const {
  const int n = size();
  return verts_[((i % n) + n) % n];
}

Cycle Cycle::reversed() const {
  std::vector<Vertex> rev(verts_.rbegin(), verts_.rend());
  return Cycle(std::move(rev), orientation_ == Orientation::forward ? Orientation::backward
                                                                    : Orientation::forward);
}

Path Cycle::section(Vertex u, Vertex v) const {
  const int i = position(u);
  const int j = position(v);
  if (i < 0 || j < 0) throw InputError("cycle section endpoint not on cycle");
  Path p;
  for (int k = i;; ++k) {
    p.verts.push_back(at(k));
    if (at(k) == v) break;
  }
  return p;
}

namespace {

bool distinct_in_range(const Graph& g, const std::vector<Vertex>& vs) {
  VertexSet seen;
  for (Vertex v : vs) {
    if (v < 0 || v >= g.order() || seen.contains(v)) return false;
    seen = seen.with(v);
  }
  return true;
}

}  // namespace

bool is_path(const Graph& g, const Path& p) {
  if (p.verts.empty() || !distinct_in_range(g, p.verts)) return false;
  for (std::size_t i = 0; i + 1 < p.verts.size(); ++i)
    if (!g.adjacent(p.verts[i], p.verts[i + 1])) return false;
  return true;
}

bool is_cycle(const Graph& g, const Cycle& c) {
  const auto& vs = c.vertices();
  if (vs.size() < 3 || !distinct_in_range(g, vs)) return false;
  for (std::size_t i = 0; i < vs.size(); ++i)
    if (!g.adjacent(vs[i], vs[(i + 1) % vs.size()])) return false;
  return true;
}

bool validate_cert(const Graph& g, const CyclePairCert& cert, int n1, int n2) {
  if (!is_cycle(g, cert.first) || !is_cycle(g, cert.second)) return false;
  if (!cert.first.vertex_set().disjoint(cert.second.vertex_set())) return false;
  const int a = cert.first.size();
  const int b = cert.second.size();
  return (a == n1 && b == n2) || (a == n2 && b == n1);
}

Graph parse_edge_list(std::istream& in) {
  long long n = 0;
  long long m = 0;
  if (!(in >> n >> m)) throw InputError("edge list: missing \"n m\" header");
  if (n < 1 || n > kMaxOrder)
    throw InputError("edge list: order " + std::to_string(n) + " outside [1, 64]");
  if (m < 0) throw InputError("edge list: negative edge count");
  Graph g(static_cast<int>(n));
  std::unordered_map<std::string, Vertex> index;
  auto lookup = [&](const std::string& label) {
    auto [it, fresh] = index.try_emplace(label, static_cast<Vertex>(index.size()));
    if (fresh && it->second >= n)
      throw InputError("edge list: more than " + std::to_string(n) + " distinct labels");
    return it->second;
  };
  for (long long i = 0; i < m; ++i) {
    std::string a, b;
    if (!(in >> a >> b))
      throw InputError("edge list: expected " + std::to_string(m) + " edges, got " +
                       std::to_string(i));
    const Vertex u = lookup(a);
    const Vertex v = lookup(b);
    if (u == v) throw InputError("edge list: loop at label " + a);
    g.add_edge(u, v);
  }
  return g;
}

Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  return parse_edge_list(in);
}

std::string format_edge_list(const Graph& g) {
  const auto es = edges_of(g);
  std::ostringstream out;
  out << g.order() << ' ' << es.size() << '\n';
  for (auto [u, v] : es) out << u << ' ' << v << '\n';
  return out.str();
}

}  // namespace twocycles
