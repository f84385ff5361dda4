#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>

#include "twocycles/hamilton.hpp"

using namespace twocycles;

namespace {

Graph complete(int n) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph cycle_graph(int n) {
  Graph g(n);
  for (Vertex v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

Graph k33() {
  Graph g(6);
  for (Vertex a = 0; a < 3; ++a)
    for (Vertex b = 3; b < 6; ++b) g.add_edge(a, b);
  return g;
}

Graph petersen() {
  Graph g(10);
  for (Vertex i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return g;
}

Graph random_graph(std::mt19937& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

Graph from_mask(int n, std::uint32_t mask) {
  Graph g(n);
  int bit = 0;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v, ++bit)
      if ((mask >> bit) & 1U) g.add_edge(u, v);
  return g;
}

// Permutation oracles.

bool brute_cycle(const Graph& g, int k) {
  const int n = g.order();
  for (std::uint32_t sub = 0; sub < (1U << n); ++sub) {
    if (std::popcount(sub) != k) continue;
    std::vector<Vertex> vs = VertexSet(sub).to_vector();
    do {
      bool ok = true;
      for (int i = 0; i < k && ok; ++i) ok = g.adjacent(vs[i], vs[(i + 1) % k]);
      if (ok) return true;
    } while (std::next_permutation(vs.begin() + 1, vs.end()));
  }
  return false;
}

bool brute_path_between(const Graph& g, Vertex u, Vertex v) {
  std::vector<Vertex> vs(g.order());
  std::iota(vs.begin(), vs.end(), 0);
  do {
    if (vs.front() != u || vs.back() != v) continue;
    bool ok = true;
    for (std::size_t i = 0; i + 1 < vs.size() && ok; ++i) ok = g.adjacent(vs[i], vs[i + 1]);
    if (ok) return true;
  } while (std::next_permutation(vs.begin(), vs.end()));
  return false;
}

bool spans(const Path& p, VertexSet s) {
  return p.size() == s.size() && p.vertex_set() == s;
}

}  // namespace

TEST_CASE("find_cycle_of_length examples") {
  auto c = find_cycle_of_length(complete(5), 4);
  REQUIRE(c);
  CHECK(c->size() == 4);
  CHECK(is_cycle(complete(5), *c));
  CHECK_FALSE(find_cycle_of_length(k33(), 5));
  CHECK_FALSE(find_cycle_of_length(petersen(), 10));
  auto nine = find_cycle_of_length(petersen(), 9);
  REQUIRE(nine);
  CHECK(is_cycle(petersen(), *nine));
  CHECK_THROWS_AS(find_cycle_of_length(complete(5), 2), InputError);
  CHECK_THROWS_AS(find_cycle_of_length(complete(5), 6), InputError);
  CHECK_THROWS_AS(find_cycle_of_length(complete(5), 4, VertexSet{0, 1, 2}), InputError);
}

TEST_CASE("find_cycle_of_length agrees with permutations on every graph n <= 5") {
  for (int n = 3; n <= 5; ++n) {
    const int pairs = n * (n - 1) / 2;
    for (std::uint32_t mask = 0; mask < (1U << pairs); ++mask) {
      const Graph g = from_mask(n, mask);
      for (int k = 3; k <= n; ++k) {
        auto c = find_cycle_of_length(g, k);
        REQUIRE(c.has_value() == brute_cycle(g, k));
        if (c) CHECK((c->size() == k && is_cycle(g, *c)));
      }
    }
  }
}

TEST_CASE("find_cycle_of_length agrees with permutations on random n = 6, 7") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 6 + trial % 2;
    const Graph g = random_graph(rng, n, 0.45);
    for (int k = 3; k <= n; ++k) CHECK(find_cycle_of_length(g, k).has_value() == brute_cycle(g, k));
  }
}

TEST_CASE("for_each_cycle counts") {
  auto count = [](const Graph& g, int k) {
    int c = 0;
    for_each_cycle(g, k, g.vertices(), [&](const Cycle& cyc) {
      CHECK(is_cycle(g, cyc));
      ++c;
      return false;
    });
    return c;
  };
  // C(n, k) (k-1)! / 2 in K_n
  CHECK(count(complete(5), 3) == 10);
  CHECK(count(complete(5), 4) == 15);
  CHECK(count(complete(5), 5) == 12);
  CHECK(count(k33(), 4) == 9);
  CHECK(count(k33(), 6) == 6);
  CHECK(count(k33(), 3) == 0);
  CHECK(count(petersen(), 5) == 12);
}

TEST_CASE("find_hamilton_path_between examples") {
  auto p = find_hamilton_path_between(complete(4), 0, 3);
  REQUIRE(p);
  CHECK(p->front() == 0);
  CHECK(p->back() == 3);
  CHECK(spans(*p, VertexSet::range(4)));
  CHECK_FALSE(find_hamilton_path_between(cycle_graph(5), 0, 2));
  CHECK(find_hamilton_path_between(cycle_graph(5), 0, 1));
  CHECK_FALSE(find_hamilton_path_between(k33(), 0, 1));
  CHECK(find_hamilton_path_between(k33(), 0, 4));
  CHECK_THROWS_AS(find_hamilton_path_between(complete(4), 1, 1), InputError);
  CHECK_THROWS_AS(find_hamilton_path_between(complete(4), 0, 3, VertexSet{0, 1, 2}), InputError);
}

TEST_CASE("find_hamilton_path_between agrees with permutations on every graph n <= 5") {
  for (int n = 3; n <= 5; ++n) {
    const int pairs = n * (n - 1) / 2;
    for (std::uint32_t mask = 0; mask < (1U << pairs); ++mask) {
      const Graph g = from_mask(n, mask);
      for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v) {
          if (u == v) continue;
          auto p = find_hamilton_path_between(g, u, v);
          REQUIRE(p.has_value() == brute_path_between(g, u, v));
          if (p) CHECK((is_path(g, *p) && p->front() == u && p->back() == v && spans(*p, g.vertices())));
        }
    }
  }
}

TEST_CASE("Hamilton cycle and path searches inside a subset") {
  const Graph p = petersen();
  for (Vertex skip = 0; skip < 10; ++skip) {
    const VertexSet w = p.vertices().without(skip);
    auto c = find_hamilton_cycle(p, w);
    REQUIRE(c);
    CHECK((c->vertex_set() == w && is_cycle(p, *c)));
  }
  CHECK_FALSE(find_hamilton_cycle(p, p.vertices()));
  auto path = find_hamilton_path(p, p.vertices());
  REQUIRE(path);
  CHECK((is_path(p, *path) && spans(*path, p.vertices())));
}

TEST_CASE("Ore: sigma2 >= n gives a Hamilton cycle") {
  std::mt19937 rng(3);
  int tested = 0;
  for (int trial = 0; trial < 3000 && tested < 300; ++trial) {
    const int n = 4 + trial % 6;
    const Graph g = random_graph(rng, n, 0.7);
    if (!sigma2_at_least(sigma2(g), n)) continue;
    ++tested;
    CHECK(find_hamilton_cycle(g, g.vertices()).has_value());
  }
  CHECK(tested >= 100);
}

TEST_CASE("close_path_ore examples") {
  const Graph k4 = complete(4);
  const Cycle c = close_path_ore(k4, Path{{0, 1, 2, 3}});
  CHECK(c.vertices() == std::vector<Vertex>{0, 1, 2, 3});

  const Graph b = k33();
  const Cycle six = close_path_ore(b, Path{{0, 3, 1, 4, 2, 5}});
  CHECK((six.size() == 6 && is_cycle(b, six)));

  // ends 0 and 5 non-adjacent with d(0) + d(5) = 4 + 2 = 6 = n
  Graph g = build_graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 2}, {0, 3}, {0, 4}, {5, 1}});
  const Cycle r = close_path_ore(g, Path{{0, 1, 2, 3, 4, 5}});
  CHECK((r.size() == 6 && is_cycle(g, r)));

  CHECK_THROWS_AS(close_path_ore(cycle_graph(6), Path{{0, 1, 2, 3, 4}}), ContractError);
}

TEST_CASE("close_path_ore on random Ore paths") {
  std::mt19937 rng(99);
  int tested = 0;
  while (tested < 500) {
    const int n = 4 + tested % 9;
    const Graph g = random_graph(rng, n, 0.55);
    auto p = find_hamilton_path(g, g.vertices());
    if (!p) continue;
    if (!g.adjacent(p->front(), p->back()) && g.degree(p->front()) + g.degree(p->back()) < n) continue;
    ++tested;
    const Cycle c = close_path_ore(g, *p);
    CHECK((c.vertex_set() == g.vertices() && is_cycle(g, c)));
  }
}

TEST_CASE("rotate_endpoints examples") {
  const Graph k5 = complete(5);
  const Cycle c5({0, 1, 2, 3, 4});
  for (Vertex u = 0; u < 5; ++u)
    for (Vertex v = 0; v < 5; ++v) {
      if (u == v) continue;
      const RotationResult r = rotate_endpoints(k5, c5, u, v);
      REQUIRE(r.path);
      CHECK_FALSE(r.used_fallback);
      CHECK((r.path->front() == u && r.path->back() == v && is_path(k5, *r.path)));
    }

  const RotationResult none = rotate_endpoints(cycle_graph(6), Cycle({0, 1, 2, 3, 4, 5}), 0, 3);
  CHECK_FALSE(none.path);
  CHECK(none.used_fallback);

  Graph wheel = cycle_graph(6);  // vertex 5 joins the rim 0..4
  wheel.remove_edge(5, 0);
  wheel.remove_edge(4, 5);
  wheel.add_edge(4, 0);
  for (Vertex v = 0; v < 5; ++v) wheel.add_edge(5, v);
  const RotationResult w = rotate_endpoints(wheel, Cycle({0, 1, 2, 3, 4, 5}), 5, 2);
  REQUIRE(w.path);
  CHECK((w.path->front() == 5 && w.path->back() == 2 && is_path(wheel, *w.path)));
  CHECK(spans(*w.path, wheel.vertices()));

  CHECK_THROWS_AS(rotate_endpoints(k5, c5, 0, 7), InputError);
}

TEST_CASE("rotate_endpoints never needs exact search under its degree condition") {
  std::mt19937 rng(7);
  int tested = 0;
  for (int trial = 0; trial < 20000 && tested < 400; ++trial) {
    const int n = 5 + trial % 6;
    const Graph g = random_graph(rng, n, 0.7);
    auto c = find_hamilton_cycle(g, g.vertices());
    if (!c) continue;
    const Vertex u = trial % n;
    const Vertex v = (u + 2 + trial % (n - 2)) % n;
    if (u == v) continue;
    const bool plus = g.degree(c->successor(u)) + g.degree(c->successor(v)) >= n + 1;
    const bool minus = g.degree(c->predecessor(u)) + g.degree(c->predecessor(v)) >= n + 1;
    if (!plus && !minus) continue;
    ++tested;
    const RotationResult r = rotate_endpoints(g, *c, u, v);
    REQUIRE(r.path);
    CHECK_FALSE(r.used_fallback);
    CHECK((r.path->front() == u && r.path->back() == v && is_path(g, *r.path) && spans(*r.path, g.vertices())));
  }
  CHECK(tested >= 100);
}

TEST_CASE("absorb_pair examples") {
  const Graph k4 = complete(4);
  const Path p4 = absorb_pair(k4, Path{{0, 1}}, 2, 3);
  CHECK((is_path(k4, p4) && spans(p4, VertexSet::range(4))));

  const Graph k5 = complete(5);
  const Path p5 = absorb_pair(k5, Path{{0, 1, 2}}, 3, 4);
  CHECK((is_path(k5, p5) && spans(p5, VertexSet::range(5))));

  // path 0-1-2-3 (k = 3) with exactly 5 attachments of u = 4, v = 5
  const Graph g = build_graph(6, {{0, 1}, {1, 2}, {2, 3}, {4, 0}, {4, 2}, {5, 1}, {5, 3}, {5, 2}});
  const Path p6 = absorb_pair(g, Path{{0, 1, 2, 3}}, 4, 5);
  CHECK((is_path(g, p6) && spans(p6, VertexSet::range(6))));

  const Graph sparse = build_graph(5, {{0, 1}, {1, 2}, {3, 0}});
  CHECK_THROWS_AS(absorb_pair(sparse, Path{{0, 1, 2}}, 3, 4), ContractError);
}

TEST_CASE("absorb_pair on every chord-free attachment pattern, k <= 5") {
  // p = 0..k, u = k+1, v = k+2; only path edges, the uv edge and attachments.
  long tested = 0;
  for (int k = 1; k <= 5; ++k) {
    const int n = k + 3;
    const Vertex u = k + 1;
    const Vertex v = k + 2;
    const std::uint32_t span = 1U << (k + 1);
    for (int uv = 0; uv < 2; ++uv)
      for (std::uint32_t au = 0; au < span; ++au)
        for (std::uint32_t av = 0; av < span; ++av) {
          if (std::popcount(au) + std::popcount(av) < k + 2) continue;
          Graph g(n);
          for (Vertex i = 0; i < k; ++i) g.add_edge(i, i + 1);
          for (Vertex i = 0; i <= k; ++i) {
            if ((au >> i) & 1U) g.add_edge(u, i);
            if ((av >> i) & 1U) g.add_edge(v, i);
          }
          if (uv) g.add_edge(u, v);
          Path p;
          for (Vertex i = 0; i <= k; ++i) p.verts.push_back(i);
          const Path out = absorb_pair(g, p, u, v);
          REQUIRE((is_path(g, out) && spans(out, g.vertices())));
          ++tested;
        }
  }
  CHECK(tested > 1000);
}

TEST_CASE("hamilton_connected_by_sigma examples and the property behind it") {
  CHECK(hamilton_connected_by_sigma(complete(5)));
  CHECK_FALSE(hamilton_connected_by_sigma(cycle_graph(6)));
  CHECK_FALSE(hamilton_connected_by_sigma(k33()));

  std::mt19937 rng(21);
  int tested = 0;
  for (int trial = 0; trial < 5000 && tested < 200; ++trial) {
    const int n = 4 + trial % 5;
    const Graph g = random_graph(rng, n, 0.75);
    if (!hamilton_connected_by_sigma(g)) continue;
    ++tested;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v) CHECK(find_hamilton_path_between(g, u, v).has_value());
  }
  CHECK(tested >= 50);
}

TEST_CASE("balanced complete bipartite recognition") {
  CHECK(is_balanced_complete_bipartite(k33()));
  CHECK_FALSE(is_balanced_complete_bipartite(complete(6)));
  Graph k23(5);
  for (Vertex a = 0; a < 2; ++a)
    for (Vertex b = 2; b < 5; ++b) k23.add_edge(a, b);
  CHECK_FALSE(is_balanced_complete_bipartite(k23));
}
