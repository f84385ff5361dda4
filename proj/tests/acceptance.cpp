// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "twocycles/graph6.hpp"
#include "twocycles/hamilton.hpp"
#include "twocycles/harness.hpp"
#include "twocycles/solver.hpp"
#include "twocycles/structure.hpp"

using namespace twocycles;

namespace {

constexpr double kPinnedProofOnlyFraction = 1.0;

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::string fixture_path(int n) {
  return std::string(TWOCYCLES_FIXTURE_DIR) + "/graphs" + std::to_string(n) + ".g6";
}

int workers() { return std::max(1U, std::thread::hardware_concurrency()); }

Report run_labeled(int n, VerifyMode mode) {
  LabeledSource source(n);
  VerifyOptions options;
  options.workers = workers();
  return verify_stream(source, mode, options);
}

Report run_fixture(int n, VerifyMode mode) {
  std::ifstream in(fixture_path(n));
  Graph6Source source(in, "fixtures n=" + std::to_string(n));
  VerifyOptions options;
  options.workers = workers();
  return verify_stream(source, mode, options);
}

int plain_sigma2(const Graph& g) {
  int best = 1 << 20;
  for (Vertex x = 0; x < g.order(); ++x)
    for (Vertex y = x + 1; y < g.order(); ++y)
      if (!g.adjacent(x, y)) best = std::min(best, g.degree(x) + g.degree(y));
  return best;
}

long count_qualified_fixture(int n, int threshold) {
  std::ifstream in(fixture_path(n));
  std::string line;
  long count = 0;
  while (std::getline(in, line))
    if (plain_sigma2(parse_graph6(line)) >= threshold) ++count;
  return count;
}

long count_qualified_labeled(int n, int threshold) {
  LabeledEnumerator en(n);
  long count = 0;
  while (auto g = en.next())
    if (plain_sigma2(*g) >= threshold) ++count;
  return count;
}

Graph random_graph(std::mt19937& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

Graph complete_bipartite(int a, int b) { return gen_family(Family::complete_bipartite(a, b)); }

// ---------------------------------------------------------------------------

struct TheoremRuns {
  std::vector<Report> reports;
  std::vector<long> expected_qualified_graphs;
};

TheoremRuns theorem_runs() {
  TheoremRuns t;
  for (int n : {6, 7}) {
    t.reports.push_back(run_labeled(n, VerifyMode::theorem15));
    t.expected_qualified_graphs.push_back(count_qualified_labeled(n, n + 2));
  }
  for (int n : {8, 9}) {
    t.reports.push_back(run_fixture(n, VerifyMode::theorem15));
    t.expected_qualified_graphs.push_back(count_qualified_fixture(n, n + 2));
  }
  return t;
}

Outcome theorem_exhaustive(const TheoremRuns& t) {
  Outcome o;
  std::ostringstream d;
  for (std::size_t i = 0; i < t.reports.size(); ++i) {
    const Report& r = t.reports[i];
    const bool ok = r.qualified_graphs == t.expected_qualified_graphs[i] && r.solved == r.qualified &&
                    r.unsolved == 0 && r.contract_errors == 0 && r.consistent();
    o.pass = o.pass && ok;
    d << r.corpus << ": " << r.solved << "/" << r.qualified << " instances, " << r.contract_errors
      << " contract errors, " << r.wall_seconds << " s; ";
  }
  o.detail = d.str();
  return o;
}

Outcome oracle_equivalence(const TheoremRuns& t) {
  Outcome o;
  long instances = 0;
  long mismatches = 0;
  for (const Report& r : t.reports) {
    instances += r.qualified;
    mismatches += r.oracle_mismatches;
  }
  o.pass = mismatches == 0 && instances > 0;
  o.detail = std::to_string(instances) + " qualified instances compared, " +
             std::to_string(mismatches) + " mismatches";
  return o;
}

Outcome sharpness() {
  Outcome o;
  std::ostringstream d;
  for (int n : {6, 8, 10, 12}) {
    const Graph g = complete_bipartite((n + 1) / 2, n / 2);
    o.pass = o.pass && sigma2(g) == n && !ore_condition(g, 2);
    int checked = 0;
    for (int n1 = 3; 2 * n1 <= n; ++n1) {
      const int n2 = n - n1;
      if (n1 % 2 == 0 && n2 % 2 == 0) continue;
      ++checked;
      const SolveResult r = find_disjoint_cycles(g, n1, n2);
      o.pass = o.pass && !r.cert && !brute_force_oracle(g, n1, n2);
    }
    d << "K" << (n + 1) / 2 << "," << n / 2 << ": " << checked << " odd splits absent; ";
  }
  o.detail = d.str();
  return o;
}

Outcome ore_bondy() {
  Outcome o;
  long qualified = 0;
  for (int n = 3; n <= 8; ++n) {
    const Report r = run_fixture(n, VerifyMode::ore_bondy);
    qualified += r.qualified_graphs;
    o.pass = o.pass && r.violations == 0 && r.qualified_graphs == count_qualified_fixture(n, n);
  }
  o.detail = std::to_string(qualified) + " graphs with sigma2 >= n, all pancyclic or K_{n/2,n/2}";
  return o;
}

Outcome classifier() {
  Outcome o;
  long qualified = 0;
  for (int n = 3; n <= 8; ++n) {
    const Report r = run_fixture(n, VerifyMode::lemma27);
    qualified += r.qualified_graphs;
    o.pass = o.pass && r.violations == 0 && r.qualified_graphs == count_qualified_fixture(n, n - 1);
  }
  o.detail = std::to_string(qualified) + " graphs with sigma2 >= n - 1 agree and re-verify";
  return o;
}

Graph minimal_qualified(std::mt19937& rng, int n) {
  Graph g(n);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      g.add_edge(u, v);
      edges.emplace_back(u, v);
    }
  std::shuffle(edges.begin(), edges.end(), rng);
  for (const auto& [u, v] : edges) {
    g.remove_edge(u, v);
    if (!ore_condition(g, 2)) g.add_edge(u, v);
  }
  return g;
}

// Recomputes every exchange of improve_partition from the initial Hamilton
// cycle arcs: each recorded score must match and rise by at least 2.
bool replay_partition(const Graph& g, int n1, long& steps) {
  const int n = g.order();
  SolveTrace t;
  const Partition p = improve_partition(g, n1, n - n1, t);
  const auto ham = find_hamilton_cycle(g, g.vertices());
  VertexSet side[2];
  for (int k = 0; k < n; ++k) side[k < n1 ? 0 : 1] |= VertexSet::single(ham->vertices()[k]);
  int score = inner_edges(g, side[0]) + inner_edges(g, side[1]);
  bool ok = true;
  for (const auto& s : t.steps) {
    if (s.step != ProofStep::lemma26 || !s.score) continue;
    ++steps;
    const VertexSet out{s.vertices[0], s.vertices[1]};
    const VertexSet in{s.vertices[2], s.vertices[3]};
    const int a = out.subset_of(side[0]) ? 0 : 1;
    side[a] = (side[a] - out) | in;
    side[1 - a] = (side[1 - a] | out) - in;
    const int next = inner_edges(g, side[0]) + inner_edges(g, side[1]);
    ok = ok && next == *s.score && next >= score + 2;
    score = next;
  }
  return ok && side[0] == p.first && side[1] == p.second && p.score == score &&
         find_hamilton_path(g, p.first) && find_hamilton_path(g, p.second);
}

Outcome lemma_properties() {
  std::mt19937 rng(20240601);
  long close_fail = 0;
  long absorb_fail = 0;
  long partition_fail = 0;
  long exchange_steps = 0;

  // (a) Hamilton path 0..n-1 in random order, ends pushed to d(u) + d(v) >= n
  for (int i = 0; i < 10000; ++i) {
    const int n = 4 + i % 20;
    Graph g = random_graph(rng, n, 0.3);
    std::vector<Vertex> order(n);
    for (int k = 0; k < n; ++k) order[k] = k;
    std::shuffle(order.begin(), order.end(), rng);
    for (int k = 0; k + 1 < n; ++k) g.add_edge(order[k], order[k + 1]);
    const Vertex u = order.front();
    const Vertex v = order.back();
    std::uniform_int_distribution<Vertex> pick(0, n - 1);
    while (!g.adjacent(u, v) && g.degree(u) + g.degree(v) < n) {
      const Vertex w = pick(rng);
      const Vertex end = i % 2 ? u : v;
      if (w != end) g.add_edge(end, w);
    }
    try {
      const Cycle c = close_path_ore(g, Path{order});
      if (c.size() != n || !is_cycle(g, c)) ++close_fail;
    } catch (const ContractError&) {
      ++close_fail;
    }
  }

  // (b) path of length k plus u, v with at least k + 2 attachments
  for (int i = 0; i < 10000; ++i) {
    const int k = 1 + i % 15;
    const int n = k + 3;
    Graph g = random_graph(rng, n, 0.15);
    const Vertex u = k + 1;
    const Vertex v = k + 2;
    for (Vertex x = 0; x < k; ++x) g.add_edge(x, x + 1);
    std::uniform_int_distribution<Vertex> on_path(0, k);
    std::bernoulli_distribution first(0.5 + 0.1 * (i % 4));
    while (cross_edges(g, VertexSet{u, v}, VertexSet::range(k + 1)) < k + 2)
      g.add_edge(first(rng) ? u : v, on_path(rng));
    Path p;
    for (Vertex x = 0; x <= k; ++x) p.verts.push_back(x);
    try {
      const Path out = absorb_pair(g, p, u, v);
      if (out.size() != n || out.vertex_set() != g.vertices() || !is_path(g, out)) ++absorb_fail;
    } catch (const ContractError&) {
      ++absorb_fail;
    }
  }

  // (c) replay exchange traces, on random graphs and on graphs known to need exchanges
  const std::pair<const char*, int> known[] = {
      {R"(O^T{iZjX[Dfze}uBtxNEr)", 6}, {R"(LmL^j^Ql}x|fy[)", 5},   {R"(J^qJjyNvL^_)", 5},
      {R"(K[n]y]tYZb}R)", 5},          {R"(JL]~]urz]j?)", 5},      {R"(MVpzmaNxK^NMyuMv?)", 6},
      {R"(OZ~K|ki]UJx|X{u[QfxtV)", 5}, {R"(OZljvNOuzZFJb}pXr{k|Y)", 5}, {R"(KzVxziig{v|M)", 6},
      {R"(OptlndWwzR]kluBmrvjxY)", 8}, {R"(OJX~vY\{ljUDrdon`^k}L)", 7}, {R"(KYSv{f|jvYzh)", 6}};
  for (int i = 0; i < 1000; ++i) {
    const int n = 10 + i % 7;
    Graph g = i % 2 ? random_graph(rng, n, 0.25) : minimal_qualified(rng, n);
    std::uniform_int_distribution<Vertex> pick(0, n - 1);
    while (!ore_condition(g, 2)) {
      const Vertex a = pick(rng);
      const Vertex b = pick(rng);
      if (a != b) g.add_edge(a, b);
    }
    if (!replay_partition(g, 5 + i % (n - 9), exchange_steps)) ++partition_fail;
  }
  for (const auto& [text, n1] : known)
    if (!replay_partition(parse_graph6(text), n1, exchange_steps)) ++partition_fail;

  Outcome o;
  o.pass = close_fail == 0 && absorb_fail == 0 && partition_fail == 0;
  o.detail = "close_path_ore " + std::to_string(close_fail) + "/10000 failed, absorb_pair " +
             std::to_string(absorb_fail) + "/10000 failed, partitions " +
             std::to_string(partition_fail) + "/1012 failed (" + std::to_string(exchange_steps) +
             " exchange steps replayed)";
  return o;
}

Outcome proof_only_coverage(const TheoremRuns& t) {
  long qualified = 0;
  long proof_only = 0;
  for (const Report& r : t.reports) {
    if (r.corpus == "fixtures n=9") continue;
    qualified += r.qualified;
    proof_only += r.proof_only_solved;
  }
  {
    std::ifstream in(fixture_path(6));
    Graph6Source source(in, "fixtures n=6");
    const Report r = verify_stream(source, VerifyMode::theorem15);
    qualified += r.qualified;
    proof_only += r.proof_only_solved;
  }
  {
    std::ifstream in(fixture_path(7));
    Graph6Source source(in, "fixtures n=7");
    const Report r = verify_stream(source, VerifyMode::theorem15);
    qualified += r.qualified;
    proof_only += r.proof_only_solved;
  }
  const double fraction = qualified ? static_cast<double>(proof_only) / qualified : 0.0;
  Outcome o;
  o.pass = qualified > 0 && fraction == kPinnedProofOnlyFraction;
  char buf[160];
  std::snprintf(buf, sizeof buf, "%ld/%ld instances without fallback, fraction %.6f (pinned %.6f)",
                proof_only, qualified, fraction, kPinnedProofOnlyFraction);
  o.detail = buf;
  return o;
}

// Header byte n + 63, then the upper triangle column by column, six bits per
// byte, high bit first.
Graph reference_decode(const std::string& s) {
  const int n = s[0] - 63;
  Graph g(n);
  std::vector<int> bits;
  for (std::size_t i = 1; i < s.size(); ++i)
    for (int b = 5; b >= 0; --b) bits.push_back(((s[i] - 63) >> b) & 1);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if (bits.at(k++)) g.add_edge(i, j);
  return g;
}

Outcome graph6_codec() {
  long failures = 0;
  for (int n = 1; n <= 5; ++n) {
    const int pairs = n * (n - 1) / 2;
    for (std::uint32_t mask = 0; mask < (1U << pairs); ++mask) {
      Graph g(n);
      int bit = 0;
      for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v, ++bit)
          if ((mask >> bit) & 1U) g.add_edge(u, v);
      const std::string s = encode_graph6(g);
      if (parse_graph6(s) != g || encode_graph6(parse_graph6(s)) != s || reference_decode(s) != g)
        ++failures;
    }
  }
  std::mt19937 rng(8);
  for (int i = 0; i < 10000; ++i) {
    const Graph g = random_graph(rng, 1 + i % 12, 0.5);
    const std::string s = encode_graph6(g);
    if (parse_graph6(s) != g || encode_graph6(parse_graph6(s)) != s || reference_decode(s) != g)
      ++failures;
  }
  std::ostringstream d;
  const std::pair<int, long> expected[] = {{6, 156}, {7, 1044}, {8, 12346}, {9, 274668}};
  bool counts = true;
  for (auto [n, lines] : expected) {
    std::ifstream in(fixture_path(n));
    std::string line;
    long count = 0;
    while (std::getline(in, line)) {
      ++count;
      const Graph g = parse_graph6(line);
      if (g.order() != n || g != reference_decode(line) || encode_graph6(g) != line) ++failures;
    }
    counts = counts && count == lines;
    d << "n=" << n << ": " << count << " lines; ";
  }
  Outcome o;
  o.pass = failures == 0 && counts;
  d << failures << " codec failures";
  o.detail = d.str();
  return o;
}

}  // namespace

int main() {
  bool all = true;
  auto report = [&](int id, const char* name, const std::function<Outcome()>& check) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    all = all && o.pass;
    std::printf("%s %d %s: %s [%.1f s]\n", o.pass ? "PASS" : "FAIL", id, name, o.detail.c_str(), secs);
    std::fflush(stdout);
  };

  TheoremRuns runs;
  report(1, "theorem exhaustive", [&] {
    runs = theorem_runs();
    return theorem_exhaustive(runs);
  });
  report(2, "oracle equivalence", [&] { return oracle_equivalence(runs); });
  report(3, "sharpness", sharpness);
  report(4, "Ore/Bondy", ore_bondy);
  report(5, "structure classifier", classifier);
  report(6, "lemma properties", lemma_properties);
  report(7, "proof-only coverage", [&] { return proof_only_coverage(runs); });
  report(8, "graph6 codec", graph6_codec);
  return all ? 0 : 1;
}
