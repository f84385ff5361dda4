#include "twocycles/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <istream>
#include <mutex>
#include <thread>

#include "twocycles/graph6.hpp"
#include "twocycles/hamilton.hpp"
#include "twocycles/solver.hpp"
#include "twocycles/structure.hpp"

namespace twocycles {

namespace {

constexpr std::size_t kChunkSize = 1024;

}  // namespace

// ---------------------------------------------------------------------------
// Sources

LabeledEnumerator::LabeledEnumerator(int n, std::optional<int> sigma2_min)
    : n_(n), threshold_(sigma2_min) {
  if (n < 3 || n > 8)
    throw InputError("labeled enumeration needs 3 <= n <= 8; use a graph6 stream for larger orders");
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) pairs_.emplace_back(u, v);
  end_ = std::uint64_t{1} << pairs_.size();
}

std::optional<Graph> LabeledEnumerator::next() {
  while (mask_ < end_) {
    Graph g(n_);
    for (std::size_t i = 0; i < pairs_.size(); ++i)
      if ((mask_ >> i) & 1U) g.add_edge(pairs_[i].first, pairs_[i].second);
    ++mask_;
    if (!threshold_ || sigma2_at_least(sigma2(g), *threshold_)) return g;
  }
  return std::nullopt;
}

Graph6Source::Graph6Source(std::istream& in, std::string descriptor)
    : in_(in), descriptor_(std::move(descriptor)) {}

bool Graph6Source::next(SourceItem& out) {
  std::string text;
  while (std::getline(in_, text)) {
    ++line_;
    if (!text.empty() && text.back() == '\r') text.pop_back();
    if (text.empty()) continue;
    out = SourceItem{};
    out.line = line_;
    out.text = text;
    try {
      out.graph = parse_graph6(text);
    } catch (const InputError& e) {
      out.error = e.what();
    }
    return true;
  }
  return false;
}

LabeledSource::LabeledSource(int n, std::optional<int> sigma2_min) : en_(n, sigma2_min) {}

bool LabeledSource::next(SourceItem& out) {
  auto g = en_.next();
  if (!g) return false;
  out = SourceItem{};
  out.line = ++count_;
  out.text = encode_graph6(*g);
  out.graph = std::move(g);
  return true;
}

std::string LabeledSource::descriptor() const {
  return "labeled n=" + std::to_string(en_.order());
}

VectorSource::VectorSource(std::vector<Graph> graphs, std::string descriptor)
    : graphs_(std::move(graphs)), descriptor_(std::move(descriptor)) {}

bool VectorSource::next(SourceItem& out) {
  if (pos_ >= graphs_.size()) return false;
  out = SourceItem{};
  out.line = static_cast<long>(pos_ + 1);
  out.graph = graphs_[pos_++];
  out.text = encode_graph6(*out.graph);
  return true;
}

// ---------------------------------------------------------------------------
// Per-graph checks

namespace {

struct Checker {
  VerifyMode mode;
  VerifyOptions options;

  void run(const SourceItem& item, Report& r) const {
    if (!item.graph) {
      ++r.parse_errors;
      r.failures.push_back({"parse", item.text, item.line, 0, 0, item.error});
      return;
    }
    ++r.graphs;
    const Graph& g = *item.graph;
    switch (mode) {
      case VerifyMode::theorem15: theorem15(g, item, r); break;
      case VerifyMode::elzahar: elzahar(g, item, r); break;
      case VerifyMode::ore_bondy: ore_bondy(g, item, r); break;
      case VerifyMode::lemma27: lemma27(g, item, r); break;
      case VerifyMode::probe: probe(g, item, r); break;
    }
  }

  static void fail(Report& r, const char* kind, const SourceItem& item, int n1, int n2,
                   std::string detail = {}) {
    r.failures.push_back({kind, item.text, item.line, n1, n2, std::move(detail)});
  }

  // Splits with 3 <= n1 <= n2.
  template <class F>
  static void for_each_split(int n, F&& f) {
    for (int n1 = 3; 2 * n1 <= n; ++n1) f(n1, n - n1);
  }

  void solve_instance(const Graph& g, const SourceItem& item, int n1, int n2, Report& r) const {
    SplitCounts& split = r.per_split[{n1, n2}];
    ++r.qualified;
    SolveResult res = find_disjoint_cycles(g, n1, n2, Strategy::proof_first);
    const bool fallback = res.trace.used_fallback();
    if (fallback) {
      ++r.fallback_used;
      ++split.fallback_used;
    }
    if (res.trace.used_exact_search()) ++r.exact_search_used;
    if (res.contract_error) {
      ++r.contract_errors;
      fail(r, "contract_error", item, n1, n2, *res.contract_error);
    }
    if (res.cert && validate_cert(g, *res.cert, n1, n2)) {
      ++r.solved;
      ++split.solved;
      if (!fallback) {
        ++r.proof_only_solved;
        ++split.proof_only_solved;
      }
    } else {
      ++r.unsolved;
      fail(r, res.cert ? "invalid_cert" : "unsolved", item, n1, n2);
    }
    if (options.check_oracle && mode == VerifyMode::theorem15) {
      const bool oracle = brute_force_oracle(g, n1, n2).has_value();
      if (oracle != res.cert.has_value()) {
        ++r.oracle_mismatches;
        fail(r, "oracle_mismatch", item, n1, n2);
      }
    }
  }

  void theorem15(const Graph& g, const SourceItem& item, Report& r) const {
    const bool qualified = ore_condition(g, 2);
    if (qualified) ++r.qualified_graphs;
    for_each_split(g.order(), [&](int n1, int n2) {
      ++r.instances;
      ++r.per_split[{n1, n2}].instances;
      if (qualified) solve_instance(g, item, n1, n2, r);
    });
  }

  void elzahar(const Graph& g, const SourceItem& item, Report& r) const {
    bool any = false;
    for_each_split(g.order(), [&](int n1, int n2) {
      ++r.instances;
      ++r.per_split[{n1, n2}].instances;
      if (!elzahar_condition(g, n1, n2)) return;
      any = true;
      solve_instance(g, item, n1, n2, r);
    });
    if (any) ++r.qualified_graphs;
  }

  void ore_bondy(const Graph& g, const SourceItem& item, Report& r) const {
    ++r.instances;
    if (!ore_condition(g, 0)) return;
    ++r.qualified_graphs;
    ++r.qualified;
    const int n = g.order();
    bool pancyclic = true;
    for (int k = 3; k <= n && pancyclic; ++k) pancyclic = find_cycle_of_length(g, k).has_value();
    if (pancyclic || is_balanced_complete_bipartite(g)) {
      ++r.solved;
      return;
    }
    ++r.unsolved;
    ++r.violations;
    fail(r, "violation", item, 0, 0, "neither pancyclic nor K_{n/2,n/2}");
  }

  void lemma27(const Graph& g, const SourceItem& item, Report& r) const {
    ++r.instances;
    const int n = g.order();
    if (!sigma2_at_least(sigma2(g), n - 1)) return;
    ++r.qualified_graphs;
    ++r.qualified;
    std::string problem;
    try {
      const StructureClass s = classify_near_hamiltonian(g);
      if (!verify_structure(g, s)) {
        problem = "witness does not verify";
      } else if (n <= 16) {
        const auto brute = classify_brute_force(g);
        if (!brute || *brute != kind_of(s))
          problem = std::string("classifier says ") + std::string(to_string(kind_of(s))) +
                    ", reference says " + (brute ? std::string(to_string(*brute)) : "none");
      }
    } catch (const ContractError& e) {
      problem = e.what();
    }
    if (problem.empty()) {
      ++r.solved;
      return;
    }
    ++r.unsolved;
    ++r.violations;
    fail(r, "violation", item, 0, 0, problem);
  }

  void probe(const Graph& g, const SourceItem& item, Report& r) const {
    const int n = g.order();
    const auto s = sigma2(g);
    const bool qualified = s && *s == n + 1;
    if (qualified) ++r.qualified_graphs;
    for_each_split(n, [&](int n1, int n2) {
      if (n1 % 2 != 0 && n2 % 2 != 0) return;
      ++r.instances;
      SplitCounts& split = r.per_split[{n1, n2}];
      ++split.instances;
      if (!qualified) return;
      ++r.qualified;
      if (brute_force_oracle(g, n1, n2)) {
        ++r.solved;
        ++split.solved;
        return;
      }
      ++r.unsolved;
      ++r.findings;
      fail(r, "finding", item, n1, n2, "no disjoint pair at sigma2 = n + 1");
    });
  }
};

Report run_chunks(GraphSource& source, const Checker& checker, int requested_workers) {
  const auto start = std::chrono::steady_clock::now();
  const int workers = effective_workers(requested_workers);

  std::mutex lock;
  bool exhausted = false;
  std::vector<Report> partial;

  auto worker = [&] {
    for (;;) {
      std::vector<SourceItem> chunk;
      std::size_t index = 0;
      {
        std::lock_guard guard(lock);
        if (exhausted) return;
        SourceItem item;
        while (chunk.size() < kChunkSize && source.next(item)) chunk.push_back(std::move(item));
        if (chunk.size() < kChunkSize) exhausted = true;
        if (chunk.empty()) return;
        index = partial.size();
        partial.emplace_back();
      }
      Report local;
      for (const auto& item : chunk) checker.run(item, local);
      std::lock_guard guard(lock);
      partial[index] = std::move(local);
    }
  };

  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < workers; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  Report total;
  total.corpus = source.descriptor();
  total.mode = checker.mode;
  for (const auto& p : partial) total.merge(p);
  total.workers = workers;
  total.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return total;
}

}  // namespace

int effective_workers(int requested) {
  int n = std::max(1, requested);
  if (const char* cap = std::getenv("TWOCYCLES_MAX_WORKERS")) {
    char* end = nullptr;
    const long v = std::strtol(cap, &end, 10);
    if (end != cap && *end == '\0' && v >= 1) n = std::min<long>(n, v);
  }
  return n;
}

Report verify_stream(GraphSource& source, VerifyMode mode, const VerifyOptions& options) {
  return run_chunks(source, Checker{mode, options}, options.workers);
}

Report probe_open_question(GraphSource& source, int workers) {
  return run_chunks(source, Checker{VerifyMode::probe, {}}, workers);
}

}  // namespace twocycles
