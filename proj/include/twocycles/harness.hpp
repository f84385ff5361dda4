#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "twocycles/graph.hpp"

namespace twocycles {

// ---------------------------------------------------------------------------
// Sources

/// Every labeled graph on n vertices (3 <= n <= 8) with sigma2 >= threshold
/// (absent sigma2 passes), in increasing order of the edge mask where bit i
/// is the i-th pair of (0,1), (0,2), ..., (n-2,n-1).
class LabeledEnumerator {
 public:
  explicit LabeledEnumerator(int n, std::optional<int> sigma2_min = std::nullopt);

  std::optional<Graph> next();
  int order() const { return n_; }

 private:
  int n_;
  std::optional<int> threshold_;
  std::vector<Edge> pairs_;
  std::uint64_t mask_ = 0;
  std::uint64_t end_ = 0;
};

/// One record of a graph stream: a graph, or the diagnostic for a line that
/// failed to parse.
struct SourceItem {
  std::optional<Graph> graph;
  std::string text;  // graph6 of the record (the raw line for bad records)
  long line = 0;
  std::string error;
};

class GraphSource {
 public:
  virtual ~GraphSource() = default;
  /// Fills `out` with the next record; false at end of stream.
  virtual bool next(SourceItem& out) = 0;
  virtual std::string descriptor() const = 0;
};

/// graph6 lines; blank lines are skipped, bad lines become diagnostics.
class Graph6Source : public GraphSource {
 public:
  Graph6Source(std::istream& in, std::string descriptor);
  bool next(SourceItem& out) override;
  std::string descriptor() const override { return descriptor_; }

 private:
  std::istream& in_;
  std::string descriptor_;
  long line_ = 0;
};

class LabeledSource : public GraphSource {
 public:
  explicit LabeledSource(int n, std::optional<int> sigma2_min = std::nullopt);
  bool next(SourceItem& out) override;
  std::string descriptor() const override;

 private:
  LabeledEnumerator en_;
  long count_ = 0;
};

class VectorSource : public GraphSource {
 public:
  VectorSource(std::vector<Graph> graphs, std::string descriptor);
  bool next(SourceItem& out) override;
  std::string descriptor() const override { return descriptor_; }

 private:
  std::vector<Graph> graphs_;
  std::string descriptor_;
  std::size_t pos_ = 0;
};

// ---------------------------------------------------------------------------
// Reports

enum class VerifyMode { theorem15, elzahar, ore_bondy, lemma27, probe };

std::string_view to_string(VerifyMode m);
std::optional<VerifyMode> parse_mode(std::string_view text);

struct FailureRecord {
  std::string kind;  // parse, unsolved, invalid_cert, contract_error, oracle_mismatch, violation, finding
  std::string graph6;
  long line = 0;
  int n1 = 0;
  int n2 = 0;
  std::string detail;

  bool operator==(const FailureRecord&) const = default;
};

struct SplitCounts {
  long instances = 0;
  long solved = 0;
  long fallback_used = 0;
  long proof_only_solved = 0;

  bool operator==(const SplitCounts&) const = default;
};

struct Report {
  std::string corpus;
  VerifyMode mode = VerifyMode::theorem15;

  long graphs = 0;
  long parse_errors = 0;
  /// Graphs meeting the mode's degree condition.
  long qualified_graphs = 0;
  /// (graph, split) pairs examined; for the per-graph modes one per graph.
  long instances = 0;
  long qualified = 0;
  long solved = 0;
  long unsolved = 0;
  long skipped = 0;
  long fallback_used = 0;
  long exact_search_used = 0;
  long contract_errors = 0;
  long oracle_mismatches = 0;
  long proof_only_solved = 0;
  long violations = 0;
  long findings = 0;
  std::map<std::pair<int, int>, SplitCounts> per_split;
  std::vector<FailureRecord> failures;

  double wall_seconds = 0;
  int workers = 1;

  /// Adds the counts and failures of `o` (corpus, mode, timing untouched).
  void merge(const Report& o);
  /// No assertion failed. Parse errors and probe findings do not count.
  bool passed() const;
  /// solved + unsolved + skipped == qualified
  bool consistent() const;
  /// Equal apart from wall time and worker count.
  bool same_outcome(const Report& o) const;

  std::string summary_json() const;
  /// The summary line followed by one line per failure.
  std::string to_json_lines() const;
};

// ---------------------------------------------------------------------------
// Runs

struct VerifyOptions {
  int workers = 1;
  /// theorem15: also ask the oracle on every qualified instance.
  bool check_oracle = true;
};

/// Worker count after applying the TWOCYCLES_MAX_WORKERS cap (at least 1).
int effective_workers(int requested);

/// Chunks of 1024 records are handed to workers as they free up; chunk
/// reports are merged in stream order, so the outcome does not depend on the
/// worker count.
Report verify_stream(GraphSource& source, VerifyMode mode, const VerifyOptions& options = {});

/// Graphs with sigma2 = n + 1 and a split with an even length the oracle
/// cannot realise. Each such (graph, split) is a finding.
Report probe_open_question(GraphSource& source, int workers = 1);

}  // namespace twocycles
