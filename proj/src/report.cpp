#include <sstream>

#include <json.hpp>

#include "twocycles/harness.hpp"

namespace twocycles {

std::string_view to_string(VerifyMode m) {
  switch (m) {
    case VerifyMode::theorem15: return "theorem15";
    case VerifyMode::elzahar: return "elzahar";
    case VerifyMode::ore_bondy: return "ore_bondy";
    case VerifyMode::lemma27: return "lemma27";
    case VerifyMode::probe: return "probe";
  }
  return "?";
}

std::optional<VerifyMode> parse_mode(std::string_view text) {
  for (VerifyMode m : {VerifyMode::theorem15, VerifyMode::elzahar, VerifyMode::ore_bondy,
                       VerifyMode::lemma27, VerifyMode::probe})
    if (to_string(m) == text) return m;
  return std::nullopt;
}

void Report::merge(const Report& o) {
  graphs += o.graphs;
  parse_errors += o.parse_errors;
  qualified_graphs += o.qualified_graphs;
  instances += o.instances;
  qualified += o.qualified;
  solved += o.solved;
  unsolved += o.unsolved;
  skipped += o.skipped;
  fallback_used += o.fallback_used;
  exact_search_used += o.exact_search_used;
  contract_errors += o.contract_errors;
  oracle_mismatches += o.oracle_mismatches;
  proof_only_solved += o.proof_only_solved;
  violations += o.violations;
  findings += o.findings;
  for (const auto& [split, c] : o.per_split) {
    SplitCounts& mine = per_split[split];
    mine.instances += c.instances;
    mine.solved += c.solved;
    mine.fallback_used += c.fallback_used;
    mine.proof_only_solved += c.proof_only_solved;
  }
  failures.insert(failures.end(), o.failures.begin(), o.failures.end());
}

bool Report::passed() const {
  if (mode == VerifyMode::probe) return violations == 0;
  return unsolved == 0 && contract_errors == 0 && oracle_mismatches == 0 && violations == 0;
}

bool Report::consistent() const { return solved + unsolved + skipped == qualified; }

bool Report::same_outcome(const Report& o) const {
  return corpus == o.corpus && mode == o.mode && graphs == o.graphs &&
         parse_errors == o.parse_errors && qualified_graphs == o.qualified_graphs &&
         instances == o.instances && qualified == o.qualified && solved == o.solved &&
         unsolved == o.unsolved && skipped == o.skipped && fallback_used == o.fallback_used &&
         exact_search_used == o.exact_search_used && contract_errors == o.contract_errors &&
         oracle_mismatches == o.oracle_mismatches && proof_only_solved == o.proof_only_solved &&
         violations == o.violations && findings == o.findings && per_split == o.per_split &&
         failures == o.failures;
}

std::string Report::summary_json() const {
  nlohmann::json splits = nlohmann::json::object();
  for (const auto& [split, c] : per_split) {
    splits[std::to_string(split.first) + "," + std::to_string(split.second)] = {
        {"instances", c.instances},
        {"solved", c.solved},
        {"fallback_used", c.fallback_used},
        {"proof_only_solved", c.proof_only_solved}};
  }
  nlohmann::json out{{"type", "summary"},
                     {"corpus", corpus},
                     {"mode", to_string(mode)},
                     {"graphs", graphs},
                     {"parse_errors", parse_errors},
                     {"qualified_graphs", qualified_graphs},
                     {"instances", instances},
                     {"qualified", qualified},
                     {"solved", solved},
                     {"unsolved", unsolved},
                     {"skipped", skipped},
                     {"fallback_used", fallback_used},
                     {"exact_search_used", exact_search_used},
                     {"contract_errors", contract_errors},
                     {"oracle_mismatches", oracle_mismatches},
                     {"proof_only_solved", proof_only_solved},
                     {"violations", violations},
                     {"findings", findings},
                     {"per_split", splits},
                     {"passed", passed()},
                     {"wall_seconds", wall_seconds},
                     {"workers", workers}};
  return out.dump();
}

std::string Report::to_json_lines() const {
  std::ostringstream out;
  out << summary_json() << '\n';
  for (const auto& f : failures) {
    nlohmann::json item{{"type", f.kind}, {"graph6", f.graph6}, {"line", f.line}};
    if (f.n1) item["n1"] = f.n1;
    if (f.n2) item["n2"] = f.n2;
    if (!f.detail.empty()) item["detail"] = f.detail;
    out << item.dump() << '\n';
  }
  return out.str();
}

}  // namespace twocycles
