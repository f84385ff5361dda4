#include "twocycles/solver.hpp"

#include <algorithm>
#include <array>
#include <iostream>
#include <utility>

#include "twocycles/graph6.hpp"
#include "twocycles/structure.hpp"

#include <json.hpp>

namespace twocycles {

namespace {

constexpr std::array<std::pair<ProofStep, std::string_view>, 13> kLabels{{
    {ProofStep::prop1_case1, "Prop1.C1"},
    {ProofStep::prop1_case2, "Prop1.C2"},
    {ProofStep::prop1_case3, "Prop1.C3"},
    {ProofStep::lemma25, "L2.5"},
    {ProofStep::lemma26, "L2.6"},
    {ProofStep::prop2, "Prop2"},
    {ProofStep::prop3, "Prop3"},
    {ProofStep::claim1_case1, "Claim1.C1"},
    {ProofStep::claim1_case2, "Claim1.C2"},
    {ProofStep::claim2, "Claim2"},
    {ProofStep::claim2_1, "Claim2.1"},
    {ProofStep::claim3, "Claim3"},
    {ProofStep::fallback, "Fallback"},
}};

CyclePairCert in_order(CyclePairCert c, int n1) {
  if (c.first.size() != n1) std::swap(c.first, c.second);
  return c;
}

}  // namespace

std::string_view label(ProofStep s) {
  for (const auto& [step, text] : kLabels)
    if (step == s) return text;
  return "?";
}

std::optional<ProofStep> parse_label(std::string_view text) {
  for (const auto& [step, t] : kLabels)
    if (t == text) return step;
  return std::nullopt;
}

void SolveTrace::add(ProofStep s, std::vector<Vertex> vertices, std::string note) {
  steps.push_back(TraceStep{s, std::move(vertices), false, std::nullopt, std::move(note)});
}

bool SolveTrace::contains(ProofStep s) const {
  return std::any_of(steps.begin(), steps.end(), [s](const TraceStep& t) { return t.step == s; });
}

bool SolveTrace::used_exact_search() const {
  return std::any_of(steps.begin(), steps.end(), [](const TraceStep& t) { return t.fallback; });
}

std::string SolveTrace::to_json() const {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& s : steps) {
    nlohmann::json item{{"step", label(s.step)}, {"vertices", s.vertices}};
    if (s.fallback) item["fallback"] = true;
    if (s.score) item["score"] = *s.score;
    if (!s.note.empty()) item["note"] = s.note;
    out.push_back(std::move(item));
  }
  return out.dump();
}

std::string_view to_string(Strategy s) {
  switch (s) {
    case Strategy::proof_first: return "proof_first";
    case Strategy::oracle_only: return "oracle_only";
    case Strategy::proof_only: return "proof_only";
  }
  return "?";
}

std::optional<Strategy> parse_strategy(std::string_view text) {
  for (Strategy s : {Strategy::proof_first, Strategy::oracle_only, Strategy::proof_only})
    if (to_string(s) == text) return s;
  return std::nullopt;
}

namespace {

CyclePairCert run_pipeline(const Graph& g, int n1, int n2, SolveTrace& trace) {
  const int small = std::min(n1, n2);
  CyclePairCert cert;
  if (small <= 4) {
    cert = prop1_small(g, small, trace);
  } else {
    DecomposeOutcome out = lemma26_decompose(g, n1, n2, trace);
    if (auto* done = std::get_if<CyclePairCert>(&out)) {
      cert = std::move(*done);
    } else {
      cert = solve_from_decomposition(g, std::get<Decomposition>(out), trace);
    }
  }
  cert = in_order(std::move(cert), n1);
  if (!validate_cert(g, cert, n1, n2) || cert.first.size() != n1)
    throw ProofContractError("pipeline produced an invalid pair", trace, encode_graph6(g));
  return cert;
}

}  // namespace

SolveResult find_disjoint_cycles(const Graph& g, int n1, int n2, Strategy strategy) {
  if (n1 < 3 || n2 < 3 || n1 + n2 != g.order())
    throw InputError("find_disjoint_cycles: need n1, n2 >= 3 and n1 + n2 = n");
  SolveResult result;
  auto oracle = [&] {
    result.trace.add(ProofStep::fallback);
    result.cert = brute_force_oracle(g, n1, n2);
  };

  if (strategy == Strategy::oracle_only) {
    oracle();
    return result;
  }
  if (!ore_condition(g, 2)) {
    if (strategy == Strategy::proof_first) oracle();
    return result;
  }
  try {
    result.cert = run_pipeline(g, n1, n2, result.trace);
  } catch (const ContractError& e) {
    if (strategy == Strategy::proof_only) throw;
    result.contract_error = e.what();
    std::cerr << "contract error: " << e.what() << " graph " << encode_graph6(g) << '\n';
    result.cert.reset();
    oracle();
  }
  return result;
}

std::string cert_to_json(const CyclePairCert& c) {
  nlohmann::json out{{"first", c.first.vertices()}, {"second", c.second.vertices()}};
  return out.dump();
}

}  // namespace twocycles
