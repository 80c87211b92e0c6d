#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "edgedepth/criteria.hpp"
#include "edgedepth/depth.hpp"
#include "edgedepth/serialize.hpp"

namespace edgedepth {

inline constexpr const char* kSchema = "edge-depth/1";

struct AnalyzeOptions {
  /// 0 selects default_t_max.
  int t_max = 0;
  bool with_oracle = false;
  std::uint32_t prime = kDefaultPrime;
};

/// s(Gamma) + 2 when s is defined, otherwise 4.
int default_t_max(DepthEngine& engine);
int resolve_t_max(DepthEngine& engine, const AnalyzeOptions& opt);

/// phi*, mu*, s, diameters, maximal independent sets, odd-cycle summary.
Json invariants_json(DepthEngine& engine);
/// Graph, invariants, ordinary and symbolic profile, and every theorem check.
Json analyze(const Graph& g, const AnalyzeOptions& opt);
Json profile_entry(const Graph& g, const AnalyzeOptions& opt);
Json check_entry(const Graph& g, const AnalyzeOptions& opt);
Json invariants_entry(const Graph& g);

/// Wraps per-graph entries as {"schema", "kind", "parameters", "results"}.
Json document(const std::string& kind, Json parameters, Json results);

std::string profile_tsv_header();
/// One row per t of a profile entry.
std::string profile_tsv_rows(std::size_t index, const Json& entry);

struct Counterexample {
  Graph graph;
  int t = 0;
  Json evidence;
};

struct ConjectureReport {
  /// "H1_PERSISTENCE" or "DEPTH1_PLUS3_ZERO".
  std::string id;
  int graphs_scanned = 0;
  int t_max = 0;
  /// Pairs (graph, t) where the premise held.
  int premises = 0;
  std::vector<Counterexample> counterexamples;

  bool found() const { return !counterexamples.empty(); }
  /// "NO_COUNTEREXAMPLE" or "COUNTEREXAMPLE_FOUND".
  std::string status() const;
};

/// H1_PERSISTENCE over connected graphs for t < t_max and
/// DEPTH1_PLUS3_ZERO over connected non-bipartite graphs for t <= t_max.
/// Results do not depend on jobs.
std::vector<ConjectureReport> run_conjecture_search(const std::vector<Graph>& catalog, int t_max,
                                                    int jobs = 1);
Json to_json(const ConjectureReport& r);

struct VerifyResult {
  int checked = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// Replays every witness in a document produced by this library using only
/// generators, membership tables, generic degree complexes and a fresh ear
/// solver.
VerifyResult verify_report(const Json& doc);

}  // namespace edgedepth
