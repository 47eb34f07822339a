#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "coverdepth/betti.hpp"
#include "coverdepth/graph.hpp"
#include "coverdepth/linalg.hpp"

namespace coverdepth {

enum class OutcomeStatus { passed, failed, skipped };

std::string to_string(OutcomeStatus status);

struct VerificationOutcome {
  std::string theorem_id;
  nlohmann::json instance;  // serialized inputs
  OutcomeStatus status = OutcomeStatus::passed;
  nlohmann::json details;   // expected and computed values; reason for skips

  bool passed() const { return status == OutcomeStatus::passed; }
  nlohmann::json to_json() const;
};

// Size limits and the coefficient field shared by every verifier.
struct LabSettings {
  FieldChoice field = FieldChoice::rationals();
  std::size_t hochster_guard = kDefaultHochsterGuard;
  std::size_t taylor_guard = kDefaultTaylorGuard;
};

// Memoizes depth(S/J(G)^(k)) by isomorphism class, k and field. Safe for
// concurrent use.
class DepthCache {
 public:
  DepthCache();
  ~DepthCache();
  DepthCache(const DepthCache&) = delete;
  DepthCache& operator=(const DepthCache&) = delete;

  // Throws like depth_symbolic_cover.
  int depth(const Graph& g, int k, const LabSettings& settings);

 private:
  struct State;
  std::unique_ptr<State> state_;
};

nlohmann::json graph_to_json(const Graph& g);
nlohmann::json partition_to_json(const CliquePartition& pi);

// Depth stabilization data for a graph without isolated vertices.
struct StabilityReport {
  Graph graph;
  int ord_match = 0;
  int largest_stable_s = 0;
  int threshold = 0;
  std::map<int, int> depths;
  int limit_depth = 0;
  // Least k in the computed window from which every computed depth equals
  // the limit; absent when the last computed depth differs from it.
  std::optional<int> sdstab_observed_upper;

  nlohmann::json to_json() const;
};

// 2t - 1 when s = 1, otherwise 2t - 2s + 2.
int stability_threshold(int t, int s);

// Computes depths for k = 1..k_max that fit under the guard.
StabilityReport stability_report(const Graph& g, int k_max, const LabSettings& settings,
                                 DepthCache* cache = nullptr);

// Every verifier throws InputError when its structural precondition fails
// and reports guard overflows as skipped outcomes.

// Depth equals n - t - 1 for k from the threshold to threshold + k_extra,
// and is at least n - t - 1 for every k from 1 to threshold + k_extra.
VerificationOutcome verify_main(const Graph& g, int k_extra, const LabSettings& settings,
                                DepthCache* cache = nullptr);

// The two-case depth formula for G^pi for k = 1..k_max, and ord-match(G^pi) = m
// with an m-ordered certificate.
VerificationOutcome verify_whisker(const Graph& g, const CliquePartition& pi, int k_max,
                                   const LabSettings& settings, DepthCache* cache = nullptr);

// reg(I(G_k)) = ind-match(G_k) + 1 = ord-match(G) + 1 at the threshold k and
// at threshold + 1 when it fits under the guard.
VerificationOutcome verify_regind(const Graph& g, const LabSettings& settings);

// reg(I(G)) <= ord-match(G) + 1.
VerificationOutcome verify_reg_upper(const Graph& g, const LabSettings& settings);

// reg(S/I(G)) >= ind-match(G).
VerificationOutcome verify_katzman(const Graph& g, const LabSettings& settings);

// J(G)^(k) = J(G)^k for k <= k_max, and depth(S/J(G)^k) = n - t - 1 for
// t <= k <= max(k_max, t).
VerificationOutcome verify_bipartite(const Graph& g, int k_max, const LabSettings& settings,
                                     DepthCache* cache = nullptr);

// Builds the proof matchings on G_k for k in [threshold, threshold + 2] and
// checks they are induced matchings of size t.
VerificationOutcome verify_proof_matchings(const Graph& g, const LabSettings& settings);

// The Hochster and Taylor Betti tables agree over Q and over F2; also flags
// any difference between the two fields.
VerificationOutcome verify_oracle(const MonomialIdeal& ideal, const std::string& origin,
                                  const LabSettings& settings);

// Polarization of J(G)^(k) equals J(G_k).
VerificationOutcome verify_polarization(const Graph& g, int k);

enum class Theorem { main, whisker, regind, regupper, katzman, bipartite, proofmatch, oracle, polarization };

std::string to_string(Theorem theorem);
// Throws InputError for unknown names.
Theorem theorem_from_string(const std::string& name);
// The sweep order used by run_corpus.
const std::vector<Theorem>& all_theorems();

struct CorpusConfig {
  int max_vertices = 5;
  // Whisker bases have at most this many vertices; defaults to
  // max_vertices - 1 when unset.
  std::optional<int> whisker_base_vertices;
  int k_max = 3;
  LabSettings settings;
  int jobs = 1;
  std::vector<Theorem> theorems = all_theorems();
  // Oracle ideals with more generators than this are left out of the corpus.
  std::size_t oracle_max_generators = 8;
};

// Runs every selected verifier over the corpus. Per-instance errors become
// outcomes; the order is independent of the job count.
std::vector<VerificationOutcome> run_corpus(const CorpusConfig& config);

// Runs one verifier on a single user-supplied graph (every clique partition
// for whisker, every derived ideal for oracle). Precondition violations
// propagate as InputError instead of becoming outcomes.
std::vector<VerificationOutcome> verify_graph(Theorem theorem, const Graph& g, const CorpusConfig& config);

// Counts by status.
struct OutcomeSummary {
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t skipped = 0;
};

OutcomeSummary summarize(const std::vector<VerificationOutcome>& outcomes);

// Reports: a JSON array of outcomes, a CSV summary and a plain-text listing.
std::string report_json(const std::vector<VerificationOutcome>& outcomes);
std::string report_csv(const std::vector<VerificationOutcome>& outcomes);
std::string report_text(const std::vector<VerificationOutcome>& outcomes);

// FNV-1a of the instance's compact JSON, as 16 hex digits.
std::string instance_hash(const nlohmann::json& instance);

}  // namespace coverdepth
