#include "coverdepth/lab.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <mutex>
#include <thread>
#include <tuple>

#include "coverdepth/depth.hpp"
#include "coverdepth/errors.hpp"
#include "coverdepth/layered.hpp"
#include "coverdepth/text_io.hpp"

namespace coverdepth {

std::string to_string(OutcomeStatus status) {
  switch (status) {
    case OutcomeStatus::passed:
      return "passed";
    case OutcomeStatus::failed:
      return "failed";
    case OutcomeStatus::skipped:
      return "skipped";
  }
  return "unknown";
}

nlohmann::json VerificationOutcome::to_json() const {
  return {{"theorem_id", theorem_id}, {"instance", instance}, {"status", to_string(status)}, {"details", details}};
}

// ---------------------------------------------------------------------------

struct DepthCache::State {
  std::mutex mutex;
  std::map<std::tuple<int, std::uint64_t, int, std::string>, int> values;
};

DepthCache::DepthCache() : state_(std::make_unique<State>()) {}
DepthCache::~DepthCache() = default;

int DepthCache::depth(const Graph& g, int k, const LabSettings& settings) {
  constexpr int kMaxCanonicalVertices = 11;
  if (g.num_vertices() > kMaxCanonicalVertices) {
    return depth_symbolic_cover(g, k, settings.field, settings.hochster_guard);
  }
  const auto key = std::make_tuple(g.num_vertices(), canonical_code(g), k, settings.field.name());
  {
    std::lock_guard lock(state_->mutex);
    const auto it = state_->values.find(key);
    if (it != state_->values.end()) return it->second;
  }
  const int value = depth_symbolic_cover(g, k, settings.field, settings.hochster_guard);
  std::lock_guard lock(state_->mutex);
  state_->values.emplace(key, value);
  return value;
}

namespace {

int cached_depth(const Graph& g, int k, const LabSettings& settings, DepthCache* cache) {
  return cache ? cache->depth(g, k, settings) : depth_symbolic_cover(g, k, settings.field, settings.hochster_guard);
}

bool fits(const Graph& g, int k, const LabSettings& settings) {
  return static_cast<std::size_t>(g.num_vertices()) * static_cast<std::size_t>(k) <= settings.hochster_guard;
}

nlohmann::json pairs_json(const std::map<int, int>& values) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [k, v] : values) out.push_back({k, v});
  return out;
}

nlohmann::json matching_json(const Matching& m) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& p : m.pairs) out.push_back({p.a, p.b});
  return out;
}

nlohmann::json layered_matching_json(const LayeredMatching& m) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [u, v] : m) out.push_back({{u.base, u.layer}, {v.base, v.layer}});
  return out;
}

void require_no_isolated(const Graph& g, const char* verifier) {
  if (g.num_edges() == 0) throw_input(std::string(verifier) + " needs a graph with at least one edge");
  if (g.has_isolated_vertex()) throw_input(std::string(verifier) + " needs a graph without isolated vertices");
}

VerificationOutcome make_outcome(const std::string& id, nlohmann::json instance) {
  VerificationOutcome out;
  out.theorem_id = id;
  out.instance = std::move(instance);
  out.details = nlohmann::json::object();
  return out;
}

// A failure already recorded outranks a later guard skip.
void skip(VerificationOutcome& out, const std::string& reason) {
  if (out.status != OutcomeStatus::failed) out.status = OutcomeStatus::skipped;
  out.details["skip_reason"] = reason;
}

void fail(VerificationOutcome& out, nlohmann::json violation) {
  out.status = OutcomeStatus::failed;
  if (!out.details.contains("violations")) out.details["violations"] = nlohmann::json::array();
  out.details["violations"].push_back(std::move(violation));
}

std::string guard_reason(const Graph& g, int k, const LabSettings& settings) {
  return "n * k = " + std::to_string(g.num_vertices() * k) + " exceeds the Hochster guard " +
         std::to_string(settings.hochster_guard);
}

}  // namespace

nlohmann::json graph_to_json(const Graph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  return {{"n", g.num_vertices()}, {"edges", edges}};
}

nlohmann::json partition_to_json(const CliquePartition& pi) { return pi.blocks; }

// ---------------------------------------------------------------------------

int stability_threshold(int t, int s) { return s == 1 ? 2 * t - 1 : 2 * t - 2 * s + 2; }

nlohmann::json StabilityReport::to_json() const {
  nlohmann::json out = {{"graph", graph_to_json(graph)},
                        {"ord_match", ord_match},
                        {"largest_stable_s", largest_stable_s},
                        {"threshold", threshold},
                        {"depths", pairs_json(depths)},
                        {"limit_depth", limit_depth}};
  out["sdstab_observed_upper"] = sdstab_observed_upper ? nlohmann::json(*sdstab_observed_upper) : nlohmann::json();
  return out;
}

StabilityReport stability_report(const Graph& g, int k_max, const LabSettings& settings, DepthCache* cache) {
  require_no_isolated(g, "stability_report");
  StabilityReport r;
  r.graph = g;
  r.ord_match = ordered_matching_number(g).size;
  r.largest_stable_s = largest_stable_s(g);
  r.threshold = stability_threshold(r.ord_match, r.largest_stable_s);
  r.limit_depth = g.num_vertices() - r.ord_match - 1;
  for (int k = 1; k <= k_max && fits(g, k, settings); ++k) r.depths[k] = cached_depth(g, k, settings, cache);
  if (!r.depths.empty() && r.depths.rbegin()->second == r.limit_depth) {
    int from = r.depths.rbegin()->first;
    for (auto it = r.depths.rbegin(); it != r.depths.rend() && it->second == r.limit_depth; ++it) from = it->first;
    r.sdstab_observed_upper = from;
  }
  return r;
}

// ---------------------------------------------------------------------------

VerificationOutcome verify_main(const Graph& g, int k_extra, const LabSettings& settings, DepthCache* cache) {
  require_no_isolated(g, "verify_main");
  auto out = make_outcome("main", {{"graph", graph_to_json(g)}, {"k_extra", k_extra}, {"field", settings.field.name()}});
  const int n = g.num_vertices();
  const int t = ordered_matching_number(g).size;
  const int s = largest_stable_s(g);
  const int threshold = stability_threshold(t, s);
  const int limit = n - t - 1;
  out.details["ord_match"] = t;
  out.details["largest_stable_s"] = s;
  out.details["threshold"] = threshold;
  out.details["limit_depth"] = limit;
  std::map<int, int> depths;
  for (int k = 1; k <= threshold + k_extra; ++k) {
    if (!fits(g, k, settings)) {
      out.details["depths"] = pairs_json(depths);
      skip(out, guard_reason(g, k, settings));
      return out;
    }
    const int d = cached_depth(g, k, settings, cache);
    depths[k] = d;
    if (d < limit) fail(out, {{"k", k}, {"check", "depth >= n - t - 1"}, {"expected_at_least", limit}, {"computed", d}});
    if (k >= threshold && d != limit) {
      fail(out, {{"k", k}, {"check", "depth = n - t - 1"}, {"expected", limit}, {"computed", d}});
    }
  }
  out.details["depths"] = pairs_json(depths);
  return out;
}

VerificationOutcome verify_whisker(const Graph& g, const CliquePartition& pi, int k_max, const LabSettings& settings,
                                   DepthCache* cache) {
  validate_clique_partition(g, pi);
  auto out = make_outcome("whisker", {{"graph", graph_to_json(g)},
                                      {"partition", partition_to_json(pi)},
                                      {"k_max", k_max},
                                      {"field", settings.field.name()}});
  const Graph h = whisker(g, pi);
  const int n = g.num_vertices();
  const int m = static_cast<int>(pi.blocks.size());
  const int alpha = independence_number(g);
  out.details["whiskered"] = graph_to_json(h);
  out.details["m"] = m;
  out.details["alpha"] = alpha;

  const int t = ordered_matching_number(h).size;
  const Matching cert = search_ordered_matching(h, {m, false});
  const bool certified = static_cast<int>(cert.size()) == m && is_s_ordered_matching(h, cert, m);
  out.details["ord_match"] = t;
  out.details["certificate"] = matching_json(cert);
  if (t != m) fail(out, {{"check", "ord-match(G^pi) = m"}, {"expected", m}, {"computed", t}});
  if (!certified) fail(out, {{"check", "m-ordered certificate"}, {"expected", m}, {"computed", cert.size()}});

  std::map<int, int> depths;
  for (int k = 1; k <= k_max; ++k) {
    if (!fits(h, k, settings)) {
      out.details["depths"] = pairs_json(depths);
      skip(out, guard_reason(h, k, settings));
      return out;
    }
    const int expected = k == 1 ? n + m - alpha - 1 : n - 1;
    const int d = cached_depth(h, k, settings, cache);
    depths[k] = d;
    if (d != expected) fail(out, {{"k", k}, {"check", "whiskered depth formula"}, {"expected", expected}, {"computed", d}});
  }
  out.details["depths"] = pairs_json(depths);
  return out;
}

VerificationOutcome verify_regind(const Graph& g, const LabSettings& settings) {
  require_no_isolated(g, "verify_regind");
  auto out = make_outcome("regind", {{"graph", graph_to_json(g)}, {"field", settings.field.name()}});
  const int t = ordered_matching_number(g).size;
  const int s = largest_stable_s(g);
  const int threshold = stability_threshold(t, s);
  out.details["ord_match"] = t;
  out.details["threshold"] = threshold;
  nlohmann::json computed = nlohmann::json::array();
  for (int k = threshold; k <= threshold + 1; ++k) {
    if (!fits(g, k, settings)) {
      if (k == threshold) {
        skip(out, guard_reason(g, k, settings));
        return out;
      }
      out.details["not_computed"] = k;
      break;
    }
    const Graph gk = build_gk(g, k).as_graph();
    const int reg = reg_edge_ideal(gk, settings.field, settings.hochster_guard);
    const int ind = induced_matching_number(gk);
    computed.push_back({{"k", k}, {"reg", reg}, {"ind_match", ind}});
    if (reg != ind + 1 || reg != t + 1) {
      fail(out, {{"k", k}, {"check", "reg(I(G_k)) = ind-match(G_k) + 1 = ord-match(G) + 1"}, {"reg", reg},
                 {"ind_match", ind}, {"ord_match", t}});
    }
  }
  out.details["computed"] = computed;
  return out;
}

VerificationOutcome verify_reg_upper(const Graph& g, const LabSettings& settings) {
  if (g.num_edges() == 0) throw_input("verify_reg_upper needs a graph with at least one edge");
  auto out = make_outcome("regupper", {{"graph", graph_to_json(g)}, {"field", settings.field.name()}});
  if (static_cast<std::size_t>(g.num_vertices()) > settings.hochster_guard) {
    skip(out, "vertex count exceeds the Hochster guard");
    return out;
  }
  const int reg = reg_edge_ideal(g, settings.field, settings.hochster_guard);
  const int t = ordered_matching_number(g).size;
  out.details["reg"] = reg;
  out.details["ord_match"] = t;
  if (reg > t + 1) fail(out, {{"check", "reg(I(G)) <= ord-match(G) + 1"}, {"reg", reg}, {"bound", t + 1}});
  return out;
}

VerificationOutcome verify_katzman(const Graph& g, const LabSettings& settings) {
  if (g.num_edges() == 0) throw_input("verify_katzman needs a graph with at least one edge");
  auto out = make_outcome("katzman", {{"graph", graph_to_json(g)}, {"field", settings.field.name()}});
  if (static_cast<std::size_t>(g.num_vertices()) > settings.hochster_guard) {
    skip(out, "vertex count exceeds the Hochster guard");
    return out;
  }
  const int reg_quotient = reg_edge_ideal(g, settings.field, settings.hochster_guard) - 1;
  const int ind = induced_matching_number(g);
  out.details["reg_quotient"] = reg_quotient;
  out.details["ind_match"] = ind;
  if (reg_quotient < ind) fail(out, {{"check", "reg(S/I(G)) >= ind-match(G)"}, {"reg_quotient", reg_quotient}, {"ind_match", ind}});
  return out;
}

VerificationOutcome verify_bipartite(const Graph& g, int k_max, const LabSettings& settings, DepthCache* cache) {
  require_no_isolated(g, "verify_bipartite");
  if (!is_bipartite(g).bipartite) throw_input("verify_bipartite needs a bipartite graph");
  auto out = make_outcome("bipartite", {{"graph", graph_to_json(g)}, {"k_max", k_max}, {"field", settings.field.name()}});
  const int n = g.num_vertices();
  const int t = ordered_matching_number(g).size;
  const int limit = n - t - 1;
  out.details["ord_match"] = t;
  out.details["limit_depth"] = limit;
  const MonomialIdeal j = cover_ideal(g);
  std::map<int, bool> equal_powers;
  for (int k = 1; k <= k_max; ++k) {
    const bool same = equal(symbolic_power_cover(g, k), power(j, k));
    equal_powers[k] = same;
    if (!same) fail(out, {{"k", k}, {"check", "J(G)^(k) = J(G)^k"}});
  }
  nlohmann::json eq = nlohmann::json::array();
  for (const auto& [k, same] : equal_powers) eq.push_back({k, same});
  out.details["symbolic_equals_ordinary"] = eq;

  std::map<int, int> depths;
  for (int k = t; k <= std::max(k_max, t); ++k) {
    if (!fits(g, k, settings)) {
      out.details["depths"] = pairs_json(depths);
      skip(out, guard_reason(g, k, settings));
      return out;
    }
    int d = 0;
    const auto known = equal_powers.find(k);
    if (known != equal_powers.end() && known->second) {
      d = cached_depth(g, k, settings, cache);
    } else {
      d = pd_reg_depth(power(j, k), settings.field, settings.hochster_guard).depth;
    }
    depths[k] = d;
    if (d != limit) fail(out, {{"k", k}, {"check", "depth(S/J(G)^k) = n - t - 1"}, {"expected", limit}, {"computed", d}});
  }
  out.details["depths"] = pairs_json(depths);
  return out;
}

VerificationOutcome verify_proof_matchings(const Graph& g, const LabSettings& settings) {
  require_no_isolated(g, "verify_proof_matchings");
  auto out = make_outcome("proofmatch", {{"graph", graph_to_json(g)}, {"field", settings.field.name()}});
  const int n = g.num_vertices();
  const int t = ordered_matching_number(g).size;
  const int s = largest_stable_s(g);
  out.details["ord_match"] = t;
  out.details["largest_stable_s"] = s;
  nlohmann::json checks = nlohmann::json::array();
  nlohmann::json anomalies = nlohmann::json::array();

  auto check = [&](const char* construction, const Matching& cert, int k, const LayeredMatching& m) {
    const bool induced = is_induced_matching_layered(build_gk(g, k), m);
    const bool full = static_cast<int>(m.size()) == t;
    checks.push_back({{"construction", construction}, {"k", k}, {"certificate", matching_json(cert)},
                      {"matching", layered_matching_json(m)}, {"induced", induced}});
    if (!induced || !full) {
      fail(out, {{"construction", construction}, {"k", k}, {"check", "induced matching of size t in G_k"}});
    }
  };

  if (s >= 2) {
    const Matching cert = search_ordered_matching(g, {s, false});
    const int from = main_matching_threshold(t, s);
    for (int k = from; k <= from + 2 && n * k <= kMaxGraphVertices; ++k) {
      check("main", cert, k, proof_matching_main(g, cert, s, k));
    }
  }
  if (is_bipartite(g).bipartite) {
    if (const auto cert = find_independent_b_certificate(g)) {
      for (int k = t; k <= t + 2 && n * k <= kMaxGraphVertices; ++k) {
        check("bipartite", *cert, k, proof_matching_bipartite(g, *cert, k));
      }
    } else {
      anomalies.push_back("no maximum ordered matching with an independent b-side");
    }
  }
  out.details["checks"] = checks;
  out.details["anomalies"] = anomalies;
  if (out.status == OutcomeStatus::passed && checks.empty()) {
    skip(out, s < 2 ? "no construction applies: s = 1 and the graph is not bipartite" : "no admissible k");
  }
  return out;
}

VerificationOutcome verify_oracle(const MonomialIdeal& ideal, const std::string& origin, const LabSettings& settings) {
  nlohmann::json gens = nlohmann::json::array();
  for (const auto& m : ideal.generators()) gens.push_back(format_monomial(ideal.space(), m));
  auto out = make_outcome("oracle", {{"origin", origin}, {"num_vars", ideal.num_vars()}, {"generators", gens}});
  if (ideal.num_vars() > settings.hochster_guard) {
    skip(out, "variable count exceeds the Hochster guard");
    return out;
  }
  if (ideal.num_generators() > settings.taylor_guard) {
    skip(out, "generator count exceeds the Taylor guard");
    return out;
  }
  const FieldChoice q = FieldChoice::rationals();
  const FieldChoice f2 = FieldChoice::prime(2);
  const BettiTable hq = betti_table_squarefree(ideal, q, settings.hochster_guard);
  const BettiTable tq = taylor_betti_oracle(ideal, q, settings.taylor_guard);
  const BettiTable h2 = betti_table_squarefree(ideal, f2, settings.hochster_guard);
  const BettiTable t2 = taylor_betti_oracle(ideal, f2, settings.taylor_guard);
  out.details["betti"] = hq.to_json();
  out.details["field_disagreement"] = hq != h2;
  if (hq != h2) out.details["betti_f2"] = h2.to_json();
  if (hq != tq) fail(out, {{"field", "Q"}, {"hochster", hq.to_json()}, {"taylor", tq.to_json()}});
  if (h2 != t2) fail(out, {{"field", "F2"}, {"hochster", h2.to_json()}, {"taylor", t2.to_json()}});
  return out;
}

VerificationOutcome verify_polarization(const Graph& g, int k) {
  if (g.num_edges() == 0) throw_input("verify_polarization needs a graph with at least one edge");
  auto out = make_outcome("polarization", {{"graph", graph_to_json(g)}, {"k", k}});
  const PolarizationCheck check = polarization_identity(g, k);
  out.details["generators"] = check.cover.num_generators();
  if (!check.equal) {
    fail(out, {{"check", "(J(G)^(k))^pol = J(G_k)"}, {"polarized", format_ideal(check.polarized)},
               {"cover", format_ideal(check.cover)}});
  }
  return out;
}

// ---------------------------------------------------------------------------

std::string to_string(Theorem theorem) {
  switch (theorem) {
    case Theorem::main:
      return "main";
    case Theorem::whisker:
      return "whisker";
    case Theorem::regind:
      return "regind";
    case Theorem::regupper:
      return "regupper";
    case Theorem::katzman:
      return "katzman";
    case Theorem::bipartite:
      return "bipartite";
    case Theorem::proofmatch:
      return "proofmatch";
    case Theorem::oracle:
      return "oracle";
    case Theorem::polarization:
      return "polarization";
  }
  return "unknown";
}

const std::vector<Theorem>& all_theorems() {
  static const std::vector<Theorem> all = {Theorem::main,      Theorem::whisker,    Theorem::regind,
                                           Theorem::regupper,  Theorem::katzman,    Theorem::bipartite,
                                           Theorem::proofmatch, Theorem::oracle,    Theorem::polarization};
  return all;
}

Theorem theorem_from_string(const std::string& name) {
  for (Theorem t : all_theorems()) {
    if (to_string(t) == name) return t;
  }
  throw_input("unknown theorem '" + name + "'");
}

namespace {

struct Job {
  std::string id;
  nlohmann::json instance;
  std::function<VerificationOutcome()> run;
};

struct NamedIdeal {
  MonomialIdeal ideal;
  std::string origin;
};

std::string graph_label(const Graph& g) {
  std::string out = "n=" + std::to_string(g.num_vertices()) + " edges=";
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    out += (i ? "," : "") + std::to_string(g.edges()[i].first) + "-" + std::to_string(g.edges()[i].second);
  }
  return out;
}

// Squarefree ideals derived from g: I(G), J(G), and for 2 <= k <= k_max the
// polarized symbolic power and I(G_k).
std::vector<NamedIdeal> derived_ideals(const Graph& g, const CorpusConfig& config) {
  std::vector<NamedIdeal> out;
  const std::string label = graph_label(g);
  out.push_back({edge_ideal(g), "I(G) " + label});
  out.push_back({cover_ideal(g), "J(G) " + label});
  for (int k = 2; k <= config.k_max; ++k) {
    out.push_back({polarize(symbolic_power_cover(g, k)), "J(G)^(" + std::to_string(k) + ") polarized " + label});
    out.push_back({edge_ideal(build_gk(g, k).as_graph()), "I(G_" + std::to_string(k) + ") " + label});
  }
  std::erase_if(out, [&](const NamedIdeal& x) { return x.ideal.num_generators() > config.oracle_max_generators; });
  return out;
}

void add_jobs(Theorem theorem, const Graph& g, const CorpusConfig& config, DepthCache& cache, std::vector<Job>& jobs) {
  const LabSettings settings = config.settings;
  const std::string id = to_string(theorem);
  const nlohmann::json instance = {{"graph", graph_to_json(g)}};
  auto push = [&](std::function<VerificationOutcome()> run) { jobs.push_back({id, instance, std::move(run)}); };
  switch (theorem) {
    case Theorem::main:
      push([g, settings, &cache] { return verify_main(g, 1, settings, &cache); });
      break;
    case Theorem::whisker:
      for (const auto& pi : clique_partitions(g)) {
        push([g, pi, settings, &cache, k = config.k_max] { return verify_whisker(g, pi, k, settings, &cache); });
      }
      break;
    case Theorem::regind:
      push([g, settings] { return verify_regind(g, settings); });
      break;
    case Theorem::regupper:
      push([g, settings] { return verify_reg_upper(g, settings); });
      break;
    case Theorem::katzman:
      push([g, settings] { return verify_katzman(g, settings); });
      break;
    case Theorem::bipartite:
      push([g, settings, &cache, k = config.k_max] { return verify_bipartite(g, k, settings, &cache); });
      break;
    case Theorem::proofmatch:
      push([g, settings] { return verify_proof_matchings(g, settings); });
      break;
    case Theorem::oracle:
      for (auto& named : derived_ideals(g, config)) {
        push([named, settings] { return verify_oracle(named.ideal, named.origin, settings); });
      }
      break;
    case Theorem::polarization:
      for (int k = 1; k <= config.k_max; ++k) {
        push([g, k] { return verify_polarization(g, k); });
      }
      break;
  }
}

bool applies(Theorem theorem, const Graph& g) {
  switch (theorem) {
    case Theorem::whisker:
      return true;
    case Theorem::regupper:
    case Theorem::katzman:
      return g.num_edges() > 0;
    case Theorem::bipartite:
      return g.num_edges() > 0 && !g.has_isolated_vertex() && is_bipartite(g).bipartite;
    default:
      return g.num_edges() > 0 && !g.has_isolated_vertex();
  }
}

std::vector<VerificationOutcome> run_jobs(const std::vector<Job>& jobs, int workers) {
  std::vector<VerificationOutcome> results(jobs.size());
  auto run_one = [&](std::size_t i) {
    try {
      results[i] = jobs[i].run();
    } catch (const ResourceError& e) {
      results[i] = make_outcome(jobs[i].id, jobs[i].instance);
      skip(results[i], e.what());
    } catch (const std::exception& e) {
      results[i] = make_outcome(jobs[i].id, jobs[i].instance);
      fail(results[i], {{"error", e.what()}});
    }
  };
  const auto count = static_cast<std::size_t>(std::max(workers, 1));
  if (count == 1 || jobs.size() < 2) {
    for (std::size_t i = 0; i < jobs.size(); ++i) run_one(i);
    return results;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < std::min(count, jobs.size()); ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < jobs.size(); i = next++) run_one(i);
    });
  }
  for (auto& th : pool) th.join();
  return results;
}

}  // namespace

std::vector<VerificationOutcome> run_corpus(const CorpusConfig& config) {
  if (config.max_vertices < 1) throw_input("max_vertices must be at least 1");
  if (config.k_max < 1) throw_input("k_max must be at least 1");
  if (config.jobs < 1) throw_input("jobs must be at least 1");
  const int whisker_base = config.whisker_base_vertices.value_or(std::max(1, config.max_vertices - 1));
  // Every isomorphism class, isolated vertices allowed; verifiers filter.
  std::vector<Graph> corpus;
  for (int n = 1; n <= config.max_vertices; ++n) {
    for (auto& g : isomorphism_classes(n, {})) corpus.push_back(std::move(g));
  }
  std::vector<Graph> whisker_bases;
  for (int n = 1; n <= whisker_base; ++n) {
    for (auto& g : isomorphism_classes(n, {})) whisker_bases.push_back(std::move(g));
  }
  DepthCache cache;
  std::vector<Job> jobs;
  for (Theorem theorem : config.theorems) {
    const auto& graphs = theorem == Theorem::whisker ? whisker_bases : corpus;
    for (const auto& g : graphs) {
      if (applies(theorem, g)) add_jobs(theorem, g, config, cache, jobs);
    }
  }
  return run_jobs(jobs, config.jobs);
}

std::vector<VerificationOutcome> verify_graph(Theorem theorem, const Graph& g, const CorpusConfig& config) {
  const LabSettings& settings = config.settings;
  DepthCache cache;
  std::vector<VerificationOutcome> out;
  auto guarded = [&](const std::string& id, nlohmann::json instance, const std::function<VerificationOutcome()>& run) {
    try {
      out.push_back(run());
    } catch (const ResourceError& e) {
      auto skipped = make_outcome(id, std::move(instance));
      skip(skipped, e.what());
      out.push_back(std::move(skipped));
    }
  };
  const nlohmann::json instance = {{"graph", graph_to_json(g)}};
  switch (theorem) {
    case Theorem::main:
      guarded("main", instance, [&] { return verify_main(g, 1, settings, &cache); });
      break;
    case Theorem::whisker:
      for (const auto& pi : clique_partitions(g)) {
        guarded("whisker", instance, [&] { return verify_whisker(g, pi, config.k_max, settings, &cache); });
      }
      break;
    case Theorem::regind:
      guarded("regind", instance, [&] { return verify_regind(g, settings); });
      break;
    case Theorem::regupper:
      guarded("regupper", instance, [&] { return verify_reg_upper(g, settings); });
      break;
    case Theorem::katzman:
      guarded("katzman", instance, [&] { return verify_katzman(g, settings); });
      break;
    case Theorem::bipartite:
      guarded("bipartite", instance, [&] { return verify_bipartite(g, config.k_max, settings, &cache); });
      break;
    case Theorem::proofmatch:
      guarded("proofmatch", instance, [&] { return verify_proof_matchings(g, settings); });
      break;
    case Theorem::oracle:
      if (g.num_edges() == 0) throw_input("oracle checks need a graph with at least one edge");
      for (const auto& named : derived_ideals(g, config)) {
        guarded("oracle", instance, [&] { return verify_oracle(named.ideal, named.origin, settings); });
      }
      break;
    case Theorem::polarization:
      for (int k = 1; k <= config.k_max; ++k) {
        guarded("polarization", instance, [&] { return verify_polarization(g, k); });
      }
      break;
  }
  return out;
}

OutcomeSummary summarize(const std::vector<VerificationOutcome>& outcomes) {
  OutcomeSummary s;
  for (const auto& o : outcomes) {
    switch (o.status) {
      case OutcomeStatus::passed:
        ++s.passed;
        break;
      case OutcomeStatus::failed:
        ++s.failed;
        break;
      case OutcomeStatus::skipped:
        ++s.skipped;
        break;
    }
  }
  return s;
}

}  // namespace coverdepth
