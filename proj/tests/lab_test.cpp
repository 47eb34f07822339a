#include <doctest.h>

#include "coverdepth/depth.hpp"
#include "coverdepth/errors.hpp"
#include "coverdepth/lab.hpp"
#include "coverdepth/layered.hpp"

using namespace coverdepth;

namespace {

Graph path(int n) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int v = 1; v < n; ++v) edges.emplace_back(v, v + 1);
  return Graph(n, edges);
}

Graph cycle(int n) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int v = 1; v < n; ++v) edges.emplace_back(v, v + 1);
  edges.emplace_back(1, n);
  return Graph(n, edges);
}

Graph complete(int n) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int u = 1; u <= n; ++u) {
    for (int v = u + 1; v <= n; ++v) edges.emplace_back(u, v);
  }
  return Graph(n, edges);
}

LabSettings settings() { return {}; }

}  // namespace

TEST_CASE("stability threshold formula") {
  CHECK(stability_threshold(1, 1) == 1);
  CHECK(stability_threshold(3, 1) == 5);
  CHECK(stability_threshold(2, 2) == 2);
  CHECK(stability_threshold(3, 2) == 4);
  CHECK(stability_threshold(3, 3) == 2);
}

TEST_CASE("stability report on P4") {
  const auto r = stability_report(path(4), 3, settings());
  CHECK(r.ord_match == 2);
  CHECK(r.largest_stable_s == 2);
  CHECK(r.threshold == 2);
  CHECK(r.limit_depth == 1);
  CHECK(r.depths == std::map<int, int>{{1, 2}, {2, 1}, {3, 1}});
  REQUIRE(r.sdstab_observed_upper.has_value());
  CHECK(*r.sdstab_observed_upper == 2);
  CHECK_THROWS_AS(stability_report(Graph(3, {{1, 2}}), 2, settings()), InputError);
}

TEST_CASE("property: stability report invariants on small graphs") {
  for (int n = 2; n <= 5; ++n) {
    for (const auto& g : isomorphism_classes(n, {false, true})) {
      const auto r = stability_report(g, 4, settings());
      CHECK(r.threshold == stability_threshold(r.ord_match, r.largest_stable_s));
      if (r.largest_stable_s >= 2) CHECK(r.threshold < 2 * r.ord_match - 1);
      for (const auto& [k, d] : r.depths) {
        if (k >= r.threshold) CHECK(d == r.limit_depth);
        CHECK(d >= r.limit_depth);
      }
    }
  }
}

TEST_CASE("verify_main examples") {
  const auto p4 = verify_main(path(4), 1, settings());
  CHECK(p4.status == OutcomeStatus::passed);
  CHECK(p4.details["threshold"] == 2);
  CHECK(p4.details["depths"].dump() == R"([[1,2],[2,1],[3,1]])");
  CHECK(verify_main(complete(2), 2, settings()).passed());
  const auto k3 = verify_main(complete(3), 1, settings());
  CHECK(k3.passed());
  CHECK(k3.details["limit_depth"] == 1);
  CHECK_THROWS_AS(verify_main(Graph(3, {{1, 2}}), 1, settings()), InputError);
}

TEST_CASE("verify_main reports a guard overflow as skipped") {
  LabSettings tight;
  tight.hochster_guard = 4;
  const auto out = verify_main(path(4), 1, tight);
  CHECK(out.status == OutcomeStatus::skipped);
  CHECK(out.details.contains("skip_reason"));
}

TEST_CASE("verify_whisker examples") {
  const auto one_block = verify_whisker(complete(2), {{{1, 2}}}, 2, settings());
  CHECK(one_block.passed());
  CHECK(one_block.details["depths"].dump() == R"([[1,1],[2,1]])");
  const auto two_blocks = verify_whisker(complete(2), {{{1}, {2}}}, 3, settings());
  CHECK(two_blocks.passed());
  CHECK(two_blocks.details["depths"].dump() == R"([[1,2],[2,1],[3,1]])");
  const auto k3 = verify_whisker(complete(3), {{{1, 2, 3}}}, 2, settings());
  CHECK(k3.passed());
  CHECK(k3.details["depths"].dump() == R"([[1,2],[2,2]])");
  CHECK_THROWS_AS(verify_whisker(path(3), {{{1, 3}, {2}}}, 2, settings()), InputError);
}

TEST_CASE("verify_regind examples") {
  CHECK(verify_regind(complete(2), settings()).passed());
  const auto p4 = verify_regind(path(4), settings());
  CHECK(p4.passed());
  CHECK(p4.details["threshold"] == 2);
  CHECK(reg_edge_ideal(build_gk(path(4), 2).as_graph(), FieldChoice::rationals()) == 3);
  CHECK(verify_regind(complete(3), settings()).passed());
}

TEST_CASE("verify_reg_upper and verify_katzman examples") {
  CHECK(verify_reg_upper(cycle(5), settings()).passed());
  CHECK(verify_reg_upper(complete(2), settings()).passed());
  CHECK(verify_katzman(cycle(5), settings()).passed());
  CHECK(verify_katzman(Graph(4, {{1, 2}, {3, 4}}), settings()).passed());
  CHECK_THROWS_AS(verify_reg_upper(Graph(3, {}), settings()), InputError);
}

TEST_CASE("verify_bipartite examples") {
  CHECK(verify_bipartite(path(4), 3, settings()).passed());
  CHECK(verify_bipartite(complete(2), 3, settings()).passed());
  const auto c6 = verify_bipartite(cycle(6), 3, settings());
  CHECK(c6.status != OutcomeStatus::failed);
  CHECK_THROWS_AS(verify_bipartite(complete(3), 3, settings()), InputError);
}

TEST_CASE("verify_proof_matchings examples") {
  CHECK(verify_proof_matchings(path(4), settings()).passed());
  CHECK(verify_proof_matchings(complete(2), settings()).passed());
  // K3 whiskered by one block is K4: ord-match 1 with s = 1 and not
  // bipartite, so no construction applies.
  const Graph k4 = whisker(complete(3), {{{1, 2, 3}}});
  CHECK(k4 == complete(4));
  CHECK(verify_proof_matchings(k4, settings()).status == OutcomeStatus::skipped);
  // K3 whiskered by singletons has s >= 2, so the main construction runs.
  const Graph corona = whisker(complete(3), {{{1}, {2}, {3}}});
  const auto out = verify_proof_matchings(corona, settings());
  CHECK(out.passed());
}

TEST_CASE("verify_oracle and verify_polarization") {
  const auto out = verify_oracle(edge_ideal(cycle(5)), "I(C5)", settings());
  CHECK(out.passed());
  CHECK(out.details["field_disagreement"] == false);
  CHECK(verify_polarization(path(4), 3).passed());
  CHECK(verify_polarization(complete(3), 2).passed());
}

TEST_CASE("depth cache returns the uncached value") {
  DepthCache cache;
  for (const auto& g : isomorphism_classes(4, {false, true})) {
    for (int k = 1; k <= 3; ++k) {
      const int direct = depth_symbolic_cover(g, k, FieldChoice::rationals());
      CHECK(cache.depth(g, k, settings()) == direct);
      CHECK(cache.depth(g, k, settings()) == direct);
    }
  }
}

TEST_CASE("theorem names round-trip") {
  for (Theorem t : all_theorems()) CHECK(theorem_from_string(to_string(t)) == t);
  CHECK_THROWS_AS(theorem_from_string("nope"), InputError);
}

TEST_CASE("run_corpus on three vertices passes everything a construction covers") {
  CorpusConfig config;
  config.max_vertices = 3;
  config.k_max = 2;
  const auto outcomes = run_corpus(config);
  const auto sum = summarize(outcomes);
  CHECK(sum.failed == 0);
  // K3 has s = 1 and is not bipartite, so its proof-matching check is the
  // only instance without an applicable construction.
  CHECK(sum.skipped == 1);
  CHECK(sum.passed + 1 == outcomes.size());
  CHECK(sum.passed > 0);
  for (const auto& o : outcomes) {
    if (o.status != OutcomeStatus::skipped) continue;
    CHECK(o.theorem_id == "proofmatch");
    CHECK(o.instance["graph"]["edges"].dump() == "[[1,2],[1,3],[2,3]]");
  }
}

TEST_CASE("run_corpus on two vertices only sees the K2 family") {
  CorpusConfig config;
  config.max_vertices = 2;
  config.k_max = 2;
  for (const auto& o : run_corpus(config)) {
    const auto& g = o.instance.contains("graph") ? o.instance["graph"] : nlohmann::json();
    if (o.theorem_id == "whisker") {
      CHECK(g["n"].get<int>() <= 1);
    } else if (o.theorem_id == "oracle") {
      CHECK(o.instance["num_vars"].get<int>() <= 2 * config.k_max);
    } else {
      CHECK(g["n"] == 2);
      CHECK(g["edges"].dump() == "[[1,2]]");
    }
    CHECK(o.passed());
  }
}

TEST_CASE("run_corpus marks guard overflows as skipped") {
  CorpusConfig config;
  config.max_vertices = 3;
  config.k_max = 2;
  config.settings.hochster_guard = 2;
  config.settings.taylor_guard = 1;
  const auto sum = summarize(run_corpus(config));
  CHECK(sum.failed == 0);
  CHECK(sum.skipped > 0);
}

TEST_CASE("run_corpus is deterministic across job counts") {
  CorpusConfig config;
  config.max_vertices = 4;
  config.k_max = 2;
  const auto serial = report_json(run_corpus(config));
  config.jobs = 3;
  const auto parallel = report_json(run_corpus(config));
  CHECK(serial == parallel);
  CHECK(report_csv(run_corpus(config)) == report_csv(run_corpus(config)));
}

TEST_CASE("reports") {
  const auto outcomes = std::vector<VerificationOutcome>{verify_main(complete(2), 1, settings())};
  const auto csv = report_csv(outcomes);
  CHECK(csv.rfind("theorem_id,n,instance_hash,status\n", 0) == 0);
  CHECK(csv.find("main,2," + instance_hash(outcomes[0].instance) + ",passed") != std::string::npos);
  CHECK(instance_hash(outcomes[0].instance).size() == 16);
  CHECK(nlohmann::json::parse(report_json(outcomes)).size() == 1);
  CHECK(report_text(outcomes).find("1 passed") != std::string::npos);
}

TEST_CASE("verify_graph propagates precondition errors") {
  CorpusConfig config;
  CHECK_THROWS_AS(verify_graph(Theorem::main, Graph(3, {{1, 2}}), config), InputError);
  const auto whiskers = verify_graph(Theorem::whisker, complete(3), config);
  CHECK(whiskers.size() == 5);
  for (const auto& o : whiskers) CHECK(o.passed());
}
