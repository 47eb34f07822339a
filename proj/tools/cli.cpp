#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "coverdepth/betti.hpp"
#include "coverdepth/depth.hpp"
#include "coverdepth/errors.hpp"
#include "coverdepth/lab.hpp"
#include "coverdepth/layered.hpp"
#include "coverdepth/text_io.hpp"

namespace coverdepth::cli {

namespace {

// Hard ceilings that even COVERDEPTH_GUARD_OVERRIDE cannot lift.
constexpr std::size_t kHochsterCeiling = 64;
constexpr std::size_t kTaylorCeiling = 24;

struct Config {
  std::string field = "q";
  int max_k = 3;
  int max_vertices = 5;
  int whisker_base = 0;  // 0: max_vertices - 1
  std::size_t hochster_guard = kDefaultHochsterGuard;
  std::size_t taylor_guard = kDefaultTaylorGuard;
  int jobs = 1;
  std::string format = "text";
  std::string output;
};

bool override_enabled() {
  const char* value = std::getenv("COVERDEPTH_GUARD_OVERRIDE");
  return value != nullptr && *value != '\0' && std::string(value) != "0";
}

FieldChoice field_of(const Config& c) { return c.field == "f2" ? FieldChoice::prime(2) : FieldChoice::rationals(); }

LabSettings settings_of(const Config& c) { return {field_of(c), c.hochster_guard, c.taylor_guard}; }

// Guards above their defaults need the override variable.
void check_guards(const Config& c) {
  if (c.hochster_guard < 1 || c.taylor_guard < 1) throw InputError("guards must be positive");
  if (c.jobs < 1) throw InputError("--jobs must be at least 1");
  if (c.max_k < 1 || c.max_vertices < 1) throw InputError("--max-k and --max-vertices must be positive");
  const bool raised = c.hochster_guard > kDefaultHochsterGuard || c.taylor_guard > kDefaultTaylorGuard;
  if (raised && !override_enabled()) {
    throw ResourceError("raising a guard above its default needs COVERDEPTH_GUARD_OVERRIDE=1");
  }
  if (c.hochster_guard > kHochsterCeiling || c.taylor_guard > kTaylorCeiling) {
    throw ResourceError("guards are capped at " + std::to_string(kHochsterCeiling) + " (Hochster) and " +
                        std::to_string(kTaylorCeiling) + " (Taylor)");
  }
}

std::string render(const MatchingNumber& m) { return m.is_negative_infinity() ? "-inf" : std::to_string(m.value()); }

std::string render(const Matching& m) {
  std::string out;
  for (const auto& p : m.pairs) {
    out += (out.empty() ? "" : " ") + std::string("(") + std::to_string(p.a) + "," + std::to_string(p.b) + ")";
  }
  return out;
}

Graph load_graph(const std::string& path) { return parse_graph(read_text_file(path)); }
MonomialIdeal load_ideal(const std::string& path) { return parse_ideal(read_text_file(path)); }

nlohmann::json ideal_json(const MonomialIdeal& ideal) {
  nlohmann::json ring = nlohmann::json::array();
  for (const auto& v : ideal.space().variables()) ring.push_back(v.name());
  nlohmann::json gens = nlohmann::json::array();
  for (const auto& m : ideal.generators()) gens.push_back(format_monomial(ideal.space(), m));
  return {{"ring", ring}, {"generators", gens}};
}

void emit(const Config& c, std::ostream& out, const std::string& text) {
  if (c.output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(c.output, std::ios::binary);
  if (!file) throw InputError("cannot write " + c.output);
  file << text;
}

// ---------------------------------------------------------------------------

std::string cmd_invariants(const Config& c, const std::string& path) {
  const Graph g = load_graph(path);
  if (static_cast<std::size_t>(g.num_vertices()) > c.hochster_guard) {
    throw ResourceError("graph has more vertices than the guard of " + std::to_string(c.hochster_guard));
  }
  const InvariantReport r = compute_invariants(g);
  if (c.format == "json") {
    nlohmann::json s_ord = nlohmann::json::object();
    for (const auto& [s, v] : r.s_ord_match) {
      s_ord[std::to_string(s)] = v.is_negative_infinity() ? nlohmann::json("-inf") : nlohmann::json(v.value());
    }
    nlohmann::json j = {{"alpha", r.alpha}, {"ind_match", r.ind_match}, {"ord_match", r.ord_match}, {"s_ord_match", s_ord}};
    j["largest_stable_s"] = r.largest_stable_s ? nlohmann::json(*r.largest_stable_s) : nlohmann::json();
    nlohmann::json cert = nlohmann::json::array();
    if (r.certificate) {
      for (const auto& p : r.certificate->pairs) cert.push_back({p.a, p.b});
    }
    j["certificate"] = cert;
    return j.dump(2) + "\n";
  }
  std::ostringstream out;
  out << "alpha " << r.alpha << "\n";
  out << "ind_match " << r.ind_match << "\n";
  out << "ord_match " << r.ord_match << "\n";
  for (const auto& [s, v] : r.s_ord_match) out << "s_ord_match[" << s << "] " << render(v) << "\n";
  out << "largest_stable_s " << (r.largest_stable_s ? std::to_string(*r.largest_stable_s) : "none") << "\n";
  out << "certificate " << (r.certificate ? render(*r.certificate) : "none") << "\n";
  return out.str();
}

std::string render_ideal(const Config& c, const MonomialIdeal& ideal) {
  return c.format == "json" ? ideal_json(ideal).dump(2) + "\n" : format_ideal(ideal);
}

std::string cmd_gk(const Config& c, const std::string& path, int k) {
  const LayeredGraph lg = build_gk(load_graph(path), k);
  if (c.format == "json") {
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& [u, v] : lg.edges()) edges.push_back({{u.base, u.layer}, {v.base, v.layer}});
    return nlohmann::json{{"n", lg.base_n()}, {"k", lg.level()}, {"edges", edges}}.dump(2) + "\n";
  }
  return format_layered_graph(lg);
}

std::string cmd_depth(const Config& c, const std::string& path, int k) {
  const Graph g = load_graph(path);
  const DepthRoutes r = depth_symbolic_cover_routes(g, k, field_of(c), c.hochster_guard);
  if (c.format == "json") {
    return nlohmann::json{{"depth", r.depth},
                          {"k", k},
                          {"field", field_of(c).name()},
                          {"via_polarization", r.via_polarization},
                          {"via_regularity", r.via_regularity}}
               .dump(2) +
           "\n";
  }
  std::ostringstream out;
  out << "depth " << r.depth << "\n";
  out << "routes agree: polarization " << r.via_polarization << ", regularity " << r.via_regularity << " over "
      << field_of(c).name() << "\n";
  return out.str();
}

std::string render_report(const Config& c, const std::vector<VerificationOutcome>& outcomes) {
  if (c.format == "json") return report_json(outcomes);
  if (c.format == "csv") return report_csv(outcomes);
  return report_text(outcomes);
}

int cmd_verify(const Config& c, const std::string& theorem, const std::string& graph_path, std::ostream& out) {
  CorpusConfig config;
  config.max_vertices = c.max_vertices;
  if (c.whisker_base > 0) config.whisker_base_vertices = c.whisker_base;
  config.k_max = c.max_k;
  config.settings = settings_of(c);
  config.jobs = c.jobs;
  if (theorem != "all") config.theorems = {theorem_from_string(theorem)};

  std::vector<VerificationOutcome> outcomes;
  if (graph_path.empty()) {
    outcomes = run_corpus(config);
  } else {
    const Graph g = load_graph(graph_path);
    for (Theorem t : config.theorems) {
      // "all" on one graph runs the bipartite checks only when they apply.
      if (theorem == "all" && t == Theorem::bipartite && !is_bipartite(g).bipartite) continue;
      auto part = verify_graph(t, g, config);
      outcomes.insert(outcomes.end(), part.begin(), part.end());
    }
  }
  const std::string report = render_report(c, outcomes);
  const OutcomeSummary s = summarize(outcomes);
  if (c.output.empty()) {
    out << report;
  } else {
    emit(c, out, report);
    out << "summary: " << s.passed << " passed, " << s.failed << " failed, " << s.skipped << " skipped\n";
  }
  return s.failed == 0 ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Depth and regularity of symbolic powers of cover ideals"};
  app.require_subcommand(1);
  // Global flags may follow the subcommand.
  app.fallthrough();
  Config c;
  app.add_option("--field", c.field, "Coefficient field")->check(CLI::IsMember({"q", "f2"}));
  app.add_option("--max-k", c.max_k, "Largest power in corpus sweeps");
  app.add_option("--max-vertices", c.max_vertices, "Largest corpus graph");
  app.add_option("--whisker-base", c.whisker_base, "Largest whisker base graph (default: max-vertices - 1)");
  app.add_option("--hochster-guard", c.hochster_guard, "Most variables for Hochster enumeration");
  app.add_option("--taylor-guard", c.taylor_guard, "Most generators for the Taylor oracle");
  app.add_option("--jobs", c.jobs, "Worker threads for corpus sweeps");
  app.add_option("--format", c.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--output", c.output, "Write the result to this file");

  std::string graph_path;
  std::string ideal_path;
  std::string second_path;
  int k = 1;
  std::function<std::string()> action;
  std::function<int()> verify_action;

  auto* invariants = app.add_subcommand("invariants", "Matching invariants of a graph");
  invariants->add_option("graph", graph_path)->required();
  invariants->callback([&] { action = [&] { return cmd_invariants(c, graph_path); }; });

  auto* ideal = app.add_subcommand("ideal", "Monomial ideal constructions");
  ideal->require_subcommand(1);
  auto graph_op = [&](const char* name, const char* help, auto make) {
    auto* sub = ideal->add_subcommand(name, help);
    sub->add_option("graph", graph_path)->required();
    sub->callback([&, make] { action = [&, make] { return render_ideal(c, make(load_graph(graph_path))); }; });
  };
  graph_op("cover", "Cover ideal J(G)", [](const Graph& g) { return cover_ideal(g); });
  graph_op("edge", "Edge ideal I(G)", [](const Graph& g) { return edge_ideal(g); });
  {
    auto* sub = ideal->add_subcommand("sympow", "Symbolic power J(G)^(k)");
    sub->add_option("graph", graph_path)->required();
    sub->add_option("k", k)->required();
    sub->callback([&] { action = [&] { return render_ideal(c, symbolic_power_cover(load_graph(graph_path), k)); }; });
  }
  {
    auto* sub = ideal->add_subcommand("pow", "Ordinary power I^k");
    sub->add_option("ideal", ideal_path)->required();
    sub->add_option("k", k)->required();
    sub->callback([&] { action = [&] { return render_ideal(c, power(load_ideal(ideal_path), k)); }; });
  }
  {
    auto* sub = ideal->add_subcommand("polarize", "Polarization");
    sub->add_option("ideal", ideal_path)->required();
    sub->callback([&] { action = [&] { return render_ideal(c, polarize(load_ideal(ideal_path))); }; });
  }
  {
    auto* sub = ideal->add_subcommand("dual", "Alexander dual of a squarefree ideal");
    sub->add_option("ideal", ideal_path)->required();
    sub->callback([&] { action = [&] { return render_ideal(c, alexander_dual(load_ideal(ideal_path))); }; });
  }
  {
    auto* sub = ideal->add_subcommand("intersect", "Intersection of two ideals");
    sub->add_option("ideal", ideal_path)->required();
    sub->add_option("other", second_path)->required();
    sub->callback([&] {
      action = [&] { return render_ideal(c, intersect(load_ideal(ideal_path), load_ideal(second_path))); };
    });
  }

  auto* gk = app.add_subcommand("gk", "The layered graph G_k");
  gk->add_option("graph", graph_path)->required();
  gk->add_option("k", k)->required();
  gk->callback([&] { action = [&] { return cmd_gk(c, graph_path, k); }; });

  auto* depth = app.add_subcommand("depth", "depth(S/J(G)^(k)) by two independent routes");
  depth->add_option("graph", graph_path)->required();
  depth->add_option("k", k)->required();
  depth->callback([&] { action = [&] { return cmd_depth(c, graph_path, k); }; });

  std::string theorem;
  std::vector<std::string> theorem_names = {"all"};
  for (Theorem t : all_theorems()) theorem_names.push_back(to_string(t));
  auto* verify = app.add_subcommand("verify", "Check the depth and regularity results over a corpus");
  verify->add_option("theorem", theorem)->required()->check(CLI::IsMember(theorem_names));
  verify->add_option("--graph", graph_path, "Verify one graph instead of the corpus");
  verify->callback([&] { verify_action = [&] { return cmd_verify(c, theorem, graph_path, out); }; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitParse;
  }

  const bool verifying = static_cast<bool>(verify_action);
  try {
    check_guards(c);
    if (verifying) return verify_action();
    emit(c, out, action());
    return kExitOk;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const ResourceError& e) {
    err << "guard exceeded: " << e.what() << "\n";
    return kExitGuard;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return verifying ? kExitParse : kExitPrecondition;
  } catch (const PreconditionError& e) {
    err << "precondition violated: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace coverdepth::cli
