#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include <nlohmann/json.hpp>

#include "cli.hpp"

namespace fs = std::filesystem;
using coverdepth::cli::run;

namespace {

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result call(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

class Workspace {
 public:
  Workspace() : dir_(fs::temp_directory_path() / ("coverdepth_cli_test_" + std::to_string(::getpid()))) {
    fs::create_directories(dir_);
  }
  ~Workspace() { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) const {
    const auto path = dir_ / name;
    std::ofstream(path) << text;
    return path.string();
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

 private:
  fs::path dir_;
};

const Workspace& ws() {
  static const Workspace w;
  return w;
}

std::string k2() { return ws().write("k2.txt", "n 2\n1 2\n"); }
std::string k3() { return ws().write("k3.txt", "n 3\n1 2\n1 3\n2 3\n"); }
std::string p3() { return ws().write("p3.txt", "n 3\n1 2\n2 3\n"); }
std::string p4() { return ws().write("p4.txt", "n 4\n1 2\n2 3\n3 4\n"); }

std::size_t count_lines(const std::string& text, bool skip_header) {
  std::istringstream in(text);
  std::string line;
  std::size_t n = 0;
  bool first = true;
  while (std::getline(in, line)) {
    if (first && skip_header) {
      first = false;
      continue;
    }
    if (!line.empty()) ++n;
  }
  return n;
}

}  // namespace

TEST_CASE("invariants command") {
  const auto p = call({"invariants", p4()});
  CHECK(p.code == 0);
  CHECK(p.out.find("ord_match 2\n") != std::string::npos);
  CHECK(p.out.find("largest_stable_s 2\n") != std::string::npos);
  CHECK(p.out.find("certificate (1,2) (4,3)\n") != std::string::npos);

  const auto k = call({"invariants", k2(), "--format", "json"});
  CHECK(k.code == 0);
  const auto j = nlohmann::json::parse(k.out);
  CHECK(j["alpha"] == 1);
  CHECK(j["ind_match"] == 1);
  CHECK(j["ord_match"] == 1);
  CHECK(j["largest_stable_s"] == 1);
  CHECK(j["s_ord_match"]["1"] == 1);

  const auto t = call({"invariants", k3()});
  CHECK(t.out.find("s_ord_match[2] -inf\n") != std::string::npos);
}

TEST_CASE("ideal commands") {
  const auto cover = call({"ideal", "cover", k3()});
  CHECK(cover.code == 0);
  CHECK(cover.out == "# ring: x1 x2 x3\n(x1 x2, x1 x3, x2 x3)\n");

  const auto sym = call({"ideal", "sympow", k2(), "2"});
  CHECK(sym.code == 0);
  CHECK(sym.out == "# ring: x1 x2\n(x1^2, x1 x2, x2^2)\n");

  const auto pol = call({"ideal", "polarize", ws().write("sym.txt", sym.out)});
  CHECK(pol.code == 0);
  CHECK(pol.out == "# ring: x_1_1 x_1_2 x_2_1 x_2_2\n(x_1_1 x_1_2, x_1_1 x_2_1, x_2_1 x_2_2)\n");

  CHECK(call({"ideal", "edge", p3()}).out == "# ring: x1 x2 x3\n(x1 x2, x2 x3)\n");
  const auto m = ws().write("m.txt", "(x1, x2)\n");
  CHECK(call({"ideal", "pow", m, "2"}).out == sym.out);
  CHECK(call({"ideal", "dual", ws().write("e.txt", "(x1 x2)\n")}).out == "# ring: x1 x2\n(x1, x2)\n");
  const auto a = ws().write("a.txt", "# ring: x1 x2 x3\n(x1, x2)\n");
  const auto b = ws().write("b.txt", "# ring: x1 x2 x3\n(x1, x3)\n");
  CHECK(call({"ideal", "intersect", a, b}).out == "# ring: x1 x2 x3\n(x1, x2 x3)\n");
}

TEST_CASE("ideal command errors") {
  CHECK(call({"ideal", "cover", ws().write("bad.txt", "n 2\n1 3\n")}).code == 2);
  CHECK(call({"ideal", "cover", ws().write("empty.txt", "n 2\n")}).code == 4);
  CHECK(call({"ideal", "dual", ws().write("sq.txt", "(x1^2)\n")}).code == 4);
  const auto a = ws().write("two.txt", "(x1, x2)\n");
  const auto b = ws().write("three.txt", "(x1, x3)\n");
  CHECK(call({"ideal", "intersect", a, b}).code == 4);
  CHECK(call({"ideal", "cover", ws().path("missing.txt")}).code == 2);
}

TEST_CASE("gk command") {
  const auto two = call({"gk", k2(), "2"});
  CHECK(two.code == 0);
  CHECK(count_lines(two.out, true) == 3);
  const auto one = call({"gk", p4(), "1"});
  CHECK(count_lines(one.out, true) == 3);
  const auto path = call({"gk", p3(), "2"});
  CHECK(path.out == "n 3 k 2\n1_1 2_1\n1_1 2_2\n1_2 2_1\n2_1 3_1\n2_1 3_2\n2_2 3_1\n");
  CHECK(call({"gk", k2(), "0"}).code == 4);
}

TEST_CASE("depth command") {
  const auto a = call({"depth", k2(), "5"});
  CHECK(a.code == 0);
  CHECK(a.out.rfind("depth 0\n", 0) == 0);
  const auto b = call({"depth", p4(), "2", "--format", "json"});
  const auto j = nlohmann::json::parse(b.out);
  CHECK(j["depth"] == 1);
  CHECK(j["via_polarization"] == 1);
  CHECK(j["via_regularity"] == 1);
  CHECK(call({"depth", k3(), "2", "--field", "f2"}).out.rfind("depth 1\n", 0) == 0);
  CHECK(call({"depth", p4(), "5"}).code == 3);
}

TEST_CASE("verify command exit codes") {
  CHECK(call({"verify", "all", "--max-vertices", "4", "--max-k", "2"}).code == 0);
  CHECK(call({"verify", "bipartite", "--max-vertices", "5"}).code == 0);
  const auto iso = ws().write("iso.txt", "n 3\n1 2\n");
  CHECK(call({"verify", "main", "--graph", iso}).code == 2);
  CHECK(call({"verify", "main", "--graph", p4()}).code == 0);
  CHECK(call({"verify", "nonsense"}).code == 2);
  CHECK(call({"--bogus"}).code == 2);
  CHECK(call({"verify", "main", "--jobs", "0"}).code == 2);
  CHECK(call({"depth", p4(), "2", "--jobs", "0"}).code == 4);
}

TEST_CASE("verify writes reports to a file and prints a summary") {
  const auto target = ws().path("report.csv");
  const auto r = call({"verify", "regupper", "--max-vertices", "3", "--format", "csv", "--output", target});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("summary: ", 0) == 0);
  std::ifstream in(target);
  std::string header;
  std::getline(in, header);
  CHECK(header == "theorem_id,n,instance_hash,status");
}

TEST_CASE("raising a guard needs the override variable") {
  ::unsetenv("COVERDEPTH_GUARD_OVERRIDE");
  CHECK(call({"depth", p4(), "2", "--hochster-guard", "20"}).code == 3);
  ::setenv("COVERDEPTH_GUARD_OVERRIDE", "0", 1);
  CHECK(call({"depth", p4(), "2", "--hochster-guard", "20"}).code == 3);
  ::setenv("COVERDEPTH_GUARD_OVERRIDE", "1", 1);
  CHECK(call({"depth", p4(), "2", "--hochster-guard", "20"}).code == 0);
  CHECK(call({"depth", p4(), "2", "--hochster-guard", "65"}).code == 3);
  ::unsetenv("COVERDEPTH_GUARD_OVERRIDE");
  CHECK(call({"depth", p4(), "2", "--hochster-guard", "4"}).code == 3);
}

TEST_CASE("verify all is byte-identical across runs and job counts") {
  const std::vector<std::string> base = {"verify", "all", "--max-vertices", "4", "--max-k", "2", "--format", "json"};
  auto with_jobs = [&](const std::string& jobs) {
    auto args = base;
    args.push_back("--jobs");
    args.push_back(jobs);
    return call(args);
  };
  const auto a = with_jobs("1");
  const auto b = with_jobs("1");
  const auto c = with_jobs("3");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out == c.out);
}
