#include "coverdepth/text_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "coverdepth/errors.hpp"

namespace coverdepth {

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

// Non-blank, non-comment lines with their 1-based line numbers.
std::vector<std::pair<int, std::string>> content_lines(const std::string& text) {
  std::vector<std::pair<int, std::string>> out;
  std::istringstream in(text);
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    out.emplace_back(number, line);
  }
  return out;
}

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string token;
  while (in >> token) out.push_back(token);
  return out;
}

[[noreturn]] void parse_fail(int line, const std::string& what) {
  throw ParseError("line " + std::to_string(line) + ": " + what);
}

int parse_int(const std::string& token, int line) {
  int value = 0;
  const char* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc() || ptr != end) parse_fail(line, "expected an integer, got '" + token + "'");
  return value;
}

Variable parse_variable(const std::string& token, int line) {
  if (token.size() < 2 || token[0] != 'x') parse_fail(line, "expected a variable, got '" + token + "'");
  if (token[1] == '_') {
    const auto sep = token.find('_', 2);
    if (sep == std::string::npos) parse_fail(line, "layered variable '" + token + "' needs the form x_i_p");
    const int index = parse_int(token.substr(2, sep - 2), line);
    const int layer = parse_int(token.substr(sep + 1), line);
    if (index < 1 || layer < 1) parse_fail(line, "variable indices start at 1 in '" + token + "'");
    return {index, layer};
  }
  const int index = parse_int(token.substr(1), line);
  if (index < 1) parse_fail(line, "variable indices start at 1 in '" + token + "'");
  return {index, 0};
}

// A parsed monomial as variable -> exponent.
using RawMonomial = std::map<Variable, Exponent>;

RawMonomial parse_raw_monomial(const std::string& text, int line) {
  std::string spaced = text;
  std::replace(spaced.begin(), spaced.end(), '*', ' ');
  const auto tokens = split_ws(spaced);
  if (tokens.empty()) parse_fail(line, "empty generator");
  RawMonomial out;
  if (tokens.size() == 1 && tokens[0] == "1") return out;
  for (const auto& token : tokens) {
    const auto caret = token.find('^');
    const Variable v = parse_variable(token.substr(0, caret), line);
    Exponent e = 1;
    if (caret != std::string::npos) {
      const int value = parse_int(token.substr(caret + 1), line);
      if (value < 1) parse_fail(line, "exponents must be positive in '" + token + "'");
      e = static_cast<Exponent>(value);
    }
    out[v] += e;
  }
  return out;
}

LayeredVertex parse_layered_vertex(const std::string& token, int line) {
  const auto sep = token.find('_');
  if (sep == std::string::npos) parse_fail(line, "expected i_p, got '" + token + "'");
  return {parse_int(token.substr(0, sep), line), parse_int(token.substr(sep + 1), line)};
}

}  // namespace

std::string format_graph(const Graph& g) {
  std::ostringstream out;
  out << "n " << g.num_vertices() << "\n";
  for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
  return out.str();
}

Graph parse_graph(const std::string& text) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw ParseError("graph file is empty");
  const auto header = split_ws(lines.front().second);
  if (header.size() != 2 || header[0] != "n") parse_fail(lines.front().first, "expected header 'n <vertices>'");
  const int n = parse_int(header[1], lines.front().first);
  if (n < 0 || n > kMaxGraphVertices) parse_fail(lines.front().first, "vertex count must be in [0, 64]");
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& [number, line] = lines[i];
    const auto tokens = split_ws(line);
    if (tokens.size() != 2) parse_fail(number, "expected an edge 'u v'");
    const int u = parse_int(tokens[0], number);
    const int v = parse_int(tokens[1], number);
    if (u < 1 || u > n || v < 1 || v > n) parse_fail(number, "vertex out of range 1.." + std::to_string(n));
    if (u == v) parse_fail(number, "loops are not allowed");
    edges.emplace_back(u, v);
  }
  return Graph(n, edges);
}

std::string format_partition(const CliquePartition& pi) {
  std::ostringstream out;
  for (const auto& block : pi.blocks) {
    for (std::size_t i = 0; i < block.size(); ++i) out << (i ? " " : "") << block[i];
    out << "\n";
  }
  return out.str();
}

CliquePartition parse_partition(const std::string& text) {
  CliquePartition pi;
  for (const auto& [number, line] : content_lines(text)) {
    std::vector<Vertex> block;
    for (const auto& token : split_ws(line)) block.push_back(parse_int(token, number));
    pi.blocks.push_back(std::move(block));
  }
  return pi;
}

std::string format_monomial(const VariableSpace& space, const Monomial& m) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += ' ';
    out += space[i].name();
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

std::string format_ideal(const MonomialIdeal& ideal) {
  std::string out = "# ring:";
  for (const auto& v : ideal.space().variables()) out += " " + v.name();
  out += "\n(";
  if (ideal.is_zero()) out += "0";
  for (std::size_t i = 0; i < ideal.num_generators(); ++i) {
    if (i) out += ", ";
    out += format_monomial(ideal.space(), ideal.generators()[i]);
  }
  return out + ")\n";
}

MonomialIdeal parse_ideal(const std::string& text) {
  std::optional<VariableSpace> space;
  std::istringstream in(text);
  std::string line;
  int number = 0;
  std::vector<std::pair<int, std::string>> pieces;
  while (std::getline(in, line)) {
    ++number;
    line = trim(line);
    if (line.rfind("# ring:", 0) == 0) {
      if (space) parse_fail(number, "duplicate ring header");
      std::vector<Variable> vars;
      for (const auto& token : split_ws(line.substr(7))) vars.push_back(parse_variable(token, number));
      space = VariableSpace(std::move(vars));
      continue;
    }
    if (line.empty() || line.front() == '#') continue;
    // Each line contributes comma-separated pieces.
    std::string current;
    for (char c : line) {
      if (c == ',') {
        pieces.emplace_back(number, current);
        current.clear();
      } else {
        current += c;
      }
    }
    pieces.emplace_back(number, current);
  }
  // Strip the surrounding parentheses.
  if (!pieces.empty()) {
    std::string& first = pieces.front().second;
    std::string& last = pieces.back().second;
    first = trim(first);
    const bool open = !first.empty() && first.front() == '(';
    if (open) first.erase(0, 1);
    last = trim(last);
    const bool close = !last.empty() && last.back() == ')';
    if (close) last.pop_back();
    if (open != close) parse_fail(pieces.back().first, "unbalanced parentheses");
  }
  std::vector<RawMonomial> raw;
  bool zero = false;
  for (const auto& [at, piece] : pieces) {
    const std::string item = trim(piece);
    if (item.empty()) continue;
    if (item.find_first_of("()") != std::string::npos) parse_fail(at, "unexpected parenthesis");
    if (item == "0") {
      zero = true;
      continue;
    }
    raw.push_back(parse_raw_monomial(item, at));
  }
  if (zero && !raw.empty()) throw ParseError("'0' cannot be combined with other generators");
  if (pieces.empty() && !zero) throw ParseError("ideal file has no generator list");
  if (!space) {
    std::set<Variable> seen;
    for (const auto& m : raw) {
      for (const auto& [v, e] : m) seen.insert(v);
    }
    const bool layered = std::any_of(seen.begin(), seen.end(), [](const Variable& v) { return v.is_layered(); });
    if (layered) {
      space = VariableSpace(std::vector<Variable>(seen.begin(), seen.end()));
    } else {
      space = VariableSpace::simple(seen.empty() ? 0 : seen.rbegin()->index);
    }
  }
  std::vector<Monomial> gens;
  for (const auto& m : raw) {
    Monomial exps(space->size(), 0);
    for (const auto& [v, e] : m) {
      const std::size_t pos = space->find(v);
      if (pos == space->size()) throw InputError("variable " + v.name() + " is not in the ring");
      exps[pos] = e;
    }
    gens.push_back(std::move(exps));
  }
  return MonomialIdeal(*space, std::move(gens));
}

std::string format_layered_graph(const LayeredGraph& lg) {
  std::ostringstream out;
  out << "n " << lg.base_n() << " k " << lg.level() << "\n";
  for (const auto& [u, v] : lg.edges()) {
    out << u.base << "_" << u.layer << " " << v.base << "_" << v.layer << "\n";
  }
  return out.str();
}

LayeredGraph parse_layered_graph(const std::string& text) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw ParseError("layered graph file is empty");
  const auto header = split_ws(lines.front().second);
  if (header.size() != 4 || header[0] != "n" || header[2] != "k") {
    parse_fail(lines.front().first, "expected header 'n <vertices> k <layers>'");
  }
  const int n = parse_int(header[1], lines.front().first);
  const int k = parse_int(header[3], lines.front().first);
  std::vector<LayeredEdge> edges;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& [number, line] = lines[i];
    const auto tokens = split_ws(line);
    if (tokens.size() != 2) parse_fail(number, "expected an edge 'i_p j_q'");
    edges.push_back({parse_layered_vertex(tokens[0], number), parse_layered_vertex(tokens[1], number)});
  }
  return LayeredGraph(n, k, std::move(edges));
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

}  // namespace coverdepth
