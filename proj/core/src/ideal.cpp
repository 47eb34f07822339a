#include "coverdepth/ideal.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <limits>
#include <numeric>
#include <set>

#include "coverdepth/errors.hpp"

namespace coverdepth {

std::string Variable::name() const {
  if (layer == 0) return "x" + std::to_string(index);
  return "x_" + std::to_string(index) + "_" + std::to_string(layer);
}

VariableSpace::VariableSpace(std::vector<Variable> variables) : vars_(std::move(variables)) {
  std::set<Variable> seen;
  for (const auto& v : vars_) {
    if (v.index < 1 || v.layer < 0) throw_input("invalid variable " + v.name());
    if (!seen.insert(v).second) throw_input("variable " + v.name() + " listed twice");
  }
}

VariableSpace VariableSpace::simple(int n) {
  std::vector<Variable> vars;
  for (int i = 1; i <= n; ++i) vars.push_back({i, 0});
  return VariableSpace(std::move(vars));
}

VariableSpace VariableSpace::layered(int n, int k) {
  std::vector<Variable> vars;
  for (int i = 1; i <= n; ++i) {
    for (int p = 1; p <= k; ++p) vars.push_back({i, p});
  }
  return VariableSpace(std::move(vars));
}

bool VariableSpace::all_simple() const {
  return std::none_of(vars_.begin(), vars_.end(), [](const Variable& v) { return v.is_layered(); });
}

std::size_t VariableSpace::find(const Variable& v) const {
  return static_cast<std::size_t>(std::find(vars_.begin(), vars_.end(), v) - vars_.begin());
}

// ---------------------------------------------------------------------------

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
  return out;
}

Monomial multiply(const Monomial& a, const Monomial& b) {
  Monomial out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > std::numeric_limits<Exponent>::max() - b[i]) throw_input("exponent overflow");
    out[i] = a[i] + b[i];
  }
  return out;
}

bool divides(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

std::uint64_t total_degree(const Monomial& m) {
  return std::accumulate(m.begin(), m.end(), std::uint64_t{0});
}

bool is_squarefree(const Monomial& m) {
  return std::all_of(m.begin(), m.end(), [](Exponent e) { return e <= 1; });
}

std::uint64_t support_mask(const Monomial& m) {
  if (m.size() > 64) throw_input("support masks need at most 64 variables");
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] != 0) mask |= std::uint64_t{1} << i;
  }
  return mask;
}

// ---------------------------------------------------------------------------

namespace {

void sort_generators(std::vector<Monomial>& gens) {
  // Lexicographic with x1 > x2 > ...: larger exponent vectors come first.
  std::sort(gens.begin(), gens.end(), std::greater<>());
}

std::vector<Monomial> minimal_subset(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    const auto da = total_degree(a);
    const auto db = total_degree(b);
    return da != db ? da < db : a < b;
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> kept;
  for (auto& m : gens) {
    // Only monomials of no larger degree can divide m, and those are kept
    // already.
    const bool redundant = std::any_of(kept.begin(), kept.end(), [&](const Monomial& k) { return divides(k, m); });
    if (!redundant) kept.push_back(std::move(m));
  }
  sort_generators(kept);
  return kept;
}

std::vector<std::uint64_t> minimal_masks(std::vector<std::uint64_t> masks) {
  std::sort(masks.begin(), masks.end(), [](std::uint64_t a, std::uint64_t b) {
    const int pa = std::popcount(a);
    const int pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  std::vector<std::uint64_t> kept;
  for (auto m : masks) {
    if (std::none_of(kept.begin(), kept.end(), [&](std::uint64_t k) { return (k & ~m) == 0; })) kept.push_back(m);
  }
  return kept;
}

// Minimal sets meeting every given set: the supports of the generators of
// the intersection of the primes P_S.
std::vector<std::uint64_t> minimal_transversals(const std::vector<std::uint64_t>& sets) {
  std::vector<std::uint64_t> current{0};
  for (auto s : sets) {
    std::vector<std::uint64_t> next;
    for (auto c : current) {
      if (c & s) {
        next.push_back(c);
        continue;
      }
      for (auto r = s; r != 0; r &= r - 1) next.push_back(c | (r & -r));
    }
    current = minimal_masks(std::move(next));
  }
  return current;
}

Monomial monomial_from_mask(std::size_t n, std::uint64_t mask) {
  Monomial m(n, 0);
  for (auto r = mask; r != 0; r &= r - 1) m[static_cast<std::size_t>(std::countr_zero(r))] = 1;
  return m;
}

void require_same_space(const MonomialIdeal& a, const MonomialIdeal& b, const char* op) {
  if (!(a.space() == b.space())) throw_input(std::string(op) + ": ideals live in different variable spaces");
}

}  // namespace

MonomialIdeal::MonomialIdeal(VariableSpace space, std::vector<Monomial> generators) : space_(std::move(space)) {
  for (const auto& m : generators) {
    if (m.size() != space_.size()) throw_input("monomial length does not match its variable space");
  }
  gens_ = minimal_subset(std::move(generators));
}

MonomialIdeal MonomialIdeal::unit(VariableSpace space) {
  Monomial one(space.size(), 0);
  return MonomialIdeal(std::move(space), {std::move(one)});
}

bool MonomialIdeal::is_unit() const { return gens_.size() == 1 && total_degree(gens_.front()) == 0; }

bool MonomialIdeal::is_squarefree() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const Monomial& m) { return coverdepth::is_squarefree(m); });
}

bool MonomialIdeal::contains(const Monomial& m) const {
  if (m.size() != space_.size()) throw_input("monomial length does not match its variable space");
  return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return divides(g, m); });
}

MonomialIdeal minimalize(const VariableSpace& space, std::vector<Monomial> gens) {
  return MonomialIdeal(space, std::move(gens));
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_space(a, b, "intersect");
  std::vector<Monomial> candidates;
  candidates.reserve(a.num_generators() * b.num_generators());
  for (const auto& x : a.generators()) {
    for (const auto& y : b.generators()) candidates.push_back(lcm(x, y));
  }
  return MonomialIdeal(a.space(), std::move(candidates));
}

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_space(a, b, "product");
  std::vector<Monomial> candidates;
  candidates.reserve(a.num_generators() * b.num_generators());
  for (const auto& x : a.generators()) {
    for (const auto& y : b.generators()) candidates.push_back(multiply(x, y));
  }
  return MonomialIdeal(a.space(), std::move(candidates));
}

MonomialIdeal power(const MonomialIdeal& ideal, int k) {
  if (k < 1) throw_input("power exponent must be at least 1");
  MonomialIdeal result = ideal;
  for (int i = 1; i < k; ++i) result = product(result, ideal);
  return result;
}

MonomialIdeal prime_power(const VariableSpace& space, const std::vector<std::size_t>& positions, int k) {
  if (k < 1) throw_input("prime power exponent must be at least 1");
  for (auto p : positions) {
    if (p >= space.size()) throw_input("prime variable outside the space");
  }
  std::vector<Monomial> gens;
  Monomial m(space.size(), 0);
  // All distributions of k among the listed positions.
  auto fill = [&](auto&& self, std::size_t slot, int remaining) -> void {
    if (slot + 1 == positions.size()) {
      m[positions[slot]] = static_cast<Exponent>(remaining);
      gens.push_back(m);
      m[positions[slot]] = 0;
      return;
    }
    for (int e = remaining; e >= 0; --e) {
      m[positions[slot]] = static_cast<Exponent>(e);
      self(self, slot + 1, remaining - e);
    }
    m[positions[slot]] = 0;
  };
  if (!positions.empty()) fill(fill, 0, k);
  return MonomialIdeal(space, std::move(gens));
}

MonomialIdeal edge_ideal(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.num_vertices());
  std::vector<Monomial> gens;
  for (auto [u, v] : g.edges()) {
    Monomial m(n, 0);
    m[static_cast<std::size_t>(u - 1)] = 1;
    m[static_cast<std::size_t>(v - 1)] = 1;
    gens.push_back(std::move(m));
  }
  return MonomialIdeal(VariableSpace::simple(g.num_vertices()), std::move(gens));
}

MonomialIdeal cover_ideal(const Graph& g) {
  if (g.num_edges() == 0) throw_input("the cover ideal of an edgeless graph is the unit ideal");
  std::vector<std::uint64_t> edges;
  for (auto [u, v] : g.edges()) edges.push_back(vertex_bit(u) | vertex_bit(v));
  const auto n = static_cast<std::size_t>(g.num_vertices());
  std::vector<Monomial> gens;
  for (auto mask : minimal_transversals(edges)) gens.push_back(monomial_from_mask(n, mask));
  return MonomialIdeal(VariableSpace::simple(g.num_vertices()), std::move(gens));
}

void require_squarefree(const MonomialIdeal& ideal, const char* operation) {
  if (!ideal.is_squarefree()) throw_input(std::string(operation) + " requires a squarefree ideal");
}

MonomialIdeal alexander_dual(const MonomialIdeal& ideal) {
  require_squarefree(ideal, "alexander_dual");
  const std::size_t n = ideal.num_vars();
  if (n <= 64) {
    std::vector<std::uint64_t> supports;
    for (const auto& g : ideal.generators()) supports.push_back(support_mask(g));
    std::vector<Monomial> gens;
    // A generator 1 has empty support, no transversal exists, and the dual
    // is the zero ideal.
    for (auto mask : minimal_transversals(supports)) gens.push_back(monomial_from_mask(n, mask));
    return MonomialIdeal(ideal.space(), std::move(gens));
  }
  MonomialIdeal result = MonomialIdeal::unit(ideal.space());
  for (const auto& g : ideal.generators()) {
    std::vector<std::size_t> support;
    for (std::size_t i = 0; i < n; ++i) {
      if (g[i] != 0) support.push_back(i);
    }
    const MonomialIdeal prime = support.empty() ? MonomialIdeal::zero(ideal.space()) : prime_power(ideal.space(), support, 1);
    result = intersect(result, prime);
  }
  return result;
}

std::vector<std::vector<std::size_t>> minimal_primes(const MonomialIdeal& ideal) {
  require_squarefree(ideal, "minimal_primes");
  std::vector<std::vector<std::size_t>> primes;
  const MonomialIdeal dual = alexander_dual(ideal);
  for (const auto& g : dual.generators()) {
    std::vector<std::size_t> positions;
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (g[i] != 0) positions.push_back(i);
    }
    primes.push_back(std::move(positions));
  }
  std::sort(primes.begin(), primes.end());
  return primes;
}

MonomialIdeal symbolic_power(const MonomialIdeal& ideal, int k) {
  require_squarefree(ideal, "symbolic_power");
  if (k < 1) throw_input("symbolic power exponent must be at least 1");
  MonomialIdeal result = MonomialIdeal::unit(ideal.space());
  for (const auto& prime : minimal_primes(ideal)) {
    const MonomialIdeal component =
        prime.empty() ? MonomialIdeal::zero(ideal.space()) : prime_power(ideal.space(), prime, k);
    result = intersect(result, component);
  }
  return result;
}

MonomialIdeal symbolic_power_cover(const Graph& g, int k) {
  if (g.num_edges() == 0) throw_input("symbolic powers of the cover ideal need at least one edge");
  if (k < 1) throw_input("symbolic power exponent must be at least 1");
  const VariableSpace space = VariableSpace::simple(g.num_vertices());
  MonomialIdeal result = MonomialIdeal::unit(space);
  for (auto [u, v] : g.edges()) {
    result = intersect(result, prime_power(space, {static_cast<std::size_t>(u - 1), static_cast<std::size_t>(v - 1)}, k));
  }
  return result;
}

MonomialIdeal polarize(const MonomialIdeal& ideal) {
  const VariableSpace& space = ideal.space();
  if (!space.all_simple()) throw_input("polarize expects an ideal over simple variables");
  std::vector<Exponent> top(space.size(), 0);
  for (const auto& g : ideal.generators()) {
    for (std::size_t i = 0; i < g.size(); ++i) top[i] = std::max(top[i], g[i]);
  }
  std::vector<Variable> vars;
  std::vector<std::size_t> first(space.size(), 0);
  for (std::size_t i = 0; i < space.size(); ++i) {
    first[i] = vars.size();
    for (Exponent p = 1; p <= top[i]; ++p) vars.push_back({space[i].index, static_cast<int>(p)});
  }
  VariableSpace target(std::move(vars));
  std::vector<Monomial> gens;
  for (const auto& g : ideal.generators()) {
    Monomial m(target.size(), 0);
    for (std::size_t i = 0; i < g.size(); ++i) {
      for (Exponent p = 0; p < g[i]; ++p) m[first[i] + p] = 1;
    }
    gens.push_back(std::move(m));
  }
  return MonomialIdeal(std::move(target), std::move(gens));
}

VariableMap identity_map(const VariableSpace& source, const VariableSpace& target) {
  VariableMap map;
  for (const auto& v : source.variables()) {
    const auto pos = target.find(v);
    if (pos == target.size()) throw_input("variable " + v.name() + " has no counterpart in the target space");
    map.push_back(pos);
  }
  return map;
}

MonomialIdeal embed(const MonomialIdeal& ideal, const VariableSpace& target, const VariableMap& map) {
  if (map.size() != ideal.num_vars()) throw_input("variable map has the wrong length");
  std::vector<bool> hit(target.size(), false);
  for (auto pos : map) {
    if (pos >= target.size() || hit[pos]) throw_input("variable map is not injective into the target space");
    hit[pos] = true;
  }
  std::vector<Monomial> gens;
  for (const auto& g : ideal.generators()) {
    Monomial m(target.size(), 0);
    for (std::size_t i = 0; i < g.size(); ++i) m[map[i]] = g[i];
    gens.push_back(std::move(m));
  }
  return MonomialIdeal(target, std::move(gens));
}

bool equal(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_space(a, b, "equal");
  return a.generators() == b.generators();
}

bool equal(const MonomialIdeal& a, const MonomialIdeal& b, const VariableMap& map) {
  return embed(a, b.space(), map).generators() == b.generators();
}

}  // namespace coverdepth
