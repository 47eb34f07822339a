#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "coverdepth/graph.hpp"

namespace coverdepth {

// A variable is either simple, x_i, or layered, x_{i,p}. Layered variables
// live in polarized rings and in the rings of layered graphs.
struct Variable {
  int index = 0;
  int layer = 0;  // 0 for simple variables

  bool is_layered() const { return layer != 0; }
  // "x3" or "x_3_2".
  std::string name() const;

  friend bool operator==(const Variable&, const Variable&) = default;
  friend auto operator<=>(const Variable&, const Variable&) = default;
};

// Ordered list of distinct variables. Position in the list is the position
// in every exponent vector over this space.
class VariableSpace {
 public:
  VariableSpace() = default;
  explicit VariableSpace(std::vector<Variable> variables);

  // x1..xn
  static VariableSpace simple(int n);
  // x_{i,p} for 1 <= i <= n, 1 <= p <= k, in (i, p) lexicographic order.
  static VariableSpace layered(int n, int k);

  std::size_t size() const { return vars_.size(); }
  const Variable& operator[](std::size_t pos) const { return vars_[pos]; }
  const std::vector<Variable>& variables() const { return vars_; }
  bool all_simple() const;
  // Position of v, or size() when absent.
  std::size_t find(const Variable& v) const;

  friend bool operator==(const VariableSpace&, const VariableSpace&) = default;

 private:
  std::vector<Variable> vars_;
};

using Exponent = std::uint32_t;
using Monomial = std::vector<Exponent>;

Monomial lcm(const Monomial& a, const Monomial& b);
// Throws InputError if an exponent would overflow.
Monomial multiply(const Monomial& a, const Monomial& b);
bool divides(const Monomial& a, const Monomial& b);
std::uint64_t total_degree(const Monomial& m);
bool is_squarefree(const Monomial& m);
// Bitmask of positions with nonzero exponent (space must have <= 64 vars).
std::uint64_t support_mask(const Monomial& m);

// A monomial ideal stored by its minimal generators, sorted
// lexicographically by exponent vector. No generators is the zero ideal; the
// single generator 1 is the unit ideal.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  // Minimalizes; throws InputError if an exponent vector has the wrong length.
  MonomialIdeal(VariableSpace space, std::vector<Monomial> generators);

  static MonomialIdeal zero(VariableSpace space) { return MonomialIdeal(std::move(space), {}); }
  static MonomialIdeal unit(VariableSpace space);

  const VariableSpace& space() const { return space_; }
  std::size_t num_vars() const { return space_.size(); }
  const std::vector<Monomial>& generators() const { return gens_; }
  std::size_t num_generators() const { return gens_.size(); }

  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const;
  bool is_squarefree() const;
  bool contains(const Monomial& m) const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  VariableSpace space_;
  std::vector<Monomial> gens_;
};

// Removes duplicates and every monomial strictly divisible by another.
MonomialIdeal minimalize(const VariableSpace& space, std::vector<Monomial> gens);

// Throws InputError when the spaces differ.
MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b);
// Throws InputError for k < 1.
MonomialIdeal power(const MonomialIdeal& ideal, int k);

// The prime generated by the listed positions, optionally raised to k.
MonomialIdeal prime_power(const VariableSpace& space, const std::vector<std::size_t>& positions, int k);

MonomialIdeal edge_ideal(const Graph& g);
// Generators are the minimal vertex covers. Throws InputError on edgeless
// graphs, whose cover ideal would be the unit ideal.
MonomialIdeal cover_ideal(const Graph& g);

// Minimal primes of a squarefree ideal, each as sorted variable positions.
std::vector<std::vector<std::size_t>> minimal_primes(const MonomialIdeal& ideal);

MonomialIdeal symbolic_power(const MonomialIdeal& ideal, int k);
// Intersection of (x_i, x_j)^k over the edges of g.
MonomialIdeal symbolic_power_cover(const Graph& g, int k);

// Requires a space of simple variables. The result lives on x_{i,1..a_i}
// where a_i is the largest exponent of x_i among the generators.
MonomialIdeal polarize(const MonomialIdeal& ideal);

MonomialIdeal alexander_dual(const MonomialIdeal& ideal);

// Positions in a target space, one entry per source position. Must be
// injective.
using VariableMap = std::vector<std::size_t>;

// Map each source variable to the equal variable of the target space.
// Throws InputError when some source variable is missing from the target.
VariableMap identity_map(const VariableSpace& source, const VariableSpace& target);

// Transports the ideal into the target space along the map.
MonomialIdeal embed(const MonomialIdeal& ideal, const VariableSpace& target, const VariableMap& map);

// Same space required.
bool equal(const MonomialIdeal& a, const MonomialIdeal& b);
// Compare after transporting a along the explicit map into b's space.
bool equal(const MonomialIdeal& a, const MonomialIdeal& b, const VariableMap& map);

void require_squarefree(const MonomialIdeal& ideal, const char* operation);

}  // namespace coverdepth
