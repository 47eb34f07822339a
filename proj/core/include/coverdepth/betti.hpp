#pragma once

#include <cstddef>
#include <map>
#include <utility>

#include <nlohmann/json.hpp>

#include "coverdepth/complex.hpp"
#include "coverdepth/graph.hpp"
#include "coverdepth/ideal.hpp"
#include "coverdepth/linalg.hpp"

namespace coverdepth {

inline constexpr std::size_t kDefaultTaylorGuard = 12;

// Homological degree convention of Hochster's formula:
//   beta_{i,sigma}(S/I) = dim H~_{|sigma| - i - kHochsterShift}(Delta|sigma).
inline constexpr int kHochsterShift = 1;

// Graded Betti numbers beta_{i,j} of a quotient S/I. Only nonzero entries
// are stored.
class BettiTable {
 public:
  BettiTable() = default;
  explicit BettiTable(std::size_t num_vars) : num_vars_(num_vars) {}

  std::size_t num_vars() const { return num_vars_; }
  const std::map<std::pair<int, int>, std::size_t>& entries() const { return entries_; }

  std::size_t beta(int i, int j) const;
  void add(int i, int j, std::size_t value);

  // Largest i with a nonzero entry.
  int pd() const;
  // Largest j - i over nonzero entries.
  int reg() const;

  // {"num_vars": n, "entries": [[i, j, beta], ...]} sorted by (i, j).
  nlohmann::json to_json() const;

  friend bool operator==(const BettiTable&, const BettiTable&) = default;

 private:
  std::size_t num_vars_ = 0;
  std::map<std::pair<int, int>, std::size_t> entries_;
};

// Vertices are the variable positions of the ideal. Throws InputError for
// non-squarefree input or the unit ideal.
SimplicialComplex stanley_reisner_complex(const MonomialIdeal& ideal);

// Vertex v of the graph becomes vertex v - 1 of the complex.
SimplicialComplex independence_complex(const Graph& g);

// Hochster's formula summed over the lcm lattice of the generators. Throws
// InputError for non-squarefree input or the unit ideal, and ResourceError
// when the ring has more than `guard` variables.
BettiTable betti_table_squarefree(const MonomialIdeal& ideal, const FieldChoice& field,
                                  std::size_t guard = kDefaultHochsterGuard);

// Minimal Betti numbers read off the Taylor complex, one multidegree strand
// at a time. Works for any monomial ideal other than the unit ideal. Throws
// ResourceError when there are more than `guard` generators.
BettiTable taylor_betti_oracle(const MonomialIdeal& ideal, const FieldChoice& field,
                               std::size_t guard = kDefaultTaylorGuard);

}  // namespace coverdepth
