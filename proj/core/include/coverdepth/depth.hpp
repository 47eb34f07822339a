#pragma once

#include <cstddef>

#include "coverdepth/betti.hpp"
#include "coverdepth/graph.hpp"
#include "coverdepth/ideal.hpp"
#include "coverdepth/linalg.hpp"

namespace coverdepth {

// Invariants of the quotient S/I.
struct PdRegDepth {
  int pd = 0;
  int reg = 0;
  int depth = 0;

  friend bool operator==(const PdRegDepth&, const PdRegDepth&) = default;
};

// Non-squarefree ideals are polarized first; depth is measured against the
// ideal's own variable count. The guard bounds the (polarized) variable
// count. Throws InputError for the unit ideal.
PdRegDepth pd_reg_depth(const MonomialIdeal& ideal, const FieldChoice& field,
                        std::size_t guard = kDefaultHochsterGuard);

// Regularity of the ideal I(g), that is reg(S/I(g)) + 1, from the reduced
// homology of independence complexes of induced subgraphs. Throws InputError
// for edgeless graphs and ResourceError above the vertex guard.
int reg_edge_ideal(const Graph& g, const FieldChoice& field, std::size_t guard = kDefaultHochsterGuard);

// Depth of S/J(g)^(k) by both routes.
struct DepthRoutes {
  int depth = 0;
  int via_polarization = 0;  // n - pd of the polarized ideal's quotient
  int via_regularity = 0;    // n - reg(I(G_k))
};

// Throws InputError for edgeless graphs or k < 1, ResourceError when n * k
// exceeds the guard, InternalError when the routes disagree.
DepthRoutes depth_symbolic_cover_routes(const Graph& g, int k, const FieldChoice& field,
                                        std::size_t guard = kDefaultHochsterGuard);

inline int depth_symbolic_cover(const Graph& g, int k, const FieldChoice& field,
                                std::size_t guard = kDefaultHochsterGuard) {
  return depth_symbolic_cover_routes(g, k, field, guard).depth;
}

}  // namespace coverdepth
