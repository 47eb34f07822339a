#include <doctest.h>

#include "coverdepth/depth.hpp"
#include "coverdepth/errors.hpp"
#include "coverdepth/layered.hpp"
#include "oracles.hpp"

using namespace coverdepth;

namespace {

const FieldChoice kQ = FieldChoice::rationals();
const FieldChoice kF2 = FieldChoice::prime(2);

MonomialIdeal ideal(int n, std::vector<Monomial> gens) { return MonomialIdeal(VariableSpace::simple(n), std::move(gens)); }

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

// depth(S/J(g)^(k)) from the brute-force symbolic power, polarized, with the
// projective dimension read off the all-subsets Hochster oracle.
int depth_by_oracle(const Graph& g, int k) {
  const auto gens = oracle::symbolic_cover_bruteforce(g, k);
  const auto pol = polarize(MonomialIdeal(VariableSpace::simple(g.num_vertices()), {gens.begin(), gens.end()}));
  int pd = 0;
  for (const auto& [ij, b] : oracle::hochster_all_subsets(pol)) pd = std::max(pd, ij.first);
  return g.num_vertices() - pd;
}

}  // namespace

TEST_CASE("pd, reg and depth examples") {
  for (int n = 1; n <= 5; ++n) {
    std::vector<Monomial> gens;
    for (int i = 0; i < n; ++i) {
      Monomial m(static_cast<std::size_t>(n), 0);
      m[static_cast<std::size_t>(i)] = 1;
      gens.push_back(m);
    }
    const auto r = pd_reg_depth(ideal(n, gens), kQ);
    CHECK(r.depth == 0);
    CHECK(r.pd == n);
    CHECK(r.reg == 0);
  }
  const auto m = ideal(2, {{1, 0}, {0, 1}});
  for (int k = 1; k <= 4; ++k) {
    const auto r = pd_reg_depth(power(m, k), kQ);
    CHECK(r.depth == 0);
    CHECK(r.reg == k - 1);
  }
  const auto jp4 = pd_reg_depth(cover_ideal(path(4)), kQ);
  CHECK(jp4.pd == 2);
  CHECK(jp4.depth == 2);
  CHECK(pd_reg_depth(MonomialIdeal::zero(VariableSpace::simple(3)), kQ) == PdRegDepth{0, 0, 3});
  CHECK_THROWS_AS(pd_reg_depth(MonomialIdeal::unit(VariableSpace::simple(2)), kQ), InputError);
}

TEST_CASE("depth of symbolic powers of cover ideals: examples") {
  for (int k = 1; k <= 5; ++k) CHECK(depth_symbolic_cover(complete(2), k, kQ) == 0);
  CHECK(depth_symbolic_cover(path(4), 1, kQ) == 2);
  CHECK(depth_symbolic_cover(path(4), 2, kQ) == 1);
  CHECK(depth_symbolic_cover(path(4), 3, kQ) == 1);
  // K3 is the whiskering of K2 by one block.
  CHECK(depth_symbolic_cover(complete(3), 1, kQ) == 1);
  CHECK(depth_symbolic_cover(complete(3), 2, kQ) == 1);
  CHECK_THROWS_AS(depth_symbolic_cover(Graph(2, {}), 1, kQ), InputError);
  CHECK_THROWS_AS(depth_symbolic_cover(complete(2), 0, kQ), InputError);
  CHECK_THROWS_AS(depth_symbolic_cover(path(5), 4, kQ, 18), ResourceError);
}

TEST_CASE("edge ideal regularity examples") {
  CHECK(reg_edge_ideal(complete(2), kQ) == 2);
  CHECK(reg_edge_ideal(path(4), kQ) == 2);
  CHECK(induced_matching_number(path(4)) == 1);
  CHECK(reg_edge_ideal(cycle(5), kQ) == 3);
  CHECK(oracle::regularity_bruteforce(cycle(5)) == 2);
  CHECK_THROWS_AS(reg_edge_ideal(Graph(3, {}), kQ), InputError);
  CHECK_THROWS_AS(reg_edge_ideal(path(5), kQ, 4), ResourceError);
}

TEST_CASE("property: edge ideal regularity matches the all-subsets oracle and the Betti table") {
  for (int n = 2; n <= 6; ++n) {
    for (const auto& g : isomorphism_classes(n, {})) {
      if (g.num_edges() == 0) continue;
      const int reg = reg_edge_ideal(g, kQ);
      CHECK(reg == oracle::regularity_bruteforce(g) + 1);
      CHECK(reg == betti_table_squarefree(edge_ideal(g), kQ).reg() + 1);
      CHECK(reg == reg_edge_ideal(g, kF2));
    }
  }
}

TEST_CASE("property: both depth routes agree with the brute-force oracle") {
  for (int n = 2; n <= 4; ++n) {
    for (const auto& g : isomorphism_classes(n, {false, true})) {
      for (int k = 1; k <= 3; ++k) {
        const auto routes = depth_symbolic_cover_routes(g, k, kQ);
        CHECK(routes.via_polarization == routes.via_regularity);
        if (n * k <= 9) CHECK(routes.depth == depth_by_oracle(g, k));
      }
    }
  }
}

TEST_CASE("property: depth plus projective dimension is the variable count") {
  for (int n = 2; n <= 5; ++n) {
    for (const auto& g : isomorphism_classes(n, {false, true})) {
      for (int k = 1; k <= 2; ++k) {
        const auto sym = symbolic_power_cover(g, k);
        const auto r = pd_reg_depth(sym, kQ);
        CHECK(r.depth + r.pd == n);
        CHECK(r.depth == depth_symbolic_cover(g, k, kQ));
        const auto pol = pd_reg_depth(polarize(sym), kQ);
        CHECK(pol.pd == r.pd);
        CHECK(pol.reg == r.reg);
      }
    }
  }
}

TEST_CASE("property: Katzman lower bound and the ordered matching upper bound") {
  for (int n = 2; n <= 6; ++n) {
    for (const auto& g : isomorphism_classes(n, {})) {
      if (g.num_edges() == 0) continue;
      const int reg = reg_edge_ideal(g, kQ);
      CHECK(reg - 1 >= induced_matching_number(g));
      CHECK(reg <= ordered_matching_number(g).size + 1);
    }
  }
}

TEST_CASE("property: depth is relabeling invariant") {
  std::mt19937 rng(4);
  for (const auto& g : isomorphism_classes(5, {false, true})) {
    const Graph h = g.relabeled(oracle::random_permutation(5, rng));
    for (int k = 1; k <= 2; ++k) CHECK(depth_symbolic_cover(g, k, kQ) == depth_symbolic_cover(h, k, kQ));
  }
}
