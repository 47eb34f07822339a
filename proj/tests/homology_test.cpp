#include <doctest.h>

#include <random>

#include "coverdepth/betti.hpp"
#include "coverdepth/complex.hpp"
#include "coverdepth/errors.hpp"
#include "coverdepth/linalg.hpp"
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

Graph complete(int n) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int u = 1; u <= n; ++u) {
    for (int v = u + 1; v <= n; ++v) edges.emplace_back(u, v);
  }
  return Graph(n, edges);
}

SparseMatrix to_sparse(const std::vector<std::vector<long long>>& dense) {
  SparseMatrix m;
  m.rows = dense.size();
  const std::size_t cols = dense.empty() ? 0 : dense[0].size();
  m.columns.resize(cols);
  for (std::size_t c = 0; c < cols; ++c) {
    for (std::size_t r = 0; r < dense.size(); ++r) {
      if (dense[r][c] != 0) m.columns[c].push_back({static_cast<std::uint32_t>(r), dense[r][c]});
    }
  }
  return m;
}

std::vector<std::vector<mpq_class>> to_q(const std::vector<std::vector<long long>>& dense) {
  std::vector<std::vector<mpq_class>> out;
  for (const auto& row : dense) {
    std::vector<mpq_class> r;
    for (long long x : row) r.emplace_back(mpz_class(std::to_string(x)));
    out.push_back(std::move(r));
  }
  return out;
}

std::map<int, std::size_t> dims_as_map(const std::vector<std::size_t>& dims) {
  std::map<int, std::size_t> out;
  for (std::size_t d = 0; d < dims.size(); ++d) {
    if (dims[d] != 0) out[static_cast<int>(d) - 1] = dims[d];
  }
  return out;
}

std::vector<int> vertices(std::size_t n) {
  std::vector<int> out;
  for (std::size_t v = 0; v < n; ++v) out.push_back(static_cast<int>(v));
  return out;
}

std::vector<std::size_t> brute_homology(const SimplicialComplex& c, long long p = 0) {
  return oracle::homology_bruteforce(
      vertices(c.num_vertices()),
      [&](const std::vector<int>& f) {
        FaceMask m = 0;
        for (int v : f) m |= FaceMask{1} << v;
        return c.is_face(m);
      },
      p);
}

SimplicialComplex random_complex(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<int> count(0, 6);
  std::uniform_int_distribution<FaceMask> mask(1, (FaceMask{1} << n) - 1);
  std::vector<FaceMask> nonfaces;
  const int c = count(rng);
  for (int i = 0; i < c; ++i) nonfaces.push_back(mask(rng));
  return SimplicialComplex(n, nonfaces);
}

}  // namespace

TEST_CASE("field choice") {
  CHECK(kQ.name() == "Q");
  CHECK(kF2.name() == "F2");
  CHECK(FieldChoice::prime(7).characteristic() == 7);
  CHECK_THROWS_AS(FieldChoice::prime(4), InputError);
  CHECK_THROWS_AS(FieldChoice::prime(1), InputError);
}

TEST_CASE("rank over Q matches dense exact elimination, including overflow") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t rows = 1 + rng() % 7;
    const std::size_t cols = 1 + rng() % 7;
    const bool big = trial % 3 == 0;
    std::vector<std::vector<long long>> dense(rows, std::vector<long long>(cols, 0));
    for (auto& row : dense) {
      for (auto& x : row) {
        if (rng() % 3 == 0) continue;
        const long long mag = big ? static_cast<long long>(rng() % (1ll << 40)) : static_cast<long long>(rng() % 5);
        x = rng() % 2 ? mag : -mag;
      }
    }
    // Force dependencies now and then.
    if (rows >= 3 && trial % 2 == 0) {
      for (std::size_t c = 0; c < cols; ++c) dense[2][c] = dense[0][c] - dense[1][c];
    }
    CHECK(rank(to_sparse(dense), kQ) == oracle::dense_rank_q(to_q(dense)));
    CHECK(rank(to_sparse(dense), kF2) == oracle::dense_rank_mod(dense, 2));
    CHECK(rank(to_sparse(dense), FieldChoice::prime(3)) == oracle::dense_rank_mod(dense, 3));
  }
}

TEST_CASE("rank differs between Q and F2 on a torsion example") {
  // [[1, 1], [1, -1]] has determinant -2.
  const std::vector<std::vector<long long>> dense = {{1, 1}, {1, -1}};
  CHECK(rank(to_sparse(dense), kQ) == 2);
  CHECK(rank(to_sparse(dense), kF2) == 1);
}

TEST_CASE("Stanley-Reisner complex examples") {
  const auto two_points = stanley_reisner_complex(ideal(2, {{1, 1}}));
  CHECK(two_points.facets() == std::vector<FaceMask>{0b01, 0b10});
  const auto tri = stanley_reisner_complex(edge_ideal(complete(3)));
  CHECK(tri.facets() == std::vector<FaceMask>{0b001, 0b010, 0b100});
  const auto simplex = stanley_reisner_complex(MonomialIdeal::zero(VariableSpace::simple(3)));
  CHECK(simplex.facets() == std::vector<FaceMask>{0b111});
  CHECK_THROWS_AS(stanley_reisner_complex(ideal(2, {{2, 0}})), InputError);
  CHECK_THROWS_AS(stanley_reisner_complex(MonomialIdeal::unit(VariableSpace::simple(2))), InputError);
}

TEST_CASE("independence complex examples") {
  CHECK(independence_complex(complete(2)).facets() == std::vector<FaceMask>{0b01, 0b10});
  CHECK(independence_complex(path(3)).facets() == std::vector<FaceMask>{0b010, 0b101});
  CHECK(independence_complex(path(3)).faces() == std::vector<FaceMask>{0b000, 0b001, 0b010, 0b100, 0b101});
  CHECK(independence_complex(Graph(3, {})).facets() == std::vector<FaceMask>{0b111});
}

TEST_CASE("reduced homology examples") {
  const SimplicialComplex simplex(3, {});
  CHECK(reduced_homology_dims(simplex, kQ).is_zero());
  const SimplicialComplex points(2, {0b11});
  CHECK(reduced_homology_dims(points, kQ).as_map() == std::map<int, std::size_t>{{0, 1}});
  const SimplicialComplex hollow(3, {0b111});
  CHECK(reduced_homology_dims(hollow, kQ).as_map() == std::map<int, std::size_t>{{1, 1}});
  const SimplicialComplex empty_set_only(2, {0b01, 0b10});
  CHECK(reduced_homology_dims(empty_set_only, kQ).as_map() == std::map<int, std::size_t>{{-1, 1}});
  const SimplicialComplex void_complex(2, {0});
  CHECK(void_complex.is_void());
  CHECK(reduced_homology_dims(void_complex, kQ).is_zero());
  CHECK_THROWS_AS(reduced_homology_dims(SimplicialComplex(5, {}), kQ, 4), ResourceError);
}

TEST_CASE("real projective plane separates Q from F2") {
  // The 6-vertex triangulation of RP^2.
  const std::vector<std::vector<int>> tris = {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 5, 1},
                                              {1, 2, 4}, {2, 3, 5}, {3, 4, 1}, {4, 5, 2}, {5, 1, 3}};
  std::vector<FaceMask> facets;
  for (const auto& t : tris) {
    FaceMask m = 0;
    for (int v : t) m |= FaceMask{1} << v;
    facets.push_back(m);
  }
  const auto q = homology::from_facets(facets, kQ);
  const auto f2 = homology::from_facets(facets, kF2);
  CHECK(q.is_zero());
  CHECK(f2.as_map() == std::map<int, std::size_t>{{1, 1}, {2, 1}});
  CHECK(homology::from_facets_unreduced(facets, kF2) == f2);
}

TEST_CASE("property: homology engine matches brute-force boundary ranks") {
  std::mt19937 rng(1234);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng() % 6;
    const auto c = random_complex(rng, n);
    CAPTURE(c.minimal_nonfaces());
    const auto q = reduced_homology_dims(c, kQ);
    CHECK(q.as_map() == dims_as_map(brute_homology(c)));
    CHECK(reduced_homology_dims(c, kF2).as_map() == dims_as_map(brute_homology(c, 2)));
    if (!c.is_void()) {
      const auto facets = c.facets();
      CHECK(homology::from_facets(facets, kQ) == homology::from_facets_unreduced(facets, kQ));
      CHECK(homology::from_facets(facets, kF2) == homology::from_facets_unreduced(facets, kF2));
    }
  }
}

TEST_CASE("property: strong collapse keeps a sub-collection of the facets") {
  std::mt19937 rng(77);
  for (int trial = 0; trial < 200; ++trial) {
    const auto c = random_complex(rng, 1 + rng() % 7);
    if (c.is_void()) continue;
    const auto facets = c.facets();
    const auto collapsed = homology::strong_collapse(facets);
    CHECK_FALSE(collapsed.empty());
    for (FaceMask f : collapsed) {
      bool inside = false;
      for (FaceMask g : facets) inside = inside || (f & ~g) == 0;
      CHECK(inside);
    }
  }
}

TEST_CASE("property: homology is invariant under vertex relabeling") {
  std::mt19937 rng(55);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + rng() % 5;
    const auto c = random_complex(rng, n);
    std::vector<int> perm = vertices(n);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<FaceMask> moved;
    for (FaceMask f : c.minimal_nonfaces()) {
      FaceMask m = 0;
      for (std::size_t v = 0; v < n; ++v) {
        if (f & (FaceMask{1} << v)) m |= FaceMask{1} << perm[v];
      }
      moved.push_back(m);
    }
    CHECK(reduced_homology_dims(c, kQ) == reduced_homology_dims(SimplicialComplex(n, moved), kQ));
  }
}

TEST_CASE("face enumeration respects the cap") {
  std::vector<FaceMask> out;
  CHECK(homology::enumerate_faces(0b1111, {}, 100, out));
  CHECK(out.size() == 16);
  out.clear();
  CHECK_FALSE(homology::enumerate_faces(0b1111, {}, 5, out));
  out.clear();
  CHECK(homology::enumerate_faces(0b111, {0b011}, 100, out));
  CHECK(out.size() == 6);
}

TEST_CASE("Betti table examples") {
  const auto m = betti_table_squarefree(ideal(2, {{1, 0}, {0, 1}}), kQ);
  CHECK(m.beta(0, 0) == 1);
  CHECK(m.beta(1, 1) == 2);
  CHECK(m.beta(2, 2) == 1);
  CHECK(m.pd() == 2);
  CHECK(m.reg() == 0);
  const auto k3 = betti_table_squarefree(edge_ideal(complete(3)), kQ);
  CHECK(k3.pd() == 2);
  CHECK(k3.reg() == 1);
  const auto jp4 = ideal(4, {{0, 1, 1, 0}, {1, 0, 1, 0}, {0, 1, 0, 1}});
  CHECK(jp4 == cover_ideal(path(4)));
  CHECK(betti_table_squarefree(jp4, kQ).pd() == 2);
  CHECK(taylor_betti_oracle(jp4, kQ) == betti_table_squarefree(jp4, kQ));
  CHECK_THROWS_AS(betti_table_squarefree(ideal(2, {{2, 0}}), kQ), InputError);
  CHECK_THROWS_AS(betti_table_squarefree(MonomialIdeal::unit(VariableSpace::simple(2)), kQ), InputError);
  CHECK_THROWS_AS(betti_table_squarefree(edge_ideal(path(5)), kQ, 4), ResourceError);
}

TEST_CASE("Taylor oracle examples") {
  CHECK(taylor_betti_oracle(ideal(3, {{1, 2, 0}}), kQ).pd() == 1);
  const auto sq = taylor_betti_oracle(ideal(2, {{2, 0}, {1, 1}, {0, 2}}), kQ);
  CHECK(sq.pd() == 2);
  CHECK(sq.beta(1, 2) == 3);
  CHECK(sq.beta(2, 3) == 2);
  const auto zero = taylor_betti_oracle(MonomialIdeal::zero(VariableSpace::simple(2)), kQ);
  CHECK(zero.entries() == std::map<std::pair<int, int>, std::size_t>{{{0, 0}, 1}});
  CHECK_THROWS_AS(taylor_betti_oracle(MonomialIdeal::unit(VariableSpace::simple(2)), kQ), InputError);
  std::vector<Monomial> many;
  for (int i = 0; i < 5; ++i) {
    Monomial x(5, 0);
    x[static_cast<std::size_t>(i)] = 1;
    many.push_back(x);
  }
  CHECK_THROWS_AS(taylor_betti_oracle(ideal(5, many), kQ, 4), ResourceError);
}

TEST_CASE("Betti table JSON form") {
  const auto t = betti_table_squarefree(ideal(2, {{1, 0}, {0, 1}}), kQ);
  CHECK(t.to_json().dump() == R"({"entries":[[0,0,1],[1,1,2],[2,2,1]],"num_vars":2})");
}

TEST_CASE("property: Hochster, Taylor and the all-subsets oracle agree on corpus ideals") {
  for (int n = 2; n <= 5; ++n) {
    for (const auto& g : isomorphism_classes(n, {})) {
      if (g.num_edges() == 0) continue;
      for (const auto& i : {edge_ideal(g), cover_ideal(g)}) {
        for (const auto& [field, p] : {std::pair{kQ, 0ll}, std::pair{kF2, 2ll}}) {
          const auto hochster = betti_table_squarefree(i, field);
          CHECK(hochster.entries() == oracle::hochster_all_subsets(i, p));
          if (i.num_generators() <= 10) CHECK(taylor_betti_oracle(i, field) == hochster);
          CHECK(hochster.beta(0, 0) == 1);
          for (const auto& [ij, b] : hochster.entries()) {
            CHECK(ij.first <= static_cast<int>(i.num_vars()));
            CHECK(ij.first <= ij.second);
          }
        }
      }
    }
  }
}

TEST_CASE("property: Hochster agrees with Taylor on random squarefree ideals") {
  std::mt19937 rng(8);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 4);
    std::vector<Monomial> gens;
    const int c = 1 + static_cast<int>(rng() % 7);
    for (int i = 0; i < c; ++i) {
      Monomial m(static_cast<std::size_t>(n), 0);
      for (auto& e : m) e = rng() % 3 == 0 ? 1 : 0;
      if (total_degree(m) == 0) m[0] = 1;
      gens.push_back(m);
    }
    const auto i = ideal(n, gens);
    CHECK(betti_table_squarefree(i, kQ) == taylor_betti_oracle(i, kQ));
    CHECK(betti_table_squarefree(i, kF2) == taylor_betti_oracle(i, kF2));
  }
}

TEST_CASE("property: Taylor Betti numbers of non-squarefree ideals match their polarization") {
  std::mt19937 rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Monomial> gens;
    const int c = 1 + static_cast<int>(rng() % 5);
    for (int i = 0; i < c; ++i) {
      Monomial m = {static_cast<Exponent>(rng() % 3), static_cast<Exponent>(rng() % 3), static_cast<Exponent>(rng() % 3)};
      if (total_degree(m) == 0) m[1] = 2;
      gens.push_back(m);
    }
    const auto i = ideal(3, gens);
    const auto direct = taylor_betti_oracle(i, kQ);
    const auto pol = betti_table_squarefree(polarize(i), kQ);
    CHECK(direct.entries() == pol.entries());
  }
}
