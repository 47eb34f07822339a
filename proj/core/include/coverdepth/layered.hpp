#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "coverdepth/graph.hpp"
#include "coverdepth/ideal.hpp"

namespace coverdepth {

struct LayeredVertex {
  Vertex base = 0;  // i
  int layer = 0;    // p

  friend bool operator==(const LayeredVertex&, const LayeredVertex&) = default;
  friend auto operator<=>(const LayeredVertex&, const LayeredVertex&) = default;
};

using LayeredEdge = std::pair<LayeredVertex, LayeredVertex>;

// The graph G_k on vertices (i, p), 1 <= i <= n, 1 <= p <= k, where
// {(i,p), (j,q)} is an edge iff {i, j} is a base edge and p + q <= k + 1.
// The constructor rejects edges within one base vertex or with p + q > k + 1.
class LayeredGraph {
 public:
  LayeredGraph(int base_n, int level, std::vector<LayeredEdge> edges);

  int base_n() const { return base_n_; }
  int level() const { return level_; }
  int num_vertices() const { return base_n_ * level_; }
  // Sorted; each edge has its smaller endpoint first.
  const std::vector<LayeredEdge>& edges() const { return edges_; }

  // Flat label (i - 1) * k + p, matching positions in VariableSpace::layered.
  Vertex flat(const LayeredVertex& v) const;
  LayeredVertex unflat(Vertex v) const;
  // The same graph over flat labels.
  const Graph& as_graph() const { return flat_; }
  bool has_edge(const LayeredVertex& u, const LayeredVertex& v) const;

 private:
  int base_n_;
  int level_;
  std::vector<LayeredEdge> edges_;
  Graph flat_;
};

using LayeredMatching = std::vector<LayeredEdge>;

// Throws InputError for k < 1.
LayeredGraph build_gk(const Graph& g, int k);

// The cover ideal of G_k over VariableSpace::layered(n, k).
MonomialIdeal layered_cover_ideal(const LayeredGraph& lg);

struct PolarizationCheck {
  bool equal = false;
  MonomialIdeal polarized;  // (J(G)^(k))^pol
  MonomialIdeal cover;      // J(G_k)
};

// Compares the polarized symbolic power with J(G_k) under x_{i,p} <-> (i,p).
// Throws InputError on edgeless graphs.
PolarizationCheck polarization_identity(const Graph& g, int k);
bool check_polarization_identity(const Graph& g, int k);

// Lower layer bound under which the main construction is defined.
int main_matching_threshold(int t, int s);

// The matching built from an s-ordered certificate (s >= 2) in the depth
// stability argument. Certificate pairs (a_i, b_i) play x_i and x_{t+i}.
// Throws InputError for an invalid certificate or s < 2, and
// PreconditionError when k < 2t - 2s + 2.
LayeredMatching proof_matching_main(const Graph& g, const Matching& cert, int s, int k);

// The matching used for bipartite graphs. The construction is only induced
// when the b-side of the certificate is independent; that hypothesis is not
// enforced here. Throws InputError for non-bipartite graphs or an invalid
// certificate, PreconditionError when k < t.
LayeredMatching proof_matching_bipartite(const Graph& g, const Matching& cert, int k);

// A maximum ordered matching whose b-side is independent, if one of size
// ord-match(g) exists.
std::optional<Matching> find_independent_b_certificate(const Graph& g);

// Throws InputError when some pair is not an edge of lg.
bool is_induced_matching_layered(const LayeredGraph& lg, const LayeredMatching& m);

}  // namespace coverdepth
