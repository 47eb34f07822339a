#include "coverdepth/layered.hpp"

#include <algorithm>
#include <string>

#include "coverdepth/errors.hpp"

namespace coverdepth {

namespace {

Graph flatten(int base_n, int level, const std::vector<LayeredEdge>& edges) {
  std::vector<std::pair<Vertex, Vertex>> flat;
  flat.reserve(edges.size());
  for (const auto& [u, v] : edges) {
    flat.emplace_back((u.base - 1) * level + u.layer, (v.base - 1) * level + v.layer);
  }
  return Graph(base_n * level, flat);
}

std::string describe(const LayeredVertex& v) {
  return "(" + std::to_string(v.base) + "," + std::to_string(v.layer) + ")";
}

}  // namespace

LayeredGraph::LayeredGraph(int base_n, int level, std::vector<LayeredEdge> edges)
    : base_n_(base_n), level_(level), edges_(std::move(edges)) {
  if (base_n < 0 || level < 1) throw_input("layered graph needs n >= 0 and k >= 1");
  if (base_n * level > kMaxGraphVertices) throw_input("layered graph exceeds 64 vertices");
  for (auto& [u, v] : edges_) {
    for (const auto& w : {u, v}) {
      if (w.base < 1 || w.base > base_n || w.layer < 1 || w.layer > level) {
        throw_input("layered vertex " + describe(w) + " out of range");
      }
    }
    if (u.base == v.base) throw_input("layered edge " + describe(u) + " - " + describe(v) + " joins one base vertex");
    if (u.layer + v.layer > level + 1) {
      throw_input("layered edge " + describe(u) + " - " + describe(v) + " has layers summing above k + 1");
    }
    if (v < u) std::swap(u, v);
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  flat_ = flatten(base_n_, level_, edges_);
}

Vertex LayeredGraph::flat(const LayeredVertex& v) const { return (v.base - 1) * level_ + v.layer; }

LayeredVertex LayeredGraph::unflat(Vertex v) const { return {(v - 1) / level_ + 1, (v - 1) % level_ + 1}; }

bool LayeredGraph::has_edge(const LayeredVertex& u, const LayeredVertex& v) const {
  for (const auto& w : {u, v}) {
    if (w.base < 1 || w.base > base_n_ || w.layer < 1 || w.layer > level_) return false;
  }
  return flat_.has_edge(flat(u), flat(v));
}

LayeredGraph build_gk(const Graph& g, int k) {
  if (k < 1) throw_input("layer count k must be at least 1");
  std::vector<LayeredEdge> edges;
  for (auto [i, j] : g.edges()) {
    for (int p = 1; p <= k; ++p) {
      for (int q = 1; p + q <= k + 1; ++q) edges.push_back({{i, p}, {j, q}});
    }
  }
  return LayeredGraph(g.num_vertices(), k, std::move(edges));
}

MonomialIdeal layered_cover_ideal(const LayeredGraph& lg) {
  const MonomialIdeal flat = cover_ideal(lg.as_graph());
  // Flat label (i-1)k + p sits at position (i-1)k + p - 1 in both spaces.
  return MonomialIdeal(VariableSpace::layered(lg.base_n(), lg.level()), flat.generators());
}

PolarizationCheck polarization_identity(const Graph& g, int k) {
  if (g.num_edges() == 0) throw_input("the polarization identity needs at least one edge");
  PolarizationCheck check;
  check.polarized = polarize(symbolic_power_cover(g, k));
  check.cover = layered_cover_ideal(build_gk(g, k));
  check.equal = equal(check.polarized, check.cover, identity_map(check.polarized.space(), check.cover.space()));
  return check;
}

bool check_polarization_identity(const Graph& g, int k) { return polarization_identity(g, k).equal; }

int main_matching_threshold(int t, int s) { return 2 * t - 2 * s + 2; }

LayeredMatching proof_matching_main(const Graph& g, const Matching& cert, int s, int k) {
  if (s < 2) throw_input("the main construction needs s >= 2");
  if (!is_s_ordered_matching(g, cert, s)) throw_input("certificate is not an s-ordered matching");
  const int t = static_cast<int>(cert.size());
  if (k < main_matching_threshold(t, s)) {
    throw_precondition("k = " + std::to_string(k) + " is below 2t - 2s + 2 = " +
                       std::to_string(main_matching_threshold(t, s)));
  }
  LayeredMatching m;
  for (int i = 1; i <= t; ++i) {
    const auto& pair = cert.pairs[static_cast<std::size_t>(i - 1)];
    if (i <= t - s) {
      m.push_back({{pair.a, t + 2 - s - i}, {pair.b, k + s + i - t - 1}});
    } else {
      m.push_back({{pair.a, 1}, {pair.b, k}});
    }
  }
  for (const auto& [u, v] : m) {
    if (u.layer < 1 || u.layer > k || v.layer < 1 || v.layer > k) {
      throw InternalError("main construction produced a layer outside 1..k");
    }
  }
  return m;
}

LayeredMatching proof_matching_bipartite(const Graph& g, const Matching& cert, int k) {
  if (!is_bipartite(g).bipartite) throw_input("the bipartite construction needs a bipartite graph");
  if (!is_ordered_matching(g, cert)) throw_input("certificate is not an ordered matching");
  const int t = static_cast<int>(cert.size());
  if (k < t) throw_precondition("k = " + std::to_string(k) + " is below t = " + std::to_string(t));
  LayeredMatching m;
  for (int i = 1; i <= t; ++i) {
    const auto& pair = cert.pairs[static_cast<std::size_t>(i - 1)];
    m.push_back({{pair.a, t + 1 - i}, {pair.b, k + i - t}});
  }
  return m;
}

std::optional<Matching> find_independent_b_certificate(const Graph& g) {
  const int t = ordered_matching_number(g).size;
  if (t == 0) return std::nullopt;
  Matching m = search_ordered_matching(g, {1, true});
  if (static_cast<int>(m.size()) < t) return std::nullopt;
  return m;
}

bool is_induced_matching_layered(const LayeredGraph& lg, const LayeredMatching& m) {
  std::vector<std::pair<Vertex, Vertex>> flat;
  for (const auto& [u, v] : m) {
    if (!lg.has_edge(u, v)) throw_input("pair " + describe(u) + "-" + describe(v) + " is not an edge of G_k");
    flat.emplace_back(lg.flat(u), lg.flat(v));
  }
  return is_induced_matching(lg.as_graph(), flat);
}

}  // namespace coverdepth
