#include "coverdepth/depth.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

#include "coverdepth/errors.hpp"
#include "coverdepth/layered.hpp"

namespace coverdepth {

PdRegDepth pd_reg_depth(const MonomialIdeal& ideal, const FieldChoice& field, std::size_t guard) {
  const MonomialIdeal squarefree = ideal.is_squarefree() ? ideal : polarize(ideal);
  const BettiTable table = betti_table_squarefree(squarefree, field, guard);
  PdRegDepth out;
  out.pd = table.pd();
  out.reg = table.reg();
  out.depth = static_cast<int>(ideal.num_vars()) - out.pd;
  return out;
}

namespace {

// reg(S/I(g)) as the largest top degree + 1 of reduced homology of
// Ind(g[W]) over vertex subsets W.
class RegularitySearch {
 public:
  RegularitySearch(const Graph& g, const FieldChoice& field) : g_(g), field_(field) {
    const int n = g.num_vertices();
    conflicts_.assign(static_cast<std::size_t>(n), 0);
    for (Vertex u = 1; u <= n; ++u) {
      for (Vertex v = 1; v <= n; ++v) {
        // N(u) within N(v) survives restriction to any W holding both, and
        // then Ind(g[W]) is homotopy equivalent to Ind(g[W - v]).
        if (u != v && (g.neighbors(u) & ~g.neighbors(v)) == 0) {
          conflicts_[static_cast<std::size_t>(u - 1)] |= vertex_bit(v);
          conflicts_[static_cast<std::size_t>(v - 1)] |= vertex_bit(u);
        }
      }
    }
  }

  int run() {
    best_ = 0;
    explore(0, 1, 0);
    return best_;
  }

 private:
  void explore(VertexMask w, Vertex next, VertexMask blocked) {
    evaluate(w);
    for (Vertex v = next; v <= g_.num_vertices(); ++v) {
      if (blocked & vertex_bit(v)) continue;
      explore(w | vertex_bit(v), v + 1, blocked | conflicts_[static_cast<std::size_t>(v - 1)]);
    }
  }

  void evaluate(VertexMask w) {
    if (w == 0) return;
    for (VertexMask rest = w; rest != 0; rest &= rest - 1) {
      const Vertex v = std::countr_zero(rest) + 1;
      if ((g_.neighbors(v) & w) == 0) return;  // cone over v
    }
    int total = 0;
    for (VertexMask rest = w; rest != 0;) {
      const VertexMask component = component_of(rest & -rest, w);
      rest &= ~component;
      const int c = contribution(component);
      if (c < 0) return;
      total += c;
    }
    best_ = std::max(best_, total);
  }

  VertexMask component_of(VertexMask seed, VertexMask w) const {
    VertexMask seen = seed;
    VertexMask frontier = seed;
    while (frontier != 0) {
      VertexMask next = 0;
      for (VertexMask rest = frontier; rest != 0; rest &= rest - 1) {
        next |= g_.neighbors(std::countr_zero(rest) + 1) & w;
      }
      frontier = next & ~seen;
      seen |= next;
    }
    return seen;
  }

  // top degree + 1 of H~(Ind(g[c])), or -1 when it vanishes.
  int contribution(VertexMask c) {
    const auto it = memo_.find(c);
    if (it != memo_.end()) return it->second;
    std::vector<FaceMask> nonfaces;
    for (VertexMask rest = c; rest != 0; rest &= rest - 1) {
      const Vertex v = std::countr_zero(rest) + 1;
      for (VertexMask nb = g_.neighbors(v) & c; nb != 0; nb &= nb - 1) {
        const Vertex u = std::countr_zero(nb) + 1;
        if (u > v) nonfaces.push_back(vertex_bit(u) | vertex_bit(v));
      }
    }
    std::vector<FaceMask> faces;
    homology::enumerate_faces(c, nonfaces, static_cast<std::size_t>(-1), faces);
    std::vector<FaceMask> facets;
    for (FaceMask f : faces) {
      bool maximal = true;
      for (VertexMask rest = c & ~f; rest != 0 && maximal; rest &= rest - 1) {
        const Vertex v = std::countr_zero(rest) + 1;
        if ((g_.neighbors(v) & f) == 0) maximal = false;
      }
      if (maximal) facets.push_back(f);
    }
    const ReducedHomology h = homology::from_facets(std::move(facets), field_);
    const int value = h.is_zero() ? -1 : h.top_degree() + 1;
    memo_.emplace(c, value);
    return value;
  }

  const Graph& g_;
  FieldChoice field_;
  std::vector<VertexMask> conflicts_;
  std::unordered_map<VertexMask, int> memo_;
  int best_ = 0;
};

}  // namespace

int reg_edge_ideal(const Graph& g, const FieldChoice& field, std::size_t guard) {
  if (g.num_edges() == 0) throw_input("reg_edge_ideal needs at least one edge");
  if (static_cast<std::size_t>(g.num_vertices()) > guard) {
    throw_resource("regularity search over " + std::to_string(g.num_vertices()) +
                   " vertices exceeds the guard of " + std::to_string(guard));
  }
  return RegularitySearch(g, field).run() + 1;
}

DepthRoutes depth_symbolic_cover_routes(const Graph& g, int k, const FieldChoice& field, std::size_t guard) {
  if (g.num_edges() == 0) throw_input("depth_symbolic_cover needs at least one edge");
  if (k < 1) throw_input("k must be at least 1");
  const auto layered_vertices = static_cast<std::size_t>(g.num_vertices()) * static_cast<std::size_t>(k);
  if (layered_vertices > guard) {
    throw_resource("n * k = " + std::to_string(layered_vertices) + " exceeds the guard of " + std::to_string(guard));
  }
  const int n = g.num_vertices();
  DepthRoutes out;
  const MonomialIdeal polarized = polarize(symbolic_power_cover(g, k));
  out.via_polarization = n - betti_table_squarefree(polarized, field, guard).pd();
  out.via_regularity = n - reg_edge_ideal(build_gk(g, k).as_graph(), field, guard);
  if (out.via_polarization != out.via_regularity) {
    throw InternalError("depth routes disagree for k = " + std::to_string(k) + ": polarization gives " +
                        std::to_string(out.via_polarization) + ", regularity gives " +
                        std::to_string(out.via_regularity));
  }
  out.depth = out.via_polarization;
  return out;
}

}  // namespace coverdepth
