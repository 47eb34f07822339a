#include "coverdepth/graph.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

#include "coverdepth/errors.hpp"

namespace coverdepth {

Graph::Graph(int num_vertices, const std::vector<std::pair<Vertex, Vertex>>& edges)
    : n_(num_vertices), adj_(static_cast<std::size_t>(std::max(num_vertices, 0)), 0) {
  if (num_vertices < 0 || num_vertices > kMaxGraphVertices) {
    throw_input("graph must have between 0 and 64 vertices, got " + std::to_string(num_vertices));
  }
  for (auto [u, v] : edges) {
    if (u < 1 || u > n_ || v < 1 || v > n_) {
      throw_input("edge {" + std::to_string(u) + "," + std::to_string(v) +
                  "} has an endpoint outside 1.." + std::to_string(n_));
    }
    if (u == v) throw_input("loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
    edges_.emplace_back(u, v);
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  for (auto [u, v] : edges_) {
    adj_[static_cast<std::size_t>(u - 1)] |= vertex_bit(v);
    adj_[static_cast<std::size_t>(v - 1)] |= vertex_bit(u);
  }
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u < 1 || u > n_ || v < 1 || v > n_) return false;
  return (neighbors(u) & vertex_bit(v)) != 0;
}

VertexMask Graph::all_vertices() const {
  return n_ == 64 ? ~VertexMask{0} : (VertexMask{1} << n_) - 1;
}

int Graph::degree(Vertex v) const { return std::popcount(neighbors(v)); }

bool Graph::has_isolated_vertex() const {
  return std::any_of(adj_.begin(), adj_.end(), [](VertexMask m) { return m == 0; });
}

bool Graph::is_connected() const {
  if (n_ <= 1) return true;
  VertexMask seen = vertex_bit(1);
  VertexMask frontier = seen;
  while (frontier != 0) {
    VertexMask next = 0;
    for (VertexMask f = frontier; f != 0; f &= f - 1) {
      next |= adj_[static_cast<std::size_t>(std::countr_zero(f))];
    }
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == all_vertices();
}

Graph Graph::induced(VertexMask keep) const {
  keep &= all_vertices();
  std::vector<Vertex> new_label(static_cast<std::size_t>(n_) + 1, 0);
  int count = 0;
  for (Vertex v = 1; v <= n_; ++v) {
    if (keep & vertex_bit(v)) new_label[static_cast<std::size_t>(v)] = ++count;
  }
  std::vector<std::pair<Vertex, Vertex>> kept;
  for (auto [u, v] : edges_) {
    if ((keep & vertex_bit(u)) && (keep & vertex_bit(v))) {
      kept.emplace_back(new_label[static_cast<std::size_t>(u)], new_label[static_cast<std::size_t>(v)]);
    }
  }
  return Graph(count, kept);
}

Graph Graph::relabeled(const std::vector<Vertex>& perm) const {
  if (perm.size() != static_cast<std::size_t>(n_)) throw_input("relabeling has wrong length");
  VertexMask seen = 0;
  for (Vertex p : perm) {
    if (p < 1 || p > n_ || (seen & vertex_bit(p))) throw_input("relabeling is not a permutation");
    seen |= vertex_bit(p);
  }
  std::vector<std::pair<Vertex, Vertex>> mapped;
  mapped.reserve(edges_.size());
  for (auto [u, v] : edges_) {
    mapped.emplace_back(perm[static_cast<std::size_t>(u - 1)], perm[static_cast<std::size_t>(v - 1)]);
  }
  return Graph(n_, mapped);
}

void require_vertex(const Graph& g, Vertex v) {
  if (v < 1 || v > g.num_vertices()) {
    throw_input("vertex " + std::to_string(v) + " outside 1.." + std::to_string(g.num_vertices()));
  }
}

VertexMask mask_of(const Graph& g, const std::vector<Vertex>& vertices) {
  VertexMask m = 0;
  for (Vertex v : vertices) {
    require_vertex(g, v);
    m |= vertex_bit(v);
  }
  return m;
}

int MatchingNumber::value() const {
  if (!value_) throw std::logic_error("matching number is negative infinity");
  return *value_;
}

// ---------------------------------------------------------------------------

bool is_independent(const Graph& g, VertexMask w) {
  for (VertexMask rest = w; rest != 0; rest &= rest - 1) {
    const Vertex v = std::countr_zero(rest) + 1;
    if (g.neighbors(v) & w) return false;
  }
  return true;
}

bool is_independent(const Graph& g, const std::vector<Vertex>& w) {
  return is_independent(g, mask_of(g, w));
}

namespace {

// Branch on the lowest remaining vertex: take it (dropping its
// neighborhood) or discard it.
int max_independent(const Graph& g, VertexMask candidates) {
  if (candidates == 0) return 0;
  const Vertex v = std::countr_zero(candidates) + 1;
  const VertexMask rest = candidates & ~vertex_bit(v);
  const int with = 1 + max_independent(g, rest & ~g.neighbors(v));
  if ((g.neighbors(v) & rest) == 0) return with;
  return std::max(with, max_independent(g, rest));
}

struct InducedSearch {
  const Graph& g;
  std::vector<std::pair<Vertex, Vertex>> best;
  std::vector<std::pair<Vertex, Vertex>> current;

  void run(std::size_t from, VertexMask available) {
    if (current.size() > best.size()) best = current;
    const auto& edges = g.edges();
    if (current.size() + static_cast<std::size_t>(std::popcount(available)) / 2 <= best.size()) return;
    for (std::size_t e = from; e < edges.size(); ++e) {
      auto [u, v] = edges[e];
      if (!(available & vertex_bit(u)) || !(available & vertex_bit(v))) continue;
      const VertexMask closed = g.neighbors(u) | g.neighbors(v) | vertex_bit(u) | vertex_bit(v);
      current.emplace_back(u, v);
      run(e + 1, available & ~closed);
      current.pop_back();
      if (current.size() + static_cast<std::size_t>(std::popcount(available)) / 2 <= best.size()) return;
    }
  }
};

}  // namespace

int independence_number(const Graph& g) { return max_independent(g, g.all_vertices()); }

std::vector<std::pair<Vertex, Vertex>> maximum_induced_matching(const Graph& g) {
  InducedSearch search{g, {}, {}};
  search.run(0, g.all_vertices());
  return search.best;
}

int induced_matching_number(const Graph& g) {
  return static_cast<int>(maximum_induced_matching(g).size());
}

bool is_induced_matching(const Graph& g, const std::vector<std::pair<Vertex, Vertex>>& edges) {
  VertexMask covered = 0;
  for (auto [u, v] : edges) {
    require_vertex(g, u);
    require_vertex(g, v);
    if (!g.has_edge(u, v)) throw_input("pair is not an edge of the graph");
    if (covered & (vertex_bit(u) | vertex_bit(v))) return false;
    covered |= vertex_bit(u) | vertex_bit(v);
  }
  // The only edges inside the covered set are the matching edges.
  std::size_t inside = 0;
  for (auto [u, v] : g.edges()) {
    if ((covered & vertex_bit(u)) && (covered & vertex_bit(v))) ++inside;
  }
  return inside == edges.size();
}

// ---------------------------------------------------------------------------

void validate_clique_partition(const Graph& g, const CliquePartition& pi) {
  VertexMask seen = 0;
  for (const auto& block : pi.blocks) {
    if (block.empty()) throw_input("clique partition has an empty block");
    VertexMask b = 0;
    for (Vertex v : block) {
      require_vertex(g, v);
      if ((seen | b) & vertex_bit(v)) throw_input("vertex " + std::to_string(v) + " appears twice in the partition");
      b |= vertex_bit(v);
    }
    for (Vertex v : block) {
      if ((b & ~(g.neighbors(v) | vertex_bit(v))) != 0) {
        throw_input("block containing vertex " + std::to_string(v) + " is not a clique");
      }
    }
    seen |= b;
  }
  if (seen != g.all_vertices()) throw_input("clique partition does not cover every vertex");
}

Graph whisker(const Graph& g, const CliquePartition& pi) {
  validate_clique_partition(g, pi);
  const int n = g.num_vertices();
  const int m = static_cast<int>(pi.blocks.size());
  if (n + m > kMaxGraphVertices) throw_input("whiskered graph exceeds 64 vertices");
  std::vector<std::pair<Vertex, Vertex>> edges = g.edges();
  for (int i = 0; i < m; ++i) {
    for (Vertex x : pi.blocks[static_cast<std::size_t>(i)]) edges.emplace_back(x, n + i + 1);
  }
  return Graph(n + m, edges);
}

std::vector<CliquePartition> clique_partitions(const Graph& g) {
  std::vector<CliquePartition> out;
  std::vector<VertexMask> blocks;
  const int n = g.num_vertices();
  // Vertices are placed in increasing order, so blocks stay sorted by their
  // least element.
  auto place = [&](auto&& self, Vertex v) -> void {
    if (v > n) {
      CliquePartition pi;
      for (VertexMask b : blocks) {
        std::vector<Vertex> block;
        for (VertexMask r = b; r != 0; r &= r - 1) block.push_back(std::countr_zero(r) + 1);
        pi.blocks.push_back(std::move(block));
      }
      out.push_back(std::move(pi));
      return;
    }
    // Indexed access: the recursion grows `blocks`, which may reallocate.
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      if ((blocks[i] & ~g.neighbors(v)) == 0) {
        blocks[i] |= vertex_bit(v);
        self(self, v + 1);
        blocks[i] &= ~vertex_bit(v);
      }
    }
    blocks.push_back(vertex_bit(v));
    self(self, v + 1);
    blocks.pop_back();
  };
  place(place, 1);
  return out;
}

BipartiteResult is_bipartite(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<int> color(static_cast<std::size_t>(n), -1);
  std::vector<Vertex> stack;
  for (Vertex root = 1; root <= n; ++root) {
    if (color[static_cast<std::size_t>(root - 1)] != -1) continue;
    color[static_cast<std::size_t>(root - 1)] = 0;
    stack.push_back(root);
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      const int c = color[static_cast<std::size_t>(v - 1)];
      for (VertexMask r = g.neighbors(v); r != 0; r &= r - 1) {
        const Vertex u = std::countr_zero(r) + 1;
        int& cu = color[static_cast<std::size_t>(u - 1)];
        if (cu == -1) {
          cu = 1 - c;
          stack.push_back(u);
        } else if (cu == c) {
          return {false, {}};
        }
      }
    }
  }
  return {true, std::move(color)};
}

}  // namespace coverdepth
