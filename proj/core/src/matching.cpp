#include <algorithm>
#include <bit>
#include <string>

#include "coverdepth/errors.hpp"
#include "coverdepth/graph.hpp"

namespace coverdepth {

void validate_matching(const Graph& g, const Matching& m) {
  VertexMask used = 0;
  for (const auto& [a, b] : m.pairs) {
    require_vertex(g, a);
    require_vertex(g, b);
    if (!g.has_edge(a, b)) {
      throw_input("pair (" + std::to_string(a) + "," + std::to_string(b) + ") is not an edge");
    }
    if (used & (vertex_bit(a) | vertex_bit(b))) throw_input("matching pairs share a vertex");
    used |= vertex_bit(a) | vertex_bit(b);
  }
}

namespace {

// Pairwise part of the s-ordered conditions: an edge {a_i, b_j} with i != j
// is allowed only when i <= j - s. At s = 1 this is the ordered condition.
bool cross_edges_respect_order(const Graph& g, const Matching& m, int s) {
  const auto r = static_cast<int>(m.size());
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) {
      if (i == j) continue;
      if (g.has_edge(m.pairs[static_cast<std::size_t>(i)].a, m.pairs[static_cast<std::size_t>(j)].b) &&
          i > j - s) {
        return false;
      }
    }
  }
  return true;
}

VertexMask a_side(const Matching& m) {
  VertexMask a = 0;
  for (const auto& p : m.pairs) a |= vertex_bit(p.a);
  return a;
}

class OrderedSearch {
 public:
  OrderedSearch(const Graph& g, MatchingSearchOptions options) : g_(g), options_(options) {}

  Matching run() {
    extend(g_.all_vertices(), 0, 0);
    return best_;
  }

 private:
  // Appending (a, b) at position r = current_.size(): a must avoid every
  // earlier a and b (an edge {a_r, b_i} with i < r is never allowed), and an
  // edge {a_i, b} is allowed only if i <= r - s.
  bool can_append(Vertex a, Vertex b, VertexMask a_mask, VertexMask b_mask) const {
    if (g_.neighbors(a) & (a_mask | b_mask)) return false;
    if (options_.independent_b_side && (g_.neighbors(b) & b_mask)) return false;
    const auto r = static_cast<int>(current_.pairs.size());
    for (int i = 0; i < r; ++i) {
      if (g_.has_edge(current_.pairs[static_cast<std::size_t>(i)].a, b) && i > r - options_.s) return false;
    }
    return true;
  }

  void extend(VertexMask unused, VertexMask a_mask, VertexMask b_mask) {
    if (current_.size() > best_.size()) best_ = current_;
    if (current_.size() + static_cast<std::size_t>(std::popcount(unused)) / 2 <= best_.size()) return;
    for (VertexMask ra = unused; ra != 0; ra &= ra - 1) {
      const Vertex a = std::countr_zero(ra) + 1;
      for (VertexMask rb = g_.neighbors(a) & unused; rb != 0; rb &= rb - 1) {
        const Vertex b = std::countr_zero(rb) + 1;
        if (!can_append(a, b, a_mask, b_mask)) continue;
        current_.pairs.push_back({a, b});
        extend(unused & ~(vertex_bit(a) | vertex_bit(b)), a_mask | vertex_bit(a), b_mask | vertex_bit(b));
        current_.pairs.pop_back();
        if (current_.size() + static_cast<std::size_t>(std::popcount(unused)) / 2 <= best_.size()) return;
      }
    }
  }

  const Graph& g_;
  MatchingSearchOptions options_;
  Matching current_;
  Matching best_;
};

}  // namespace

bool is_ordered_matching(const Graph& g, const Matching& m) {
  validate_matching(g, m);
  if (m.pairs.empty()) return false;
  return is_independent(g, a_side(m)) && cross_edges_respect_order(g, m, 1);
}

bool is_s_ordered_matching(const Graph& g, const Matching& m, int s) {
  if (s < 1) throw_input("s must be at least 1");
  validate_matching(g, m);
  if (m.pairs.empty() || static_cast<int>(m.size()) < s) return false;
  return is_independent(g, a_side(m)) && cross_edges_respect_order(g, m, s);
}

Matching search_ordered_matching(const Graph& g, const MatchingSearchOptions& options) {
  if (options.s < 1) throw_input("s must be at least 1");
  return OrderedSearch(g, options).run();
}

OrderedMatchingResult ordered_matching_number(const Graph& g) {
  Matching best = search_ordered_matching(g, {});
  if (best.pairs.empty()) return {0, std::nullopt};
  const int size = static_cast<int>(best.size());
  return {size, std::move(best)};
}

MatchingNumber s_ordered_matching_number(const Graph& g, int s) {
  const Matching best = search_ordered_matching(g, {s, false});
  // Valid sequences are closed under prefixes, so the longest one decides
  // whether any sequence reaches length s.
  if (best.pairs.empty() || static_cast<int>(best.size()) < s) return MatchingNumber::negative_infinity();
  return MatchingNumber::finite(static_cast<int>(best.size()));
}

int largest_stable_s(const Graph& g) {
  if (g.num_edges() == 0) throw_input("largest stable s is undefined for an edgeless graph");
  const int t = ordered_matching_number(g).size;
  int s = 1;
  // The stable values of s form an initial segment of 1..t.
  while (s < t && s_ordered_matching_number(g, s + 1) == MatchingNumber::finite(t)) ++s;
  return s;
}

InvariantReport compute_invariants(const Graph& g) {
  InvariantReport report;
  report.alpha = independence_number(g);
  report.ind_match = induced_matching_number(g);
  auto ord = ordered_matching_number(g);
  report.ord_match = ord.size;
  report.certificate = std::move(ord.certificate);
  for (int s = 1; s <= report.ord_match + 1; ++s) {
    report.s_ord_match.emplace(s, s_ordered_matching_number(g, s));
  }
  if (g.num_edges() > 0) report.largest_stable_s = largest_stable_s(g);
  return report;
}

}  // namespace coverdepth
