#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <string>

#include "coverdepth/errors.hpp"
#include "coverdepth/graph.hpp"

namespace coverdepth {

namespace {

std::vector<std::pair<Vertex, Vertex>> all_pairs(int n) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex u = 1; u <= n; ++u) {
    for (Vertex v = u + 1; v <= n; ++v) pairs.emplace_back(u, v);
  }
  return pairs;
}

// Bit index of the pair {u, v} (u < v) in the order (1,2), (1,3), ...
int pair_index(int n, Vertex u, Vertex v) {
  if (u > v) std::swap(u, v);
  return (u - 1) * (2 * n - u) / 2 + (v - u - 1);
}

constexpr int kMaxCanonicalVertices = 11;

}  // namespace

GraphStream::GraphStream(int n, EnumerationOptions options, int guard)
    : n_(n), options_(options), pairs_(all_pairs(n)) {
  if (n < 1) throw_input("graph enumeration needs n >= 1");
  if (n > guard) {
    throw_resource("graph enumeration on " + std::to_string(n) + " vertices exceeds the guard of " +
                   std::to_string(guard));
  }
  end_mask_ = std::uint64_t{1} << pairs_.size();
}

std::optional<Graph> GraphStream::next() {
  while (next_mask_ < end_mask_) {
    const std::uint64_t mask = next_mask_++;
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (std::size_t i = 0; i < pairs_.size(); ++i) {
      if (mask >> i & 1) edges.push_back(pairs_[i]);
    }
    Graph g(n_, edges);
    if (options_.no_isolated && g.has_isolated_vertex()) continue;
    if (options_.connected && !g.is_connected()) continue;
    return g;
  }
  return std::nullopt;
}

namespace {

struct Canonical {
  std::uint64_t code = 0;
  std::vector<Vertex> perm;
};

// Minimizes the edge code over every relabeling that lists vertices by
// non-increasing degree. That set of relabelings is determined by the
// isomorphism class, so the minimum is a class invariant.
Canonical canonicalize(const Graph& g) {
  const int n = g.num_vertices();
  if (n > kMaxCanonicalVertices) {
    throw_resource("canonical form is limited to " + std::to_string(kMaxCanonicalVertices) + " vertices");
  }
  std::vector<Vertex> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 1);
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex x, Vertex y) { return g.degree(x) > g.degree(y); });
  // Degree classes occupy contiguous position ranges; permute within each.
  std::vector<std::pair<std::size_t, std::size_t>> ranges;
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i;
    while (j < order.size() && g.degree(order[j]) == g.degree(order[i])) ++j;
    ranges.emplace_back(i, j);
    i = j;
  }
  for (auto [lo, hi] : ranges) std::sort(order.begin() + static_cast<long>(lo), order.begin() + static_cast<long>(hi));

  Canonical best{~std::uint64_t{0}, {}};
  std::vector<Vertex> label(static_cast<std::size_t>(n) + 1);
  auto evaluate = [&]() {
    for (std::size_t pos = 0; pos < order.size(); ++pos) label[static_cast<std::size_t>(order[pos])] = static_cast<Vertex>(pos + 1);
    std::uint64_t code = 0;
    for (auto [u, v] : g.edges()) {
      code |= std::uint64_t{1} << pair_index(n, label[static_cast<std::size_t>(u)], label[static_cast<std::size_t>(v)]);
    }
    if (code < best.code) {
      best.code = code;
      best.perm.assign(label.begin() + 1, label.end());
    }
  };
  auto permute = [&](auto&& self, std::size_t range) -> void {
    if (range == ranges.size()) {
      evaluate();
      return;
    }
    auto [lo, hi] = ranges[range];
    auto first = order.begin() + static_cast<long>(lo);
    auto last = order.begin() + static_cast<long>(hi);
    do {
      self(self, range + 1);
    } while (std::next_permutation(first, last));
  };
  permute(permute, 0);
  if (n == 0) best.code = 0;
  return best;
}

}  // namespace

std::uint64_t canonical_code(const Graph& g) { return canonicalize(g).code; }

Graph canonical_form(const Graph& g) {
  const Canonical c = canonicalize(g);
  if (g.num_vertices() == 0) return g;
  return g.relabeled(c.perm);
}

std::vector<Graph> isomorphism_classes(int n, EnumerationOptions options, int guard) {
  GraphStream stream(n, options, guard);
  std::map<std::uint64_t, Graph> classes;
  while (auto g = stream.next()) {
    // Canonical forms list degrees in non-increasing order; any labeled
    // graph whose degrees are not sorted cannot be one, and its class is
    // reached through a sorted relabeling instead.
    bool sorted = true;
    for (Vertex v = 2; v <= n && sorted; ++v) sorted = g->degree(v - 1) >= g->degree(v);
    if (!sorted) continue;
    const Canonical c = canonicalize(*g);
    if (!classes.contains(c.code)) classes.emplace(c.code, g->relabeled(c.perm));
  }
  std::vector<Graph> out;
  out.reserve(classes.size());
  for (auto& [code, g] : classes) out.push_back(std::move(g));
  return out;
}

}  // namespace coverdepth
