#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace coverdepth {

// Vertices are 1-based labels. Internally adjacency is a bitmask where
// vertex v occupies bit v - 1, which caps graphs at 64 vertices.
using Vertex = int;
using VertexMask = std::uint64_t;

inline constexpr int kMaxGraphVertices = 64;

constexpr VertexMask vertex_bit(Vertex v) { return VertexMask{1} << (v - 1); }

class Graph {
 public:
  Graph() = default;
  // Throws InputError on loops, out-of-range endpoints or n outside [0, 64].
  // Duplicate edges collapse.
  Graph(int num_vertices, const std::vector<std::pair<Vertex, Vertex>>& edges);

  int num_vertices() const { return n_; }
  std::size_t num_edges() const { return edges_.size(); }
  // Sorted, each pair normalized to u < v.
  const std::vector<std::pair<Vertex, Vertex>>& edges() const { return edges_; }

  bool has_edge(Vertex u, Vertex v) const;
  VertexMask neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v - 1)]; }
  VertexMask all_vertices() const;
  int degree(Vertex v) const;
  bool has_isolated_vertex() const;
  bool is_connected() const;

  // The subgraph induced on `keep`, with vertices renumbered 1.. in
  // increasing label order.
  Graph induced(VertexMask keep) const;
  // Relabel: vertex v becomes perm[v - 1] (a permutation of 1..n).
  Graph relabeled(const std::vector<Vertex>& perm) const;

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }

 private:
  int n_ = 0;
  std::vector<std::pair<Vertex, Vertex>> edges_;
  std::vector<VertexMask> adj_;
};

void require_vertex(const Graph& g, Vertex v);
VertexMask mask_of(const Graph& g, const std::vector<Vertex>& vertices);

// ---------------------------------------------------------------------------
// Matchings

struct OrientedEdge {
  Vertex a = 0;
  Vertex b = 0;
  bool operator==(const OrientedEdge&) const = default;
};

// An ordered list of oriented edges (a_i, b_i). Used both for the object
// being tested and for certificates returned by the searches.
struct Matching {
  std::vector<OrientedEdge> pairs;

  std::size_t size() const { return pairs.size(); }
  bool operator==(const Matching&) const = default;
};

using OrderedMatchingCertificate = Matching;

// Throws InputError unless every pair is an edge and all 2r endpoints are
// distinct.
void validate_matching(const Graph& g, const Matching& m);

// An integer extended by negative infinity. Deliberately has no arithmetic.
class MatchingNumber {
 public:
  static MatchingNumber negative_infinity() { return MatchingNumber(); }
  static MatchingNumber finite(int value) { return MatchingNumber(value); }

  bool is_negative_infinity() const { return !value_.has_value(); }
  // Throws std::logic_error on negative infinity.
  int value() const;

  friend bool operator==(const MatchingNumber&, const MatchingNumber&) = default;
  friend bool operator<(const MatchingNumber& x, const MatchingNumber& y) {
    if (x.is_negative_infinity()) return !y.is_negative_infinity();
    if (y.is_negative_infinity()) return false;
    return *x.value_ < *y.value_;
  }
  friend bool operator>=(const MatchingNumber& x, const MatchingNumber& y) { return !(x < y); }

 private:
  MatchingNumber() = default;
  explicit MatchingNumber(int v) : value_(v) {}
  std::optional<int> value_;
};

// ---------------------------------------------------------------------------
// Invariants

bool is_independent(const Graph& g, const std::vector<Vertex>& w);
bool is_independent(const Graph& g, VertexMask w);
int independence_number(const Graph& g);

int induced_matching_number(const Graph& g);
// A maximum induced matching, as unordered edges (u < v).
std::vector<std::pair<Vertex, Vertex>> maximum_induced_matching(const Graph& g);
bool is_induced_matching(const Graph& g, const std::vector<std::pair<Vertex, Vertex>>& edges);

bool is_ordered_matching(const Graph& g, const Matching& m);
bool is_s_ordered_matching(const Graph& g, const Matching& m, int s);

struct OrderedMatchingResult {
  int size = 0;
  std::optional<OrderedMatchingCertificate> certificate;
};

OrderedMatchingResult ordered_matching_number(const Graph& g);
MatchingNumber s_ordered_matching_number(const Graph& g, int s);

struct MatchingSearchOptions {
  int s = 1;
  // Also demand that {b_1, ..., b_r} is independent.
  bool independent_b_side = false;
};

// A maximum-size sequence satisfying the order and independence conditions
// for the given s. The r >= s requirement is left to the caller, so the
// result may be shorter than s. Deterministic: first found in ascending
// vertex order.
Matching search_ordered_matching(const Graph& g, const MatchingSearchOptions& options);

// Largest s with s_ordered_matching_number(g, s) == ordered_matching_number(g).
// Throws InputError on edgeless graphs.
int largest_stable_s(const Graph& g);

struct InvariantReport {
  int alpha = 0;
  int ind_match = 0;
  int ord_match = 0;
  // s = 1..ord_match + 1; the last entry is always negative infinity.
  std::map<int, MatchingNumber> s_ord_match;
  std::optional<int> largest_stable_s;  // absent for edgeless graphs
  std::optional<OrderedMatchingCertificate> certificate;
};

InvariantReport compute_invariants(const Graph& g);

// ---------------------------------------------------------------------------
// Whiskering

struct CliquePartition {
  std::vector<std::vector<Vertex>> blocks;
  bool operator==(const CliquePartition&) const = default;
};

// Throws InputError unless the blocks partition 1..n into cliques.
void validate_clique_partition(const Graph& g, const CliquePartition& pi);

// G^pi on n + m vertices; whisker vertex y_i is labeled n + i.
Graph whisker(const Graph& g, const CliquePartition& pi);

// Every clique vertex-partition of g, blocks sorted by least element.
std::vector<CliquePartition> clique_partitions(const Graph& g);

// ---------------------------------------------------------------------------
// Bipartiteness

struct BipartiteResult {
  bool bipartite = false;
  // colors[v - 1] in {0, 1} when bipartite.
  std::vector<int> colors;
};

BipartiteResult is_bipartite(const Graph& g);

// ---------------------------------------------------------------------------
// Enumeration

struct EnumerationOptions {
  bool connected = false;
  bool no_isolated = false;
};

inline constexpr int kDefaultEnumerationGuard = 7;

// Streams every labeled graph on n vertices once, in increasing order of the
// edge-subset bitmask over the pairs (1,2), (1,3), ..., (n-1,n).
class GraphStream {
 public:
  GraphStream(int n, EnumerationOptions options, int guard = kDefaultEnumerationGuard);

  std::optional<Graph> next();

 private:
  int n_;
  EnumerationOptions options_;
  std::vector<std::pair<Vertex, Vertex>> pairs_;
  std::uint64_t next_mask_ = 0;
  std::uint64_t end_mask_ = 0;
};

// Canonical representative of g's isomorphism class: the relabeling whose
// vertex degrees are non-increasing and whose edge code is minimal.
Graph canonical_form(const Graph& g);
std::uint64_t canonical_code(const Graph& g);

// One canonical representative per isomorphism class of graphs on n
// vertices, sorted by canonical code.
std::vector<Graph> isomorphism_classes(int n, EnumerationOptions options,
                                       int guard = kDefaultEnumerationGuard);

}  // namespace coverdepth
