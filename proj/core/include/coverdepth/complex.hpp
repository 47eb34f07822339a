#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "coverdepth/linalg.hpp"

namespace coverdepth {

// Subsets of a ground set of at most 64 vertices.
using FaceMask = std::uint64_t;

inline constexpr std::size_t kDefaultHochsterGuard = 18;

// Dimensions of reduced homology, indexed by degree from -1 upward.
class ReducedHomology {
 public:
  ReducedHomology() = default;
  // dims[0] is degree -1.
  explicit ReducedHomology(std::vector<std::size_t> dims);

  std::size_t operator[](int degree) const;
  bool is_zero() const { return dims_.empty(); }
  // Highest degree with nonzero homology; requires !is_zero().
  int top_degree() const { return static_cast<int>(dims_.size()) - 2; }
  // Nonzero dimensions keyed by degree.
  std::map<int, std::size_t> as_map() const;

  friend bool operator==(const ReducedHomology&, const ReducedHomology&) = default;

 private:
  std::vector<std::size_t> dims_;  // trailing zeros trimmed
};

// A simplicial complex on vertices 0..n-1, stored by its minimal non-faces.
// A subset is a face iff it contains no minimal non-face. The void complex
// (no faces at all) has the empty set as its only minimal non-face.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;
  SimplicialComplex(std::size_t num_vertices, std::vector<FaceMask> nonfaces,
                    std::vector<std::string> labels = {});

  std::size_t num_vertices() const { return n_; }
  const std::vector<FaceMask>& minimal_nonfaces() const { return nonfaces_; }
  const std::vector<std::string>& labels() const { return labels_; }

  bool is_void() const;
  bool is_face(FaceMask f) const;
  // Restriction to the vertex subset sigma; vertices keep their indices.
  SimplicialComplex restricted(FaceMask sigma) const;
  FaceMask ground() const;

  // All faces, sorted numerically (colexicographic order of vertex sets).
  std::vector<FaceMask> faces() const;
  std::vector<FaceMask> facets() const;

 private:
  std::size_t n_ = 0;
  std::vector<FaceMask> nonfaces_;
  std::vector<std::string> labels_;
};

// Throws ResourceError when the complex has more than `guard` vertices.
ReducedHomology reduced_homology_dims(const SimplicialComplex& c, const FieldChoice& field,
                                      std::size_t guard = kDefaultHochsterGuard);

// Engine entry points shared by the Betti computations.
namespace homology {

// Keeps the inclusion-maximal sets.
std::vector<FaceMask> maximal_sets(std::vector<FaceMask> sets);

// Repeatedly deletes a vertex v whose facets all contain some other vertex
// (v is dominated); each deletion is a strong deformation retraction.
std::vector<FaceMask> strong_collapse(std::vector<FaceMask> facets);

// Reduced homology of the complex generated by `facets`. An empty list is
// the void complex; the list {0} is the complex {empty set}.
ReducedHomology from_facets(std::vector<FaceMask> facets, const FieldChoice& field);

// Same, without the collapse step. Used to cross-check the reduction.
ReducedHomology from_facets_unreduced(std::vector<FaceMask> facets, const FieldChoice& field);

// Faces of the complex on `ground` avoiding every non-face. Returns false
// (leaving `out` partial) once more than `cap` faces are found.
bool enumerate_faces(FaceMask ground, const std::vector<FaceMask>& nonfaces, std::size_t cap,
                     std::vector<FaceMask>& out);

}  // namespace homology

}  // namespace coverdepth
