#include "coverdepth/complex.hpp"

#include <algorithm>
#include <bit>

#include "coverdepth/errors.hpp"

namespace coverdepth {

ReducedHomology::ReducedHomology(std::vector<std::size_t> dims) : dims_(std::move(dims)) {
  while (!dims_.empty() && dims_.back() == 0) dims_.pop_back();
}

std::size_t ReducedHomology::operator[](int degree) const {
  const auto pos = static_cast<std::size_t>(degree + 1);
  return degree < -1 || pos >= dims_.size() ? 0 : dims_[pos];
}

std::map<int, std::size_t> ReducedHomology::as_map() const {
  std::map<int, std::size_t> out;
  for (std::size_t i = 0; i < dims_.size(); ++i) {
    if (dims_[i] != 0) out[static_cast<int>(i) - 1] = dims_[i];
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace homology {

namespace {

FaceMask bit(int v) { return FaceMask{1} << v; }

}  // namespace

std::vector<FaceMask> maximal_sets(std::vector<FaceMask> sets) {
  std::sort(sets.begin(), sets.end(), [](FaceMask a, FaceMask b) {
    const int pa = std::popcount(a);
    const int pb = std::popcount(b);
    return pa != pb ? pa > pb : a < b;
  });
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<FaceMask> kept;
  for (FaceMask s : sets) {
    if (std::none_of(kept.begin(), kept.end(), [&](FaceMask k) { return (s & ~k) == 0; })) kept.push_back(s);
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

std::vector<FaceMask> strong_collapse(std::vector<FaceMask> facets) {
  facets = maximal_sets(std::move(facets));
  bool changed = true;
  while (changed && facets.size() > 1) {
    changed = false;
    FaceMask vertices = 0;
    for (FaceMask f : facets) vertices |= f;
    for (FaceMask rest = vertices; rest != 0; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      FaceMask common = ~FaceMask{0};
      for (FaceMask f : facets) {
        if (f & bit(v)) common &= f;
      }
      if ((common & ~bit(v)) == 0) continue;
      for (FaceMask& f : facets) f &= ~bit(v);
      facets = maximal_sets(std::move(facets));
      changed = true;
      break;
    }
  }
  return facets;
}

ReducedHomology from_facets_unreduced(std::vector<FaceMask> facets, const FieldChoice& field) {
  if (facets.empty()) return ReducedHomology();
  // Every face, grouped by size.
  std::vector<FaceMask> all;
  for (FaceMask f : facets) {
    // Enumerate subsets of f.
    FaceMask s = f;
    while (true) {
      all.push_back(s);
      if (s == 0) break;
      s = (s - 1) & f;
    }
  }
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  int top = 0;
  for (FaceMask f : all) top = std::max(top, std::popcount(f));
  // by_size[k] holds faces with k vertices (dimension k - 1), sorted.
  std::vector<std::vector<FaceMask>> by_size(static_cast<std::size_t>(top) + 1);
  for (FaceMask f : all) by_size[static_cast<std::size_t>(std::popcount(f))].push_back(f);

  // ranks[k] = rank of the boundary from size-k faces to size-(k-1) faces.
  std::vector<std::size_t> ranks(static_cast<std::size_t>(top) + 2, 0);
  for (std::size_t k = 1; k <= static_cast<std::size_t>(top); ++k) {
    const auto& cols = by_size[k];
    const auto& rows = by_size[k - 1];
    SparseMatrix m;
    m.rows = rows.size();
    m.columns.reserve(cols.size());
    for (FaceMask f : cols) {
      std::vector<SparseEntry> col;
      int position = 0;
      for (FaceMask rest = f; rest != 0; rest &= rest - 1, ++position) {
        const FaceMask boundary_face = f & ~(rest & -rest);
        const auto row = static_cast<std::uint32_t>(std::lower_bound(rows.begin(), rows.end(), boundary_face) - rows.begin());
        col.push_back({row, position % 2 == 0 ? 1 : -1});
      }
      std::sort(col.begin(), col.end(), [](const SparseEntry& a, const SparseEntry& b) { return a.row < b.row; });
      m.columns.push_back(std::move(col));
    }
    ranks[k] = rank(m, field);
  }
  std::vector<std::size_t> dims(static_cast<std::size_t>(top) + 1, 0);
  for (std::size_t k = 0; k <= static_cast<std::size_t>(top); ++k) {
    dims[k] = by_size[k].size() - ranks[k] - ranks[k + 1];
  }
  return ReducedHomology(std::move(dims));
}

ReducedHomology from_facets(std::vector<FaceMask> facets, const FieldChoice& field) {
  if (facets.empty()) return ReducedHomology();
  facets = strong_collapse(std::move(facets));
  if (facets.size() == 1) {
    // A simplex: acyclic unless it is {empty set}.
    return facets.front() == 0 ? ReducedHomology({1}) : ReducedHomology();
  }
  return from_facets_unreduced(std::move(facets), field);
}

bool enumerate_faces(FaceMask ground, const std::vector<FaceMask>& nonfaces, std::size_t cap,
                     std::vector<FaceMask>& out) {
  for (FaceMask n : nonfaces) {
    if (n == 0) return true;  // void complex
  }
  std::vector<int> vertices;
  for (FaceMask rest = ground; rest != 0; rest &= rest - 1) vertices.push_back(std::countr_zero(rest));
  std::vector<std::vector<FaceMask>> containing(64);
  for (FaceMask n : nonfaces) {
    for (FaceMask rest = n; rest != 0; rest &= rest - 1) containing[static_cast<std::size_t>(std::countr_zero(rest))].push_back(n);
  }
  bool complete = true;
  auto dfs = [&](auto&& self, FaceMask face, std::size_t from) -> void {
    out.push_back(face);
    if (out.size() > cap) {
      complete = false;
      return;
    }
    for (std::size_t i = from; i < vertices.size() && complete; ++i) {
      const int v = vertices[i];
      const FaceMask next = face | bit(v);
      const auto& blockers = containing[static_cast<std::size_t>(v)];
      if (std::any_of(blockers.begin(), blockers.end(), [&](FaceMask n) { return (n & ~next) == 0; })) continue;
      self(self, next, i + 1);
    }
  };
  dfs(dfs, 0, 0);
  return complete;
}

}  // namespace homology

// ---------------------------------------------------------------------------

SimplicialComplex::SimplicialComplex(std::size_t num_vertices, std::vector<FaceMask> nonfaces,
                                     std::vector<std::string> labels)
    : n_(num_vertices), labels_(std::move(labels)) {
  if (num_vertices > 64) throw_input("simplicial complexes are limited to 64 vertices");
  if (!labels_.empty() && labels_.size() != num_vertices) throw_input("label count does not match vertex count");
  for (FaceMask f : nonfaces) {
    if (num_vertices < 64 && (f >> num_vertices) != 0) throw_input("non-face uses a vertex outside the ground set");
  }
  // Minimal sets: reverse the maximal-set filter by complementing sizes.
  std::sort(nonfaces.begin(), nonfaces.end(), [](FaceMask a, FaceMask b) {
    const int pa = std::popcount(a);
    const int pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  nonfaces.erase(std::unique(nonfaces.begin(), nonfaces.end()), nonfaces.end());
  for (FaceMask f : nonfaces) {
    if (std::none_of(nonfaces_.begin(), nonfaces_.end(), [&](FaceMask k) { return (k & ~f) == 0; })) {
      nonfaces_.push_back(f);
    }
  }
  std::sort(nonfaces_.begin(), nonfaces_.end());
}

FaceMask SimplicialComplex::ground() const { return n_ == 64 ? ~FaceMask{0} : (FaceMask{1} << n_) - 1; }

bool SimplicialComplex::is_void() const { return !nonfaces_.empty() && nonfaces_.front() == 0; }

bool SimplicialComplex::is_face(FaceMask f) const {
  if ((f & ~ground()) != 0) return false;
  return std::none_of(nonfaces_.begin(), nonfaces_.end(), [&](FaceMask n) { return (n & ~f) == 0; });
}

SimplicialComplex SimplicialComplex::restricted(FaceMask sigma) const {
  std::vector<FaceMask> kept;
  for (FaceMask n : nonfaces_) {
    if ((n & ~sigma) == 0) kept.push_back(n);
  }
  // Vertices outside sigma become non-faces.
  for (FaceMask rest = ground() & ~sigma; rest != 0; rest &= rest - 1) kept.push_back(rest & -rest);
  return SimplicialComplex(n_, std::move(kept), labels_);
}

std::vector<FaceMask> SimplicialComplex::faces() const {
  std::vector<FaceMask> out;
  homology::enumerate_faces(ground(), nonfaces_, static_cast<std::size_t>(-1), out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<FaceMask> SimplicialComplex::facets() const {
  if (is_void()) return {};
  return homology::maximal_sets(faces());
}

ReducedHomology reduced_homology_dims(const SimplicialComplex& c, const FieldChoice& field, std::size_t guard) {
  if (c.num_vertices() > guard) {
    throw_resource("complex has " + std::to_string(c.num_vertices()) + " vertices, above the guard of " +
                   std::to_string(guard));
  }
  if (c.is_void()) return ReducedHomology();
  return homology::from_facets(c.facets(), field);
}

}  // namespace coverdepth
