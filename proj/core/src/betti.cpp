#include "coverdepth/betti.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

#include "coverdepth/errors.hpp"

namespace coverdepth {

std::size_t BettiTable::beta(int i, int j) const {
  const auto it = entries_.find({i, j});
  return it == entries_.end() ? 0 : it->second;
}

void BettiTable::add(int i, int j, std::size_t value) {
  if (value != 0) entries_[{i, j}] += value;
}

int BettiTable::pd() const {
  int out = 0;
  for (const auto& [key, value] : entries_) out = std::max(out, key.first);
  return out;
}

int BettiTable::reg() const {
  int out = 0;
  for (const auto& [key, value] : entries_) out = std::max(out, key.second - key.first);
  return out;
}

nlohmann::json BettiTable::to_json() const {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& [key, value] : entries_) entries.push_back({key.first, key.second, value});
  return {{"num_vars", num_vars_}, {"entries", entries}};
}

// ---------------------------------------------------------------------------

namespace {

void require_proper(const MonomialIdeal& ideal, const char* operation) {
  if (ideal.is_unit()) throw_input(std::string(operation) + " is undefined for the unit ideal");
}

std::vector<FaceMask> generator_masks(const MonomialIdeal& ideal) {
  std::vector<FaceMask> out;
  out.reserve(ideal.num_generators());
  for (const auto& g : ideal.generators()) out.push_back(support_mask(g));
  return out;
}

// Closure of the generator supports under union.
std::vector<FaceMask> lcm_lattice(const std::vector<FaceMask>& gens) {
  std::unordered_set<FaceMask> seen(gens.begin(), gens.end());
  std::vector<FaceMask> frontier(seen.begin(), seen.end());
  while (!frontier.empty()) {
    std::vector<FaceMask> next;
    for (FaceMask x : frontier) {
      for (FaceMask g : gens) {
        const FaceMask y = x | g;
        if (seen.insert(y).second) next.push_back(y);
      }
    }
    frontier = std::move(next);
  }
  std::vector<FaceMask> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

// Faces of Delta|sigma found by enumeration; the inclusion-maximal ones
// are those admitting no further vertex of sigma.
std::vector<FaceMask> primal_facets(FaceMask sigma, const std::vector<FaceMask>& nonfaces,
                                    const std::vector<FaceMask>& faces) {
  std::vector<FaceMask> facets;
  for (FaceMask f : faces) {
    bool maximal = true;
    for (FaceMask rest = sigma & ~f; rest != 0 && maximal; rest &= rest - 1) {
      const FaceMask bigger = f | (rest & -rest);
      if (std::none_of(nonfaces.begin(), nonfaces.end(), [&](FaceMask n) { return (n & ~bigger) == 0; })) {
        maximal = false;
      }
    }
    if (maximal) facets.push_back(f);
  }
  return facets;
}

constexpr std::size_t kPrimalFaceCap = 4096;

// Adds beta_{i,sigma} for one sigma of the lcm lattice. Uses whichever of
// Delta|sigma and the upper Koszul complex <sigma \ C : C in gens, C <= sigma>
// is cheaper to present.
void add_multidegree(BettiTable& table, FaceMask sigma, const std::vector<FaceMask>& gens, const FieldChoice& field) {
  std::vector<FaceMask> inside;
  for (FaceMask g : gens) {
    if ((g & ~sigma) == 0) inside.push_back(g);
  }
  const int m = std::popcount(sigma);
  std::vector<FaceMask> faces;
  if (homology::enumerate_faces(sigma, inside, kPrimalFaceCap, faces)) {
    const ReducedHomology h = homology::from_facets(primal_facets(sigma, inside, faces), field);
    for (const auto& [degree, dim] : h.as_map()) table.add(m - degree - kHochsterShift, m, dim);
    return;
  }
  std::vector<FaceMask> koszul;
  koszul.reserve(inside.size());
  for (FaceMask g : inside) koszul.push_back(sigma & ~g);
  const ReducedHomology h = homology::from_facets(std::move(koszul), field);
  // beta_{i,sigma}(S/I) = dim H~_{i-2} of the upper Koszul complex.
  for (const auto& [degree, dim] : h.as_map()) table.add(degree + 2, m, dim);
}

}  // namespace

SimplicialComplex stanley_reisner_complex(const MonomialIdeal& ideal) {
  require_squarefree(ideal, "stanley_reisner_complex");
  require_proper(ideal, "stanley_reisner_complex");
  std::vector<std::string> labels;
  for (const auto& v : ideal.space().variables()) labels.push_back(v.name());
  return SimplicialComplex(ideal.num_vars(), generator_masks(ideal), std::move(labels));
}

SimplicialComplex independence_complex(const Graph& g) {
  std::vector<FaceMask> nonfaces;
  for (auto [u, v] : g.edges()) nonfaces.push_back(vertex_bit(u) | vertex_bit(v));
  return SimplicialComplex(static_cast<std::size_t>(g.num_vertices()), std::move(nonfaces));
}

BettiTable betti_table_squarefree(const MonomialIdeal& ideal, const FieldChoice& field, std::size_t guard) {
  require_squarefree(ideal, "betti_table_squarefree");
  require_proper(ideal, "betti_table_squarefree");
  if (ideal.num_vars() > guard) {
    throw_resource("Hochster enumeration over " + std::to_string(ideal.num_vars()) +
                   " variables exceeds the guard of " + std::to_string(guard));
  }
  BettiTable table(ideal.num_vars());
  table.add(0, 0, 1);
  const std::vector<FaceMask> gens = generator_masks(ideal);
  for (FaceMask sigma : lcm_lattice(gens)) add_multidegree(table, sigma, gens, field);
  return table;
}

BettiTable taylor_betti_oracle(const MonomialIdeal& ideal, const FieldChoice& field, std::size_t guard) {
  require_proper(ideal, "taylor_betti_oracle");
  const auto& gens = ideal.generators();
  const std::size_t r = gens.size();
  if (r > guard) {
    throw_resource("Taylor complex on " + std::to_string(r) + " generators exceeds the guard of " +
                   std::to_string(guard));
  }
  // Label every subset of generators by its lcm and group subsets by label.
  const std::size_t subsets = std::size_t{1} << r;
  std::vector<Monomial> label(subsets);
  label[0] = Monomial(ideal.num_vars(), 0);
  for (std::size_t f = 1; f < subsets; ++f) {
    const std::size_t low = static_cast<std::size_t>(std::countr_zero(f));
    label[f] = lcm(label[f & (f - 1)], gens[low]);
  }
  std::map<Monomial, std::vector<std::size_t>> strands;
  for (std::size_t f = 0; f < subsets; ++f) strands[label[f]].push_back(f);

  BettiTable table(ideal.num_vars());
  for (const auto& [m, members] : strands) {
    const int degree = static_cast<int>(total_degree(m));
    // by_size[i] lists the subsets of size i in this strand, sorted.
    std::vector<std::vector<std::size_t>> by_size(r + 1);
    for (std::size_t f : members) by_size[static_cast<std::size_t>(std::popcount(f))].push_back(f);
    std::vector<std::size_t> ranks(r + 2, 0);
    for (std::size_t i = 1; i <= r; ++i) {
      if (by_size[i].empty() || by_size[i - 1].empty()) continue;
      const auto& rows = by_size[i - 1];
      SparseMatrix mat;
      mat.rows = rows.size();
      for (std::size_t f : by_size[i]) {
        std::vector<SparseEntry> col;
        int position = 0;
        for (std::size_t rest = f; rest != 0; rest &= rest - 1, ++position) {
          const std::size_t face = f & ~(rest & (~rest + 1));
          const auto it = std::lower_bound(rows.begin(), rows.end(), face);
          // Faces with a smaller lcm carry a non-unit coefficient and vanish
          // after tensoring with the field.
          if (it == rows.end() || *it != face) continue;
          col.push_back({static_cast<std::uint32_t>(it - rows.begin()), position % 2 == 0 ? 1 : -1});
        }
        std::sort(col.begin(), col.end(), [](const SparseEntry& a, const SparseEntry& b) { return a.row < b.row; });
        mat.columns.push_back(std::move(col));
      }
      ranks[i] = rank(mat, field);
    }
    for (std::size_t i = 0; i <= r; ++i) {
      const std::size_t dim = by_size[i].size() - ranks[i] - ranks[i + 1];
      table.add(static_cast<int>(i), degree, dim);
    }
  }
  return table;
}

}  // namespace coverdepth
