#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace coverdepth {

// The coefficient field for homology and Betti numbers.
class FieldChoice {
 public:
  enum class Kind { rationals, prime };

  static FieldChoice rationals() { return FieldChoice(Kind::rationals, 0); }
  // Throws InputError unless p is a prime below 2^31.
  static FieldChoice prime(std::uint32_t p);

  Kind kind() const { return kind_; }
  std::uint32_t characteristic() const { return p_; }
  // "Q" or "F<p>".
  std::string name() const;

  friend bool operator==(const FieldChoice&, const FieldChoice&) = default;

 private:
  FieldChoice(Kind kind, std::uint32_t p) : kind_(kind), p_(p) {}
  Kind kind_;
  std::uint32_t p_;
};

struct SparseEntry {
  std::uint32_t row = 0;
  std::int64_t value = 0;
};

// Column-major sparse integer matrix; each column is sorted by row with no
// explicit zeros.
struct SparseMatrix {
  std::size_t rows = 0;
  std::vector<std::vector<SparseEntry>> columns;
};

// Exact rank. Over the rationals this runs fraction-free elimination in
// 64-bit integers and restarts in arbitrary precision on overflow.
std::size_t rank(const SparseMatrix& m, const FieldChoice& field);

}  // namespace coverdepth
