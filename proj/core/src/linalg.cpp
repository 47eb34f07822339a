#include "coverdepth/linalg.hpp"

#include <gmpxx.h>

#include <cstdlib>
#include <numeric>

#include "coverdepth/errors.hpp"

namespace coverdepth {

FieldChoice FieldChoice::prime(std::uint32_t p) {
  if (p < 2 || p >= (1u << 31)) throw_input("field characteristic must be a prime below 2^31");
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) throw_input(std::to_string(p) + " is not prime");
  }
  return FieldChoice(Kind::prime, p);
}

std::string FieldChoice::name() const { return kind_ == Kind::rationals ? "Q" : "F" + std::to_string(p_); }

namespace {

struct Overflow {};

// Checked 64-bit arithmetic; values stay below 2^62 in magnitude so that
// negation and gcd never overflow.
struct Checked {
  using Int = std::int64_t;
  static constexpr Int kLimit = Int{1} << 62;

  static Int combine(Int b, Int x, Int a, Int y) {
    Int left = 0;
    Int right = 0;
    Int out = 0;
    if (__builtin_mul_overflow(b, x, &left) || __builtin_mul_overflow(a, y, &right) ||
        __builtin_sub_overflow(left, right, &out) || out >= kLimit || out <= -kLimit) {
      throw Overflow{};
    }
    return out;
  }
  static Int gcd(Int a, Int b) { return std::gcd(a, b); }
  static bool is_zero(const Int& v) { return v == 0; }
  static Int from(std::int64_t v) { return v; }
};

struct Big {
  using Int = mpz_class;

  static Int combine(const Int& b, const Int& x, const Int& a, const Int& y) { return b * x - a * y; }
  static Int gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
  }
  static bool is_zero(const Int& v) { return sgn(v) == 0; }
  static Int from(std::int64_t v) { return Int(static_cast<long>(v)); }
};

template <typename Ops>
struct IntColumn {
  std::vector<std::uint32_t> rows;
  std::vector<typename Ops::Int> vals;

  bool empty() const { return rows.empty(); }
};

// c <- b*c - a*p, then divide out the content.
template <typename Ops>
void eliminate(IntColumn<Ops>& c, const IntColumn<Ops>& p, const typename Ops::Int& a, const typename Ops::Int& b) {
  using Int = typename Ops::Int;
  IntColumn<Ops> out;
  out.rows.reserve(c.rows.size() + p.rows.size());
  out.vals.reserve(c.rows.size() + p.rows.size());
  const Int zero = Ops::from(0);
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < c.rows.size() || j < p.rows.size()) {
    std::uint32_t row = 0;
    Int v;
    if (j == p.rows.size() || (i < c.rows.size() && c.rows[i] < p.rows[j])) {
      row = c.rows[i];
      v = Ops::combine(b, c.vals[i], zero, zero);
      ++i;
    } else if (i == c.rows.size() || p.rows[j] < c.rows[i]) {
      row = p.rows[j];
      v = Ops::combine(zero, zero, a, p.vals[j]);
      ++j;
    } else {
      row = c.rows[i];
      v = Ops::combine(b, c.vals[i], a, p.vals[j]);
      ++i;
      ++j;
    }
    if (!Ops::is_zero(v)) {
      out.rows.push_back(row);
      out.vals.push_back(std::move(v));
    }
  }
  if (!out.empty()) {
    Int g = Ops::from(0);
    for (const auto& v : out.vals) g = Ops::gcd(g, v);
    if (!(g == Ops::from(1))) {
      for (auto& v : out.vals) v /= g;
    }
  }
  c = std::move(out);
}

// Column reduction keyed on the largest row index of each column.
template <typename Ops>
std::size_t integer_rank(const SparseMatrix& m) {
  std::vector<IntColumn<Ops>> reduced;
  std::vector<std::int64_t> pivot_of_row(m.rows, -1);
  for (const auto& source : m.columns) {
    IntColumn<Ops> c;
    for (const auto& e : source) {
      c.rows.push_back(e.row);
      c.vals.push_back(Ops::from(e.value));
    }
    while (!c.empty()) {
      const std::uint32_t low = c.rows.back();
      const std::int64_t owner = pivot_of_row[low];
      if (owner < 0) {
        pivot_of_row[low] = static_cast<std::int64_t>(reduced.size());
        reduced.push_back(std::move(c));
        break;
      }
      const auto& p = reduced[static_cast<std::size_t>(owner)];
      const auto a = c.vals.back();
      const auto b = p.vals.back();
      eliminate<Ops>(c, p, a, b);
    }
  }
  return reduced.size();
}

std::uint64_t power_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t result = 1;
  base %= p;
  while (exp != 0) {
    if (exp & 1) result = result * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return result;
}

std::size_t modular_rank(const SparseMatrix& m, std::uint64_t p) {
  struct Column {
    std::vector<std::uint32_t> rows;
    std::vector<std::uint64_t> vals;
  };
  std::vector<Column> reduced;
  std::vector<std::int64_t> pivot_of_row(m.rows, -1);
  auto reduce_mod = [p](std::int64_t v) {
    const auto r = v % static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(p) : r);
  };
  for (const auto& source : m.columns) {
    Column c;
    for (const auto& e : source) {
      const auto v = reduce_mod(e.value);
      if (v != 0) {
        c.rows.push_back(e.row);
        c.vals.push_back(v);
      }
    }
    while (!c.rows.empty()) {
      const std::uint32_t low = c.rows.back();
      const std::int64_t owner = pivot_of_row[low];
      if (owner < 0) {
        // Store with unit pivot.
        const std::uint64_t inv = power_mod(c.vals.back(), p - 2, p);
        for (auto& v : c.vals) v = v * inv % p;
        pivot_of_row[low] = static_cast<std::int64_t>(reduced.size());
        reduced.push_back(std::move(c));
        break;
      }
      const Column& piv = reduced[static_cast<std::size_t>(owner)];
      const std::uint64_t factor = c.vals.back();
      Column out;
      std::size_t i = 0;
      std::size_t j = 0;
      while (i < c.rows.size() || j < piv.rows.size()) {
        std::uint32_t row = 0;
        std::uint64_t v = 0;
        if (j == piv.rows.size() || (i < c.rows.size() && c.rows[i] < piv.rows[j])) {
          row = c.rows[i];
          v = c.vals[i++];
        } else if (i == c.rows.size() || piv.rows[j] < c.rows[i]) {
          row = piv.rows[j];
          v = (p - factor * piv.vals[j++] % p) % p;
        } else {
          row = c.rows[i];
          v = (c.vals[i++] + p - factor * piv.vals[j++] % p) % p;
        }
        if (v != 0) {
          out.rows.push_back(row);
          out.vals.push_back(v);
        }
      }
      c = std::move(out);
    }
  }
  return reduced.size();
}

}  // namespace

std::size_t rank(const SparseMatrix& m, const FieldChoice& field) {
  if (field.kind() == FieldChoice::Kind::prime) return modular_rank(m, field.characteristic());
  try {
    return integer_rank<Checked>(m);
  } catch (const Overflow&) {
    return integer_rank<Big>(m);
  }
}

}  // namespace coverdepth
