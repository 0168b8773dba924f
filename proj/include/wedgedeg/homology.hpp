#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "wedgedeg/group.hpp"
#include "wedgedeg/rational.hpp"

namespace wedgedeg {

// Row-sparse integer matrix. Each row keeps its nonzero entries sorted by
// column.
class IntegerMatrix {
 public:
  using Entry = std::pair<std::uint32_t, BigInt>;
  using Row = std::vector<Entry>;

  IntegerMatrix(std::size_t rows, std::size_t cols);
  static IntegerMatrix from_dense(const std::vector<std::vector<std::int64_t>>& m);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  // Adds v to entry (r, c), dropping it if the sum is zero.
  void add(std::size_t r, std::size_t c, const BigInt& v);
  BigInt at(std::size_t r, std::size_t c) const;
  const Row& row(std::size_t r) const { return rows_[r]; }
  std::size_t nonzeros() const;

 private:
  friend class SmithReducer;
  std::size_t cols_;
  std::vector<Row> rows_;
};

struct SmithForm {
  // min(rows, cols) diagonal entries d1 | d2 | ..., zeros last.
  std::vector<BigInt> invariant_factors;
  std::size_t rank = 0;
};

SmithForm smith_normal_form(IntegerMatrix m);

inline constexpr std::size_t kDefaultHomologyCap = 24;

// Boundary maps of the inhomogeneous bar complex with trivial coefficients,
// one row per simplex: [g|h] is index g*|G| + h, [g|h|k] is
// (g*|G| + h)*|G| + k.
IntegerMatrix bar_boundary2(const FiniteGroup& g);
IntegerMatrix bar_boundary3(const FiniteGroup& g);

// Abelian invariants (ascending, trivial factors dropped) of H_2(G; Z) and
// H_1(G; Z). Throws GroupTooLarge above the cap.
std::vector<std::uint64_t> bar_h2(const FiniteGroup& g,
                                  std::size_t cap = kDefaultHomologyCap);
std::vector<std::uint64_t> bar_h1(const FiniteGroup& g,
                                  std::size_t cap = kDefaultHomologyCap);

}  // namespace wedgedeg
