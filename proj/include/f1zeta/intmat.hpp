#pragma once

// Small dense integer matrices and the lattice routines built on them:
// Smith and Hermite normal forms, integer kernels, membership and
// coset reduction. Dimensions here are tiny (at most n-1 <= 5 or so);
// all arithmetic is overflow-checked int64.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace f1zeta {

using Int = std::int64_t;
using IntVec = std::vector<Int>;

Int checked_add(Int a, Int b);
Int checked_sub(Int a, Int b);
Int checked_mul(Int a, Int b);
Int floor_div(Int a, Int b);
Int floor_mod(Int a, Int b);
Int gcd(Int a, Int b);
Int lcm(Int a, Int b);

std::string to_string(std::span<const Int> v);

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols, Int fill = 0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<IntVec>& rows);
  static IntMatrix from_columns(const std::vector<IntVec>& cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Int operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntVec row(std::size_t r) const;
  IntVec column(std::size_t c) const;
  std::vector<IntVec> column_vectors() const;
  IntMatrix transpose() const;

  IntMatrix operator*(const IntMatrix& rhs) const;
  IntVec operator*(std::span<const Int> v) const;
  bool operator==(const IntMatrix&) const = default;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  // row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, Int factor);
  void add_col_multiple(std::size_t dst, std::size_t src, Int factor);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

// Exact determinant (fraction-free elimination over GMP integers).
mpz_class determinant(const IntMatrix& m);

struct SmithForm {
  IntMatrix U;  // unimodular, rows x rows
  IntMatrix D;  // diagonal, d_1 | d_2 | ...
  IntMatrix V;  // unimodular, cols x cols
};

// U * M * V = D. Pivot: smallest nonzero absolute value in the active
// block, first in row-major scan order. Works for any shape; throws
// InvalidInput for a singular square matrix when require_nonsingular.
SmithForm smith_normal_form(const IntMatrix& m, bool require_nonsingular = true);

// Row-style Hermite normal form of the lattice generated by `generators`
// (each a row). Returned rows are a basis: echelon, positive pivots,
// entries above each pivot reduced into [0, pivot). Zero rows dropped.
std::vector<IntVec> hermite_basis(const std::vector<IntVec>& generators, std::size_t dim);

// Pivot column of each row of a hermite_basis result.
std::vector<std::size_t> pivot_columns(const std::vector<IntVec>& hermite);

// Canonical representative of v modulo the lattice with the given Hermite basis.
IntVec reduce_modulo(IntVec v, const std::vector<IntVec>& hermite);

bool lattice_contains(const std::vector<IntVec>& hermite, std::span<const Int> v);

// Basis (Hermite form) of {x in Z^cols : A x = 0}.
std::vector<IntVec> integer_kernel(const IntMatrix& a);

// Index [L1 : L2] for lattices of equal rank with L2 inside L1, both in
// Hermite form. Throws InvalidInput if the ranks or spans differ.
Int sublattice_index(const std::vector<IntVec>& outer, const std::vector<IntVec>& inner);

// Rational solution x of B x = v for square nonsingular B, if any.
std::optional<std::vector<mpq_class>> solve_rational(const IntMatrix& b, std::span<const Int> v);

}  // namespace f1zeta
