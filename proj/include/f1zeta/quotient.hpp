#pragma once

// Finite-index subgroups of Lambda (and split affine subgroups M x| P),
// the finite abelian quotient Lambda/Gamma and its characters.

#include <string>
#include <vector>

#include "f1zeta/intmat.hpp"
#include "f1zeta/lambda.hpp"

namespace f1zeta {

// Gamma inside Lambda, generated by n-1 vectors in Lambda-coordinates.
struct TranslationSubgroup {
  int n = 0;
  std::vector<IntVec> generators;  // columns of the basis matrix

  IntMatrix basis() const { return IntMatrix::from_columns(generators); }
  // |det|; throws InvalidInput for a wrong shape or a singular basis.
  Int index() const;
  // Throws InvalidInput naming the first generator whose type is nonzero.
  void check_type_zero() const;
  bool contains(const LambdaElement& a) const;
  std::vector<IntVec> hermite() const;
  std::string describe() const;
};

// Split subgroup M x| P of G; P must map M to itself.
struct AffineSubgroup {
  TranslationSubgroup lattice;
  std::vector<Permutation> perm_generators;

  // Validates P-stability and type-zero; returns the elements of P.
  std::vector<Permutation> perm_group() const;
  // [G : Gamma] = n! * [Lambda : M] / |P|
  Int index_in_G() const;
  bool contains(const AffineElement& g) const;
};

// Exact fraction of a full turn, 0 <= num < den, reduced.
struct Turn {
  Int num = 0;
  Int den = 1;

  static Turn make(Int num, Int den);
  Turn operator+(const Turn& rhs) const;
  bool operator==(const Turn&) const = default;
  bool is_zero() const { return num == 0; }
};

class FiniteAbelianGroup {
 public:
  FiniteAbelianGroup() = default;
  // Throws InvalidInput on a singular basis; the type-zero condition is
  // checked by quotient_group, not here.
  explicit FiniteAbelianGroup(const TranslationSubgroup& gamma);

  int n() const { return n_; }
  Int order() const { return order_; }
  // d_1 | d_2 | ... | d_{n-1} (ones included).
  const std::vector<Int>& divisors() const { return divisors_; }
  const SmithForm& smith() const { return smith_; }

  // Residues (k_i mod d_i) of the class of a.
  IntVec project(const LambdaElement& a) const;
  IntVec project_coords(std::span<const Int> lambda_coords) const;
  IntVec add(std::span<const Int> x, std::span<const Int> y) const;

  // Lexicographic (mixed radix) index of a residue tuple and back.
  std::size_t index_of(std::span<const Int> residues) const;
  IntVec element(std::size_t index) const;

 private:
  int n_ = 0;
  Int order_ = 0;
  std::vector<Int> divisors_;
  SmithForm smith_;
  IntMatrix projection_;  // rows of U reduced mod d_i
};

// Checks type zero, then builds Lambda/Gamma.
FiniteAbelianGroup quotient_group(const TranslationSubgroup& gamma);

// Smallest m >= 1 with m*a in Gamma.
Int order_of(const LambdaElement& a, const FiniteAbelianGroup& q);

struct Character {
  IntVec exponents;  // k_i mod d_i

  Turn value(const FiniteAbelianGroup& q, const LambdaElement& a) const;
  Turn value_on_residues(const FiniteAbelianGroup& q, std::span<const Int> residues) const;
  // rho(e_1) .. rho(e_n)
  std::vector<Turn> satake(const FiniteAbelianGroup& q) const;
};

// All N characters in lexicographic order of exponents.
std::vector<Character> characters(const FiniteAbelianGroup& q);

}  // namespace f1zeta
