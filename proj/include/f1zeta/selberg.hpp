#pragma once

// The several-variable Selberg-type zeta S_Gamma(u): truncated series by
// conjugacy-class enumeration, the exact rational form for translation
// groups and the comparison with Z+.

#include <optional>
#include <vector>

#include "f1zeta/lambda.hpp"
#include "f1zeta/multivariate.hpp"
#include "f1zeta/polynomial.hpp"
#include "f1zeta/quotient.hpp"

namespace f1zeta {

struct EnumerationCaps {
  Int max_box_points = 50'000'000;
};

// Sum over gamma in Gamma with total length degree <= D of N #K_gamma u^{l(gamma)}.
MultiSeries selberg_series_translation(const TranslationSubgroup& gamma, int D, LengthScale scale,
                                       const EnumerationCaps& caps = {});

// Exact rational form N sum_{p in K} sum_S cone_sum(p Gamma cap Lambda_S^+).
MultiRational selberg_rational_translation(const TranslationSubgroup& gamma, LengthScale scale);

// Every denominator factor is 1 - u^e; returns max | |p| - 1 | over the
// coordinates of the points where a single-variable factor vanishes, and
// whether every factor involves exactly one variable.
struct PoleCheck {
  bool univariate_factors = true;
  double max_modulus_deviation = 0.0;
  std::size_t factors = 0;
};
PoleCheck check_poles(const MultiRational& r);

struct ConjClass {
  AffineElement representative;
  Int weight = 0;  // #(Gamma_gamma \ G_gamma)
  LengthVector lengths;
};

// Gamma-conjugacy classes of M x| P with total length degree <= D.
// At geodesic scale, throws InvalidInput when some class of degree <= D
// has fractional lengths (use the factorial scale there).
std::vector<ConjClass> enumerate_classes_affine(const AffineSubgroup& gamma, int D, LengthScale scale,
                                                const EnumerationCaps& caps = {});
MultiSeries selberg_series_affine(const AffineSubgroup& gamma, int D, LengthScale scale,
                                  const EnumerationCaps& caps = {});

// [G_gamma : Gamma_gamma] for gamma in M x| P.
Int centralizer_index(const AffineSubgroup& gamma, const std::vector<Permutation>& P, const AffineElement& g);

// Canonical key of the Gamma-conjugacy class of g (g must lie in Gamma).
AffineElement gamma_class_key(const AffineSubgroup& gamma, const std::vector<Permutation>& P, const AffineElement& g);

// Canonical form of the G-conjugacy class: the sorted fixed projection
// scaled by n! and shifted to end in 0, plus the cycle type of the
// permutation part inside each block of equal projected value.
struct GClassKey {
  IntVec scaled_projection;
  std::vector<std::vector<int>> block_cycle_types;
  auto operator<=>(const GClassKey&) const = default;
};
GClassKey g_class_key(const AffineElement& g);

// Some h in G with h x h^-1 = y, if one exists.
std::optional<AffineElement> find_conjugator(const AffineElement& x, const AffineElement& y);

// The unique j (1-based) with l_j(g) != 0, if exactly one exists.
std::optional<int> rational_geodesic_pattern(const AffineElement& g);

struct ComparisonReport {
  int max_degree = 0;
  std::vector<mpz_class> lhs;        // coefficient of x^k, k = 0..D, identity class excluded
  std::vector<mpz_class> rhs;        // -(n-1)! x Z+'/Z+
  std::vector<mpz_class> literal;    // (n-1)! Z+'/Z+
  bool corrected_holds = false;
  bool literal_holds = false;
  mpz_class literal_max_discrepancy;  // max_k |lhs_k - literal_k|
};

ComparisonReport comparison_check(const TranslationSubgroup& gamma, int D, const IntPolynomial& z_plus);
ComparisonReport comparison_check(const TranslationSubgroup& gamma, int D);

}  // namespace f1zeta
