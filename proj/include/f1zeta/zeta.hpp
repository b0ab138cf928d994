#pragma once

// Positive-geodesic zeta Z+ (determinant, generator orders, character
// product), the Ihara zeta via the Bass determinant and the brute-force
// cycle enumerations used as oracles.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "f1zeta/cayley.hpp"
#include "f1zeta/det.hpp"
#include "f1zeta/polynomial.hpp"
#include "f1zeta/quotient.hpp"

namespace f1zeta {

// C_k = (-1)^k A_k with A_0 = A_n = I.
std::vector<Int32Matrix> positive_zeta_matrices(const QuotientGraph& g);

// det(I - A_1 u + ... + (-1)^n u^n I).
IntPolynomial zeta_positive_det(const QuotientGraph& g, DetEngine engine = DetEngine::multimodular,
                                DetStats* stats = nullptr);

// Orders m_1..m_n of s_1..s_n in Lambda/Gamma.
std::vector<Int> generator_orders(const TranslationSubgroup& gamma);
// prod_i (1 - u^{m_i})^{N/m_i}
IntPolynomial zeta_positive_orders(const TranslationSubgroup& gamma);

struct LFunctionResult {
  IntPolynomial poly;
  double max_deviation = 0.0;  // largest distance of a coefficient from its rounding
  int precision_bits = 0;
};

// prod over characters rho of prod_j (1 - rho_j u), rounded. Never throws
// on deviation; see lfunction for the checked variant.
LFunctionResult lfunction_unchecked(const TranslationSubgroup& gamma);
// Throws NumericalFailure when the deviation exceeds the tolerance.
LFunctionResult lfunction(const TranslationSubgroup& gamma, double tolerance = 1e-9);

struct IharaResult {
  IntPolynomial numerator;  // det(I - A u + (2^n - 3) u^2 I)
  Int chi = 0;              // N (2 - 2^{n-1})
};

IharaResult ihara_bass(const QuotientGraph& g, DetEngine engine = DetEngine::multimodular);
// numerator / (1 - u^2)^chi as a power series to max_degree; with
// inverse_exponent the numerator is multiplied by (1 - u^2)^chi instead.
IntPolynomial ihara_series(const IharaResult& r, std::size_t max_degree, bool inverse_exponent = false);

struct GeodesicClass {
  Int length = 0;
  Int primitive_length = 0;
  int direction = 0;               // i of s_i, 1-based
  std::uint32_t representative = 0;  // least vertex on the cycle
};

// Primitive positive closed geodesics of length <= max_length, up to rotation.
std::vector<GeodesicClass> enumerate_positive_geodesics(const QuotientGraph& g, Int max_length);

IntPolynomial euler_product_truncation(const std::vector<Int>& lengths, std::size_t max_degree);
IntPolynomial euler_product_truncation(const std::vector<GeodesicClass>& classes, std::size_t max_degree);

struct CycleClass {
  std::vector<std::uint32_t> vertices;  // least rotation, closing edge implied
};

// Primitive tailless backtrackless cycles of length <= max_length up to
// rotation. Throws InvalidInput on multigraphs (loops or parallel edges).
std::vector<CycleClass> enumerate_backtrackless_cycles(const QuotientGraph& g, Int max_length);

// Largest | |z| - 1 | over the zeros of prod (1 - u^{m_i}), together with
// the largest |Z(z)| when evaluated on the given polynomial.
struct RootCheck {
  double max_modulus_deviation = 0.0;
  double max_residual = 0.0;
};
RootCheck check_roots_on_unit_circle(const IntPolynomial& z, const std::vector<Int>& orders);

struct ZetaReport {
  int max_degree = 0;
  std::vector<Int> orders;
  IntPolynomial det;
  IntPolynomial by_orders;
  LFunctionResult lfunction;
  IntPolynomial euler;           // truncated at max_degree
  IntPolynomial det_truncated;   // det truncated at max_degree
  std::vector<Int> class_counts;  // primitive classes per direction found
  std::vector<Int> expected_counts;
  bool det_equals_orders = false;
  bool lfunction_equals_det = false;
  bool lfunction_within_tolerance = false;
  bool euler_matches = false;
  bool counts_match = false;
  bool degree_and_ends_ok = false;
  RootCheck roots;
  DetStats det_stats;

  bool ok() const {
    return det_equals_orders && lfunction_equals_det && lfunction_within_tolerance && euler_matches &&
           counts_match && degree_and_ends_ok;
  }
};

// Runs every Z+ method on g (which may have been perturbed) and compares.
ZetaReport cross_check_zeta(const TranslationSubgroup& gamma, const QuotientGraph& g, int max_degree,
                           double tolerance, DetEngine engine = DetEngine::multimodular);

}  // namespace f1zeta
