#pragma once

// Exact determinants of square polynomial matrices C_0 + C_1 t + ... + C_k t^k
// with small integer coefficient matrices.

#include <cstdint>
#include <vector>

#include "f1zeta/cayley.hpp"
#include "f1zeta/polynomial.hpp"

namespace f1zeta {

enum class DetEngine {
  // det mod word-size primes at deg+1 points, Newton interpolation mod p,
  // CRT lifting under an a-priori coefficient bound, one extra prime as a check.
  multimodular,
  // Fraction-free elimination over GMP integers at deg+1 points, exact
  // rational interpolation. Slow; used as a reference.
  bareiss,
};

const char* to_string(DetEngine e);

struct DetStats {
  int primes = 0;
  int points = 0;
  std::size_t bound_bits = 0;
};

IntPolynomial polynomial_det(const std::vector<Int32Matrix>& coeffs, DetEngine engine = DetEngine::multimodular,
                             DetStats* stats = nullptr);

// Bound on sum_k |coefficient_k| of the determinant.
mpz_class det_coefficient_bound(const std::vector<Int32Matrix>& coeffs);

// det mod p of an N x N matrix stored row-major (destroyed).
std::uint32_t det_mod_p(std::vector<std::uint32_t>& a, std::size_t n, std::uint32_t p);

// Primes below 2^26 in decreasing order.
std::vector<std::uint32_t> modular_primes(std::size_t count);

}  // namespace f1zeta
