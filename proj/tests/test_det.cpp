#include <doctest.h>

#include <random>

#include "f1zeta/det.hpp"
#include "f1zeta/intmat.hpp"
#include "oracles/oracles.hpp"

using namespace f1zeta;

namespace {

std::vector<Int32Matrix> random_coeffs(std::mt19937_64& rng, std::size_t n, std::size_t deg, int bound) {
  std::uniform_int_distribution<int> d(-bound, bound);
  std::vector<Int32Matrix> out(deg + 1, Int32Matrix(n));
  for (auto& c : out)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) c(i, j) = d(rng);
  return out;
}

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

}  // namespace

TEST_CASE("modular primes") {
  auto ps = modular_primes(20);
  CHECK(ps.size() == 20);
  for (std::size_t i = 0; i < ps.size(); ++i) {
    CHECK(is_prime(ps[i]));
    CHECK(ps[i] < (1u << 26));
    if (i) CHECK(ps[i] < ps[i - 1]);
  }
}

TEST_CASE("det mod p agrees with the exact determinant") {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<Int> d(-50, 50);
  const std::uint32_t p = modular_primes(1)[0];
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 1 + trial % 9;
    IntMatrix m(n, n);
    std::vector<std::uint32_t> a(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        m(i, j) = d(rng);
        a[i * n + j] = static_cast<std::uint32_t>(floor_mod(m(i, j), p));
      }
    mpz_class exact = determinant(m);
    mpz_class r = exact % p;
    if (r < 0) r += p;
    CHECK(det_mod_p(a, n, p) == r.get_ui());
  }
}

TEST_CASE("small examples") {
  // det(I - A u) for the 4-cycle: (1 - u^2)^2 ... with A = C + C^T.
  Int32Matrix a(4);
  for (std::size_t v = 0; v < 4; ++v) {
    a((v + 1) % 4, v) = 1;
    a((v + 3) % 4, v) = 1;
  }
  std::vector<Int32Matrix> c{Int32Matrix::identity(4), a * -1};
  auto det = polynomial_det(c);
  // Eigenvalues 2, 0, 0, -2.
  CHECK(det == IntPolynomial{1, 0, -4});
  CHECK(polynomial_det(c, DetEngine::bareiss) == det);
  CHECK(oracle::leibniz_det(c) == det);

  std::vector<Int32Matrix> zero{Int32Matrix(3)};
  CHECK(polynomial_det(zero).is_zero());
}

TEST_CASE("engines agree with the Leibniz expansion") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t n = 1 + trial % 6;
    const std::size_t deg = trial % 4;
    auto c = random_coeffs(rng, n, deg, trial % 2 ? 3 : 40);
    auto expect = oracle::leibniz_det(c);
    DetStats stats;
    CHECK(polynomial_det(c, DetEngine::multimodular, &stats) == expect);
    CHECK(polynomial_det(c, DetEngine::bareiss) == expect);
    CHECK(stats.primes >= 2);
    for (const auto& coeff : expect.coefficients()) CHECK(abs(coeff) <= det_coefficient_bound(c));
  }
}

TEST_CASE("engines agree on larger matrices") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 6; ++trial) {
    const std::size_t n = 20 + 7 * trial;
    auto c = random_coeffs(rng, n, 1 + trial % 3, 5);
    c[0] = c[0] + Int32Matrix::identity(n);
    CHECK(polynomial_det(c, DetEngine::multimodular) == polynomial_det(c, DetEngine::bareiss));
  }
}
