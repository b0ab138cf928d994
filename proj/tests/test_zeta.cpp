#include <doctest.h>

#include <random>

#include "f1zeta/error.hpp"
#include "f1zeta/zeta.hpp"

using namespace f1zeta;

namespace {

IntPolynomial power_of(std::size_t m, unsigned e) { return IntPolynomial::one_minus_power(m).pow(e); }

TranslationSubgroup random_type_zero(std::mt19937_64& rng, int n, Int max_index) {
  std::uniform_int_distribution<Int> d(-3, 3);
  for (;;) {
    TranslationSubgroup g{n, {}};
    for (int j = 0; j < n - 1; ++j) {
      IntVec c(n - 1);
      for (auto& x : c) x = d(rng);
      c[0] -= LambdaElement::from_lambda_coords(n, c).type();
      g.generators.push_back(c);
    }
    mpz_class det = abs(determinant(g.basis()));
    if (det != 0 && det <= max_index) return g;
  }
}

}  // namespace

TEST_CASE("positive zeta examples") {
  struct Case {
    TranslationSubgroup gamma;
    IntPolynomial expect;
  };
  std::vector<Case> cases{
      {{2, {{2}}}, power_of(2, 2)},
      {{3, {{1, -1}, {0, 3}}}, power_of(3, 3)},
      {{3, {{3, 0}, {0, 3}}}, power_of(3, 9)},
  };
  for (const auto& c : cases) {
    auto g = build_graph(c.gamma);
    CHECK(zeta_positive_det(g) == c.expect);
    CHECK(zeta_positive_det(g, DetEngine::bareiss) == c.expect);
    CHECK(zeta_positive_orders(c.gamma) == c.expect);
    auto l = lfunction(c.gamma);
    CHECK(l.poly == c.expect);
    CHECK(l.max_deviation < 1e-6);
  }
}

TEST_CASE("coefficient matrices") {
  auto g = build_graph({3, {{3, 0}, {0, 3}}});
  auto c = positive_zeta_matrices(g);
  CHECK(c.size() == 4);
  CHECK(c[0] == Int32Matrix::identity(9));
  CHECK(c[1] == g.typed_adjacency(1) * -1);
  CHECK(c[2] == g.typed_adjacency(2));
  CHECK(c[3] == Int32Matrix::identity(9) * -1);
}

TEST_CASE("three methods agree on random quotients") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = 2 + trial % 3;
    auto gamma = random_type_zero(rng, n, 60);
    auto g = build_graph(gamma);
    auto det = zeta_positive_det(g);
    CHECK(det == zeta_positive_orders(gamma));
    auto l = lfunction(gamma);
    CHECK(l.poly == det);
    CHECK(l.max_deviation < 1e-6);
    CHECK(det.degree() == n * gamma.index());
    CHECK(det.coefficient(0) == 1);
    auto orders = generator_orders(gamma);
    CHECK(orders.size() == static_cast<std::size_t>(n));
    auto roots = check_roots_on_unit_circle(det, orders);
    CHECK(roots.max_modulus_deviation < 1e-9);
    CHECK(roots.max_residual < 1e-6);
  }
}

TEST_CASE("geodesic classes and the Euler product") {
  for (const TranslationSubgroup& gamma : {TranslationSubgroup{2, {{6}}}, TranslationSubgroup{3, {{3, 0}, {0, 6}}},
                                          TranslationSubgroup{4, {{1, -1, 0}, {0, 1, -1}, {0, 0, 4}}}}) {
    auto g = build_graph(gamma);
    const std::size_t D = 12;
    auto classes = enumerate_positive_geodesics(g, D);
    auto orders = generator_orders(gamma);
    for (int i = 1; i <= gamma.n; ++i) {
      Int count = 0;
      for (const auto& c : classes) count += c.direction == i;
      const Int m = orders[i - 1];
      CHECK(count == (m <= static_cast<Int>(D) ? gamma.index() / m : 0));
    }
    CHECK(euler_product_truncation(classes, D) == zeta_positive_det(g).truncated(D));
  }
  CHECK_THROWS_AS(euler_product_truncation(std::vector<Int>{0}, 4), InvalidInput);
}

TEST_CASE("zeta cross-check flags a perturbed graph") {
  TranslationSubgroup gamma{3, {{3, 0}, {0, 3}}};
  auto g = build_graph(gamma);
  CHECK(cross_check_zeta(gamma, g, 12, 1e-9).ok());
  perturb_adjacency(g, 1, 0, 0, 1);
  auto r = cross_check_zeta(gamma, g, 12, 1e-9);
  CHECK_FALSE(r.ok());
  CHECK_FALSE(r.det_equals_orders);
}

TEST_CASE("Ihara zeta of cycles") {
  GraphOptions any;
  any.require_type_zero = false;
  for (Int N = 4; N <= 10; ++N) {
    auto g = build_graph({2, {{N}}}, any);
    auto r = ihara_bass(g);
    CHECK(r.chi == 0);
    CHECK(r.numerator == power_of(static_cast<std::size_t>(N), 2));
    std::vector<Int> lengths;
    for (const auto& c : enumerate_backtrackless_cycles(g, 2 * N)) lengths.push_back(c.vertices.size());
    CHECK(lengths == std::vector<Int>{N, N});
  }
}

TEST_CASE("Ihara zeta against backtrackless cycles") {
  GraphOptions any;
  any.require_type_zero = false;
  auto g = build_graph({3, {{5, 0}, {0, 5}}}, any);
  auto r = ihara_bass(g);
  CHECK(r.chi == 25 * (2 - 4));
  const std::size_t L = 8;
  std::vector<Int> lengths;
  for (const auto& c : enumerate_backtrackless_cycles(g, L)) lengths.push_back(c.vertices.size());
  auto expect = euler_product_truncation(lengths, L);
  CHECK(ihara_series(r, L) == expect);
  CHECK(ihara_series(r, L, true) != expect);
}

TEST_CASE("backtrackless enumeration rejects multigraphs") {
  auto g = build_graph({3, {{1, -1}, {0, 3}}});
  CHECK_THROWS_AS(enumerate_backtrackless_cycles(g, 6), InvalidInput);
}
