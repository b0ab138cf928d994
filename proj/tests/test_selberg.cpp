#include <doctest.h>

#include "f1zeta/error.hpp"
#include "f1zeta/selberg.hpp"
#include "f1zeta/zeta.hpp"
#include "oracles/oracles.hpp"

using namespace f1zeta;

namespace {

std::vector<TranslationSubgroup> panel() {
  return {
      {2, {{2}}},
      {2, {{6}}},
      {3, {{1, -1}, {0, 3}}},
      {3, {{3, 0}, {0, 3}}},
      {3, {{1, 2}, {0, 6}}},
      {4, {{1, -1, 0}, {0, 1, -1}, {0, 0, 4}}},
      {4, {{2, 2, 0}, {0, 2, 2}, {0, 0, 4}}},
  };
}

Int factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

}  // namespace

TEST_CASE("translation series examples") {
  auto s = selberg_series_translation({2, {{2}}}, 8, LengthScale::geodesic);
  for (int k = 0; k <= 8; ++k) CHECK(s.coefficient({k}) == (k % 2 == 0 ? 4 : 0));

  auto t = selberg_series_translation({3, {{1, -1}, {0, 3}}}, 3, LengthScale::geodesic);
  CHECK(t.coefficient({3, 0}) == 18);
  CHECK(t.coefficient({0, 3}) == 18);

  for (const auto& gamma : panel())
    CHECK(selberg_series_translation(gamma, 0, LengthScale::geodesic).coefficient(ExpVec(gamma.n - 1, 0)) ==
          gamma.index() * factorial(gamma.n));
}

TEST_CASE("translation rational form example") {
  auto r = selberg_rational_translation({2, {{2}}}, LengthScale::geodesic);
  auto s = r.expand(10);
  for (int k = 0; k <= 10; ++k) CHECK(s.coefficient({k}) == (k % 2 == 0 ? 4 : 0));
  auto poles = check_poles(r);
  CHECK(poles.univariate_factors);
  CHECK(poles.max_modulus_deviation < 1e-9);
}

TEST_CASE("series agrees with enumeration over generator combinations") {
  for (const auto& gamma : panel())
    for (auto scale : {LengthScale::geodesic, LengthScale::factorial}) {
      const int D = gamma.n == 4 ? 6 : 9;
      const Int range = gamma.n == 4 ? 14 : 20;
      INFO(gamma.describe() << " scale " << static_cast<int>(scale));
      CHECK(selberg_series_translation(gamma, D, scale) == oracle::selberg_by_generators(gamma, D, scale, range));
    }
}

TEST_CASE("rational form expands to the series") {
  for (const auto& gamma : panel()) {
    const int D = gamma.n == 4 ? 14 : 20;
    auto r = selberg_rational_translation(gamma, LengthScale::geodesic);
    CHECK(r.expand(D) == selberg_series_translation(gamma, D, LengthScale::geodesic));
    auto poles = check_poles(r);
    CHECK(poles.univariate_factors);
    CHECK(poles.max_modulus_deviation < 1e-9);
    CHECK(poles.factors > 0);
  }
  auto gamma = panel()[3];
  auto rf = selberg_rational_translation(gamma, LengthScale::factorial);
  CHECK(rf.expand(24) == selberg_series_translation(gamma, 24, LengthScale::factorial));
}

TEST_CASE("enumeration caps") {
  EnumerationCaps tiny;
  tiny.max_box_points = 10;
  CHECK_THROWS_AS(selberg_series_translation({3, {{3, 0}, {0, 3}}}, 12, LengthScale::geodesic, tiny), ResourceLimit);
}

TEST_CASE("comparison examples") {
  auto c2 = comparison_check({2, {{2}}}, 10);
  CHECK(c2.corrected_holds);
  CHECK_FALSE(c2.literal_holds);
  for (int k = 0; k <= 10; ++k) CHECK(c2.lhs[k] == (k >= 2 && k % 2 == 0 ? 4 : 0));

  auto c3 = comparison_check({3, {{1, -1}, {0, 3}}}, 9);
  CHECK(c3.corrected_holds);
  CHECK(c3.lhs[3] == 18);
  CHECK(c3.rhs[3] == 18);

  auto small = comparison_check({3, {{3, 0}, {0, 3}}}, 2);
  for (const auto& v : small.lhs) CHECK(v == 0);
  for (const auto& v : small.rhs) CHECK(v == 0);
}

TEST_CASE("comparison identity to degree 24") {
  for (const auto& gamma : panel()) {
    auto g = build_graph(gamma);
    auto c = comparison_check(gamma, 24, zeta_positive_det(g));
    CHECK(c.corrected_holds);
    CHECK(c.lhs == c.rhs);
  }
}

TEST_CASE("rational geodesic patterns") {
  auto e = [](std::initializer_list<Int> v) { return AffineElement::translation(LambdaElement::canonicalize(IntVec(v))); };
  CHECK(rational_geodesic_pattern(e({3, 0, 0})) == 1);
  CHECK(rational_geodesic_pattern(e({1, 1, 0})) == 2);
  CHECK_FALSE(rational_geodesic_pattern(e({3, 1, 0})).has_value());
  CHECK_FALSE(rational_geodesic_pattern(AffineElement::identity(3)).has_value());
}
