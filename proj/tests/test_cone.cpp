#include <doctest.h>

#include <map>

#include "f1zeta/error.hpp"
#include "f1zeta/lambda.hpp"
#include "oracles/oracles.hpp"

using namespace f1zeta;

namespace {

// All points v0 + sum k_j a_j inside [0, box]^n, with multiplicities.
std::map<IntVec, int> generated(const ConeDecomposition& dec, Int box) {
  std::map<IntVec, int> out;
  const std::size_t r = dec.generators.size();
  for (const auto& b : dec.base_points) {
    std::vector<Int> k(r, 0);
    for (;;) {
      IntVec x = b;
      for (std::size_t j = 0; j < r; ++j)
        for (std::size_t i = 0; i < x.size(); ++i) x[i] += k[j] * dec.generators[j][i];
      bool inside = *std::max_element(x.begin(), x.end()) <= box;
      if (inside) ++out[x];
      // Odometer that skips a coordinate once it leaves the box.
      std::size_t j = 0;
      for (; j < r; ++j) {
        ++k[j];
        IntVec y = b;
        for (std::size_t a = 0; a < r; ++a)
          for (std::size_t i = 0; i < y.size(); ++i) y[i] += k[a] * dec.generators[a][i];
        if (*std::max_element(y.begin(), y.end()) <= box) break;
        k[j] = 0;
      }
      if (j == r) break;
    }
  }
  return out;
}

std::vector<std::vector<IntVec>> test_lattices(int n) {
  std::vector<std::vector<IntVec>> out;
  std::vector<IntVec> unit;
  for (int i = 0; i < n - 1; ++i) {
    IntVec e(n - 1, 0);
    e[i] = 1;
    unit.push_back(e);
  }
  out.push_back(unit);
  std::vector<IntVec> twice = unit;
  for (auto& v : twice)
    for (auto& x : v) x *= 2;
  twice[0][0] = 3;
  out.push_back(twice);
  if (n >= 3) {
    std::vector<IntVec> skew = unit;
    skew[0] = IntVec(n - 1, 0);
    skew[0][0] = 1;
    skew[0][1] = -1;
    skew.back() = IntVec(n - 1, 0);
    skew.back().back() = 3;
    out.push_back(skew);
  }
  return out;
}

}  // namespace

TEST_CASE("cone decomposition examples") {
  auto ray = FaceDescriptor::from_subset(2, {});
  auto dec = cone_decompose(ray, face_lattice(ray));
  CHECK(dec.base_points == std::vector<IntVec>{{1, 0}});
  CHECK(dec.generators == std::vector<IntVec>{{1, 0}});

  auto open = FaceDescriptor::from_subset(3, {});
  auto d3 = cone_decompose(open, face_lattice(open));
  CHECK(d3.base_points == std::vector<IntVec>{{2, 1, 0}});
  CHECK(d3.generators == std::vector<IntVec>{{1, 0, 0}, {1, 1, 0}});

  auto point = FaceDescriptor::from_subset(3, {1, 2});
  auto d0 = cone_decompose(point, {});
  CHECK(d0.base_points == std::vector<IntVec>{{0, 0, 0}});
  CHECK(d0.generators.empty());
}

TEST_CASE("degenerate lattice is rejected") {
  auto open = FaceDescriptor::from_subset(3, {});
  CHECK_THROWS_AS(cone_decompose(open, {{1, 0, 0}}), InvalidInput);
}

TEST_CASE("cone decompositions are exact on [0,12]^n") {
  const Int box = 12;
  for (int n = 2; n <= 4; ++n)
    for (const auto& lattice : test_lattices(n))
      for (const auto& face : FaceDescriptor::all_faces(n)) {
        auto dec = cone_decompose(face, face_lattice(face, lattice));
        auto gen = generated(dec, box);
        auto brute = oracle::cone_points(face, lattice, box);
        CHECK(gen.size() == brute.size());
        for (const auto& [x, count] : gen) {
          CHECK(count == 1);
          CHECK(brute.count(x) == 1);
        }
      }
}

TEST_CASE("rational cone sums") {
  auto ray = FaceDescriptor::from_subset(2, {});
  auto r1 = rational_cone_sum(cone_decompose(ray, face_lattice(ray)), gap_form(2));
  auto s1 = r1.expand(8);
  for (int k = 0; k <= 8; ++k) CHECK(s1.coefficient({k}) == (k >= 1 ? 1 : 0));

  auto open = FaceDescriptor::from_subset(3, {});
  auto r2 = rational_cone_sum(cone_decompose(open, face_lattice(open)), gap_form(3));
  CHECK(r2.numerator().size() == 1);
  CHECK(r2.numerator().begin()->first == ExpVec{1, 1});
  CHECK(r2.denominator().size() == 2);
  CHECK(r2.denominator().count({1, 0}) == 1);
  CHECK(r2.denominator().count({0, 1}) == 1);

  auto point = FaceDescriptor::from_subset(3, {1, 2});
  auto r0 = rational_cone_sum(cone_decompose(point, {}), gap_form(3));
  CHECK(r0.expand(5).coefficient({0, 0}) == 1);
  CHECK(r0.expand(5).terms().size() == 1);
}

TEST_CASE("rational cone sums match brute force to degree 10") {
  for (int n = 2; n <= 4; ++n)
    for (const auto& lattice : test_lattices(n))
      for (const auto& face : FaceDescriptor::all_faces(n)) {
        auto dec = cone_decompose(face, face_lattice(face, lattice));
        auto series = rational_cone_sum(dec, gap_form(n)).expand(10);
        MultiSeries brute(n - 1, 10);
        for (const auto& x : oracle::cone_points(face, lattice, 10)) {
          ExpVec e(n - 1);
          for (int j = 0; j + 1 < n; ++j) e[j] = static_cast<int>(x[j] - x[j + 1]);
          brute.add(e, 1);
        }
        CHECK(series == brute);
      }
}

TEST_CASE("a zero-weight generator diverges") {
  auto open = FaceDescriptor::from_subset(3, {});
  auto dec = cone_decompose(open, face_lattice(open));
  LinearForm only_first{IntMatrix(2, 3)};
  only_first.coeffs(0, 0) = 1;
  only_first.coeffs(0, 1) = -1;
  CHECK_THROWS_AS(rational_cone_sum(dec, only_first), Divergence);
}
