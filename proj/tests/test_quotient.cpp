#include <doctest.h>

#include <random>

#include "f1zeta/error.hpp"
#include "f1zeta/quotient.hpp"

using namespace f1zeta;

namespace {

TranslationSubgroup diag33() { return {3, {{3, 0}, {0, 3}}}; }

TranslationSubgroup random_type_zero(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<Int> d(-4, 4);
  for (;;) {
    TranslationSubgroup g{n, {}};
    for (int j = 0; j < n - 1; ++j) {
      IntVec c(n - 1);
      for (auto& x : c) x = d(rng);
      // Fix the type by adjusting the first coordinate.
      c[0] -= LambdaElement::from_lambda_coords(n, c).type();
      g.generators.push_back(c);
    }
    if (determinant(g.basis()) != 0 && abs(determinant(g.basis())) <= 200) return g;
  }
}

bool integral(const std::vector<mpq_class>& x) {
  for (const auto& v : x)
    if (v.get_den() != 1) return false;
  return true;
}

}  // namespace

TEST_CASE("quotient examples") {
  auto q = quotient_group(diag33());
  CHECK(q.order() == 9);
  CHECK(q.divisors() == std::vector<Int>{3, 3});

  auto c2 = quotient_group({2, {{2}}});
  CHECK(c2.order() == 2);
  CHECK(c2.divisors() == std::vector<Int>{2});

  auto z6 = quotient_group({3, {{1, 2}, {0, 6}}});
  CHECK(z6.order() == 6);
  CHECK(z6.divisors() == std::vector<Int>{1, 6});
}

TEST_CASE("type and shape violations") {
  TranslationSubgroup bad{3, {{1, 0}, {0, 3}}};
  CHECK_THROWS_AS(quotient_group(bad), InvalidInput);
  try {
    bad.check_type_zero();
  } catch (const InvalidInput& e) {
    CHECK(std::string(e.what()).find("generator 1") != std::string::npos);
  }
  CHECK_THROWS_AS(quotient_group({3, {{3, 0}}}), InvalidInput);
  CHECK_THROWS_AS(quotient_group({3, {{3, 0}, {6, 0}}}), InvalidInput);
  CHECK_THROWS_AS(quotient_group({3, {{3, 0, 0}, {0, 3, 0}}}), InvalidInput);
}

TEST_CASE("element orders") {
  auto g = diag33();
  auto q = quotient_group(g);
  for (int i = 0; i < 3; ++i) CHECK(order_of(LambdaElement::unit(3, i), q) == 3);
  CHECK(order_of(LambdaElement::zero(3), q) == 1);

  TranslationSubgroup c4{2, {{4}}};
  auto q4 = quotient_group(c4);
  CHECK(order_of(LambdaElement::unit(2, 0), q4) == 4);
  CHECK(order_of(LambdaElement::from_lambda_coords(2, IntVec{2}), q4) == 2);

  TranslationSubgroup z6{3, {{1, 2}, {0, 6}}};
  auto q6 = quotient_group(z6);
  // e_1 = -2 e_2 mod Gamma
  CHECK(order_of(LambdaElement::unit(3, 0), q6) == 3);
  CHECK(order_of(LambdaElement::unit(3, 1), q6) == 6);
}

TEST_CASE("characters and Satake parameters") {
  auto q = quotient_group(diag33());
  auto chars = characters(q);
  CHECK(chars.size() == 9);
  int trivial = 0;
  for (const auto& chi : chars) {
    auto s = chi.satake(q);
    CHECK(s.size() == 3);
    Turn total;
    for (const auto& t : s) total = total + t;
    CHECK(total.is_zero());
    trivial += s[0].is_zero() && s[1].is_zero();
  }
  CHECK(trivial == 1);
}

TEST_CASE("projection vanishes exactly on Gamma") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<Int> d(-12, 12);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + trial % 4;
    auto g = random_type_zero(rng, n);
    auto q = quotient_group(g);
    for (int k = 0; k < 40; ++k) {
      IntVec c(n - 1);
      for (auto& x : c) x = d(rng);
      const auto a = LambdaElement::from_lambda_coords(n, c);
      auto r = q.project(a);
      bool zero = std::all_of(r.begin(), r.end(), [](Int x) { return x == 0; });
      CHECK(zero == integral(*solve_rational(g.basis(), c)));
      CHECK(zero == g.contains(a));
    }
    // Every basis vector projects to zero and the residue map is onto.
    for (const auto& b : g.generators) {
      auto r = q.project_coords(b);
      CHECK(std::all_of(r.begin(), r.end(), [](Int x) { return x == 0; }));
    }
  }
}

TEST_CASE("characters are homomorphisms") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<Int> d(-9, 9);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + trial % 4;
    auto g = random_type_zero(rng, n);
    auto q = quotient_group(g);
    auto chars = characters(q);
    CHECK(static_cast<Int>(chars.size()) == q.order());
    for (int k = 0; k < 10; ++k) {
      IntVec a(n), b(n);
      for (auto& x : a) x = d(rng);
      for (auto& x : b) x = d(rng);
      auto la = LambdaElement::canonicalize(a), lb = LambdaElement::canonicalize(b);
      const auto& chi = chars[static_cast<std::size_t>(k) % chars.size()];
      CHECK(chi.value(q, la + lb) == chi.value(q, la) + chi.value(q, lb));
      CHECK(order_of(la, q) > 0);
      CHECK(q.order() % order_of(la, q) == 0);
    }
    for (const auto& chi : chars) {
      Turn total;
      for (const auto& t : chi.satake(q)) total = total + t;
      CHECK(total.is_zero());
    }
  }
}

TEST_CASE("mixed radix indexing round trips") {
  auto q = quotient_group({4, {{2, 2, 0}, {0, 2, 2}, {0, 0, 4}}});
  for (Int i = 0; i < q.order(); ++i) CHECK(q.index_of(q.element(static_cast<std::size_t>(i))) == static_cast<std::size_t>(i));
}
