#include <doctest.h>

#include <random>
#include <sstream>

#include "f1zeta/cayley.hpp"
#include "f1zeta/error.hpp"

using namespace f1zeta;

namespace {

Int binom(int n, int k) {
  Int r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

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

TEST_CASE("generator sets") {
  for (int n = 2; n <= 6; ++n) {
    auto s = generator_set(n);
    CHECK(static_cast<Int>(s.elements.size()) == (Int{1} << n) - 2);
    for (int i = 1; i < n; ++i) CHECK(std::count(s.types.begin(), s.types.end(), i) == binom(n, i));
    CHECK(std::is_sorted(s.types.begin(), s.types.end()));
    for (std::size_t j = 0; j < s.elements.size(); ++j) CHECK(s.elements[j].type() == s.types[j]);
  }
}

TEST_CASE("the 4-cycle") {
  auto g = build_graph({2, {{4}}});
  CHECK(g.N == 4);
  const auto& a = g.typed_adjacency(1);
  CHECK(a == a.transpose());
  for (auto s : a.row_sums()) CHECK(s == 2);
  CHECK(a.max_entry() == 1);
  CHECK(g.direction_order(1) == 4);
  CHECK(g.direction_order(2) == 4);
  CHECK_THROWS_AS(g.typed_adjacency(2), InvalidInput);
  CHECK_THROWS_AS(g.typed_adjacency(0), InvalidInput);
}

TEST_CASE("index 3 quotient collapses the three directions") {
  auto g = build_graph({3, {{1, -1}, {0, 3}}});
  CHECK(g.N == 3);
  Int32Matrix c(3);
  for (std::size_t v = 0; v < 3; ++v) c(g.direction[0][v], v) = 1;
  CHECK(g.typed_adjacency(1) == c * 3);
  CHECK(g.typed_adjacency(2) == c.transpose() * 3);
}

TEST_CASE("type violations") {
  TranslationSubgroup bad{3, {{1, 0}, {0, 3}}};
  CHECK_THROWS_AS(build_graph(bad), InvalidInput);
  GraphOptions relaxed;
  relaxed.require_type_zero = false;
  CHECK(build_graph(bad, relaxed).N == 3);
  GraphOptions small;
  small.max_vertices = 8;
  CHECK_THROWS_AS(build_graph({3, {{3, 0}, {0, 3}}}, small), ResourceLimit);
}

TEST_CASE("adjacency invariants on random quotients") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + trial % 4;
    auto gamma = random_type_zero(rng, n, 200);
    auto g = build_graph(gamma);
    CHECK(static_cast<Int>(g.vertices.size()) == gamma.index());
    for (int i = 1; i < n; ++i) {
      const auto& a = g.typed_adjacency(i);
      for (auto s : a.row_sums()) CHECK(s == binom(n, i));
      for (auto s : a.column_sums()) CHECK(s == binom(n, i));
      CHECK(a.transpose() == g.typed_adjacency(n - i));
      for (int j = 1; j < n; ++j) CHECK(a * g.typed_adjacency(j) == g.typed_adjacency(j) * a);
    }
    // Translation by any vertex is a graph automorphism.
    const auto& a1 = g.typed_adjacency(1);
    for (std::size_t t = 0; t < g.vertices.size(); t += 1 + g.vertices.size() / 5) {
      auto shift = [&](std::size_t v) { return g.group.index_of(g.group.add(g.vertices[v], g.vertices[t])); };
      bool ok = true;
      for (std::size_t v = 0; v < g.vertices.size(); ++v)
        for (std::size_t w = 0; w < g.vertices.size(); ++w) ok = ok && a1(shift(w), shift(v)) == a1(w, v);
      CHECK(ok);
    }
    for (int i = 0; i < n; ++i) {
      std::vector<bool> hit(g.vertices.size(), false);
      for (auto w : g.direction[i]) hit[w] = true;
      CHECK(std::all_of(hit.begin(), hit.end(), [](bool b) { return b; }));
    }
  }
}

TEST_CASE("perturbation changes one entry") {
  auto g = build_graph({3, {{3, 0}, {0, 3}}});
  auto before = g.typed_adjacency(1);
  perturb_adjacency(g, 1, 0, 0, 1);
  CHECK(g.typed_adjacency(1)(0, 0) == before(0, 0) + 1);
  CHECK_THROWS_AS(perturb_adjacency(g, 3, 0, 0, 1), InvalidInput);
}

TEST_CASE("edge list export") {
  auto g = build_graph({2, {{4}}});
  std::ostringstream os;
  write_edge_list(os, g);
  std::istringstream is(os.str());
  std::string line;
  int lines = 0;
  while (std::getline(is, line)) {
    ++lines;
    CHECK(line.front() == '(');
    CHECK(line.back() == '1');
  }
  CHECK(lines == 8);
}
