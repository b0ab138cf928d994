#pragma once

// Brute-force reference computations used only by the tests.

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "f1zeta/cayley.hpp"
#include "f1zeta/lambda.hpp"
#include "f1zeta/multivariate.hpp"
#include "f1zeta/polynomial.hpp"
#include "f1zeta/quotient.hpp"

namespace oracle {

using namespace f1zeta;

// Determinant of a matrix of polynomials by the Leibniz expansion.
inline IntPolynomial leibniz_det(const std::vector<std::vector<IntPolynomial>>& m) {
  const int n = static_cast<int>(m.size());
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  IntPolynomial total;
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    IntPolynomial term = IntPolynomial::one();
    for (int i = 0; i < n; ++i) term = term * m[i][perm[i]];
    total = inversions % 2 ? total - term : total + term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

// det(sum_k C_k t^k) for tiny matrices.
inline IntPolynomial leibniz_det(const std::vector<Int32Matrix>& coeffs) {
  const std::size_t n = coeffs[0].size();
  std::vector<std::vector<IntPolynomial>> m(n, std::vector<IntPolynomial>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<mpz_class> c;
      for (const auto& ck : coeffs) c.push_back(ck(i, j));
      m[i][j] = IntPolynomial(c);
    }
  return leibniz_det(m);
}

// Lattice points of the relatively open face cone in [0, box]^n with last
// coordinate 0, restricted to the lattice spanned by the Lambda-coordinate
// generators.
inline std::set<IntVec> cone_points(const FaceDescriptor& face, const std::vector<IntVec>& lattice, Int box) {
  const int n = face.n;
  const auto herm = hermite_basis(lattice, n - 1);
  std::set<IntVec> out;
  IntVec x(n, 0);
  for (;;) {
    bool ok = true;
    for (int j = 1; j < n && ok; ++j) {
      const bool equal = std::binary_search(face.S.begin(), face.S.end(), j);
      ok = equal ? x[j - 1] == x[j] : x[j - 1] > x[j];
    }
    if (ok) {
      IntVec c(x.begin(), x.end() - 1);
      if (lattice_contains(herm, c)) out.insert(x);
    }
    int i = n - 2;
    while (i >= 0 && x[i] == box) x[i--] = 0;
    if (i < 0) break;
    ++x[i];
  }
  return out;
}

// Sum over gamma = sum_j k_j b_j with |k_j| <= range, deduplicated in
// Lambda, of N * #Stab_K(gamma) u^{l(gamma)}, keeping total degree <= D.
inline MultiSeries selberg_by_generators(const TranslationSubgroup& gamma, int D, LengthScale scale, Int range) {
  const int n = gamma.n;
  const Int N = gamma.index();
  const auto K = all_permutations(n);
  std::set<LambdaElement> seen;
  MultiSeries s(n - 1, D);
  IntVec k(n - 1, -range);
  for (;;) {
    IntVec c(n - 1, 0);
    for (int j = 0; j < n - 1; ++j)
      for (int i = 0; i < n - 1; ++i) c[i] += k[j] * gamma.generators[j][i];
    const LambdaElement g = LambdaElement::from_lambda_coords(n, c);
    if (seen.insert(g).second) {
      const auto l = length_vector(AffineElement::translation(g), scale);
      mpq_class total = 0;
      for (const auto& v : l.values) total += v;
      if (total <= D) {
        long stab = 0;
        for (const auto& p : K) stab += p.act(g) == g;
        s.add(*l.exponents(), mpz_class(N * stab));
      }
    }
    int i = n - 2;
    while (i >= 0 && k[i] == range) k[i--] = -range;
    if (i < 0) break;
    ++k[i];
  }
  return s;
}

// Number of cosets h Gamma in G / (M x| P) fixed by x.
inline Int fixed_points(const AffineSubgroup& gamma, const AffineElement& x) {
  const int n = gamma.lattice.n;
  const auto P = gamma.perm_group();
  const std::set<Permutation> pset(P.begin(), P.end());
  // Left cosets kP of P in K.
  std::vector<Permutation> reps;
  std::set<Permutation> covered;
  for (const auto& k : all_permutations(n)) {
    if (covered.count(k)) continue;
    reps.push_back(k);
    for (const auto& p : P) covered.insert(k * p);
  }
  const FiniteAbelianGroup q(gamma.lattice);
  Int count = 0;
  for (const auto& k : reps) {
    // The coset of x_p k must be kP.
    if (!pset.count(k.inverse() * x.p * k)) continue;
    // h = (t, k) with t = k(r), r over representatives of Lambda/M;
    // h^-1 x h lies in Gamma iff k^-1 (x_v + x_p t - t) lies in M.
    for (Int idx = 0; idx < q.order(); ++idx) {
      const IntVec res = q.element(static_cast<std::size_t>(idx));
      IntVec r;
      const auto sol = solve_rational(q.smith().U, res);
      for (const auto& v : *sol) r.push_back(v.get_num().get_si());
      const LambdaElement t = k.act(LambdaElement::from_lambda_coords(n, r));
      const LambdaElement d = x.v + x.p.act(t) - t;
      if (gamma.lattice.contains(k.inverse().act(d))) ++count;
    }
  }
  return count;
}

}  // namespace oracle
