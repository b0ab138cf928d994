#include <algorithm>
#include <limits>
#include <set>

#include "f1zeta/error.hpp"
#include "f1zeta/lambda.hpp"

namespace f1zeta {

std::vector<IntVec> face_lattice(const FaceDescriptor& face, const std::vector<IntVec>& lattice_generators) {
  const int m = face.n - 1;
  const int d = face.rank();
  if (d == 0) return {};
  const auto blocks = face.block_of();
  const std::size_t k = lattice_generators.size();
  // Kernel of [E | -B]: pairs (t, y) with E t = B y.
  IntMatrix a(m, d + k);
  for (int i = 0; i < m; ++i) {
    if (blocks[i] < d) a(i, blocks[i]) = 1;
    for (std::size_t j = 0; j < k; ++j) {
      if (static_cast<int>(lattice_generators[j].size()) != m)
        throw InvalidInput("lattice generator must have n-1 Lambda-coordinates");
      a(i, d + j) = -lattice_generators[j][i];
    }
  }
  std::vector<IntVec> ts;
  for (const auto& kv : integer_kernel(a)) ts.emplace_back(kv.begin(), kv.begin() + d);
  std::vector<IntVec> out;
  for (const auto& t : hermite_basis(ts, d)) out.push_back(face.point(t));
  return out;
}

std::vector<IntVec> face_lattice(const FaceDescriptor& face) {
  std::vector<IntVec> out;
  for (int b = 0; b < face.rank(); ++b) {
    IntVec t(face.rank(), 0);
    t[b] = 1;
    out.push_back(face.point(t));
  }
  return out;
}

ConeDecomposition cone_decompose(const FaceDescriptor& face, const std::vector<IntVec>& sigma_generators) {
  ConeDecomposition dec{face, {}, {}};
  const int d = face.rank();
  if (d == 0) {
    dec.base_points.push_back(IntVec(face.n, 0));
    return dec;
  }
  std::vector<IntVec> tgens;
  for (const auto& g : sigma_generators) {
    auto t = face.block_values(g);
    if (!t) throw InvalidInput("lattice generator " + to_string(g) + " is not in the face span");
    tgens.push_back(*t);
  }
  const auto basis = hermite_basis(tgens, d);
  if (static_cast<int>(basis.size()) < d) throw InvalidInput("degenerate lattice: rank below the face dimension");

  // Edge j of the cone is spanned by r_j = (1,..,1,0,..,0) with j+1 ones;
  // a_j = m_j r_j is the first lattice point on it.
  std::vector<Int> mult(d);
  std::vector<IntVec> edges(d, IntVec(d, 0));
  for (int j = 0; j < d; ++j) {
    IntMatrix sys(d, 1 + d);
    for (int i = 0; i < d; ++i) {
      sys(i, 0) = i <= j ? 1 : 0;
      for (int b = 0; b < d; ++b) sys(i, 1 + b) = -basis[b][i];
    }
    Int g = 0;
    for (const auto& kv : integer_kernel(sys)) g = gcd(g, kv[0]);
    if (g == 0) throw NumericalFailure("cone edge meets the lattice only at 0");
    mult[j] = g;
    for (int i = 0; i <= j; ++i) edges[j][i] = g;
  }

  auto alpha = [d](const IntVec& t, int j) { return t[j] - (j + 1 < d ? t[j + 1] : 0); };
  // Moves t into the half-open box 0 < alpha_j <= m_j.
  auto reduce = [&](IntVec t) {
    std::vector<Int> shift(d);
    for (int j = 0; j < d; ++j) shift[j] = floor_div(alpha(t, j) - 1, mult[j]);
    for (int j = 0; j < d; ++j)
      for (int i = 0; i < d; ++i) t[i] = checked_sub(t[i], checked_mul(shift[j], edges[j][i]));
    return t;
  };

  std::set<IntVec> reps{reduce(IntVec(d, 0))};
  std::vector<IntVec> frontier(reps.begin(), reps.end());
  while (!frontier.empty()) {
    std::vector<IntVec> next;
    for (const auto& r : frontier)
      for (const auto& b : basis) {
        IntVec s(d);
        for (int i = 0; i < d; ++i) s[i] = checked_add(r[i], b[i]);
        s = reduce(std::move(s));
        if (reps.insert(s).second) next.push_back(std::move(s));
      }
    frontier = std::move(next);
  }

  Int expected = 1, covol = 1;
  for (int j = 0; j < d; ++j) {
    expected = checked_mul(expected, mult[j]);
    covol = checked_mul(covol, basis[j][pivot_columns(basis)[j]]);
  }
  if (static_cast<Int>(reps.size()) * covol != expected)
    throw NumericalFailure("cone decomposition: coset count does not match the lattice index");

  for (const auto& r : reps) dec.base_points.push_back(face.point(r));
  for (const auto& e : edges) dec.generators.push_back(face.point(e));
  return dec;
}

ExpVec LinearForm::apply(std::span<const Int> x) const {
  IntVec r = coeffs * x;
  ExpVec e(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (r[i] < 0 || r[i] > std::numeric_limits<int>::max())
      throw InvalidInput("weight exponent " + std::to_string(r[i]) + " is not a nonnegative int");
    e[i] = static_cast<int>(r[i]);
  }
  return e;
}

LinearForm gap_form(int n, Int factor) {
  LinearForm f{IntMatrix(n - 1, n)};
  for (int j = 0; j + 1 < n; ++j) {
    f.coeffs(j, j) = factor;
    f.coeffs(j, j + 1) = -factor;
  }
  return f;
}

MultiRational rational_cone_sum(const ConeDecomposition& dec, const LinearForm& weight) {
  std::vector<ExpVec> bases, gens;
  for (const auto& b : dec.base_points) bases.push_back(weight.apply(b));
  for (const auto& g : dec.generators) gens.push_back(weight.apply(g));
  return MultiRational::cone_series(weight.nvars(), bases, gens);
}

}  // namespace f1zeta
