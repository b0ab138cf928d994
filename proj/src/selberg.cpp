#include "f1zeta/selberg.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <map>

#include "f1zeta/error.hpp"
#include "f1zeta/zeta.hpp"

namespace f1zeta {

namespace {

Int factorial(int k) {
  Int f = 1;
  for (int i = 2; i <= k; ++i) f = checked_mul(f, i);
  return f;
}

Int box_points(Int side, int n) {
  Int total = 1;
  for (int i = 0; i < n; ++i) {
    if (total > std::numeric_limits<Int>::max() / side) return std::numeric_limits<Int>::max();
    total *= side;
  }
  return total;
}

// Calls f(x) for every x in [0, bound]^n with min(x) = 0.
template <class F>
void for_each_canonical(int n, Int bound, F&& f) {
  IntVec x(n, 0);
  for (;;) {
    if (*std::min_element(x.begin(), x.end()) == 0) f(x);
    int i = n - 1;
    while (i >= 0 && x[i] == bound) x[i--] = 0;
    if (i < 0) return;
    ++x[i];
  }
}

}  // namespace

MultiSeries selberg_series_translation(const TranslationSubgroup& gamma, int D, LengthScale scale,
                                       const EnumerationCaps& caps) {
  if (D < 0) throw InvalidInput("degree bound must be nonnegative");
  const int n = gamma.n;
  const FiniteAbelianGroup q(gamma);
  const Int N = q.order();
  const Int factor = scale_factor(n, scale);
  const Int bound = D / factor;
  if (box_points(bound + 1, n) > caps.max_box_points)
    throw ResourceLimit("enumeration box [0," + std::to_string(bound) + "]^" + std::to_string(n) + " exceeds the cap");

  MultiSeries series(n - 1, D);
  for_each_canonical(n, bound, [&](const IntVec& x) {
    IntVec c(n - 1);
    for (int i = 0; i + 1 < n; ++i) c[i] = x[i] - x[n - 1];
    const IntVec r = q.project_coords(c);
    if (std::any_of(r.begin(), r.end(), [](Int k) { return k != 0; })) return;
    IntVec s = x;
    std::sort(s.rbegin(), s.rend());
    ExpVec e(n - 1);
    Int weight = N;
    int run = 1;
    for (int j = 0; j + 1 < n; ++j) {
      e[j] = static_cast<int>(factor * (s[j] - s[j + 1]));
      if (s[j] == s[j + 1]) {
        weight = checked_mul(weight, ++run);
      } else {
        run = 1;
      }
    }
    series.add(e, mpz_class(static_cast<long>(weight)));
  });
  return series;
}

MultiRational selberg_rational_translation(const TranslationSubgroup& gamma, LengthScale scale) {
  const int n = gamma.n;
  const Int N = gamma.index();
  const LinearForm weight = gap_form(n, scale_factor(n, scale));

  // Lattices p(Gamma), grouped by their Hermite form.
  std::map<std::vector<IntVec>, std::pair<std::vector<IntVec>, Int>> images;
  for (const auto& p : all_permutations(n)) {
    const IntMatrix act = p.lambda_matrix();
    std::vector<IntVec> gens;
    for (const auto& b : gamma.generators) gens.push_back(act * std::span<const Int>(b));
    auto key = hermite_basis(gens, n - 1);
    auto [it, fresh] = images.try_emplace(key, gens, 0);
    ++it->second.second;
  }

  MultiRational total(n - 1);
  for (const auto& [key, entry] : images) {
    const auto& [gens, count] = entry;
    MultiRational part(n - 1);
    for (const auto& face : FaceDescriptor::all_faces(n)) {
      if (face.rank() == 0) {
        part = part + MultiRational::constant(n - 1, 1);
        continue;
      }
      part = part + rational_cone_sum(cone_decompose(face, face_lattice(face, gens)), weight);
    }
    total = total + part * mpz_class(static_cast<long>(checked_mul(N, count)));
  }
  return total;
}

PoleCheck check_poles(const MultiRational& r) {
  PoleCheck pc;
  for (const auto& [e, k] : r.denominator()) {
    ++pc.factors;
    int support = 0, m = 0;
    for (int x : e)
      if (x != 0) {
        ++support;
        m = x;
      }
    if (support != 1) {
      pc.univariate_factors = false;
      continue;
    }
    for (int j = 0; j < m; ++j) {
      std::complex<double> z = std::polar(1.0, 2.0 * M_PI * j / m);
      // z^m must be 1 and |z| = 1.
      std::complex<double> zm = std::pow(z, m);
      pc.max_modulus_deviation =
          std::max({pc.max_modulus_deviation, std::fabs(std::abs(z) - 1.0), std::abs(zm - 1.0) / m});
    }
  }
  return pc;
}

std::optional<int> rational_geodesic_pattern(const AffineElement& g) {
  const auto l = length_vector(g, LengthScale::geodesic);
  std::optional<int> found;
  for (std::size_t j = 0; j < l.values.size(); ++j) {
    if (l.values[j] == 0) continue;
    if (found) return std::nullopt;
    found = static_cast<int>(j) + 1;
  }
  return found;
}

ComparisonReport comparison_check(const TranslationSubgroup& gamma, int D, const IntPolynomial& z_plus) {
  if (D < 1) throw InvalidInput("comparison needs degree bound >= 1");
  const int n = gamma.n;
  const auto series = selberg_series_translation(gamma, D, LengthScale::geodesic);
  ComparisonReport r;
  r.max_degree = D;
  r.lhs.assign(D + 1, 0);
  for (const auto& [e, c] : series.terms()) {
    if (e[0] == 0 || std::any_of(e.begin() + 1, e.end(), [](int x) { return x != 0; })) continue;
    r.lhs[e[0]] = c;
  }
  const mpz_class f = static_cast<long>(factorial(n - 1));
  const IntPolynomial log_deriv = z_plus.derivative().series_divide(z_plus, static_cast<std::size_t>(D));
  r.rhs.assign(D + 1, 0);
  r.literal.assign(D + 1, 0);
  for (int k = 0; k <= D; ++k) {
    if (k >= 1) r.rhs[k] = -f * log_deriv.coefficient(k - 1);
    r.literal[k] = f * log_deriv.coefficient(k);
  }
  r.corrected_holds = r.lhs == r.rhs;
  r.literal_holds = r.lhs == r.literal;
  r.literal_max_discrepancy = 0;
  for (int k = 0; k <= D; ++k) {
    mpz_class d = abs(r.lhs[k] - r.literal[k]);
    if (d > r.literal_max_discrepancy) r.literal_max_discrepancy = d;
  }
  return r;
}

ComparisonReport comparison_check(const TranslationSubgroup& gamma, int D) {
  return comparison_check(gamma, D, zeta_positive_det(build_graph(gamma)));
}

}  // namespace f1zeta
