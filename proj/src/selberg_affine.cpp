#include <algorithm>
#include <map>

#include "f1zeta/error.hpp"
#include "f1zeta/selberg.hpp"

namespace f1zeta {

namespace {

IntMatrix one_minus(const Permutation& p) {
  IntMatrix a = p.lambda_matrix();
  IntMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = (i == j ? 1 : 0) - a(i, j);
  return out;
}

// Hermite basis of (1 - p) M, where M has the given basis matrix.
std::vector<IntVec> image_lattice(const Permutation& p, const IntMatrix& basis) {
  return hermite_basis((one_minus(p) * basis).column_vectors(), basis.rows());
}

IntVec difference_coords(const LambdaElement& v, const Permutation& q) { return (v - q.act(v)).lambda_coords(); }

struct ClassContext {
  const AffineSubgroup& gamma;
  const std::vector<Permutation>& P;
  IntMatrix basis;
  std::map<Permutation, std::vector<IntVec>> images;

  ClassContext(const AffineSubgroup& g, const std::vector<Permutation>& perms)
      : gamma(g), P(perms), basis(g.lattice.basis()) {}

  const std::vector<IntVec>& image(const Permutation& p) {
    auto it = images.find(p);
    if (it == images.end()) it = images.emplace(p, image_lattice(p, basis)).first;
    return it->second;
  }

  AffineElement key(const AffineElement& g) {
    std::optional<AffineElement> best;
    for (const auto& q : P) {
      Permutation pq = q * g.p * q.inverse();
      IntVec r = reduce_modulo(q.act(g.v).lambda_coords(), image(pq));
      AffineElement cand{LambdaElement::from_lambda_coords(g.n(), r), pq};
      if (!best || cand < *best) best = cand;
    }
    return *best;
  }
};

}  // namespace

AffineElement gamma_class_key(const AffineSubgroup& gamma, const std::vector<Permutation>& P, const AffineElement& g) {
  ClassContext ctx(gamma, P);
  return ctx.key(g);
}

Int centralizer_index(const AffineSubgroup& gamma, const std::vector<Permutation>& P, const AffineElement& g) {
  const int n = g.n();
  const IntMatrix basis = gamma.lattice.basis();
  const IntMatrix a = one_minus(g.p);

  // Translation parts: Lambda^p over M^p = B ker((1-p)B).
  const auto fixed = hermite_basis(integer_kernel(a), n - 1);
  std::vector<IntVec> mfixed_gens;
  for (const auto& k : integer_kernel(a * basis)) mfixed_gens.push_back(basis * std::span<const Int>(k));
  const auto mfixed = hermite_basis(mfixed_gens, n - 1);
  const Int translation_index = fixed.empty() ? 1 : sublattice_index(fixed, mfixed);

  // Permutation parts: q commuting with p with v - q(v) in (1-p)Lambda,
  // resp. q in P with v - q(v) in (1-p)M.
  const auto img_lambda = hermite_basis(a.column_vectors(), n - 1);
  const auto img_m = hermite_basis((a * basis).column_vectors(), n - 1);
  Int qg = 0, qgamma = 0;
  for (const auto& q : all_permutations(n)) {
    if (q * g.p != g.p * q) continue;
    const IntVec d = difference_coords(g.v, q);
    if (lattice_contains(img_lambda, d)) ++qg;
  }
  for (const auto& q : P) {
    if (q * g.p != g.p * q) continue;
    if (lattice_contains(img_m, difference_coords(g.v, q))) ++qgamma;
  }
  if (qgamma == 0 || qg % qgamma != 0) throw NumericalFailure("centralizer permutation parts do not nest");
  return checked_mul(translation_index, qg / qgamma);
}

std::vector<ConjClass> enumerate_classes_affine(const AffineSubgroup& gamma, int D, LengthScale scale,
                                                const EnumerationCaps& caps) {
  if (D < 0) throw InvalidInput("degree bound must be nonnegative");
  const auto P = gamma.perm_group();
  const int n = gamma.lattice.n;
  const auto mherm = gamma.lattice.hermite();
  const Int factor = scale_factor(n, scale);
  const Int spread = D / factor;
  ClassContext ctx(gamma, P);

  std::map<AffineElement, ConjClass> classes;
  for (const auto& p : P) {
    // Every class has a representative whose translation part is within
    // sup-distance C_p of its fixed projection.
    Int c = 0;
    for (const auto& b : gamma.lattice.generators) {
      IntVec raw(b.begin(), b.end());
      raw.push_back(0);
      const IntVec moved = p.act(raw);
      Int m = 0;
      for (int i = 0; i < n; ++i) m = std::max<Int>(m, std::llabs(raw[i] - moved[i]));
      c = checked_add(c, m);
    }
    const Int bound = checked_add(spread, checked_mul(2, c));
    Int side = bound + 1, points = 1;
    for (int i = 0; i < n; ++i) {
      if (points > caps.max_box_points / side) throw ResourceLimit("affine enumeration box exceeds the cap");
      points *= side;
    }

    IntVec x(n, 0);
    for (;;) {
      if (*std::min_element(x.begin(), x.end()) == 0) {
        const LambdaElement v = LambdaElement::canonicalize(x);
        if (lattice_contains(mherm, v.lambda_coords())) {
          const AffineElement g{v, p};
          const LengthVector l = length_vector(g, scale);
          mpq_class total = 0;
          for (const auto& t : l.values) total += t;
          if (total <= D) {
            if (!l.is_integral())
              throw InvalidInput("class of " + to_string(v.coords()) +
                                 " has fractional lengths at geodesic scale; use scale=factorial");
            AffineElement k = ctx.key(g);
            if (!classes.count(k)) classes.emplace(k, ConjClass{k, centralizer_index(gamma, P, k), length_vector(k, scale)});
          }
        }
      }
      int i = n - 1;
      while (i >= 0 && x[i] == bound) x[i--] = 0;
      if (i < 0) break;
      ++x[i];
    }
  }
  std::vector<ConjClass> out;
  for (auto& [k, c] : classes) out.push_back(std::move(c));
  return out;
}

MultiSeries selberg_series_affine(const AffineSubgroup& gamma, int D, LengthScale scale,
                                  const EnumerationCaps& caps) {
  MultiSeries s(gamma.lattice.n - 1, D);
  for (const auto& c : enumerate_classes_affine(gamma, D, scale, caps))
    s.add(*c.lengths.exponents(), mpz_class(static_cast<long>(c.weight)));
  return s;
}

GClassKey g_class_key(const AffineElement& g) {
  const int n = g.n();
  const auto proj = fixed_projection(g);
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return proj[a] > proj[b]; });
  const mpq_class f(static_cast<long>(scale_factor(n, LengthScale::factorial)));
  GClassKey key;
  const mpq_class low = proj[order.back()];
  for (int i : order) {
    mpq_class s = (proj[i] - low) * f;
    if (s.get_den() != 1) throw NumericalFailure("scaled fixed projection is not integral");
    key.scaled_projection.push_back(s.get_num().get_si());
  }
  // Blocks of equal projected value, each with the cycle type of p inside it.
  std::map<mpq_class, std::vector<int>, std::greater<>> blocks;
  for (const auto& cyc : g.p.cycles()) blocks[proj[cyc.front()]].push_back(static_cast<int>(cyc.size()));
  for (auto& [value, lengths] : blocks) {
    std::sort(lengths.rbegin(), lengths.rend());
    key.block_cycle_types.push_back(lengths);
  }
  return key;
}

std::optional<AffineElement> find_conjugator(const AffineElement& x, const AffineElement& y) {
  const int n = x.n();
  if (y.n() != n) throw InvalidInput("elements of different rank");
  const IntMatrix a = one_minus(y.p);
  const SmithForm snf = smith_normal_form(a, false);
  for (const auto& q : all_permutations(n)) {
    if (q * x.p * q.inverse() != y.p) continue;
    const IntVec b = (y.v - q.act(x.v)).lambda_coords();
    const IntVec c = snf.U * std::span<const Int>(b);
    IntVec z(n - 1, 0);
    bool solvable = true;
    for (int i = 0; i < n - 1 && solvable; ++i) {
      const Int d = snf.D(i, i);
      if (d == 0) {
        solvable = c[i] == 0;
      } else if (c[i] % d != 0) {
        solvable = false;
      } else {
        z[i] = c[i] / d;
      }
    }
    if (!solvable) continue;
    const IntVec w = snf.V * std::span<const Int>(z);
    AffineElement h{LambdaElement::from_lambda_coords(n, w), q};
    if (x.conjugated_by(h) == y) return h;
  }
  return std::nullopt;
}

}  // namespace f1zeta
