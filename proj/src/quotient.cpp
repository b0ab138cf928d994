#include "f1zeta/quotient.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "f1zeta/error.hpp"

namespace f1zeta {

Int TranslationSubgroup::index() const {
  if (n < 2) throw InvalidInput("n must be at least 2");
  if (static_cast<int>(generators.size()) != n - 1)
    throw InvalidInput("Gamma needs exactly n-1 generators, got " + std::to_string(generators.size()));
  for (const auto& g : generators)
    if (static_cast<int>(g.size()) != n - 1)
      throw InvalidInput("generator " + to_string(g) + " must have n-1 Lambda-coordinates");
  mpz_class d = abs(determinant(basis()));
  if (d == 0) throw InvalidInput("Gamma basis is singular (infinite index)");
  if (!d.fits_slong_p()) throw ResourceLimit("index of Gamma does not fit in 64 bits");
  return d.get_si();
}

void TranslationSubgroup::check_type_zero() const {
  for (std::size_t j = 0; j < generators.size(); ++j) {
    LambdaElement g = LambdaElement::from_lambda_coords(n, generators[j]);
    if (g.type() != 0)
      throw InvalidInput("generator " + std::to_string(j + 1) + " " + to_string(generators[j]) + " has type " +
                         std::to_string(g.type()) + " (mod " + std::to_string(n) + "), Gamma must be type zero");
  }
}

std::vector<IntVec> TranslationSubgroup::hermite() const { return hermite_basis(generators, n - 1); }

bool TranslationSubgroup::contains(const LambdaElement& a) const { return lattice_contains(hermite(), a.lambda_coords()); }

std::string TranslationSubgroup::describe() const {
  std::ostringstream os;
  os << "n=" << n << " <";
  for (std::size_t j = 0; j < generators.size(); ++j) os << (j ? ", " : "") << to_string(generators[j]);
  os << '>';
  return os.str();
}

std::vector<Permutation> AffineSubgroup::perm_group() const {
  lattice.index();
  lattice.check_type_zero();
  const auto herm = lattice.hermite();
  for (const auto& p : perm_generators) {
    if (p.n() != lattice.n) throw InvalidInput("permutation degree differs from n");
    const IntMatrix act = p.lambda_matrix();
    for (const auto& b : lattice.generators)
      if (!lattice_contains(herm, act * std::span<const Int>(b)))
        throw InvalidInput("permutation does not preserve the translation lattice M");
  }
  return generated_group(lattice.n, perm_generators);
}

Int AffineSubgroup::index_in_G() const {
  Int size = static_cast<Int>(perm_group().size());
  return checked_mul(scale_factor(lattice.n, LengthScale::factorial), lattice.index()) / size;
}

bool AffineSubgroup::contains(const AffineElement& g) const {
  auto group = perm_group();
  if (!std::binary_search(group.begin(), group.end(), g.p)) return false;
  return lattice.contains(g.v);
}

// ---- Turns ----------------------------------------------------------------

Turn Turn::make(Int num, Int den) {
  if (den <= 0) throw InvalidInput("turn denominator must be positive");
  num = floor_mod(num, den);
  Int g = gcd(num, den);
  if (g == 0) g = den;
  return {num / g, den / g};
}

Turn Turn::operator+(const Turn& rhs) const {
  Int d = lcm(den, rhs.den);
  return make(checked_add(checked_mul(num, d / den), checked_mul(rhs.num, d / rhs.den)), d);
}

// ---- Lambda/Gamma ---------------------------------------------------------

FiniteAbelianGroup::FiniteAbelianGroup(const TranslationSubgroup& gamma) : n_(gamma.n) {
  order_ = gamma.index();
  smith_ = smith_normal_form(gamma.basis());
  for (int i = 0; i < n_ - 1; ++i) divisors_.push_back(smith_.D(i, i));
  projection_ = smith_.U;
  for (int i = 0; i < n_ - 1; ++i)
    for (int j = 0; j < n_ - 1; ++j) projection_(i, j) = floor_mod(projection_(i, j), divisors_[i]);
}

IntVec FiniteAbelianGroup::project_coords(std::span<const Int> c) const {
  IntVec r = projection_ * c;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = floor_mod(r[i], divisors_[i]);
  return r;
}

IntVec FiniteAbelianGroup::project(const LambdaElement& a) const {
  if (a.n() != n_) throw InvalidInput("element rank differs from the group's n");
  return project_coords(a.lambda_coords());
}

IntVec FiniteAbelianGroup::add(std::span<const Int> x, std::span<const Int> y) const {
  IntVec r(divisors_.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = floor_mod(x[i] + y[i], divisors_[i]);
  return r;
}

std::size_t FiniteAbelianGroup::index_of(std::span<const Int> residues) const {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < divisors_.size(); ++i) idx = idx * divisors_[i] + residues[i];
  return idx;
}

IntVec FiniteAbelianGroup::element(std::size_t index) const {
  IntVec r(divisors_.size());
  for (std::size_t i = divisors_.size(); i-- > 0;) {
    r[i] = static_cast<Int>(index % divisors_[i]);
    index /= divisors_[i];
  }
  return r;
}

FiniteAbelianGroup quotient_group(const TranslationSubgroup& gamma) {
  gamma.index();
  gamma.check_type_zero();
  return FiniteAbelianGroup(gamma);
}

Int order_of(const LambdaElement& a, const FiniteAbelianGroup& q) {
  IntVec r = q.project(a);
  Int m = 1;
  for (std::size_t i = 0; i < r.size(); ++i) {
    Int d = q.divisors()[i];
    m = lcm(m, d / gcd(d, r[i]));
  }
  return m;
}

Turn Character::value_on_residues(const FiniteAbelianGroup& q, std::span<const Int> residues) const {
  const auto& d = q.divisors();
  const Int top = d.empty() ? 1 : d.back();
  Int num = 0;
  for (std::size_t i = 0; i < d.size(); ++i)
    num = floor_mod(checked_add(num, checked_mul(checked_mul(exponents[i], residues[i]), top / d[i])), top);
  return Turn::make(num, top);
}

Turn Character::value(const FiniteAbelianGroup& q, const LambdaElement& a) const {
  return value_on_residues(q, q.project(a));
}

std::vector<Turn> Character::satake(const FiniteAbelianGroup& q) const {
  std::vector<Turn> out;
  for (int j = 0; j < q.n(); ++j) out.push_back(value(q, LambdaElement::unit(q.n(), j)));
  return out;
}

std::vector<Character> characters(const FiniteAbelianGroup& q) {
  std::vector<Character> out;
  out.reserve(q.order());
  for (Int i = 0; i < q.order(); ++i) out.push_back({q.element(static_cast<std::size_t>(i))});
  return out;
}

}  // namespace f1zeta
