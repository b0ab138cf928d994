#include "f1zeta/zeta.hpp"

#include <cmath>
#include <complex>
#include <map>

#include <boost/multiprecision/mpfr.hpp>

#include "f1zeta/error.hpp"

namespace f1zeta {

namespace mp = boost::multiprecision;

namespace {

class PrecisionGuard {
 public:
  explicit PrecisionGuard(unsigned digits10) : saved_(mp::mpfr_float::default_precision()) {
    mp::mpfr_float::default_precision(digits10);
  }
  ~PrecisionGuard() { mp::mpfr_float::default_precision(saved_); }
  PrecisionGuard(const PrecisionGuard&) = delete;
  PrecisionGuard& operator=(const PrecisionGuard&) = delete;

 private:
  unsigned saved_;
};

struct Complex {
  mp::mpfr_float re, im;
};

Int binomial_power_of_two(int n) { return Int{1} << n; }

}  // namespace

std::vector<Int32Matrix> positive_zeta_matrices(const QuotientGraph& g) {
  const auto N = static_cast<std::size_t>(g.N);
  std::vector<Int32Matrix> c;
  c.push_back(Int32Matrix::identity(N));
  for (int k = 1; k < g.n; ++k) c.push_back(k % 2 ? g.typed[k - 1] * -1 : g.typed[k - 1]);
  c.push_back(g.n % 2 ? Int32Matrix::identity(N) * -1 : Int32Matrix::identity(N));
  return c;
}

IntPolynomial zeta_positive_det(const QuotientGraph& g, DetEngine engine, DetStats* stats) {
  return polynomial_det(positive_zeta_matrices(g), engine, stats);
}

std::vector<Int> generator_orders(const TranslationSubgroup& gamma) {
  FiniteAbelianGroup q(gamma);
  std::vector<Int> m;
  for (int i = 0; i < gamma.n; ++i) m.push_back(order_of(LambdaElement::unit(gamma.n, i), q));
  return m;
}

IntPolynomial zeta_positive_orders(const TranslationSubgroup& gamma) {
  const Int N = gamma.index();
  IntPolynomial z = IntPolynomial::one();
  for (Int m : generator_orders(gamma))
    z = z * IntPolynomial::one_minus_power(static_cast<std::size_t>(m)).pow(static_cast<unsigned>(N / m));
  return z;
}

LFunctionResult lfunction_unchecked(const TranslationSubgroup& gamma) {
  const FiniteAbelianGroup q(gamma);
  const int n = gamma.n;
  const std::size_t degree = static_cast<std::size_t>(n) * static_cast<std::size_t>(q.order());
  const int bits = static_cast<int>(degree) + 128;
  PrecisionGuard guard(static_cast<unsigned>(bits * 0.30103) + 2);

  const mp::mpfr_float two_pi = 2 * boost::math::constants::pi<mp::mpfr_float>();
  std::map<std::pair<Int, Int>, Complex> roots;
  auto root = [&](const Turn& t) -> const Complex& {
    auto key = std::make_pair(t.num, t.den);
    auto it = roots.find(key);
    if (it == roots.end()) {
      mp::mpfr_float angle = two_pi * t.num / t.den;
      it = roots.emplace(key, Complex{mp::cos(angle), mp::sin(angle)}).first;
    }
    return it->second;
  };

  std::vector<Complex> c(degree + 1, Complex{0, 0});
  c[0].re = 1;
  std::size_t deg = 0;
  mp::mpfr_float tr, ti;
  for (const auto& chi : characters(q))
    for (const auto& t : chi.satake(q)) {
      const Complex& z = root(t);
      // c <- c * (1 - z u)
      for (std::size_t k = deg + 1; k > 0; --k) {
        tr = z.re * c[k - 1].re - z.im * c[k - 1].im;
        ti = z.re * c[k - 1].im + z.im * c[k - 1].re;
        c[k].re -= tr;
        c[k].im -= ti;
      }
      ++deg;
    }

  LFunctionResult out;
  out.precision_bits = bits;
  std::vector<mpz_class> coeffs(degree + 1);
  mp::mpfr_float dev = 0;
  for (std::size_t k = 0; k <= degree; ++k) {
    mpfr_get_z(coeffs[k].get_mpz_t(), c[k].re.backend().data(), MPFR_RNDN);
    mp::mpfr_float r = c[k].re - mp::mpfr_float(coeffs[k].get_mpz_t());
    dev = mp::max(dev, mp::max(mp::abs(r), mp::abs(c[k].im)));
  }
  out.max_deviation = dev.convert_to<double>();
  out.poly = IntPolynomial(std::move(coeffs));
  return out;
}

LFunctionResult lfunction(const TranslationSubgroup& gamma, double tolerance) {
  if (!(tolerance > 0)) throw InvalidInput("tolerance must be positive");
  auto r = lfunction_unchecked(gamma);
  if (r.max_deviation > tolerance)
    throw NumericalFailure("L-function coefficient deviates from an integer by " + std::to_string(r.max_deviation));
  return r;
}

IharaResult ihara_bass(const QuotientGraph& g, DetEngine engine) {
  const auto N = static_cast<std::size_t>(g.N);
  const Int q = binomial_power_of_two(g.n) - 3;
  std::vector<Int32Matrix> c{Int32Matrix::identity(N), g.adjacency() * -1,
                             Int32Matrix::identity(N) * static_cast<std::int32_t>(q)};
  IharaResult r;
  r.numerator = polynomial_det(c, engine);
  r.chi = checked_mul(g.N, 2 - binomial_power_of_two(g.n - 1));
  return r;
}

IntPolynomial ihara_series(const IharaResult& r, std::size_t max_degree, bool inverse_exponent) {
  Int e = inverse_exponent ? -r.chi : r.chi;
  const IntPolynomial f = IntPolynomial::one_minus_power(2).pow(static_cast<unsigned>(std::llabs(e)));
  if (e <= 0) return r.numerator.multiply_truncated(f, max_degree);
  return r.numerator.series_divide(f, max_degree);
}

RootCheck check_roots_on_unit_circle(const IntPolynomial& z, const std::vector<Int>& orders) {
  RootCheck rc;
  std::vector<std::complex<long double>> coeffs;
  for (const auto& c : z.coefficients()) coeffs.emplace_back(c.get_d(), 0.0L);
  long double scale = 0;
  for (const auto& c : coeffs) scale += std::abs(c);
  for (Int m : orders)
    for (Int k = 0; k < m; ++k) {
      const long double angle = 2.0L * 3.14159265358979323846264338327950288L * k / m;
      std::complex<long double> root = std::polar(1.0L, angle);
      rc.max_modulus_deviation = std::max(rc.max_modulus_deviation, static_cast<double>(std::fabs(std::abs(root) - 1)));
      std::complex<long double> acc = 0;
      for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * root + coeffs[i];
      rc.max_residual = std::max(rc.max_residual, static_cast<double>(std::abs(acc) / std::max(scale, 1.0L)));
    }
  return rc;
}

ZetaReport cross_check_zeta(const TranslationSubgroup& gamma, const QuotientGraph& g, int max_degree,
                           double tolerance, DetEngine engine) {
  if (max_degree < 0) throw InvalidInput("max_degree must be nonnegative");
  ZetaReport r;
  r.max_degree = max_degree;
  r.orders = generator_orders(gamma);
  r.det = zeta_positive_det(g, engine, &r.det_stats);
  r.by_orders = zeta_positive_orders(gamma);
  r.det_equals_orders = r.det == r.by_orders;

  r.lfunction = lfunction_unchecked(gamma);
  r.lfunction_within_tolerance = r.lfunction.max_deviation <= tolerance;
  r.lfunction_equals_det = r.lfunction.poly == r.det;

  const auto classes = enumerate_positive_geodesics(g, max_degree);
  r.euler = euler_product_truncation(classes, static_cast<std::size_t>(max_degree));
  r.det_truncated = r.det.truncated(static_cast<std::size_t>(max_degree));
  r.euler_matches = r.euler == r.det_truncated;
  r.class_counts.assign(g.n, 0);
  for (const auto& c : classes) ++r.class_counts[c.direction - 1];
  for (Int m : r.orders) r.expected_counts.push_back(m <= max_degree ? g.N / m : 0);
  r.counts_match = r.class_counts == r.expected_counts;

  const auto nN = static_cast<std::size_t>(g.n) * static_cast<std::size_t>(g.N);
  r.degree_and_ends_ok = r.det.degree() == static_cast<int>(nN) && r.det.coefficient(0) == 1 &&
                         r.det.coefficient(nN) == (nN % 2 ? -1 : 1);
  r.roots = check_roots_on_unit_circle(r.det, r.orders);
  return r;
}

}  // namespace f1zeta
