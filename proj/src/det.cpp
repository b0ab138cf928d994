#include "f1zeta/det.hpp"

#include "f1zeta/error.hpp"
#include "f1zeta/kernels.hpp"

namespace f1zeta {

namespace {

std::uint32_t mulmod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
}

std::uint32_t powmod(std::uint32_t a, std::uint64_t e, std::uint32_t p) {
  std::uint32_t r = 1 % p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint32_t invmod(std::uint32_t a, std::uint32_t p) { return powmod(a, p - 2, p); }

std::uint32_t reduce(std::int64_t x, std::uint32_t p) {
  std::int64_t r = x % static_cast<std::int64_t>(p);
  return static_cast<std::uint32_t>(r < 0 ? r + p : r);
}

void check_shapes(const std::vector<Int32Matrix>& coeffs) {
  if (coeffs.empty()) throw InvalidInput("polynomial matrix needs at least one coefficient");
  for (const auto& c : coeffs)
    if (c.size() != coeffs[0].size()) throw InvalidInput("coefficient matrices differ in size");
}

// Coefficients mod p of the interpolating polynomial through (i, y_i), i = 0..d.
std::vector<std::uint32_t> interpolate_mod_p(const std::vector<std::uint32_t>& y, std::uint32_t p) {
  const std::size_t m = y.size();
  std::vector<std::uint32_t> dd = y;
  for (std::size_t j = 1; j < m; ++j) {
    std::uint32_t inv = invmod(static_cast<std::uint32_t>(j), p);
    for (std::size_t i = m - 1; i >= j; --i) {
      std::uint32_t diff = dd[i] >= dd[i - 1] ? dd[i] - dd[i - 1] : dd[i] + p - dd[i - 1];
      dd[i] = mulmod(diff, inv, p);
    }
  }
  // Horner on the Newton form: c = dd[m-1]; c = c*(t - (i)) + dd[i].
  std::vector<std::uint32_t> c(m, 0);
  c[0] = dd[m - 1];
  std::size_t deg = 0;
  for (std::size_t i = m - 1; i-- > 0;) {
    const std::uint32_t xi = static_cast<std::uint32_t>(i % p);
    // c <- c*t - xi*c
    c[deg + 1] = c[deg];
    for (std::size_t k = deg; k > 0; --k) {
      std::uint32_t s = mulmod(c[k], xi, p);
      c[k] = c[k - 1] >= s ? c[k - 1] - s : c[k - 1] + p - s;
    }
    std::uint32_t s = mulmod(c[0], xi, p);
    c[0] = (s == 0 ? 0 : p - s);
    c[0] = (c[0] + dd[i]) % p;
    ++deg;
  }
  return c;
}

std::vector<std::uint32_t> det_values_mod_p(const std::vector<Int32Matrix>& coeffs, std::size_t points,
                                            std::uint32_t p) {
  const std::size_t n = coeffs[0].size();
  std::vector<std::vector<std::uint32_t>> reduced;
  for (const auto& c : coeffs) {
    std::vector<std::uint32_t> r(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) r[i * n + j] = reduce(c(i, j), p);
    reduced.push_back(std::move(r));
  }
  std::vector<std::uint32_t> values(points), a(n * n);
  for (std::size_t t = 0; t < points; ++t) {
    const std::uint32_t tp = static_cast<std::uint32_t>(t % p);
    for (std::size_t e = 0; e < n * n; ++e) {
      std::uint32_t acc = 0;
      for (std::size_t k = reduced.size(); k-- > 0;) acc = (mulmod(acc, tp, p) + reduced[k][e]) % p;
      a[e] = acc;
    }
    values[t] = det_mod_p(a, n, p);
  }
  return values;
}

IntPolynomial det_multimodular(const std::vector<Int32Matrix>& coeffs, DetStats* stats) {
  const std::size_t n = coeffs[0].size();
  const std::size_t degree = n * (coeffs.size() - 1);
  const std::size_t points = degree + 1;
  const mpz_class bound = det_coefficient_bound(coeffs);
  const mpz_class target = 2 * bound;

  std::vector<mpz_class> c(points, 0);
  mpz_class modulus = 1;
  int used = 0;
  bool confirmed = false;
  std::size_t want = 8;
  std::vector<std::uint32_t> primes = modular_primes(want);
  for (std::size_t pi = 0; !confirmed; ++pi) {
    if (pi == primes.size()) primes = modular_primes(want *= 2);
    const std::uint32_t p = primes[pi];
    if (points >= p) throw ResourceLimit("polynomial degree too large for word-size primes");
    auto r = interpolate_mod_p(det_values_mod_p(coeffs, points, p), p);
    ++used;
    if (modulus > target) {
      for (std::size_t k = 0; k < points; ++k) {
        mpz_class m = c[k] % p;
        if (m < 0) m += p;
        if (m != r[k]) throw NumericalFailure("multi-modular determinant failed the confirmation prime");
      }
      confirmed = true;
      break;
    }
    const mpz_class mp = modulus % p;
    const std::uint32_t inv = invmod(static_cast<std::uint32_t>(mp.get_ui()), p);
    const mpz_class next = modulus * p;
    const mpz_class half = next / 2;
    for (std::size_t k = 0; k < points; ++k) {
      mpz_class cm = c[k] % p;
      if (cm < 0) cm += p;
      std::uint32_t diff = reduce(static_cast<std::int64_t>(r[k]) - static_cast<std::int64_t>(cm.get_ui()), p);
      c[k] += modulus * mulmod(diff, inv, p);
      if (c[k] > half) c[k] -= next;
    }
    modulus = next;
  }
  if (stats) {
    stats->primes = used;
    stats->points = static_cast<int>(points);
    stats->bound_bits = mpz_sizeinbase(bound.get_mpz_t(), 2);
  }
  return IntPolynomial(std::move(c));
}

mpz_class bareiss_det(std::vector<mpz_class> a, std::size_t n) {
  int sign = 1;
  mpz_class prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k * n + k] == 0) {
      std::size_t r = k + 1;
      while (r < n && a[r * n + k] == 0) ++r;
      if (r == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a[k * n + j], a[r * n + j]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class v = a[i * n + j] * a[k * n + k] - a[i * n + k] * a[k * n + j];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a[i * n + j] = v;
      }
      a[i * n + k] = 0;
    }
    prev = a[k * n + k];
  }
  return sign * a[n * n - 1];
}

IntPolynomial det_bareiss(const std::vector<Int32Matrix>& coeffs, DetStats* stats) {
  const std::size_t n = coeffs[0].size();
  const std::size_t points = n * (coeffs.size() - 1) + 1;
  std::vector<mpq_class> dd(points);
  std::vector<mpz_class> a(n * n);
  for (std::size_t t = 0; t < points; ++t) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        mpz_class acc = 0;
        for (std::size_t k = coeffs.size(); k-- > 0;) acc = acc * static_cast<unsigned long>(t) + coeffs[k](i, j);
        a[i * n + j] = acc;
      }
    dd[t] = n == 0 ? mpz_class(1) : bareiss_det(a, n);
  }
  for (std::size_t j = 1; j < points; ++j)
    for (std::size_t i = points - 1; i >= j; --i) dd[i] = (dd[i] - dd[i - 1]) / static_cast<long>(j);
  std::vector<mpq_class> c(points, 0);
  c[0] = dd[points - 1];
  std::size_t deg = 0;
  for (std::size_t i = points - 1; i-- > 0;) {
    c[deg + 1] = c[deg];
    for (std::size_t k = deg; k > 0; --k) c[k] = c[k - 1] - c[k] * static_cast<long>(i);
    c[0] = dd[i] - c[0] * static_cast<long>(i);
    ++deg;
  }
  std::vector<mpz_class> out;
  for (const auto& q : c) {
    if (q.get_den() != 1) throw NumericalFailure("interpolated determinant has a non-integral coefficient");
    out.push_back(q.get_num());
  }
  if (stats) {
    stats->primes = 0;
    stats->points = static_cast<int>(points);
    stats->bound_bits = 0;
  }
  return IntPolynomial(std::move(out));
}

}  // namespace

const char* to_string(DetEngine e) { return e == DetEngine::bareiss ? "bareiss" : "multimodular"; }

std::uint32_t det_mod_p(std::vector<std::uint32_t>& a, std::size_t n, std::uint32_t p) {
  std::uint32_t det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a[piv * n + c] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      for (std::size_t j = c; j < n; ++j) std::swap(a[piv * n + j], a[c * n + j]);
      det = det == 0 ? 0 : p - det;
    }
    const std::uint32_t pv = a[c * n + c];
    det = mulmod(det, pv, p);
    const std::uint32_t inv = invmod(pv, p);
    for (std::size_t r = c + 1; r < n; ++r) {
      const std::uint32_t x = a[r * n + c];
      if (x == 0) continue;
      kernels::submul_mod(a.data() + r * n + c, a.data() + c * n + c, mulmod(x, inv, p), p, n - c);
    }
  }
  return det;
}

std::vector<std::uint32_t> modular_primes(std::size_t count) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t q = (1u << 26) - 1; out.size() < count; q -= 2) {
    bool prime = true;
    for (std::uint32_t d = 3; d * d <= q; d += 2)
      if (q % d == 0) {
        prime = false;
        break;
      }
    if (prime) out.push_back(q);
  }
  return out;
}

mpz_class det_coefficient_bound(const std::vector<Int32Matrix>& coeffs) {
  check_shapes(coeffs);
  const std::size_t n = coeffs[0].size();
  mpz_class bound = 1;
  for (std::size_t i = 0; i < n; ++i) {
    mpz_class row = 0;
    for (const auto& c : coeffs)
      for (std::size_t j = 0; j < n; ++j) row += std::abs(static_cast<long>(c(i, j)));
    bound *= row;
  }
  return bound;
}

IntPolynomial polynomial_det(const std::vector<Int32Matrix>& coeffs, DetEngine engine, DetStats* stats) {
  check_shapes(coeffs);
  if (coeffs[0].size() == 0) return IntPolynomial::one();
  return engine == DetEngine::bareiss ? det_bareiss(coeffs, stats) : det_multimodular(coeffs, stats);
}

}  // namespace f1zeta
