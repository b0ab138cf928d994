#include "f1zeta/polynomial.hpp"

#include <sstream>

#include "f1zeta/error.hpp"

namespace f1zeta {

IntPolynomial::IntPolynomial(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

IntPolynomial IntPolynomial::monomial(std::size_t degree, const mpz_class& c) {
  std::vector<mpz_class> v(degree + 1);
  v[degree] = c;
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::one_minus_power(std::size_t m) {
  std::vector<mpz_class> v(m + 1);
  v[0] += 1;
  v[m] -= 1;
  return IntPolynomial(std::move(v));
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& rhs) const {
  std::vector<mpz_class> out(std::max(coeffs_.size(), rhs.coeffs_.size()));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) out[i] += rhs.coeffs_[i];
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& rhs) const {
  std::vector<mpz_class> out(std::max(coeffs_.size(), rhs.coeffs_.size()));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) out[i] -= rhs.coeffs_[i];
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& rhs) const {
  if (is_zero() || rhs.is_zero()) return {};
  return multiply_truncated(rhs, coeffs_.size() + rhs.coeffs_.size() - 2);
}

IntPolynomial IntPolynomial::operator*(const mpz_class& s) const {
  std::vector<mpz_class> out = coeffs_;
  for (auto& c : out) c *= s;
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::multiply_truncated(const IntPolynomial& rhs, std::size_t max_degree) const {
  if (is_zero() || rhs.is_zero()) return {};
  const std::size_t len = std::min(max_degree + 1, coeffs_.size() + rhs.coeffs_.size() - 1);
  std::vector<mpz_class> out(len);
  for (std::size_t i = 0; i < coeffs_.size() && i < len; ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size() && i + j < len; ++j)
      mpz_addmul(out[i + j].get_mpz_t(), coeffs_[i].get_mpz_t(), rhs.coeffs_[j].get_mpz_t());
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::pow(unsigned e) const {
  IntPolynomial result = one();
  IntPolynomial base = *this;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return result;
}

IntPolynomial IntPolynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<mpz_class> out(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::truncated(std::size_t max_degree) const {
  if (coeffs_.size() <= max_degree + 1) return *this;
  return IntPolynomial(std::vector<mpz_class>(coeffs_.begin(), coeffs_.begin() + max_degree + 1));
}

IntPolynomial IntPolynomial::series_divide(const IntPolynomial& rhs, std::size_t max_degree) const {
  if (rhs.is_zero() || (rhs.coeffs_[0] != 1 && rhs.coeffs_[0] != -1))
    throw InvalidInput("series_divide: divisor needs constant term +-1");
  const mpz_class& c0 = rhs.coeffs_[0];
  std::vector<mpz_class> q(max_degree + 1);
  for (std::size_t k = 0; k <= max_degree; ++k) {
    mpz_class acc = coefficient(k);
    for (std::size_t j = 1; j <= k && j < rhs.coeffs_.size(); ++j)
      mpz_submul(acc.get_mpz_t(), rhs.coeffs_[j].get_mpz_t(), q[k - j].get_mpz_t());
    q[k] = acc * c0;  // c0 = +-1 is its own inverse
  }
  return IntPolynomial(std::move(q));
}

std::vector<std::string> IntPolynomial::to_decimal_strings() const {
  std::vector<std::string> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c.get_str());
  return out;
}

IntPolynomial IntPolynomial::from_decimal_strings(const std::vector<std::string>& s) {
  std::vector<mpz_class> c;
  c.reserve(s.size());
  for (const auto& x : s) {
    mpz_class v;
    if (v.set_str(x, 10) != 0) throw InvalidInput("not a decimal integer: '" + x + "'");
    c.push_back(v);
  }
  return IntPolynomial(std::move(c));
}

std::string IntPolynomial::to_string(const char* var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const mpz_class& c = coeffs_[k];
    if (c == 0) continue;
    mpz_class a = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0 || a != 1) os << a.get_str();
    if (k >= 1) os << var;
    if (k >= 2) os << '^' << k;
  }
  return os.str();
}

}  // namespace f1zeta
