#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace f1zeta {

// Dense univariate polynomial (or truncated power series) with big integer
// coefficients, index = degree. Trailing zeros are trimmed, so the zero
// polynomial has no coefficients.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<mpz_class> coeffs);
  IntPolynomial(std::initializer_list<long> coeffs);

  static IntPolynomial one() { return IntPolynomial{1}; }
  static IntPolynomial monomial(std::size_t degree, const mpz_class& c = 1);
  // (1 - u^m)
  static IntPolynomial one_minus_power(std::size_t m);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<mpz_class>& coefficients() const { return coeffs_; }
  mpz_class coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : mpz_class(0); }

  IntPolynomial operator+(const IntPolynomial& rhs) const;
  IntPolynomial operator-(const IntPolynomial& rhs) const;
  IntPolynomial operator*(const IntPolynomial& rhs) const;
  IntPolynomial operator*(const mpz_class& s) const;
  bool operator==(const IntPolynomial& rhs) const { return coeffs_ == rhs.coeffs_; }

  IntPolynomial pow(unsigned e) const;
  IntPolynomial derivative() const;
  // Keep terms of degree <= max_degree.
  IntPolynomial truncated(std::size_t max_degree) const;
  // Product truncated at max_degree.
  IntPolynomial multiply_truncated(const IntPolynomial& rhs, std::size_t max_degree) const;
  // Power series quotient this / rhs to max_degree; rhs must have constant term +-1.
  IntPolynomial series_divide(const IntPolynomial& rhs, std::size_t max_degree) const;

  std::vector<std::string> to_decimal_strings() const;
  static IntPolynomial from_decimal_strings(const std::vector<std::string>& s);
  std::string to_string(const char* var = "u") const;

 private:
  void trim();
  std::vector<mpz_class> coeffs_;
};

}  // namespace f1zeta
