#pragma once

// Sparse multivariate objects in u_1 .. u_{n-1}: truncated power series
// and rational functions whose denominators are products of (1 - u^e).

#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace f1zeta {

using ExpVec = std::vector<int>;
using SparsePoly = std::map<ExpVec, mpz_class>;

int total_degree(const ExpVec& e);
std::string monomial_string(const ExpVec& e);

SparsePoly poly_multiply(const SparsePoly& a, const SparsePoly& b);
// a * (1 - u^e)^k
SparsePoly poly_multiply_one_minus(const SparsePoly& a, const ExpVec& e, int k);

class MultiSeries {
 public:
  MultiSeries() = default;
  MultiSeries(int nvars, int cutoff) : nvars_(nvars), cutoff_(cutoff) {}

  int nvars() const { return nvars_; }
  int cutoff() const { return cutoff_; }
  const SparsePoly& terms() const { return terms_; }

  // Adds c*u^e; ignored when total degree exceeds the cutoff.
  void add(const ExpVec& e, const mpz_class& c);
  mpz_class coefficient(const ExpVec& e) const;
  MultiSeries truncated(int cutoff) const;

  bool operator==(const MultiSeries& rhs) const;

 private:
  int nvars_ = 0;
  int cutoff_ = 0;
  SparsePoly terms_;  // nonzero coefficients only
};

// numerator / prod_f (1 - u^f)^{k_f}. Denominators stay factored; the
// numerator is not gcd-reduced against them.
class MultiRational {
 public:
  MultiRational() = default;
  explicit MultiRational(int nvars) : nvars_(nvars) {}

  static MultiRational constant(int nvars, const mpz_class& c);
  // u^{base}/prod_j (1 - u^{gen_j}) summed over base points.
  static MultiRational cone_series(int nvars, const std::vector<ExpVec>& bases, const std::vector<ExpVec>& gens);

  int nvars() const { return nvars_; }
  const SparsePoly& numerator() const { return numerator_; }
  const std::map<ExpVec, int>& denominator() const { return denominator_; }

  MultiRational operator+(const MultiRational& rhs) const;
  MultiRational operator*(const mpz_class& s) const;

  MultiSeries expand(int cutoff) const;

  // Builds directly from parts (used by deserialization).
  static MultiRational from_parts(int nvars, SparsePoly numerator, std::map<ExpVec, int> denominator);

 private:
  int nvars_ = 0;
  SparsePoly numerator_;
  std::map<ExpVec, int> denominator_;
};

}  // namespace f1zeta
