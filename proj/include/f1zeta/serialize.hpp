#pragma once

// JSON forms of the exact objects. Big integers are decimal strings.

#include <json.hpp>

#include "f1zeta/multivariate.hpp"
#include "f1zeta/polynomial.hpp"
#include "f1zeta/selberg.hpp"
#include "f1zeta/zeta.hpp"

namespace f1zeta {

using Json = nlohmann::json;

Json to_json(const IntPolynomial& p);
IntPolynomial polynomial_from_json(const Json& j);

Json to_json(const std::vector<mpz_class>& v);
Json to_json(const IntVec& v);

// {"nvars", "cutoff", "terms": [[exponents, "coefficient"], ...]}
Json to_json(const MultiSeries& s);
MultiSeries series_from_json(const Json& j);

// {"nvars", "numerator": [[exponents, "coefficient"], ...], "denominator": [[exponents, power], ...]}
Json to_json(const MultiRational& r);
MultiRational rational_from_json(const Json& j);

Json to_json(const LengthVector& l);
Json to_json(const AffineElement& g);
Json to_json(const ZetaReport& r);
Json to_json(const ComparisonReport& r);

}  // namespace f1zeta
