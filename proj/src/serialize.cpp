#include "f1zeta/serialize.hpp"

#include "f1zeta/error.hpp"

namespace f1zeta {

namespace {

Json terms_to_json(const SparsePoly& terms) {
  Json out = Json::array();
  for (const auto& [e, c] : terms) out.push_back(Json::array({e, c.get_str()}));
  return out;
}

SparsePoly terms_from_json(const Json& j) {
  SparsePoly out;
  for (const auto& t : j) out[t.at(0).get<ExpVec>()] = mpz_class(t.at(1).get<std::string>());
  return out;
}

}  // namespace

Json to_json(const IntPolynomial& p) { return p.to_decimal_strings(); }

IntPolynomial polynomial_from_json(const Json& j) {
  return IntPolynomial::from_decimal_strings(j.get<std::vector<std::string>>());
}

Json to_json(const std::vector<mpz_class>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(x.get_str());
  return out;
}

Json to_json(const IntVec& v) { return Json(std::vector<Int>(v.begin(), v.end())); }

Json to_json(const MultiSeries& s) {
  return {{"nvars", s.nvars()}, {"cutoff", s.cutoff()}, {"terms", terms_to_json(s.terms())}};
}

MultiSeries series_from_json(const Json& j) {
  MultiSeries s(j.at("nvars").get<int>(), j.at("cutoff").get<int>());
  for (const auto& [e, c] : terms_from_json(j.at("terms"))) s.add(e, c);
  return s;
}

Json to_json(const MultiRational& r) {
  Json den = Json::array();
  for (const auto& [e, k] : r.denominator()) den.push_back(Json::array({e, k}));
  return {{"nvars", r.nvars()}, {"numerator", terms_to_json(r.numerator())}, {"denominator", den}};
}

MultiRational rational_from_json(const Json& j) {
  std::map<ExpVec, int> den;
  for (const auto& f : j.at("denominator")) den[f.at(0).get<ExpVec>()] = f.at(1).get<int>();
  return MultiRational::from_parts(j.at("nvars").get<int>(), terms_from_json(j.at("numerator")), std::move(den));
}

Json to_json(const LengthVector& l) {
  Json values = Json::array();
  for (const auto& q : l.values) values.push_back(q.get_str());
  return {{"scale", to_string(l.scale)}, {"values", values}};
}

Json to_json(const AffineElement& g) {
  std::vector<int> images;
  for (int x : g.p.images()) images.push_back(x + 1);
  return {{"translation", to_json(g.v.coords())}, {"permutation", images}};
}

Json to_json(const ZetaReport& r) {
  return {
      {"max_degree", r.max_degree},
      {"orders", to_json(r.orders)},
      {"determinant", to_json(r.det)},
      {"orders_product", to_json(r.by_orders)},
      {"lfunction",
       {{"polynomial", to_json(r.lfunction.poly)},
        {"max_deviation", r.lfunction.max_deviation},
        {"precision_bits", r.lfunction.precision_bits}}},
      {"euler_product", to_json(r.euler)},
      {"determinant_truncated", to_json(r.det_truncated)},
      {"class_counts", to_json(r.class_counts)},
      {"expected_class_counts", to_json(r.expected_counts)},
      {"roots", {{"max_modulus_deviation", r.roots.max_modulus_deviation}, {"max_residual", r.roots.max_residual}}},
      {"determinant_engine",
       {{"primes", r.det_stats.primes}, {"points", r.det_stats.points}, {"bound_bits", r.det_stats.bound_bits}}},
      {"verdicts",
       {{"det_equals_orders", r.det_equals_orders},
        {"lfunction_equals_det", r.lfunction_equals_det},
        {"lfunction_within_tolerance", r.lfunction_within_tolerance},
        {"euler_matches", r.euler_matches},
        {"class_counts_match", r.counts_match},
        {"degree_and_ends", r.degree_and_ends_ok}}},
  };
}

Json to_json(const ComparisonReport& r) {
  return {{"max_degree", r.max_degree},
          {"lhs", to_json(r.lhs)},
          {"rhs_corrected", to_json(r.rhs)},
          {"rhs_literal", to_json(r.literal)},
          {"corrected_holds", r.corrected_holds},
          {"literal_holds", r.literal_holds},
          {"literal_max_discrepancy", r.literal_max_discrepancy.get_str()}};
}

}  // namespace f1zeta
