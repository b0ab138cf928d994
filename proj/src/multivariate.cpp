#include "f1zeta/multivariate.hpp"

#include <numeric>
#include <sstream>

#include "f1zeta/error.hpp"

namespace f1zeta {

int total_degree(const ExpVec& e) { return std::accumulate(e.begin(), e.end(), 0); }

std::string monomial_string(const ExpVec& e) {
  std::ostringstream os;
  bool any = false;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (any) os << '*';
    os << 'u' << (i + 1);
    if (e[i] != 1) os << '^' << e[i];
    any = true;
  }
  if (!any) os << '1';
  return os.str();
}

namespace {

ExpVec add_exp(const ExpVec& a, const ExpVec& b) {
  ExpVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

void drop_zeros(SparsePoly& p) {
  for (auto it = p.begin(); it != p.end();) it = it->second == 0 ? p.erase(it) : std::next(it);
}

}  // namespace

SparsePoly poly_multiply(const SparsePoly& a, const SparsePoly& b) {
  SparsePoly out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) mpz_addmul(out[add_exp(ea, eb)].get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  drop_zeros(out);
  return out;
}

SparsePoly poly_multiply_one_minus(const SparsePoly& a, const ExpVec& e, int k) {
  SparsePoly out = a;
  for (int i = 0; i < k; ++i) {
    SparsePoly next = out;
    for (const auto& [ex, c] : out) next[add_exp(ex, e)] -= c;
    drop_zeros(next);
    out = std::move(next);
  }
  return out;
}

void MultiSeries::add(const ExpVec& e, const mpz_class& c) {
  if (static_cast<int>(e.size()) != nvars_) throw InvalidInput("series exponent has wrong arity");
  if (total_degree(e) > cutoff_ || c == 0) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

mpz_class MultiSeries::coefficient(const ExpVec& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

MultiSeries MultiSeries::truncated(int cutoff) const {
  MultiSeries out(nvars_, std::min(cutoff, cutoff_));
  for (const auto& [e, c] : terms_) out.add(e, c);
  return out;
}

bool MultiSeries::operator==(const MultiSeries& rhs) const {
  return nvars_ == rhs.nvars_ && cutoff_ == rhs.cutoff_ && terms_ == rhs.terms_;
}

MultiRational MultiRational::constant(int nvars, const mpz_class& c) {
  MultiRational r(nvars);
  if (c != 0) r.numerator_[ExpVec(nvars, 0)] = c;
  return r;
}

MultiRational MultiRational::cone_series(int nvars, const std::vector<ExpVec>& bases, const std::vector<ExpVec>& gens) {
  MultiRational r(nvars);
  for (const auto& b : bases) r.numerator_[b] += 1;
  drop_zeros(r.numerator_);
  for (const auto& g : gens) {
    if (total_degree(g) == 0) throw Divergence("geometric series with zero exponent vector diverges");
    r.denominator_[g] += 1;
  }
  return r;
}

MultiRational MultiRational::from_parts(int nvars, SparsePoly numerator, std::map<ExpVec, int> denominator) {
  MultiRational r(nvars);
  drop_zeros(numerator);
  r.numerator_ = std::move(numerator);
  r.denominator_ = std::move(denominator);
  return r;
}

MultiRational MultiRational::operator+(const MultiRational& rhs) const {
  if (nvars_ != rhs.nvars_) throw InvalidInput("adding rational functions in different variables");
  std::map<ExpVec, int> common = denominator_;
  for (const auto& [f, k] : rhs.denominator_) common[f] = std::max(common[f], k);
  auto lift = [&common](const MultiRational& x) {
    SparsePoly num = x.numerator_;
    for (const auto& [f, k] : common) {
      auto it = x.denominator_.find(f);
      int have = it == x.denominator_.end() ? 0 : it->second;
      if (k > have) num = poly_multiply_one_minus(num, f, k - have);
    }
    return num;
  };
  SparsePoly a = lift(*this);
  for (const auto& [e, c] : lift(rhs)) a[e] += c;
  drop_zeros(a);
  MultiRational out(nvars_);
  out.numerator_ = std::move(a);
  out.denominator_ = std::move(common);
  return out;
}

MultiRational MultiRational::operator*(const mpz_class& s) const {
  MultiRational out = *this;
  for (auto& [e, c] : out.numerator_) c *= s;
  drop_zeros(out.numerator_);
  return out;
}

MultiSeries MultiRational::expand(int cutoff) const {
  SparsePoly acc;
  for (const auto& [e, c] : numerator_)
    if (total_degree(e) <= cutoff) acc[e] = c;
  for (const auto& [f, k] : denominator_) {
    for (int rep = 0; rep < k; ++rep) {
      // acc <- acc / (1 - u^f), forward in lexicographic order.
      for (auto it = acc.begin(); it != acc.end(); ++it) {
        ExpVec next = add_exp(it->first, f);
        if (total_degree(next) <= cutoff) acc[next] += it->second;
      }
    }
  }
  MultiSeries out(nvars_, cutoff);
  for (const auto& [e, c] : acc) out.add(e, c);
  return out;
}

}  // namespace f1zeta
