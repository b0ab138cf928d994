#include <algorithm>

#include "f1zeta/error.hpp"
#include "f1zeta/zeta.hpp"

namespace f1zeta {

std::vector<GeodesicClass> enumerate_positive_geodesics(const QuotientGraph& g, Int max_length) {
  if (max_length < 0) throw InvalidInput("max_length must be nonnegative");
  std::vector<GeodesicClass> out;
  for (int d = 0; d < g.n; ++d) {
    const auto& succ = g.direction[d];
    std::vector<bool> seen(succ.size(), false);
    for (std::uint32_t v = 0; v < succ.size(); ++v) {
      if (seen[v]) continue;
      Int len = 0;
      std::uint32_t w = v;
      do {
        seen[w] = true;
        w = succ[w];
        ++len;
      } while (w != v);
      if (len <= max_length) out.push_back({len, len, d + 1, v});
    }
  }
  return out;
}

IntPolynomial euler_product_truncation(const std::vector<Int>& lengths, std::size_t max_degree) {
  IntPolynomial z = IntPolynomial::one();
  for (Int l : lengths) {
    if (l <= 0) throw InvalidInput("cycle lengths must be positive");
    if (static_cast<std::size_t>(l) > max_degree) continue;
    z = z.multiply_truncated(IntPolynomial::one_minus_power(static_cast<std::size_t>(l)), max_degree);
  }
  return z;
}

IntPolynomial euler_product_truncation(const std::vector<GeodesicClass>& classes, std::size_t max_degree) {
  std::vector<Int> lengths;
  for (const auto& c : classes) lengths.push_back(c.primitive_length);
  return euler_product_truncation(lengths, max_degree);
}

namespace {

struct CycleSearch {
  const std::vector<std::vector<std::uint32_t>>& nbrs;
  Int max_length;
  std::vector<CycleClass>& out;
  std::vector<std::uint32_t> path;

  static bool primitive(const std::vector<std::uint32_t>& c) {
    const std::size_t L = c.size();
    for (std::size_t d = 1; d < L; ++d) {
      if (L % d) continue;
      bool periodic = true;
      for (std::size_t i = 0; i < L && periodic; ++i) periodic = c[i] == c[(i + d) % L];
      if (periodic) return false;
    }
    return true;
  }

  static bool least_rotation(const std::vector<std::uint32_t>& c) {
    const std::size_t L = c.size();
    for (std::size_t r = 1; r < L; ++r) {
      for (std::size_t i = 0; i < L; ++i) {
        auto a = c[(i + r) % L], b = c[i];
        if (a != b) {
          if (a < b) return false;
          break;
        }
      }
    }
    return true;
  }

  void extend() {
    const std::uint32_t start = path.front();
    const std::uint32_t cur = path.back();
    const std::uint32_t prev = path.size() >= 2 ? path[path.size() - 2] : UINT32_MAX;
    for (std::uint32_t w : nbrs[cur]) {
      if (w == prev || w < start) continue;
      // Closing edge cur -> start must not reverse the first edge. The walk
      // may also pass through start and close later.
      if (w == start && path.size() >= 3 && path[1] != cur && primitive(path) && least_rotation(path))
        out.push_back({path});
      if (static_cast<Int>(path.size()) >= max_length) continue;
      path.push_back(w);
      extend();
      path.pop_back();
    }
  }
};

}  // namespace

std::vector<CycleClass> enumerate_backtrackless_cycles(const QuotientGraph& g, Int max_length) {
  if (max_length < 0) throw InvalidInput("max_length must be nonnegative");
  const Int32Matrix a = g.adjacency();
  std::vector<std::vector<std::uint32_t>> nbrs(a.size());
  for (std::size_t v = 0; v < a.size(); ++v)
    for (std::size_t w = 0; w < a.size(); ++w) {
      if (a(w, v) == 0) continue;
      if (a(w, v) > 1 || w == v || a(v, w) != a(w, v))
        throw InvalidInput("backtrackless cycle enumeration needs a simple graph (loops or parallel edges found)");
      nbrs[v].push_back(static_cast<std::uint32_t>(w));
    }
  std::vector<CycleClass> out;
  CycleSearch search{nbrs, max_length, out, {}};
  for (std::uint32_t v = 0; v < nbrs.size(); ++v) {
    search.path = {v};
    search.extend();
  }
  return out;
}

}  // namespace f1zeta
