#include "f1zeta/cayley.hpp"

#include <algorithm>
#include <map>
#include <ostream>

#include "f1zeta/error.hpp"
#include "f1zeta/kernels.hpp"

namespace f1zeta {

Int32Matrix Int32Matrix::identity(std::size_t n) {
  Int32Matrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Int32Matrix Int32Matrix::operator+(const Int32Matrix& rhs) const {
  if (n_ != rhs.n_) throw InvalidInput("matrix size mismatch");
  Int32Matrix r = *this;
  kernels::axpy_i32(r.data_.data(), rhs.data_.data(), 1, data_.size());
  return r;
}

Int32Matrix Int32Matrix::operator*(const Int32Matrix& rhs) const {
  if (n_ != rhs.n_) throw InvalidInput("matrix size mismatch");
  Int32Matrix r(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t k = 0; k < n_; ++k) {
      std::int32_t a = (*this)(i, k);
      if (a != 0) kernels::axpy_i32(r.data_.data() + i * n_, rhs.row(k), a, n_);
    }
  return r;
}

Int32Matrix Int32Matrix::operator*(std::int32_t s) const {
  Int32Matrix r(n_);
  kernels::axpy_i32(r.data_.data(), data_.data(), s, data_.size());
  return r;
}

Int32Matrix Int32Matrix::transpose() const {
  Int32Matrix r(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

std::vector<std::int64_t> Int32Matrix::row_sums() const {
  std::vector<std::int64_t> s(n_, 0);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) s[i] += (*this)(i, j);
  return s;
}

std::vector<std::int64_t> Int32Matrix::column_sums() const { return transpose().row_sums(); }

std::int32_t Int32Matrix::max_entry() const {
  return data_.empty() ? 0 : *std::max_element(data_.begin(), data_.end());
}

GeneratorSet generator_set(int n) {
  if (n < 2) throw InvalidInput("generator_set needs n >= 2");
  if (n > 20) throw ResourceLimit("generator_set: n too large");
  GeneratorSet s{n, {}, {}, {}};
  for (int t = 1; t < n; ++t)
    for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
      if (__builtin_popcount(mask) != t) continue;
      IntVec raw(n, 0);
      for (int i = 0; i < n; ++i)
        if (mask & (1u << i)) raw[i] = 1;
      s.elements.push_back(LambdaElement::canonicalize(raw));
      s.types.push_back(t);
      s.subsets.push_back(mask);
    }
  return s;
}

const Int32Matrix& QuotientGraph::typed_adjacency(int i) const {
  if (i < 1 || i > n - 1)
    throw InvalidInput("adjacency type " + std::to_string(i) + " out of range 1.." + std::to_string(n - 1));
  return typed[i - 1];
}

Int32Matrix QuotientGraph::adjacency() const {
  Int32Matrix a(static_cast<std::size_t>(N));
  for (const auto& t : typed) a = a + t;
  return a;
}

Int QuotientGraph::direction_order(int i) const {
  if (i < 1 || i > n) throw InvalidInput("direction index out of range");
  const auto& succ = direction[i - 1];
  Int m = 1;
  for (std::uint32_t v = succ[0]; v != 0; v = succ[v]) ++m;
  return m;
}

QuotientGraph build_graph(const TranslationSubgroup& gamma, const GraphOptions& options) {
  QuotientGraph g;
  g.n = gamma.n;
  Int N = gamma.index();
  if (N > options.max_vertices)
    throw ResourceLimit("quotient has " + std::to_string(N) + " vertices, cap is " +
                        std::to_string(options.max_vertices));
  g.group = options.require_type_zero ? quotient_group(gamma) : FiniteAbelianGroup(gamma);
  g.N = N;
  g.generators = generator_set(g.n);
  for (Int v = 0; v < N; ++v) g.vertices.push_back(g.group.element(static_cast<std::size_t>(v)));

  auto translate = [&](const LambdaElement& s) {
    IntVec shift = g.group.project(s);
    std::vector<std::uint32_t> out(N);
    for (Int v = 0; v < N; ++v)
      out[v] = static_cast<std::uint32_t>(g.group.index_of(g.group.add(g.vertices[v], shift)));
    return out;
  };
  for (const auto& s : g.generators.elements) g.step.push_back(translate(s));
  for (int i = 0; i < g.n; ++i) g.direction.push_back(translate(LambdaElement::unit(g.n, i)));

  g.typed.assign(g.n - 1, Int32Matrix(static_cast<std::size_t>(N)));
  for (std::size_t k = 0; k < g.step.size(); ++k) {
    auto& a = g.typed[g.generators.types[k] - 1];
    for (Int v = 0; v < N; ++v) a(g.step[k][v], v) += 1;
  }
  return g;
}

void perturb_adjacency(QuotientGraph& g, int i, std::size_t w, std::size_t v, std::int32_t delta) {
  if (i < 1 || i > g.n - 1) throw InvalidInput("adjacency type out of range");
  if (w >= static_cast<std::size_t>(g.N) || v >= static_cast<std::size_t>(g.N))
    throw InvalidInput("vertex index out of range");
  g.typed[i - 1](w, v) += delta;
}

void write_edge_list(std::ostream& os, const QuotientGraph& g) {
  for (int i = 1; i < g.n; ++i) {
    const auto& a = g.typed[i - 1];
    for (std::size_t v = 0; v < a.size(); ++v)
      for (std::size_t w = 0; w < a.size(); ++w)
        if (a(w, v) != 0)
          os << to_string(g.vertices[v]) << ' ' << to_string(g.vertices[w]) << ' ' << i << ' ' << a(w, v) << '\n';
  }
}

}  // namespace f1zeta
