#pragma once

// The generator set S, the quotient Cayley graph of Lambda/Gamma and its
// typed adjacency operators.

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "f1zeta/lambda.hpp"
#include "f1zeta/quotient.hpp"

namespace f1zeta {

// Dense square int32 matrix, row-major.
class Int32Matrix {
 public:
  Int32Matrix() = default;
  explicit Int32Matrix(std::size_t n) : n_(n), data_(n * n, 0) {}
  static Int32Matrix identity(std::size_t n);

  std::size_t size() const { return n_; }
  std::int32_t& operator()(std::size_t r, std::size_t c) { return data_[r * n_ + c]; }
  std::int32_t operator()(std::size_t r, std::size_t c) const { return data_[r * n_ + c]; }
  const std::int32_t* row(std::size_t r) const { return data_.data() + r * n_; }

  Int32Matrix operator+(const Int32Matrix& rhs) const;
  Int32Matrix operator*(const Int32Matrix& rhs) const;
  Int32Matrix operator*(std::int32_t s) const;
  Int32Matrix transpose() const;
  bool operator==(const Int32Matrix&) const = default;

  std::vector<std::int64_t> row_sums() const;
  std::vector<std::int64_t> column_sums() const;
  std::int32_t max_entry() const;

 private:
  std::size_t n_ = 0;
  std::vector<std::int32_t> data_;
};

struct GeneratorSet {
  int n = 0;
  // Ordered by type, then by subset bitmask (bit i-1 = s_i).
  std::vector<LambdaElement> elements;
  std::vector<int> types;
  std::vector<unsigned> subsets;
};

GeneratorSet generator_set(int n);

struct GraphOptions {
  Int max_vertices = 4096;
  // The Cayley graph itself is defined without it; the zeta identities
  // need it.
  bool require_type_zero = true;
};

struct QuotientGraph {
  int n = 0;
  Int N = 0;
  FiniteAbelianGroup group;
  GeneratorSet generators;
  // Residue tuples in lexicographic order; index = group.index_of(residues).
  std::vector<IntVec> vertices;
  // step[g][v] = vertex v + generators.elements[g].
  std::vector<std::vector<std::uint32_t>> step;
  // direction[i][v] = v + s_{i+1}, i = 0..n-1.
  std::vector<std::vector<std::uint32_t>> direction;
  // typed[i-1] = A_i, A_i[w][v] = #{s of type i : v + s = w}.
  std::vector<Int32Matrix> typed;

  // Throws InvalidInput unless 1 <= i <= n-1.
  const Int32Matrix& typed_adjacency(int i) const;
  Int32Matrix adjacency() const;
  // Order of s_i (1-based) in Lambda/Gamma.
  Int direction_order(int i) const;
};

QuotientGraph build_graph(const TranslationSubgroup& gamma, const GraphOptions& options = {});

// Adds delta to A_i[w][v]; the labelled step tables are left alone.
void perturb_adjacency(QuotientGraph& g, int i, std::size_t w, std::size_t v, std::int32_t delta);

// "v w type multiplicity" per line, vertices as residue tuples.
void write_edge_list(std::ostream& os, const QuotientGraph& g);

}  // namespace f1zeta
