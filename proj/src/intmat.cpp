#include "f1zeta/intmat.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "f1zeta/error.hpp"

namespace f1zeta {

Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw ResourceLimit("int64 overflow in lattice arithmetic");
  return r;
}

Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw ResourceLimit("int64 overflow in lattice arithmetic");
  return r;
}

Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw ResourceLimit("int64 overflow in lattice arithmetic");
  return r;
}

Int floor_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

Int floor_mod(Int a, Int b) { return a - floor_div(a, b) * b; }

Int gcd(Int a, Int b) {
  a = std::llabs(a);
  b = std::llabs(b);
  while (b != 0) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Int lcm(Int a, Int b) {
  if (a == 0 || b == 0) return 0;
  return checked_mul(std::llabs(a) / gcd(a, b), std::llabs(b));
}

std::string to_string(std::span<const Int> v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i];
  }
  os << ')';
  return os.str();
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVec>& rows) {
  if (rows.empty()) return {};
  IntMatrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols()) throw InvalidInput("ragged matrix rows");
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = rows[r][c];
  }
  return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<IntVec>& cols) {
  return from_rows(cols).transpose();
}

IntVec IntMatrix::row(std::size_t r) const {
  return IntVec(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
}

IntVec IntMatrix::column(std::size_t c) const {
  IntVec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

std::vector<IntVec> IntMatrix::column_vectors() const {
  std::vector<IntVec> out;
  out.reserve(cols_);
  for (std::size_t c = 0; c < cols_; ++c) out.push_back(column(c));
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw InvalidInput("matrix shape mismatch");
  IntMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      Int a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j)
        out(i, j) = checked_add(out(i, j), checked_mul(a, rhs(k, j)));
    }
  return out;
}

IntVec IntMatrix::operator*(std::span<const Int> v) const {
  if (cols_ != v.size()) throw InvalidInput("matrix/vector shape mismatch");
  IntVec out(rows_, 0);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) out[i] = checked_add(out[i], checked_mul((*this)(i, k), v[k]));
  return out;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, Int factor) {
  if (factor == 0) return;
  for (std::size_t c = 0; c < cols_; ++c)
    (*this)(dst, c) = checked_add((*this)(dst, c), checked_mul(factor, (*this)(src, c)));
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, Int factor) {
  if (factor == 0) return;
  for (std::size_t r = 0; r < rows_; ++r)
    (*this)(r, dst) = checked_add((*this)(r, dst), checked_mul(factor, (*this)(r, src)));
}

mpz_class determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw InvalidInput("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  std::vector<mpz_class> a(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = static_cast<long>(m(i, j));
  mpz_class prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k * n + k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p * n + k] == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a[k * n + j], a[p * n + j]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class t = a[i * n + j] * a[k * n + k] - a[i * n + k] * a[k * n + j];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a[i * n + j] = t;
      }
    }
    prev = a[k * n + k];
  }
  mpz_class d = a[n * n - 1];
  return sign < 0 ? mpz_class(-d) : d;
}

namespace {

// Smallest nonzero |entry| in the block [k.., k..]; false if the block is zero.
bool find_pivot(const IntMatrix& a, std::size_t k, std::size_t& pr, std::size_t& pc) {
  Int best = 0;
  for (std::size_t r = k; r < a.rows(); ++r)
    for (std::size_t c = k; c < a.cols(); ++c) {
      Int v = std::llabs(a(r, c));
      if (v != 0 && (best == 0 || v < best)) {
        best = v;
        pr = r;
        pc = c;
      }
    }
  return best != 0;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m, bool require_nonsingular) {
  IntMatrix a = m;
  IntMatrix u = IntMatrix::identity(m.rows());
  IntMatrix v = IntMatrix::identity(m.cols());
  const std::size_t steps = std::min(m.rows(), m.cols());
  for (std::size_t k = 0; k < steps; ++k) {
    for (;;) {
      std::size_t pr = 0, pc = 0;
      if (!find_pivot(a, k, pr, pc)) {
        if (require_nonsingular && m.rows() == m.cols())
          throw InvalidInput("singular matrix has no finite quotient");
        return {u, a, v};
      }
      a.swap_rows(k, pr);
      u.swap_rows(k, pr);
      a.swap_cols(k, pc);
      v.swap_cols(k, pc);
      const Int piv = a(k, k);
      bool dirty = false;
      for (std::size_t r = k + 1; r < a.rows(); ++r) {
        Int q = a(r, k) / piv;
        a.add_row_multiple(r, k, -q);
        u.add_row_multiple(r, k, -q);
        dirty |= a(r, k) != 0;
      }
      for (std::size_t c = k + 1; c < a.cols(); ++c) {
        Int q = a(k, c) / piv;
        a.add_col_multiple(c, k, -q);
        v.add_col_multiple(c, k, -q);
        dirty |= a(k, c) != 0;
      }
      if (dirty) continue;
      // Divisibility: fold an offending row into row k and go again.
      bool folded = false;
      for (std::size_t r = k + 1; r < a.rows() && !folded; ++r)
        for (std::size_t c = k + 1; c < a.cols(); ++c)
          if (a(r, c) % piv != 0) {
            a.add_row_multiple(k, r, 1);
            u.add_row_multiple(k, r, 1);
            folded = true;
            break;
          }
      if (!folded) break;
    }
    if (a(k, k) < 0) {
      a.add_row_multiple(k, k, -2);
      u.add_row_multiple(k, k, -2);
    }
  }
  return {u, a, v};
}

std::vector<IntVec> hermite_basis(const std::vector<IntVec>& generators, std::size_t dim) {
  std::vector<IntVec> rows;
  for (const auto& g : generators) {
    if (g.size() != dim) throw InvalidInput("generator has wrong dimension");
    if (std::any_of(g.begin(), g.end(), [](Int x) { return x != 0; })) rows.push_back(g);
  }
  auto axpy = [](IntVec& dst, const IntVec& src, Int f) {
    if (f == 0) return;
    for (std::size_t i = 0; i < dst.size(); ++i) dst[i] = checked_add(dst[i], checked_mul(f, src[i]));
  };
  std::size_t r = 0;
  for (std::size_t c = 0; c < dim && r < rows.size(); ++c) {
    for (;;) {
      std::size_t best = rows.size();
      for (std::size_t i = r; i < rows.size(); ++i)
        if (rows[i][c] != 0 && (best == rows.size() || std::llabs(rows[i][c]) < std::llabs(rows[best][c])))
          best = i;
      if (best == rows.size()) break;
      std::swap(rows[r], rows[best]);
      bool others = false;
      for (std::size_t i = r + 1; i < rows.size(); ++i) {
        if (rows[i][c] == 0) continue;
        axpy(rows[i], rows[r], -(rows[i][c] / rows[r][c]));
        others |= rows[i][c] != 0;
      }
      if (others) continue;
      if (rows[r][c] < 0)
        for (auto& x : rows[r]) x = -x;
      for (std::size_t i = 0; i < r; ++i) axpy(rows[i], rows[r], -floor_div(rows[i][c], rows[r][c]));
      ++r;
      break;
    }
  }
  rows.resize(r);
  return rows;
}

std::vector<std::size_t> pivot_columns(const std::vector<IntVec>& hermite) {
  std::vector<std::size_t> cols;
  for (const auto& row : hermite) {
    std::size_t c = 0;
    while (c < row.size() && row[c] == 0) ++c;
    cols.push_back(c);
  }
  return cols;
}

IntVec reduce_modulo(IntVec v, const std::vector<IntVec>& hermite) {
  const auto piv = pivot_columns(hermite);
  for (std::size_t i = 0; i < hermite.size(); ++i) {
    Int q = floor_div(v[piv[i]], hermite[i][piv[i]]);
    if (q == 0) continue;
    for (std::size_t c = 0; c < v.size(); ++c) v[c] = checked_sub(v[c], checked_mul(q, hermite[i][c]));
  }
  return v;
}

bool lattice_contains(const std::vector<IntVec>& hermite, std::span<const Int> v) {
  IntVec r = reduce_modulo(IntVec(v.begin(), v.end()), hermite);
  return std::all_of(r.begin(), r.end(), [](Int x) { return x == 0; });
}

std::vector<IntVec> integer_kernel(const IntMatrix& a) {
  const std::size_t m = a.rows(), k = a.cols();
  // Row j = (column j of A | e_j); echelonize on the first m entries.
  std::vector<IntVec> rows(k, IntVec(m + k, 0));
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t i = 0; i < m; ++i) rows[j][i] = a(i, j);
    rows[j][m + j] = 1;
  }
  auto axpy = [](IntVec& dst, const IntVec& src, Int f) {
    if (f == 0) return;
    for (std::size_t i = 0; i < dst.size(); ++i) dst[i] = checked_add(dst[i], checked_mul(f, src[i]));
  };
  std::size_t r = 0;
  for (std::size_t c = 0; c < m && r < k; ++c) {
    for (;;) {
      std::size_t best = k;
      for (std::size_t i = r; i < k; ++i)
        if (rows[i][c] != 0 && (best == k || std::llabs(rows[i][c]) < std::llabs(rows[best][c]))) best = i;
      if (best == k) break;
      std::swap(rows[r], rows[best]);
      bool others = false;
      for (std::size_t i = r + 1; i < k; ++i) {
        if (rows[i][c] == 0) continue;
        axpy(rows[i], rows[r], -(rows[i][c] / rows[r][c]));
        others |= rows[i][c] != 0;
      }
      if (!others) {
        ++r;
        break;
      }
    }
  }
  std::vector<IntVec> kernel;
  for (std::size_t i = r; i < k; ++i) kernel.emplace_back(rows[i].begin() + m, rows[i].end());
  return hermite_basis(kernel, k);
}

Int sublattice_index(const std::vector<IntVec>& outer, const std::vector<IntVec>& inner) {
  if (outer.size() != inner.size()) throw InvalidInput("sublattice_index: rank mismatch");
  if (pivot_columns(outer) != pivot_columns(inner)) throw InvalidInput("sublattice_index: spans differ");
  for (const auto& v : inner)
    if (!lattice_contains(outer, v)) throw InvalidInput("sublattice_index: not a sublattice");
  const auto piv = pivot_columns(outer);
  Int num = 1, den = 1;
  for (std::size_t i = 0; i < outer.size(); ++i) {
    num = checked_mul(num, inner[i][piv[i]]);
    den = checked_mul(den, outer[i][piv[i]]);
  }
  return num / den;
}

std::optional<std::vector<mpq_class>> solve_rational(const IntMatrix& b, std::span<const Int> v) {
  const std::size_t n = b.rows();
  if (b.cols() != n || v.size() != n) throw InvalidInput("solve_rational: shape mismatch");
  std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = static_cast<long>(b(i, j));
    a[i][n] = static_cast<long>(v[i]);
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return std::nullopt;
    std::swap(a[c], a[p]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c] == 0) continue;
      mpq_class f = a[i][c] / a[c][c];
      for (std::size_t j = c; j <= n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  std::vector<mpq_class> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = a[i][n] / a[i][i];
  return x;
}

}  // namespace f1zeta
