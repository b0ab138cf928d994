#include "f1zeta/lambda.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "f1zeta/error.hpp"

namespace f1zeta {

// ---- LambdaElement --------------------------------------------------------

LambdaElement LambdaElement::canonicalize(std::span<const Int> raw) {
  if (raw.size() < 2) throw InvalidInput("Lambda elements need n >= 2 coordinates");
  Int m = *std::min_element(raw.begin(), raw.end());
  IntVec c(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) c[i] = checked_sub(raw[i], m);
  return LambdaElement(std::move(c));
}

LambdaElement LambdaElement::from_lambda_coords(int n, std::span<const Int> c) {
  if (n < 2 || static_cast<int>(c.size()) != n - 1)
    throw InvalidInput("Lambda-coordinates must have n-1 entries");
  IntVec raw(c.begin(), c.end());
  raw.push_back(0);
  return canonicalize(raw);
}

LambdaElement LambdaElement::zero(int n) { return canonicalize(IntVec(std::max(n, 0), 0)); }

LambdaElement LambdaElement::unit(int n, int i) {
  IntVec raw(n, 0);
  raw.at(i) = 1;
  return canonicalize(raw);
}

int LambdaElement::type() const {
  Int s = 0;
  for (Int x : coords_) s = checked_add(s, x);
  return static_cast<int>(floor_mod(s, n()));
}

IntVec LambdaElement::lambda_coords() const {
  IntVec c(coords_.size() - 1);
  for (std::size_t i = 0; i + 1 < coords_.size(); ++i) c[i] = checked_sub(coords_[i], coords_.back());
  return c;
}

bool LambdaElement::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](Int x) { return x == 0; });
}

LambdaElement LambdaElement::operator+(const LambdaElement& rhs) const {
  if (n() != rhs.n()) throw InvalidInput("Lambda elements of different rank");
  IntVec r(coords_.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = checked_add(coords_[i], rhs.coords_[i]);
  return canonicalize(r);
}

LambdaElement LambdaElement::operator-(const LambdaElement& rhs) const { return *this + (-rhs); }

LambdaElement LambdaElement::operator-() const {
  IntVec r(coords_.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = -coords_[i];
  return canonicalize(r);
}

LambdaElement LambdaElement::scaled(Int k) const {
  IntVec r(coords_.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = checked_mul(coords_[i], k);
  return canonicalize(r);
}

// ---- Permutation ----------------------------------------------------------

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int x : images_) {
    if (x < 0 || x >= n() || seen[x]) throw InvalidInput("not a permutation");
    seen[x] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> im(n);
  std::iota(im.begin(), im.end(), 0);
  return Permutation(std::move(im));
}

Permutation Permutation::from_one_based(std::span<const int> images) {
  std::vector<int> im(images.begin(), images.end());
  for (int& x : im) --x;
  return Permutation(std::move(im));
}

Permutation Permutation::cycle(int n, std::span<const int> points) {
  std::vector<int> im(n);
  std::iota(im.begin(), im.end(), 0);
  for (std::size_t i = 0; i < points.size(); ++i) im.at(points[i]) = points[(i + 1) % points.size()];
  return Permutation(std::move(im));
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (n() != rhs.n()) throw InvalidInput("permutations of different degree");
  std::vector<int> im(images_.size());
  for (int i = 0; i < n(); ++i) im[i] = images_[rhs.images_[i]];
  return Permutation(std::move(im));
}

Permutation Permutation::inverse() const {
  std::vector<int> im(images_.size());
  for (int i = 0; i < n(); ++i) im[images_[i]] = i;
  return Permutation(std::move(im));
}

bool Permutation::is_identity() const {
  for (int i = 0; i < n(); ++i)
    if (images_[i] != i) return false;
  return true;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(images_.size(), false);
  for (int i = 0; i < n(); ++i) {
    if (seen[i]) continue;
    std::vector<int> cyc;
    for (int j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      cyc.push_back(j);
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

std::vector<int> Permutation::cycle_type() const {
  std::vector<int> t;
  for (const auto& c : cycles()) t.push_back(static_cast<int>(c.size()));
  std::sort(t.rbegin(), t.rend());
  return t;
}

int Permutation::order() const {
  Int o = 1;
  for (const auto& c : cycles()) o = lcm(o, static_cast<Int>(c.size()));
  return static_cast<int>(o);
}

IntVec Permutation::act(std::span<const Int> v) const {
  if (static_cast<int>(v.size()) != n()) throw InvalidInput("permutation/vector size mismatch");
  IntVec out(v.size());
  for (int i = 0; i < n(); ++i) out[images_[i]] = v[i];
  return out;
}

LambdaElement Permutation::act(const LambdaElement& v) const {
  return LambdaElement::canonicalize(act(std::span<const Int>(v.coords())));
}

IntMatrix Permutation::lambda_matrix() const {
  const int m = n() - 1;
  IntMatrix a(m, m);
  for (int j = 0; j < m; ++j) {
    int img = images_[j];
    if (img == m) {
      for (int i = 0; i < m; ++i) a(i, j) = -1;
    } else {
      a(img, j) = 1;
    }
  }
  return a;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> im(n);
  std::iota(im.begin(), im.end(), 0);
  std::vector<Permutation> out;
  do {
    out.emplace_back(im);
  } while (std::next_permutation(im.begin(), im.end()));
  return out;
}

std::vector<Permutation> generated_group(int n, const std::vector<Permutation>& gens) {
  std::set<Permutation> group{Permutation::identity(n)};
  std::vector<Permutation> frontier{Permutation::identity(n)};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& x : frontier)
      for (const auto& g : gens) {
        if (g.n() != n) throw InvalidInput("generator permutation has wrong degree");
        Permutation y = g * x;
        if (group.insert(y).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  return {group.begin(), group.end()};
}

// ---- AffineElement --------------------------------------------------------

AffineElement AffineElement::identity(int n) { return {LambdaElement::zero(n), Permutation::identity(n)}; }

AffineElement AffineElement::translation(const LambdaElement& v) { return {v, Permutation::identity(v.n())}; }

AffineElement AffineElement::operator*(const AffineElement& rhs) const { return {v + p.act(rhs.v), p * rhs.p}; }

AffineElement AffineElement::inverse() const {
  Permutation pinv = p.inverse();
  return {-pinv.act(v), pinv};
}

AffineElement AffineElement::power(int k) const {
  AffineElement base = k < 0 ? inverse() : *this;
  AffineElement acc = identity(n());
  for (int i = 0; i < std::abs(k); ++i) acc = acc * base;
  return acc;
}

AffineElement AffineElement::conjugated_by(const AffineElement& h) const { return h * (*this) * h.inverse(); }

// ---- Lengths --------------------------------------------------------------

Int scale_factor(int n, LengthScale scale) {
  if (scale == LengthScale::geodesic) return 1;
  Int f = 1;
  for (int i = 2; i <= n; ++i) f = checked_mul(f, i);
  return f;
}

const char* to_string(LengthScale scale) { return scale == LengthScale::geodesic ? "geodesic" : "factorial"; }

bool LengthVector::is_integral() const {
  return std::all_of(values.begin(), values.end(), [](const mpq_class& q) { return q.get_den() == 1; });
}

std::optional<ExpVec> LengthVector::exponents() const {
  if (!is_integral()) return std::nullopt;
  ExpVec e;
  e.reserve(values.size());
  for (const auto& q : values) {
    if (!q.get_num().fits_sint_p()) throw ResourceLimit("length exponent exceeds int range");
    e.push_back(static_cast<int>(q.get_num().get_si()));
  }
  return e;
}

std::vector<mpq_class> fixed_projection(const AffineElement& g) {
  const auto& v = g.v.coords();
  std::vector<mpq_class> f(v.size());
  for (const auto& cyc : g.p.cycles()) {
    mpz_class s = 0;
    for (int i : cyc) s += static_cast<long>(v[i]);
    mpq_class avg(s, static_cast<unsigned long>(cyc.size()));
    avg.canonicalize();
    for (int i : cyc) f[i] = avg;
  }
  return f;
}

LengthVector length_vector(const AffineElement& g, LengthScale scale) {
  std::vector<mpq_class> f = fixed_projection(g);
  std::stable_sort(f.begin(), f.end(), [](const mpq_class& a, const mpq_class& b) { return a > b; });
  LengthVector out;
  out.scale = scale;
  const mpq_class factor(static_cast<long>(scale_factor(g.n(), scale)));
  for (std::size_t j = 0; j + 1 < f.size(); ++j) out.values.push_back((f[j] - f[j + 1]) * factor);
  return out;
}

// ---- Faces of the building ------------------------------------------------

bool is_face(std::span<const LambdaElement> vertices) {
  if (vertices.empty()) throw InvalidInput("is_face needs at least one vertex");
  const int n = vertices.front().n();
  if (static_cast<int>(vertices.size()) > n) throw InvalidInput("a face has at most n vertices");
  std::set<LambdaElement> distinct;
  for (const auto& v : vertices) {
    if (v.n() != n) throw InvalidInput("vertices of different rank");
    if (!distinct.insert(v).second) throw InvalidInput("duplicate vertex " + to_string(v.coords()));
  }
  // Relative to the first vertex every other one must be a 0/1 vector
  // (after the diagonal shift), and those subsets must form a chain.
  std::vector<IntVec> rel;
  for (std::size_t j = 1; j < vertices.size(); ++j) {
    IntVec d(n);
    for (int i = 0; i < n; ++i) d[i] = vertices[j].coords()[i] - vertices[0].coords()[i];
    auto [lo, hi] = std::minmax_element(d.begin(), d.end());
    if (*hi - *lo != 1) return false;
    Int shift = *lo;
    for (auto& x : d) x -= shift;
    rel.push_back(std::move(d));
  }
  auto weight = [](const IntVec& v) { return std::accumulate(v.begin(), v.end(), Int{0}); };
  std::sort(rel.begin(), rel.end(), [&](const IntVec& a, const IntVec& b) { return weight(a) < weight(b); });
  for (std::size_t j = 0; j + 1 < rel.size(); ++j)
    for (int i = 0; i < n; ++i)
      if (rel[j][i] > rel[j + 1][i]) return false;
  return true;
}

// ---- Dominant cone faces --------------------------------------------------

FaceDescriptor FaceDescriptor::from_subset(int n, std::vector<int> S) {
  if (n < 2) throw InvalidInput("faces need n >= 2");
  std::sort(S.begin(), S.end());
  S.erase(std::unique(S.begin(), S.end()), S.end());
  for (int j : S)
    if (j < 1 || j > n - 1) throw InvalidInput("face index out of range 1..n-1");
  FaceDescriptor f{n, S, {}};
  int size = 1;
  for (int j = 1; j <= n - 1; ++j) {
    if (std::binary_search(S.begin(), S.end(), j)) {
      ++size;
    } else {
      f.partition.push_back(size);
      size = 1;
    }
  }
  f.partition.push_back(size);
  return f;
}

std::vector<FaceDescriptor> FaceDescriptor::all_faces(int n) {
  std::vector<FaceDescriptor> out;
  for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
    std::vector<int> S;
    for (int j = 1; j <= n - 1; ++j)
      if (mask & (1u << (j - 1))) S.push_back(j);
    out.push_back(from_subset(n, S));
  }
  return out;
}

std::vector<int> FaceDescriptor::block_of() const {
  std::vector<int> b;
  for (int k = 0; k < blocks(); ++k)
    for (int i = 0; i < partition[k]; ++i) b.push_back(k);
  return b;
}

IntVec FaceDescriptor::point(std::span<const Int> t) const {
  if (static_cast<int>(t.size()) != rank()) throw InvalidInput("face point needs rank() block values");
  IntVec x;
  for (int k = 0; k < blocks(); ++k)
    for (int i = 0; i < partition[k]; ++i) x.push_back(k < rank() ? t[k] : 0);
  return x;
}

std::optional<IntVec> FaceDescriptor::block_values(std::span<const Int> x) const {
  if (static_cast<int>(x.size()) != n || x.back() != 0) return std::nullopt;
  const auto b = block_of();
  IntVec t(rank(), 0);
  for (int i = 0; i < n; ++i) {
    if (b[i] == rank()) {
      if (x[i] != 0) return std::nullopt;
    } else if (i > 0 && b[i - 1] == b[i]) {
      if (x[i] != x[i - 1]) return std::nullopt;
    } else {
      t[b[i]] = x[i];
    }
  }
  return t;
}

Int FaceDescriptor::stabilizer_order() const {
  Int s = 1;
  for (int k : partition)
    for (int i = 2; i <= k; ++i) s = checked_mul(s, i);
  return s;
}

}  // namespace f1zeta
