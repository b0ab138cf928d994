#pragma once

// The translation lattice Lambda = Z^n / diagonal, the affine group
// G = Lambda x| Per(n), conjugation-invariant length functions, faces of
// the dominant cone and the lattice-point cone decompositions used to
// sum geometric series over them.

#include <compare>
#include <optional>
#include <span>
#include <vector>

#include <gmpxx.h>

#include "f1zeta/intmat.hpp"
#include "f1zeta/multivariate.hpp"

namespace f1zeta {

// Element of Lambda in canonical form: min(coords) == 0.
class LambdaElement {
 public:
  LambdaElement() = default;

  // Any integer representative; throws InvalidInput when raw.size() < 2.
  static LambdaElement canonicalize(std::span<const Int> raw);
  // From coordinates in the basis e_1..e_{n-1} (e_n = -(e_1+...+e_{n-1})).
  static LambdaElement from_lambda_coords(int n, std::span<const Int> c);
  static LambdaElement zero(int n);
  // e_i, 0-based.
  static LambdaElement unit(int n, int i);

  int n() const { return static_cast<int>(coords_.size()); }
  const IntVec& coords() const { return coords_; }
  // Sum of coordinates mod n.
  int type() const;
  // Coordinates in e_1..e_{n-1}: c_i = x_i - x_n.
  IntVec lambda_coords() const;
  bool is_zero() const;

  LambdaElement operator+(const LambdaElement& rhs) const;
  LambdaElement operator-(const LambdaElement& rhs) const;
  LambdaElement operator-() const;
  LambdaElement scaled(Int k) const;

  auto operator<=>(const LambdaElement&) const = default;

 private:
  explicit LambdaElement(IntVec canonical) : coords_(std::move(canonical)) {}
  IntVec coords_;
};

// Bijection of {0..n-1}; acts on vectors by (p.v)[p(i)] = v[i].
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);  // 0-based, validated
  static Permutation identity(int n);
  static Permutation from_one_based(std::span<const int> images);
  // Transposition or cycle given 0-based, e.g. {0,1,2} = (1 2 3).
  static Permutation cycle(int n, std::span<const int> points);

  int n() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[i]; }
  const std::vector<int>& images() const { return images_; }

  Permutation operator*(const Permutation& rhs) const;  // (p*q)(i) = p(q(i))
  Permutation inverse() const;
  bool is_identity() const;
  std::vector<std::vector<int>> cycles() const;  // each cycle starts at its smallest point
  std::vector<int> cycle_type() const;           // descending
  int order() const;

  IntVec act(std::span<const Int> v) const;
  LambdaElement act(const LambdaElement& v) const;
  // Action on Lambda-coordinates as an (n-1)x(n-1) integer matrix.
  IntMatrix lambda_matrix() const;

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> images_;
};

// All n! permutations in lexicographic order of images.
std::vector<Permutation> all_permutations(int n);
// Closure of the given generators under composition.
std::vector<Permutation> generated_group(int n, const std::vector<Permutation>& gens);

struct AffineElement {
  LambdaElement v;
  Permutation p;

  static AffineElement identity(int n);
  static AffineElement translation(const LambdaElement& v);

  int n() const { return v.n(); }
  // (v,p)(w,q) = (v + p(w), pq)
  AffineElement operator*(const AffineElement& rhs) const;
  AffineElement inverse() const;
  AffineElement power(int k) const;
  AffineElement conjugated_by(const AffineElement& h) const;  // h g h^-1

  auto operator<=>(const AffineElement&) const = default;
};

enum class LengthScale { geodesic, factorial };

Int scale_factor(int n, LengthScale scale);
const char* to_string(LengthScale scale);

struct LengthVector {
  std::vector<mpq_class> values;  // l_1 .. l_{n-1}
  LengthScale scale = LengthScale::geodesic;

  bool is_integral() const;
  // Integer exponents, or nullopt when some entry is fractional.
  std::optional<ExpVec> exponents() const;
  bool operator==(const LengthVector& rhs) const { return values == rhs.values && scale == rhs.scale; }
};

// Projection of the translation part onto the p-fixed space: every
// coordinate replaced by its cycle average. Rational, length n.
std::vector<mpq_class> fixed_projection(const AffineElement& g);

// Gaps of the descending-sorted fixed projection, times the scale factor.
LengthVector length_vector(const AffineElement& g, LengthScale scale = LengthScale::geodesic);

// Face predicate: some ordering of the classes has representatives with
// x0 <= x1 <= ... <= xk <= x0 + 1 componentwise. Throws InvalidInput on
// duplicates, mixed ranks, an empty list or more than n vertices.
bool is_face(std::span<const LambdaElement> vertices);

// Face of the closed dominant cone x_1 >= ... >= x_n: positions j in S
// (1-based, 1..n-1) have x_j == x_{j+1}.
struct FaceDescriptor {
  int n = 0;
  std::vector<int> S;
  std::vector<int> partition;  // block sizes n_1..n_r

  static FaceDescriptor from_subset(int n, std::vector<int> S);
  static std::vector<FaceDescriptor> all_faces(int n);

  int blocks() const { return static_cast<int>(partition.size()); }
  // Dimension of the face cone after fixing x_n = 0.
  int rank() const { return blocks() - 1; }
  // Block index of each position 0..n-1.
  std::vector<int> block_of() const;
  // Raw coordinates (length n, last coordinate 0) of a face point given its
  // block values t_0..t_{r-2} (last block is 0).
  IntVec point(std::span<const Int> t) const;
  // Inverse of point(); nullopt if x is not constant on blocks or x_n != 0.
  std::optional<IntVec> block_values(std::span<const Int> x) const;
  // Product of n_i! over the blocks.
  Int stabilizer_order() const;
};

struct ConeDecomposition {
  FaceDescriptor face;
  std::vector<IntVec> base_points;  // raw coordinates, last entry 0
  std::vector<IntVec> generators;   // a_1..a_r, raw coordinates
};

// Raw-coordinate generators of L cap span(face), where L is given by
// generators in Lambda-coordinates (columns of a basis matrix).
std::vector<IntVec> face_lattice(const FaceDescriptor& face, const std::vector<IntVec>& lattice_generators);
// Lambda cap span(face).
std::vector<IntVec> face_lattice(const FaceDescriptor& face);

// Decomposes (open face cone) cap Sigma into base points + free monoid on
// the minimal edge vectors. Sigma is given by raw-coordinate generators
// inside the face span; throws InvalidInput if they do not have full rank.
ConeDecomposition cone_decompose(const FaceDescriptor& face, const std::vector<IntVec>& sigma_generators);

// Integer linear map raw coordinates -> exponent vector.
struct LinearForm {
  IntMatrix coeffs;  // nvars x n
  ExpVec apply(std::span<const Int> x) const;
  int nvars() const { return static_cast<int>(coeffs.rows()); }
};

// l_j(x) = factor * (x_j - x_{j+1}), exact on the closed dominant cone.
LinearForm gap_form(int n, Int factor = 1);

// Sum over the decomposed cone of u^{weight(x)} as an exact rational
// function. Throws Divergence when some generator has zero weight and
// InvalidInput on negative exponents.
MultiRational rational_cone_sum(const ConeDecomposition& dec, const LinearForm& weight);

}  // namespace f1zeta
