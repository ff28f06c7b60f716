#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "peirce/field.hpp"
#include "peirce/linalg.hpp"
#include "peirce/matrix.hpp"

namespace peirce {

/// Finite-dimensional associative algebra over GF(p) given by structure
/// constants: b_i * b_j = sum_k c(i, j, k) b_k. Unity is optional and detected
/// by a linear solve at construction.
class SCAlgebra {
 public:
  /// `table[(i * d + j) * d + k]` holds c(i, j, k). Throws
  /// Errc::associativity_violation when some basis triple fails.
  SCAlgebra(const PrimeField& f, std::size_t dim, Vector table, std::string origin = {});

  const PrimeField& field() const noexcept { return field_; }
  std::uint32_t p() const noexcept { return field_.p(); }
  std::size_t dim() const noexcept { return dim_; }
  const std::optional<Vector>& unity() const noexcept { return unity_; }
  bool is_unital() const noexcept { return unity_.has_value(); }
  const std::string& origin() const noexcept { return origin_; }
  const Vector& table() const noexcept { return table_; }

  Scalar constant(std::size_t i, std::size_t j, std::size_t k) const {
    return table_[(i * dim_ + j) * dim_ + k];
  }
  std::span<const Scalar> basis_product(std::size_t i, std::size_t j) const {
    return {table_.data() + (i * dim_ + j) * dim_, dim_};
  }

  Vector multiply(std::span<const Scalar> x, std::span<const Scalar> y) const;
  Vector multiply3(std::span<const Scalar> x, std::span<const Scalar> y, std::span<const Scalar> z) const {
    return multiply(multiply(x, y), z);
  }
  Vector power(std::span<const Scalar> x, std::uint64_t k) const;
  Vector zero() const { return Vector(dim_, 0); }
  Vector basis_element(std::size_t i) const { return unit_vector(dim_, i); }
  /// Unity; throws Errc::not_unital.
  const Vector& one() const;

  /// Column j holds the coordinates of x * b_j (resp. b_j * x).
  Matrix left_mult(std::span<const Scalar> x) const;
  Matrix right_mult(std::span<const Scalar> x) const;

  bool is_idempotent(std::span<const Scalar> x) const;
  /// Two-sided inverse when A is unital and x is a unit.
  std::optional<Vector> inverse(std::span<const Scalar> x) const;

  bool operator==(const SCAlgebra& o) const { return field_ == o.field_ && dim_ == o.dim_ && table_ == o.table_; }

 private:
  void index_nonzeros();
  void check_associative() const;
  void detect_unity();

  PrimeField field_;
  std::size_t dim_;
  Vector table_;
  std::string origin_;
  std::optional<Vector> unity_;
  // Nonzero (k, c) pairs of each basis product, for sparse products.
  std::vector<std::vector<std::pair<std::uint32_t, Scalar>>> nonzero_;
};

using AlgebraPtr = std::shared_ptr<const SCAlgebra>;

/// Coordinate vector bound to its algebra; products of elements from
/// different algebras raise Errc::algebra_mismatch.
class Element {
 public:
  Element(AlgebraPtr algebra, Vector coords);

  const AlgebraPtr& algebra() const noexcept { return algebra_; }
  const Vector& coords() const noexcept { return coords_; }
  bool is_zero() const noexcept { return peirce::is_zero(coords_); }

  Element operator*(const Element& o) const;
  Element operator+(const Element& o) const;
  Element operator-(const Element& o) const;
  Element power(std::uint64_t k) const;
  bool operator==(const Element& o) const;

 private:
  void check_same(const Element& o) const;

  AlgebraPtr algebra_;
  Vector coords_;
};

/// Subalgebra of M_n(GF(p)) spanned by flattened matrices (RREF basis in
/// GF(p)^{n^2}), together with its structure constants in that basis.
class MatrixAlgebra {
 public:
  /// Throws Errc::closure_violation naming the first basis pair whose product
  /// leaves the span.
  MatrixAlgebra(const PrimeField& f, std::size_t n, const std::vector<Matrix>& basis, std::string origin = {});

  const PrimeField& field() const noexcept { return sc_->field(); }
  std::size_t n() const noexcept { return n_; }
  std::size_t dim() const noexcept { return span_.dim(); }
  const Subspace& span() const noexcept { return span_; }
  const AlgebraPtr& sc() const noexcept { return sc_; }
  const SCAlgebra& algebra() const noexcept { return *sc_; }

  Matrix basis_matrix(std::size_t i) const { return unflatten(n_, span_.basis_row(i)); }
  Matrix to_matrix(std::span<const Scalar> coords) const;
  std::optional<Vector> coords_of(const Matrix& m) const;
  Element element(const Matrix& m) const;

 private:
  std::size_t n_;
  Subspace span_;
  AlgebraPtr sc_;
};

/// Smallest multiplicatively closed subspace of M_n containing the generators.
MatrixAlgebra close_under_products(const PrimeField& f, std::size_t n, const std::vector<Matrix>& generators);

/// Structure constants of a matrix algebra (already cached on the object).
AlgebraPtr to_structure_constants(const MatrixAlgebra& a);

/// Left-regular representation (adjoining a unity first when A lacks one)
/// and the embedding of A into it.
struct RegularRepresentation {
  MatrixAlgebra image;
  bool adjoined_unity = false;
  Matrix embedding;  // image-coordinates x A-coordinates
};
RegularRepresentation regular_representation(const SCAlgebra& a);

/// Linear map between coordinate spaces; `matrix` is dim(target) x dim(source).
struct AlgebraMap {
  AlgebraPtr source;
  AlgebraPtr target;
  Matrix matrix;
  bool verified_multiplicative = false;

  Vector operator()(std::span<const Scalar> x) const { return apply(source->field(), matrix, x); }
};

/// Checks phi(b_i b_j) = phi(b_i) phi(b_j) on all basis pairs and records it.
bool verify_multiplicative(AlgebraMap& map);

/// x *_s y = x s y on the same underlying space.
AlgebraPtr deform(const SCAlgebra& a, std::span<const Scalar> s);

enum class Side { left, right, both };

/// Ideal generated by `gens`, including the generators themselves.
Subspace generated_ideal(const SCAlgebra& a, const std::vector<Vector>& gens, Side side);
Subspace one_sided_ideal(const SCAlgebra& a, const std::vector<Vector>& gens, Side side);
Subspace two_sided_ideal(const SCAlgebra& a, const std::vector<Vector>& gens);
bool is_ideal(const SCAlgebra& a, const Subspace& u, Side side);
bool is_subalgebra(const SCAlgebra& a, const Subspace& u);

/// span{u v : u in U, v in V}
Subspace subspace_product(const SCAlgebra& a, const Subspace& u, const Subspace& v);
/// span{x u y : u in U} for fixed x, y.
Subspace sandwich(const SCAlgebra& a, std::span<const Scalar> x, const Subspace& u, std::span<const Scalar> y);

struct Nilpotency {
  bool nilpotent = false;
  std::size_t index = 0;  // least k with U^k = 0 when nilpotent
};
Nilpotency is_nilpotent(const SCAlgebra& a, const Subspace& u);

/// Algebra structure on a multiplicatively closed subspace, with its inclusion.
struct Subalgebra {
  AlgebraPtr algebra;
  Subspace span;     // inside the parent
  Matrix embedding;  // parent-coordinates x sub-coordinates (columns = span basis)

  Vector lift(const PrimeField& f, std::span<const Scalar> x) const { return apply(f, embedding, x); }
  std::optional<Vector> restrict(const PrimeField& f, std::span<const Scalar> x) const {
    return span.coordinates(f, x);
  }
};
/// Throws Errc::not_closed when U is not closed under products.
Subalgebra subalgebra(const SCAlgebra& a, const Subspace& u, std::string origin = {});

/// A / I for a two-sided ideal I, on the pivot-greedy complement of I.
struct Quotient {
  AlgebraPtr algebra;
  Subspace ideal;
  Subspace complement;
  Matrix projection;  // quotient-coordinates x parent-coordinates
  Matrix section;     // parent-coordinates x quotient-coordinates (complement basis)

  Vector project(const PrimeField& f, std::span<const Scalar> x) const { return apply(f, projection, x); }
  Vector lift(const PrimeField& f, std::span<const Scalar> x) const { return apply(f, section, x); }
};
Quotient quotient(const SCAlgebra& a, const Subspace& ideal, std::string origin = {});

/// a A a with its inclusion into A.
Subalgebra corner_subalgebra(const SCAlgebra& a, std::span<const Scalar> x);
Subspace corner_span(const SCAlgebra& a, std::span<const Scalar> x, std::span<const Scalar> y);

Subspace centre(const SCAlgebra& a);
/// Kernel of x -> x u for all u in U (right = true) or x -> u x.
Subspace annihilator(const SCAlgebra& a, const Subspace& u, bool right);

/// Direct product A_1 x ... x A_k on concatenated coordinates.
AlgebraPtr direct_product(const std::vector<AlgebraPtr>& parts, std::string origin = {});

}  // namespace peirce
