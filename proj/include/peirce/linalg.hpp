#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "peirce/field.hpp"
#include "peirce/matrix.hpp"

namespace peirce {

struct RowEchelon {
  Matrix reduced;                    // same shape as the input, zero rows last
  std::vector<std::size_t> pivots;   // pivot column of each nonzero row
  std::size_t rank = 0;
};

/// Unique reduced row-echelon form.
RowEchelon rref(const PrimeField& f, Matrix m);
std::size_t rank(const PrimeField& f, const Matrix& m);

/// Any particular solution of a x = b, or nullopt when the system is inconsistent.
std::optional<Vector> solve(const PrimeField& f, const Matrix& a, std::span<const Scalar> b);

/// Inverse of a square matrix, nullopt when singular.
std::optional<Matrix> inverse(const PrimeField& f, const Matrix& a);

/// A coordinate subspace of GF(p)^n, stored canonically by its RREF basis, so
/// two values compare equal exactly when they describe the same subspace.
class Subspace {
 public:
  Subspace() = default;

  static Subspace zero(std::size_t ambient);
  static Subspace full(std::size_t ambient);
  static Subspace span(const PrimeField& f, std::size_t ambient, const std::vector<Vector>& vectors);
  static Subspace row_space(const PrimeField& f, const Matrix& m);

  std::size_t ambient_dim() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return basis_.rows(); }
  bool is_zero() const noexcept { return dim() == 0; }
  bool is_full() const noexcept { return dim() == ambient_; }

  const Matrix& basis() const noexcept { return basis_; }
  std::span<const Scalar> basis_row(std::size_t i) const { return basis_.row(i); }
  Vector basis_vector(std::size_t i) const { return basis_.row_vector(i); }
  std::vector<Vector> basis_vectors() const;
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  bool contains(const PrimeField& f, std::span<const Scalar> v) const;
  /// Coefficients of v in the RREF basis (its entries at the pivot columns), or
  /// nullopt when v lies outside the subspace.
  std::optional<Vector> coordinates(const PrimeField& f, std::span<const Scalar> v) const;
  /// Sum of coeffs[i] * basis_row(i).
  Vector combine(const PrimeField& f, std::span<const Scalar> coeffs) const;
  bool is_subspace_of(const PrimeField& f, const Subspace& other) const;

  bool operator==(const Subspace&) const = default;

 private:
  Subspace(std::size_t ambient, Matrix basis, std::vector<std::size_t> pivots)
      : ambient_(ambient), basis_(std::move(basis)), pivots_(std::move(pivots)) {}

  std::size_t ambient_ = 0;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

/// Null space of a.
Subspace kernel(const PrimeField& f, const Matrix& a);

Subspace subspace_sum(const PrimeField& f, const Subspace& u, const Subspace& v);
/// Zassenhaus: one RREF of [[U, U], [V, 0]].
Subspace subspace_intersect(const PrimeField& f, const Subspace& u, const Subspace& v);
/// Pivot-greedy complement of u inside w: the basis vectors of w at positions
/// that are not pivots of u expressed in w-coordinates. Throws Errc::not_contained.
Subspace complement(const PrimeField& f, const Subspace& u, const Subspace& w);
/// Complement inside the whole ambient space.
Subspace complement(const PrimeField& f, const Subspace& u);
bool is_direct_sum(const PrimeField& f, const std::vector<Subspace>& parts);

/// { m u : u in U }
Subspace image(const PrimeField& f, const Matrix& m, const Subspace& u);
/// { x : m x in U }
Subspace preimage(const PrimeField& f, const Matrix& m, const Subspace& u);

/// Incremental semi-echelon basis used by closure loops: insert() reports
/// whether a vector enlarged the span.
class SpanBuilder {
 public:
  SpanBuilder(const PrimeField& f, std::size_t ambient) : field_(f), ambient_(ambient) {}

  bool insert(std::span<const Scalar> v);
  bool contains(std::span<const Scalar> v) const;
  /// v minus its projection onto the current span along the pivot columns.
  Vector reduce(std::span<const Scalar> v) const;
  std::size_t dim() const noexcept { return rows_.size(); }
  /// The vectors as originally inserted (only those that were new).
  const std::vector<Vector>& generators() const noexcept { return inserted_; }
  Subspace finish() const;

 private:
  PrimeField field_;
  std::size_t ambient_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<Vector> inserted_;
};

}  // namespace peirce
