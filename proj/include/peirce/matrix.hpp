#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "peirce/field.hpp"

namespace peirce {

/// Dense row-major matrix of GF(p) entries. Field arithmetic is supplied by the
/// free functions below; the matrix itself only stores residues.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  Matrix(std::size_t rows, std::size_t cols, Vector entries);

  static Matrix identity(std::size_t n);
  /// E_ij in M_n.
  static Matrix unit(std::size_t n, std::size_t i, std::size_t j);
  static Matrix from_rows(std::size_t cols, const std::vector<Vector>& rows);
  static Matrix from_columns(std::size_t rows, const std::vector<Vector>& columns);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return data_.empty(); }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  Scalar operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<Scalar> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const Scalar> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  Vector row_vector(std::size_t i) const;
  Vector column(std::size_t j) const;

  const Vector& entries() const noexcept { return data_; }

  Matrix transpose() const;
  /// Keeps rows [first, first + count).
  Matrix row_block(std::size_t first, std::size_t count) const;
  void append_row(std::span<const Scalar> r);

  bool is_zero() const noexcept;
  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Vector data_;
};

Matrix multiply(const PrimeField& f, const Matrix& a, const Matrix& b);
Vector apply(const PrimeField& f, const Matrix& m, std::span<const Scalar> x);
Matrix add(const PrimeField& f, const Matrix& a, const Matrix& b);
Matrix subtract(const PrimeField& f, const Matrix& a, const Matrix& b);
Matrix scale(const PrimeField& f, Scalar c, const Matrix& a);
Scalar trace(const PrimeField& f, const Matrix& a);
/// tr(a * b) without forming the product.
Scalar trace_of_product(const PrimeField& f, const Matrix& a, const Matrix& b);
/// Vertical concatenation; column counts must agree.
Matrix stack(const std::vector<Matrix>& blocks, std::size_t cols);

/// n x n matrix <-> length n^2 vector (row-major).
Vector flatten(const Matrix& m);
Matrix unflatten(std::size_t n, std::span<const Scalar> v);

std::string to_string(const Matrix& m);

}  // namespace peirce
