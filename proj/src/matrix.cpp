#include "peirce/matrix.hpp"

#include <sstream>

#include "peirce/error.hpp"

namespace peirce {

Matrix::Matrix(std::size_t rows, std::size_t cols, Vector entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows * cols) throw Error(Errc::dimension_mismatch, "matrix entries do not match shape");
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::unit(std::size_t n, std::size_t i, std::size_t j) {
  Matrix m(n, n);
  m(i, j) = 1;
  return m;
}

Matrix Matrix::from_rows(std::size_t cols, const std::vector<Vector>& rows) {
  Matrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw Error(Errc::dimension_mismatch, "from_rows: ragged rows");
    std::copy(rows[i].begin(), rows[i].end(), m.row(i).begin());
  }
  return m;
}

Matrix Matrix::from_columns(std::size_t rows, const std::vector<Vector>& columns) {
  Matrix m(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows) throw Error(Errc::dimension_mismatch, "from_columns: ragged columns");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

Vector Matrix::row_vector(std::size_t i) const {
  auto r = row(i);
  return Vector(r.begin(), r.end());
}

Vector Matrix::column(std::size_t j) const {
  Vector c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::row_block(std::size_t first, std::size_t count) const {
  Matrix m(count, cols_);
  std::copy(data_.begin() + static_cast<std::ptrdiff_t>(first * cols_),
            data_.begin() + static_cast<std::ptrdiff_t>((first + count) * cols_), m.data_.begin());
  return m;
}

void Matrix::append_row(std::span<const Scalar> r) {
  if (rows_ == 0 && cols_ == 0) cols_ = r.size();
  if (r.size() != cols_) throw Error(Errc::dimension_mismatch, "append_row: wrong length");
  data_.insert(data_.end(), r.begin(), r.end());
  ++rows_;
}

bool Matrix::is_zero() const noexcept { return peirce::is_zero(data_); }

Matrix multiply(const PrimeField& f, const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw Error(Errc::dimension_mismatch, "matrix multiply: shape mismatch");
  Matrix c(a.rows(), b.cols());
  const std::uint64_t p = f.p();
  std::vector<std::uint64_t> acc(b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::fill(acc.begin(), acc.end(), 0);
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const std::uint64_t aik = a(i, k);
      if (aik == 0) continue;
      auto brow = b.row(k);
      for (std::size_t j = 0; j < b.cols(); ++j) {
        acc[j] += aik * brow[j];
        if (acc[j] >= (1ull << 62)) acc[j] %= p;
      }
    }
    for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) = static_cast<Scalar>(acc[j] % p);
  }
  return c;
}

Vector apply(const PrimeField& f, const Matrix& m, std::span<const Scalar> x) {
  if (m.cols() != x.size()) throw Error(Errc::dimension_mismatch, "apply: shape mismatch");
  Vector y(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) y[i] = dot(f, m.row(i), x);
  return y;
}

Matrix add(const PrimeField& f, const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error(Errc::dimension_mismatch, "matrix add");
  return Matrix(a.rows(), a.cols(), add(f, a.entries(), b.entries()));
}

Matrix subtract(const PrimeField& f, const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error(Errc::dimension_mismatch, "matrix subtract");
  return Matrix(a.rows(), a.cols(), subtract(f, a.entries(), b.entries()));
}

Matrix scale(const PrimeField& f, Scalar c, const Matrix& a) {
  return Matrix(a.rows(), a.cols(), scale(f, c, a.entries()));
}

Scalar trace(const PrimeField& f, const Matrix& a) {
  Scalar t = 0;
  for (std::size_t i = 0; i < std::min(a.rows(), a.cols()); ++i) t = f.add(t, a(i, i));
  return t;
}

Scalar trace_of_product(const PrimeField& f, const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows() || a.rows() != b.cols()) throw Error(Errc::dimension_mismatch, "trace_of_product");
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      acc += static_cast<std::uint64_t>(a(i, k)) * b(k, i);
      if (acc >= (1ull << 62)) acc %= f.p();
    }
  return static_cast<Scalar>(acc % f.p());
}

Matrix stack(const std::vector<Matrix>& blocks, std::size_t cols) {
  std::size_t rows = 0;
  for (const auto& b : blocks) {
    if (b.rows() > 0 && b.cols() != cols) throw Error(Errc::dimension_mismatch, "stack: column mismatch");
    rows += b.rows();
  }
  Vector data;
  data.reserve(rows * cols);
  for (const auto& b : blocks) data.insert(data.end(), b.entries().begin(), b.entries().end());
  return Matrix(rows, cols, std::move(data));
}

Vector flatten(const Matrix& m) { return m.entries(); }

Matrix unflatten(std::size_t n, std::span<const Scalar> v) {
  if (v.size() != n * n) throw Error(Errc::dimension_mismatch, "unflatten: length is not n^2");
  return Matrix(n, n, Vector(v.begin(), v.end()));
}

std::string to_string(const Matrix& m) {
  std::ostringstream out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out << '[';
    for (std::size_t j = 0; j < m.cols(); ++j) out << (j ? " " : "") << m(i, j);
    out << "]\n";
  }
  return out.str();
}

}  // namespace peirce
