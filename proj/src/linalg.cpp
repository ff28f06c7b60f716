#include "peirce/linalg.hpp"

#include <algorithm>

#include "peirce/error.hpp"

namespace peirce {

RowEchelon rref(const PrimeField& f, Matrix m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  RowEchelon out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && m(pivot, c) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != r) std::swap_ranges(m.row(pivot).begin(), m.row(pivot).end(), m.row(r).begin());
    const Scalar inv = f.inv(m(r, c));
    auto prow = m.row(r);
    for (std::size_t j = c; j < cols; ++j) prow[j] = f.mul(prow[j], inv);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m(i, c) == 0) continue;
      const Scalar factor = f.neg(m(i, c));
      auto row = m.row(i);
      for (std::size_t j = c; j < cols; ++j)
        if (prow[j] != 0) row[j] = f.add(row[j], f.mul(factor, prow[j]));
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.rank = r;
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const PrimeField& f, const Matrix& m) { return rref(f, m).rank; }

std::optional<Vector> solve(const PrimeField& f, const Matrix& a, std::span<const Scalar> b) {
  if (b.size() != a.rows()) throw Error(Errc::dimension_mismatch, "solve: right-hand side length");
  const std::size_t n = a.cols();
  Matrix aug(a.rows(), n + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::copy(a.row(i).begin(), a.row(i).end(), aug.row(i).begin());
    aug(i, n) = b[i];
  }
  RowEchelon e = rref(f, std::move(aug));
  if (!e.pivots.empty() && e.pivots.back() == n) return std::nullopt;
  Vector x(n, 0);
  for (std::size_t i = 0; i < e.rank; ++i) x[e.pivots[i]] = e.reduced(i, n);
  return x;
}

std::optional<Matrix> inverse(const PrimeField& f, const Matrix& a) {
  if (a.rows() != a.cols()) throw Error(Errc::dimension_mismatch, "inverse: matrix not square");
  const std::size_t n = a.rows();
  if (n == 0) return Matrix(0, 0);
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    std::copy(a.row(i).begin(), a.row(i).end(), aug.row(i).begin());
    aug(i, n + i) = 1;
  }
  RowEchelon e = rref(f, std::move(aug));
  if (e.rank < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  return inv;
}

Subspace Subspace::zero(std::size_t ambient) { return Subspace(ambient, Matrix(0, ambient), {}); }

Subspace Subspace::full(std::size_t ambient) {
  std::vector<std::size_t> pivots(ambient);
  for (std::size_t i = 0; i < ambient; ++i) pivots[i] = i;
  return Subspace(ambient, Matrix::identity(ambient), std::move(pivots));
}

Subspace Subspace::span(const PrimeField& f, std::size_t ambient, const std::vector<Vector>& vectors) {
  Matrix m(vectors.size(), ambient);
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].size() != ambient) throw Error(Errc::dimension_mismatch, "span: vector length");
    std::copy(vectors[i].begin(), vectors[i].end(), m.row(i).begin());
  }
  return row_space(f, m);
}

Subspace Subspace::row_space(const PrimeField& f, const Matrix& m) {
  RowEchelon e = rref(f, m);
  return Subspace(m.cols(), e.reduced.row_block(0, e.rank), std::move(e.pivots));
}

std::vector<Vector> Subspace::basis_vectors() const {
  std::vector<Vector> out;
  out.reserve(dim());
  for (std::size_t i = 0; i < dim(); ++i) out.push_back(basis_.row_vector(i));
  return out;
}

std::optional<Vector> Subspace::coordinates(const PrimeField& f, std::span<const Scalar> v) const {
  if (v.size() != ambient_) throw Error(Errc::dimension_mismatch, "coordinates: vector length");
  Vector coeffs(dim());
  Vector residual(v.begin(), v.end());
  for (std::size_t i = 0; i < dim(); ++i) {
    coeffs[i] = residual[pivots_[i]];
    axpy(f, f.neg(coeffs[i]), basis_.row(i), residual);
  }
  if (!peirce::is_zero(residual)) return std::nullopt;
  return coeffs;
}

bool Subspace::contains(const PrimeField& f, std::span<const Scalar> v) const {
  return coordinates(f, v).has_value();
}

Vector Subspace::combine(const PrimeField& f, std::span<const Scalar> coeffs) const {
  if (coeffs.size() != dim()) throw Error(Errc::dimension_mismatch, "combine: coefficient count");
  Vector out(ambient_, 0);
  for (std::size_t i = 0; i < dim(); ++i) axpy(f, coeffs[i], basis_.row(i), out);
  return out;
}

bool Subspace::is_subspace_of(const PrimeField& f, const Subspace& other) const {
  if (ambient_ != other.ambient_) throw Error(Errc::dimension_mismatch, "subspace ambient mismatch");
  if (dim() > other.dim()) return false;
  for (std::size_t i = 0; i < dim(); ++i)
    if (!other.contains(f, basis_.row(i))) return false;
  return true;
}

Subspace kernel(const PrimeField& f, const Matrix& a) {
  const std::size_t n = a.cols();
  RowEchelon e = rref(f, a);
  std::vector<bool> is_pivot(n, false);
  for (std::size_t c : e.pivots) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vector v(n, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < e.rank; ++i) v[e.pivots[i]] = f.neg(e.reduced(i, free));
    basis.push_back(std::move(v));
  }
  return Subspace::span(f, n, basis);
}

Subspace subspace_sum(const PrimeField& f, const Subspace& u, const Subspace& v) {
  if (u.ambient_dim() != v.ambient_dim()) throw Error(Errc::dimension_mismatch, "subspace_sum");
  return Subspace::row_space(f, stack({u.basis(), v.basis()}, u.ambient_dim()));
}

Subspace subspace_intersect(const PrimeField& f, const Subspace& u, const Subspace& v) {
  const std::size_t n = u.ambient_dim();
  if (v.ambient_dim() != n) throw Error(Errc::dimension_mismatch, "subspace_intersect");
  if (u.is_zero() || v.is_zero()) return Subspace::zero(n);
  Matrix z(u.dim() + v.dim(), 2 * n);
  for (std::size_t i = 0; i < u.dim(); ++i)
    for (std::size_t j = 0; j < n; ++j) z(i, j) = z(i, n + j) = u.basis()(i, j);
  for (std::size_t i = 0; i < v.dim(); ++i)
    for (std::size_t j = 0; j < n; ++j) z(u.dim() + i, j) = v.basis()(i, j);
  RowEchelon e = rref(f, std::move(z));
  std::vector<Vector> out;
  for (std::size_t i = 0; i < e.rank; ++i) {
    if (e.pivots[i] < n) continue;
    auto row = e.reduced.row(i);
    out.emplace_back(row.begin() + static_cast<std::ptrdiff_t>(n), row.end());
  }
  return Subspace::span(f, n, out);
}

Subspace complement(const PrimeField& f, const Subspace& u, const Subspace& w) {
  if (!u.is_subspace_of(f, w)) throw Error(Errc::not_contained, "complement: U is not contained in W");
  // Work in W-coordinates, where W becomes the full space with pivot columns
  // given by the coordinates of U.
  std::vector<Vector> coords;
  for (std::size_t i = 0; i < u.dim(); ++i) coords.push_back(*w.coordinates(f, u.basis_row(i)));
  Subspace uc = Subspace::span(f, w.dim(), coords);
  std::vector<bool> used(w.dim(), false);
  for (std::size_t c : uc.pivots()) used[c] = true;
  std::vector<Vector> out;
  for (std::size_t i = 0; i < w.dim(); ++i)
    if (!used[i]) out.push_back(w.basis_vector(i));
  return Subspace::span(f, w.ambient_dim(), out);
}

Subspace complement(const PrimeField& f, const Subspace& u) {
  return complement(f, u, Subspace::full(u.ambient_dim()));
}

bool is_direct_sum(const PrimeField& f, const std::vector<Subspace>& parts) {
  if (parts.empty()) return true;
  std::size_t total = 0;
  std::vector<Matrix> blocks;
  for (const auto& s : parts) {
    total += s.dim();
    blocks.push_back(s.basis());
  }
  return rank(f, stack(blocks, parts.front().ambient_dim())) == total;
}

Subspace image(const PrimeField& f, const Matrix& m, const Subspace& u) {
  if (m.cols() != u.ambient_dim()) throw Error(Errc::dimension_mismatch, "image: shape");
  std::vector<Vector> out;
  for (std::size_t i = 0; i < u.dim(); ++i) out.push_back(apply(f, m, u.basis_row(i)));
  return Subspace::span(f, m.rows(), out);
}

Subspace preimage(const PrimeField& f, const Matrix& m, const Subspace& u) {
  if (m.rows() != u.ambient_dim()) throw Error(Errc::dimension_mismatch, "preimage: shape");
  // Rows of c span the annihilator of U, so m x lies in U iff c m x = 0.
  Subspace ann = kernel(f, u.basis());
  return kernel(f, multiply(f, ann.basis(), m));
}

bool SpanBuilder::insert(std::span<const Scalar> v) {
  Vector r = reduce(v);
  auto it = std::find_if(r.begin(), r.end(), [](Scalar x) { return x != 0; });
  if (it == r.end()) return false;
  const std::size_t pivot = static_cast<std::size_t>(it - r.begin());
  const Scalar inv = field_.inv(*it);
  for (auto& x : r) x = field_.mul(x, inv);
  rows_.push_back(std::move(r));
  pivots_.push_back(pivot);
  inserted_.emplace_back(v.begin(), v.end());
  return true;
}

Vector SpanBuilder::reduce(std::span<const Scalar> v) const {
  if (v.size() != ambient_) throw Error(Errc::dimension_mismatch, "SpanBuilder: vector length");
  Vector r(v.begin(), v.end());
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Scalar c = r[pivots_[i]];
    if (c != 0) axpy(field_, field_.neg(c), rows_[i], r);
  }
  return r;
}

bool SpanBuilder::contains(std::span<const Scalar> v) const { return peirce::is_zero(reduce(v)); }

Subspace SpanBuilder::finish() const { return Subspace::span(field_, ambient_, rows_); }

}  // namespace peirce
