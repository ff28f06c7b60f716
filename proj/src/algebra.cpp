#include "peirce/algebra.hpp"

#include <string>

#include "peirce/error.hpp"

namespace peirce {

namespace {

constexpr std::uint64_t kReduceAt = 1ull << 62;

Matrix stack_blocks(const std::vector<Matrix>& blocks, std::size_t cols) { return stack(blocks, cols); }

}  // namespace

SCAlgebra::SCAlgebra(const PrimeField& f, std::size_t dim, Vector table, std::string origin)
    : field_(f), dim_(dim), table_(std::move(table)), origin_(std::move(origin)) {
  if (table_.size() != dim_ * dim_ * dim_)
    throw Error(Errc::dimension_mismatch, "structure constant table must have d^3 entries");
  for (Scalar& c : table_)
    if (c >= field_.p()) c %= field_.p();
  index_nonzeros();
  check_associative();
  detect_unity();
}

void SCAlgebra::index_nonzeros() {
  nonzero_.assign(dim_ * dim_, {});
  for (std::size_t ij = 0; ij < dim_ * dim_; ++ij)
    for (std::size_t k = 0; k < dim_; ++k) {
      Scalar c = table_[ij * dim_ + k];
      if (c != 0) nonzero_[ij].emplace_back(static_cast<std::uint32_t>(k), c);
    }
}

void SCAlgebra::check_associative() const {
  const std::uint64_t p = field_.p();
  std::vector<std::uint64_t> lhs(dim_), rhs(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) {
      const auto& ij = nonzero_[i * dim_ + j];
      for (std::size_t k = 0; k < dim_; ++k) {
        std::fill(lhs.begin(), lhs.end(), 0);
        std::fill(rhs.begin(), rhs.end(), 0);
        // (b_i b_j) b_k
        for (auto [m, c] : ij)
          for (auto [l, c2] : nonzero_[m * dim_ + k]) lhs[l] = (lhs[l] + std::uint64_t(c) * c2) % p;
        // b_i (b_j b_k)
        for (auto [m, c] : nonzero_[j * dim_ + k])
          for (auto [l, c2] : nonzero_[i * dim_ + m]) rhs[l] = (rhs[l] + std::uint64_t(c) * c2) % p;
        if (lhs != rhs)
          throw Error(Errc::associativity_violation, "basis triple (" + std::to_string(i) + ", " +
                                                         std::to_string(j) + ", " + std::to_string(k) +
                                                         ") is not associative");
      }
    }
}

void SCAlgebra::detect_unity() {
  const std::size_t d = dim_;
  if (d == 0) {
    unity_ = Vector{};
    return;
  }
  // u b_j = b_j and b_j u = b_j for every j, linear in u.
  Matrix sys(2 * d * d, d);
  Vector rhs(2 * d * d, 0);
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t k = 0; k < d; ++k) {
      const std::size_t r1 = j * d + k;
      const std::size_t r2 = d * d + j * d + k;
      for (std::size_t i = 0; i < d; ++i) {
        sys(r1, i) = constant(i, j, k);
        sys(r2, i) = constant(j, i, k);
      }
      if (j == k) rhs[r1] = rhs[r2] = 1;
    }
  unity_ = solve(field_, sys, rhs);
}

const Vector& SCAlgebra::one() const {
  if (!unity_) throw Error(Errc::not_unital, "algebra has no unity" + (origin_.empty() ? "" : " (" + origin_ + ")"));
  return *unity_;
}

Vector SCAlgebra::multiply(std::span<const Scalar> x, std::span<const Scalar> y) const {
  if (x.size() != dim_ || y.size() != dim_) throw Error(Errc::dimension_mismatch, "element length does not match algebra");
  const std::uint64_t p = field_.p();
  std::vector<std::uint64_t> acc(dim_, 0);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (y[j] == 0) continue;
      const std::uint64_t xy = std::uint64_t(x[i]) * y[j] % p;
      for (auto [k, c] : nonzero_[i * dim_ + j]) {
        acc[k] += xy * c;
        if (acc[k] >= kReduceAt) acc[k] %= p;
      }
    }
  }
  Vector out(dim_);
  for (std::size_t k = 0; k < dim_; ++k) out[k] = static_cast<Scalar>(acc[k] % p);
  return out;
}

Vector SCAlgebra::power(std::span<const Scalar> x, std::uint64_t k) const {
  if (k == 0) return one();
  Vector result(x.begin(), x.end());
  Vector base(x.begin(), x.end());
  --k;
  while (k > 0) {
    if (k & 1) result = multiply(result, base);
    base = multiply(base, base);
    k >>= 1;
  }
  return result;
}

Matrix SCAlgebra::left_mult(std::span<const Scalar> x) const {
  Matrix m(dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j) {
    Vector col = multiply(x, basis_element(j));
    for (std::size_t k = 0; k < dim_; ++k) m(k, j) = col[k];
  }
  return m;
}

Matrix SCAlgebra::right_mult(std::span<const Scalar> x) const {
  Matrix m(dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j) {
    Vector col = multiply(basis_element(j), x);
    for (std::size_t k = 0; k < dim_; ++k) m(k, j) = col[k];
  }
  return m;
}

bool SCAlgebra::is_idempotent(std::span<const Scalar> x) const {
  Vector sq = multiply(x, x);
  return std::equal(sq.begin(), sq.end(), x.begin(), x.end());
}

std::optional<Vector> SCAlgebra::inverse(std::span<const Scalar> x) const {
  if (!unity_) return std::nullopt;
  auto y = solve(field_, left_mult(x), *unity_);
  if (!y) return std::nullopt;
  if (multiply(*y, x) != *unity_) return std::nullopt;
  return y;
}

Element::Element(AlgebraPtr algebra, Vector coords) : algebra_(std::move(algebra)), coords_(std::move(coords)) {
  if (!algebra_ || coords_.size() != algebra_->dim())
    throw Error(Errc::dimension_mismatch, "element coordinates do not match algebra dimension");
}

void Element::check_same(const Element& o) const {
  if (algebra_ != o.algebra_ && !(*algebra_ == *o.algebra_))
    throw Error(Errc::algebra_mismatch, "elements belong to different algebras");
}

Element Element::operator*(const Element& o) const {
  check_same(o);
  return Element(algebra_, algebra_->multiply(coords_, o.coords_));
}

Element Element::operator+(const Element& o) const {
  check_same(o);
  return Element(algebra_, add(algebra_->field(), coords_, o.coords_));
}

Element Element::operator-(const Element& o) const {
  check_same(o);
  return Element(algebra_, subtract(algebra_->field(), coords_, o.coords_));
}

Element Element::power(std::uint64_t k) const { return Element(algebra_, algebra_->power(coords_, k)); }

bool Element::operator==(const Element& o) const {
  return (algebra_ == o.algebra_ || *algebra_ == *o.algebra_) && coords_ == o.coords_;
}

MatrixAlgebra::MatrixAlgebra(const PrimeField& f, std::size_t n, const std::vector<Matrix>& basis, std::string origin)
    : n_(n) {
  std::vector<Vector> flat;
  for (const auto& m : basis) {
    if (m.rows() != n || m.cols() != n) throw Error(Errc::dimension_mismatch, "basis matrix is not n x n");
    flat.push_back(flatten(m));
  }
  span_ = Subspace::span(f, n * n, flat);
  const std::size_t d = span_.dim();
  std::vector<Matrix> mats;
  for (std::size_t i = 0; i < d; ++i) mats.push_back(basis_matrix(i));
  Vector table(d * d * d, 0);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      auto c = span_.coordinates(f, flatten(multiply(f, mats[i], mats[j])));
      if (!c) {
        // Report the pair in terms of the caller's basis when possible.
        for (std::size_t a = 0; a < basis.size(); ++a)
          for (std::size_t b = 0; b < basis.size(); ++b)
            if (!span_.contains(f, flatten(multiply(f, basis[a], basis[b]))))
              throw Error(Errc::closure_violation, "product of basis elements " + std::to_string(a) + " and " +
                                                       std::to_string(b) + " leaves the span");
        throw Error(Errc::closure_violation, "basis is not closed under products");
      }
      std::copy(c->begin(), c->end(), table.begin() + static_cast<std::ptrdiff_t>((i * d + j) * d));
    }
  sc_ = std::make_shared<const SCAlgebra>(f, d, std::move(table), std::move(origin));
}

Matrix MatrixAlgebra::to_matrix(std::span<const Scalar> coords) const {
  return unflatten(n_, span_.combine(field(), coords));
}

std::optional<Vector> MatrixAlgebra::coords_of(const Matrix& m) const {
  if (m.rows() != n_ || m.cols() != n_) throw Error(Errc::dimension_mismatch, "matrix size does not match algebra");
  return span_.coordinates(field(), flatten(m));
}

Element MatrixAlgebra::element(const Matrix& m) const {
  auto c = coords_of(m);
  if (!c) throw Error(Errc::not_contained, "matrix does not lie in the algebra");
  return Element(sc_, std::move(*c));
}

MatrixAlgebra close_under_products(const PrimeField& f, std::size_t n, const std::vector<Matrix>& generators) {
  if (generators.empty()) throw Error(Errc::invalid_argument, "close_under_products needs generators");
  SpanBuilder builder(f, n * n);
  std::vector<Matrix> mats;
  for (const auto& g : generators)
    if (builder.insert(flatten(g))) mats.push_back(g);
  for (std::size_t i = 0; i < mats.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      Matrix ij = multiply(f, mats[i], mats[j]);
      if (builder.insert(flatten(ij))) mats.push_back(std::move(ij));
      Matrix ji = multiply(f, mats[j], mats[i]);
      if (builder.insert(flatten(ji))) mats.push_back(std::move(ji));
    }
  return MatrixAlgebra(f, n, mats, "closure of generators");
}

AlgebraPtr to_structure_constants(const MatrixAlgebra& a) { return a.sc(); }

RegularRepresentation regular_representation(const SCAlgebra& a) {
  const PrimeField& f = a.field();
  const std::size_t d = a.dim();
  const bool adjoin = !a.is_unital();
  const std::size_t n = adjoin ? d + 1 : d;
  std::vector<Matrix> images;
  for (std::size_t i = 0; i < d; ++i) {
    Matrix l = a.left_mult(a.basis_element(i));
    if (!adjoin) {
      images.push_back(std::move(l));
      continue;
    }
    // Acting on A + F*1: the extra coordinate is the unity, sent to b_i.
    Matrix big(n, n);
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c) big(r, c) = l(r, c);
    big(i, d) = 1;
    images.push_back(std::move(big));
  }
  std::vector<Matrix> basis = images;
  if (adjoin) basis.push_back(Matrix::identity(n));
  MatrixAlgebra image(f, n, basis, "regular representation");
  Matrix embedding(image.dim(), d);
  for (std::size_t i = 0; i < d; ++i) {
    auto c = image.coords_of(images[i]);
    ensure(c.has_value(), "regular representation lost a basis element");
    for (std::size_t r = 0; r < image.dim(); ++r) embedding(r, i) = (*c)[r];
  }
  return {std::move(image), adjoin, std::move(embedding)};
}

bool verify_multiplicative(AlgebraMap& map) {
  const SCAlgebra& s = *map.source;
  const SCAlgebra& t = *map.target;
  if (map.matrix.rows() != t.dim() || map.matrix.cols() != s.dim())
    throw Error(Errc::dimension_mismatch, "algebra map matrix has the wrong shape");
  std::vector<Vector> images;
  for (std::size_t i = 0; i < s.dim(); ++i) images.push_back(map(s.basis_element(i)));
  bool ok = true;
  for (std::size_t i = 0; i < s.dim() && ok; ++i)
    for (std::size_t j = 0; j < s.dim() && ok; ++j)
      ok = map(s.basis_product(i, j)) == t.multiply(images[i], images[j]);
  map.verified_multiplicative = ok;
  return ok;
}

AlgebraPtr deform(const SCAlgebra& a, std::span<const Scalar> s) {
  const std::size_t d = a.dim();
  Vector table(d * d * d, 0);
  for (std::size_t i = 0; i < d; ++i) {
    Vector bis = a.multiply(a.basis_element(i), s);
    for (std::size_t j = 0; j < d; ++j) {
      Vector prod = a.multiply(bis, a.basis_element(j));
      std::copy(prod.begin(), prod.end(), table.begin() + static_cast<std::ptrdiff_t>((i * d + j) * d));
    }
  }
  return std::make_shared<const SCAlgebra>(a.field(), d, std::move(table), "deformation");
}

Subspace generated_ideal(const SCAlgebra& a, const std::vector<Vector>& gens, Side side) {
  SpanBuilder builder(a.field(), a.dim());
  std::vector<Vector> queue;
  for (const auto& g : gens)
    if (builder.insert(g)) queue.push_back(g);
  for (std::size_t q = 0; q < queue.size(); ++q) {
    if (builder.dim() == a.dim()) break;
    for (std::size_t i = 0; i < a.dim(); ++i) {
      const Vector b = a.basis_element(i);
      if (side != Side::left) {
        Vector v = a.multiply(queue[q], b);
        if (builder.insert(v)) queue.push_back(std::move(v));
      }
      if (side != Side::right) {
        Vector v = a.multiply(b, queue[q]);
        if (builder.insert(v)) queue.push_back(std::move(v));
      }
    }
  }
  return builder.finish();
}

Subspace one_sided_ideal(const SCAlgebra& a, const std::vector<Vector>& gens, Side side) {
  if (side == Side::both) throw Error(Errc::invalid_argument, "one_sided_ideal needs a side");
  return generated_ideal(a, gens, side);
}

Subspace two_sided_ideal(const SCAlgebra& a, const std::vector<Vector>& gens) {
  return generated_ideal(a, gens, Side::both);
}

bool is_ideal(const SCAlgebra& a, const Subspace& u, Side side) {
  const PrimeField& f = a.field();
  for (std::size_t r = 0; r < u.dim(); ++r)
    for (std::size_t i = 0; i < a.dim(); ++i) {
      const Vector b = a.basis_element(i);
      if (side != Side::left && !u.contains(f, a.multiply(u.basis_row(r), b))) return false;
      if (side != Side::right && !u.contains(f, a.multiply(b, u.basis_row(r)))) return false;
    }
  return true;
}

bool is_subalgebra(const SCAlgebra& a, const Subspace& u) {
  for (std::size_t i = 0; i < u.dim(); ++i)
    for (std::size_t j = 0; j < u.dim(); ++j)
      if (!u.contains(a.field(), a.multiply(u.basis_row(i), u.basis_row(j)))) return false;
  return true;
}

Subspace subspace_product(const SCAlgebra& a, const Subspace& u, const Subspace& v) {
  SpanBuilder builder(a.field(), a.dim());
  for (std::size_t i = 0; i < u.dim(); ++i)
    for (std::size_t j = 0; j < v.dim(); ++j) {
      builder.insert(a.multiply(u.basis_row(i), v.basis_row(j)));
      if (builder.dim() == a.dim()) return builder.finish();
    }
  return builder.finish();
}

Subspace sandwich(const SCAlgebra& a, std::span<const Scalar> x, const Subspace& u, std::span<const Scalar> y) {
  SpanBuilder builder(a.field(), a.dim());
  for (std::size_t i = 0; i < u.dim(); ++i) builder.insert(a.multiply(a.multiply(x, u.basis_row(i)), y));
  return builder.finish();
}

Nilpotency is_nilpotent(const SCAlgebra& a, const Subspace& u) {
  Subspace power = u;
  for (std::size_t k = 1; k <= a.dim() + 1; ++k) {
    if (power.is_zero()) return {true, k};
    Subspace next = subspace_product(a, power, u);
    if (next == power) return {false, 0};
    power = std::move(next);
  }
  return {false, 0};
}

Subalgebra subalgebra(const SCAlgebra& a, const Subspace& u, std::string origin) {
  const PrimeField& f = a.field();
  const std::size_t d = u.dim();
  Vector table(d * d * d, 0);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      auto c = u.coordinates(f, a.multiply(u.basis_row(i), u.basis_row(j)));
      if (!c) throw Error(Errc::not_closed, "subspace is not closed under multiplication");
      std::copy(c->begin(), c->end(), table.begin() + static_cast<std::ptrdiff_t>((i * d + j) * d));
    }
  Subalgebra out;
  out.algebra = std::make_shared<const SCAlgebra>(f, d, std::move(table), std::move(origin));
  out.span = u;
  out.embedding = u.basis().transpose();
  if (d == 0) out.embedding = Matrix(a.dim(), 0);
  return out;
}

Quotient quotient(const SCAlgebra& a, const Subspace& ideal, std::string origin) {
  const PrimeField& f = a.field();
  if (!is_ideal(a, ideal, Side::both)) throw Error(Errc::invalid_argument, "quotient by a subspace that is not an ideal");
  Quotient q;
  q.ideal = ideal;
  q.complement = complement(f, ideal);
  const std::size_t d = a.dim();
  const std::size_t k = q.complement.dim();
  // Rows of `basis` are the ideal basis followed by the complement basis;
  // coefficients of x in that basis are (basis^T)^{-1} x.
  Matrix basis = stack({ideal.basis(), q.complement.basis()}, d);
  auto inv = inverse(f, basis.transpose());
  ensure(inv.has_value(), "ideal and complement do not span the algebra");
  q.projection = inv->row_block(ideal.dim(), k);
  q.section = k == 0 ? Matrix(d, 0) : q.complement.basis().transpose();
  Vector table(k * k * k, 0);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      Vector c = apply(f, q.projection, a.multiply(q.complement.basis_row(i), q.complement.basis_row(j)));
      std::copy(c.begin(), c.end(), table.begin() + static_cast<std::ptrdiff_t>((i * k + j) * k));
    }
  q.algebra = std::make_shared<const SCAlgebra>(f, k, std::move(table), std::move(origin));
  return q;
}

Subspace corner_span(const SCAlgebra& a, std::span<const Scalar> x, std::span<const Scalar> y) {
  return sandwich(a, x, Subspace::full(a.dim()), y);
}

Subalgebra corner_subalgebra(const SCAlgebra& a, std::span<const Scalar> x) {
  return subalgebra(a, corner_span(a, x, x), "corner");
}

Subspace centre(const SCAlgebra& a) {
  const std::size_t d = a.dim();
  std::vector<Matrix> blocks;
  for (std::size_t i = 0; i < d; ++i) {
    const Vector b = a.basis_element(i);
    blocks.push_back(subtract(a.field(), a.right_mult(b), a.left_mult(b)));
  }
  if (blocks.empty()) return Subspace::zero(0);
  return kernel(a.field(), stack_blocks(blocks, d));
}

Subspace annihilator(const SCAlgebra& a, const Subspace& u, bool right) {
  const std::size_t d = a.dim();
  if (u.is_zero()) return Subspace::full(d);
  std::vector<Matrix> blocks;
  for (std::size_t i = 0; i < u.dim(); ++i)
    blocks.push_back(right ? a.right_mult(u.basis_row(i)) : a.left_mult(u.basis_row(i)));
  return kernel(a.field(), stack_blocks(blocks, d));
}

AlgebraPtr direct_product(const std::vector<AlgebraPtr>& parts, std::string origin) {
  if (parts.empty()) throw Error(Errc::invalid_argument, "direct product of no algebras");
  const PrimeField& f = parts.front()->field();
  std::size_t d = 0;
  for (const auto& p : parts) {
    if (!(p->field() == f)) throw Error(Errc::algebra_mismatch, "direct product over different fields");
    d += p->dim();
  }
  Vector table(d * d * d, 0);
  std::size_t offset = 0;
  for (const auto& p : parts) {
    const std::size_t k = p->dim();
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j)
        for (std::size_t l = 0; l < k; ++l)
          table[((offset + i) * d + offset + j) * d + offset + l] = p->constant(i, j, l);
    offset += k;
  }
  return std::make_shared<const SCAlgebra>(f, d, std::move(table), std::move(origin));
}

}  // namespace peirce
