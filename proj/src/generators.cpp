#include "peirce/generators.hpp"

#include <algorithm>

#include "peirce/error.hpp"

namespace peirce {

namespace {

Matrix E(std::size_t n, std::size_t i, std::size_t j) { return Matrix::unit(n, i - 1, j - 1); }

bool has_root(const PrimeField& f, const Vector& poly) {
  for (Scalar x = 0; x < f.p(); ++x) {
    Scalar v = 0;
    for (std::size_t i = poly.size(); i-- > 0;) v = f.add(f.mul(v, x), poly[i]);
    if (v == 0) return true;
  }
  return false;
}

// Remainder of a monic quartic divided by x^2 + b x + c.
bool divisible_by_quadratic(const PrimeField& f, const Vector& poly, Scalar b, Scalar c) {
  Vector r = poly;
  for (std::size_t deg = r.size() - 1; deg >= 2; --deg) {
    Scalar lead = r[deg];
    if (lead == 0) continue;
    r[deg] = 0;
    r[deg - 1] = f.sub(r[deg - 1], f.mul(lead, b));
    r[deg - 2] = f.sub(r[deg - 2], f.mul(lead, c));
  }
  return r[0] == 0 && r[1] == 0;
}

bool is_irreducible(const PrimeField& f, const Vector& poly) {
  const std::size_t deg = poly.size() - 1;
  if (deg == 1) return true;
  if (has_root(f, poly)) return false;
  if (deg <= 3) return true;
  for (Scalar b = 0; b < f.p(); ++b)
    for (Scalar c = 0; c < f.p(); ++c)
      if (divisible_by_quadratic(f, poly, b, c)) return false;
  return true;
}

}  // namespace

Matrix kronecker(const PrimeField& f, const Matrix& a, const Matrix& b) {
  Matrix k(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c) k(i * b.rows() + r, j * b.cols() + c) = f.mul(a(i, j), b(r, c));
  return k;
}

Matrix block_diagonal(const std::vector<Matrix>& blocks) {
  std::size_t n = 0;
  for (const auto& b : blocks) n += b.rows();
  Matrix m(n, n);
  std::size_t off = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) m(off + i, off + j) = b(i, j);
    off += b.rows();
  }
  return m;
}

Vector irreducible_polynomial(const PrimeField& f, std::size_t degree) {
  if (degree < 1 || degree > 4) throw Error(Errc::invalid_argument, "irreducible polynomials only for degree 1..4");
  Vector poly(degree + 1, 0);
  poly[degree] = 1;
  if (degree == 1) return poly;
  // Count through the lower coefficients, constant term fastest.
  while (true) {
    if (poly[0] != 0 && is_irreducible(f, poly)) return poly;
    std::size_t i = 0;
    while (i < degree && ++poly[i] == f.p()) poly[i++] = 0;
    ensure(i < degree, "no irreducible polynomial found");
  }
}

Matrix companion_matrix(const PrimeField& f, const Vector& monic) {
  const std::size_t e = monic.size() - 1;
  Matrix c(e, e);
  for (std::size_t i = 1; i < e; ++i) c(i, i - 1) = 1;
  for (std::size_t i = 0; i < e; ++i) c(i, e - 1) = f.neg(monic[i]);
  return c;
}

MatrixAlgebra full_matrix_algebra(const PrimeField& f, std::size_t n) {
  std::vector<Matrix> basis;
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j) basis.push_back(E(n, i, j));
  return MatrixAlgebra(f, n, basis, "M_" + std::to_string(n));
}

MatrixAlgebra upper_triangular_algebra(const PrimeField& f, std::size_t n) {
  std::vector<Matrix> basis;
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i; j <= n; ++j) basis.push_back(E(n, i, j));
  return MatrixAlgebra(f, n, basis, "T_" + std::to_string(n));
}

MatrixAlgebra extension_field_algebra(const PrimeField& f, std::size_t e) {
  return matrix_algebra_over_extension(f, 1, e);
}

MatrixAlgebra matrix_algebra_over_extension(const PrimeField& f, std::size_t n, std::size_t e) {
  Matrix c = companion_matrix(f, irreducible_polynomial(f, e));
  std::vector<Matrix> powers{Matrix::identity(e)};
  for (std::size_t k = 1; k < e; ++k) powers.push_back(multiply(f, powers.back(), c));
  std::vector<Matrix> basis;
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j)
      for (const auto& pw : powers) basis.push_back(kronecker(f, E(n, i, j), pw));
  return MatrixAlgebra(f, n * e, basis, "M_" + std::to_string(n) + "(GF(p^" + std::to_string(e) + "))");
}

MatrixAlgebra block_diagonal_algebra(const std::vector<MatrixAlgebra>& parts) {
  if (parts.empty()) throw Error(Errc::invalid_argument, "block diagonal algebra of no parts");
  const PrimeField& f = parts.front().field();
  std::size_t n = 0;
  for (const auto& p : parts) n += p.n();
  std::vector<Matrix> basis;
  std::size_t off = 0;
  for (const auto& p : parts) {
    for (std::size_t i = 0; i < p.dim(); ++i) {
      Matrix m(n, n);
      Matrix b = p.basis_matrix(i);
      for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c) m(off + r, off + c) = b(r, c);
      basis.push_back(std::move(m));
    }
    off += p.n();
  }
  return MatrixAlgebra(f, n, basis, "block diagonal product");
}

MatrixAlgebra structural_matrix_algebra(const PrimeField& f, const std::vector<std::size_t>& sizes,
                                        const std::vector<std::vector<bool>>& related) {
  std::vector<std::size_t> start{0};
  for (std::size_t s : sizes) start.push_back(start.back() + s);
  const std::size_t n = start.back();
  std::vector<Matrix> basis;
  for (std::size_t bi = 0; bi < sizes.size(); ++bi)
    for (std::size_t bj = 0; bj < sizes.size(); ++bj) {
      if (!related[bi][bj]) continue;
      for (std::size_t i = start[bi]; i < start[bi + 1]; ++i)
        for (std::size_t j = start[bj]; j < start[bj + 1]; ++j) basis.push_back(Matrix::unit(n, i, j));
    }
  return MatrixAlgebra(f, n, basis, "structural matrix algebra");
}

MatrixAlgebra conjugate(const MatrixAlgebra& a, const Matrix& p) {
  const PrimeField& f = a.field();
  auto inv = inverse(f, p);
  if (!inv) throw Error(Errc::not_invertible, "conjugating matrix is singular");
  std::vector<Matrix> basis;
  for (std::size_t i = 0; i < a.dim(); ++i) basis.push_back(multiply(f, multiply(f, p, a.basis_matrix(i)), *inv));
  return MatrixAlgebra(f, a.n(), basis, a.algebra().origin() + " (conjugated)");
}

Matrix random_invertible(const PrimeField& f, std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<Scalar> d(0, f.p() - 1);
  while (true) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = d(rng);
    if (rank(f, m) == n) return m;
  }
}

std::uint64_t generator_min_prime(const std::string& name, std::size_t d_block) {
  if (name == "paper10") return 63 * d_block * d_block + 2;
  if (name == "remark") return 34;
  if (name == "random") return 22;
  return 2;
}

GeneratedAlgebra gen_t2(const PrimeField& f) {
  GeneratedAlgebra g{"t2", "gen t2", upper_triangular_algebra(f, 2), {}};
  g.elements = {{"E11", E(2, 1, 1)}, {"E12", E(2, 1, 2)}, {"E22", E(2, 2, 2)}};
  return g;
}

GeneratedAlgebra gen_m3(const PrimeField& f) {
  GeneratedAlgebra g{"m3", "gen m3", full_matrix_algebra(f, 3), {}};
  g.elements = {{"a", add(f, E(3, 1, 1), E(3, 2, 3))}, {"b", add(f, E(3, 1, 1), E(3, 3, 2))}};
  return g;
}

GeneratedAlgebra gen_paper10(const PrimeField& f, std::size_t d) {
  // Diagonal blocks {1,2}, {3,4,5}, {6,7,8}, {9,10}; entry (i, j) is allowed
  // when the block of i does not come after the block of j.
  const std::size_t block_of[10] = {0, 0, 1, 1, 1, 2, 2, 2, 3, 3};
  const std::size_t n = 10 * d;
  std::vector<Matrix> basis;
  for (std::size_t i = 0; i < 10; ++i)
    for (std::size_t j = 0; j < 10; ++j) {
      if (block_of[i] > block_of[j]) continue;
      for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) basis.push_back(Matrix::unit(n, i * d + r, j * d + c));
    }
  auto identity_blocks = [&](const std::vector<std::pair<std::size_t, std::size_t>>& pos) {
    Matrix m(n, n);
    for (auto [i, j] : pos)
      for (std::size_t r = 0; r < d; ++r) m((i - 1) * d + r, (j - 1) * d + r) = 1;
    return m;
  };
  Matrix a = identity_blocks({{1, 2}, {3, 4}, {4, 5}, {6, 7}, {7, 8}, {9, 10}});
  Matrix a2 = multiply(f, a, a);
  GeneratedAlgebra g{"paper10", "gen paper10 d_block=" + std::to_string(d), MatrixAlgebra(f, n, basis, "paper10"), {}};
  g.elements = {{"a", a}, {"aT", a.transpose()}, {"a2", a2}, {"a2T", a2.transpose()}};
  return g;
}

Subspace block_pattern(const MatrixAlgebra& r, std::size_t d, const std::vector<std::string>& rows) {
  std::vector<Vector> vs;
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      if (rows[i][j] != 'E') continue;
      for (std::size_t x = 0; x < d; ++x)
        for (std::size_t y = 0; y < d; ++y) {
          auto c = r.coords_of(Matrix::unit(r.n(), i * d + x, j * d + y));
          if (!c) throw Error(Errc::not_contained, "pattern block outside the algebra");
          vs.push_back(std::move(*c));
        }
    }
  return Subspace::span(r.field(), r.dim(), vs);
}

Paper10Patterns paper10_patterns(const MatrixAlgebra& r, std::size_t d) {
  const std::string z = "0000000000";
  Paper10Patterns p;
  p.corner = block_pattern(r, d, {"0E0EE0EE0E", z, "000EE0EE0E", "000EE0EE0E", z, "000000EE0E", "000000EE0E", z,
                                  "000000000E", z});
  p.i0 = block_pattern(r, d, {"0E00000000", z, z, z, z, z, z, z, "000000000E", z});
  p.i1 = block_pattern(r, d, {"000EE0EE0E", z, "000EE0EE0E", "000EE0EE0E", z, z, z, z, z, z});
  p.i2 = block_pattern(r, d, {"000000EE0E", z, "000000EE0E", "000000EE0E", z, "000000EE0E", "000000EE0E", z, z, z});
  return p;
}

GeneratedAlgebra gen_remark(const PrimeField& f) {
  MatrixAlgebra ext = matrix_algebra_over_extension(f, 2, 4);
  MatrixAlgebra m4 = full_matrix_algebra(f, 4);
  MatrixAlgebra prod = block_diagonal_algebra({ext, m4});
  Matrix a = block_diagonal({kronecker(f, E(2, 1, 2), Matrix::identity(4)), Matrix(4, 4)});
  Matrix b = block_diagonal({Matrix(8, 8), add(f, E(4, 1, 3), E(4, 2, 4))});
  GeneratedAlgebra g{"remark", "gen remark", std::move(prod), {}};
  g.elements = {{"a", a}, {"b", b}};
  return g;
}

GeneratedAlgebra gen_random(const PrimeField& f, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const bool semisimple = seed % 2 == 0;
  MatrixAlgebra a = semisimple ? random_semisimple(f, rng) : random_triangular(f, rng);
  std::string kind = semisimple ? "semisimple" : "triangular";
  GeneratedAlgebra g{"random", "gen random seed=" + std::to_string(seed) + " kind=" + kind, std::move(a), {}};
  Vector x = random_sparse_element(g.algebra.algebra(), rng);
  g.elements = {{"x", g.algebra.to_matrix(x)}};
  return g;
}

GeneratedAlgebra generate(const std::string& name, std::uint32_t p, std::size_t d_block, std::uint64_t seed) {
  PrimeField f(p);
  const std::uint64_t need = generator_min_prime(name, d_block);
  if (name != "t2" && name != "m3" && name != "paper10" && name != "remark" && name != "random")
    throw Error(Errc::invalid_argument, "unknown generator '" + name + "'");
  if (p < need) throw CharacteristicTooSmall(p, need, "generator " + name);
  if (name == "t2") return gen_t2(f);
  if (name == "m3") return gen_m3(f);
  if (name == "paper10") return gen_paper10(f, d_block);
  if (name == "remark") return gen_remark(f);
  return gen_random(f, seed);
}

std::string_view kind_name(RandomKind k) {
  switch (k) {
    case RandomKind::semisimple: return "semisimple";
    case RandomKind::triangular: return "triangular";
    case RandomKind::deformed: return "deformed";
  }
  return "?";
}

MatrixAlgebra random_semisimple(const PrimeField& f, std::mt19937_64& rng, std::size_t max_dim) {
  std::uniform_int_distribution<std::size_t> nd(1, 3), ed(1, 3), kd(1, 3);
  std::vector<MatrixAlgebra> parts;
  std::size_t used = 0;
  const std::size_t blocks = kd(rng);
  for (std::size_t b = 0; b < blocks; ++b) {
    for (int attempt = 0; attempt < 8; ++attempt) {
      std::size_t n = nd(rng), e = ed(rng);
      if (n * e > 6 || used + n * n * e > max_dim) continue;
      parts.push_back(matrix_algebra_over_extension(f, n, e));
      used += n * n * e;
      break;
    }
  }
  if (parts.empty()) parts.push_back(full_matrix_algebra(f, 1));
  MatrixAlgebra prod = parts.size() == 1 ? parts.front() : block_diagonal_algebra(parts);
  return conjugate(prod, random_invertible(f, prod.n(), rng));
}

MatrixAlgebra random_triangular(const PrimeField& f, std::mt19937_64& rng, std::size_t max_dim) {
  std::uniform_int_distribution<std::size_t> md(1, 4), sd(1, 2);
  std::bernoulli_distribution coin(0.5);
  while (true) {
    const std::size_t m = md(rng);
    std::vector<std::size_t> sizes(m);
    for (auto& s : sizes) s = sd(rng);
    std::vector<std::vector<bool>> rel(m, std::vector<bool>(m, false));
    for (std::size_t i = 0; i < m; ++i) {
      rel[i][i] = true;
      for (std::size_t j = i + 1; j < m; ++j) rel[i][j] = coin(rng);
    }
    for (std::size_t k = 0; k < m; ++k)
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
          if (rel[i][k] && rel[k][j]) rel[i][j] = true;
    std::size_t dim = 0;
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j)
        if (rel[i][j]) dim += sizes[i] * sizes[j];
    if (dim > max_dim) continue;
    MatrixAlgebra a = structural_matrix_algebra(f, sizes, rel);
    return conjugate(a, random_invertible(f, a.n(), rng));
  }
}

AlgebraPtr random_algebra(const PrimeField& f, std::mt19937_64& rng, RandomKind kind, std::size_t max_dim) {
  switch (kind) {
    case RandomKind::semisimple: return random_semisimple(f, rng, max_dim).sc();
    case RandomKind::triangular: return random_triangular(f, rng, max_dim).sc();
    case RandomKind::deformed: {
      std::bernoulli_distribution coin(0.5);
      AlgebraPtr base = coin(rng) ? random_semisimple(f, rng, max_dim).sc() : random_triangular(f, rng, max_dim).sc();
      std::uniform_int_distribution<Scalar> d(0, f.p() - 1);
      while (true) {
        Vector u(base->dim());
        for (auto& x : u) x = d(rng);
        if (!base->inverse(u)) continue;
        return deform(*base, u);
      }
    }
  }
  throw Error(Errc::invalid_argument, "unknown random algebra kind");
}

std::vector<std::pair<std::string, MatrixAlgebra>> tiny_corpus(const PrimeField& f) {
  std::vector<std::pair<std::string, MatrixAlgebra>> out;
  out.emplace_back("t2", upper_triangular_algebra(f, 2));
  out.emplace_back("m2", full_matrix_algebra(f, 2));
  out.emplace_back("gf_p2", extension_field_algebra(f, 2));
  out.emplace_back("t3", upper_triangular_algebra(f, 3));
  out.emplace_back("t2_x_f", structural_matrix_algebra(f, {1, 1, 1}, {{true, true, false}, {false, true, false},
                                                                     {false, false, true}}));
  out.emplace_back("vee", structural_matrix_algebra(f, {1, 1, 1}, {{true, true, true}, {false, true, false},
                                                                  {false, false, true}}));
  Matrix nil(3, 3);
  nil(0, 1) = nil(1, 2) = 1;
  out.emplace_back("trunc3", MatrixAlgebra(f, 3, {Matrix::identity(3), nil, multiply(f, nil, nil)}, "F[x]/(x^3)"));
  out.emplace_back("local4", MatrixAlgebra(f, 3, {Matrix::identity(3), E(3, 1, 2), E(3, 2, 3), E(3, 1, 3)},
                                           "local noncommutative"));
  out.emplace_back("gf_p2_x_f", block_diagonal_algebra({extension_field_algebra(f, 2), full_matrix_algebra(f, 1)}));
  return out;
}

Vector random_sparse_element(const SCAlgebra& a, std::mt19937_64& rng) {
  std::uniform_int_distribution<Scalar> d(0, a.p() - 1);
  std::bernoulli_distribution sparse(0.5), keep(0.3);
  const bool thin = sparse(rng);
  Vector x(a.dim(), 0);
  for (auto& v : x)
    if (!thin || keep(rng)) v = d(rng);
  return x;
}

}  // namespace peirce
