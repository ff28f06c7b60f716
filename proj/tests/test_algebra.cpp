#include <gtest/gtest.h>

#include <random>

#include "peirce/algebra.hpp"
#include "peirce/error.hpp"

using namespace peirce;

namespace {

const PrimeField F101(101);

Matrix E(std::size_t n, std::size_t i, std::size_t j) { return Matrix::unit(n, i - 1, j - 1); }

MatrixAlgebra full_matrix_algebra(const PrimeField& f, std::size_t n) {
  std::vector<Matrix> basis;
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j) basis.push_back(E(n, i, j));
  return MatrixAlgebra(f, n, basis);
}

MatrixAlgebra t2(const PrimeField& f) { return MatrixAlgebra(f, 2, {E(2, 1, 1), E(2, 1, 2), E(2, 2, 2)}); }

Vector coords(const MatrixAlgebra& a, const Matrix& m) { return *a.coords_of(m); }

}  // namespace

TEST(Closure, IdentityGeneratesOneDimensional) {
  MatrixAlgebra a = close_under_products(F101, 3, {Matrix::identity(3)});
  EXPECT_EQ(a.dim(), 1u);
  ASSERT_TRUE(a.algebra().is_unital());
  EXPECT_EQ(a.to_matrix(*a.algebra().unity()), Matrix::identity(3));
}

TEST(Closure, UpperTriangularTwoByTwo) {
  MatrixAlgebra a = close_under_products(F101, 2, {E(2, 1, 1), E(2, 1, 2), E(2, 2, 2)});
  EXPECT_EQ(a.dim(), 3u);
  ASSERT_TRUE(a.algebra().is_unital());
  EXPECT_EQ(a.to_matrix(a.algebra().one()), Matrix::identity(2));
}

TEST(Closure, SquareZeroHasNoUnity) {
  MatrixAlgebra a = close_under_products(F101, 2, {E(2, 1, 2)});
  EXPECT_EQ(a.dim(), 1u);
  EXPECT_FALSE(a.algebra().is_unital());
  EXPECT_THROW(a.algebra().one(), Error);
}

TEST(Closure, GeneratesFullMatrixRing) {
  MatrixAlgebra a = close_under_products(F101, 3, {E(3, 1, 2), E(3, 2, 3), E(3, 3, 1)});
  EXPECT_EQ(a.dim(), 9u);
}

TEST(Closure, RejectsOpenBasis) {
  try {
    MatrixAlgebra(F101, 2, {E(2, 1, 2), E(2, 2, 1)});
    FAIL() << "expected ClosureViolation";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::closure_violation);
  }
}

TEST(StructureConstants, FullMatrixRoundTrip) {
  MatrixAlgebra m2 = full_matrix_algebra(F101, 2);
  const SCAlgebra& a = *to_structure_constants(m2);
  EXPECT_EQ(a.dim(), 4u);
  // Basis order is E11, E12, E21, E22.
  EXPECT_EQ(Vector(a.basis_product(0, 0).begin(), a.basis_product(0, 0).end()), (Vector{1, 0, 0, 0}));
  EXPECT_EQ(Vector(a.basis_product(1, 2).begin(), a.basis_product(1, 2).end()), (Vector{1, 0, 0, 0}));
  EXPECT_TRUE(a.basis_product(1, 1)[0] == 0 && is_zero(a.basis_product(1, 1)));

  RegularRepresentation rep = regular_representation(a);
  EXPECT_FALSE(rep.adjoined_unity);
  EXPECT_EQ(rep.image.n(), 4u);
  EXPECT_EQ(rep.image.dim(), 4u);
  AlgebraMap embed{m2.sc(), rep.image.sc(), rep.embedding};
  EXPECT_TRUE(verify_multiplicative(embed));
  EXPECT_EQ(rank(F101, rep.embedding), 4u);
}

TEST(StructureConstants, AdjoinsUnityForNonUnital) {
  auto a = std::make_shared<const SCAlgebra>(F101, 1, Vector{0});
  RegularRepresentation rep = regular_representation(*a);
  EXPECT_TRUE(rep.adjoined_unity);
  EXPECT_EQ(rep.image.n(), 2u);
  EXPECT_EQ(rep.image.dim(), 2u);
  AlgebraMap embed{a, rep.image.sc(), rep.embedding};
  EXPECT_TRUE(verify_multiplicative(embed));
}

TEST(StructureConstants, RejectsNonAssociativeTable) {
  // b0 * b0 = b1, b1 * b0 = b0, everything else zero: (b0 b0) b0 = b0 but b0 (b0 b0) = 0.
  Vector table(8, 0);
  table[(0 * 2 + 0) * 2 + 1] = 1;
  table[(1 * 2 + 0) * 2 + 0] = 1;
  try {
    SCAlgebra(F101, 2, table);
    FAIL() << "expected AssociativityViolation";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::associativity_violation);
  }
}

TEST(Multiply, UnityAndSquareZero) {
  MatrixAlgebra a = t2(F101);
  Element one(a.sc(), a.algebra().one());
  Element e12 = a.element(E(2, 1, 2));
  Element x = a.element(Matrix(2, 2, {3, 7, 0, 5}));
  EXPECT_EQ(one * x, x);
  EXPECT_EQ(x * one, x);
  EXPECT_TRUE((e12 * e12).is_zero());
  EXPECT_EQ(x.power(3), x * x * x);
  EXPECT_EQ(a.to_matrix((x * x).coords()), multiply(F101, a.to_matrix(x.coords()), a.to_matrix(x.coords())));
}

TEST(Multiply, MismatchedAlgebrasRejected) {
  MatrixAlgebra a = t2(F101);
  MatrixAlgebra b = full_matrix_algebra(F101, 2);
  Element x = a.element(E(2, 1, 1));
  Element y = b.element(E(2, 1, 1));
  try {
    (void)(x * y);
    FAIL() << "expected AlgebraMismatch";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::algebra_mismatch);
  }
}

TEST(Deform, ByUnityIsIdentity) {
  MatrixAlgebra a = full_matrix_algebra(F101, 2);
  AlgebraPtr d = deform(a.algebra(), a.algebra().one());
  EXPECT_EQ(d->table(), a.algebra().table());
}

TEST(Deform, ByMatrixUnitLosesUnity) {
  MatrixAlgebra a = full_matrix_algebra(F101, 2);
  AlgebraPtr d = deform(a.algebra(), coords(a, E(2, 1, 1)));
  EXPECT_EQ(d->dim(), 4u);
  EXPECT_FALSE(d->is_unital());
  Vector e22 = coords(a, E(2, 2, 2));
  EXPECT_TRUE(is_zero(d->multiply(e22, e22)));
}

TEST(Deform, ByZeroIsTrivial) {
  MatrixAlgebra a = full_matrix_algebra(F101, 2);
  AlgebraPtr d = deform(a.algebra(), a.algebra().zero());
  EXPECT_TRUE(is_zero(d->table()));
}

TEST(Deform, UnityIsInverseOfInvertibleS) {
  MatrixAlgebra a = full_matrix_algebra(F101, 3);
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<Scalar> d(0, 100);
  int checked = 0;
  while (checked < 10) {
    Vector s(9);
    for (auto& x : s) x = d(rng);
    auto inv = a.algebra().inverse(s);
    if (!inv) continue;
    AlgebraPtr ds = deform(a.algebra(), s);
    ASSERT_TRUE(ds->is_unital());
    EXPECT_EQ(*ds->unity(), *inv);
    ++checked;
  }
}

TEST(Ideals, Examples) {
  MatrixAlgebra m2 = full_matrix_algebra(F101, 2);
  EXPECT_TRUE(two_sided_ideal(m2.algebra(), {coords(m2, E(2, 1, 1))}).is_full());

  MatrixAlgebra t = t2(F101);
  Subspace right = one_sided_ideal(t.algebra(), {coords(t, E(2, 1, 1))}, Side::right);
  EXPECT_EQ(right, Subspace::span(F101, 3, {coords(t, E(2, 1, 1)), coords(t, E(2, 1, 2))}));
  Subspace two = two_sided_ideal(t.algebra(), {coords(t, E(2, 1, 2))});
  EXPECT_EQ(two, Subspace::span(F101, 3, {coords(t, E(2, 1, 2))}));
  EXPECT_TRUE(is_ideal(t.algebra(), right, Side::right));
  Subspace e22 = one_sided_ideal(t.algebra(), {coords(t, E(2, 2, 2))}, Side::right);
  EXPECT_EQ(e22.dim(), 1u);
  EXPECT_FALSE(is_ideal(t.algebra(), e22, Side::left));
  EXPECT_TRUE(is_ideal(t.algebra(), two, Side::both));
}

TEST(Ideals, NonUnitalIncludesGenerator) {
  auto trivial = std::make_shared<const SCAlgebra>(F101, 2, Vector(8, 0));
  Subspace i = two_sided_ideal(*trivial, {{1, 0}});
  EXPECT_EQ(i, Subspace::span(F101, 2, {{1, 0}}));
}

TEST(Nilpotency, Examples) {
  MatrixAlgebra t = t2(F101);
  Subspace u = Subspace::span(F101, 3, {coords(t, E(2, 1, 2))});
  EXPECT_TRUE(subspace_product(t.algebra(), u, u).is_zero());
  Nilpotency n = is_nilpotent(t.algebra(), u);
  EXPECT_TRUE(n.nilpotent);
  EXPECT_EQ(n.index, 2u);
  MatrixAlgebra m2 = full_matrix_algebra(F101, 2);
  EXPECT_FALSE(is_nilpotent(m2.algebra(), Subspace::full(4)).nilpotent);

  // Strictly upper triangular 4x4 matrices: index 4.
  MatrixAlgebra n4 = close_under_products(F101, 4, {E(4, 1, 2), E(4, 2, 3), E(4, 3, 4)});
  Nilpotency k = is_nilpotent(n4.algebra(), Subspace::full(n4.dim()));
  EXPECT_TRUE(k.nilpotent);
  EXPECT_EQ(k.index, 4u);
}

TEST(Corner, UnityAndSquareZero) {
  MatrixAlgebra m2 = full_matrix_algebra(F101, 2);
  EXPECT_EQ(corner_subalgebra(m2.algebra(), m2.algebra().one()).algebra->dim(), 4u);
  Subalgebra c = corner_subalgebra(m2.algebra(), coords(m2, E(2, 1, 2)));
  EXPECT_EQ(c.algebra->dim(), 1u);
  EXPECT_TRUE(is_zero(c.algebra->table()));
}

TEST(Corner, ClosedForRandomElements) {
  MatrixAlgebra m3 = full_matrix_algebra(F101, 3);
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<Scalar> d(0, 100);
  for (int trial = 0; trial < 10; ++trial) {
    Vector x(9);
    for (auto& v : x) v = d(rng) % 3 == 0 ? d(rng) : 0;
    Subspace s = corner_span(m3.algebra(), x, x);
    EXPECT_TRUE(is_subalgebra(m3.algebra(), s));
  }
}

TEST(Centre, Examples) {
  MatrixAlgebra m2 = full_matrix_algebra(F101, 2);
  EXPECT_EQ(centre(m2.algebra()), Subspace::span(F101, 4, {m2.algebra().one()}));

  std::vector<Matrix> basis;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) basis.push_back(Matrix::unit(5, i, j));
  for (std::size_t i = 2; i < 5; ++i)
    for (std::size_t j = 2; j < 5; ++j) basis.push_back(Matrix::unit(5, i, j));
  MatrixAlgebra prod(F101, 5, basis);
  Subspace z = centre(prod.algebra());
  EXPECT_EQ(z.dim(), 2u);
  Matrix i2(5, 5), i3(5, 5);
  i2(0, 0) = i2(1, 1) = 1;
  i3(2, 2) = i3(3, 3) = i3(4, 4) = 1;
  EXPECT_EQ(z, Subspace::span(F101, 13, {coords(prod, i2), coords(prod, i3)}));

  auto trivial = std::make_shared<const SCAlgebra>(F101, 3, Vector(27, 0));
  EXPECT_TRUE(centre(*trivial).is_full());
}

TEST(Quotient, UpperTriangularModRadical) {
  MatrixAlgebra t = t2(F101);
  Quotient q = quotient(t.algebra(), Subspace::span(F101, 3, {coords(t, E(2, 1, 2))}));
  EXPECT_EQ(q.algebra->dim(), 2u);
  ASSERT_TRUE(q.algebra->is_unital());
  EXPECT_EQ(q.project(F101, t.algebra().one()), *q.algebra->unity());
  EXPECT_EQ(centre(*q.algebra).dim(), 2u);
}

TEST(DirectProduct, DimensionsAndUnity) {
  MatrixAlgebra m2 = full_matrix_algebra(F101, 2);
  MatrixAlgebra t = t2(F101);
  AlgebraPtr p = direct_product({m2.sc(), t.sc()});
  EXPECT_EQ(p->dim(), 7u);
  ASSERT_TRUE(p->is_unital());
  Vector expect = m2.algebra().one();
  expect.insert(expect.end(), t.algebra().one().begin(), t.algebra().one().end());
  EXPECT_EQ(*p->unity(), expect);
}
