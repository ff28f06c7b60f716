#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "peirce/error.hpp"
#include "peirce/linalg.hpp"

using namespace peirce;

namespace {

// Every vector of GF(p)^n, in lexicographic order.
std::vector<Vector> all_vectors(std::uint32_t p, std::size_t n) {
  std::vector<Vector> out;
  Vector v(n, 0);
  while (true) {
    out.push_back(v);
    std::size_t i = 0;
    while (i < n && ++v[i] == p) v[i++] = 0;
    if (i == n) break;
  }
  return out;
}

// Elements of the row space of m, by enumerating coefficient vectors.
std::vector<Vector> enumerate_row_space(const PrimeField& f, const Matrix& m) {
  std::vector<Vector> out;
  for (const auto& c : all_vectors(f.p(), m.rows())) {
    Vector v(m.cols(), 0);
    for (std::size_t i = 0; i < m.rows(); ++i) axpy(f, c[i], m.row(i), v);
    out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Matrix random_matrix(std::mt19937_64& rng, std::uint32_t p, std::size_t r, std::size_t c, double density = 1.0) {
  std::uniform_int_distribution<Scalar> d(0, p - 1);
  std::bernoulli_distribution keep(density);
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = keep(rng) ? d(rng) : 0;
  return m;
}

}  // namespace

TEST(Rref, SmallExampleMod5) {
  PrimeField f(5);
  Matrix m(2, 2, {2, 4, 1, 2});
  RowEchelon e = rref(f, m);
  EXPECT_EQ(e.reduced, Matrix(2, 2, {1, 2, 0, 0}));
  EXPECT_EQ(e.rank, 1u);
  EXPECT_EQ(e.pivots, std::vector<std::size_t>{0});
  EXPECT_EQ(enumerate_row_space(f, m), enumerate_row_space(f, e.reduced));
}

TEST(Rref, IdentityAndZero) {
  PrimeField f(101);
  EXPECT_EQ(rref(f, Matrix::identity(4)).reduced, Matrix::identity(4));
  EXPECT_EQ(rref(f, Matrix::identity(4)).rank, 4u);
  RowEchelon z = rref(f, Matrix(3, 5));
  EXPECT_EQ(z.rank, 0u);
  EXPECT_TRUE(z.reduced.is_zero());
}

TEST(Rref, IdempotentAndRowOrderInvariant) {
  PrimeField f(101);
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    Matrix m = random_matrix(rng, 101, 6, 7, 0.4);
    RowEchelon e = rref(f, m);
    EXPECT_EQ(rref(f, e.reduced).reduced, e.reduced);
    std::vector<Vector> rows;
    for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row_vector(i));
    std::shuffle(rows.begin(), rows.end(), rng);
    EXPECT_EQ(rref(f, Matrix::from_rows(m.cols(), rows)).reduced, e.reduced);
  }
}

TEST(Solve, KernelMod7AgainstEnumeration) {
  PrimeField f(7);
  Matrix a(2, 2, {1, 1, 2, 2});
  auto x = solve(f, a, Vector{3, 6});
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ(apply(f, a, *x), (Vector{3, 6}));

  std::vector<Vector> null;
  for (const auto& v : all_vectors(7, 2))
    if (is_zero(apply(f, a, v))) null.push_back(v);
  std::sort(null.begin(), null.end());
  Subspace k = kernel(f, a);
  EXPECT_EQ(k, Subspace::span(f, 2, {{1, 6}}));
  EXPECT_EQ(enumerate_row_space(f, k.basis()), null);
}

TEST(Solve, IdentityAndInconsistent) {
  PrimeField f(101);
  Vector b{5, 0, 17};
  EXPECT_EQ(solve(f, Matrix::identity(3), b), b);
  EXPECT_FALSE(solve(f, Matrix(3, 3), b).has_value());
}

TEST(Solve, PlantedSolutions) {
  PrimeField f(101);
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    Matrix a = random_matrix(rng, 101, 5, 8, 0.5);
    Vector x0 = random_matrix(rng, 101, 1, 8).row_vector(0);
    Vector b = apply(f, a, x0);
    auto x = solve(f, a, b);
    ASSERT_TRUE(x.has_value());
    EXPECT_EQ(apply(f, a, *x), b);
    Subspace k = kernel(f, a);
    EXPECT_EQ(k.dim() + rank(f, a), a.cols());
    for (const auto& v : k.basis_vectors()) EXPECT_TRUE(is_zero(apply(f, a, v)));
  }
}

TEST(Inverse, RoundTrip) {
  PrimeField f(101);
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    Matrix a = random_matrix(rng, 101, 5, 5);
    auto inv = inverse(f, a);
    if (!inv) {
      EXPECT_LT(rank(f, a), 5u);
      continue;
    }
    EXPECT_EQ(multiply(f, a, *inv), Matrix::identity(5));
  }
  EXPECT_FALSE(inverse(f, Matrix(2, 2, {1, 2, 2, 4})).has_value());
}

TEST(SubspaceOps, SumAndIntersectionMod3AgainstEnumeration) {
  PrimeField f(3);
  Subspace u = Subspace::span(f, 3, {{1, 0, 0}, {0, 1, 0}});
  Subspace v = Subspace::span(f, 3, {{0, 1, 0}, {0, 0, 1}});
  std::vector<Vector> both;
  for (const auto& x : all_vectors(3, 3))
    if (u.contains(f, x) && v.contains(f, x)) both.push_back(x);
  Subspace meet = subspace_intersect(f, u, v);
  EXPECT_EQ(enumerate_row_space(f, meet.basis()), both);
  EXPECT_EQ(meet, Subspace::span(f, 3, {{0, 1, 0}}));
  EXPECT_TRUE(subspace_sum(f, u, v).is_full());
  EXPECT_EQ(subspace_intersect(f, u, u), u);
  EXPECT_EQ(subspace_sum(f, u, u), u);
}

TEST(SubspaceOps, ModularLaw) {
  PrimeField f(101);
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t n = 6;
    Subspace u = Subspace::row_space(f, random_matrix(rng, 101, rng() % 5, n, 0.5));
    Subspace v = Subspace::row_space(f, random_matrix(rng, 101, rng() % 5, n, 0.5));
    // Share a random vector often so intersections are nontrivial.
    if (trial % 2 == 0) {
      Vector w = random_matrix(rng, 101, 1, n).row_vector(0);
      u = subspace_sum(f, u, Subspace::span(f, n, {w}));
      v = subspace_sum(f, v, Subspace::span(f, n, {w}));
    }
    Subspace s = subspace_sum(f, u, v);
    Subspace m = subspace_intersect(f, u, v);
    EXPECT_EQ(u.dim() + v.dim(), s.dim() + m.dim());
    EXPECT_TRUE(m.is_subspace_of(f, u));
    EXPECT_TRUE(m.is_subspace_of(f, v));
  }
}

TEST(SubspaceOps, ComplementPivotGreedy) {
  PrimeField f(101);
  Subspace u = Subspace::span(f, 3, {{1, 0, 0}});
  Subspace w = Subspace::span(f, 3, {{1, 0, 0}, {0, 1, 0}});
  Subspace c = complement(f, u, w);
  EXPECT_EQ(c, Subspace::span(f, 3, {{0, 1, 0}}));
  EXPECT_TRUE(is_direct_sum(f, {u, c}));
  EXPECT_EQ(subspace_sum(f, u, c), w);
  Subspace outside = Subspace::span(f, 3, {{0, 0, 1}});
  try {
    complement(f, outside, w);
    FAIL() << "expected NotContained";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::not_contained);
  }
}

TEST(SubspaceOps, ComplementProperty) {
  PrimeField f(101);
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    Subspace w = Subspace::row_space(f, random_matrix(rng, 101, 1 + rng() % 6, 7, 0.5));
    std::vector<Vector> gens;
    for (std::size_t i = 0; i < rng() % (w.dim() + 1); ++i) {
      Vector coeffs = random_matrix(rng, 101, 1, w.dim()).row_vector(0);
      gens.push_back(w.combine(f, coeffs));
    }
    Subspace u = Subspace::span(f, 7, gens);
    Subspace c = complement(f, u, w);
    EXPECT_TRUE(subspace_intersect(f, u, c).is_zero());
    EXPECT_EQ(subspace_sum(f, u, c), w);
  }
}

TEST(SubspaceOps, ImageAndPreimage) {
  PrimeField f(101);
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 30; ++trial) {
    Matrix m = random_matrix(rng, 101, 5, 6, 0.4);
    Subspace u = Subspace::row_space(f, random_matrix(rng, 101, 2, 5));
    Subspace pre = preimage(f, m, u);
    EXPECT_TRUE(image(f, m, pre).is_subspace_of(f, u));
    EXPECT_TRUE(kernel(f, m).is_subspace_of(f, pre));
    EXPECT_EQ(pre.dim(), kernel(f, m).dim() + subspace_intersect(f, image(f, m, Subspace::full(6)), u).dim());
  }
}

TEST(SpanBuilder, MatchesSpan) {
  PrimeField f(101);
  std::mt19937_64 rng(9);
  Matrix m = random_matrix(rng, 101, 8, 6, 0.3);
  SpanBuilder b(f, 6);
  std::size_t grew = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) grew += b.insert(m.row(i));
  EXPECT_EQ(grew, rank(f, m));
  EXPECT_EQ(b.finish(), Subspace::row_space(f, m));
  for (std::size_t i = 0; i < m.rows(); ++i) EXPECT_TRUE(b.contains(m.row(i)));
  EXPECT_EQ(Subspace::span(f, 6, b.generators()), b.finish());
}

TEST(Coordinates, RecombineToOriginal) {
  PrimeField f(101);
  std::mt19937_64 rng(13);
  Subspace u = Subspace::row_space(f, random_matrix(rng, 101, 3, 6));
  Vector coeffs{4, 0, 99};
  Vector v = u.combine(f, coeffs);
  EXPECT_EQ(u.coordinates(f, v), coeffs);
  Vector outside = v;
  Subspace whole = Subspace::full(6);
  for (std::size_t j = 0; j < 6 && u.contains(f, outside); ++j) outside = add(f, v, unit_vector(6, j));
  EXPECT_FALSE(u.coordinates(f, outside).has_value());
  EXPECT_TRUE(whole.contains(f, outside));
}

TEST(Field, RejectsComposite) {
  EXPECT_THROW(PrimeField(9), Error);
  EXPECT_NO_THROW(PrimeField(2));
  PrimeField f(101);
  for (Scalar a = 1; a < 101; ++a) EXPECT_EQ(f.mul(a, f.inv(a)), 1u);
  EXPECT_THROW(f.inv(0), Error);
}
