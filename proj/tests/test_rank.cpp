#include <random>

#include "peirce/generators.hpp"
#include "peirce/oracles.hpp"
#include "peirce/rank.hpp"
#include "test_util.hpp"

using namespace peirce;
using namespace peirce::testing;

namespace {

const PrimeField F101(101);

std::size_t finite(const RankResult& r) {
  EXPECT_FALSE(r.infinite());
  return r.value.value_or(0);
}

void check_decomposition(const SocleAnalysis& s, const Vector& x, const MinimalDecomposition& d) {
  const PrimeField& f = s.algebra().field();
  Vector total = s.algebra().zero();
  for (const auto& c : d.components) {
    EXPECT_FALSE(is_zero(c));
    EXPECT_EQ(finite(s.right_rank(c)), 1u);
    total = add(f, total, c);
  }
  EXPECT_EQ(total, x);
  EXPECT_EQ(d.components.size(), finite(s.right_rank(x)));
}

}  // namespace

TEST(Socle, Examples) {
  MatrixAlgebra m2 = full_matrix_algebra(F101, 2);
  EXPECT_TRUE(right_socle(m2.algebra()).is_full());
  MatrixAlgebra t2 = upper_triangular_algebra(F101, 2);
  EXPECT_EQ(right_socle(t2.algebra()), span_of(t2, {E(2, 1, 2), E(2, 2, 2)}));
  EXPECT_EQ(left_socle(t2.algebra()), span_of(t2, {E(2, 1, 2), E(2, 1, 1)}));
}

TEST(Socle, Paper10AgainstMinimalIdealsAtP3) {
  // the socle is the sum of the minimal right ideals; compare on a small
  // algebra with the same kind of block pattern
  PrimeField f3(3);
  MatrixAlgebra a = structural_matrix_algebra(f3, {1, 2}, {{true, true}, {false, true}});
  EXPECT_EQ(a.dim(), 7u);
  auto minimal = enumerate_minimal_right_ideals(a.algebra(), 1u << 12);
  Subspace sum = Subspace::zero(a.dim());
  for (const auto& k : minimal) sum = subspace_sum(f3, sum, k);
  EXPECT_EQ(right_socle(a.algebra()), sum);
}

TEST(Rank, KnownValues) {
  MatrixAlgebra m2 = full_matrix_algebra(F101, 2);
  SocleAnalysis s2(m2.sc());
  EXPECT_EQ(finite(s2.right_rank(m2.algebra().zero())), 0u);
  EXPECT_EQ(finite(s2.right_rank(m2.algebra().one())), 2u);
  EXPECT_EQ(finite(s2.right_rank(coords(m2, E(2, 1, 2)))), 1u);

  MatrixAlgebra t2 = upper_triangular_algebra(F101, 2);
  SocleAnalysis st(t2.sc());
  RankResult r = st.right_rank(coords(t2, E(2, 1, 1)));
  EXPECT_TRUE(r.infinite());
  EXPECT_EQ(r.to_string(), "infinite");
  EXPECT_EQ(finite(st.left_rank(coords(t2, E(2, 1, 1)))), 1u);
  EXPECT_EQ(finite(st.right_rank(coords(t2, E(2, 2, 2)))), 1u);

  MatrixAlgebra m3 = full_matrix_algebra(F101, 3);
  SocleAnalysis s3(m3.sc());
  Matrix a = add(F101, E(3, 1, 1), E(3, 2, 3));
  EXPECT_EQ(finite(s3.right_rank(coords(m3, a))), 2u);
  EXPECT_EQ(finite(s3.right_rank(coords(m3, multiply(F101, a, a)))), 1u);
  EXPECT_EQ(finite(s3.left_rank(coords(m3, a))), 2u);
}

TEST(Rank, MatrixRankOracle) {
  // in M_n(GF(p)) the rank of an element is its matrix rank
  std::mt19937_64 rng(4);
  MatrixAlgebra m4 = full_matrix_algebra(F101, 4);
  SocleAnalysis s(m4.sc());
  for (int i = 0; i < 20; ++i) {
    Vector x = random_sparse_element(m4.algebra(), rng);
    std::size_t expected = rank(F101, m4.to_matrix(x));
    EXPECT_EQ(finite(s.right_rank(x)), expected);
    EXPECT_EQ(finite(s.left_rank(x)), expected);
  }
}

TEST(Rank, ExtensionFieldBlocks) {
  // over M_2(GF(p^2)) ranks are matrix ranks over the extension
  MatrixAlgebra a = matrix_algebra_over_extension(F101, 2, 2);
  SocleAnalysis s(a.sc());
  EXPECT_EQ(finite(s.right_rank(a.algebra().one())), 2u);
  Matrix e11 = kronecker(F101, E(2, 1, 1), Matrix::identity(2));
  EXPECT_EQ(finite(s.right_rank(coords(a, e11))), 1u);
}

TEST(Rank, TinyCorpusAgreesWithCoveringOracle) {
  for (std::uint32_t p : {2u, 3u}) {
    PrimeField f(p);
    for (const auto& [name, m] : tiny_corpus(f)) {
      SCOPED_TRACE(name + " p=" + std::to_string(p));
      const SCAlgebra& a = m.algebra();
      SocleAnalysis s(m.sc());
      CoveringOracle oracle(a, enumerate_minimal_right_ideals(a));
      for (const auto& x : all_vectors(p, a.dim())) {
        auto expected = oracle.rank(x);
        RankResult r = s.right_rank(x);
        ASSERT_EQ(r.value, expected);
      }
    }
  }
}

TEST(MinimalDecomposition, Examples) {
  std::mt19937_64 rng(1);
  MatrixAlgebra m2 = full_matrix_algebra(F101, 2);
  SocleAnalysis s2(m2.sc());
  Vector one = m2.algebra().one();
  MinimalDecomposition d = minimal_right_decomposition(s2, one, rng);
  check_decomposition(s2, one, d);
  ASSERT_EQ(d.components.size(), 2u);
  for (const auto& c : d.components) EXPECT_TRUE(m2.algebra().is_idempotent(c));
  EXPECT_TRUE(is_zero(m2.algebra().multiply(d.components[0], d.components[1])));

  Vector e12 = coords(m2, E(2, 1, 2));
  MinimalDecomposition d1 = minimal_right_decomposition(s2, e12, rng);
  ASSERT_EQ(d1.components.size(), 1u);
  EXPECT_EQ(d1.components[0], e12);

  MatrixAlgebra t2 = upper_triangular_algebra(F101, 2);
  SocleAnalysis st(t2.sc());
  EXPECT_ERRC(minimal_right_decomposition(st, coords(t2, E(2, 1, 1)), rng), Errc::infinite_rank);
}

TEST(MinimalDecomposition, RadicalElements) {
  // elements of the socle lying in J need the grouping path
  std::mt19937_64 rng(2);
  GeneratedAlgebra g = gen_paper10(F101, 1);
  SocleAnalysis s(g.algebra.sc());
  Matrix m = add(F101, E(10, 1, 9), add(F101, E(10, 2, 10), E(10, 3, 10)));
  Vector x = coords(g.algebra, m);
  ASSERT_TRUE(s.radical().contains(F101, x));
  check_decomposition(s, x, minimal_right_decomposition(s, x, rng));
  EXPECT_EQ(finite(s.right_rank(x)), 2u);
  // a^2 is not in the socle at this size
  EXPECT_TRUE(s.right_rank(coords(g.algebra, g.elements[2].second)).infinite());
  MatrixAlgebra t3 = upper_triangular_algebra(F101, 3);
  SocleAnalysis s3(t3.sc());
  Vector y = coords(t3, add(F101, E(3, 1, 3), scale(F101, 4, E(3, 2, 3))));
  check_decomposition(s3, y, minimal_right_decomposition(s3, y, rng));
}

TEST(MinimalDecomposition, IdempotentsGiveOrthogonalIdempotents) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 15; ++trial) {
    MatrixAlgebra a = random_semisimple(F101, rng, 16);
    const SCAlgebra& alg = a.algebra();
    SocleAnalysis s(a.sc());
    // a random idempotent: a sum of some primitive ones conjugated by a unit
    const auto& prim = s.primitive_idempotents(rng);
    Vector e = alg.zero();
    for (std::size_t i = 0; i < prim.size(); i += 2) e = add(F101, e, prim[i]);
    Vector u;
    do u = random_element(F101, Subspace::full(alg.dim()), rng);
    while (!alg.inverse(u));
    e = alg.multiply3(*alg.inverse(u), e, u);
    ASSERT_TRUE(alg.is_idempotent(e));
    MinimalDecomposition d = minimal_right_decomposition(s, e, rng);
    check_decomposition(s, e, d);
    for (std::size_t i = 0; i < d.components.size(); ++i) {
      EXPECT_TRUE(alg.is_idempotent(d.components[i]));
      for (std::size_t j = 0; j < d.components.size(); ++j)
        if (i != j) EXPECT_TRUE(is_zero(alg.multiply(d.components[i], d.components[j])));
    }
  }
}

TEST(MinimalRightIdeal, Examples) {
  MatrixAlgebra m2 = full_matrix_algebra(F101, 2);
  SocleAnalysis s2(m2.sc());
  const SCAlgebra& a = m2.algebra();
  EXPECT_TRUE(is_minimal_right_ideal(s2, one_sided_ideal(a, {coords(m2, E(2, 1, 1))}, Side::right)));
  EXPECT_FALSE(is_minimal_right_ideal(s2, Subspace::full(4)));
  EXPECT_ERRC(is_minimal_right_ideal(s2, span_of(m2, {E(2, 1, 1)})), Errc::not_a_right_ideal);

  MatrixAlgebra t2 = upper_triangular_algebra(F101, 2);
  SocleAnalysis st(t2.sc());
  EXPECT_TRUE(is_minimal_right_ideal(st, span_of(t2, {E(2, 1, 2)})));
}

TEST(RankOne, CornerChecks) {
  MatrixAlgebra m2 = full_matrix_algebra(F101, 2);
  SocleAnalysis s2(m2.sc());
  RankOneCheck r = rank_one_corner_check(s2, coords(m2, E(2, 1, 1)));
  EXPECT_TRUE(r.minimal);
  EXPECT_TRUE(r.corner_is_division);
  r = rank_one_corner_check(s2, m2.algebra().one());
  EXPECT_FALSE(r.minimal);
  EXPECT_FALSE(r.corner_is_division);

  MatrixAlgebra t2 = upper_triangular_algebra(F101, 2);
  SocleAnalysis st(t2.sc());
  r = rank_one_corner_check(st, coords(t2, E(2, 1, 1)));
  EXPECT_FALSE(r.minimal);
  EXPECT_TRUE(r.corner_is_division);
  EXPECT_ERRC(rank_one_corner_check(st, coords(t2, E(2, 1, 2))), Errc::not_idempotent);
}

TEST(Rank, SemisimpleCornerConsistency) {
  // rank of an idempotent equals the sum of the n_i of its corner
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 10; ++trial) {
    MatrixAlgebra a = random_semisimple(F101, rng, 16);
    SocleAnalysis s(a.sc());
    const auto& prim = s.primitive_idempotents(rng);
    Vector e = a.algebra().zero();
    for (std::size_t i = 0; i < prim.size(); ++i)
      if (rng() % 2) e = add(F101, e, prim[i]);
    if (is_zero(e)) continue;
    WedderburnStructure w = corner_structure_of_idempotent(a.algebra(), e);
    EXPECT_EQ(finite(s.right_rank(e)), w.sum_n());
  }
}
