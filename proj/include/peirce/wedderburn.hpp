#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "peirce/algebra.hpp"
#include "peirce/radical.hpp"

namespace peirce {

/// One simple block M_n(F_q), q = p^e, with its central primitive idempotent.
struct BlockParams {
  std::size_t n = 0;
  std::size_t e = 0;
  Vector z;
  Subspace block;

  std::uint64_t q(std::uint32_t p) const;
};

struct WedderburnStructure {
  std::vector<BlockParams> blocks;
  AlgebraPtr algebra;

  std::size_t sum_n() const;
};

/// Primitive idempotents of a commutative subalgebra C of A (given as a
/// subspace with unity `one`) whose Frobenius-fixed part is split, that is
/// spanned by idempotents. Uses the fact that z -> z^p is linear on C.
std::vector<Vector> split_commutative(const SCAlgebra& a, const Subspace& c, const Vector& one);

/// Block decomposition of a unital semisimple algebra. Throws
/// Errc::not_semisimple when J(A) != 0 and Errc::not_unital without unity.
WedderburnStructure wedderburn_structure(AlgebraPtr a, std::uint64_t cap = kDefaultBruteCap);

/// Structure of eAe (blocks in eAe-coordinates). Throws Errc::not_idempotent
/// and Errc::corner_not_semisimple.
WedderburnStructure corner_structure_of_idempotent(const SCAlgebra& a, std::span<const Scalar> e,
                                                   std::uint64_t cap = kDefaultBruteCap);

/// Idempotent g of the block with dim(gAg) = e. Needs A semisimple.
Vector primitive_idempotent_in_block(const SCAlgebra& a, const WedderburnStructure& s, std::size_t block,
                                     std::mt19937_64& rng);

/// Idempotent congruent to x modulo the nilpotent ideal N, by x <- 3x^2 - 2x^3.
/// Throws Errc::not_almost_idempotent when x^2 - x is not in N.
Vector lift_idempotent(const SCAlgebra& a, const Subspace& n, std::span<const Scalar> x);

/// J(A), A/J(A) and the Wedderburn blocks of A/J(A), with preimages of the
/// central idempotents in A.
struct SemisimpleQuotient {
  Subspace radical;
  Quotient quotient;
  WedderburnStructure structure;
  std::vector<Vector> central_lifts;
};
SemisimpleQuotient semisimple_quotient(const SCAlgebra& a, std::uint64_t cap = kDefaultBruteCap);

/// Number of primitive idempotents an idempotent e splits into: the length of
/// eA / eJ.
std::size_t idempotent_length(const SCAlgebra& a, const SemisimpleQuotient& sq, std::span<const Scalar> e);

/// Orthogonal primitive idempotents of a unital A summing to the unity.
std::vector<Vector> complete_primitive_idempotents(const SCAlgebra& a, const SemisimpleQuotient& sq,
                                                   std::mt19937_64& rng);

/// Splits idempotent e into orthogonal idempotents of smaller length using a
/// random element of eAe. Returns {e} when the sample did not split it.
std::vector<Vector> split_idempotent_once(const SCAlgebra& a, std::span<const Scalar> e, std::mt19937_64& rng);

/// Idempotent g with K = gA for a minimal right ideal K with K^2 != 0:
/// solves k g = k with g in K for some k with kK != 0.
Vector brauer_idempotent(const SCAlgebra& a, const Subspace& k);

Vector random_element(const PrimeField& f, const Subspace& u, std::mt19937_64& rng);

}  // namespace peirce
