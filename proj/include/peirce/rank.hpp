#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "peirce/algebra.hpp"
#include "peirce/radical.hpp"
#include "peirce/wedderburn.hpp"

namespace peirce {

struct MinimalDecomposition {
  std::vector<Vector> components;
};

struct RankResult {
  Side side = Side::right;
  std::optional<std::size_t> value;  // nullopt means infinite
  std::optional<MinimalDecomposition> witness;

  bool infinite() const noexcept { return !value.has_value(); }
  std::string to_string() const;
};

/// Radical, semisimple quotient and socles of one unital algebra, computed
/// once and shared by the rank queries.
class SocleAnalysis {
 public:
  explicit SocleAnalysis(AlgebraPtr a, std::uint64_t cap = kDefaultBruteCap);

  const SCAlgebra& algebra() const noexcept { return *algebra_; }
  const AlgebraPtr& algebra_ptr() const noexcept { return algebra_; }
  const SemisimpleQuotient& quotient() const noexcept { return sq_; }
  const Subspace& radical() const noexcept { return sq_.radical; }
  const Subspace& right_socle() const noexcept { return right_socle_; }
  const Subspace& left_socle() const noexcept { return left_socle_; }
  bool semiprime() const noexcept { return sq_.radical.is_zero(); }

  /// Composition length of a right ideal K with K J = 0 (left ideal with
  /// J K = 0 for Side::left). Throws Errc::non_integral_length on a bad split.
  std::size_t module_length(const Subspace& k, Side side) const;

  RankResult right_rank(std::span<const Scalar> x) const;
  RankResult left_rank(std::span<const Scalar> x) const;

  /// Orthogonal primitive idempotents summing to 1, computed on first use.
  const std::vector<Vector>& primitive_idempotents(std::mt19937_64& rng) const;

 private:
  AlgebraPtr algebra_;
  SemisimpleQuotient sq_;
  Subspace right_socle_;
  Subspace left_socle_;
  mutable std::optional<std::vector<Vector>> primitives_;
};

Subspace right_socle(const SCAlgebra& a, std::uint64_t cap = kDefaultBruteCap);
Subspace left_socle(const SCAlgebra& a, std::uint64_t cap = kDefaultBruteCap);

RankResult right_rank(AlgebraPtr a, std::span<const Scalar> x, std::uint64_t cap = kDefaultBruteCap);
RankResult left_rank(AlgebraPtr a, std::span<const Scalar> x, std::uint64_t cap = kDefaultBruteCap);

/// x = x_1 + ... + x_n with every x_i of right rank 1 and n = rank(x).
/// Throws Errc::infinite_rank outside the socle.
MinimalDecomposition minimal_right_decomposition(const SocleAnalysis& s, std::span<const Scalar> x,
                                                 std::mt19937_64& rng);

/// Throws Errc::not_a_right_ideal when K is not a right ideal.
bool is_minimal_right_ideal(const SocleAnalysis& s, const Subspace& k);

struct RankOneCheck {
  bool minimal = false;
  bool corner_is_division = false;
};
/// Is eA minimal, and is eAe a division algebra. Throws Errc::not_idempotent
/// for e = 0 or e^2 != e, and Errc::internal if the implication (or, over a
/// semiprime algebra, the equivalence) between the two fails.
RankOneCheck rank_one_corner_check(const SocleAnalysis& s, std::span<const Scalar> e);

/// eAe is a division algebra: zero radical and a single 1 x 1 block.
bool is_division_algebra(AlgebraPtr c, std::uint64_t cap = kDefaultBruteCap);

}  // namespace peirce
