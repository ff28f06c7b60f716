#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "peirce/algebra.hpp"

namespace peirce {

/// Every minimal right ideal of A, found by enumerating cyclic right ideals
/// xA and keeping those generated by each of their nonzero elements.
/// Throws Errc::search_space_too_large when p^d exceeds cap.
std::vector<Subspace> enumerate_minimal_right_ideals(const SCAlgebra& a, std::uint64_t cap = 1u << 16);

/// Least number of the given minimal right ideals whose sum contains x;
/// nullopt when no finite sum does. The distinct sums of n minimal ideals are
/// tabulated once per n.
class CoveringOracle {
 public:
  CoveringOracle(const SCAlgebra& a, std::vector<Subspace> minimal);

  std::optional<std::size_t> rank(std::span<const Scalar> x) const;
  const std::vector<Subspace>& minimal() const noexcept { return minimal_; }

 private:
  PrimeField field_;
  std::vector<Subspace> minimal_;
  std::vector<std::vector<Subspace>> levels_;  // levels_[n-1]: new sums of n ideals
};

/// J(A) by its elementwise description: x lies in J(A) exactly when x(y + c)
/// is nilpotent for all y in A and scalars c, that is xy and x + xy are
/// nilpotent for all y. Enumerates A x A.
Subspace nil_radical_oracle(const SCAlgebra& a, std::uint64_t cap = 1u << 12);

/// All two-sided ideals of A by enumeration of sums of principal ideals.
std::vector<Subspace> enumerate_ideals(const SCAlgebra& a, std::uint64_t cap = 1u << 16);

}  // namespace peirce
