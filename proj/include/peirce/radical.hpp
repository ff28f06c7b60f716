#pragma once

#include <cstdint>

#include "peirce/algebra.hpp"

namespace peirce {

inline constexpr std::uint64_t kDefaultBruteCap = 1ull << 20;

/// Trace-form radical {x : tr(xy) = 0 for all y}, computed in the left-regular
/// representation (size d, or d + 1 when A lacks a unity). Valid only when p
/// exceeds the representation size; otherwise throws CharacteristicTooSmall.
/// The result is checked to be a nilpotent ideal with semiprimitive quotient.
Subspace jacobson_radical(const SCAlgebra& a);
/// Same criterion on the ambient matrices when that representation is the
/// smaller valid one.
Subspace jacobson_radical(const MatrixAlgebra& a);

/// Span of all x whose two-sided ideal is nilpotent, by enumerating A.
/// Throws Errc::search_space_too_large when p^d exceeds `cap`.
Subspace radical_bruteforce(const SCAlgebra& a, std::uint64_t cap = kDefaultBruteCap);

/// jacobson_radical, falling back to enumeration when the characteristic is
/// too small and p^d <= cap.
Subspace radical(const SCAlgebra& a, std::uint64_t cap = kDefaultBruteCap);

/// y - x y = -x has a solution.
bool is_right_quasi_regular(const SCAlgebra& a, std::span<const Scalar> x);

/// {x : s x s in J(A)}, the radical of the deformation A_s.
Subspace radical_of_deformed(const SCAlgebra& a, std::span<const Scalar> s, std::uint64_t cap = kDefaultBruteCap);

/// {x in aAa : a x a in J(A)} in A-coordinates, given aba = a. Throws
/// Errc::not_regular_witness otherwise.
Subspace radical_of_corner(const SCAlgebra& a, std::span<const Scalar> x, std::span<const Scalar> b,
                           std::uint64_t cap = kDefaultBruteCap);

bool is_semiprime(const SCAlgebra& a, std::uint64_t cap = kDefaultBruteCap);

/// Size of the faithful representation used by the trace criterion.
std::size_t trace_representation_size(const SCAlgebra& a);

}  // namespace peirce
