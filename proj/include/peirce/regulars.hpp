#pragma once

#include <cstdint>
#include <optional>
#include <random>

#include "peirce/algebra.hpp"

namespace peirce {

/// a b a = a; e = ab and g = ba are idempotents.
struct RegularCertificate {
  Vector a, b, e, g;
};

/// a = e u with e idempotent and u invertible.
struct UnitRegularCertificate {
  Vector a, e, u, u_inv;
};

/// The affine space {x : a x a = a}, as a particular solution plus the kernel
/// of x -> a x a. nullopt when a is not regular.
struct InnerInverses {
  Vector particular;
  Subspace kernel;
};
std::optional<InnerInverses> inner_inverses(const SCAlgebra& a, std::span<const Scalar> x);

bool is_regular(const SCAlgebra& a, std::span<const Scalar> x);
/// Throws Errc::not_regular.
RegularCertificate inner_inverse(const SCAlgebra& a, std::span<const Scalar> x);

constexpr int kUnitSamples = 256;
constexpr std::uint64_t kUnitScanCap = std::uint64_t{1} << 20;

/// Searches the inner inverses of x for an invertible v; then e = x v and
/// u = v^{-1}. Throws Errc::not_regular, Errc::not_unit_regular (exhaustive
/// search found nothing) or Errc::retries_exhausted (search inconclusive).
UnitRegularCertificate unit_regular_factorization(const SCAlgebra& a, std::span<const Scalar> x,
                                                  std::mt19937_64& rng, std::uint64_t scan_cap = kUnitScanCap);

/// b, c with x = x^2 b = c x^2. Throws Errc::no_witness.
struct SquareWitnesses {
  Vector b, c;
};
SquareWitnesses square_witnesses(const SCAlgebra& a, std::span<const Scalar> x);

bool verify(const SCAlgebra& a, const RegularCertificate& c);
bool verify(const SCAlgebra& a, const UnitRegularCertificate& c);

}  // namespace peirce
