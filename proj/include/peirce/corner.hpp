#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "peirce/algebra.hpp"
#include "peirce/rank.hpp"
#include "peirce/regulars.hpp"
#include "peirce/wedderburn.hpp"

namespace peirce {

/// A named identity that was recomputed, with its outcome.
struct Certificate {
  std::string name;
  bool passed = false;
  std::string detail;
};

bool all_passed(const std::vector<Certificate>& certs);

/// aAa and (eAe)_{eae} for a regular a with witness b, e = ab.
struct DeformedPresentation {
  RegularCertificate cert;
  Subalgebra e_corner;  // eAe inside A
  Vector s;             // eae in eAe coordinates
  AlgebraPtr deformed;  // (eAe)_s
  Subalgebra a_corner;  // aAa inside A
};

/// x -> xb from aAa to (eAe)_{eae}, and x -> xa back. Both maps are verified
/// multiplicative and mutually inverse.
struct CornerIso {
  DeformedPresentation pres;
  AlgebraMap to_deformed;
  AlgebraMap to_corner;
};
CornerIso corner_iso_deformed(const SCAlgebra& a, const RegularCertificate& cert);

/// The three isomorphisms for invertible u, v, an element s and an idempotent e:
/// twist: A_{usv} -> A_s, x -> vxu;
/// peirce: A_e -> the 3 x 3 Peirce presentation (coordinates of (1-e)xe,
///   (1-e)x(1-e), exe, ex(1-e), in that order);
/// quotient: A_e / J(A_e) -> eAe / J(eAe), induced by x -> exe.
struct DeformationIsos {
  AlgebraMap twist;
  AlgebraMap peirce;
  AlgebraMap quotient;
  bool verified = false;
};
/// Throws Errc::not_invertible and Errc::not_idempotent.
DeformationIsos deformation_isos(const SCAlgebra& a, std::span<const Scalar> u, std::span<const Scalar> v,
                   std::span<const Scalar> s, std::span<const Scalar> e, std::uint64_t cap = kDefaultBruteCap);

/// J(aAa) via axa in J(A), the structure of aAa / J(aAa), and a cross-check
/// against the radical of aAa computed directly. Needs only a regular.
struct CornerQuotient {
  Subalgebra corner;
  Subspace radical;  // in A coordinates
  Quotient quotient;
  WedderburnStructure structure;
};
CornerQuotient corner_quotient_structure(const SCAlgebra& a, std::span<const Scalar> x,
                                         std::span<const Scalar> b, std::uint64_t cap = kDefaultBruteCap);

/// For semiprime A: J(aAa) = {x : axa = 0}, aAa / J(aAa) from the blocks of
/// fAf, and the induced map x -> a x a v^{-1} with a^2 = f v.
struct ACornerStructure {
  CornerQuotient corner;
  std::size_t rank_a2 = 0;
  Vector f, v;  // a^2 = f v, f = efe
  Subalgebra f_corner;
  AlgebraMap induced;  // aAa -> fAf
  std::vector<Certificate> certificates;
};
/// Throws Errc::not_semiprime and Errc::infinite_rank.
ACornerStructure a_corner_structure(const SocleAnalysis& s, std::span<const Scalar> x, std::mt19937_64& rng);

/// The five conditions of the semiprime corner characterization.
struct SemiprimeEquivalences {
  bool corner_semiprime = false;    // (i)
  bool ranks_equal = false;         // (ii) rank a^2 = rank a
  bool square_witnesses = false;    // (iii)
  bool radical_zero = false;        // (iv) {x in aAa : axa = 0} = 0
  bool matrix_form = false;         // (v)
  std::size_t rank_a = 0, rank_a2 = 0;
  std::optional<SquareWitnesses> witnesses;

  bool agree() const;
};
/// Throws Errc::not_semiprime and Errc::infinite_rank.
SemiprimeEquivalences semiprime_equivalences(const SocleAnalysis& s, std::span<const Scalar> x);

struct CornerIdeal {
  Subspace ideal;      // inside aAa, A coordinates
  Subspace radical;    // N_j, A coordinates
  Subspace ideal_e;    // inside (eAe)_f, eAe coordinates
  Subspace radical_e;
  std::size_t n = 0;   // I_j / N_j = M_n(GF(p^e))
  std::size_t e = 0;
  Vector idempotent;   // f_j, A coordinates
};

struct CornerDecomposition {
  AlgebraPtr algebra;
  Vector a, b, c, e, f, w, f0;  // A coordinates
  Subalgebra e_corner;
  AlgebraPtr deformed;          // (eAe)_f in eAe coordinates
  Subalgebra a_corner;
  Subspace i0, i0_e;
  std::vector<CornerIdeal> ideals;
  std::size_t rank_a2 = 0;
  AlgebraMap back_map;          // (eAe)_f -> aAa, y -> w^{-1} y a
  std::vector<Certificate> certificates;

  std::size_t k() const noexcept { return ideals.size(); }
  bool certified() const { return all_passed(certificates); }
};

/// Throws Errc::not_regular, Errc::not_regular_square and
/// Errc::infinite_square_rank.
CornerDecomposition main_decompose(const SocleAnalysis& s, std::span<const Scalar> x, std::mt19937_64& rng);

/// The data the converse consumes: ideals of aAa with their claimed radicals
/// and block parameters, all in A coordinates.
struct ConverseInput {
  Vector a;
  Subspace i0;
  std::vector<Subspace> ideals;
  std::vector<Subspace> radicals;
  std::vector<std::pair<std::size_t, std::size_t>> blocks;  // (n_j, e_j)
};
ConverseInput converse_input(const CornerDecomposition& d);

struct ConverseReport {
  std::vector<Vector> lifted;  // g_j
  std::size_t rank_a2 = 0;     // sum of n_j
  std::vector<Certificate> certificates;
};
/// Throws Errc::not_semiprime, and Errc::hypothesis_violation naming the
/// first condition that fails.
ConverseReport verify_converse(const SocleAnalysis& s, const ConverseInput& in);

struct ShapeEntry {
  std::size_t m = 0, n = 0, e = 0;
};
struct ShapeReport {
  std::vector<ShapeEntry> live;  // blocks meeting f, matched to I_1..I_k
  std::vector<ShapeEntry> dead;  // the blocks of S (n = 0)
  std::size_t rank_a = 0;

  std::size_t total() const;
};
/// Throws Errc::infinite_rank when a is outside the right socle.
ShapeReport corner_shapes(const SocleAnalysis& s, const CornerDecomposition& d);

}  // namespace peirce
