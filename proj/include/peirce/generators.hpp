#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "peirce/algebra.hpp"

namespace peirce {

Matrix kronecker(const PrimeField& f, const Matrix& a, const Matrix& b);
Matrix block_diagonal(const std::vector<Matrix>& blocks);

/// Monic irreducible polynomial of degree 1..4 over GF(p), coefficients from
/// the constant term up (leading 1 included). Smallest in lexicographic order.
Vector irreducible_polynomial(const PrimeField& f, std::size_t degree);
Matrix companion_matrix(const PrimeField& f, const Vector& monic);

MatrixAlgebra full_matrix_algebra(const PrimeField& f, std::size_t n);
MatrixAlgebra upper_triangular_algebra(const PrimeField& f, std::size_t n);
/// GF(p^e) realized as polynomials in a companion matrix, inside M_e.
MatrixAlgebra extension_field_algebra(const PrimeField& f, std::size_t e);
/// M_n(GF(p^e)) inside M_{ne}.
MatrixAlgebra matrix_algebra_over_extension(const PrimeField& f, std::size_t n, std::size_t e);
/// Direct product realized block-diagonally.
MatrixAlgebra block_diagonal_algebra(const std::vector<MatrixAlgebra>& parts);
/// Structural matrix algebra: block (i, j) is full when `related[i][j]`.
MatrixAlgebra structural_matrix_algebra(const PrimeField& f, const std::vector<std::size_t>& block_sizes,
                                        const std::vector<std::vector<bool>>& related);
/// P A P^{-1}.
MatrixAlgebra conjugate(const MatrixAlgebra& a, const Matrix& p);
Matrix random_invertible(const PrimeField& f, std::size_t n, std::mt19937_64& rng);

struct GeneratedAlgebra {
  std::string name;
  std::string comment;  // e.g. "gen paper10 d_block=1"
  MatrixAlgebra algebra;
  std::vector<std::pair<std::string, Matrix>> elements;
};

/// Smallest admissible characteristic for a named generator (0 when any prime works).
std::uint64_t generator_min_prime(const std::string& name, std::size_t d_block);

GeneratedAlgebra gen_t2(const PrimeField& f);
GeneratedAlgebra gen_m3(const PrimeField& f);
GeneratedAlgebra gen_paper10(const PrimeField& f, std::size_t d_block = 1);
/// Block supports of aRa and of the three summands displayed next to the
/// paper10 algebra, one string per block row ('E' marks a full d x d block).
/// The subspaces live in the coordinates of `r`, which must be gen_paper10's
/// algebra for the same d_block.
struct Paper10Patterns {
  Subspace corner, i0, i1, i2;
};
Paper10Patterns paper10_patterns(const MatrixAlgebra& r, std::size_t d_block);
Subspace block_pattern(const MatrixAlgebra& r, std::size_t d_block, const std::vector<std::string>& rows);

GeneratedAlgebra gen_remark(const PrimeField& f);
GeneratedAlgebra gen_random(const PrimeField& f, std::uint64_t seed);
/// Dispatches on name; throws CharacteristicTooSmall when p is below the
/// generator's bound and Errc::invalid_argument for unknown names.
GeneratedAlgebra generate(const std::string& name, std::uint32_t p, std::size_t d_block, std::uint64_t seed);

enum class RandomKind { semisimple, triangular, deformed };
std::string_view kind_name(RandomKind k);

/// Random semisimple algebra: blocks M_n(GF(p^e)), e <= 3, conjugated.
MatrixAlgebra random_semisimple(const PrimeField& f, std::mt19937_64& rng, std::size_t max_dim = 20);
/// Random structural matrix algebra (transitive block relation), conjugated.
MatrixAlgebra random_triangular(const PrimeField& f, std::mt19937_64& rng, std::size_t max_dim = 20);
/// Unital algebra of the requested kind in structure-constant form; the
/// deformed kind is A_u for a random unit u of a random semisimple or
/// triangular A.
AlgebraPtr random_algebra(const PrimeField& f, std::mt19937_64& rng, RandomKind kind, std::size_t max_dim = 20);

/// Small unital algebras (dim <= 6) over any prime, named, for exhaustive
/// oracle checks at p = 2 and 3.
std::vector<std::pair<std::string, MatrixAlgebra>> tiny_corpus(const PrimeField& f);

/// Random element, sparse with probability 1/2 so that singular and
/// structured elements appear often.
Vector random_sparse_element(const SCAlgebra& a, std::mt19937_64& rng);

}  // namespace peirce
