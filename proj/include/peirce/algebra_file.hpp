#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "peirce/algebra.hpp"
#include "peirce/generators.hpp"

namespace peirce {

/// Text form of a matrix algebra:
///
///   algebra p=<prime> n=<int> dim=<int>
///   basis: <n*n integers>                      (dim lines)
///   element <label>: matrix <n*n integers>
///   element <label>: coords <dim integers>     (over the listed basis)
///
/// `#` starts a comment. Full-line comments are kept and written back after
/// the header line.
struct AlgebraFile {
  struct Named {
    std::string label;
    bool is_matrix = true;
    Vector values;
    std::size_t line = 0;
  };

  std::uint32_t p = 0;
  std::size_t n = 0;
  std::size_t dim = 0;
  std::vector<std::string> comments;  // without the leading '#'
  std::vector<Matrix> basis;
  std::vector<std::size_t> basis_lines;
  std::vector<Named> elements;
};

/// Syntax only. Throws ParseError with a 1-based line and column.
AlgebraFile read_algebra_text(std::string_view text);

struct LoadedAlgebra {
  AlgebraFile file;
  MatrixAlgebra algebra;
  std::vector<std::pair<std::string, Vector>> elements;  // algebra coordinates

  /// Throws Errc::invalid_argument for an unknown label.
  const Vector& element(const std::string& label) const;
};

/// Parses and validates: independent basis (ParseError), closure
/// (Errc::closure_violation) and named elements inside the span (ParseError).
LoadedAlgebra load_algebra_text(std::string_view text);
/// Same, from a file. Throws Errc::invalid_argument when it cannot be read.
LoadedAlgebra load_algebra_file(const std::string& path);

std::string serialize(const AlgebraFile& file);

/// File form of a generated algebra: canonical basis, elements as matrices,
/// the generator comment on the second line.
AlgebraFile to_file(const GeneratedAlgebra& g);

}  // namespace peirce
