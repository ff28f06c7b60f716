#include "peirce/error.hpp"

namespace peirce {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::dimension_mismatch: return "DimensionMismatch";
    case Errc::not_contained: return "NotContained";
    case Errc::associativity_violation: return "AssociativityViolation";
    case Errc::algebra_mismatch: return "AlgebraMismatch";
    case Errc::not_closed: return "NotClosed";
    case Errc::characteristic_too_small: return "CharacteristicTooSmall";
    case Errc::search_space_too_large: return "SearchSpaceTooLarge";
    case Errc::not_regular_witness: return "NotRegularWitness";
    case Errc::not_semisimple: return "NotSemisimple";
    case Errc::not_unital: return "NotUnital";
    case Errc::not_idempotent: return "NotIdempotent";
    case Errc::not_almost_idempotent: return "NotAlmostIdempotent";
    case Errc::corner_not_semisimple: return "CornerNotSemisimple";
    case Errc::retries_exhausted: return "RetriesExhausted";
    case Errc::non_integral_length: return "NonIntegralLength";
    case Errc::not_a_right_ideal: return "NotARightIdeal";
    case Errc::not_regular: return "NotRegular";
    case Errc::not_regular_square: return "NotRegularSquare";
    case Errc::not_unit_regular: return "NotUnitRegular";
    case Errc::no_witness: return "NoWitness";
    case Errc::not_invertible: return "NotInvertible";
    case Errc::not_semiprime: return "NotSemiprime";
    case Errc::infinite_rank: return "InfiniteRank";
    case Errc::infinite_square_rank: return "InfiniteSquareRank";
    case Errc::hypothesis_violation: return "HypothesisViolation";
    case Errc::parse_error: return "ParseError";
    case Errc::closure_violation: return "ClosureViolation";
    case Errc::invalid_argument: return "InvalidArgument";
    case Errc::internal: return "InternalInconsistency";
  }
  return "Unknown";
}

CharacteristicTooSmall::CharacteristicTooSmall(std::uint32_t p, std::uint64_t needed,
                                               const std::string& what)
    : Error(Errc::characteristic_too_small,
            what + ": characteristic " + std::to_string(p) + " too small, need p >= " +
                std::to_string(needed)),
      p_(p),
      needed_(needed) {}

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : Error(Errc::parse_error,
            "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

void ensure(bool condition, const std::string& message) {
  if (!condition) throw Error(Errc::internal, message);
}

}  // namespace peirce
