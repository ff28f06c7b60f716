#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace peirce {

/// Failure categories raised by the library. Each maps to a named error of the
/// public contract; `Errc::internal` marks a broken invariant (a bug trap).
enum class Errc {
  dimension_mismatch,
  not_contained,
  associativity_violation,
  algebra_mismatch,
  not_closed,
  characteristic_too_small,
  search_space_too_large,
  not_regular_witness,
  not_semisimple,
  not_unital,
  not_idempotent,
  not_almost_idempotent,
  corner_not_semisimple,
  retries_exhausted,
  non_integral_length,
  not_a_right_ideal,
  not_regular,
  not_regular_square,
  not_unit_regular,
  no_witness,
  not_invertible,
  not_semiprime,
  infinite_rank,
  infinite_square_rank,
  hypothesis_violation,
  parse_error,
  closure_violation,
  invalid_argument,
  internal,
};

std::string_view errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  Errc code() const noexcept { return code_; }
  std::string_view name() const { return errc_name(code_); }

 private:
  Errc code_;
};

class CharacteristicTooSmall : public Error {
 public:
  CharacteristicTooSmall(std::uint32_t p, std::uint64_t needed, const std::string& what);

  std::uint32_t p() const noexcept { return p_; }
  /// Smallest characteristic that would satisfy the precondition.
  std::uint64_t needed() const noexcept { return needed_; }

 private:
  std::uint32_t p_;
  std::uint64_t needed_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// Throws Error(Errc::internal) when `condition` is false.
void ensure(bool condition, const std::string& message);

}  // namespace peirce
