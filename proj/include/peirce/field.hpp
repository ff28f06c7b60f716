#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace peirce {

using Scalar = std::uint32_t;
using Vector = std::vector<Scalar>;

bool is_prime(std::uint64_t n);

/// Arithmetic in GF(p). The modulus is fixed per computation context and
/// restricted to primes below 2^31 so products fit in 64 bits.
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t p);

  std::uint32_t p() const noexcept { return p_; }

  Scalar reduce(std::int64_t v) const noexcept {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    return static_cast<Scalar>(r < 0 ? r + p_ : r);
  }
  Scalar add(Scalar a, Scalar b) const noexcept {
    Scalar s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Scalar sub(Scalar a, Scalar b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  Scalar neg(Scalar a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Scalar mul(Scalar a, Scalar b) const noexcept {
    return static_cast<Scalar>(static_cast<std::uint64_t>(a) * b % p_);
  }
  Scalar pow(Scalar a, std::uint64_t e) const noexcept;
  /// Throws Errc::not_invertible on zero.
  Scalar inv(Scalar a) const;

  bool operator==(const PrimeField&) const = default;

 private:
  std::uint32_t p_;
};

// Dense vector helpers over GF(p).
bool is_zero(std::span<const Scalar> v) noexcept;
Vector add(const PrimeField& f, std::span<const Scalar> x, std::span<const Scalar> y);
Vector subtract(const PrimeField& f, std::span<const Scalar> x, std::span<const Scalar> y);
Vector scale(const PrimeField& f, Scalar c, std::span<const Scalar> x);
/// y += c * x
void axpy(const PrimeField& f, Scalar c, std::span<const Scalar> x, std::span<Scalar> y);
Scalar dot(const PrimeField& f, std::span<const Scalar> x, std::span<const Scalar> y);
Vector unit_vector(std::size_t n, std::size_t i);

}  // namespace peirce
