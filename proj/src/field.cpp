#include "peirce/field.hpp"

#include <string>

#include "peirce/error.hpp"

namespace peirce {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= (1u << 31) || !is_prime(p))
    throw Error(Errc::invalid_argument, "modulus " + std::to_string(p) + " is not a prime below 2^31");
}

Scalar PrimeField::pow(Scalar a, std::uint64_t e) const noexcept {
  Scalar result = 1 % p_;
  Scalar base = a % p_;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

Scalar PrimeField::inv(Scalar a) const {
  if (a % p_ == 0) throw Error(Errc::not_invertible, "division by zero in GF(" + std::to_string(p_) + ")");
  return pow(a, p_ - 2);
}

bool is_zero(std::span<const Scalar> v) noexcept {
  for (Scalar x : v)
    if (x != 0) return false;
  return true;
}

Vector add(const PrimeField& f, std::span<const Scalar> x, std::span<const Scalar> y) {
  if (x.size() != y.size()) throw Error(Errc::dimension_mismatch, "vector add: length mismatch");
  Vector r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = f.add(x[i], y[i]);
  return r;
}

Vector subtract(const PrimeField& f, std::span<const Scalar> x, std::span<const Scalar> y) {
  if (x.size() != y.size()) throw Error(Errc::dimension_mismatch, "vector subtract: length mismatch");
  Vector r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = f.sub(x[i], y[i]);
  return r;
}

Vector scale(const PrimeField& f, Scalar c, std::span<const Scalar> x) {
  Vector r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = f.mul(c, x[i]);
  return r;
}

void axpy(const PrimeField& f, Scalar c, std::span<const Scalar> x, std::span<Scalar> y) {
  if (c == 0) return;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] != 0) y[i] = f.add(y[i], f.mul(c, x[i]));
}

Scalar dot(const PrimeField& f, std::span<const Scalar> x, std::span<const Scalar> y) {
  std::uint64_t acc = 0;
  const std::uint64_t p = f.p();
  for (std::size_t i = 0; i < x.size(); ++i) {
    acc += static_cast<std::uint64_t>(x[i]) * y[i];
    if (acc >= (1ull << 62)) acc %= p;
  }
  return static_cast<Scalar>(acc % p);
}

Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v(n, 0);
  v.at(i) = 1;
  return v;
}

}  // namespace peirce
