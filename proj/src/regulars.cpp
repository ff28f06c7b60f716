#include "peirce/regulars.hpp"

#include "peirce/error.hpp"

namespace peirce {

namespace {

// Columns x_i -> l b_i r.
Matrix sandwich_matrix(const SCAlgebra& a, std::span<const Scalar> l, std::span<const Scalar> r) {
  const std::size_t d = a.dim();
  Matrix m(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    Vector col = a.multiply3(l, a.basis_element(i), r);
    for (std::size_t k = 0; k < d; ++k) m(k, i) = col[k];
  }
  return m;
}

void require_unital(const SCAlgebra& a) {
  if (!a.is_unital()) throw Error(Errc::not_unital, "regularity is only defined here for unital algebras");
}

}  // namespace

std::optional<InnerInverses> inner_inverses(const SCAlgebra& a, std::span<const Scalar> x) {
  Matrix m = sandwich_matrix(a, x, x);
  auto sol = solve(a.field(), m, x);
  if (!sol) return std::nullopt;
  return InnerInverses{std::move(*sol), kernel(a.field(), m)};
}

bool is_regular(const SCAlgebra& a, std::span<const Scalar> x) { return inner_inverses(a, x).has_value(); }

RegularCertificate inner_inverse(const SCAlgebra& a, std::span<const Scalar> x) {
  require_unital(a);
  auto sols = inner_inverses(a, x);
  if (!sols) throw Error(Errc::not_regular, "a x a = a has no solution");
  RegularCertificate c;
  c.a.assign(x.begin(), x.end());
  c.b = std::move(sols->particular);
  c.e = a.multiply(c.a, c.b);
  c.g = a.multiply(c.b, c.a);
  ensure(verify(a, c), "regularity certificate failed to verify");
  return c;
}

UnitRegularCertificate unit_regular_factorization(const SCAlgebra& a, std::span<const Scalar> x,
                                                  std::mt19937_64& rng, std::uint64_t scan_cap) {
  require_unital(a);
  const PrimeField& f = a.field();
  auto sols = inner_inverses(a, x);
  if (!sols) throw Error(Errc::not_regular, "a x a = a has no solution");

  auto finish = [&](const Vector& v, const Vector& v_inv) {
    UnitRegularCertificate c;
    c.a.assign(x.begin(), x.end());
    c.e = a.multiply(c.a, v);
    c.u = v_inv;
    c.u_inv = v;
    ensure(verify(a, c), "unit-regular certificate failed to verify");
    return c;
  };
  auto try_candidate = [&](const Vector& v) -> std::optional<UnitRegularCertificate> {
    auto inv = a.inverse(v);
    if (!inv) return std::nullopt;
    return finish(v, *inv);
  };

  // the unity works for idempotents, the particular solution often does too
  if (sols->kernel.contains(f, subtract(f, a.one(), sols->particular)))
    if (auto c = try_candidate(a.one())) return *c;
  if (auto c = try_candidate(sols->particular)) return *c;

  const Subspace& k = sols->kernel;
  std::uniform_int_distribution<Scalar> dist(0, f.p() - 1);
  for (int attempt = 0; attempt < kUnitSamples; ++attempt) {
    Vector coeffs(k.dim());
    for (auto& c : coeffs) c = dist(rng);
    if (auto c = try_candidate(add(f, sols->particular, k.combine(f, coeffs)))) return *c;
  }

  std::uint64_t points = 1;
  for (std::size_t i = 0; i < k.dim() && points <= scan_cap; ++i) points *= f.p();
  if (points > scan_cap)
    throw Error(Errc::retries_exhausted, "no invertible inner inverse among " + std::to_string(kUnitSamples) +
                                             " samples; space too large to scan");
  Vector coeffs(k.dim(), 0);
  while (true) {
    if (auto c = try_candidate(add(f, sols->particular, k.combine(f, coeffs)))) return *c;
    std::size_t i = 0;
    while (i < coeffs.size() && ++coeffs[i] == f.p()) coeffs[i++] = 0;
    if (i == coeffs.size()) break;
  }
  throw Error(Errc::not_unit_regular, "no inner inverse is invertible");
}

SquareWitnesses square_witnesses(const SCAlgebra& a, std::span<const Scalar> x) {
  require_unital(a);
  const PrimeField& f = a.field();
  const Vector sq = a.multiply(x, x);
  auto b = solve(f, a.left_mult(sq), x);
  auto c = solve(f, a.right_mult(sq), x);
  if (!b || !c)
    throw Error(Errc::no_witness, std::string("x = ") + (b ? "c x^2" : "x^2 b") + " has no solution");
  return {std::move(*b), std::move(*c)};
}

bool verify(const SCAlgebra& a, const RegularCertificate& c) {
  return a.multiply3(c.a, c.b, c.a) == c.a && a.is_idempotent(c.e) && a.is_idempotent(c.g) &&
         c.e == a.multiply(c.a, c.b) && c.g == a.multiply(c.b, c.a);
}

bool verify(const SCAlgebra& a, const UnitRegularCertificate& c) {
  const Vector& one = a.one();
  return a.is_idempotent(c.e) && a.multiply(c.u, c.u_inv) == one && a.multiply(c.u_inv, c.u) == one &&
         a.multiply(c.e, c.u) == c.a && a.multiply3(c.a, c.u_inv, c.a) == c.a;
}

}  // namespace peirce
