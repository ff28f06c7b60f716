#include "peirce/radical.hpp"

#include "peirce/error.hpp"

namespace peirce {

namespace {

// G_ij = tr(L_{b_i b_j}) = sum_k c(i, j, k) t_k with t_k = tr(L_{b_k}). The
// unit-adjoined representation has the same traces on A.
Matrix regular_gram(const SCAlgebra& a) {
  const PrimeField& f = a.field();
  const std::size_t d = a.dim();
  Vector t(d, 0);
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t l = 0; l < d; ++l) t[k] = f.add(t[k], a.constant(k, l, l));
  Matrix g(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) g(i, j) = dot(f, a.basis_product(i, j), t);
  return g;
}

std::uint64_t pow_capped(std::uint64_t p, std::size_t d, std::uint64_t cap) {
  std::uint64_t n = 1;
  for (std::size_t i = 0; i < d; ++i) {
    if (n > cap / p) return cap + 1;
    n *= p;
  }
  return n;
}

bool quotient_is_semiprimitive(const SCAlgebra& a, const Subspace& j) {
  if (j.dim() == a.dim()) return true;
  Quotient q = quotient(a, j);
  if (a.p() <= trace_representation_size(*q.algebra)) return true;  // criterion unavailable; skip
  return kernel(a.field(), regular_gram(*q.algebra)).is_zero();
}

Subspace verified(const SCAlgebra& a, Subspace j, const char* method) {
  ensure(is_ideal(a, j, Side::both), std::string(method) + ": radical is not an ideal");
  ensure(is_nilpotent(a, j).nilpotent, std::string(method) + ": radical is not nilpotent");
  ensure(quotient_is_semiprimitive(a, j), std::string(method) + ": quotient has a nonzero radical");
  return j;
}

// Enumerates nonzero vectors of GF(p)^d up to scalars (first nonzero entry 1).
template <typename Visit>
void for_each_projective(std::uint32_t p, std::size_t d, Visit&& visit) {
  for (std::size_t lead = 0; lead < d; ++lead) {
    Vector v(d, 0);
    v[lead] = 1;
    while (true) {
      if (!visit(v)) return;
      std::size_t i = lead + 1;
      while (i < d && ++v[i] == p) v[i++] = 0;
      if (i >= d) break;
    }
  }
}

}  // namespace

std::size_t trace_representation_size(const SCAlgebra& a) { return a.is_unital() ? a.dim() : a.dim() + 1; }

Subspace jacobson_radical(const SCAlgebra& a) {
  const std::size_t size = trace_representation_size(a);
  if (a.p() <= size) throw CharacteristicTooSmall(a.p(), size + 1, "trace-form radical");
  if (a.dim() == 0) return Subspace::zero(0);
  return verified(a, kernel(a.field(), regular_gram(a)), "trace criterion");
}

Subspace jacobson_radical(const MatrixAlgebra& m) {
  const SCAlgebra& a = m.algebra();
  const std::size_t regular = trace_representation_size(a);
  if (m.field().p() > m.n() && (m.n() <= regular || m.field().p() <= regular)) {
    const std::size_t d = m.dim();
    std::vector<Matrix> basis;
    for (std::size_t i = 0; i < d; ++i) basis.push_back(m.basis_matrix(i));
    Matrix g(d, d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) g(i, j) = trace_of_product(m.field(), basis[i], basis[j]);
    return verified(a, kernel(m.field(), g), "ambient trace criterion");
  }
  if (m.field().p() > regular) return jacobson_radical(a);
  throw CharacteristicTooSmall(m.field().p(), std::min(m.n(), regular) + 1, "trace-form radical");
}

Subspace radical_bruteforce(const SCAlgebra& a, std::uint64_t cap) {
  const PrimeField& f = a.field();
  const std::size_t d = a.dim();
  if (pow_capped(a.p(), d, cap) > cap)
    throw Error(Errc::search_space_too_large, "p^d = " + std::to_string(a.p()) + "^" + std::to_string(d) +
                                                  " exceeds the enumeration cap " + std::to_string(cap));
  SpanBuilder found(f, d);
  for_each_projective(a.p(), d, [&](const Vector& x) {
    if (found.contains(x)) return true;
    Subspace ideal = two_sided_ideal(a, {x});
    if (is_nilpotent(a, ideal).nilpotent)
      for (std::size_t i = 0; i < ideal.dim(); ++i) found.insert(ideal.basis_row(i));
    return true;
  });
  Subspace j = found.finish();
  ensure(is_ideal(a, j, Side::both), "enumerated radical is not an ideal");
  ensure(is_nilpotent(a, j).nilpotent, "enumerated radical is not nilpotent");

  // No nonzero coset c + J generates an ideal that is nilpotent modulo J.
  Subspace c = complement(f, j);
  std::vector<Vector> jbasis = j.basis_vectors();
  for_each_projective(a.p(), c.dim(), [&](const Vector& coeffs) {
    std::vector<Vector> gens = jbasis;
    gens.push_back(c.combine(f, coeffs));
    Subspace u = two_sided_ideal(a, gens);
    Subspace power = u;
    while (true) {
      Subspace next = subspace_sum(f, subspace_product(a, power, u), j);
      ensure(!(next == j), "quotient by the enumerated radical has a nilpotent ideal");
      if (next == power) break;
      power = std::move(next);
    }
    return true;
  });
  return j;
}

Subspace radical(const SCAlgebra& a, std::uint64_t cap) {
  try {
    return jacobson_radical(a);
  } catch (const CharacteristicTooSmall&) {
    if (pow_capped(a.p(), a.dim(), cap) <= cap) return radical_bruteforce(a, cap);
    throw;
  }
}

bool is_right_quasi_regular(const SCAlgebra& a, std::span<const Scalar> x) {
  const PrimeField& f = a.field();
  Matrix m = a.left_mult(x);
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) m(i, j) = f.sub(i == j ? 1 : 0, m(i, j));
  Vector rhs(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) rhs[i] = f.neg(x[i]);
  return solve(f, m, rhs).has_value();
}

Subspace radical_of_deformed(const SCAlgebra& a, std::span<const Scalar> s, std::uint64_t cap) {
  Subspace j = radical(a, cap);
  const std::size_t d = a.dim();
  Matrix m(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    Vector col = a.multiply3(s, a.basis_element(i), s);
    for (std::size_t k = 0; k < d; ++k) m(k, i) = col[k];
  }
  return preimage(a.field(), m, j);
}

Subspace radical_of_corner(const SCAlgebra& a, std::span<const Scalar> x, std::span<const Scalar> b,
                           std::uint64_t cap) {
  Vector xbx = a.multiply3(x, b, x);
  if (!std::equal(xbx.begin(), xbx.end(), x.begin(), x.end()))
    throw Error(Errc::not_regular_witness, "a b a != a for the supplied witness");
  Subspace j = radical(a, cap);
  const std::size_t d = a.dim();
  Matrix m(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    Vector col = a.multiply3(x, a.basis_element(i), x);
    for (std::size_t k = 0; k < d; ++k) m(k, i) = col[k];
  }
  return subspace_intersect(a.field(), corner_span(a, x, x), preimage(a.field(), m, j));
}

bool is_semiprime(const SCAlgebra& a, std::uint64_t cap) { return radical(a, cap).is_zero(); }

}  // namespace peirce
