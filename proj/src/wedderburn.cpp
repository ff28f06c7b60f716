#include "peirce/wedderburn.hpp"

#include <algorithm>
#include <cmath>

#include "peirce/error.hpp"

namespace peirce {

namespace {

constexpr int kMaxRetries = 64;

bool is_scalar_multiple(const PrimeField& f, std::span<const Scalar> x, std::span<const Scalar> eta) {
  std::size_t lead = 0;
  while (lead < eta.size() && eta[lead] == 0) ++lead;
  if (lead == eta.size()) return is_zero(x);
  const Scalar lambda = f.mul(x[lead], f.inv(eta[lead]));
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] != f.mul(lambda, eta[i])) return false;
  return true;
}

// Refines idempotent eta until x acts by a scalar on every piece. x must lie
// in a commutative subalgebra where every element satisfies z^p = z.
void split_by(const SCAlgebra& a, const Vector& eta, const Vector& x, std::vector<Vector>& out) {
  const PrimeField& f = a.field();
  Vector xe = a.multiply(x, eta);
  if (is_scalar_multiple(f, xe, eta)) {
    out.push_back(eta);
    return;
  }
  Vector h;
  if (f.p() == 2) {
    h = xe;
  } else {
    const Scalar half = f.inv(2);
    for (Scalar delta = 0; delta < f.p(); ++delta) {
      Vector shifted = xe;
      axpy(f, delta, eta, shifted);
      Vector y = a.power(shifted, (f.p() - 1) / 2);
      Vector cand = scale(f, half, add(f, a.multiply(y, y), y));
      if (!is_zero(cand) && cand != eta) {
        h = std::move(cand);
        break;
      }
    }
    ensure(!h.empty(), "no shift separates the eigenvalues of a split element");
  }
  split_by(a, h, x, out);
  split_by(a, subtract(f, eta, h), x, out);
}

std::size_t exact_sqrt(std::size_t v) {
  std::size_t r = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(v))));
  while (r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r * r == v ? r : 0;
}

bool block_less(const BlockParams& x, const BlockParams& y) {
  if (x.n != y.n) return x.n < y.n;
  if (x.e != y.e) return x.e < y.e;
  return x.block.basis().entries() < y.block.basis().entries();
}

WedderburnStructure structure_of_semisimple(AlgebraPtr ap) {
  const SCAlgebra& a = *ap;
  const PrimeField& f = a.field();
  WedderburnStructure out;
  out.algebra = ap;
  if (a.dim() == 0) return out;
  Subspace z = centre(a);
  std::vector<Vector> idems = split_commutative(a, z, a.one());
  for (auto& zi : idems) {
    BlockParams b;
    b.block = image(f, a.right_mult(zi), Subspace::full(a.dim()));
    b.e = sandwich(a, zi, z, a.one()).dim();
    ensure(b.e > 0 && b.block.dim() % b.e == 0, "block dimension is not a multiple of its centre dimension");
    b.n = exact_sqrt(b.block.dim() / b.e);
    ensure(b.n > 0, "block dimension over its centre is not a square");
    b.z = std::move(zi);
    out.blocks.push_back(std::move(b));
  }
  std::sort(out.blocks.begin(), out.blocks.end(), block_less);
  return out;
}

}  // namespace

std::uint64_t BlockParams::q(std::uint32_t p) const {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < e; ++i) r *= p;
  return r;
}

std::size_t WedderburnStructure::sum_n() const {
  std::size_t s = 0;
  for (const auto& b : blocks) s += b.n;
  return s;
}

Vector random_element(const PrimeField& f, const Subspace& u, std::mt19937_64& rng) {
  std::uniform_int_distribution<Scalar> dist(0, f.p() - 1);
  Vector coeffs(u.dim());
  for (auto& c : coeffs) c = dist(rng);
  return u.combine(f, coeffs);
}

std::vector<Vector> split_commutative(const SCAlgebra& a, const Subspace& c, const Vector& one) {
  const PrimeField& f = a.field();
  const std::size_t k = c.dim();
  if (k == 0) return {};
  Matrix frob(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    auto coords = c.coordinates(f, a.power(c.basis_row(i), f.p()));
    ensure(coords.has_value(), "subalgebra is not closed under powers");
    for (std::size_t r = 0; r < k; ++r) frob(r, i) = f.sub((*coords)[r], r == i ? 1 : 0);
  }
  Subspace fixed_coords = kernel(f, frob);
  std::vector<Vector> fixed;
  for (std::size_t i = 0; i < fixed_coords.dim(); ++i) fixed.push_back(c.combine(f, fixed_coords.basis_row(i)));

  std::vector<Vector> idems{one};
  for (const auto& b : fixed) {
    std::vector<Vector> next;
    for (const auto& eta : idems) split_by(a, eta, b, next);
    idems = std::move(next);
  }
  ensure(idems.size() == fixed.size(), "Frobenius-fixed space is not spanned by idempotents");
  return idems;
}

WedderburnStructure wedderburn_structure(AlgebraPtr a, std::uint64_t cap) {
  if (!a->is_unital()) throw Error(Errc::not_unital, "Wedderburn decomposition needs a unital algebra");
  if (!radical(*a, cap).is_zero()) throw Error(Errc::not_semisimple, "algebra has a nonzero Jacobson radical");
  return structure_of_semisimple(std::move(a));
}

WedderburnStructure corner_structure_of_idempotent(const SCAlgebra& a, std::span<const Scalar> e,
                                                   std::uint64_t cap) {
  if (!a.is_idempotent(e)) throw Error(Errc::not_idempotent, "corner structure needs an idempotent");
  Subalgebra corner = corner_subalgebra(a, e);
  if (!radical(*corner.algebra, cap).is_zero())
    throw Error(Errc::corner_not_semisimple, "eAe has a nonzero Jacobson radical");
  return structure_of_semisimple(corner.algebra);
}

Vector lift_idempotent(const SCAlgebra& a, const Subspace& n, std::span<const Scalar> x) {
  const PrimeField& f = a.field();
  Vector g(x.begin(), x.end());
  Vector sq = a.multiply(g, g);
  if (!n.contains(f, subtract(f, sq, g))) throw Error(Errc::not_almost_idempotent, "x^2 - x is not in N");
  for (int round = 0; round < kMaxRetries && sq != g; ++round) {
    Vector cube = a.multiply(sq, g);
    g = subtract(f, scale(f, 3, sq), scale(f, 2, cube));
    sq = a.multiply(g, g);
  }
  ensure(sq == g, "idempotent lifting did not converge; N is not nilpotent");
  return g;
}

SemisimpleQuotient semisimple_quotient(const SCAlgebra& a, std::uint64_t cap) {
  if (!a.is_unital()) throw Error(Errc::not_unital, "semisimple quotient needs a unital algebra");
  SemisimpleQuotient sq;
  sq.radical = radical(a, cap);
  sq.quotient = quotient(a, sq.radical, "semisimple quotient");
  sq.structure = structure_of_semisimple(sq.quotient.algebra);
  for (const auto& b : sq.structure.blocks) sq.central_lifts.push_back(sq.quotient.lift(a.field(), b.z));
  return sq;
}

std::size_t idempotent_length(const SCAlgebra& a, const SemisimpleQuotient& sq, std::span<const Scalar> e) {
  const SCAlgebra& s = *sq.quotient.algebra;
  Vector ebar = sq.quotient.project(a.field(), e);
  std::size_t total = 0;
  for (const auto& b : sq.structure.blocks) {
    const std::size_t dim = sandwich(s, ebar, Subspace::full(s.dim()), b.z).dim();
    ensure(dim % (b.n * b.e) == 0, "module dimension is not a multiple of the simple module dimension");
    total += dim / (b.n * b.e);
  }
  return total;
}

std::vector<Vector> split_idempotent_once(const SCAlgebra& a, std::span<const Scalar> e, std::mt19937_64& rng) {
  const PrimeField& f = a.field();
  Vector ev(e.begin(), e.end());
  Vector x = a.multiply3(ev, random_element(f, Subspace::full(a.dim()), rng), ev);
  SpanBuilder powers(f, a.dim());
  powers.insert(ev);
  Vector pw = x;
  while (powers.insert(pw)) pw = a.multiply(pw, x);
  return split_commutative(a, powers.finish(), ev);
}

std::vector<Vector> complete_primitive_idempotents(const SCAlgebra& a, const SemisimpleQuotient& sq,
                                                   std::mt19937_64& rng) {
  std::vector<Vector> done;
  std::vector<std::pair<Vector, std::size_t>> todo;
  todo.emplace_back(a.one(), idempotent_length(a, sq, a.one()));
  while (!todo.empty()) {
    auto [eps, len] = std::move(todo.back());
    todo.pop_back();
    if (len == 0) continue;
    if (len == 1) {
      done.push_back(std::move(eps));
      continue;
    }
    bool split = false;
    for (int attempt = 0; attempt < kMaxRetries && !split; ++attempt) {
      std::vector<Vector> parts = split_idempotent_once(a, eps, rng);
      if (parts.size() < 2) continue;
      for (auto& part : parts) {
        std::size_t l = idempotent_length(a, sq, part);
        todo.emplace_back(std::move(part), l);
      }
      split = true;
    }
    if (!split) throw Error(Errc::retries_exhausted, "could not split an idempotent of length " + std::to_string(len));
  }
  return done;
}

Vector brauer_idempotent(const SCAlgebra& a, const Subspace& k) {
  const PrimeField& f = a.field();
  for (std::size_t i = 0; i < k.dim(); ++i) {
    const Vector kv = k.basis_vector(i);
    Matrix sys(a.dim(), k.dim());
    bool nonzero = false;
    for (std::size_t j = 0; j < k.dim(); ++j) {
      Vector col = a.multiply(kv, k.basis_row(j));
      nonzero = nonzero || !is_zero(col);
      for (std::size_t r = 0; r < a.dim(); ++r) sys(r, j) = col[r];
    }
    if (!nonzero) continue;
    auto c = solve(f, sys, kv);
    ensure(c.has_value(), "k g = k has no solution in a minimal right ideal");
    Vector g = k.combine(f, *c);
    ensure(a.is_idempotent(g), "Brauer solution is not idempotent; right ideal is not minimal");
    return g;
  }
  throw Error(Errc::internal, "right ideal squares to zero; no idempotent generator");
}

Vector primitive_idempotent_in_block(const SCAlgebra& a, const WedderburnStructure& s, std::size_t block,
                                     std::mt19937_64& rng) {
  const PrimeField& f = a.field();
  const BlockParams& b = s.blocks.at(block);
  auto length = [&](const Vector& eps) {
    return image(f, a.left_mult(eps), Subspace::full(a.dim())).dim() / (b.n * b.e);
  };
  Vector eps = b.z;
  std::size_t len = length(eps);
  int failures = 0;
  while (len > 1) {
    std::vector<Vector> parts = split_idempotent_once(a, eps, rng);
    if (parts.size() < 2) {
      if (++failures >= kMaxRetries)
        throw Error(Errc::retries_exhausted, "randomized descent did not reach a primitive idempotent");
      continue;
    }
    eps = std::move(parts.front());
    len = length(eps);
  }
  Subspace k = image(f, a.left_mult(eps), Subspace::full(a.dim()));
  Vector g = brauer_idempotent(a, k);
  ensure(corner_span(a, g, g).dim() == b.e, "primitive idempotent corner has the wrong dimension");
  return g;
}

}  // namespace peirce
