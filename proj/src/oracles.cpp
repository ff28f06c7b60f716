#include "peirce/oracles.hpp"

#include <algorithm>
#include <set>

#include "peirce/error.hpp"

namespace peirce {

namespace {

void check_cap(const SCAlgebra& a, std::uint64_t cap) {
  std::uint64_t n = 1;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    n *= a.p();
    if (n > cap) throw Error(Errc::search_space_too_large, "enumeration exceeds the cap");
  }
}

// Nonzero vectors of GF(p)^d up to scalars.
std::vector<Vector> projective_points(std::uint32_t p, std::size_t d) {
  std::vector<Vector> out;
  for (std::size_t lead = 0; lead < d; ++lead) {
    Vector v(d, 0);
    v[lead] = 1;
    while (true) {
      out.push_back(v);
      std::size_t i = lead + 1;
      while (i < d && ++v[i] == p) v[i++] = 0;
      if (i >= d) break;
    }
  }
  return out;
}

std::vector<Vector> all_vectors(std::uint32_t p, std::size_t d) {
  std::vector<Vector> out;
  Vector v(d, 0);
  while (true) {
    out.push_back(v);
    std::size_t i = 0;
    while (i < d && ++v[i] == p) v[i++] = 0;
    if (i == d) return out;
  }
}

bool nilpotent_element(const SCAlgebra& a, const Vector& z) {
  Vector w = z;
  for (std::size_t k = 1; k < 64 && (std::size_t{1} << (k - 1)) <= a.dim(); ++k) w = a.multiply(w, w);
  return is_zero(w);
}

Subspace right_ideal(const SCAlgebra& a, const Vector& x) { return one_sided_ideal(a, {x}, Side::right); }

}  // namespace

std::vector<Subspace> enumerate_minimal_right_ideals(const SCAlgebra& a, std::uint64_t cap) {
  check_cap(a, cap);
  const PrimeField& f = a.field();
  std::vector<Subspace> found;
  std::set<Vector> seen;  // canonical basis entries of ideals already examined
  for (const auto& x : projective_points(a.p(), a.dim())) {
    Subspace k = right_ideal(a, x);
    if (!seen.insert(k.basis().entries()).second) continue;
    bool minimal = true;
    for (const auto& c : projective_points(a.p(), k.dim())) {
      if (!(right_ideal(a, k.combine(f, c)) == k)) {
        minimal = false;
        break;
      }
    }
    if (minimal) found.push_back(std::move(k));
  }
  return found;
}

CoveringOracle::CoveringOracle(const SCAlgebra& a, std::vector<Subspace> minimal)
    : field_(a.field()), minimal_(std::move(minimal)) {
  std::set<Vector> seen{Subspace::zero(a.dim()).basis().entries()};
  std::vector<Subspace> frontier{Subspace::zero(a.dim())};
  while (!frontier.empty()) {
    std::vector<Subspace> next;
    for (const auto& s : frontier)
      for (const auto& k : minimal_) {
        if (k.is_subspace_of(field_, s)) continue;
        Subspace grown = subspace_sum(field_, s, k);
        if (seen.insert(grown.basis().entries()).second) next.push_back(std::move(grown));
      }
    if (!next.empty()) levels_.push_back(next);
    frontier = std::move(next);
  }
}

std::optional<std::size_t> CoveringOracle::rank(std::span<const Scalar> x) const {
  if (is_zero(x)) return 0;
  for (std::size_t n = 0; n < levels_.size(); ++n)
    for (const auto& s : levels_[n])
      if (s.contains(field_, x)) return n + 1;
  return std::nullopt;
}

std::vector<Subspace> enumerate_ideals(const SCAlgebra& a, std::uint64_t cap) {
  check_cap(a, cap);
  const PrimeField& f = a.field();
  std::vector<Subspace> principal;
  std::set<Vector> seen;
  for (const auto& x : projective_points(a.p(), a.dim())) {
    Subspace i = two_sided_ideal(a, {x});
    if (seen.insert(i.basis().entries()).second) principal.push_back(std::move(i));
  }
  // close the principal ideals under sums
  std::vector<Subspace> all{Subspace::zero(a.dim())};
  std::set<Vector> have{all.front().basis().entries()};
  for (std::size_t i = 0; i < all.size(); ++i)
    for (const auto& p : principal) {
      Subspace s = subspace_sum(f, all[i], p);
      if (have.insert(s.basis().entries()).second) all.push_back(std::move(s));
    }
  return all;
}

Subspace nil_radical_oracle(const SCAlgebra& a, std::uint64_t cap) {
  check_cap(a, cap);
  const auto everything = all_vectors(a.p(), a.dim());
  std::vector<Vector> members;
  for (const auto& x : everything) {
    bool ok = true;
    for (const auto& y : everything) {
      Vector xy = a.multiply(x, y);
      if (!nilpotent_element(a, xy) || !nilpotent_element(a, add(a.field(), x, xy))) {
        ok = false;
        break;
      }
    }
    if (ok) members.push_back(x);
  }
  Subspace j = Subspace::span(a.field(), a.dim(), members);
  std::uint64_t size = 1;
  for (std::size_t i = 0; i < j.dim(); ++i) size *= a.p();
  ensure(members.size() == size, "nil elements do not form a subspace");
  return j;
}

}  // namespace peirce
