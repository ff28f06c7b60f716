#include "peirce/rank.hpp"

#include "peirce/error.hpp"

namespace peirce {

namespace {

Subspace right_ideal_of(const SCAlgebra& a, std::span<const Scalar> x) {
  return one_sided_ideal(a, {Vector(x.begin(), x.end())}, Side::right);
}

// Coordinates of v along a direct family of subspaces: v = sum of parts[i].
std::vector<Vector> split_along(const PrimeField& f, const std::vector<Subspace>& family, std::span<const Scalar> v) {
  std::size_t cols = 0;
  for (const auto& k : family) cols += k.dim();
  Matrix m(v.size(), cols);
  std::size_t c = 0;
  for (const auto& k : family)
    for (std::size_t i = 0; i < k.dim(); ++i, ++c)
      for (std::size_t r = 0; r < v.size(); ++r) m(r, c) = k.basis_row(i)[r];
  auto coeffs = solve(f, m, v);
  ensure(coeffs.has_value(), "vector lies outside the direct sum");
  std::vector<Vector> parts;
  c = 0;
  for (const auto& k : family) {
    parts.push_back(k.combine(f, std::span<const Scalar>(coeffs->data() + c, k.dim())));
    c += k.dim();
  }
  return parts;
}

}  // namespace

std::string RankResult::to_string() const { return value ? std::to_string(*value) : "infinite"; }

SocleAnalysis::SocleAnalysis(AlgebraPtr a, std::uint64_t cap) : algebra_(std::move(a)) {
  if (!algebra_->is_unital()) throw Error(Errc::not_unital, "rank computations need a unital algebra");
  sq_ = semisimple_quotient(*algebra_, cap);
  right_socle_ = annihilator(*algebra_, sq_.radical, true);
  left_socle_ = annihilator(*algebra_, sq_.radical, false);
}

std::size_t SocleAnalysis::module_length(const Subspace& k, Side side) const {
  const SCAlgebra& a = *algebra_;
  const Vector& one = a.one();
  std::size_t total = 0;
  for (std::size_t i = 0; i < sq_.structure.blocks.size(); ++i) {
    const BlockParams& b = sq_.structure.blocks[i];
    const Vector& z = sq_.central_lifts[i];
    const std::size_t dim = side == Side::left ? sandwich(a, z, k, one).dim() : sandwich(a, one, k, z).dim();
    const std::size_t simple = b.n * b.e;
    if (dim % simple != 0)
      throw Error(Errc::non_integral_length, "isotypic component of dimension " + std::to_string(dim) +
                                                 " is not a multiple of " + std::to_string(simple));
    total += dim / simple;
  }
  return total;
}

RankResult SocleAnalysis::right_rank(std::span<const Scalar> x) const {
  RankResult r;
  r.side = Side::right;
  if (!right_socle_.contains(algebra_->field(), x)) return r;
  r.value = module_length(right_ideal_of(*algebra_, x), Side::right);
  return r;
}

RankResult SocleAnalysis::left_rank(std::span<const Scalar> x) const {
  RankResult r;
  r.side = Side::left;
  if (!left_socle_.contains(algebra_->field(), x)) return r;
  r.value = module_length(one_sided_ideal(*algebra_, {Vector(x.begin(), x.end())}, Side::left), Side::left);
  return r;
}

const std::vector<Vector>& SocleAnalysis::primitive_idempotents(std::mt19937_64& rng) const {
  if (!primitives_) primitives_ = complete_primitive_idempotents(*algebra_, sq_, rng);
  return *primitives_;
}

Subspace right_socle(const SCAlgebra& a, std::uint64_t cap) { return annihilator(a, radical(a, cap), true); }
Subspace left_socle(const SCAlgebra& a, std::uint64_t cap) { return annihilator(a, radical(a, cap), false); }

RankResult right_rank(AlgebraPtr a, std::span<const Scalar> x, std::uint64_t cap) {
  return SocleAnalysis(std::move(a), cap).right_rank(x);
}

RankResult left_rank(AlgebraPtr a, std::span<const Scalar> x, std::uint64_t cap) {
  return SocleAnalysis(std::move(a), cap).left_rank(x);
}

MinimalDecomposition minimal_right_decomposition(const SocleAnalysis& s, std::span<const Scalar> x,
                                                 std::mt19937_64& rng) {
  const SCAlgebra& a = s.algebra();
  const PrimeField& f = a.field();
  RankResult rank = s.right_rank(x);
  if (rank.infinite()) throw Error(Errc::infinite_rank, "element is outside the right socle");
  const auto& primitives = s.primitive_idempotents(rng);

  MinimalDecomposition out;
  Vector cur(x.begin(), x.end());
  // cur lies in the socle, so cur J = 0 and every cur g_j A is zero or minimal.
  while (!is_zero(cur)) {
    bool peeled = false;
    for (const auto& gj : primitives) {
      Vector y = a.multiply(cur, gj);
      if (is_zero(y)) continue;
      Subspace k = right_ideal_of(a, y);
      if (subspace_product(a, k, k).is_zero()) continue;
      Vector g = brauer_idempotent(a, k);
      Vector head = a.multiply(g, cur);
      out.components.push_back(head);
      cur = subtract(f, cur, head);
      peeled = true;
      break;
    }
    if (peeled) continue;

    // cur A lies in J: pick a direct family among the cur g_j A and spread
    // the remaining cur g_j over it.
    std::vector<Subspace> family;
    Subspace total = Subspace::zero(a.dim());
    std::vector<Vector> pieces;
    for (const auto& gj : primitives) {
      Vector y = a.multiply(cur, gj);
      if (is_zero(y)) continue;
      pieces.push_back(y);
      Subspace k = right_ideal_of(a, y);
      Subspace grown = subspace_sum(f, total, k);
      if (grown.dim() == total.dim() + k.dim()) {
        family.push_back(std::move(k));
        total = std::move(grown);
      }
    }
    std::vector<Vector> comps(family.size(), a.zero());
    for (const auto& y : pieces) {
      auto parts = split_along(f, family, y);
      for (std::size_t i = 0; i < family.size(); ++i) comps[i] = add(f, comps[i], parts[i]);
    }
    for (auto& c : comps) {
      ensure(!is_zero(c), "grouped component vanished");
      out.components.push_back(std::move(c));
    }
    break;
  }
  ensure(out.components.size() == *rank.value, "decomposition length differs from the right rank");
  return out;
}

bool is_minimal_right_ideal(const SocleAnalysis& s, const Subspace& k) {
  const SCAlgebra& a = s.algebra();
  if (!is_ideal(a, k, Side::right)) throw Error(Errc::not_a_right_ideal, "subspace is not a right ideal");
  if (k.is_zero()) return false;
  if (!subspace_product(a, k, s.radical()).is_zero()) return false;
  return s.module_length(k, Side::right) == 1;
}

bool is_division_algebra(AlgebraPtr c, std::uint64_t cap) {
  if (c->dim() == 0 || !c->is_unital()) return false;
  if (!radical(*c, cap).is_zero()) return false;
  WedderburnStructure w = wedderburn_structure(c, cap);
  return w.blocks.size() == 1 && w.blocks[0].n == 1;
}

RankOneCheck rank_one_corner_check(const SocleAnalysis& s, std::span<const Scalar> e) {
  const SCAlgebra& a = s.algebra();
  if (is_zero(e) || !a.is_idempotent(e)) throw Error(Errc::not_idempotent, "rank-one check needs a nonzero idempotent");
  RankOneCheck r;
  r.minimal = is_minimal_right_ideal(s, right_ideal_of(a, e));
  r.corner_is_division = is_division_algebra(corner_subalgebra(a, e).algebra);
  ensure(!r.minimal || r.corner_is_division, "eA minimal but eAe is not a division algebra");
  if (s.semiprime()) ensure(r.minimal == r.corner_is_division, "semiprime algebra: eAe division but eA not minimal");
  return r;
}

}  // namespace peirce
