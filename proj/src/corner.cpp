#include "peirce/corner.hpp"

#include <algorithm>
#include <map>

#include "peirce/error.hpp"

namespace peirce {

namespace {

void record(std::vector<Certificate>& out, std::string name, bool ok, std::string detail = {}) {
  out.push_back(Certificate{std::move(name), ok, std::move(detail)});
}

std::string dims(std::size_t x, std::size_t y) { return std::to_string(x) + " vs " + std::to_string(y); }

// Matrix whose column i is fn(basis_i of `from`), as coordinates in `to`.
template <class Fn>
Matrix tabulate(std::size_t rows, std::size_t cols, Fn fn) {
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < cols; ++i) {
    Vector col = fn(i);
    ensure(col.size() == rows, "tabulated column has the wrong length");
    for (std::size_t r = 0; r < rows; ++r) m(r, i) = col[r];
  }
  return m;
}

Vector restrict_or_fail(const PrimeField& f, const Subalgebra& s, std::span<const Scalar> x, const char* what) {
  auto c = s.restrict(f, x);
  ensure(c.has_value(), what);
  return std::move(*c);
}

Vector random_inner_inverse(const SCAlgebra& a, const InnerInverses& inv, std::mt19937_64& rng) {
  return add(a.field(), inv.particular, random_element(a.field(), inv.kernel, rng));
}

bool is_bijective(const PrimeField& f, const AlgebraMap& m) {
  return m.matrix.rows() == m.matrix.cols() && rank(f, m.matrix) == m.matrix.rows();
}

// Two maps between the same spaces are mutually inverse.
bool mutually_inverse(const PrimeField& f, const AlgebraMap& g, const AlgebraMap& h) {
  const std::size_t n = g.matrix.cols();
  return g.matrix.rows() == n && h.matrix.rows() == n && multiply(f, h.matrix, g.matrix) == Matrix::identity(n) &&
         multiply(f, g.matrix, h.matrix) == Matrix::identity(n);
}

Subspace sum_of(const PrimeField& f, std::size_t ambient, const std::vector<Subspace>& parts) {
  Subspace s = Subspace::zero(ambient);
  for (const auto& p : parts) s = subspace_sum(f, s, p);
  return s;
}

// Both subspaces of one algebra; the first lies in the subalgebra `sub`.
Subspace to_sub(const PrimeField& f, const Subalgebra& sub, const Subspace& u) {
  std::vector<Vector> vs;
  for (std::size_t i = 0; i < u.dim(); ++i) vs.push_back(restrict_or_fail(f, sub, u.basis_row(i), "subspace leaves the subalgebra"));
  return Subspace::span(f, sub.algebra->dim(), vs);
}

std::vector<std::pair<std::size_t, std::size_t>> block_list(const WedderburnStructure& w) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (const auto& b : w.blocks) out.emplace_back(b.n, b.e);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

bool all_passed(const std::vector<Certificate>& certs) {
  return std::all_of(certs.begin(), certs.end(), [](const Certificate& c) { return c.passed; });
}

CornerIso corner_iso_deformed(const SCAlgebra& a, const RegularCertificate& cert) {
  const PrimeField& f = a.field();
  if (!verify(a, cert)) throw Error(Errc::not_regular_witness, "a b a != a for the supplied witness");

  CornerIso out;
  DeformedPresentation& pres = out.pres;
  pres.cert = cert;
  pres.e_corner = corner_subalgebra(a, cert.e);
  pres.a_corner = corner_subalgebra(a, cert.a);
  pres.s = restrict_or_fail(f, pres.e_corner, a.multiply3(cert.e, cert.a, cert.e), "eae leaves eAe");
  pres.deformed = deform(*pres.e_corner.algebra, pres.s);

  const Subalgebra& c = pres.e_corner;
  const Subalgebra& t = pres.a_corner;
  out.to_deformed.source = t.algebra;
  out.to_deformed.target = pres.deformed;
  out.to_deformed.matrix = tabulate(c.algebra->dim(), t.algebra->dim(), [&](std::size_t i) {
    return restrict_or_fail(f, c, a.multiply(t.lift(f, t.algebra->basis_element(i)), cert.b), "xb leaves eAe");
  });
  out.to_corner.source = pres.deformed;
  out.to_corner.target = t.algebra;
  out.to_corner.matrix = tabulate(t.algebra->dim(), c.algebra->dim(), [&](std::size_t i) {
    return restrict_or_fail(f, t, a.multiply(c.lift(f, c.algebra->basis_element(i)), cert.a), "xa leaves aAa");
  });
  ensure(verify_multiplicative(out.to_deformed), "x -> xb is not multiplicative");
  ensure(verify_multiplicative(out.to_corner), "x -> xa is not multiplicative");
  ensure(mutually_inverse(f, out.to_deformed, out.to_corner), "x -> xb and x -> xa are not inverse");
  return out;
}

DeformationIsos deformation_isos(const SCAlgebra& a, std::span<const Scalar> u, std::span<const Scalar> v,
                   std::span<const Scalar> s, std::span<const Scalar> e, std::uint64_t cap) {
  const PrimeField& f = a.field();
  if (!a.is_unital()) throw Error(Errc::not_unital, "the Peirce presentation needs a unity");
  if (!a.inverse(u)) throw Error(Errc::not_invertible, "u is not a unit");
  if (!a.inverse(v)) throw Error(Errc::not_invertible, "v is not a unit");
  if (!a.is_idempotent(e)) throw Error(Errc::not_idempotent, "e is not an idempotent");
  const std::size_t d = a.dim();
  DeformationIsos out;

  // x -> v x u from A_{usv} to A_s
  out.twist.source = deform(a, a.multiply3(u, s, v));
  out.twist.target = deform(a, s);
  out.twist.matrix = tabulate(d, d, [&](std::size_t i) { return a.multiply3(v, a.basis_element(i), u); });

  // A_e -> tuples ((1-e)xe, (1-e)x(1-e), exe, ex(1-e))
  const Vector one = a.one();
  const Vector ce = subtract(f, one, e);
  const Subspace full = Subspace::full(d);
  const std::vector<std::pair<Vector, Vector>> sides = {{ce, Vector(e.begin(), e.end())}, {ce, ce},
                                                        {Vector(e.begin(), e.end()), Vector(e.begin(), e.end())},
                                                        {Vector(e.begin(), e.end()), ce}};
  std::vector<Subspace> pieces;
  std::size_t total = 0;
  for (const auto& [l, r] : sides) {
    pieces.push_back(sandwich(a, l, full, r));
    total += pieces.back().dim();
  }
  auto split = [&](std::span<const Scalar> x) {
    Vector out_v;
    for (std::size_t k = 0; k < 4; ++k) {
      auto c = pieces[k].coordinates(f, a.multiply3(sides[k].first, x, sides[k].second));
      ensure(c.has_value(), "Peirce component outside its corner");
      out_v.insert(out_v.end(), c->begin(), c->end());
    }
    return out_v;
  };
  auto part = [&](std::span<const Scalar> t, std::size_t k) {
    std::size_t off = 0;
    for (std::size_t i = 0; i < k; ++i) off += pieces[i].dim();
    return pieces[k].combine(f, t.subspan(off, pieces[k].dim()));
  };
  // (PQ)12 = P12 Q22, (PQ)13 = P12 Q23, (PQ)22 = P22 Q22, (PQ)23 = P22 Q23
  Vector table(total * total * total, 0);
  for (std::size_t i = 0; i < total; ++i) {
    const Vector pi = unit_vector(total, i);
    for (std::size_t j = 0; j < total; ++j) {
      const Vector qj = unit_vector(total, j);
      const Vector p12 = part(pi, 0), p22 = part(pi, 2), q22 = part(qj, 2), q23 = part(qj, 3);
      Vector prod = a.zero();
      prod = add(f, prod, a.multiply(p12, q22));
      prod = add(f, prod, a.multiply(p12, q23));
      prod = add(f, prod, a.multiply(p22, q22));
      prod = add(f, prod, a.multiply(p22, q23));
      Vector c = split(prod);
      std::copy(c.begin(), c.end(), table.begin() + (i * total + j) * total);
    }
  }
  out.peirce.source = deform(a, e);
  out.peirce.target = std::make_shared<const SCAlgebra>(f, total, std::move(table), "Peirce presentation");
  out.peirce.matrix = tabulate(total, d, [&](std::size_t i) { return split(a.basis_element(i)); });

  // A_e / J(A_e) -> eAe / J(eAe), x -> exe
  const SCAlgebra& ae = *out.peirce.source;
  Quotient q1 = quotient(ae, radical_of_deformed(a, e, cap), "A_e / J");
  Subalgebra c = corner_subalgebra(a, e);
  Quotient q2 = quotient(*c.algebra, radical(*c.algebra, cap), "eAe / J");
  out.quotient.source = q1.algebra;
  out.quotient.target = q2.algebra;
  out.quotient.matrix = tabulate(q2.algebra->dim(), q1.algebra->dim(), [&](std::size_t i) {
    Vector x = q1.lift(f, q1.algebra->basis_element(i));
    return q2.project(f, restrict_or_fail(f, c, a.multiply3(e, x, e), "exe leaves eAe"));
  });

  out.verified = verify_multiplicative(out.twist) && is_bijective(f, out.twist) &&
                 verify_multiplicative(out.peirce) && is_bijective(f, out.peirce) &&
                 verify_multiplicative(out.quotient) && is_bijective(f, out.quotient);
  return out;
}

CornerQuotient corner_quotient_structure(const SCAlgebra& a, std::span<const Scalar> x, std::span<const Scalar> b,
                                         std::uint64_t cap) {
  const PrimeField& f = a.field();
  CornerQuotient out;
  out.corner = corner_subalgebra(a, x);
  out.radical = radical_of_corner(a, x, b, cap);
  Subspace inner = to_sub(f, out.corner, out.radical);
  ensure(inner == radical(*out.corner.algebra, cap), "J(aAa) differs from {x : axa in J(A)}");
  out.quotient = quotient(*out.corner.algebra, inner, "aAa / J");
  out.structure = wedderburn_structure(out.quotient.algebra, cap);
  return out;
}

ACornerStructure a_corner_structure(const SocleAnalysis& s, std::span<const Scalar> x, std::mt19937_64& rng) {
  const SCAlgebra& a = s.algebra();
  const PrimeField& f = a.field();
  if (!s.semiprime()) throw Error(Errc::not_semiprime, "J(A) is not zero");
  if (s.right_rank(x).infinite()) throw Error(Errc::infinite_rank, "a is outside the right socle");

  ACornerStructure out;
  RegularCertificate cert = inner_inverse(a, x);
  out.corner = corner_quotient_structure(a, x, cert.b);

  // kernel of x -> axa on aAa
  const Subalgebra& t = out.corner.corner;
  Matrix axa = tabulate(a.dim(), t.algebra->dim(),
                        [&](std::size_t i) { return a.multiply3(x, t.lift(f, t.algebra->basis_element(i)), x); });
  Subspace ker = image(f, t.embedding, kernel(f, axa));
  record(out.certificates, "radical = {x : axa = 0}", ker == out.corner.radical,
         dims(ker.dim(), out.corner.radical.dim()));

  const Vector a2 = a.multiply(x, x);
  RankResult r2 = s.right_rank(a2);
  ensure(!r2.infinite(), "a^2 outside the socle of a semiprime algebra");
  out.rank_a2 = *r2.value;
  record(out.certificates, "sum n = rank a^2", out.corner.structure.sum_n() == out.rank_a2,
         dims(out.corner.structure.sum_n(), out.rank_a2));

  UnitRegularCertificate ur = unit_regular_factorization(a, a2, rng);
  out.f = ur.e;
  out.v = ur.u;
  const Vector v_inv = ur.u_inv;
  out.f_corner = corner_subalgebra(a, out.f);
  const Subalgebra& fc = out.f_corner;
  out.induced.source = t.algebra;
  out.induced.target = fc.algebra;
  out.induced.matrix = tabulate(fc.algebra->dim(), t.algebra->dim(), [&](std::size_t i) {
    Vector y = t.lift(f, t.algebra->basis_element(i));
    return restrict_or_fail(f, fc, a.multiply(a.multiply3(x, y, x), v_inv), "axav^{-1} leaves fAf");
  });
  record(out.certificates, "induced map multiplicative", verify_multiplicative(out.induced));
  Subspace ind_ker = image(f, t.embedding, kernel(f, out.induced.matrix));
  record(out.certificates, "induced kernel = J(aAa)", ind_ker == out.corner.radical);
  const std::size_t img = rank(f, out.induced.matrix);
  record(out.certificates, "induced map onto fAf", img == fc.algebra->dim(), dims(img, fc.algebra->dim()));
  WedderburnStructure fs = wedderburn_structure(fc.algebra);
  record(out.certificates, "blocks of fAf = blocks of aAa / J", block_list(fs) == block_list(out.corner.structure));
  return out;
}

bool SemiprimeEquivalences::agree() const {
  return corner_semiprime == ranks_equal && ranks_equal == square_witnesses && square_witnesses == radical_zero &&
         radical_zero == matrix_form;
}

SemiprimeEquivalences semiprime_equivalences(const SocleAnalysis& s, std::span<const Scalar> x) {
  const SCAlgebra& a = s.algebra();
  const PrimeField& f = a.field();
  if (!s.semiprime()) throw Error(Errc::not_semiprime, "J(A) is not zero");
  RankResult ra = s.right_rank(x);
  if (ra.infinite()) throw Error(Errc::infinite_rank, "a is outside the right socle");

  SemiprimeEquivalences out;
  out.rank_a = *ra.value;
  out.rank_a2 = *s.right_rank(a.multiply(x, x)).value;
  out.ranks_equal = out.rank_a == out.rank_a2;

  Subalgebra t = corner_subalgebra(a, x);
  out.corner_semiprime = radical(*t.algebra).is_zero();

  try {
    out.witnesses = square_witnesses(a, x);
    out.square_witnesses = true;
  } catch (const Error& e) {
    if (e.code() != Errc::no_witness) throw;
  }

  Matrix axa = tabulate(a.dim(), t.algebra->dim(),
                        [&](std::size_t i) { return a.multiply3(x, t.lift(f, t.algebra->basis_element(i)), x); });
  out.radical_zero = kernel(f, axa).is_zero();

  if (out.radical_zero && t.algebra->dim() > 0 && t.algebra->is_unital()) {
    WedderburnStructure w = wedderburn_structure(t.algebra);
    out.matrix_form = w.sum_n() == out.rank_a;
  } else if (out.radical_zero && t.algebra->dim() == 0) {
    out.matrix_form = out.rank_a == 0;
  }
  return out;
}

CornerDecomposition main_decompose(const SocleAnalysis& s, std::span<const Scalar> x, std::mt19937_64& rng) {
  const SCAlgebra& a = s.algebra();
  const PrimeField& f = a.field();
  if (!a.is_unital()) throw Error(Errc::not_unital, "main decomposition needs a unital algebra");
  CornerDecomposition out;
  out.algebra = s.algebra_ptr();
  out.a.assign(x.begin(), x.end());
  auto& certs = out.certificates;

  auto inv_a = inner_inverses(a, x);
  if (!inv_a) throw Error(Errc::not_regular, "a is not regular");
  const Vector a2 = a.multiply(x, x);
  auto inv_a2 = inner_inverses(a, a2);
  if (!inv_a2) throw Error(Errc::not_regular_square, "a^2 is not regular");
  RankResult r2 = s.right_rank(a2);
  if (r2.infinite()) throw Error(Errc::infinite_square_rank, "a^2 is outside the right socle");
  out.rank_a2 = *r2.value;

  out.b = random_inner_inverse(a, *inv_a, rng);
  out.c = random_inner_inverse(a, *inv_a2, rng);
  out.e = a.multiply(x, out.b);
  record(certs, "aba = a", a.multiply3(x, out.b, x) == out.a);
  record(certs, "a^2 c a^2 = a^2", a.multiply3(a2, out.c, a2) == a2);

  out.e_corner = corner_subalgebra(a, out.e);
  const Subalgebra& ec = out.e_corner;
  const SCAlgebra& c = *ec.algebra;
  const std::size_t dc = c.dim();
  ensure(c.is_unital(), "eAe has no unity");
  const Vector s_c = restrict_or_fail(f, ec, a.multiply3(out.e, x, out.e), "eae leaves eAe");
  const Vector wit = restrict_or_fail(f, ec, a.multiply3(out.e, a.multiply(x, out.c), out.e), "eace leaves eAe");
  record(certs, "eae regular in eAe with witness eace", c.multiply3(s_c, wit, s_c) == s_c);

  UnitRegularCertificate ur = unit_regular_factorization(c, s_c, rng);
  const Vector& f_c = ur.e;
  const Vector& w_c = ur.u;
  const Vector& winv_c = ur.u_inv;
  out.f = ec.lift(f, f_c);
  out.w = ec.lift(f, w_c);
  record(certs, "eae = fw", c.multiply(f_c, w_c) == s_c);
  const Vector f0_c = subtract(f, c.one(), f_c);
  out.f0 = ec.lift(f, f0_c);

  // blocks of fAf, worked out inside eAe
  std::vector<Vector> fj_c;
  std::vector<std::pair<std::size_t, std::size_t>> params;
  if (!is_zero(f_c)) {
    Subalgebra fc = corner_subalgebra(c, f_c);
    WedderburnStructure fw = wedderburn_structure(fc.algebra);
    for (const auto& blk : fw.blocks) {
      fj_c.push_back(fc.lift(f, blk.z));
      params.emplace_back(blk.n, blk.e);
    }
  }

  out.deformed = deform(c, f_c);
  const SCAlgebra& d = *out.deformed;
  const Subspace full = Subspace::full(dc);
  const Subspace cfc = two_sided_ideal(c, {f_c});

  std::vector<Subspace> ij_c, nj_c;
  for (std::size_t j = 0; j < fj_c.size(); ++j) {
    const Vector& g = fj_c[j];
    Subspace ij = two_sided_ideal(c, {g});
    Subspace nj = subspace_sum(f, sandwich(c, g, full, f0_c), sandwich(c, f0_c, full, g));
    nj = subspace_sum(f, nj, sandwich(c, f0_c, ij, f0_c));
    ij_c.push_back(std::move(ij));
    nj_c.push_back(std::move(nj));
  }
  const Subspace f0cf0 = sandwich(c, f0_c, full, f0_c);
  out.i0_e = complement(f, sandwich(c, f0_c, cfc, f0_c), f0cf0);

  // y -> w^{-1} y a, from (eAe)_f to aAa
  out.a_corner = corner_subalgebra(a, x);
  const Subalgebra& t = out.a_corner;
  const Vector winv = ec.lift(f, winv_c);
  out.back_map.source = out.deformed;
  out.back_map.target = t.algebra;
  out.back_map.matrix = tabulate(t.algebra->dim(), dc, [&](std::size_t i) {
    return restrict_or_fail(f, t, a.multiply3(winv, ec.lift(f, c.basis_element(i)), x), "w^{-1}ya leaves aAa");
  });
  record(certs, "back map multiplicative", verify_multiplicative(out.back_map));
  record(certs, "back map bijective", is_bijective(f, out.back_map),
         dims(out.back_map.matrix.rows(), out.back_map.matrix.cols()));
  const Matrix push = multiply(f, t.embedding, out.back_map.matrix);

  out.i0 = image(f, push, out.i0_e);
  for (std::size_t j = 0; j < fj_c.size(); ++j) {
    CornerIdeal ci;
    ci.ideal_e = ij_c[j];
    ci.radical_e = nj_c[j];
    ci.ideal = image(f, push, ij_c[j]);
    ci.radical = image(f, push, nj_c[j]);
    ci.n = params[j].first;
    ci.e = params[j].second;
    ci.idempotent = ec.lift(f, fj_c[j]);
    out.ideals.push_back(std::move(ci));
  }

  // directness, in eAe coordinates and after pushing to aAa
  std::vector<Subspace> parts_e{out.i0_e};
  for (const auto& s_ : ij_c) parts_e.push_back(s_);
  const Subspace total_e = sum_of(f, dc, parts_e);
  record(certs, "I_0 + sum I_j = (eAe)_f", total_e.is_full(), dims(total_e.dim(), dc));
  for (std::size_t i = 0; i < parts_e.size(); ++i) {
    std::vector<Subspace> rest;
    for (std::size_t k = 0; k < parts_e.size(); ++k)
      if (k != i) rest.push_back(parts_e[k]);
    const Subspace meet = subspace_intersect(f, parts_e[i], sum_of(f, dc, rest));
    record(certs, "I_" + std::to_string(i) + " meets the others trivially", meet.is_zero(),
           "intersection dim " + std::to_string(meet.dim()));
  }
  std::vector<Subspace> parts_a{out.i0};
  for (const auto& ci : out.ideals) parts_a.push_back(ci.ideal);
  const Subspace total_a = sum_of(f, a.dim(), parts_a);
  record(certs, "I_0 + sum I_j = aAa", total_a == t.span, dims(total_a.dim(), t.span.dim()));
  record(certs, "sum is direct in aAa", is_direct_sum(f, parts_a));

  Subspace fsum = sandwich(c, f_c, full, f_c);
  fsum = subspace_sum(f, fsum, sandwich(c, f_c, full, f0_c));
  fsum = subspace_sum(f, fsum, sandwich(c, f0_c, full, f_c));
  fsum = subspace_sum(f, fsum, sandwich(c, f0_c, cfc, f0_c));
  record(certs, "sum I_j = fAf + fAf_0 + f_0Af + f_0AfAf_0", sum_of(f, dc, ij_c) == fsum);

  bool annihilate = true;
  for (std::size_t i = 0; i < parts_e.size(); ++i)
    for (std::size_t k = 0; k < parts_e.size(); ++k)
      if (i != k && !subspace_product(d, parts_e[i], parts_e[k]).is_zero()) annihilate = false;
  record(certs, "distinct ideals annihilate each other", annihilate);

  record(certs, "I_0 is an ideal", is_ideal(d, out.i0_e, Side::both));
  record(certs, "I_0 * I_0 = 0", subspace_product(d, out.i0_e, out.i0_e).is_zero());

  std::size_t sum_n = 0;
  for (std::size_t j = 0; j < out.ideals.size(); ++j) {
    const CornerIdeal& ci = out.ideals[j];
    const std::string tag = "I_" + std::to_string(j + 1);
    sum_n += ci.n;
    record(certs, tag + " is an ideal", is_ideal(d, ci.ideal_e, Side::both));
    record(certs, tag + " generated by f_" + std::to_string(j + 1),
           generated_ideal(d, {fj_c[j]}, Side::both) == ci.ideal_e);
    Nilpotency nil = is_nilpotent(d, ci.radical_e);
    record(certs, "N_" + std::to_string(j + 1) + "^3 = 0", nil.nilpotent && nil.index <= 3,
           "index " + std::to_string(nil.index));
    Subalgebra sub = subalgebra(d, ci.ideal_e, "I_j");
    Subspace nj = to_sub(f, sub, ci.radical_e);
    record(certs, "N_" + std::to_string(j + 1) + " = J(" + tag + ")", nj == radical(*sub.algebra),
           dims(nj.dim(), radical(*sub.algebra).dim()));
    Quotient q = quotient(*sub.algebra, nj, "I_j / N_j");
    WedderburnStructure qs = wedderburn_structure(q.algebra);
    const bool simple = qs.blocks.size() == 1 && qs.blocks[0].n == ci.n && qs.blocks[0].e == ci.e;
    record(certs, tag + " / N_" + std::to_string(j + 1) + " simple of the block type", simple);
  }
  record(certs, "sum n_j = rank a^2", sum_n == out.rank_a2, dims(sum_n, out.rank_a2));
  return out;
}

ConverseInput converse_input(const CornerDecomposition& d) {
  ConverseInput in;
  in.a = d.a;
  in.i0 = d.i0;
  for (const auto& ci : d.ideals) {
    in.ideals.push_back(ci.ideal);
    in.radicals.push_back(ci.radical);
    in.blocks.emplace_back(ci.n, ci.e);
  }
  return in;
}

ConverseReport verify_converse(const SocleAnalysis& s, const ConverseInput& in) {
  const SCAlgebra& a = s.algebra();
  const PrimeField& f = a.field();
  if (!s.semiprime()) throw Error(Errc::not_semiprime, "the converse needs J(A) = 0");
  if (in.ideals.size() != in.radicals.size() || in.ideals.size() != in.blocks.size())
    throw Error(Errc::invalid_argument, "ideals, radicals and blocks differ in length");
  auto violated = [](const std::string& what) { throw Error(Errc::hypothesis_violation, what); };

  Subalgebra t = corner_subalgebra(a, in.a);
  const SCAlgebra& ta = *t.algebra;
  auto inside = [&](const Subspace& u, const char* what) {
    if (!u.is_subspace_of(f, t.span)) violated(std::string(what) + " is not inside aAa");
    return to_sub(f, t, u);
  };
  const Subspace i0 = inside(in.i0, "I_0");
  std::vector<Subspace> ij, nj;
  for (std::size_t j = 0; j < in.ideals.size(); ++j) {
    ij.push_back(inside(in.ideals[j], "I_j"));
    nj.push_back(inside(in.radicals[j], "N_j"));
  }

  // (i)
  std::vector<Subspace> parts{i0};
  parts.insert(parts.end(), ij.begin(), ij.end());
  if (!sum_of(f, ta.dim(), parts).is_full() || !is_direct_sum(f, parts))
    violated("(i) aAa is not the direct sum of I_0, I_1, ..., I_k");
  for (const auto& p : parts)
    if (!is_ideal(ta, p, Side::both)) violated("(i) a summand is not an ideal of aAa");
  // (ii)
  if (!subspace_product(ta, i0, i0).is_zero()) violated("(ii) I_0^2 != 0");

  ConverseReport out;
  for (std::size_t j = 0; j < ij.size(); ++j) {
    const std::string tag = std::to_string(j + 1);
    // (iii)
    if (!nj[j].is_subspace_of(f, ij[j])) violated("(iii) N_" + tag + " is not inside I_" + tag);
    Nilpotency nil = is_nilpotent(ta, nj[j]);
    if (!nil.nilpotent || nil.index > 3) violated("(iii) N_" + tag + "^3 != 0");
    Subalgebra sub = subalgebra(ta, ij[j], "I_j");
    Subspace n_in = to_sub(f, sub, nj[j]);
    if (n_in != radical(*sub.algebra)) violated("(iii) N_" + tag + " != J(I_" + tag + ")");
    // (iv)
    Quotient q = quotient(*sub.algebra, n_in, "I_j / N_j");
    WedderburnStructure qs = wedderburn_structure(q.algebra);
    const auto [n, e] = in.blocks[j];
    if (qs.blocks.size() != 1 || qs.blocks[0].n != n || qs.blocks[0].e != e)
      violated("(iv) I_" + tag + " / J(I_" + tag + ") is not M_n(GF(p^e)) with the stated n, e");

    Vector g_sub = lift_idempotent(*sub.algebra, n_in, q.lift(f, q.algebra->one()));
    Vector g = t.lift(f, sub.lift(f, g_sub));
    out.lifted.push_back(g);
    WedderburnStructure gs = corner_structure_of_idempotent(a, g);
    record(out.certificates, "g_" + tag + "Ag_" + tag + " is one block (n_j, e_j)",
           gs.blocks.size() == 1 && gs.blocks[0].n == n && gs.blocks[0].e == e);
    record(out.certificates, "I_" + tag + " generated by g_" + tag,
           generated_ideal(ta, {sub.lift(f, g_sub)}, Side::both) == ij[j]);
    out.rank_a2 += n;
  }

  const Vector a2 = a.multiply(in.a, in.a);
  RegularCertificate rc = inner_inverse(a, a2);
  const Vector& c = rc.b;
  const Vector aca = a.multiply3(in.a, c, in.a);
  const Vector prod = a.multiply3(a.multiply(a2, a.multiply(c, in.a)), aca, a.multiply3(in.a, c, a2));
  record(out.certificates, "a^2 = (a^2ca)(aca)(aca^2)", prod == a2);
  Subspace sum_ij = sum_of(f, ta.dim(), ij);
  auto a2_t = t.restrict(f, a2);
  record(out.certificates, "a^2 in I_1 + ... + I_k", a2_t && sum_ij.contains(f, *a2_t));
  RankResult r2 = s.right_rank(a2);
  record(out.certificates, "rank a^2 = sum n_j", !r2.infinite() && *r2.value == out.rank_a2,
         r2.to_string() + " vs " + std::to_string(out.rank_a2));
  return out;
}

std::size_t ShapeReport::total() const {
  std::size_t t = 0;
  for (const auto& x : live) t += x.m + x.n;
  for (const auto& x : dead) t += x.m;
  return t;
}

ShapeReport corner_shapes(const SocleAnalysis& s, const CornerDecomposition& d) {
  const SCAlgebra& a = s.algebra();
  const PrimeField& f = a.field();
  RankResult ra = s.right_rank(d.a);
  if (ra.infinite()) throw Error(Errc::infinite_rank, "a is outside the right socle");

  const Subalgebra& ec = d.e_corner;
  const SCAlgebra& c = *ec.algebra;
  WedderburnStructure ws = wedderburn_structure(ec.algebra);
  const Vector f_c = restrict_or_fail(f, ec, d.f, "f leaves eAe");
  const Subspace full = Subspace::full(c.dim());

  ShapeReport out;
  out.rank_a = *ra.value;
  std::vector<bool> used(ws.blocks.size(), false);
  for (const auto& ci : d.ideals) {
    const Vector fj = restrict_or_fail(f, ec, ci.idempotent, "f_j leaves eAe");
    std::optional<std::size_t> home;
    for (std::size_t i = 0; i < ws.blocks.size(); ++i)
      if (c.multiply(ws.blocks[i].z, fj) == fj) home = i;
    ensure(home.has_value() && !used[*home], "f_j does not sit in its own block of eAe");
    used[*home] = true;
    const BlockParams& b = ws.blocks[*home];
    const Vector h = c.multiply(b.z, f_c);
    const std::size_t hd = sandwich(c, h, full, c.one()).dim();
    ensure(hd % (b.n * b.e) == 0, "hA has fractional length");
    const std::size_t nj = hd / (b.n * b.e);
    ensure(nj == ci.n && b.e == ci.e, "block of eAe disagrees with I_j / N_j");
    out.live.push_back(ShapeEntry{b.n - nj, nj, b.e});
  }
  for (std::size_t i = 0; i < ws.blocks.size(); ++i) {
    if (used[i]) continue;
    ensure(is_zero(c.multiply(ws.blocks[i].z, f_c)), "f meets a block with no ideal");
    out.dead.push_back(ShapeEntry{ws.blocks[i].n, 0, ws.blocks[i].e});
  }
  ensure(out.total() == out.rank_a, "m_1 + ... + m_l + n_1 + ... + n_k != rank a");
  return out;
}

}  // namespace peirce
