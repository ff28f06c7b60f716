#include "peirce/suite.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <map>
#include <memory>
#include <random>

#include "peirce/corner.hpp"
#include "peirce/error.hpp"
#include "peirce/generators.hpp"
#include "peirce/oracles.hpp"
#include "peirce/radical.hpp"
#include "peirce/rank.hpp"
#include "peirce/regulars.hpp"

namespace peirce {

namespace {

struct PoolEntry {
  RandomKind kind;
  AlgebraPtr algebra;
  std::shared_ptr<SocleAnalysis> socle;
  std::vector<Vector> finite_primitives;  // primitive idempotents inside the right socle
  std::shared_ptr<SocleAnalysis> semiprime;  // A itself, or A / J(A)
};

using Pool = std::vector<PoolEntry>;

std::mt19937_64 case_rng(std::uint64_t seed, const std::string& suite, std::size_t index) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : suite) h = (h ^ c) * 1099511628211ull;
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(h), static_cast<std::uint32_t>(h >> 32),
                    static_cast<std::uint32_t>(index)};
  return std::mt19937_64(seq);
}

Pool build_pool(const SuiteOptions& opt) {
  const PrimeField f(opt.p);
  Pool pool;
  for (std::size_t i = 0; i < opt.cases; ++i) {
    auto rng = case_rng(opt.seed, "pool", i);
    PoolEntry e;
    e.kind = static_cast<RandomKind>(i % 3);
    e.algebra = random_algebra(f, rng, e.kind, opt.max_dim);
    e.socle = std::make_shared<SocleAnalysis>(e.algebra);
    for (const auto& g : e.socle->primitive_idempotents(rng))
      if (e.socle->right_socle().contains(f, g)) e.finite_primitives.push_back(g);
    e.semiprime = e.socle->semiprime() ? e.socle : std::make_shared<SocleAnalysis>(e.socle->quotient().structure.algebra);
    e.semiprime->primitive_idempotents(rng);
    pool.push_back(std::move(e));
  }
  return pool;
}

Vector random_unit(const SCAlgebra& a, std::mt19937_64& rng) {
  const Subspace full = Subspace::full(a.dim());
  for (int i = 0; i < 256; ++i) {
    Vector u = random_element(a.field(), full, rng);
    if (a.inverse(u)) return u;
  }
  throw Error(Errc::retries_exhausted, "no unit sampled");
}

Vector subset_sum(const SCAlgebra& a, const std::vector<Vector>& gens, std::mt19937_64& rng, bool nonempty) {
  Vector e = a.zero();
  if (gens.empty()) return e;
  std::bernoulli_distribution coin(0.5);
  bool any = false;
  for (const auto& g : gens)
    if (coin(rng)) {
      e = add(a.field(), e, g);
      any = true;
    }
  if (nonempty && !any) e = gens[rng() % gens.size()];
  return e;
}

// u e u^{-1} for a random subset sum e of the given orthogonal idempotents.
Vector random_idempotent(const SCAlgebra& a, const std::vector<Vector>& gens, std::mt19937_64& rng) {
  Vector e = subset_sum(a, gens, rng, true);
  Vector u = random_unit(a, rng);
  return a.multiply3(u, e, *a.inverse(u));
}

Vector random_regular(const SocleAnalysis& s, std::mt19937_64& rng) {
  const SCAlgebra& a = s.algebra();
  if (rng() % 2 == 0) {
    Vector x = random_sparse_element(a, rng);
    if (is_regular(a, x)) return x;
  }
  Vector e = subset_sum(a, s.primitive_idempotents(rng), rng, false);
  return a.multiply3(random_unit(a, rng), e, random_unit(a, rng));
}

Subspace to_sub(const PrimeField& f, const Subalgebra& sub, const Subspace& u) {
  std::vector<Vector> vs;
  for (std::size_t i = 0; i < u.dim(); ++i) {
    auto c = sub.restrict(f, u.basis_row(i));
    ensure(c.has_value(), "subspace leaves the subalgebra");
    vs.push_back(std::move(*c));
  }
  return Subspace::span(f, sub.algebra->dim(), vs);
}

std::string failed_certificates(const std::vector<Certificate>& certs) {
  std::string out;
  for (const auto& c : certs)
    if (!c.passed) out += (out.empty() ? "" : "; ") + c.name;
  return out;
}

enum class Verdict { pass, skip };

struct CaseContext {
  const PoolEntry& entry;
  std::mt19937_64& rng;
  const SuiteOptions& opt;
};

// Throws Error or returns a failure message through `why`.
using CaseFn = std::function<Verdict(CaseContext&, std::string& why)>;

struct SuiteDef {
  std::string description;
  CaseFn run;
};

Verdict deformed_radical(CaseContext& c, std::string& why) {
  const SCAlgebra& a = *c.entry.algebra;
  Vector s = random_sparse_element(a, c.rng);
  AlgebraPtr d = deform(a, s);
  Subspace direct = jacobson_radical(*d);
  Subspace formula = radical_of_deformed(a, s);
  if (direct != formula) why = "J(A_s) has dim " + std::to_string(direct.dim()) + ", {x : sxs in J} has dim " +
                               std::to_string(formula.dim());
  else if (!c.entry.socle->radical().is_subspace_of(a.field(), direct)) why = "J(A) is not inside J(A_s)";
  return Verdict::pass;
}

Verdict corner_radical(CaseContext& c, std::string& why) {
  const SCAlgebra& a = *c.entry.algebra;
  Vector x = random_regular(*c.entry.socle, c.rng);
  RegularCertificate rc = inner_inverse(a, x);
  Subalgebra t = corner_subalgebra(a, x);
  Subspace direct = image(a.field(), t.embedding, jacobson_radical(*t.algebra));
  Subspace formula = radical_of_corner(a, x, rc.b);
  if (direct != formula) why = "J(aAa) differs from {x in aAa : axa in J(A)}";
  return Verdict::pass;
}

Verdict corner_minimal_ideal(CaseContext& c, std::string& why) {
  const SCAlgebra& a = *c.entry.algebra;
  const SocleAnalysis& s = *c.entry.socle;
  const PrimeField& f = a.field();
  Vector x = random_element(f, s.right_socle(), c.rng);
  if (is_zero(x)) return Verdict::skip;
  MinimalDecomposition md = minimal_right_decomposition(s, x, c.rng);
  const Vector& comp = md.components[c.rng() % md.components.size()];
  Subspace k = one_sided_ideal(a, {comp}, Side::right);
  if (!is_minimal_right_ideal(s, k)) {
    why = "component of a minimal decomposition does not generate a minimal right ideal";
    return Verdict::pass;
  }
  Vector e = random_idempotent(a, s.primitive_idempotents(c.rng), c.rng);
  Subspace eke = sandwich(a, e, k, e);
  if (eke.is_zero()) return Verdict::pass;
  Subalgebra corner = corner_subalgebra(a, e);
  SocleAnalysis cs(corner.algebra);
  if (!is_minimal_right_ideal(cs, to_sub(f, corner, eke))) why = "eKe is neither zero nor minimal in eAe";
  return Verdict::pass;
}

Verdict ideal_intersection(CaseContext& c, std::string& why) {
  const SCAlgebra& a = *c.entry.algebra;
  if (c.entry.finite_primitives.empty()) return Verdict::skip;
  Vector g = random_idempotent(a, c.entry.finite_primitives, c.rng);
  Subspace k = one_sided_ideal(a, {random_sparse_element(a, c.rng), random_sparse_element(a, c.rng)}, Side::right);
  Subspace ideal = two_sided_ideal(a, {g});
  Subspace lhs = subspace_intersect(a.field(), ideal, k);
  Subspace rhs = subspace_product(a, k, ideal);
  if (lhs != rhs) why = "(f) meet K has dim " + std::to_string(lhs.dim()) + ", K(f) has dim " + std::to_string(rhs.dim());
  return Verdict::pass;
}

Verdict left_right_rank(CaseContext& c, std::string& why) {
  const SocleAnalysis& s = *c.entry.socle;
  Vector x = random_regular(s, c.rng);
  RankResult r = s.right_rank(x), l = s.left_rank(x);
  if (r.infinite() || l.infinite()) return Verdict::skip;
  if (*r.value != *l.value) why = "right rank " + r.to_string() + " but left rank " + l.to_string();
  return Verdict::pass;
}

Verdict subring_rank(CaseContext& c, std::string& why) {
  const SCAlgebra& a = *c.entry.algebra;
  if (c.entry.finite_primitives.empty()) return Verdict::skip;
  Vector e = random_idempotent(a, c.entry.finite_primitives, c.rng);
  Subalgebra corner = corner_subalgebra(a, e);
  Vector y = random_sparse_element(*corner.algebra, c.rng);
  if (!is_regular(*corner.algebra, y)) {
    why = "element of eAe is not regular although e has finite rank";
    return Verdict::pass;
  }
  SocleAnalysis cs(corner.algebra);
  RankResult inner = cs.right_rank(y);
  RankResult outer = c.entry.socle->right_rank(corner.lift(a.field(), y));
  if (inner.to_string() != outer.to_string()) why = "rank in eAe " + inner.to_string() + ", in A " + outer.to_string();
  return Verdict::pass;
}

Verdict idempotent_corner(CaseContext& c, std::string& why) {
  const SCAlgebra& a = *c.entry.algebra;
  if (c.entry.finite_primitives.empty()) return Verdict::skip;
  Vector e = random_idempotent(a, c.entry.finite_primitives, c.rng);
  RankResult r = c.entry.socle->right_rank(e);
  WedderburnStructure w = corner_structure_of_idempotent(a, e);
  if (r.infinite() || *r.value != w.sum_n())
    why = "rank " + r.to_string() + " but the blocks of eAe sum to " + std::to_string(w.sum_n());
  return Verdict::pass;
}

Verdict semiprime_corner(CaseContext& c, std::string& why) {
  const SocleAnalysis& s = *c.entry.semiprime;
  if (s.algebra().dim() == 0) return Verdict::skip;
  Vector x = random_sparse_element(s.algebra(), c.rng);
  SemiprimeEquivalences eq = semiprime_equivalences(s, x);
  if (!eq.agree())
    why = std::string("conditions disagree: ") + (eq.corner_semiprime ? "1" : "0") + (eq.ranks_equal ? "1" : "0") +
          (eq.square_witnesses ? "1" : "0") + (eq.radical_zero ? "1" : "0") + (eq.matrix_form ? "1" : "0");
  return Verdict::pass;
}

Verdict prime_case(CaseContext& c, std::string& why) {
  const std::size_t n = 1 + c.rng() % 4;
  const PrimeField f(c.opt.p);
  MatrixAlgebra m = full_matrix_algebra(f, n);
  SocleAnalysis s(m.sc());
  Vector x = random_sparse_element(m.algebra(), c.rng);
  CornerDecomposition d = main_decompose(s, x, c.rng);
  if (!d.certified()) why = "certificates failed: " + failed_certificates(d.certificates);
  else if (d.k() > 1) why = "k = " + std::to_string(d.k()) + " in M_" + std::to_string(n);
  return Verdict::pass;
}

std::vector<Subspace> sorted(const CornerDecomposition& d) {
  std::vector<Subspace> out;
  for (const auto& ci : d.ideals) out.push_back(ci.ideal);
  std::sort(out.begin(), out.end(), [](const Subspace& x, const Subspace& y) { return x.basis().entries() < y.basis().entries(); });
  return out;
}

Verdict corner_decomposition(CaseContext& c, std::string& why) {
  const SocleAnalysis& s = *c.entry.socle;
  const SCAlgebra& a = s.algebra();
  const PrimeField& f = a.field();
  Vector x = random_regular(s, c.rng);
  const std::uint64_t seed = c.rng();
  CornerDecomposition d;
  try {
    std::mt19937_64 r1(seed);
    d = main_decompose(s, x, r1);
  } catch (const Error& e) {
    if (e.code() == Errc::not_regular_square || e.code() == Errc::infinite_square_rank) return Verdict::skip;
    throw;
  }
  if (!d.certified()) {
    why = "certificates failed: " + failed_certificates(d.certificates);
    return Verdict::pass;
  }
  std::mt19937_64 r2(seed ^ 0x9e3779b97f4a7c15ull);
  CornerDecomposition d2 = main_decompose(s, x, r2);
  if (sorted(d) != sorted(d2)) why = "two seeds give different ideals I_1, ..., I_k";
  else if (d.i0.dim() != d2.i0.dim()) why = "two seeds give I_0 of different dimension";
  else if (!subspace_product(*d2.deformed, d2.i0_e, d2.i0_e).is_zero()) why = "second I_0 is not square-zero";
  if (!why.empty()) return Verdict::pass;

  for (const auto& ci : d.ideals) {
    Vector fj = *d.e_corner.restrict(f, ci.idempotent);
    Vector h = lift_idempotent(*d.deformed, ci.radical_e, add(f, fj, random_element(f, ci.radical_e, c.rng)));
    if (generated_ideal(*d.deformed, {h}, Side::both) != ci.ideal_e) {
      why = "an idempotent of I_j does not generate I_j";
      return Verdict::pass;
    }
  }
  if (s.semiprime()) {
    ConverseReport cr = verify_converse(s, converse_input(d));
    if (!all_passed(cr.certificates)) why = "converse: " + failed_certificates(cr.certificates);
    ACornerStructure ac = a_corner_structure(s, x, c.rng);
    std::vector<std::pair<std::size_t, std::size_t>> want, got;
    for (const auto& b : ac.corner.structure.blocks) want.emplace_back(b.n, b.e);
    for (const auto& ci : d.ideals) got.emplace_back(ci.n, ci.e);
    std::sort(want.begin(), want.end());
    std::sort(got.begin(), got.end());
    if (want != got) why = "block multisets of aAa / J and of the decomposition differ";
  }
  if (!s.right_rank(x).infinite()) corner_shapes(s, d);
  return Verdict::pass;
}

const std::map<std::string, SuiteDef>& randomized_suites() {
  static const std::map<std::string, SuiteDef> suites = {
      {"corner_decomposition",
       {"aAa decomposes into certified ideals, independent of the seed", corner_decomposition}},
      {"corner_minimal_ideal", {"eKe is zero or a minimal right ideal of eAe", corner_minimal_ideal}},
      {"corner_radical", {"J(aAa) = {x in aAa : axa in J(A)}", corner_radical}},
      {"deformed_radical", {"J(A_s) = {x : sxs in J(A)}", deformed_radical}},
      {"idempotent_corner", {"rank e equals the sum of the block sizes of eAe", idempotent_corner}},
      {"ideal_intersection", {"(f) meet K = K (f) for f of finite rank", ideal_intersection}},
      {"left_right_rank", {"regular elements of finite ranks have equal left and right rank", left_right_rank}},
      {"prime_case", {"decompositions over M_n have at most one ideal I_j", prime_case}},
      {"semiprime_corner", {"the five semiprime corner conditions agree", semiprime_corner}},
      {"subring_rank", {"rank in eAe equals rank in A for e of finite rank", subring_rank}},
  };
  return suites;
}

SuiteReport run_randomized(const std::string& name, const SuiteDef& def, const Pool& pool, const SuiteOptions& opt) {
  SuiteReport rep;
  rep.name = name;
  rep.description = def.description;
  const std::size_t max_attempts = opt.cases * 20;
  for (std::size_t i = 0; i < max_attempts && rep.cases < opt.cases; ++i) {
    auto rng = case_rng(opt.seed, name, i);
    const PoolEntry& entry = pool[i % pool.size()];
    CaseContext ctx{entry, rng, opt};
    std::string why;
    try {
      if (def.run(ctx, why) == Verdict::skip) {
        ++rep.skipped;
        continue;
      }
    } catch (const Error& e) {
      why = std::string(e.name()) + ": " + e.what();
    }
    ++rep.cases;
    if (!why.empty())
      rep.failures.push_back("case " + std::to_string(i) + " (" + std::string(kind_name(entry.kind)) + ", dim " +
                             std::to_string(entry.algebra->dim()) + "): " + why);
  }
  if (rep.cases < opt.cases)
    rep.failures.push_back("only " + std::to_string(rep.cases) + " of " + std::to_string(opt.cases) +
                           " cases met the hypotheses");
  return rep;
}

// Tiny corpus at p = 2 and 3.

struct TinyAlgebra {
  std::string name;
  MatrixAlgebra algebra;
};

std::vector<TinyAlgebra> tiny_algebras() {
  std::vector<TinyAlgebra> out;
  for (std::uint32_t p : {2u, 3u}) {
    const PrimeField f(p);
    for (auto& [name, a] : tiny_corpus(f)) out.push_back({name + "@" + std::to_string(p), std::move(a)});
  }
  return out;
}

std::vector<Vector> every_element(const SCAlgebra& a) {
  std::vector<Vector> out;
  Vector v(a.dim(), 0);
  while (true) {
    out.push_back(v);
    std::size_t i = 0;
    while (i < v.size() && ++v[i] == a.p()) v[i++] = 0;
    if (i == v.size()) return out;
  }
}

SuiteReport tiny_radical(const SuiteOptions&) {
  SuiteReport rep{"tiny_radical", "trace radical, enumeration and nil-element oracle agree", 0, 0, {}};
  for (const auto& t : tiny_algebras()) {
    const SCAlgebra& a = t.algebra.algebra();
    Subspace brute = radical_bruteforce(a);
    ++rep.cases;
    if (nil_radical_oracle(a) != brute) rep.failures.push_back(t.name + ": enumeration and nil oracle differ");
    for (int rep_kind = 0; rep_kind < 2; ++rep_kind) {
      try {
        Subspace j = rep_kind == 0 ? jacobson_radical(t.algebra) : jacobson_radical(a);
        ++rep.cases;
        if (j != brute) rep.failures.push_back(t.name + ": trace radical differs from enumeration");
      } catch (const CharacteristicTooSmall&) {
        ++rep.skipped;
      }
    }
  }
  return rep;
}

SuiteReport tiny_rank(const SuiteOptions&) {
  SuiteReport rep{"tiny_rank", "right rank equals the least covering by minimal right ideals", 0, 0, {}};
  for (const auto& t : tiny_algebras()) {
    const SCAlgebra& a = t.algebra.algebra();
    SocleAnalysis s(t.algebra.sc());
    CoveringOracle oracle(a, enumerate_minimal_right_ideals(a));
    for (const auto& x : every_element(a)) {
      ++rep.cases;
      auto want = oracle.rank(x);
      RankResult got = s.right_rank(x);
      if (got.value != want)
        rep.failures.push_back(t.name + ": rank " + got.to_string() + " vs oracle " +
                               (want ? std::to_string(*want) : std::string("infinite")));
    }
  }
  return rep;
}

SuiteReport tiny_decomposition(const SuiteOptions& opt) {
  SuiteReport rep{"tiny_decomposition", "decomposition ideals checked against the enumerated ideal lattice", 0, 0, {}};
  for (const auto& t : tiny_algebras()) {
    const SCAlgebra& a = t.algebra.algebra();
    const PrimeField& f = a.field();
    SocleAnalysis s(t.algebra.sc());
    CoveringOracle oracle(a, enumerate_minimal_right_ideals(a));
    auto elements = every_element(a);
    auto rng = case_rng(opt.seed, "tiny_decomposition:" + t.name, 0);
    if (elements.size() > 64) {
      std::shuffle(elements.begin(), elements.end(), rng);
      elements.resize(64);
    }
    for (const auto& x : elements) {
      CornerDecomposition d;
      try {
        d = main_decompose(s, x, rng);
      } catch (const Error& e) {
        ++rep.skipped;
        if (e.code() == Errc::infinite_square_rank && oracle.rank(a.multiply(x, x)))
          rep.failures.push_back(t.name + ": a^2 reported outside the socle but the oracle covers it");
        else if (e.code() != Errc::infinite_square_rank && e.code() != Errc::not_regular &&
                 e.code() != Errc::not_regular_square)
          rep.failures.push_back(t.name + ": " + e.what());
        continue;
      }
      ++rep.cases;
      if (!d.certified()) {
        rep.failures.push_back(t.name + ": certificates failed: " + failed_certificates(d.certificates));
        continue;
      }
      const SCAlgebra& dd = *d.deformed;
      auto lattice = enumerate_ideals(dd);
      auto in_lattice = [&](const Subspace& u) { return std::find(lattice.begin(), lattice.end(), u) != lattice.end(); };
      if (!in_lattice(d.i0_e)) rep.failures.push_back(t.name + ": I_0 is not an ideal");
      for (const auto& ci : d.ideals) {
        if (!in_lattice(ci.ideal_e) || !in_lattice(ci.radical_e)) {
          rep.failures.push_back(t.name + ": I_j or N_j is not an ideal");
          continue;
        }
        Subspace nil = Subspace::zero(dd.dim());
        for (const auto& k : lattice)
          if (k.is_subspace_of(f, ci.ideal_e) && is_nilpotent(dd, k).nilpotent) nil = subspace_sum(f, nil, k);
        if (nil != ci.radical_e) rep.failures.push_back(t.name + ": N_j is not the largest nilpotent ideal in I_j");
        for (const auto& k : lattice)
          for (const auto& l : lattice)
            if (!k.is_zero() && !l.is_zero() && k.is_subspace_of(f, ci.ideal_e) && l.is_subspace_of(f, ci.ideal_e) &&
                is_direct_sum(f, {k, l}) && subspace_sum(f, k, l) == ci.ideal_e)
              rep.failures.push_back(t.name + ": I_j splits into two ideals");
      }
    }
  }
  return rep;
}

const std::map<std::string, std::function<SuiteReport(const SuiteOptions&)>>& tiny_suites() {
  static const std::map<std::string, std::function<SuiteReport(const SuiteOptions&)>> suites = {
      {"tiny_decomposition", tiny_decomposition},
      {"tiny_radical", tiny_radical},
      {"tiny_rank", tiny_rank},
  };
  return suites;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [n, _] : randomized_suites()) out.push_back(n);
    for (const auto& [n, _] : tiny_suites()) out.push_back(n);
    std::sort(out.begin(), out.end());
    return out;
  }();
  return names;
}

std::string suite_description(const std::string& name) {
  if (auto it = randomized_suites().find(name); it != randomized_suites().end()) return it->second.description;
  if (tiny_suites().count(name)) return tiny_suites().at(name)(SuiteOptions{}).description;
  throw Error(Errc::invalid_argument, "unknown suite '" + name + "'");
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& opt) { return run_suites({name}, opt).front(); }

std::vector<SuiteReport> run_suites(const std::vector<std::string>& names, const SuiteOptions& opt) {
  for (const auto& n : names)
    if (!randomized_suites().count(n) && !tiny_suites().count(n))
      throw Error(Errc::invalid_argument, "unknown suite '" + n + "'");
  if (opt.cases == 0) throw Error(Errc::invalid_argument, "a suite needs at least one case");

  std::shared_ptr<const Pool> pool;
  if (std::any_of(names.begin(), names.end(), [](const std::string& n) { return randomized_suites().count(n) > 0; }))
    pool = std::make_shared<const Pool>(build_pool(opt));

  auto task = [pool, opt](const std::string& n) {
    if (auto it = randomized_suites().find(n); it != randomized_suites().end())
      return run_randomized(n, it->second, *pool, opt);
    return tiny_suites().at(n)(opt);
  };
  std::vector<SuiteReport> out;
  if (opt.parallel) {
    std::vector<std::future<SuiteReport>> futures;
    for (const auto& n : names) futures.push_back(std::async(std::launch::async, task, n));
    for (auto& fu : futures) out.push_back(fu.get());
  } else {
    for (const auto& n : names) out.push_back(task(n));
  }
  std::sort(out.begin(), out.end(), [](const SuiteReport& x, const SuiteReport& y) { return x.name < y.name; });
  return out;
}

}  // namespace peirce
