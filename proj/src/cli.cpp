#include "peirce/cli.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <memory>
#include <random>
#include <sstream>

#include "peirce/algebra_file.hpp"
#include "peirce/corner.hpp"
#include "peirce/error.hpp"
#include "peirce/generators.hpp"
#include "peirce/rank.hpp"
#include "peirce/regulars.hpp"
#include "peirce/suite.hpp"
#include "peirce/wedderburn.hpp"

namespace peirce {

using json = nlohmann::ordered_json;

namespace {

// Hypothesis named by each input-side error, shown next to the message.
std::string hypothesis_of(Errc c) {
  switch (c) {
    case Errc::not_regular: return "the element must be regular: a = aba for some b";
    case Errc::not_regular_square: return "a^2 must be regular";
    case Errc::infinite_square_rank: return "a^2 must lie in the right socle (finite rank)";
    case Errc::infinite_rank: return "the element must have finite right rank";
    case Errc::not_semiprime: return "the algebra must be semiprime: J(A) = 0";
    case Errc::not_unital: return "the algebra must have a unity";
    case Errc::characteristic_too_small: return "p must exceed the bound of the chosen method or generator";
    case Errc::hypothesis_violation: return "the supplied ideals must satisfy the decomposition conditions";
    case Errc::search_space_too_large: return "the enumeration must fit under --brute-cap";
    default: return "";
  }
}

class Ledger {
 public:
  void add(const std::string& identity, bool passed, const std::string& detail = "") {
    json e;
    e["identity"] = identity;
    e["passed"] = passed;
    if (!detail.empty()) e["detail"] = detail;
    entries_.push_back(std::move(e));
    ok_ = ok_ && passed;
  }
  void add(const std::vector<Certificate>& certs, const std::string& prefix = "") {
    for (const auto& c : certs) add(prefix + c.name, c.passed, c.detail);
  }
  bool ok() const { return ok_; }
  json take() { return std::move(entries_); }

 private:
  json entries_ = json::array();
  bool ok_ = true;
};

json matrix_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json r = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(m(i, j));
    rows.push_back(std::move(r));
  }
  return rows;
}

struct Context {
  const CliOptions& opt;
  std::string text;
  LoadedAlgebra loaded;
  AlgebraPtr a;
  std::unique_ptr<SocleAnalysis> socle_;
  std::mt19937_64 rng;
  json* partial;  // reported even when the command fails part way

  const SCAlgebra& alg() const { return *a; }
  const PrimeField& field() const { return a->field(); }
  const SocleAnalysis& socle() {
    if (!socle_) socle_ = std::make_unique<SocleAnalysis>(a, opt.brute_cap);
    return *socle_;
  }
  Vector element() const {
    if (opt.element.empty()) throw Error(Errc::invalid_argument, "this command needs --element <label>");
    return loaded.element(opt.element);
  }
  // Subspace listing: dimension always, basis as matrices with --full.
  json subspace(const Subspace& u) const {
    json j;
    j["dim"] = u.dim();
    if (opt.full) {
      json b = json::array();
      for (std::size_t i = 0; i < u.dim(); ++i) b.push_back(matrix_json(loaded.algebra.to_matrix(u.basis_row(i))));
      j["basis"] = std::move(b);
    }
    return j;
  }
  json elem(const Vector& v) const { return matrix_json(loaded.algebra.to_matrix(v)); }
};

json blocks_json(const WedderburnStructure& w, std::uint32_t p) {
  json out = json::array();
  for (const auto& b : w.blocks) {
    json j;
    j["n"] = b.n;
    j["e"] = b.e;
    j["q"] = b.q(p);
    j["dim"] = b.block.dim();
    out.push_back(std::move(j));
  }
  return out;
}

json cmd_info(Context& c, Ledger& ledger) {
  const SCAlgebra& a = c.alg();
  json j;
  j["p"] = c.loaded.file.p;
  j["n"] = c.loaded.file.n;
  j["dim"] = a.dim();
  j["unital"] = a.is_unital();
  json labels = json::array();
  for (const auto& [l, _] : c.loaded.elements) labels.push_back(l);
  j["elements"] = std::move(labels);
  const SocleAnalysis& s = c.socle();
  j["radical_dim"] = s.radical().dim();
  j["semiprime"] = s.semiprime();
  j["right_socle_dim"] = s.right_socle().dim();
  j["left_socle_dim"] = s.left_socle().dim();
  if (a.is_unital()) {
    bool ok = true;
    for (std::size_t i = 0; i < a.dim(); ++i) {
      Vector e = a.basis_element(i);
      ok = ok && a.multiply(a.one(), e) == e && a.multiply(e, a.one()) == e;
    }
    ledger.add("1 x = x 1 = x on the basis", ok);
  }
  ledger.add("right socle is a two-sided ideal", is_ideal(a, s.right_socle(), Side::both));
  ledger.add("left socle is a two-sided ideal", is_ideal(a, s.left_socle(), Side::both));
  return j;
}

json cmd_radical(Context& c, Ledger& ledger) {
  const SCAlgebra& a = c.alg();
  Subspace j_rad = radical(a, c.opt.brute_cap);
  json j;
  std::string method = "trace form";
  try {
    Subspace t = jacobson_radical(c.loaded.algebra);
    ledger.add("trace radical = radical", t == j_rad);
  } catch (const CharacteristicTooSmall&) {
    method = "enumeration";
  }
  j["method"] = method;
  j["radical"] = c.subspace(j_rad);
  Nilpotency nil = is_nilpotent(a, j_rad);
  j["nilpotency_index"] = nil.index;
  j["quotient_dim"] = a.dim() - j_rad.dim();
  ledger.add("J is a two-sided ideal", is_ideal(a, j_rad, Side::both));
  ledger.add("J is nilpotent", nil.nilpotent);
  Quotient q = quotient(a, j_rad);
  ledger.add("J(A/J) = 0", radical(*q.algebra, c.opt.brute_cap).is_zero());
  return j;
}

json cmd_structure(Context& c, Ledger& ledger) {
  const SCAlgebra& a = c.alg();
  SemisimpleQuotient sq = semisimple_quotient(a, c.opt.brute_cap);
  const SCAlgebra& q = *sq.quotient.algebra;
  const PrimeField& f = c.field();
  json j;
  j["radical"] = c.subspace(sq.radical);
  j["quotient_dim"] = q.dim();
  j["blocks"] = blocks_json(sq.structure, f.p());
  std::size_t total = 0;
  Vector sum = q.zero();
  bool idem = true, orth = true;
  for (std::size_t i = 0; i < sq.structure.blocks.size(); ++i) {
    const auto& b = sq.structure.blocks[i];
    total += b.n * b.n * b.e;
    idem = idem && q.is_idempotent(b.z);
    sum = add(f, sum, b.z);
    for (std::size_t k = 0; k < sq.structure.blocks.size(); ++k)
      if (k != i) orth = orth && is_zero(q.multiply(b.z, sq.structure.blocks[k].z));
  }
  ledger.add("sum of n^2 e over blocks = dim A/J", total == q.dim());
  ledger.add("central idempotents are idempotent", idem);
  ledger.add("central idempotents are orthogonal", orth);
  ledger.add("central idempotents sum to 1", q.dim() == 0 || (q.is_unital() && sum == q.one()));
  return j;
}

json cmd_rank(Context& c, Ledger& ledger) {
  const SocleAnalysis& s = c.socle();
  const PrimeField& f = c.field();
  Vector x = c.element();
  RankResult r = s.right_rank(x), l = s.left_rank(x);
  json j;
  j["element"] = c.opt.element;
  j["right_rank"] = r.infinite() ? json("infinite") : json(*r.value);
  j["left_rank"] = l.infinite() ? json("infinite") : json(*l.value);
  if (r.infinite()) {
    ledger.add("x is outside the right socle", !s.right_socle().contains(f, x));
  } else {
    ledger.add("x is in the right socle", s.right_socle().contains(f, x));
    if (r.witness) {
      Vector sum = c.alg().zero();
      bool minimal = true;
      for (const auto& comp : r.witness->components) {
        sum = add(f, sum, comp);
        minimal = minimal && is_minimal_right_ideal(s, one_sided_ideal(c.alg(), {comp}, Side::right));
      }
      ledger.add("witness has rank-many components", r.witness->components.size() == *r.value);
      ledger.add("witness components sum to x", sum == x);
      ledger.add("each component generates a minimal right ideal", minimal);
    }
    ledger.add("length of xA = right rank",
               s.module_length(one_sided_ideal(c.alg(), {x}, Side::right), Side::right) == *r.value);
  }
  return j;
}

json cmd_regular(Context& c, Ledger& ledger) {
  const SCAlgebra& a = c.alg();
  Vector x = c.element();
  json j;
  j["element"] = c.opt.element;
  auto inv = inner_inverses(a, x);
  j["regular"] = inv.has_value();
  if (!inv) {
    ledger.add("no b with xbx = x", !is_regular(a, x));
    return j;
  }
  RegularCertificate rc = inner_inverse(a, x);
  j["inner_inverse"] = c.elem(rc.b);
  j["inner_inverse_family_dim"] = inv->kernel.dim();
  ledger.add("x b x = x", a.multiply3(x, rc.b, x) == x);
  ledger.add("e = x b is idempotent", a.is_idempotent(rc.e));
  ledger.add("regular certificate verifies", verify(a, rc));
  if (a.is_unital()) {
    try {
      UnitRegularCertificate ur = unit_regular_factorization(a, x, c.rng);
      j["unit_regular"] = true;
      if (c.opt.full) {
        j["idempotent"] = c.elem(ur.e);
        j["unit"] = c.elem(ur.u);
      }
      ledger.add("x = e u with u invertible", verify(a, ur));
    } catch (const Error& e) {
      if (e.code() != Errc::not_unit_regular && e.code() != Errc::retries_exhausted) throw;
      j["unit_regular"] = false;
    }
  }
  Vector x2 = a.multiply(x, x);
  j["square_regular"] = is_regular(a, x2);
  return j;
}

json cmd_corner(Context& c, Ledger& ledger) {
  const SCAlgebra& a = c.alg();
  const PrimeField& f = c.field();
  Vector x = c.element();
  if (!is_regular(a, x)) throw Error(Errc::not_regular, "element '" + c.opt.element + "' is not regular");
  RegularCertificate rc = inner_inverse(a, x);
  CornerQuotient cq = corner_quotient_structure(a, x, rc.b, c.opt.brute_cap);
  json j;
  j["element"] = c.opt.element;
  j["corner"] = c.subspace(corner_span(a, x, x));
  j["corner_radical"] = c.subspace(cq.radical);
  j["quotient_dim"] = cq.quotient.algebra->dim();
  j["blocks"] = blocks_json(cq.structure, f.p());
  ledger.add("J(aAa) = {x in aAa : axa in J(A)}",
             image(f, cq.corner.embedding, radical(*cq.corner.algebra, c.opt.brute_cap)) == cq.radical);
  CornerIso iso = corner_iso_deformed(a, rc);
  ledger.add("x -> xb is multiplicative onto (eAe)_{eae}", verify_multiplicative(iso.to_deformed));
  ledger.add("y -> ya is multiplicative back to aAa", verify_multiplicative(iso.to_corner));
  ledger.add("the two maps are mutually inverse",
             multiply(f, iso.to_corner.matrix, iso.to_deformed.matrix) == Matrix::identity(iso.pres.a_corner.algebra->dim()));
  const SocleAnalysis& s = c.socle();
  if (s.semiprime() && !s.right_rank(x).infinite()) {
    ACornerStructure ac = a_corner_structure(s, x, c.rng);
    j["rank_a2"] = ac.rank_a2;
    ledger.add(ac.certificates);
    SemiprimeEquivalences eq = semiprime_equivalences(s, x);
    json e;
    e["corner_semiprime"] = eq.corner_semiprime;
    e["rank_a2_equals_rank_a"] = eq.ranks_equal;
    e["square_witnesses"] = eq.square_witnesses;
    e["radical_zero"] = eq.radical_zero;
    e["matrix_form"] = eq.matrix_form;
    j["semiprime_conditions"] = std::move(e);
    ledger.add("the five semiprime conditions agree", eq.agree());
  }
  return j;
}

// Displayed block patterns of the generated ten-block example, compared
// against the algebra they came from.
void paper10_patterns_section(Context& c, json& j, Ledger& ledger) {
  std::size_t d = 0;
  for (const auto& com : c.loaded.file.comments)
    if (std::sscanf(com.c_str(), " gen paper10 d_block=%zu", &d) == 1) break;
  if (d == 0 || c.loaded.file.n != 10 * d) return;
  GeneratedAlgebra g = gen_paper10(c.field(), d);
  if (g.algebra.span() != c.loaded.algebra.span()) return;
  const PrimeField& f = c.field();
  Paper10Patterns pat = paper10_patterns(c.loaded.algebra, d);
  json p;
  p["corner_pattern_dim"] = pat.corner.dim();
  p["i0_dim"] = pat.i0.dim();
  p["i1_dim"] = pat.i1.dim();
  p["i2_dim"] = pat.i2.dim();
  const std::size_t meet = subspace_intersect(f, pat.i1, pat.i2).dim();
  p["i1_meet_i2_dim"] = meet;
  j["displayed_patterns"] = std::move(p);
  if (c.opt.element.empty()) return;
  Vector x = c.element();
  ledger.add("displayed aRa pattern = aAa", pat.corner == corner_span(c.alg(), x, x));
  ledger.add("displayed I_0 + I_1 + I_2 = aAa",
             subspace_sum(f, subspace_sum(f, pat.i0, pat.i1), pat.i2) == corner_span(c.alg(), x, x));
  ledger.add("displayed I_1 and I_2 intersect", meet != 0, "dim " + std::to_string(meet));
}

json decomposition_json(Context& c, const CornerDecomposition& d) {
  json j;
  j["element"] = c.opt.element;
  j["corner_dim"] = d.a_corner.algebra->dim();
  j["rank_a2"] = d.rank_a2;
  j["k"] = d.k();
  j["i0"] = c.subspace(d.i0);
  json ideals = json::array();
  for (const auto& ci : d.ideals) {
    json e;
    e["n"] = ci.n;
    e["e"] = ci.e;
    e["ideal"] = c.subspace(ci.ideal);
    e["radical"] = c.subspace(ci.radical);
    ideals.push_back(std::move(e));
  }
  j["ideals"] = std::move(ideals);
  return j;
}

json cmd_decompose(Context& c, Ledger& ledger) {
  json j;
  paper10_patterns_section(c, j, ledger);
  *c.partial = j;
  Vector x = c.element();
  CornerDecomposition d = main_decompose(c.socle(), x, c.rng);
  json body = decomposition_json(c, d);
  for (auto it = j.begin(); it != j.end(); ++it) body[it.key()] = it.value();
  ledger.add(d.certificates);
  if (c.socle().semiprime()) {
    ConverseReport cr = verify_converse(c.socle(), converse_input(d));
    ledger.add(cr.certificates, "converse: ");
  }
  return body;
}

json cmd_shapes(Context& c, Ledger& ledger) {
  Vector x = c.element();
  CornerDecomposition d = main_decompose(c.socle(), x, c.rng);
  ledger.add(d.certificates);
  ShapeReport r = corner_shapes(c.socle(), d);
  auto entries = [](const std::vector<ShapeEntry>& v) {
    json a = json::array();
    for (const auto& s : v) a.push_back(json{{"m", s.m}, {"n", s.n}, {"e", s.e}});
    return a;
  };
  json j;
  j["element"] = c.opt.element;
  j["rank_a"] = r.rank_a;
  j["live"] = entries(r.live);
  j["dead"] = entries(r.dead);
  ledger.add("sum of (m + n) e = rank a", r.total() == r.rank_a,
             std::to_string(r.total()) + " vs " + std::to_string(r.rank_a));
  return j;
}

json cmd_verify(const CliOptions& opt, Ledger& ledger) {
  SuiteOptions so;
  so.seed = opt.seed;
  so.cases = opt.cases;
  if (opt.p) so.p = *opt.p;
  std::vector<std::string> names;
  if (opt.suite == "all") names = suite_names();
  else names = {opt.suite};
  json j;
  j["p"] = so.p;
  j["cases_per_suite"] = so.cases;
  json suites = json::array();
  for (const auto& r : run_suites(names, so)) {
    json e;
    e["name"] = r.name;
    e["description"] = r.description;
    e["cases"] = r.cases;
    e["skipped"] = r.skipped;
    e["failures"] = r.failures;
    suites.push_back(std::move(e));
    ledger.add(r.name + ": " + r.description, r.passed(),
               r.failures.empty() ? std::to_string(r.cases) + " cases" : r.failures.front());
  }
  j["suites"] = std::move(suites);
  return j;
}

json cmd_gen(const CliOptions& opt, Ledger& ledger) {
  const std::uint32_t p = opt.p.value_or(101);
  GeneratedAlgebra g = generate(opt.input, p, opt.d_block, opt.seed);
  const std::string text = serialize(to_file(g));
  LoadedAlgebra back = load_algebra_text(text);
  ledger.add("file reparses to the same algebra", back.algebra.span() == g.algebra.span());
  ledger.add("serialization round-trip is byte-identical", serialize(back.file) == text);
  json j;
  j["name"] = g.name;
  j["p"] = p;
  j["n"] = g.algebra.n();
  j["dim"] = g.algebra.dim();
  json labels = json::array();
  for (const auto& [l, _] : g.elements) labels.push_back(l);
  j["elements"] = std::move(labels);
  if (g.name == "paper10") {
    const PrimeField f(p);
    const Matrix& a = g.elements[0].second;
    const Matrix& at = g.elements[1].second;
    const Matrix& a2 = g.elements[2].second;
    const Matrix& a2t = g.elements[3].second;
    ledger.add("a aT a = a", multiply(f, multiply(f, a, at), a) == a);
    ledger.add("a^2 (a^2)T a^2 = a^2", multiply(f, multiply(f, a2, a2t), a2) == a2);
    ledger.add("a^3 = 0", multiply(f, a2, a).is_zero());
  }
  if (!opt.out.empty()) {
    std::ofstream out(opt.out, std::ios::binary);
    if (!out) throw Error(Errc::invalid_argument, "cannot write " + opt.out);
    out << text;
    j["written"] = opt.out;
  } else {
    j["text"] = text;
  }
  return j;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::invalid_argument, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

std::string fnv1a_digest(std::string_view bytes) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : bytes) h = (h ^ ch) * 1099511628211ull;
  std::ostringstream out;
  out << "fnv1a64:" << std::hex << std::setw(16) << std::setfill('0') << h;
  return out.str();
}

Report run_command(const CliOptions& opt) {
  const auto start = std::chrono::steady_clock::now();
  json doc;
  json echo;
  echo["command"] = opt.command;
  if (!opt.input.empty()) echo["input"] = opt.input;
  if (!opt.element.empty()) echo["element"] = opt.element;
  if (opt.p) echo["p"] = *opt.p;
  if (opt.command == "verify") echo["suite"] = opt.suite;
  echo["full"] = opt.full;
  doc["command"] = echo;
  doc["seed"] = opt.seed;

  Ledger ledger;
  Report rep;
  json partial;
  try {
    json payload;
    if (opt.command == "verify") {
      doc["input_digest"] = fnv1a_digest("verify " + opt.suite);
      payload = cmd_verify(opt, ledger);
    } else if (opt.command == "gen") {
      doc["input_digest"] = fnv1a_digest("gen " + opt.input);
      payload = cmd_gen(opt, ledger);
    } else {
      static const char* kFileCommands[] = {"info", "radical", "structure", "rank",
                                            "regular", "corner", "decompose", "shapes"};
      if (std::find(std::begin(kFileCommands), std::end(kFileCommands), opt.command) == std::end(kFileCommands))
        throw Error(Errc::invalid_argument, "unknown command '" + opt.command + "'");
      if (opt.input.empty()) throw Error(Errc::invalid_argument, "missing algebra file");
      std::string text = read_file(opt.input);
      doc["input_digest"] = fnv1a_digest(text);
      Context c{opt, text, load_algebra_text(text), nullptr, nullptr, std::mt19937_64(opt.seed), &partial};
      c.a = c.loaded.algebra.sc();
      if (opt.p && *opt.p != c.loaded.file.p)
        throw Error(Errc::invalid_argument,
                    "--p " + std::to_string(*opt.p) + " does not match the file's p=" + std::to_string(c.loaded.file.p));
      if (opt.command == "info") payload = cmd_info(c, ledger);
      else if (opt.command == "radical") payload = cmd_radical(c, ledger);
      else if (opt.command == "structure") payload = cmd_structure(c, ledger);
      else if (opt.command == "rank") payload = cmd_rank(c, ledger);
      else if (opt.command == "regular") payload = cmd_regular(c, ledger);
      else if (opt.command == "corner") payload = cmd_corner(c, ledger);
      else if (opt.command == "decompose") payload = cmd_decompose(c, ledger);
      else payload = cmd_shapes(c, ledger);
    }
    doc["payload"] = std::move(payload);
    doc["status"] = ledger.ok() ? "pass" : "fail";
    rep.exit_code = ledger.ok() ? 0 : 1;
  } catch (const Error& e) {
    if (!partial.is_null()) doc["payload"] = partial;
    json err;
    err["code"] = std::string(e.name());
    err["message"] = e.what();
    if (auto* pe = dynamic_cast<const ParseError*>(&e)) {
      err["line"] = pe->line();
      err["column"] = pe->column();
    }
    if (auto h = hypothesis_of(e.code()); !h.empty()) err["hypothesis"] = h;
    doc["error"] = std::move(err);
    const bool internal = e.code() == Errc::internal;
    doc["status"] = internal ? "fail" : "error";
    rep.exit_code = internal ? 1 : 2;
  } catch (const std::exception& e) {
    doc["error"] = json{{"code", "internal"}, {"message", e.what()}};
    doc["status"] = "fail";
    rep.exit_code = 1;
  }
  doc["ledger"] = ledger.take();
  doc["timing_ms"] =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  rep.doc = std::move(doc);
  return rep;
}

namespace {

std::string label(std::string key) {
  for (char& ch : key)
    if (ch == '_' && &ch != &key.front()) ch = ' ';
  return key;
}

std::string scalar_text(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

void render(std::ostringstream& out, const json& v, const std::string& indent) {
  for (auto it = v.begin(); it != v.end(); ++it) {
    const json& x = it.value();
    const std::string key = label(it.key());
    if (x.is_object()) {
      if (x.size() == 1 && x.contains("dim")) {
        out << indent << key << ": dim " << x["dim"] << "\n";
      } else {
        out << indent << key << ":\n";
        render(out, x, indent + "  ");
      }
    } else if (x.is_array() && !x.empty() && x.front().is_object()) {
      out << indent << key << ":\n";
      for (std::size_t i = 0; i < x.size(); ++i) {
        out << indent << "  [" << i + 1 << "]";
        bool nested = false;
        for (auto jt = x[i].begin(); jt != x[i].end(); ++jt) {
          if (jt.value().is_object() && jt.value().size() == 1 && jt.value().contains("dim"))
            out << " " << label(jt.key()) << " dim " << jt.value()["dim"];
          else if (jt.value().is_structured())
            nested = true;
          else
            out << " " << label(jt.key()) << "=" << scalar_text(jt.value());
        }
        out << "\n";
        if (nested)
          for (auto jt = x[i].begin(); jt != x[i].end(); ++jt)
            if (jt.value().is_structured() && !(jt.value().is_object() && jt.value().size() == 1))
              out << indent << "    " << label(jt.key()) << ": " << jt.value().dump() << "\n";
      }
    } else if (x.is_string() && x.get<std::string>().find('\n') != std::string::npos) {
      out << x.get<std::string>();
    } else {
      out << indent << key << ": " << scalar_text(x) << "\n";
    }
  }
}

}  // namespace

std::string render_text(const json& doc) {
  std::ostringstream out;
  const json& cmd = doc["command"];
  out << cmd["command"].get<std::string>();
  if (cmd.contains("input")) out << " " << cmd["input"].get<std::string>();
  out << "  (seed " << doc["seed"] << ", " << doc.value("input_digest", std::string("-")) << ")\n";
  if (doc.contains("payload")) render(out, doc["payload"], "");
  if (doc.contains("error")) {
    const json& e = doc["error"];
    out << "error: " << e["code"].get<std::string>() << ": " << e["message"].get<std::string>() << "\n";
    if (e.contains("hypothesis")) out << "hypothesis: " << e["hypothesis"].get<std::string>() << "\n";
  }
  const json& ledger = doc["ledger"];
  if (!ledger.empty()) out << "checks:\n";
  for (const auto& e : ledger) {
    out << "  [" << (e["passed"].get<bool>() ? "pass" : "FAIL") << "] " << e["identity"].get<std::string>();
    if (e.contains("detail")) out << "  (" << e["detail"].get<std::string>() << ")";
    out << "\n";
  }
  out << "status: " << doc["status"].get<std::string>() << "\n";
  return out.str();
}

}  // namespace peirce
