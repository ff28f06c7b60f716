#include "peirce/algebra_file.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>

#include "peirce/error.hpp"

namespace peirce {

namespace {

struct Token {
  std::string_view text;
  std::size_t column = 0;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i >= line.size()) break;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    out.push_back(Token{line.substr(i, j - i), i + 1});
    i = j;
  }
  return out;
}

std::int64_t parse_int(const Token& t, std::size_t line) {
  std::int64_t v = 0;
  const char* b = t.text.data();
  const char* e = b + t.text.size();
  auto [ptr, ec] = std::from_chars(b, e, v);
  if (ec != std::errc() || ptr != e)
    throw ParseError(line, t.column, "expected an integer, found '" + std::string(t.text) + "'");
  return v;
}

std::uint64_t parse_key(const Token& t, std::string_view key, std::size_t line) {
  const std::string prefix = std::string(key) + "=";
  if (t.text.substr(0, prefix.size()) != prefix)
    throw ParseError(line, t.column, "expected " + prefix + "<int>, found '" + std::string(t.text) + "'");
  Token value{t.text.substr(prefix.size()), t.column + prefix.size()};
  std::int64_t v = parse_int(value, line);
  if (v < 0) throw ParseError(line, value.column, std::string(key) + " must be non-negative");
  return static_cast<std::uint64_t>(v);
}

Vector parse_entries(const PrimeField& f, const std::vector<Token>& toks, std::size_t first, std::size_t count,
                     std::size_t line, std::size_t end_column) {
  if (toks.size() - first != count) {
    const std::size_t col = toks.size() > first + count ? toks[first + count].column : end_column;
    throw ParseError(line, col,
                     "expected " + std::to_string(count) + " entries, found " + std::to_string(toks.size() - first));
  }
  Vector v(count);
  for (std::size_t i = 0; i < count; ++i) v[i] = f.reduce(parse_int(toks[first + i], line));
  return v;
}

}  // namespace

AlgebraFile read_algebra_text(std::string_view text) {
  AlgebraFile file;
  std::optional<PrimeField> field;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;

    const std::size_t hash = line.find('#');
    std::string_view body = line.substr(0, hash);
    std::vector<Token> toks = tokenize(body);
    if (toks.empty()) {
      if (hash != std::string_view::npos && field) {
        std::string_view c = line.substr(hash + 1);
        if (!c.empty() && c.back() == '\r') c.remove_suffix(1);
        file.comments.emplace_back(c);
      }
      if (nl == text.size()) break;
      continue;
    }
    const std::size_t end_col = body.size() + 1;

    if (!field) {
      if (toks[0].text != "algebra") throw ParseError(line_no, toks[0].column, "expected 'algebra' header");
      if (toks.size() != 4) throw ParseError(line_no, toks.back().column, "header needs p=, n= and dim=");
      const std::uint64_t p = parse_key(toks[1], "p", line_no);
      if (p < 2 || p >= (1ull << 31) || !is_prime(p)) throw ParseError(line_no, toks[1].column, "p must be a prime below 2^31");
      file.p = static_cast<std::uint32_t>(p);
      file.n = parse_key(toks[2], "n", line_no);
      file.dim = parse_key(toks[3], "dim", line_no);
      if (file.n == 0) throw ParseError(line_no, toks[2].column, "n must be positive");
      if (file.dim > file.n * file.n) throw ParseError(line_no, toks[3].column, "dim exceeds n^2");
      field.emplace(file.p);
    } else if (toks[0].text == "basis:") {
      if (!file.elements.empty()) throw ParseError(line_no, 1, "basis lines must precede elements");
      if (file.basis.size() == file.dim) throw ParseError(line_no, toks[0].column, "more basis lines than dim");
      file.basis.emplace_back(file.n, file.n, parse_entries(*field, toks, 1, file.n * file.n, line_no, end_col));
      file.basis_lines.push_back(line_no);
    } else if (toks[0].text == "element") {
      if (toks.size() < 3) throw ParseError(line_no, end_col, "expected 'element <label>: matrix|coords ...'");
      std::string_view label = toks[1].text;
      if (label.size() < 2 || label.back() != ':') throw ParseError(line_no, toks[1].column, "label must end with ':'");
      label.remove_suffix(1);
      for (const auto& e : file.elements)
        if (e.label == label) throw ParseError(line_no, toks[1].column, "duplicate label '" + std::string(label) + "'");
      AlgebraFile::Named named;
      named.label = std::string(label);
      if (toks[2].text == "matrix") {
        named.values = parse_entries(*field, toks, 3, file.n * file.n, line_no, end_col);
      } else if (toks[2].text == "coords") {
        named.is_matrix = false;
        named.values = parse_entries(*field, toks, 3, file.dim, line_no, end_col);
      } else {
        throw ParseError(line_no, toks[2].column, "expected 'matrix' or 'coords'");
      }
      named.line = line_no;
      file.elements.push_back(std::move(named));
    } else {
      throw ParseError(line_no, toks[0].column, "unknown directive '" + std::string(toks[0].text) + "'");
    }
    if (nl == text.size()) break;
  }
  if (!text.empty() && text.back() == '\n') --line_no;
  if (!field) throw ParseError(line_no, 1, "missing 'algebra' header");
  if (file.basis.size() != file.dim)
    throw ParseError(line_no, 1,
                     "expected " + std::to_string(file.dim) + " basis lines, found " + std::to_string(file.basis.size()));
  return file;
}

const Vector& LoadedAlgebra::element(const std::string& label) const {
  for (const auto& [name, v] : elements)
    if (name == label) return v;
  throw Error(Errc::invalid_argument, "no element labelled '" + label + "'");
}

LoadedAlgebra load_algebra_text(std::string_view text) {
  AlgebraFile file = read_algebra_text(text);
  const PrimeField f(file.p);
  SpanBuilder builder(f, file.n * file.n);
  for (std::size_t i = 0; i < file.dim; ++i)
    if (!builder.insert(flatten(file.basis[i])))
      throw ParseError(file.basis_lines[i], 1, "basis matrix depends on the previous ones");
  const Subspace span = builder.finish();
  for (std::size_t i = 0; i < file.dim; ++i)
    for (std::size_t j = 0; j < file.dim; ++j)
      if (!span.contains(f, flatten(multiply(f, file.basis[i], file.basis[j]))))
        throw Error(Errc::closure_violation, "basis " + std::to_string(i + 1) + " * basis " + std::to_string(j + 1) +
                                                 " leaves the span");

  LoadedAlgebra out{file, MatrixAlgebra(f, file.n, file.basis, "file"), {}};
  for (const auto& e : file.elements) {
    Matrix m(file.n, file.n);
    if (e.is_matrix) {
      m = Matrix(file.n, file.n, e.values);
    } else {
      for (std::size_t i = 0; i < file.dim; ++i) m = add(f, m, scale(f, e.values[i], file.basis[i]));
    }
    auto c = out.algebra.coords_of(m);
    if (!c) throw ParseError(e.line, 1, "element '" + e.label + "' lies outside the span");
    out.elements.emplace_back(e.label, std::move(*c));
  }
  return out;
}

LoadedAlgebra load_algebra_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::invalid_argument, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return load_algebra_text(ss.str());
}

std::string serialize(const AlgebraFile& file) {
  std::ostringstream out;
  out << "algebra p=" << file.p << " n=" << file.n << " dim=" << file.dim << "\n";
  for (const auto& c : file.comments) out << "#" << c << "\n";
  auto entries = [&](const Vector& v) {
    for (Scalar x : v) out << ' ' << x;
    out << "\n";
  };
  for (const auto& m : file.basis) {
    out << "basis:";
    entries(m.entries());
  }
  for (const auto& e : file.elements) {
    out << "element " << e.label << ": " << (e.is_matrix ? "matrix" : "coords");
    entries(e.values);
  }
  return out.str();
}

AlgebraFile to_file(const GeneratedAlgebra& g) {
  const MatrixAlgebra& a = g.algebra;
  AlgebraFile file;
  file.p = a.field().p();
  file.n = a.n();
  file.dim = a.dim();
  file.comments.push_back(" " + g.comment);
  for (std::size_t i = 0; i < a.dim(); ++i) file.basis.push_back(a.basis_matrix(i));
  for (const auto& [label, m] : g.elements) file.elements.push_back({label, true, m.entries()});
  return file;
}

}  // namespace peirce
