#include "oirep/io.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace oirep {

namespace {

[[noreturn]] void fail(const std::string& msg, int line, int col) {
  throw FormatError(msg, line, col);
}

// minimal cursor over one line of text
struct Cursor {
  const std::string& s;
  size_t pos = 0;
  int line;

  explicit Cursor(const std::string& text, int ln) : s(text), line(ln) {}
  int col() const { return int(pos) + 1; }
  bool done() const { return pos >= s.size(); }
  char peek() const { return done() ? '\0' : s[pos]; }
  void skip_ws() {
    while (!done() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
  }
  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'", line, col());
    ++pos;
  }
  bool try_eat(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
  long integer() {
    skip_ws();
    size_t start = pos;
    if (peek() == '-' || peek() == '+') ++pos;
    while (!done() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) fail("expected an integer", line, col());
    return std::stol(s.substr(start, pos - start));
  }
};

std::vector<int> parse_int_list(Cursor& c) {
  c.skip_ws();
  c.expect('[');
  std::vector<int> out;
  c.skip_ws();
  if (c.try_eat(']')) return out;
  while (true) {
    out.push_back(int(c.integer()));
    c.skip_ws();
    if (c.try_eat(']')) break;
    c.expect(',');
  }
  return out;
}

OrdMorphism parse_morphism_at(Cursor& c) {
  int m = int(c.integer());
  c.expect('-');
  c.expect('>');
  int n = int(c.integer());
  c.expect(':');
  if (c.peek() == 'i') {
    c.expect('i');
    c.expect('d');
    if (m != n) fail("identity notation with distinct endpoints", c.line, c.col());
    return identity_morphism(n);
  }
  auto vals = parse_int_list(c);
  if (int(vals.size()) != m) fail("value list length mismatch", c.line, c.col());
  return make_morphism(m, n, std::move(vals));
}

Scalar parse_scalar_at(Cursor& c) {
  c.skip_ws();
  size_t start = c.pos;
  if (c.peek() == '-' || c.peek() == '+') ++c.pos;
  while (!c.done() && (std::isdigit(static_cast<unsigned char>(c.peek())) || c.peek() == '/'))
    ++c.pos;
  if (c.pos == start) fail("expected a scalar", c.line, c.col());
  return Scalar::parse(c.s.substr(start, c.pos - start));
}

// a "key: rest" line, failing with position info
std::pair<std::string, std::string> keyed_line(const std::string& text, int line,
                                               const std::string& want) {
  auto colon = text.find(':');
  if (colon == std::string::npos) fail("expected '" + want + ":'", line, 1);
  std::string key = text.substr(0, colon);
  if (key != want) fail("expected '" + want + ":', found '" + key + "'", line, 1);
  return {key, text.substr(colon + 1)};
}

std::string next_content_line(std::istream& is, int& line) {
  std::string text;
  while (std::getline(is, text)) {
    ++line;
    bool blank = true;
    for (char ch : text)
      if (!std::isspace(static_cast<unsigned char>(ch))) blank = false;
    if (!blank) return text;
  }
  fail("unexpected end of file", line, 1);
}

void write_matrix_block(std::ostream& os, const Matrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return;
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m.at(i, j).str();
    os << "\n";
  }
}

Matrix read_matrix_block(std::istream& is, int& line, int rows, int cols) {
  Matrix m(rows, cols);
  if (rows == 0 || cols == 0) return m;
  for (int i = 0; i < rows; ++i) {
    std::string text = next_content_line(is, line);
    Cursor c(text, line);
    for (int j = 0; j < cols; ++j) {
      m.at(i, j) = parse_scalar_at(c);
      c.skip_ws();
    }
    if (!c.done()) fail("trailing data in matrix row", line, c.col());
  }
  return m;
}

void write_body(std::ostream& os, const TruncatedModule& v) {
  os << "dims: [";
  for (int n = 0; n <= v.truncation; ++n) os << (n ? ", " : "") << v.dim(n);
  os << "]\n";
  for (int n = 0; n < v.truncation; ++n)
    for (int i = 1; i <= n + 1; ++i) {
      os << "gen " << n << " " << i << ":\n";
      write_matrix_block(os, v.gen_matrix(n, i));
    }
}

TruncatedModule read_body(std::istream& is, int& line, int truncation) {
  std::string dims_line = next_content_line(is, line);
  auto [k2, rest2] = keyed_line(dims_line, line, "dims");
  Cursor c2(rest2, line);
  auto dims = parse_int_list(c2);
  if (int(dims.size()) != truncation + 1) fail("dims length mismatch", line, c2.col());
  TruncatedModule v = make_module(dims);
  for (int n = 0; n < truncation; ++n)
    for (int i = 1; i <= n + 1; ++i) {
      std::string text = next_content_line(is, line);
      std::ostringstream want;
      want << "gen " << n << " " << i << ":";
      if (text.substr(0, want.str().size()) != want.str())
        fail("expected '" + want.str() + "'", line, 1);
      v.gen_matrix(n, i) = read_matrix_block(is, line, dims[n + 1], dims[n]);
    }
  return v;
}

}  // namespace

OrdMorphism parse_morphism(const std::string& text) {
  Cursor c(text, 1);
  c.skip_ws();
  auto f = parse_morphism_at(c);
  c.skip_ws();
  if (!c.done()) fail("trailing data after morphism", 1, c.col());
  return f;
}

AlgebraElement parse_algebra_element(const std::string& text, int source, int target) {
  AlgebraElement out = algebra_zero(source, target);
  Cursor c(text, 1);
  c.skip_ws();
  if (c.peek() == '0' && c.pos + 1 >= text.size()) return out;
  bool negate = false;
  if (c.try_eat('-')) negate = true;
  while (true) {
    c.skip_ws();
    Scalar coeff(1);
    // a term is [scalar*]morphism; scalars and sources both start with
    // digits, so look ahead for '*' before the morphism arrow
    size_t star = text.find('*', c.pos);
    size_t arrow = text.find("->", c.pos);
    if (star != std::string::npos && (arrow == std::string::npos || star < arrow)) {
      coeff = parse_scalar_at(c);
      c.expect('*');
    }
    if (negate) coeff = -coeff;
    auto f = parse_morphism_at(c);
    if (f.source != source || f.target != target)
      fail("morphism outside the expected slice", 1, c.col());
    out.coeffs[morphism_index(f)] += coeff;
    c.skip_ws();
    if (c.done()) break;
    if (c.try_eat('+')) {
      negate = false;
    } else if (c.try_eat('-')) {
      negate = true;
    } else {
      fail("expected '+' or '-'", 1, c.col());
    }
  }
  return out;
}

void write_module(std::ostream& os, const TruncatedModule& v) {
  os << "truncation: " << v.truncation << "\n";
  write_body(os, v);
}

TruncatedModule read_module(std::istream& is) {
  int line = 0;
  std::string header = next_content_line(is, line);
  auto [k, rest] = keyed_line(header, line, "truncation");
  Cursor c(rest, line);
  int trunc = int(c.integer());
  if (trunc < 0) fail("negative truncation", line, c.col());
  return read_body(is, line, trunc);
}

std::string module_to_text(const TruncatedModule& v) {
  std::ostringstream os;
  write_module(os, v);
  return os.str();
}

TruncatedModule module_from_text(const std::string& text) {
  std::istringstream is(text);
  return read_module(is);
}

void write_finite_dim(std::ostream& os, const FiniteDimModule& x) {
  os << "support: " << x.support << "\n";
  write_body(os, x.data);
}

FiniteDimModule read_finite_dim(std::istream& is) {
  int line = 0;
  std::string header = next_content_line(is, line);
  auto [k, rest] = keyed_line(header, line, "support");
  Cursor c(rest, line);
  int support = int(c.integer());
  if (support < 0) fail("negative support", line, c.col());
  return finite_dim(read_body(is, line, support));
}

void write_presentation(std::ostream& os, const PresentedModule& p) {
  os << "gens: [";
  for (size_t j = 0; j < p.gens.size(); ++j) os << (j ? ", " : "") << p.gens[j];
  os << "]\nrels: [";
  for (size_t i = 0; i < p.rels.size(); ++i) os << (i ? ", " : "") << p.rels[i];
  os << "]\n";
  for (size_t i = 0; i < p.rels.size(); ++i)
    for (size_t j = 0; j < p.gens.size(); ++j)
      os << "rel " << (i + 1) << " " << (j + 1) << ": " << to_text(p.rel_matrix[i][j])
         << "\n";
}

PresentedModule read_presentation(std::istream& is) {
  int line = 0;
  PresentedModule p;
  {
    std::string header = next_content_line(is, line);
    auto [k, rest] = keyed_line(header, line, "gens");
    Cursor c(rest, line);
    p.gens = parse_int_list(c);
  }
  {
    std::string header = next_content_line(is, line);
    auto [k, rest] = keyed_line(header, line, "rels");
    Cursor c(rest, line);
    p.rels = parse_int_list(c);
  }
  for (size_t i = 0; i < p.rels.size(); ++i) {
    std::vector<AlgebraElement> row;
    for (size_t j = 0; j < p.gens.size(); ++j) {
      std::string text = next_content_line(is, line);
      std::ostringstream want;
      want << "rel " << (i + 1) << " " << (j + 1) << ":";
      if (text.substr(0, want.str().size()) != want.str())
        fail("expected '" + want.str() + "'", line, 1);
      row.push_back(parse_algebra_element(text.substr(want.str().size()), p.gens[j],
                                          p.rels[i]));
    }
    p.rel_matrix.push_back(std::move(row));
  }
  return p;
}

std::string presentation_to_text(const PresentedModule& p) {
  std::ostringstream os;
  write_presentation(os, p);
  return os.str();
}

PresentedModule presentation_from_text(const std::string& text) {
  std::istringstream is(text);
  return read_presentation(is);
}

}  // namespace oirep
