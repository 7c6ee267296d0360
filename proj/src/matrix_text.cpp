#include "siegel/matrix_text.hpp"

#include <cctype>
#include <numeric>

#include "siegel/error.hpp"

namespace siegel {

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skip_space();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  bool accept(std::string_view word) {
    skip_space();
    if (text_.substr(pos_, word.size()) != word) return false;
    pos_ += word.size();
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  long long integer() {
    skip_space();
    const size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    if (pos_ - start > 15) fail("number too large");
    return std::stoll(std::string(text_.substr(start, pos_ - start)));
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::Parse, what + " at column " + std::to_string(pos_ + 1) + " of '" + std::string(text_) + "'");
  }

 private:
  std::string_view text_;
  size_t pos_ = 0;
};

/// root := 'z' N ['^' ['-'] k] | 'i'
bool parse_root(Cursor& in, CycNum& out) {
  if (in.accept('i')) {
    out = CycNum::imaginary_unit(4);
    return true;
  }
  if (!in.accept('z')) return false;
  const long long n = in.integer();
  if (n < 1 || n > 100000) in.fail("conductor out of range");
  long long k = 1;
  if (in.accept('^')) {
    const bool negative = in.accept('-');
    k = in.integer();
    if (negative) k = -k;
  }
  out = CycNum::root_of_unity(static_cast<int>(n), k);
  return true;
}

CycNum parse_term(Cursor& in) {
  CycNum root;
  if (parse_root(in, root)) return root;
  const long long num = in.integer();
  long long den = 1;
  if (in.accept('/')) {
    den = in.integer();
    if (den == 0) in.fail("zero denominator");
  }
  const Rational coeff(num, den);
  in.accept('*');
  if (parse_root(in, root)) return root.scaled(coeff);
  return CycNum(1, coeff);
}

CycNum parse_sum(Cursor& in) {
  bool negative = in.accept('-');
  if (!negative) in.accept('+');
  CycNum total(1);
  while (true) {
    CycNum t = parse_term(in);
    total += negative ? -t : t;
    if (in.accept('+')) negative = false;
    else if (in.accept('-')) negative = true;
    else return total;
  }
}

}  // namespace

CycNum parse_scalar(std::string_view text) {
  Cursor in(text);
  CycNum x = parse_sum(in);
  if (!in.done()) in.fail("unexpected trailing input");
  return x;
}

CycMatrix parse_matrix(std::string_view text) {
  Cursor in(text);
  std::vector<std::vector<CycNum>> rows;
  if (in.accept(std::string_view("diag"))) {
    in.expect('(');
    std::vector<CycNum> diag{parse_sum(in)};
    while (in.accept(',')) diag.push_back(parse_sum(in));
    in.expect(')');
    for (size_t r = 0; r < diag.size(); ++r) {
      rows.emplace_back(diag.size(), CycNum(1));
      rows.back()[r] = diag[r];
    }
  } else {
    in.expect('[');
    do {
      in.expect('[');
      std::vector<CycNum> row{parse_sum(in)};
      while (in.accept(',')) row.push_back(parse_sum(in));
      in.expect(']');
      if (!rows.empty() && row.size() != rows.front().size()) in.fail("rows of unequal length");
      rows.push_back(std::move(row));
    } while (in.accept(','));
    in.expect(']');
  }
  if (!in.done()) in.fail("unexpected trailing input");
  int conductor = 1;
  for (const auto& row : rows)
    for (const auto& x : row) conductor = std::lcm(conductor, x.conductor());
  for (auto& row : rows)
    for (auto& x : row) x = x.lift(conductor);
  return CycMatrix::from_rows(rows);
}

std::string format_matrix(const CycMatrix& m) {
  std::string s;
  if (m.is_square() && m.is_diagonal() && m.rows() > 0) {
    s = "diag(";
    for (int r = 0; r < m.rows(); ++r) s += (r ? "," : "") + to_string(m(r, r));
    return s + ")";
  }
  s = "[";
  for (int r = 0; r < m.rows(); ++r) {
    s += r ? ",[" : "[";
    for (int c = 0; c < m.cols(); ++c) s += (c ? "," : "") + to_string(m(r, c));
    s += "]";
  }
  return s + "]";
}

}  // namespace siegel
