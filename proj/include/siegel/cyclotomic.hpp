#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace siegel {

using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

std::string to_string(const Rational& q);

namespace detail {

/// Per-conductor constants of Q(zeta_N). Instances are immutable and live for
/// the whole program, so references handed out stay valid.
struct FieldData {
  int conductor = 1;
  int degree = 1;                                  // phi(N)
  std::vector<long long> modulus;                  // Phi_N, low to high, monic
  std::vector<std::vector<std::pair<int, long long>>> power;  // zeta^k, k in [0, N)
  std::vector<int> units;                          // (Z/N)^*
};

const FieldData& field(int conductor);

}  // namespace detail

/// N-th cyclotomic polynomial, integer coefficients low to high.
std::vector<long long> cyclotomic_polynomial(int conductor);
int euler_phi(int n);

/// Exact element of Q(zeta_N) in power-basis coordinates reduced modulo Phi_N.
///
/// Only nonzero coordinates are stored (sorted by exponent), which keeps the
/// many zeros and rationals that appear in centralizer systems cheap. The
/// representation is canonical for a fixed conductor; values of different
/// conductors are compared and combined in Q(zeta_lcm).
class CycNum {
 public:
  struct Term {
    int exponent;
    Rational coeff;
    bool operator==(const Term&) const = default;
  };

  CycNum() = default;
  explicit CycNum(int conductor);
  CycNum(int conductor, const Rational& value);
  CycNum(int conductor, long long value) : CycNum(conductor, Rational(value)) {}

  static CycNum root_of_unity(int conductor, long long exponent);
  /// i = zeta_N^{N/4}; requires 4 | N.
  static CycNum imaginary_unit(int conductor);

  int conductor() const noexcept { return conductor_; }
  int degree() const;
  const std::vector<Term>& terms() const noexcept { return terms_; }
  /// Dense coordinates over 1, zeta, ..., zeta^{phi(N)-1}.
  std::vector<Rational> coeffs() const;

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_rational() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_.front().exponent == 0);
  }
  Rational rational_value() const;  // requires is_rational()
  bool is_real() const;

  CycNum conj() const;
  CycNum galois(int unit) const;  // zeta -> zeta^unit
  CycNum lift(int conductor) const;
  CycNum inverse() const;

  std::complex<double> embed(int unit = 1) const;
  /// Sum of |coeff| over terms; bounds |embed()| and its rounding error.
  double magnitude_bound() const;

  CycNum operator-() const;
  CycNum& operator+=(const CycNum& other);
  CycNum& operator-=(const CycNum& other);
  CycNum& operator*=(const CycNum& other);
  CycNum& operator/=(const CycNum& other);

  friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
  friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
  friend CycNum operator*(const CycNum& a, const CycNum& b);
  friend CycNum operator/(CycNum a, const CycNum& b) { return a /= b; }
  friend bool operator==(const CycNum& a, const CycNum& b);

  /// Scales by a rational without touching the field tables.
  CycNum scaled(const Rational& q) const;

 private:
  friend CycNum cyc_reduce(int conductor, std::span<const Rational> raw);
  void accumulate(std::vector<Rational>& dense, int exponent, const Rational& c) const;
  static CycNum from_dense(int conductor, const std::vector<Rational>& dense);

  int conductor_ = 1;
  std::vector<Term> terms_;
};

/// Reduces sum raw[k] zeta_N^k modulo Phi_N (after folding with zeta^N = 1).
CycNum cyc_reduce(int conductor, std::span<const Rational> raw);
inline CycNum cyc_conj(const CycNum& x) { return x.conj(); }

/// (x + conj x)/2 and (x - conj x)/(2i); both lie in the maximal real subfield.
/// The result conductor is lcm(N, 4).
CycNum real_part(const CycNum& x);
CycNum imag_part(const CycNum& x);

/// Sign of a real cyclotomic number: exact zero test, then a floating
/// evaluation accepted only when it clears its rounding bound.
int sign(const CycNum& x);

/// Human-readable form: "zN^k" for roots of unity, otherwise a power-basis sum.
std::string to_string(const CycNum& x);

/// Dense row-major matrix over one ambient cyclotomic field.
class CycMatrix {
 public:
  CycMatrix() = default;
  CycMatrix(int rows, int cols, int conductor);

  static CycMatrix identity(int n, int conductor);
  static CycMatrix diagonal(const std::vector<CycNum>& entries);
  static CycMatrix from_rows(const std::vector<std::vector<CycNum>>& rows);
  /// [[a, b], [c, d]] with square blocks of equal size.
  static CycMatrix block2x2(const CycMatrix& a, const CycMatrix& b, const CycMatrix& c,
                            const CycMatrix& d);

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  int conductor() const noexcept { return conductor_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  const CycNum& operator()(int r, int c) const { return data_[static_cast<size_t>(r * cols_ + c)]; }
  void set(int r, int c, const CycNum& value);

  CycMatrix block(int r0, int c0, int nrows, int ncols) const;
  CycMatrix lift(int conductor) const;
  CycMatrix conj() const;
  CycMatrix transpose() const;
  CycMatrix adjoint() const { return conj().transpose(); }
  CycNum trace() const;
  bool is_zero() const;
  bool is_diagonal() const;

  CycMatrix operator-() const;
  friend CycMatrix operator+(const CycMatrix& a, const CycMatrix& b);
  friend CycMatrix operator-(const CycMatrix& a, const CycMatrix& b);
  friend CycMatrix operator*(const CycMatrix& a, const CycMatrix& b);
  friend CycMatrix operator*(const CycNum& s, const CycMatrix& a);
  friend bool operator==(const CycMatrix& a, const CycMatrix& b);

 private:
  int rows_ = 0;
  int cols_ = 0;
  int conductor_ = 1;
  std::vector<CycNum> data_;
};

}  // namespace siegel
