#include "siegel/cyclotomic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>
#include <sstream>

#include "siegel/error.hpp"

namespace siegel {

std::string to_string(const Rational& q) {
  const auto num = boost::multiprecision::numerator(q);
  const auto den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

namespace {

int mobius(int n) {
  int result = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

using IntPoly = std::vector<long long>;

IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
  IntPoly out(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

// Exact quotient a / b for monic b.
IntPoly poly_div_exact(IntPoly a, const IntPoly& b) {
  const size_t db = b.size() - 1;
  if (a.size() < b.size()) return {0};
  IntPoly q(a.size() - db, 0);
  for (size_t k = a.size(); k-- > db;) {
    const long long c = a[k];
    q[k - db] = c;
    for (size_t j = 0; j <= db; ++j) a[k - db + j] -= c * b[j];
  }
  return q;
}

IntPoly x_pow_minus_one(int d) {
  IntPoly p(static_cast<size_t>(d) + 1, 0);
  p[0] = -1;
  p[static_cast<size_t>(d)] = 1;
  return p;
}

std::unique_ptr<detail::FieldData> make_field(int n) {
  auto f = std::make_unique<detail::FieldData>();
  f->conductor = n;
  f->modulus = cyclotomic_polynomial(n);
  f->degree = static_cast<int>(f->modulus.size()) - 1;
  for (int u = 1; u <= n; ++u)
    if (std::gcd(u, n) == 1) f->units.push_back(u);

  const int deg = f->degree;
  std::vector<long long> cur(static_cast<size_t>(deg), 0);
  cur[0] = 1;
  f->power.resize(static_cast<size_t>(n));
  for (int k = 0; k < n; ++k) {
    auto& entry = f->power[static_cast<size_t>(k)];
    for (int j = 0; j < deg; ++j)
      if (cur[static_cast<size_t>(j)] != 0) entry.emplace_back(j, cur[static_cast<size_t>(j)]);
    // multiply by zeta and substitute zeta^deg = -sum modulus[j] zeta^j
    const long long top = cur[static_cast<size_t>(deg - 1)];
    for (int j = deg - 1; j > 0; --j) cur[static_cast<size_t>(j)] = cur[static_cast<size_t>(j - 1)];
    cur[0] = 0;
    for (int j = 0; j < deg; ++j) cur[static_cast<size_t>(j)] -= top * f->modulus[static_cast<size_t>(j)];
  }
  return f;
}

}  // namespace

int euler_phi(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

std::vector<long long> cyclotomic_polynomial(int conductor) {
  if (conductor < 1) throw Error(ErrorKind::InvalidConductor, "conductor must be >= 1");
  IntPoly num{1};
  IntPoly den{1};
  for (int d = 1; d <= conductor; ++d) {
    if (conductor % d != 0) continue;
    const int mu = mobius(conductor / d);
    if (mu == 1) num = poly_mul(num, x_pow_minus_one(d));
    if (mu == -1) den = poly_mul(den, x_pow_minus_one(d));
  }
  return poly_div_exact(num, den);
}

namespace detail {

const FieldData& field(int conductor) {
  if (conductor < 1) throw Error(ErrorKind::InvalidConductor, "conductor must be >= 1");
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<FieldData>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[conductor];
  if (!slot) slot = make_field(conductor);
  return *slot;
}

}  // namespace detail

// ---------------------------------------------------------------- CycNum

CycNum::CycNum(int conductor) : conductor_(conductor) {
  if (conductor < 1) throw Error(ErrorKind::InvalidConductor, "conductor must be >= 1");
}

CycNum::CycNum(int conductor, const Rational& value) : CycNum(conductor) {
  if (value != 0) terms_.push_back({0, value});
}

CycNum CycNum::root_of_unity(int conductor, long long exponent) {
  const auto& f = detail::field(conductor);
  long long e = exponent % conductor;
  if (e < 0) e += conductor;
  CycNum out(conductor);
  for (const auto& [j, v] : f.power[static_cast<size_t>(e)]) out.terms_.push_back({j, Rational(v)});
  return out;
}

CycNum CycNum::imaginary_unit(int conductor) {
  if (conductor % 4 != 0)
    throw Error(ErrorKind::InvalidConductor, "i lies in Q(zeta_N) only for 4 | N");
  return root_of_unity(conductor, conductor / 4);
}

int CycNum::degree() const { return detail::field(conductor_).degree; }

std::vector<Rational> CycNum::coeffs() const {
  std::vector<Rational> dense(static_cast<size_t>(degree()));
  for (const auto& t : terms_) dense[static_cast<size_t>(t.exponent)] = t.coeff;
  return dense;
}

Rational CycNum::rational_value() const {
  if (!is_rational()) throw Error(ErrorKind::Internal, "value is not rational");
  return terms_.empty() ? Rational(0) : terms_.front().coeff;
}

bool CycNum::is_real() const { return conj() == *this; }

void CycNum::accumulate(std::vector<Rational>& dense, int exponent, const Rational& c) const {
  const auto& f = detail::field(conductor_);
  int e = exponent % conductor_;
  if (e < 0) e += conductor_;
  if (e < f.degree) {
    dense[static_cast<size_t>(e)] += c;
    return;
  }
  for (const auto& [j, v] : f.power[static_cast<size_t>(e)]) dense[static_cast<size_t>(j)] += c * v;
}

CycNum CycNum::from_dense(int conductor, const std::vector<Rational>& dense) {
  CycNum out(conductor);
  for (size_t j = 0; j < dense.size(); ++j)
    if (dense[j] != 0) out.terms_.push_back({static_cast<int>(j), dense[j]});
  return out;
}

CycNum CycNum::conj() const {
  if (is_rational()) return *this;
  CycNum helper(conductor_);
  std::vector<Rational> dense(static_cast<size_t>(degree()));
  for (const auto& t : terms_) helper.accumulate(dense, conductor_ - t.exponent, t.coeff);
  return from_dense(conductor_, dense);
}

CycNum CycNum::galois(int unit) const {
  if (std::gcd(unit, conductor_) != 1)
    throw Error(ErrorKind::InvalidConductor, "Galois exponent must be a unit mod N");
  if (is_rational()) return *this;
  CycNum helper(conductor_);
  std::vector<Rational> dense(static_cast<size_t>(degree()));
  for (const auto& t : terms_)
    helper.accumulate(dense, static_cast<int>((static_cast<long long>(unit) * t.exponent) % conductor_),
                      t.coeff);
  return from_dense(conductor_, dense);
}

CycNum CycNum::lift(int conductor) const {
  if (conductor == conductor_) return *this;
  if (conductor < 1 || conductor % conductor_ != 0)
    throw Error(ErrorKind::ConductorMismatch,
                "cannot lift Q(zeta_" + std::to_string(conductor_) + ") into Q(zeta_" +
                    std::to_string(conductor) + ")");
  CycNum out(conductor);
  if (is_rational()) {
    out.terms_ = terms_;
    return out;
  }
  const int step = conductor / conductor_;
  std::vector<Rational> dense(static_cast<size_t>(out.degree()));
  for (const auto& t : terms_) out.accumulate(dense, t.exponent * step, t.coeff);
  return from_dense(conductor, dense);
}

CycNum CycNum::inverse() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  if (is_rational()) return CycNum(conductor_, Rational(1) / terms_.front().coeff);
  // x^{-1} = (prod_{sigma != id} sigma(x)) / N(x)
  const auto& f = detail::field(conductor_);
  CycNum others(conductor_, Rational(1));
  for (int u : f.units)
    if (u != 1) others *= galois(u);
  const CycNum norm = *this * others;
  if (!norm.is_rational() || norm.is_zero())
    throw Error(ErrorKind::Internal, "field norm is not a nonzero rational");
  return others.scaled(Rational(1) / norm.rational_value());
}

std::complex<double> CycNum::embed(int unit) const {
  std::complex<double> z{0.0, 0.0};
  for (const auto& t : terms_) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(
                                                       (static_cast<long long>(unit) * t.exponent) %
                                                       conductor_) /
                         conductor_;
    z += t.coeff.convert_to<double>() * std::polar(1.0, angle);
  }
  return z;
}

double CycNum::magnitude_bound() const {
  double s = 0.0;
  for (const auto& t : terms_) s += std::abs(t.coeff.convert_to<double>());
  return s;
}

CycNum CycNum::scaled(const Rational& q) const {
  if (q == 0) return CycNum(conductor_);
  CycNum out = *this;
  for (auto& t : out.terms_) t.coeff *= q;
  return out;
}

CycNum CycNum::operator-() const { return scaled(Rational(-1)); }

CycNum& CycNum::operator+=(const CycNum& other) {
  const int n = std::lcm(conductor_, other.conductor_);
  if (n != conductor_) *this = lift(n);
  const CycNum rhs = other.lift(n);
  if (rhs.is_zero()) return *this;
  std::vector<Term> merged;
  merged.reserve(terms_.size() + rhs.terms_.size());
  size_t i = 0;
  size_t j = 0;
  while (i < terms_.size() || j < rhs.terms_.size()) {
    if (j == rhs.terms_.size() || (i < terms_.size() && terms_[i].exponent < rhs.terms_[j].exponent)) {
      merged.push_back(terms_[i++]);
    } else if (i == terms_.size() || rhs.terms_[j].exponent < terms_[i].exponent) {
      merged.push_back(rhs.terms_[j++]);
    } else {
      Rational c = terms_[i].coeff + rhs.terms_[j].coeff;
      if (c != 0) merged.push_back({terms_[i].exponent, std::move(c)});
      ++i;
      ++j;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

CycNum& CycNum::operator-=(const CycNum& other) { return *this += -other; }

CycNum operator*(const CycNum& a, const CycNum& b) {
  const int n = std::lcm(a.conductor_, b.conductor_);
  if (a.is_zero() || b.is_zero()) return CycNum(n);
  if (a.is_rational()) return b.lift(n).scaled(a.terms_.front().coeff);
  if (b.is_rational()) return a.lift(n).scaled(b.terms_.front().coeff);
  const CycNum x = a.lift(n);
  const CycNum y = b.lift(n);
  std::vector<Rational> dense(static_cast<size_t>(x.degree()));
  for (const auto& s : x.terms_)
    for (const auto& t : y.terms_) x.accumulate(dense, s.exponent + t.exponent, s.coeff * t.coeff);
  return CycNum::from_dense(n, dense);
}

CycNum& CycNum::operator*=(const CycNum& other) { return *this = *this * other; }

CycNum& CycNum::operator/=(const CycNum& other) { return *this = *this * other.inverse(); }

bool operator==(const CycNum& a, const CycNum& b) {
  if (a.conductor_ == b.conductor_) return a.terms_ == b.terms_;
  if (a.is_rational() && b.is_rational()) return a.terms_ == b.terms_;
  const int n = std::lcm(a.conductor_, b.conductor_);
  return a.lift(n).terms_ == b.lift(n).terms_;
}

CycNum cyc_reduce(int conductor, std::span<const Rational> raw) {
  const auto& f = detail::field(conductor);
  std::vector<Rational> folded(static_cast<size_t>(conductor));
  for (size_t k = 0; k < raw.size(); ++k) folded[k % static_cast<size_t>(conductor)] += raw[k];
  // remainder modulo the monic Phi_N
  const int deg = f.degree;
  for (int k = conductor - 1; k >= deg; --k) {
    const Rational c = folded[static_cast<size_t>(k)];
    if (c == 0) continue;
    for (int j = 0; j <= deg; ++j)
      folded[static_cast<size_t>(k - deg + j)] -= c * f.modulus[static_cast<size_t>(j)];
  }
  folded.resize(static_cast<size_t>(deg));
  return CycNum::from_dense(conductor, folded);
}

CycNum real_part(const CycNum& x) {
  const CycNum y = x.lift(std::lcm(x.conductor(), 4));
  return (y + y.conj()).scaled(Rational(1, 2));
}

CycNum imag_part(const CycNum& x) {
  const int n = std::lcm(x.conductor(), 4);
  const CycNum y = x.lift(n);
  return ((y - y.conj()) * CycNum::imaginary_unit(n)).scaled(Rational(-1, 2));
}

int sign(const CycNum& x) {
  if (!x.is_real()) throw Error(ErrorKind::NotRealCoefficient, "sign of a non-real number");
  if (x.is_zero()) return 0;
  if (x.is_rational()) return x.rational_value() > 0 ? 1 : -1;
  const double value = x.embed().real();
  const double bound = 64.0 * std::numeric_limits<double>::epsilon() * x.magnitude_bound();
  if (std::abs(value) <= bound)
    throw Error(ErrorKind::SignUndecided, "sign of " + to_string(x) + " is below the float bound");
  return value > 0 ? 1 : -1;
}

std::string to_string(const CycNum& x) {
  if (x.is_rational()) return to_string(x.rational_value());
  const int n = x.conductor();
  for (int k = 1; k < n; ++k) {
    if (!(x == CycNum::root_of_unity(n, k))) continue;
    const int g = std::gcd(k, n);
    std::string s = "z" + std::to_string(n / g);
    if (k / g != 1) s += "^" + std::to_string(k / g);
    return s;
  }
  std::ostringstream out;
  bool first = true;
  for (const auto& t : x.terms()) {
    Rational c = t.coeff;
    const bool negative = c < 0;
    if (negative) c = -c;
    if (!first || negative) out << (negative ? "-" : "+");
    first = false;
    std::string atom;
    if (t.exponent > 0) {
      atom = "z" + std::to_string(n);
      if (t.exponent > 1) atom += "^" + std::to_string(t.exponent);
    }
    if (atom.empty()) {
      out << to_string(c);
    } else if (c == 1) {
      out << atom;
    } else {
      out << to_string(c) << "*" << atom;
    }
  }
  return out.str();
}

// ---------------------------------------------------------------- CycMatrix

CycMatrix::CycMatrix(int rows, int cols, int conductor)
    : rows_(rows), cols_(cols), conductor_(conductor),
      data_(static_cast<size_t>(rows * cols), CycNum(conductor)) {}

CycMatrix CycMatrix::identity(int n, int conductor) {
  CycMatrix m(n, n, conductor);
  for (int i = 0; i < n; ++i) m.data_[static_cast<size_t>(i * n + i)] = CycNum(conductor, 1);
  return m;
}

CycMatrix CycMatrix::diagonal(const std::vector<CycNum>& entries) {
  int n = 1;
  for (const auto& e : entries) n = std::lcm(n, e.conductor());
  const int size = static_cast<int>(entries.size());
  CycMatrix m(size, size, n);
  for (int i = 0; i < size; ++i) m.data_[static_cast<size_t>(i * size + i)] = entries[static_cast<size_t>(i)].lift(n);
  return m;
}

CycMatrix CycMatrix::from_rows(const std::vector<std::vector<CycNum>>& rows) {
  int n = 1;
  for (const auto& r : rows)
    for (const auto& e : r) n = std::lcm(n, e.conductor());
  const int nr = static_cast<int>(rows.size());
  const int nc = nr == 0 ? 0 : static_cast<int>(rows.front().size());
  CycMatrix m(nr, nc, n);
  for (int r = 0; r < nr; ++r) {
    if (static_cast<int>(rows[static_cast<size_t>(r)].size()) != nc)
      throw Error(ErrorKind::Parse, "ragged matrix rows");
    for (int c = 0; c < nc; ++c)
      m.data_[static_cast<size_t>(r * nc + c)] = rows[static_cast<size_t>(r)][static_cast<size_t>(c)].lift(n);
  }
  return m;
}

CycMatrix CycMatrix::block2x2(const CycMatrix& a, const CycMatrix& b, const CycMatrix& c,
                              const CycMatrix& d) {
  const int n = a.rows();
  const int m = std::lcm(std::lcm(a.conductor(), b.conductor()), std::lcm(c.conductor(), d.conductor()));
  CycMatrix out(2 * n, 2 * n, m);
  for (int r = 0; r < n; ++r)
    for (int s = 0; s < n; ++s) {
      out.data_[static_cast<size_t>(r * 2 * n + s)] = a(r, s).lift(m);
      out.data_[static_cast<size_t>(r * 2 * n + s + n)] = b(r, s).lift(m);
      out.data_[static_cast<size_t>((r + n) * 2 * n + s)] = c(r, s).lift(m);
      out.data_[static_cast<size_t>((r + n) * 2 * n + s + n)] = d(r, s).lift(m);
    }
  return out;
}

void CycMatrix::set(int r, int c, const CycNum& value) {
  if (conductor_ % value.conductor() != 0) *this = lift(std::lcm(conductor_, value.conductor()));
  data_[static_cast<size_t>(r * cols_ + c)] = value.lift(conductor_);
}

CycMatrix CycMatrix::block(int r0, int c0, int nrows, int ncols) const {
  CycMatrix out(nrows, ncols, conductor_);
  for (int r = 0; r < nrows; ++r)
    for (int c = 0; c < ncols; ++c) out.data_[static_cast<size_t>(r * ncols + c)] = (*this)(r0 + r, c0 + c);
  return out;
}

CycMatrix CycMatrix::lift(int conductor) const {
  if (conductor == conductor_) return *this;
  CycMatrix out = *this;
  out.conductor_ = conductor;
  for (auto& e : out.data_) e = e.lift(conductor);
  return out;
}

CycMatrix CycMatrix::conj() const {
  CycMatrix out = *this;
  for (auto& e : out.data_) e = e.conj();
  return out;
}

CycMatrix CycMatrix::transpose() const {
  CycMatrix out(cols_, rows_, conductor_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) out.data_[static_cast<size_t>(c * rows_ + r)] = (*this)(r, c);
  return out;
}

CycNum CycMatrix::trace() const {
  CycNum t(conductor_);
  for (int i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

bool CycMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const CycNum& e) { return e.is_zero(); });
}

bool CycMatrix::is_diagonal() const {
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c)
      if (r != c && !(*this)(r, c).is_zero()) return false;
  return true;
}

CycMatrix CycMatrix::operator-() const {
  CycMatrix out = *this;
  for (auto& e : out.data_) e = -e;
  return out;
}

CycMatrix operator+(const CycMatrix& a, const CycMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorKind::Internal, "shape mismatch in +");
  const int n = std::lcm(a.conductor_, b.conductor_);
  CycMatrix out = a.lift(n);
  for (size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
  return out;
}

CycMatrix operator-(const CycMatrix& a, const CycMatrix& b) { return a + (-b); }

CycMatrix operator*(const CycMatrix& a, const CycMatrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorKind::Internal, "shape mismatch in *");
  const int n = std::lcm(a.conductor_, b.conductor_);
  CycMatrix out(a.rows_, b.cols_, n);
  for (int r = 0; r < a.rows_; ++r)
    for (int k = 0; k < a.cols_; ++k) {
      const CycNum& x = a(r, k);
      if (x.is_zero()) continue;
      for (int c = 0; c < b.cols_; ++c) {
        const CycNum& y = b(k, c);
        if (y.is_zero()) continue;
        out.data_[static_cast<size_t>(r * b.cols_ + c)] += x * y;
      }
    }
  return out;
}

CycMatrix operator*(const CycNum& s, const CycMatrix& a) {
  const int n = std::lcm(s.conductor(), a.conductor_);
  CycMatrix out = a.lift(n);
  for (auto& e : out.data_) e = s * e;
  return out;
}

bool operator==(const CycMatrix& a, const CycMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  for (size_t i = 0; i < a.data_.size(); ++i)
    if (!(a.data_[i] == b.data_[i])) return false;
  return true;
}

}  // namespace siegel
