#include "siegel/cartan.hpp"

#include <numeric>

#include "siegel/error.hpp"

namespace siegel {

namespace {

/// Matrix whose entries are complex linear forms in real unknowns: entry
/// (r, c) = sum_u coeff[u] * t_u.
class LinMatrix {
 public:
  LinMatrix(int rows, int cols, size_t unknowns, int conductor)
      : rows_(rows), cols_(cols), unknowns_(unknowns), conductor_(conductor),
        data_(static_cast<size_t>(rows * cols), zero_vec(unknowns, conductor)) {}

  /// Entry (r, c) = t_{offset + 2(r n + c)} + i t_{offset + 2(r n + c) + 1}.
  static LinMatrix generic(int n, size_t offset, size_t unknowns, int conductor) {
    LinMatrix m(n, n, unknowns, conductor);
    const CycNum one(conductor, 1);
    const CycNum i = CycNum::imaginary_unit(conductor);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) {
        const size_t u = offset + 2 * static_cast<size_t>(r * n + c);
        m.at(r, c)[u] = one;
        m.at(r, c)[u + 1] = i;
      }
    return m;
  }

  Vec& at(int r, int c) { return data_[static_cast<size_t>(r * cols_ + c)]; }
  const Vec& at(int r, int c) const { return data_[static_cast<size_t>(r * cols_ + c)]; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  LinMatrix times(const CycMatrix& a) const {
    LinMatrix out(rows_, a.cols(), unknowns_, conductor_);
    for (int r = 0; r < rows_; ++r)
      for (int c = 0; c < a.cols(); ++c)
        for (int k = 0; k < cols_; ++k) axpy(out.at(r, c), a(k, c), at(r, k));
    return out;
  }

  LinMatrix times_left(const CycMatrix& a) const {
    LinMatrix out(a.rows(), cols_, unknowns_, conductor_);
    for (int r = 0; r < a.rows(); ++r)
      for (int c = 0; c < cols_; ++c)
        for (int k = 0; k < a.cols(); ++k) axpy(out.at(r, c), a(r, k), at(k, c));
    return out;
  }

  LinMatrix conj() const {
    LinMatrix out = *this;
    for (auto& v : out.data_)
      for (auto& x : v)
        if (!x.is_zero()) x = x.conj();
    return out;
  }

  LinMatrix transpose() const {
    LinMatrix out(cols_, rows_, unknowns_, conductor_);
    for (int r = 0; r < rows_; ++r)
      for (int c = 0; c < cols_; ++c) out.at(c, r) = at(r, c);
    return out;
  }

  LinMatrix operator+(const LinMatrix& o) const {
    LinMatrix out = *this;
    const CycNum one(conductor_, 1);
    for (size_t k = 0; k < data_.size(); ++k) axpy(out.data_[k], one, o.data_[k]);
    return out;
  }

  LinMatrix operator-(const LinMatrix& o) const {
    LinMatrix out = *this;
    const CycNum minus(conductor_, -1);
    for (size_t k = 0; k < data_.size(); ++k) axpy(out.data_[k], minus, o.data_[k]);
    return out;
  }

  static LinMatrix block2x2(const LinMatrix& a, const LinMatrix& b, const LinMatrix& c, const LinMatrix& d) {
    const int n = a.rows_;
    LinMatrix out(2 * n, 2 * n, a.unknowns_, a.conductor_);
    for (int r = 0; r < n; ++r)
      for (int s = 0; s < n; ++s) {
        out.at(r, s) = a.at(r, s);
        out.at(r, n + s) = b.at(r, s);
        out.at(n + r, s) = c.at(r, s);
        out.at(n + r, n + s) = d.at(r, s);
      }
    return out;
  }

  /// Each entry = 0 becomes two real equations, Re = 0 and Im = 0.
  void append_equations(std::vector<Vec>& rows) const {
    for (const auto& form : data_) {
      if (is_zero(form)) continue;
      Vec re(unknowns_), im(unknowns_);
      for (size_t u = 0; u < unknowns_; ++u) {
        re[u] = real_part(form[u]);
        im[u] = imag_part(form[u]);
      }
      if (!is_zero(re)) rows.push_back(std::move(re));
      if (!is_zero(im)) rows.push_back(std::move(im));
    }
  }

 private:
  int rows_;
  int cols_;
  size_t unknowns_;
  int conductor_;
  std::vector<Vec> data_;
};

Vec embed_coordinates(const Vec& v, size_t offset, size_t length, int conductor) {
  Vec out = zero_vec(length, conductor);
  for (size_t k = 0; k < v.size(); ++k) out[offset + k] = v[k];
  return out;
}

void require_square(const CycMatrix& c, const CycMatrix& d) {
  if (!c.is_square() || !d.is_square() || c.rows() != d.rows())
    throw Error(ErrorKind::Internal, "C and D blocks must be square of equal size");
}

}  // namespace

AlgElement AlgElement::zero(int genus, int conductor) {
  return {CycMatrix(genus, genus, conductor), CycMatrix(genus, genus, conductor)};
}

AlgElement AlgElement::from_k(const CycMatrix& c) {
  return {c, CycMatrix(c.rows(), c.cols(), c.conductor())};
}

AlgElement AlgElement::from_p(const CycMatrix& d) {
  return {CycMatrix(d.rows(), d.cols(), d.conductor()), d};
}

CycMatrix AlgElement::matrix() const {
  require_square(C, D);
  return CycMatrix::block2x2(C, D.conj(), D, C.conj());
}

bool AlgElement::in_sp() const {
  if (!(C.adjoint() == -C) || !(D.transpose() == D)) return false;
  const CycMatrix u = matrix();
  const CycMatrix q = symplectic_form(genus(), std::lcm(conductor(), 4));
  return (u.transpose() * q + q * u).is_zero();
}

AlgElement operator+(const AlgElement& a, const AlgElement& b) { return {a.C + b.C, a.D + b.D}; }
AlgElement operator-(const AlgElement& a, const AlgElement& b) { return {a.C - b.C, a.D - b.D}; }

AlgElement operator*(const CycNum& s, const AlgElement& a) {
  if (!s.is_real()) throw Error(ErrorKind::NotRealCoefficient, "sp(2g, R) is a real vector space");
  return {s * a.C, s * a.D};
}

bool operator==(const AlgElement& a, const AlgElement& b) { return a.C == b.C && a.D == b.D; }

AlgElement bracket(const AlgElement& a, const AlgElement& b) {
  // Blocks of U_a U_b - U_b U_a read off the first block column.
  const CycMatrix c = a.C * b.C + a.D.conj() * b.D - b.C * a.C - b.D.conj() * a.D;
  const CycMatrix d = a.D * b.C + a.C.conj() * b.D - b.D * a.C - b.C.conj() * a.D;
  return {c, d};
}

CycNum trace_form(const AlgElement& a, const AlgElement& b) {
  const CycNum t = (a.C * b.C + a.D.conj() * b.D).trace();
  return real_part(t).scaled(2);
}

AlgElement complex_structure(const AlgElement& x) {
  if (!x.in_p()) throw Error(ErrorKind::WrongPart, "complex structure is defined on p only");
  const int n = std::lcm(x.conductor(), 4);
  return AlgElement::from_p(-CycNum::imaginary_unit(n) * x.D.lift(n));
}

AlgElement ad_action(const AlgElement& c, const AlgElement& d) {
  if (!c.in_k()) throw Error(ErrorKind::WrongPart, "ad_action expects a k-element first");
  if (!d.in_p()) throw Error(ErrorKind::WrongPart, "ad_action expects a p-element second");
  return AlgElement::from_p(c.C.conj() * d.D - d.D * c.C);
}

Vec algebra_coordinates(const AlgElement& x) {
  require_square(x.C, x.D);
  const int g = x.genus();
  Vec out;
  out.reserve(static_cast<size_t>(4 * g * g));
  for (const CycMatrix* m : {&x.C, &x.D})
    for (int r = 0; r < g; ++r)
      for (int c = 0; c < g; ++c) {
        out.push_back(real_part((*m)(r, c)));
        out.push_back(imag_part((*m)(r, c)));
      }
  return out;
}

AlgElement from_algebra_coordinates(const Vec& coords, int genus, int conductor) {
  const int g = genus;
  if (coords.size() != static_cast<size_t>(4 * g * g))
    throw Error(ErrorKind::Internal, "coordinate vector has the wrong length");
  const CycNum i = CycNum::imaginary_unit(conductor);
  AlgElement x = AlgElement::zero(g, conductor);
  size_t k = 0;
  for (CycMatrix* m : {&x.C, &x.D})
    for (int r = 0; r < g; ++r)
      for (int c = 0; c < g; ++c, k += 2) {
        if (!coords[k].is_real() || !coords[k + 1].is_real())
          throw Error(ErrorKind::NotRealCoefficient, "coordinates must be real");
        m->set(r, c, coords[k] + i * coords[k + 1]);
      }
  return x;
}

std::string_view to_string(Part part) {
  switch (part) {
    case Part::K: return "k";
    case Part::P: return "p";
    case Part::Mixed: return "mixed";
  }
  return "?";
}

Subspace::Subspace(Part part, int genus, int conductor)
    : part_(part), genus_(genus), conductor_(conductor), echelon_(static_cast<size_t>(4 * genus * genus)) {}

Subspace Subspace::span(Part part, int genus, int conductor, const std::vector<AlgElement>& elements) {
  Subspace s(part, genus, conductor);
  for (const auto& x : elements) {
    if ((part == Part::K && !x.in_k()) || (part == Part::P && !x.in_p()))
      throw Error(ErrorKind::WrongPart, "element does not lie in the " + std::string(to_string(part)) + "-part");
    s.echelon_.insert(algebra_coordinates(x));
  }
  return s;
}

Subspace Subspace::from_coordinates(Part part, int genus, int conductor, const std::vector<Vec>& coords) {
  std::vector<AlgElement> elements;
  for (const auto& v : coords) elements.push_back(from_algebra_coordinates(v, genus, conductor));
  return span(part, genus, conductor, elements);
}

std::optional<int> Subspace::complex_dim() const {
  if (part_ != Part::P) return std::nullopt;
  if (real_dim() % 2 != 0) throw Error(ErrorKind::NotStable, "p-subspace of odd real dimension");
  return real_dim() / 2;
}

std::vector<AlgElement> Subspace::basis() const {
  std::vector<AlgElement> out;
  for (const auto& v : echelon_.rows()) out.push_back(from_algebra_coordinates(v, genus_, conductor_));
  return out;
}

bool Subspace::contains(const AlgElement& x) const { return echelon_.contains(algebra_coordinates(x)); }

bool Subspace::contains(const Subspace& other) const {
  for (const auto& v : other.coordinate_basis())
    if (!echelon_.contains(v)) return false;
  return true;
}

std::optional<Vec> Subspace::coordinates(const AlgElement& x) const {
  return echelon_.coordinates(algebra_coordinates(x));
}

AlgElement Subspace::element(const Vec& coefficients) const {
  if (coefficients.size() != echelon_.rank()) throw Error(ErrorKind::Internal, "coefficient count mismatch");
  Vec v = zero_vec(echelon_.ncols(), conductor_);
  for (size_t k = 0; k < coefficients.size(); ++k) axpy(v, coefficients[k], echelon_.rows()[k]);
  return from_algebra_coordinates(v, genus_, conductor_);
}

BasePoint base_point(const GroupAction& action) {
  const int g = action.genus;
  const int m = action.conductor;
  const CycNum i = CycNum::imaginary_unit(m);
  const CycMatrix id = CycMatrix::identity(g, m);
  const CycMatrix zero(g, g, m);
  BasePoint bp;
  bp.J0 = CycMatrix::block2x2(i * id, zero, zero, -i * id);
  bp.Q = symplectic_form(g, m);

  const CycMatrix id2 = CycMatrix::identity(2 * g, m);
  if (!(bp.J0 * bp.J0 == -id2)) throw Error(ErrorKind::Internal, "J0^2 != -I");
  if (!(bp.J0.transpose() * bp.Q * bp.J0 == bp.Q)) throw Error(ErrorKind::Internal, "J0 does not preserve Q");

  // Real points are v = (u, conj u); span them with u = e_j and u = i e_j.
  std::vector<CycMatrix> spanning;
  for (int j = 0; j < g; ++j)
    for (const CycNum& s : {CycNum(m, 1), i}) {
      CycMatrix v(2 * g, 1, m);
      v.set(j, 0, s);
      v.set(g + j, 0, s.conj());
      spanning.push_back(v);
    }
  const size_t n = spanning.size();
  bp.gram = CycMatrix(static_cast<int>(n), static_cast<int>(n), m);
  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b)
      bp.gram.set(static_cast<int>(a), static_cast<int>(b),
                  (spanning[a].transpose() * bp.Q * bp.J0 * spanning[b])(0, 0));
  for (const auto& minor : leading_principal_minors(bp.gram))
    if (sign(minor) <= 0) throw Error(ErrorKind::Internal, "Q(x, J0 x) is not positive definite");

  for (size_t k = 0; k < action.symplectic_generators.size(); ++k) {
    const CycMatrix& a = action.symplectic_generators[k];
    if (!(a * bp.J0 == bp.J0 * a))
      throw Error(ErrorKind::NotBlockDiagonal, "generator " + std::to_string(k + 1) + " does not commute with J0");
  }
  return bp;
}

Centralizer centralizer(const GroupAction& action) {
  const int g = action.genus;
  const int m = action.conductor;
  const size_t half = static_cast<size_t>(2 * g * g);
  const size_t full = 2 * half;

  // p-part: D = D^t and D A0 = conj(A0) D.
  std::vector<Vec> rows;
  const LinMatrix d = LinMatrix::generic(g, 0, half, m);
  (d - d.transpose()).append_equations(rows);
  for (const auto& a0 : action.generators) (d.times(a0) - d.times_left(a0.conj())).append_equations(rows);
  std::vector<Vec> zp_coords;
  for (const auto& v : kernel_over_real_subfield(rows, half).vectors)
    zp_coords.push_back(embed_coordinates(v, half, full, m));

  // k-part: C* = -C and C A0 = A0 C.
  rows.clear();
  const LinMatrix c = LinMatrix::generic(g, 0, half, m);
  (c.conj().transpose() + c).append_equations(rows);
  for (const auto& a0 : action.generators) (c.times(a0) - c.times_left(a0)).append_equations(rows);
  std::vector<Vec> zk_coords;
  for (const auto& v : kernel_over_real_subfield(rows, half).vectors)
    zk_coords.push_back(embed_coordinates(v, 0, full, m));

  return {Subspace::from_coordinates(Part::K, g, m, zk_coords),
          Subspace::from_coordinates(Part::P, g, m, zp_coords)};
}

Subspace full_centralizer(const GroupAction& action) {
  const int g = action.genus;
  const int m = action.conductor;
  const size_t half = static_cast<size_t>(2 * g * g);
  const size_t full = 2 * half;
  const LinMatrix c = LinMatrix::generic(g, 0, full, m);
  const LinMatrix d = LinMatrix::generic(g, half, full, m);
  const LinMatrix u = LinMatrix::block2x2(c, d.conj(), d, c.conj());
  const CycMatrix q = symplectic_form(g, m);

  std::vector<Vec> rows;
  (u.transpose().times(q) + u.times_left(q)).append_equations(rows);
  for (const auto& a : action.symplectic_generators) (u.times(a) - u.times_left(a)).append_equations(rows);
  return Subspace::from_coordinates(Part::Mixed, g, m, kernel_over_real_subfield(rows, full).vectors);
}

bool is_stable(const Subspace& space, const std::vector<AlgElement>& operators_k) {
  const auto basis = space.basis();
  for (const auto& c : operators_k)
    for (const auto& x : basis)
      if (!space.contains(ad_action(c, x))) return false;
  return true;
}

bool is_iota_stable(const Subspace& space) {
  for (const auto& x : space.basis())
    if (!space.contains(complex_structure(x))) return false;
  return true;
}

}  // namespace siegel
