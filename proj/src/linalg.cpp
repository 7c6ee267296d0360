#include "siegel/linalg.hpp"

#include <algorithm>

#include "siegel/error.hpp"

namespace siegel {

Vec zero_vec(size_t n, int conductor) { return Vec(n, CycNum(conductor)); }

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const CycNum& x) { return x.is_zero(); });
}

void axpy(Vec& v, const CycNum& c, const Vec& w) {
  if (c.is_zero()) return;
  for (size_t j = 0; j < w.size(); ++j)
    if (!w[j].is_zero()) v[j] += c * w[j];
}

Vec EchelonBasis::reduce(Vec v) const {
  if (v.size() != ncols_) throw Error(ErrorKind::Internal, "vector length does not match basis");
  for (size_t i = 0; i < rows_.size(); ++i) {
    const CycNum c = v[pivots_[i]];
    if (!c.is_zero()) axpy(v, -c, rows_[i]);
  }
  return v;
}

bool EchelonBasis::insert(Vec v) {
  v = reduce(std::move(v));
  size_t p = 0;
  while (p < ncols_ && v[p].is_zero()) ++p;
  if (p == ncols_) return false;
  const CycNum inv = v[p].inverse();
  for (auto& x : v)
    if (!x.is_zero()) x *= inv;
  for (auto& row : rows_) {
    const CycNum c = row[p];
    if (!c.is_zero()) axpy(row, -c, v);
  }
  const auto at = std::lower_bound(pivots_.begin(), pivots_.end(), p);
  const auto offset = at - pivots_.begin();
  pivots_.insert(at, p);
  rows_.insert(rows_.begin() + offset, std::move(v));
  return true;
}

bool EchelonBasis::contains(const Vec& v) const { return is_zero(reduce(v)); }

std::optional<Vec> EchelonBasis::coordinates(const Vec& v) const {
  if (!contains(v)) return std::nullopt;
  Vec coords;
  coords.reserve(rows_.size());
  for (size_t p : pivots_) coords.push_back(v[p]);
  return coords;
}

std::vector<Vec> span_basis(const std::vector<Vec>& vectors, size_t ncols) {
  EchelonBasis basis(ncols);
  for (const auto& v : vectors) basis.insert(v);
  return basis.rows();
}

size_t rank(const std::vector<Vec>& rows, size_t ncols) {
  EchelonBasis basis(ncols);
  for (const auto& r : rows) basis.insert(r);
  return basis.rank();
}

std::vector<Vec> kernel(const std::vector<Vec>& rows, size_t unknowns) {
  EchelonBasis reduced(unknowns);
  for (const auto& r : rows) reduced.insert(r);
  const auto& pivots = reduced.pivots();
  std::vector<Vec> generators;
  size_t next_pivot = 0;
  for (size_t col = 0; col < unknowns; ++col) {
    if (next_pivot < pivots.size() && pivots[next_pivot] == col) {
      ++next_pivot;
      continue;
    }
    Vec x(unknowns);
    x[col] = CycNum(1, 1);
    for (size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = -reduced.rows()[i][col];
    generators.push_back(std::move(x));
  }
  return span_basis(generators, unknowns);
}

std::vector<std::vector<Rational>> RationalKernelBasis::rational_coordinates() const {
  std::vector<std::vector<Rational>> out;
  for (const auto& v : vectors) {
    std::vector<Rational> flat;
    for (const auto& x : v) {
      const auto c = x.coeffs();
      flat.insert(flat.end(), c.begin(), c.end());
    }
    out.push_back(std::move(flat));
  }
  return out;
}

RationalKernelBasis kernel_over_real_subfield(const std::vector<Vec>& rows, size_t unknowns) {
  for (const auto& r : rows) {
    if (r.size() != unknowns) throw Error(ErrorKind::Internal, "row length does not match unknowns");
    for (const auto& x : r)
      if (!x.is_zero() && !x.is_real())
        throw Error(ErrorKind::NotRealCoefficient,
                    "coefficient " + to_string(x) + " is not fixed by complex conjugation");
  }
  RationalKernelBasis out;
  out.vectors = kernel(rows, unknowns);
  out.dimension = out.vectors.size();
  return out;
}

RationalKernelBasis kernel_over_real_subfield(const CycMatrix& system) {
  std::vector<Vec> rows;
  for (int r = 0; r < system.rows(); ++r) {
    Vec row;
    for (int c = 0; c < system.cols(); ++c) row.push_back(system(r, c));
    rows.push_back(std::move(row));
  }
  return kernel_over_real_subfield(rows, static_cast<size_t>(system.cols()));
}

CycMatrix inverse(const CycMatrix& m) {
  if (!m.is_square()) throw Error(ErrorKind::Internal, "inverse of a non-square matrix");
  const int n = m.rows();
  std::vector<Vec> aug(static_cast<size_t>(n), zero_vec(static_cast<size_t>(2 * n), m.conductor()));
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) aug[static_cast<size_t>(r)][static_cast<size_t>(c)] = m(r, c);
    aug[static_cast<size_t>(r)][static_cast<size_t>(n + r)] = CycNum(m.conductor(), 1);
  }
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r) {
      const auto& x = aug[static_cast<size_t>(r)][static_cast<size_t>(col)];
      if (x.is_zero()) continue;
      if (piv < 0 || x.is_rational()) piv = r;
      if (x.is_rational()) break;
    }
    if (piv < 0) throw Error(ErrorKind::DivisionByZero, "matrix is singular");
    std::swap(aug[static_cast<size_t>(col)], aug[static_cast<size_t>(piv)]);
    Vec& prow = aug[static_cast<size_t>(col)];
    const CycNum inv = prow[static_cast<size_t>(col)].inverse();
    for (auto& x : prow)
      if (!x.is_zero()) x *= inv;
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      const CycNum c = aug[static_cast<size_t>(r)][static_cast<size_t>(col)];
      if (!c.is_zero()) axpy(aug[static_cast<size_t>(r)], -c, prow);
    }
  }
  CycMatrix out(n, n, m.conductor());
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) out.set(r, c, aug[static_cast<size_t>(r)][static_cast<size_t>(n + c)]);
  return out;
}

CycNum determinant(const CycMatrix& m) {
  if (!m.is_square()) throw Error(ErrorKind::Internal, "determinant of a non-square matrix");
  const int n = m.rows();
  std::vector<Vec> a(static_cast<size_t>(n));
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) a[static_cast<size_t>(r)].push_back(m(r, c));
  CycNum det(m.conductor(), 1);
  for (int k = 0; k < n; ++k) {
    int piv = k;
    while (piv < n && a[static_cast<size_t>(piv)][static_cast<size_t>(k)].is_zero()) ++piv;
    if (piv == n) return CycNum(m.conductor());
    if (piv != k) {
      std::swap(a[static_cast<size_t>(piv)], a[static_cast<size_t>(k)]);
      det = -det;
    }
    const CycNum pivot = a[static_cast<size_t>(k)][static_cast<size_t>(k)];
    det *= pivot;
    const CycNum inv = pivot.inverse();
    for (int r = k + 1; r < n; ++r) {
      const CycNum f = a[static_cast<size_t>(r)][static_cast<size_t>(k)] * inv;
      if (!f.is_zero()) axpy(a[static_cast<size_t>(r)], -f, a[static_cast<size_t>(k)]);
    }
  }
  return det;
}

std::vector<CycNum> leading_principal_minors(const CycMatrix& m) {
  if (!m.is_square()) throw Error(ErrorKind::Internal, "minors of a non-square matrix");
  std::vector<CycNum> minors;
  for (int k = 1; k <= m.rows(); ++k) minors.push_back(determinant(m.block(0, 0, k, k)));
  return minors;
}

}  // namespace siegel
