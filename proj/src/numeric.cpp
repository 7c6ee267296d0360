#include "siegel/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>

#include <Eigen/Dense>
#include <Eigen/SVD>

namespace siegel {

namespace {

using CMat = Eigen::MatrixXcd;
using RMat = Eigen::MatrixXd;
using RVec = Eigen::VectorXd;
using cd = std::complex<double>;

constexpr double kTol = 1e-8;

struct FElem {
  CMat C;
  CMat D;
};

CMat embed(const CycMatrix& m) {
  CMat out(m.rows(), m.cols());
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) out(r, c) = m(r, c).embed();
  return out;
}

FElem embed(const AlgElement& x) { return {embed(x.C), embed(x.D)}; }

FElem fbracket(const FElem& a, const FElem& b) {
  return {a.C * b.C + a.D.conjugate() * b.D - b.C * a.C - b.D.conjugate() * a.D,
          a.D * b.C + a.C.conjugate() * b.D - b.D * a.C - b.C.conjugate() * a.D};
}

void append(std::vector<double>& out, const CMat& m) {
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      out.push_back(m(r, c).real());
      out.push_back(m(r, c).imag());
    }
}

std::vector<double> coords(const FElem& x) {
  std::vector<double> out;
  append(out, x.C);
  append(out, x.D);
  return out;
}

/// Unpacks (Re, Im) pairs into a g x g complex matrix.
CMat unpack(const RVec& v, Eigen::Index offset, int g) {
  CMat m(g, g);
  for (int r = 0; r < g; ++r)
    for (int c = 0; c < g; ++c) {
      const Eigen::Index k = offset + 2 * (r * g + c);
      m(r, c) = cd(v(k), v(k + 1));
    }
  return m;
}

RMat to_matrix(const std::vector<std::vector<double>>& rows) {
  if (rows.empty()) return RMat(0, 0);
  RMat m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.front().size()));
  for (size_t r = 0; r < rows.size(); ++r)
    for (size_t c = 0; c < rows[r].size(); ++c) m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = rows[r][c];
  return m;
}

int rank_of(const RMat& m, double tol = kTol) {
  if (m.size() == 0) return 0;
  Eigen::JacobiSVD<RMat> svd(m);
  const auto& s = svd.singularValues();
  if (s.size() == 0 || s(0) == 0.0) return 0;
  int r = 0;
  for (Eigen::Index k = 0; k < s.size(); ++k)
    if (s(k) > tol * s(0)) ++r;
  return r;
}

/// Matrix of a linear map R^n -> R^m given by its action on unit vectors.
RMat linear_map(int n, const std::function<std::vector<double>(const RVec&)>& f) {
  std::vector<std::vector<double>> cols;
  for (int j = 0; j < n; ++j) {
    RVec e = RVec::Zero(n);
    e(j) = 1.0;
    cols.push_back(f(e));
  }
  RMat m(static_cast<Eigen::Index>(cols.front().size()), n);
  for (int j = 0; j < n; ++j)
    for (size_t r = 0; r < cols[static_cast<size_t>(j)].size(); ++r) m(static_cast<Eigen::Index>(r), j) = cols[static_cast<size_t>(j)][r];
  return m;
}

/// Orthonormal basis of the null space (columns).
RMat null_space(const RMat& m) {
  Eigen::JacobiSVD<RMat> svd(m, Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  const double top = s.size() ? s(0) : 0.0;
  int r = 0;
  for (Eigen::Index k = 0; k < s.size(); ++k)
    if (s(k) > kTol * top && top > 0) ++r;
  return svd.matrixV().rightCols(m.cols() - r);
}

int span_rank(const std::vector<FElem>& elements) {
  std::vector<std::vector<double>> rows;
  for (const auto& x : elements) rows.push_back(coords(x));
  return rank_of(to_matrix(rows));
}

std::vector<FElem> pairwise(const std::vector<FElem>& basis) {
  std::vector<FElem> out;
  for (size_t a = 0; a < basis.size(); ++a)
    for (size_t b = a + 1; b < basis.size(); ++b) out.push_back(fbracket(basis[a], basis[b]));
  return out;
}

/// Least-squares coordinates of each image in the given basis, as a matrix.
RMat operator_in_basis(const std::vector<FElem>& basis, const std::function<FElem(const FElem&)>& op) {
  const int n = static_cast<int>(basis.size());
  std::vector<std::vector<double>> cols;
  for (const auto& b : basis) cols.push_back(coords(b));
  RMat bm = to_matrix(cols).transpose();
  const auto solver = bm.completeOrthogonalDecomposition();
  RMat out(n, n);
  for (int j = 0; j < n; ++j) {
    const auto img = coords(op(basis[static_cast<size_t>(j)]));
    out.col(j) = solver.solve(Eigen::Map<const RVec>(img.data(), static_cast<Eigen::Index>(img.size())));
  }
  return out;
}

}  // namespace

bool Crosscheck::all_agree() const {
  return std::all_of(checks.begin(), checks.end(), [](const DimensionCheck& c) { return c.agree(); });
}

int numeric_rank(const std::vector<std::vector<double>>& rows, double tol) {
  return rank_of(to_matrix(rows), tol);
}

Crosscheck crosscheck(const GroupAction& action, const Centralizer& cz, int full_centralizer_dim,
                      const Subspace& k, const std::vector<Factor>& factors) {
  Crosscheck out;
  out.tolerance = kTol;
  const int g = action.genus;
  const int half = 2 * g * g;
  std::vector<CMat> a0;
  for (const auto& m : action.generators) a0.push_back(embed(m));
  std::vector<CMat> a;
  for (const auto& m : action.symplectic_generators) a.push_back(embed(m));
  const CMat q = embed(symplectic_form(g, action.conductor));

  const RMat zp_map = linear_map(half, [&](const RVec& v) {
    const CMat d = unpack(v, 0, g);
    std::vector<double> res;
    append(res, d - d.transpose());
    for (const auto& x : a0) append(res, d * x - x.conjugate() * d);
    return res;
  });
  const RMat zp_null = null_space(zp_map);
  out.checks.push_back({"Z_p(Gamma) real dimension", cz.zp.real_dim(), static_cast<int>(zp_null.cols())});

  const RMat zk_map = linear_map(half, [&](const RVec& v) {
    const CMat c = unpack(v, 0, g);
    std::vector<double> res;
    append(res, c + c.adjoint());
    for (const auto& x : a0) append(res, c * x - x * c);
    return res;
  });
  out.checks.push_back({"Z_k(Gamma) real dimension", cz.zk.real_dim(), half - rank_of(zk_map)});

  const RMat full_map = linear_map(2 * half, [&](const RVec& v) {
    const CMat c = unpack(v, 0, g);
    const CMat d = unpack(v, half, g);
    CMat u(2 * g, 2 * g);
    u << c, d.conjugate(), d, c.conjugate();
    std::vector<double> res;
    append(res, u.transpose() * q + q * u);
    for (const auto& x : a) append(res, u * x - x * u);
    return res;
  });
  out.checks.push_back({"Z_g(Gamma) real dimension", full_centralizer_dim, 2 * half - rank_of(full_map)});

  std::vector<FElem> zp_basis;
  for (Eigen::Index j = 0; j < zp_null.cols(); ++j)
    zp_basis.push_back({CMat::Zero(g, g), unpack(zp_null.col(j), 0, g)});
  out.checks.push_back({"k' = [p', p'] real dimension", k.real_dim(), span_rank(pairwise(zp_basis))});

  std::vector<FElem> k_basis;
  for (const auto& c : k.basis()) k_basis.push_back(embed(c));

  for (size_t fi = 0; fi < factors.size(); ++fi) {
    const Factor& f = factors[fi];
    const std::string tag = "factor " + std::to_string(fi + 1) + " ";
    std::vector<FElem> w;
    for (const auto& b : f.space.basis()) w.push_back(embed(b));
    const int n = static_cast<int>(w.size());
    out.checks.push_back({tag + "[W, W] real dimension", f.k_real_dim, span_rank(pairwise(w))});

    std::vector<RMat> ops;
    for (const auto& c : k_basis)
      ops.push_back(operator_in_basis(w, [&](const FElem& x) {
        return FElem{CMat::Zero(g, g), c.C.conjugate() * x.D - x.D * c.C};
      }));
    ops.push_back(operator_in_basis(w, [&](const FElem& x) { return FElem{CMat::Zero(g, g), cd(0, -1) * x.D}; }));
    const RMat comm = linear_map(n * n, [&](const RVec& v) {
      const RMat t = Eigen::Map<const RMat>(v.data(), n, n);
      std::vector<double> res;
      for (const auto& x : ops) {
        const RMat r = t * x - x * t;
        res.insert(res.end(), r.data(), r.data() + r.size());
      }
      return res;
    });
    out.checks.push_back({tag + "commutant real dimension", f.commutant_real_dim, n * n - rank_of(comm)});

    int best = n;
    for (int power : {1, 2, 0, 3}) {
      FElem x{CMat::Zero(g, g), CMat::Zero(g, g)};
      for (int j = 0; j < n; ++j) {
        const double coeff = std::pow(static_cast<double>(j + 1), power);
        x.C += coeff * w[static_cast<size_t>(j)].C;
        x.D += coeff * w[static_cast<size_t>(j)].D;
      }
      const RMat cmap = linear_map(n, [&](const RVec& t) {
        FElem y{CMat::Zero(g, g), CMat::Zero(g, g)};
        for (int j = 0; j < n; ++j) {
          y.C += t(j) * w[static_cast<size_t>(j)].C;
          y.D += t(j) * w[static_cast<size_t>(j)].D;
        }
        return coords(fbracket(x, y));
      });
      best = std::min(best, n - rank_of(cmap));
    }
    out.checks.push_back({tag + "rank", f.rank, best});
  }
  return out;
}

}  // namespace siegel
