#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "siegel/cyclotomic.hpp"

namespace siegel {

using Vec = std::vector<CycNum>;

Vec zero_vec(size_t n, int conductor);
bool is_zero(const Vec& v);
/// v += c * w, skipping zero entries of w.
void axpy(Vec& v, const CycNum& c, const Vec& w);

/// Incrementally maintained reduced row echelon form over Q(zeta_N).
///
/// Rows stay sorted by pivot column and every pivot column is zero in all other
/// rows, so a vector in the span has coordinates v[pivot_i].
class EchelonBasis {
 public:
  explicit EchelonBasis(size_t ncols) : ncols_(ncols) {}

  /// Returns false (and leaves the basis unchanged) when v is already in the span.
  bool insert(Vec v);
  Vec reduce(Vec v) const;
  bool contains(const Vec& v) const;
  std::optional<Vec> coordinates(const Vec& v) const;

  size_t rank() const noexcept { return rows_.size(); }
  size_t ncols() const noexcept { return ncols_; }
  const std::vector<Vec>& rows() const noexcept { return rows_; }
  const std::vector<size_t>& pivots() const noexcept { return pivots_; }

 private:
  size_t ncols_;
  std::vector<Vec> rows_;
  std::vector<size_t> pivots_;
};

/// Canonical (reduced echelon) basis of the span of `vectors`.
std::vector<Vec> span_basis(const std::vector<Vec>& vectors, size_t ncols);
size_t rank(const std::vector<Vec>& rows, size_t ncols);

/// Kernel of the system whose rows are given, as a canonical echelon basis.
std::vector<Vec> kernel(const std::vector<Vec>& rows, size_t unknowns);

/// Solution space of a linear system with coefficients in the maximal real
/// subfield of Q(zeta_M). Its dimension over that subfield equals the real
/// dimension of the solution space over R.
struct RationalKernelBasis {
  size_t dimension = 0;
  std::vector<Vec> vectors;

  /// Every scalar expanded to its power-basis rational coordinates.
  std::vector<std::vector<Rational>> rational_coordinates() const;
};

RationalKernelBasis kernel_over_real_subfield(const std::vector<Vec>& rows, size_t unknowns);
RationalKernelBasis kernel_over_real_subfield(const CycMatrix& system);

CycMatrix inverse(const CycMatrix& m);
CycNum determinant(const CycMatrix& m);
/// det of each leading k x k block, k = 1..n.
std::vector<CycNum> leading_principal_minors(const CycMatrix& m);

}  // namespace siegel
