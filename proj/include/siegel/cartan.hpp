#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "siegel/covers.hpp"
#include "siegel/linalg.hpp"

namespace siegel {

/// Element of sp(2g, R) in the (omega, conj omega) frame, stored as the blocks
/// of U = [[C, conj D], [D, conj C]].
struct AlgElement {
  CycMatrix C;
  CycMatrix D;

  static AlgElement zero(int genus, int conductor);
  static AlgElement from_k(const CycMatrix& c);
  static AlgElement from_p(const CycMatrix& d);

  int genus() const noexcept { return C.rows(); }
  int conductor() const noexcept { return C.conductor(); }
  bool in_k() const { return D.is_zero(); }
  bool in_p() const { return C.is_zero(); }
  bool is_zero() const { return C.is_zero() && D.is_zero(); }

  CycMatrix matrix() const;
  /// C skew-hermitian, D symmetric and U^t Q + Q U = 0.
  bool in_sp() const;

  AlgElement k_projection() const { return from_k(C); }
  AlgElement p_projection() const { return from_p(D); }

  friend AlgElement operator+(const AlgElement& a, const AlgElement& b);
  friend AlgElement operator-(const AlgElement& a, const AlgElement& b);
  /// Real scalars only; a non-real scalar would leave sp(2g, R).
  friend AlgElement operator*(const CycNum& s, const AlgElement& a);
  friend bool operator==(const AlgElement& a, const AlgElement& b);
};

AlgElement bracket(const AlgElement& a, const AlgElement& b);
/// tr(U_X U_Y) = 2 Re tr(C_X C_Y + conj(D_X) D_Y); positive definite on p.
CycNum trace_form(const AlgElement& a, const AlgElement& b);
/// iota(0, D) = (0, -iD), the complex structure of p at J0.
AlgElement complex_structure(const AlgElement& x);
/// p-part of [c, d]: conj(C) D - D C.
AlgElement ad_action(const AlgElement& c, const AlgElement& d);

/// Real coordinates of an element: (Re, Im) of every entry of C then D,
/// row-major. Coordinates live in the maximal real subfield.
Vec algebra_coordinates(const AlgElement& x);
AlgElement from_algebra_coordinates(const Vec& coords, int genus, int conductor);

enum class Part { K, P, Mixed };
std::string_view to_string(Part part);

/// Real subspace of sp(2g, R) kept as a reduced echelon basis of coordinate
/// vectors over the maximal real subfield.
class Subspace {
 public:
  Subspace(Part part, int genus, int conductor);

  static Subspace span(Part part, int genus, int conductor, const std::vector<AlgElement>& elements);
  static Subspace from_coordinates(Part part, int genus, int conductor, const std::vector<Vec>& coords);

  Part part() const noexcept { return part_; }
  int genus() const noexcept { return genus_; }
  int conductor() const noexcept { return conductor_; }
  int real_dim() const noexcept { return static_cast<int>(echelon_.rank()); }
  /// Defined for the p-part only.
  std::optional<int> complex_dim() const;

  const std::vector<Vec>& coordinate_basis() const noexcept { return echelon_.rows(); }
  std::vector<AlgElement> basis() const;
  bool contains(const AlgElement& x) const;
  bool contains(const Subspace& other) const;
  /// Coordinates with respect to basis(), or nullopt when x is outside.
  std::optional<Vec> coordinates(const AlgElement& x) const;
  AlgElement element(const Vec& coefficients) const;

 private:
  Part part_;
  int genus_;
  int conductor_;
  EchelonBasis echelon_;
};

struct BasePoint {
  CycMatrix J0;
  CycMatrix Q;
  /// Gram matrix of (x, y) -> x^t Q J0 y on the real spanning set.
  CycMatrix gram;
};

/// J0 = diag(iI, -iI) with J0^2 = -I, J0^t Q J0 = Q, positivity and
/// commutation with every generator checked exactly.
BasePoint base_point(const GroupAction& action);

struct Centralizer {
  Subspace zk;
  Subspace zp;
};

Centralizer centralizer(const GroupAction& action);
/// All of Z_g(Gamma), solved without splitting into k and p.
Subspace full_centralizer(const GroupAction& action);

bool is_stable(const Subspace& space, const std::vector<AlgElement>& operators_k);
bool is_iota_stable(const Subspace& space);

}  // namespace siegel
