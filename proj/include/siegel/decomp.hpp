#pragma once

#include <vector>

#include "siegel/cartan.hpp"
#include "siegel/error.hpp"

namespace siegel {

struct Factor {
  Subspace space;   // W inside p'
  Subspace k_part;  // [W, W]
  int complex_dim = 0;
  int k_real_dim = 0;
  int rank = 0;
  int commutant_real_dim = 0;
  bool irreducible = false;
};

struct PrymSplit {
  Subspace w1;
  Subspace w2;
  bool w1_stable = false;
  bool w2_stable = false;
};

/// Span of all brackets of zp; throws NotStable unless [[p', p'], p'] is in p'.
Subspace derived_k(const Subspace& zp);
/// [k, p'] in p' and [k, k] in k.
bool bracket_closed(const Subspace& zp, const Subspace& k);

/// Matrix of x -> op(x) on the basis of `space` (column j = image of basis j).
/// Throws NotStable when an image leaves the space.
template <typename Op>
CycMatrix operator_matrix(const Subspace& space, Op op);

/// Gram matrix of the trace form on the basis of `space`.
CycMatrix gram_matrix(const Subspace& space);

/// Real dimension of {T in End(space) : T ad_c = ad_c T for c in k, T iota = iota T}.
int commutant_real_dim(const Subspace& space, const Subspace& k);

/// Trace-form orthogonal complement of `sub` inside `space`.
Subspace orthogonal_complement(const Subspace& space, const Subspace& sub);

/// Smallest subspace containing v that is stable under ad(k) and iota.
Subspace closure(const AlgElement& v, const Subspace& k);

std::vector<Factor> invariant_factors(const Subspace& zp, const Subspace& k);

/// dim Z_W(X) for sampled X, accepted only when Z_W(X) is abelian.
int factor_rank(const Subspace& w);
inline int factor_rank(const Factor& f) { return factor_rank(f.space); }

PrymSplit prym_split(const Subspace& zp, const IsotypicDims& dims);

// ---------------------------------------------------------------------------

template <typename Op>
CycMatrix operator_matrix(const Subspace& space, Op op) {
  const auto basis = space.basis();
  const int n = static_cast<int>(basis.size());
  CycMatrix m(n, n, space.conductor());
  for (int j = 0; j < n; ++j) {
    const auto coords = space.coordinates(op(basis[static_cast<size_t>(j)]));
    if (!coords) throw Error(ErrorKind::NotStable, "operator does not preserve the subspace");
    for (int i = 0; i < n; ++i) m.set(i, j, (*coords)[static_cast<size_t>(i)]);
  }
  return m;
}

}  // namespace siegel
