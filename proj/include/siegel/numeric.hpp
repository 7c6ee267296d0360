#pragma once

#include <string>
#include <vector>

#include "siegel/decomp.hpp"

namespace siegel {

/// One dimension computed twice: exactly and by singular-value thresholding.
struct DimensionCheck {
  std::string quantity;
  int exact = 0;
  int numeric = 0;

  bool agree() const noexcept { return exact == numeric; }
};

struct Crosscheck {
  double tolerance = 1e-8;
  std::vector<DimensionCheck> checks;

  bool all_agree() const;
};

/// Rank of a real matrix (row-major rows) counting singular values above
/// tol * sigma_max.
int numeric_rank(const std::vector<std::vector<double>>& rows, double tol = 1e-8);

/// Recomputes every centralizer, bracket-span, commutant and rank dimension
/// of a pipeline run in double precision.
Crosscheck crosscheck(const GroupAction& action, const Centralizer& cz, int full_centralizer_dim,
                      const Subspace& k, const std::vector<Factor>& factors);

}  // namespace siegel
