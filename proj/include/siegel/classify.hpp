#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace siegel {

enum class Family { AIII, BDI, DIII, CI, EIII, EVII };
std::string_view to_string(Family family);

/// Irreducible Hermitian symmetric space of non-compact type.
struct SpaceLabel {
  Family family = Family::AIII;
  std::vector<int> params;
  int dim_c = 0;
  int k_dim = 0;
  int rank = 0;
  std::string display;
  std::vector<SpaceLabel> aliases;

  /// "AIII(1,2)", "BDI(3,2)", "EIII", ...
  std::string name() const;
};

struct CatalogueRow {
  Family family;
  std::vector<int> params;
  int dim_c;
  int k_dim;
  int rank;
  /// False for the low-dimension rows kept only to record coincidences
  /// (CI(1), BDI(1,2), BDI(3,2), DIII(3)).
  bool in_table;
};

class Catalogue {
 public:
  static const Catalogue& standard();

  /// Every row (table and alias rows) with the given complex dimension.
  std::vector<CatalogueRow> rows_with_dim(int dim_c) const;
  std::vector<CatalogueRow> match(int dim_c, int k_dim, int rank) const;

  static int dim_c(Family family, const std::vector<int>& params);
  static int k_dim(Family family, const std::vector<int>& params);
  static int rank(Family family, const std::vector<int>& params);
};

/// Unique catalogue entry for the triple, with every coincident row attached
/// as an alias. Throws Unclassified when nothing matches, or when the triple
/// is shared by rows that are not isomorphic (AIII(4,7) and DIII(8)).
SpaceLabel classify_factor(int dim_c, int k_dim, int rank);

/// Factors sorted by (dim_C, family, params) and joined with "×".
std::string compose_label(std::vector<SpaceLabel> factors);

/// Total complex dimension of a product label such as "B₁(ℂ)×𝔖₃".
int label_dimension(std::string_view label);

}  // namespace siegel
