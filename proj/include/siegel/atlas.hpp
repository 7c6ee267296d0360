#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "siegel/classify.hpp"
#include "siegel/fixtures.hpp"
#include "siegel/numeric.hpp"

namespace siegel {

enum class Backend { Exact, Crosscheck };

struct FactorReport {
  int complex_dim = 0;
  int k_real_dim = 0;
  int rank = 0;
  int commutant_real_dim = 0;
  bool irreducible = false;
  bool closure_irreducible = false;
  bool iota_stable = false;
  bool complement_stable = false;
  SpaceLabel label;
};

struct PrymReport {
  int w1_complex_dim = 0;
  int w2_complex_dim = 0;
  bool w1_stable = false;
  bool w2_stable = false;
  /// W1 and W2 are sums of factors (grouped by support on the trivial block).
  bool matches_factors = false;
};

/// Exact identities checked on every run.
struct PropertyChecks {
  bool base_point = false;
  bool direct_sum = false;
  bool bracket_closed = false;
  bool complements_stable = false;
  bool no_euclidean_factor = false;
  bool iota_stable = false;
  bool closure_agrees = false;
  bool factors_orthogonal = false;
  bool factor_dims_sum = false;
  /// Only for fixtures carrying branch metadata next to explicit generators.
  std::optional<bool> branch_metadata_reproduces_generators;

  bool all() const;
};

struct Comparison {
  std::string field;
  std::string expected;
  std::string actual;
  bool pass = false;
};

struct Report {
  std::string fixture_id;
  std::string requested_id;
  std::string input_kind;  // "cover" or "generators"
  int genus = 0;
  int conductor = 0;
  std::optional<CoverSpec> cover;
  std::optional<IsotypicDims> isotypic;
  std::vector<CycMatrix> generators;
  int zp_real_dim = 0;
  int p_complex_dim = 0;
  int zk_real_dim = 0;
  int full_centralizer_real_dim = 0;
  int k_real_dim = 0;
  std::vector<FactorReport> factors;
  std::string label;
  std::optional<PrymReport> prym;
  PropertyChecks properties;
  std::vector<Comparison> comparisons;
  std::optional<PublishedRow> published;
  std::vector<std::string> flags;
  std::optional<Crosscheck> crosscheck;
  double seconds = 0.0;

  /// Expectations met, properties hold and (when run) the crosscheck agrees.
  bool pass() const;
};

/// Full pipeline on one input: covers -> cartan -> decomp -> classify.
Report run_input(const InputDocument& input, Backend backend);
/// run_input plus comparison against the fixture's expectations. Library
/// errors are rethrown with the fixture id prepended.
Report run_family(const FamilyFixture& fixture, Backend backend);

struct Summary {
  std::vector<Report> reports;
  int failures = 0;
};

/// Runs the selected fixtures (all when the filter is empty), in canonical
/// order. Throws UnknownFixture for an unknown id.
Summary run_all(const std::vector<std::string>& filter, Backend backend);

nlohmann::ordered_json to_json(const Report& report);
nlohmann::ordered_json to_json(const Summary& summary);
std::string render_text(const Report& report);

}  // namespace siegel
