#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "siegel/config.hpp"

namespace siegel {

/// Values a fixture must reproduce. Unset fields are not compared.
struct Expected {
  std::map<Character, int> isotypic;
  std::optional<int> genus;
  std::optional<int> p_complex_dim;
  std::optional<int> k_real_dim;
  std::vector<int> factor_dims;  // complex dimensions, increasing
  std::string label;
  std::optional<std::pair<int, int>> prym;  // (dim_C W1, dim_C W2)
};

/// Echo of the printed table row and where the expectation is stated.
struct PublishedRow {
  std::string source;
  std::string group;
  int genus = 0;
  std::optional<int> dimension;
  std::string ramification;
  std::string label;
};

struct FamilyFixture {
  std::string id;
  std::vector<std::string> aliases;
  InputDocument input;
  /// Monodromy data reproducing explicit generators, found by exhaustive search.
  std::optional<CoverSpec> branch_metadata;
  Expected expected;
  PublishedRow published;
  /// Known inconsistencies of the printed row, reported verbatim.
  std::vector<std::string> notes;
};

/// The thirteen family fixtures in canonical order.
const std::vector<FamilyFixture>& fixtures();

/// Looks up a fixture by id or alias ("(31)" resolves to "(3e)").
/// Throws UnknownFixture.
const FamilyFixture& find_fixture(std::string_view id);

}  // namespace siegel
