#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "siegel/covers.hpp"

namespace siegel {

/// A parsed configuration document: monodromy data or explicit generators.
///
///   # comment
///   label = "(6e)"
///   group = [3]
///   base_genus = 1
///   branch = [[1], [1], [1]]
///
/// or `generators = ["diag(z4^3,z4^3,z4)"]` in place of group/base_genus/branch.
/// Values are JSON; cyclic groups may list branch entries as bare integers.
struct InputDocument {
  std::string label;
  std::optional<CoverSpec> cover;
  std::vector<CycMatrix> generators;

  bool is_cover() const noexcept { return cover.has_value(); }
};

/// Throws Parse with line/key context on schema violations and the covers
/// error unchanged when the monodromy data is invalid.
InputDocument parse_input(std::string_view text);
InputDocument read_input_file(const std::string& path);

/// Canonical text: fixed key order, compact JSON values.
std::string serialize_input(const InputDocument& doc);

/// Generators as a list sharing the lcm conductor.
std::vector<CycMatrix> parse_generators(const std::vector<std::string>& texts);

}  // namespace siegel
