#include "siegel/fixtures.hpp"

#include <algorithm>

#include "siegel/error.hpp"

namespace siegel {

namespace {

InputDocument explicit_input(const std::string& label, const std::vector<std::string>& generators) {
  InputDocument doc;
  doc.label = label;
  doc.generators = parse_generators(generators);
  return doc;
}

CoverSpec cover(const std::string& label, std::vector<int> group, int base_genus,
                std::vector<AbelianGroup::Element> branch) {
  CoverSpec spec{AbelianGroup(std::move(group)), base_genus, std::move(branch), label};
  spec.validate();
  return spec;
}

InputDocument cover_input(const CoverSpec& spec) {
  InputDocument doc;
  doc.label = spec.label;
  doc.cover = spec;
  return doc;
}

FamilyFixture explicit_family(const std::string& id, const std::string& generator, CoverSpec metadata,
                              Expected expected, PublishedRow published) {
  FamilyFixture f;
  f.id = id;
  f.input = explicit_input(id, {generator});
  f.branch_metadata = std::move(metadata);
  f.expected = std::move(expected);
  f.published = std::move(published);
  return f;
}

FamilyFixture cover_family(const CoverSpec& spec, Expected expected, PublishedRow published) {
  FamilyFixture f;
  f.id = spec.label;
  f.input = cover_input(spec);
  f.expected = std::move(expected);
  f.published = std::move(published);
  return f;
}

std::vector<FamilyFixture> build() {
  std::vector<FamilyFixture> out;
  const auto ones = [](int n) { return std::vector<AbelianGroup::Element>(static_cast<size_t>(n), {1}); };

  out.push_back(explicit_family(
      "(2)", "diag(-1,-1)", cover("(2)", {2}, 0, ones(6)),
      {{}, 2, 3, std::nullopt, {3}, "𝔖₂", std::nullopt},
      {"uniformization table row (2); family (2): A0 = -I2", "Z/2", 2, 3, "", "𝔖₂"}));
  out.push_back(explicit_family(
      "(6)", "diag(z3^2,z3^2,z3)", cover("(6)", {3}, 0, {{1}, {1}, {1}, {1}, {2}}),
      {{}, 3, 2, 4, {2}, "B₂(ℂ)", std::nullopt},
      {"uniformization table row (6); family (6) worked example", "Z/3", 3, 2, "", "B₂(ℂ)"}));
  out.push_back(explicit_family(
      "(8)", "diag(z4^3,z4^3,z4)", cover("(8)", {4}, 0, {{1}, {1}, {2}, {2}, {2}}),
      {{}, 3, 2, 4, {2}, "B₂(ℂ)", std::nullopt},
      {"uniformization table row (8); family (8): A0 = diag(ζ³,ζ³,ζ), k' = u(2)", "Z/4", 3, 2, "", "B₂(ℂ)"}));
  out.push_back(explicit_family(
      "(10)", "diag(z3^2,z3^2,z3^2,z3)", cover("(10)", {3}, 0, ones(6)),
      {{}, 4, 3, 9, {3}, "B₃(ℂ)", std::nullopt},
      {"uniformization table row (10); family (10): dim k' = 9", "Z/3", 4, 3, "", "B₃(ℂ)"}));
  out.push_back(explicit_family(
      "(14)", "diag(z6^5,z6^5,z6^2,z6)", cover("(14)", {6}, 0, {{2}, {2}, {2}, {3}, {3}}),
      {{}, 4, 2, 4, {2}, "B₂(ℂ)", std::nullopt},
      {"uniformization table row (14); family (14) worked example", "Z/6", 4, 2, "", "B₂(ℂ)"}));
  out.push_back(explicit_family(
      "(16)", "diag(z5^4,z5^4,z5^4,z5^3,z5^3,z5^2)", cover("(16)", {5}, 0, ones(5)),
      {{}, 6, 2, 4, {2}, "B₂(ℂ)", std::nullopt},
      {"uniformization table row (16); family (16): A0 = diag(ζ⁴,ζ⁴,ζ⁴,ζ³,ζ³,ζ²)", "Z/5", 6, 2, "", "B₂(ℂ)"}));

  out.push_back(cover_family(
      cover("(26)", {2}, 1, {{1}, {1}}),
      {{{{0}, 1}, {{1}, 1}}, 2, 2, 2, {1, 1}, "B₁(ℂ)×B₁(ℂ)", std::pair{1, 1}},
      {"uniformization table row (26); worked as family (1e)", "Z/2×Z/2", 2, 2, "", "B₁(ℂ)×B₁(ℂ)"}));
  out.push_back(cover_family(
      cover("(27)", {2, 2}, 0, {{1, 0}, {1, 0}, {0, 1}, {0, 1}, {1, 1}, {1, 1}}),
      {{{{0, 0}, 0}, {{0, 1}, 1}, {{1, 0}, 1}, {{1, 1}, 1}}, 3, 3, 3, {1, 1, 1}, "B₁(ℂ)×B₁(ℂ)×B₁(ℂ)",
       std::nullopt},
      {"uniformization table row (27); family (27): χ = χ₂+χ₃+χ₄", "Z/2×Z/2", 3, 3, "",
       "B₁(ℂ)×B₁(ℂ)×B₁(ℂ)"}));

  out.push_back(cover_family(
      cover("(1e)", {2}, 1, {{1}, {1}}),
      {{{{0}, 1}, {{1}, 1}}, 2, 2, 2, {1, 1}, "B₁(ℂ)×B₁(ℂ)", std::pair{1, 1}},
      {"elliptic table row (1e); family (1e): χ = χ₀+χ₁", "Z/2", 2, 2, "(2²)", "B₁(ℂ)×B₁(ℂ)"}));
  FamilyFixture e2 = cover_family(
      cover("(2e)", {2}, 1, {{1}, {1}, {1}, {1}}),
      {{{{0}, 1}, {{1}, 2}}, 3, 4, 5, {1, 3}, "B₁(ℂ)×𝔖₂", std::pair{1, 3}},
      {"elliptic table row (2e); family (2e): χ = χ₀+2χ₁, M of type BD I (3,2)", "Z/2", 3, 4, "(2⁴)",
       "B₁(ℂ)×𝔖₃"});
  out.push_back(std::move(e2));
  FamilyFixture e3 = cover_family(
      cover("(3e)", {3}, 1, {{1}, {2}}),
      {{{{0}, 1}, {{1}, 1}, {{2}, 1}}, 3, 2, std::nullopt, {1, 1}, "B₁(ℂ)×B₁(ℂ)", std::pair{1, 1}},
      {"elliptic table row (3e); family (3e): χ = χ₀+χ₁+χ₂", "Z/3", 3, 2, "(2²)", "B₁(ℂ)×B₁(ℂ)"});
  e3.aliases = {"(31)"};
  e3.notes.push_back(
      "printed ramification (2²) is impossible in Z/3 (no element of order 2); monodromy a = (1,2) of type (3²) "
      "reproduces χ₀+χ₁+χ₂");
  out.push_back(std::move(e3));
  FamilyFixture e4 = cover_family(
      cover("(4e)", {4}, 1, {{2}, {2}}),
      {{{{0}, 1}, {{1}, 1}, {{2}, 0}, {{3}, 1}}, 3, 2, std::nullopt, {1, 1}, "B₁(ℂ)×B₁(ℂ)", std::pair{1, 1}},
      {"elliptic table row (4e); family (4e): χ = χ₀+χ₁+χ₃", "Z/4", 3, 2, "(2²)", "B₁(ℂ)×B₁(ℂ)"});
  e4.aliases = {"(32)"};
  out.push_back(std::move(e4));
  out.push_back(cover_family(
      cover("(6e)", {3}, 1, {{1}, {1}, {1}}),
      {{{{0}, 1}, {{1}, 1}, {{2}, 2}}, 4, 3, 5, {1, 2}, "B₁(ℂ)×B₂(ℂ)", std::pair{1, 2}},
      {"elliptic table row (6e); family (6e): χ = χ₀+χ₁+2χ₂", "Z/3", 4, 3, "(3³)", "B₁(ℂ)×B₂(ℂ)"}));
  return out;
}

}  // namespace

const std::vector<FamilyFixture>& fixtures() {
  static const std::vector<FamilyFixture> all = build();
  return all;
}

const FamilyFixture& find_fixture(std::string_view id) {
  for (const auto& f : fixtures())
    if (f.id == id || std::find(f.aliases.begin(), f.aliases.end(), id) != f.aliases.end()) return f;
  throw Error(ErrorKind::UnknownFixture, "unknown fixture '" + std::string(id) + "'");
}

}  // namespace siegel
