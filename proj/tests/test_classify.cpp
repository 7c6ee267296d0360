#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "siegel/classify.hpp"
#include "siegel/error.hpp"

using namespace siegel;

namespace {

std::set<std::string> names(const SpaceLabel& l) {
  std::set<std::string> out{l.name()};
  for (const auto& a : l.aliases) out.insert(a.name());
  return out;
}

}  // namespace

TEST_CASE("catalogue dimension formulas") {
  CHECK(Catalogue::dim_c(Family::AIII, {2, 3}) == 6);
  CHECK(Catalogue::dim_c(Family::BDI, {5, 2}) == 5);
  CHECK(Catalogue::dim_c(Family::DIII, {5}) == 10);
  CHECK(Catalogue::dim_c(Family::CI, {3}) == 6);
  CHECK(Catalogue::dim_c(Family::EIII, {}) == 16);
  CHECK(Catalogue::dim_c(Family::EVII, {}) == 27);
  CHECK(Catalogue::k_dim(Family::AIII, {1, 2}) == 4);
  CHECK(Catalogue::rank(Family::DIII, {5}) == 2);
}

TEST_CASE("classification of invariant triples") {
  auto l = classify_factor(2, 4, 1);
  CHECK(l.name() == "AIII(1,2)");
  CHECK(l.display == "B₂(ℂ)");

  l = classify_factor(3, 9, 1);
  CHECK(l.name() == "AIII(1,3)");
  CHECK(l.display == "B₃(ℂ)");

  l = classify_factor(3, 4, 2);
  CHECK(l.name() == "CI(2)");
  CHECK(l.display == "𝔖₂");
  CHECK(names(l) == std::set<std::string>{"CI(2)", "BDI(3,2)"});

  l = classify_factor(1, 1, 1);
  CHECK(l.name() == "AIII(1,1)");
  CHECK(l.display == "B₁(ℂ)");

  CHECK(classify_factor(16, 46, 2).name() == "EIII");
  CHECK(classify_factor(27, 79, 3).name() == "EVII");

  try {
    classify_factor(2, 5, 1);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Unclassified);
    CHECK(std::string(e.what()).find("(2, 5, 1)") != std::string::npos);
  }
}

TEST_CASE("coincident rows are exactly the classical isomorphisms") {
  // su(1,1) = so(1,2) = sp(2,R), sp(4,R) = so(3,2), su(1,3) = so*(6),
  // su(2,2) = so(4,2), so*(8) = so(6,2).
  const std::set<std::set<std::string>> known{{"AIII(1,1)", "BDI(1,2)", "CI(1)"},
                                              {"CI(2)", "BDI(3,2)"},
                                              {"AIII(1,3)", "DIII(3)"},
                                              {"AIII(2,2)", "BDI(4,2)"},
                                              {"DIII(4)", "BDI(6,2)"}};
  std::set<std::set<std::string>> found;
  for (int d = 1; d <= 300; ++d) {
    std::map<std::tuple<int, int>, std::set<std::string>> by_triple;
    for (const auto& row : Catalogue::standard().rows_with_dim(d)) {
      SpaceLabel l;
      l.family = row.family;
      l.params = row.params;
      by_triple[{row.k_dim, row.rank}].insert(l.name());
      CHECK(row.dim_c == d);
    }
    for (const auto& [key, group] : by_triple) {
      const bool ambiguous = group.size() > 1 && !known.count(group);
      if (ambiguous) {
        CHECK_THROWS_AS(classify_factor(d, std::get<0>(key), std::get<1>(key)), Error);
        continue;
      }
      const auto l = classify_factor(d, std::get<0>(key), std::get<1>(key));
      CHECK(names(l) == group);
      for (const auto& a : l.aliases) {
        CHECK(a.dim_c == d);
        CHECK(a.aliases.empty());
      }
      if (group.size() > 1) found.insert(group);
    }
  }
  CHECK(found == known);
}

TEST_CASE("a triple shared by non-isomorphic spaces is not classified") {
  // su(4,7) and so*(16) both have dim_C 28, dim k 64 and rank 4.
  CHECK(Catalogue::standard().match(28, 64, 4).size() == 2);
  try {
    classify_factor(28, 64, 4);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Unclassified);
  }
}

TEST_CASE("product labels") {
  const auto disc = classify_factor(1, 1, 1);
  CHECK(compose_label({disc, disc, disc}) == "B₁(ℂ)×B₁(ℂ)×B₁(ℂ)");
  CHECK(compose_label({classify_factor(2, 4, 1), disc}) == "B₁(ℂ)×B₂(ℂ)");
  CHECK(compose_label({classify_factor(3, 4, 2)}) == "𝔖₂");
  CHECK_THROWS_AS(compose_label({}), Error);
}

TEST_CASE("dimension of a printed label") {
  CHECK(label_dimension("B₁(ℂ)×𝔖₃") == 7);
  CHECK(label_dimension("B₁(ℂ)×𝔖₂") == 4);
  CHECK(label_dimension("B₁×B₁") == 2);
  CHECK(label_dimension("AIII(1,1) × BDI(3,2)") == 4);
  CHECK(label_dimension("𝔖₁₀") == 55);
  CHECK_THROWS_AS(label_dimension("Q5"), Error);
  CHECK_THROWS_AS(label_dimension("B₁×"), Error);
}
