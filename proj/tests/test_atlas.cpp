#include <doctest.h>

#include <algorithm>

#include "siegel/atlas.hpp"
#include "siegel/error.hpp"
#include "siegel/matrix_text.hpp"

using namespace siegel;

namespace {

nlohmann::ordered_json without_timing(nlohmann::ordered_json j) {
  for (auto& r : j["reports"]) r.erase("timing");
  return j;
}

CycMatrix rotation(int g, int i, int j) {
  auto r = CycMatrix::identity(g, 1);
  r.set(i, i, CycNum(1, Rational(3, 5)));
  r.set(i, j, CycNum(1, Rational(-4, 5)));
  r.set(j, i, CycNum(1, Rational(4, 5)));
  r.set(j, j, CycNum(1, Rational(3, 5)));
  return r;
}

}  // namespace

TEST_CASE("filters") {
  CHECK(run_all({"(8)"}, Backend::Exact).reports.size() == 1);
  try {
    run_all({"(99)"}, Backend::Exact);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnknownFixture);
  }
  const auto aliased = run_all({"(31)"}, Backend::Exact);
  REQUIRE(aliased.reports.size() == 1);
  CHECK(aliased.reports[0].fixture_id == "(3e)");
}

TEST_CASE("full suite") {
  const auto s = run_all({}, Backend::Crosscheck);
  CHECK(s.reports.size() == 13);
  CHECK(s.failures == 0);
  for (const auto& r : s.reports) {
    INFO(r.fixture_id);
    CHECK(r.pass());
    CHECK(r.properties.all());
    REQUIRE(r.crosscheck);
    CHECK(r.crosscheck->all_agree());
  }
}

TEST_CASE("selected families") {
  auto r = run_family(find_fixture("(10)"), Backend::Exact);
  CHECK(r.p_complex_dim == 3);
  CHECK(r.k_real_dim == 9);
  CHECK(r.label == "B₃(ℂ)");
  CHECK(r.pass());
  CHECK(run_family(find_fixture("(2)"), Backend::Exact).label == "𝔖₂");
  r = run_family(find_fixture("(16)"), Backend::Exact);
  CHECK(r.p_complex_dim == 2);
  CHECK(r.label == "B₂(ℂ)");
}

TEST_CASE("order independence and deterministic output") {
  const auto a = to_json(run_all({"(27)", "(8)", "(2e)"}, Backend::Exact));
  const auto b = to_json(run_all({"(2e)", "(27)", "(8)"}, Backend::Exact));
  CHECK(without_timing(a).dump() == without_timing(b).dump());
  const auto c = to_json(run_all({"(2e)", "(27)", "(8)"}, Backend::Exact));
  CHECK(without_timing(b).dump() == without_timing(c).dump());
}

TEST_CASE("report JSON") {
  const auto j = to_json(run_family(find_fixture("(6e)"), Backend::Crosscheck));
  CHECK(j["fixture"] == "(6e)");
  CHECK(j["label"] == "B₁(ℂ)×B₂(ℂ)");
  CHECK(j["prym"]["w2_complex_dim"] == 2);
  CHECK(j["generators"][0]["text"] == "diag(1,z3,z3^2,z3^2)");
  const auto& entry = j["generators"][0]["entries"][1][1];
  CHECK(entry["conductor"] == 12);
  for (const auto& term : entry["terms"]) CHECK(term[1].is_string());
  CHECK(j["crosscheck"]["agree"] == true);
  CHECK(j["pass"] == true);
}

TEST_CASE("classification is invariant under conjugation of the action") {
  for (const char* id : {"(8)", "(10)", "(14)"}) {
    const auto& f = find_fixture(id);
    const auto base = run_input(f.input, Backend::Exact);
    InputDocument moved;
    const int g = base.genus;
    const auto p = rotation(g, 0, g - 1).lift(base.conductor);
    for (const auto& m : base.generators) moved.generators.push_back(p * m * p.transpose());
    CHECK_FALSE(moved.generators[0].is_diagonal());
    const auto r = run_input(moved, Backend::Crosscheck);
    CHECK(r.label == base.label);
    CHECK(r.k_real_dim == base.k_real_dim);
    CHECK(r.properties.all());
    CHECK(r.crosscheck->all_agree());
  }
}

TEST_CASE("Klein four cover of the line in genus two gives two discs") {
  // The same fixed locus arises from the double cover of an elliptic curve.
  const auto doc = parse_input("group = [2, 2]\nbase_genus = 0\nbranch = [[1,0],[1,0],[1,0],[0,1],[1,1]]");
  const auto r = run_input(doc, Backend::Exact);
  CHECK(r.genus == 2);
  CHECK(r.label == "B₁(ℂ)×B₁(ℂ)");
  CHECK(r.label == run_family(find_fixture("(26)"), Backend::Exact).label);
}

TEST_CASE("the printed label of the degree-two elliptic family is flagged") {
  const auto r = run_family(find_fixture("(2e)"), Backend::Exact);
  CHECK(r.label == "B₁(ℂ)×𝔖₂");
  CHECK(std::any_of(r.flags.begin(), r.flags.end(),
                    [](const std::string& f) { return f.find("complex dimension 7") != std::string::npos; }));
  REQUIRE(r.factors.size() == 2);
  CHECK(r.factors[1].label.name() == "CI(2)");
  CHECK(r.factors[1].label.aliases.at(0).name() == "BDI(3,2)");
}
