#include <doctest.h>

#include "siegel/config.hpp"
#include "siegel/error.hpp"
#include "siegel/matrix_text.hpp"

using namespace siegel;

namespace {

ErrorKind kind_of(std::string_view text, std::string* message = nullptr) {
  try {
    parse_input(text);
  } catch (const Error& e) {
    if (message) *message = e.what();
    return e.kind();
  }
  return ErrorKind::Internal;
}

}  // namespace

TEST_CASE("cover documents") {
  const auto doc = parse_input("# three branch points\nlabel = \"(6e)\"\ngroup = [3]\nbase_genus = 1\nbranch = [1, 1, 1]\n");
  REQUIRE(doc.is_cover());
  CHECK(doc.label == "(6e)");
  CHECK(doc.cover->group == AbelianGroup({3}));
  CHECK(doc.cover->base_genus == 1);
  CHECK(doc.cover->branch == std::vector<std::vector<int>>{{1}, {1}, {1}});

  const auto klein = parse_input("group = [2, 2]\nbase_genus = 0\nbranch = [[1,0],[1,0],[0,1],[0,1],[1,1],[1,1]]");
  CHECK(klein.cover->branch.size() == 6);
}

TEST_CASE("generator documents") {
  const auto doc = parse_input("generators = [\"diag(z4^3,z4^3,z4)\"]");
  REQUIRE_FALSE(doc.is_cover());
  REQUIRE(doc.generators.size() == 1);
  CHECK(doc.generators[0] == parse_matrix("diag(z4^3,z4^3,z4)"));

  const auto two = parse_input("generators = [\"diag(z3,1)\", \"diag(-1,1)\"]");
  CHECK(two.generators[0].conductor() == two.generators[1].conductor());
}

TEST_CASE("invalid monodromy is reported by kind") {
  CHECK(kind_of("group = [3]\nbase_genus = 0\nbranch = [1, 1, 2]") == ErrorKind::InconsistentMonodromy);
  CHECK(kind_of("group = [4]\nbase_genus = 0\nbranch = [2, 2]") == ErrorKind::DisconnectedCover);
}

TEST_CASE("schema violations carry line and key") {
  std::string msg;
  CHECK(kind_of("group = [3]\nbase_genus = 1\ncolour = 4\nbranch = [1,2]", &msg) == ErrorKind::Parse);
  CHECK(msg.find("line 3") != std::string::npos);
  CHECK(msg.find("colour") != std::string::npos);

  CHECK(kind_of("group = [3]\ngroup = [3]\nbase_genus = 1\nbranch = [1,2]", &msg) == ErrorKind::Parse);
  CHECK(msg.find("line 2") != std::string::npos);

  CHECK(kind_of("group = [3]\nbase_genus = 1\nbranch = [1,2]\ngenerators = [\"diag(1)\"]") == ErrorKind::Parse);
  CHECK(kind_of("group = [3]\nbase_genus = 1") == ErrorKind::Parse);
  CHECK(kind_of("group = [3\nbase_genus = 1\nbranch = [1,2]") == ErrorKind::Parse);
  CHECK(kind_of("group = [3]\nbase_genus = \"one\"\nbranch = [1,2]") == ErrorKind::Parse);
  CHECK(kind_of("generators = [\"diag(z4^)\"]") == ErrorKind::Parse);
  CHECK(kind_of("no equals sign") == ErrorKind::Parse);
}

TEST_CASE("serialization round trip") {
  for (const char* text : {"label = \"(6e)\"\ngroup = [3]\nbase_genus = 1\nbranch = [1, 1, 1]\n",
                           "group = [2,2]\nbase_genus = 0\nbranch = [[1,0],[1,0],[0,1],[0,1],[1,1],[1,1]]",
                           "label = \"x\"\ngenerators = [\"diag(z4^3, z4^3, z4)\", \"[[0,1],[1,0]]\"]"}) {
    const std::string once = serialize_input(parse_input(text));
    const std::string twice = serialize_input(parse_input(once));
    CHECK(once == twice);
  }
}
