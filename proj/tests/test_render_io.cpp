#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "macposets/io.hpp"
#include "macposets/monomial_poset.hpp"
#include "macposets/poset_ops.hpp"
#include "macposets/render.hpp"

using namespace macposets;

namespace {

int count_lines_with(const std::string& text, const std::string& needle) {
  int n = 0;
  size_t at = 0;
  while ((at = text.find(needle, at)) != std::string::npos) {
    ++n;
    at += needle.size();
  }
  return n;
}

Poset heart() { return get_poset(make_presentation({"x", "y"}, {"x^5", "x^2*y^2", "y^5"})); }

}  // namespace

TEST_CASE("tikz output counts nodes and edges") {
  std::string two = to_tikz(chain(2));
  CHECK(count_lines_with(two, "\\node") == 2);
  CHECK(count_lines_with(two, "\\draw") == 1);

  Poset h = heart();
  auto orders = macaulay_orders(h);
  REQUIRE(orders.orders.size() == 2);
  std::string pic = to_tikz(h, orders.orders[0]);
  CHECK(count_lines_with(pic, "\\node") == 16);
  CHECK(count_lines_with(pic, "\\draw") == 22);
  // the macaulay order puts y left of x on level one
  CHECK(pic.find("{$y$}") < pic.find("{$x$}"));
  // monomial labels are typeset with braced exponents
  CHECK(pic.find("x^{2}") != std::string::npos);

  std::string fallback = to_tikz(boolean_lattice(2));
  CHECK(count_lines_with(fallback, "\\node") == 4);
  CHECK(count_lines_with(fallback, "\\draw") == 4);

  Poset unranked = Poset::from_covers(
      {"a", "b", "c", "d", "e"}, {{"a", "b"}, {"a", "c"}, {"c", "d"}, {"b", "e"}, {"d", "e"}});
  CHECK_THROWS_AS(to_tikz(unranked), error);

  CHECK(to_tikz(chain(2)) == to_tikz(chain(2)));
}

TEST_CASE("dot output") {
  std::string single = to_dot(chain(1));
  CHECK(count_lines_with(single, "[label=") == 1);
  CHECK(count_lines_with(single, "->") == 0);

  CHECK(count_lines_with(to_dot(chain(3)), "->") == 2);

  Poset w = wedge_product({chain(4), chain(4), chain(4)});
  std::string dot = to_dot(w);
  CHECK(count_lines_with(dot, "->") == 9);
  CHECK(count_lines_with(dot, "[label=") == 10);
  CHECK(count_lines_with(dot, "rank=same") == 4);
}

TEST_CASE("poset json round trip") {
  Poset h = heart();
  auto j = poset_to_json(h);
  Poset back = poset_from_json(j);
  CHECK(back == h);

  CHECK_THROWS_AS(poset_from_json(nlohmann::json::parse(R"({"elements": ["a"]})")), error);
  CHECK_THROWS_AS(poset_from_json(nlohmann::json::parse(R"({"elements": [1], "covers": []})")),
                  error);
  CHECK_THROWS_AS(
      poset_from_json(nlohmann::json::parse(R"({"elements": ["a"], "covers": [["a"]]})")),
      error);
}

TEST_CASE("ring json round trip") {
  auto ring = make_presentation({"x", "y"}, {"x^2 - y^2", "y^3"});
  auto j = ring_to_json(ring);
  auto back = ring_from_json(j);
  CHECK(back.vars == ring.vars);
  CHECK(back.generators == ring.generators);
  CHECK(back.field == ring.field);

  auto fp_ring = ring_from_json(
      nlohmann::json::parse(R"({"vars": ["x"], "field": {"Fp": 7}, "ideal": ["x^3"]})"));
  CHECK(fp_ring.field.kind == Field::Kind::prime);
  CHECK(fp_ring.field.p == 7);

  CHECK_THROWS_AS(ring_from_json(nlohmann::json::parse(R"({"vars": ["x"]})")), error);
  CHECK_THROWS_AS(
      ring_from_json(nlohmann::json::parse(R"({"vars": ["x"], "field": "ZZ", "ideal": []})")),
      error);
}

TEST_CASE("map json with inline posets") {
  auto j = nlohmann::json::parse(R"({
    "domain": {"elements": ["1", "2"], "covers": [["1", "2"]]},
    "codomain": {"elements": ["a", "b", "c"], "covers": [["a", "b"], ["b", "c"]]},
    "images": [["1", "a"], ["2", "b"]]
  })");
  PosetMap m = poset_map_from_json(j, "");
  CHECK(m.domain.size() == 2);
  CHECK(m.codomain.size() == 3);
  CHECK(m.image == std::vector<int>{0, 1});
}

TEST_CASE("map json with file references") {
  std::string dir = "./io_test_tmp";
  std::filesystem::create_directories(dir);
  {
    std::ofstream out(dir + "/dom.poset");
    out << poset_to_json(chain(2));
  }
  {
    std::ofstream out(dir + "/codom.poset");
    out << poset_to_json(cartesian_product(chain(2), chain(5)));
  }
  {
    std::ofstream out(dir + "/f.map");
    out << nlohmann::json::parse(R"json({
      "domain": "dom.poset",
      "codomain": "codom.poset",
      "images": [["1", "(1,1)"], ["2", "(2,1)"]]
    })json");
  }
  PosetMap m = load_poset_map(dir + "/f.map");
  CHECK(m.domain.size() == 2);
  CHECK(m.codomain.size() == 10);
  std::filesystem::remove_all(dir);

  CHECK_THROWS_AS(load_poset("definitely_missing_file.poset"), error);
}
