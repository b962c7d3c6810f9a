#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "helpers.hpp"
#include "macposets/monomial_poset.hpp"
#include "macposets/poset_ops.hpp"

using namespace macposets;
using test_helpers::random_ranked_poset;

namespace {

// the 2x2 box -> 2x5 box embeddings used for the heart-shaped fiber product
PosetMap box_map(bool transposed) {
  Poset domain = cartesian_product(chain(2), chain(2));
  Poset codomain = cartesian_product(chain(2), chain(5));
  std::vector<std::pair<std::string, std::string>> images;
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j) {
      std::string from = "(" + std::to_string(i) + "," + std::to_string(j) + ")";
      std::string to = transposed ? "(" + std::to_string(j) + "," + std::to_string(i) + ")"
                                  : from;
      images.emplace_back(from, to);
    }
  return poset_map(domain, codomain, images);
}

Poset wedge_of_chains(int len, int count) {
  std::vector<Poset> parts;
  for (int i = 0; i < count; ++i) parts.push_back(chain(len));
  return wedge_product(parts);
}

}  // namespace

TEST_CASE("poset_map validation") {
  CHECK_NOTHROW(poset_map(chain(4), chain(4),
                          {{"1", "1"}, {"2", "2"}, {"3", "3"}, {"4", "4"}}));

  // bottom edge of the 2x5 box
  Poset box = cartesian_product(chain(2), chain(5));
  CHECK_NOTHROW(poset_map(chain(2), box, {{"1", "(1,1)"}, {"2", "(2,1)"}}));

  // rank violation: bottom of a 2-chain onto the top of a 3-chain
  CHECK_THROWS_AS(poset_map(chain(2), chain(3), {{"1", "3"}, {"2", "2"}}), error);
  try {
    poset_map(chain(2), chain(3), {{"1", "3"}, {"2", "2"}});
  } catch (const error& e) {
    CHECK(e.code() == errc::not_rank_preserving);
  }

  // injectivity
  CHECK_THROWS_AS(poset_map(Poset::from_covers({"a", "b"}, {}), chain(2),
                            {{"a", "1"}, {"b", "1"}}),
                  error);

  // monotonicity: ranks line up but the images are incomparable
  Poset vee = Poset::from_covers({"u", "w", "v"}, {{"w", "v"}});
  CHECK_THROWS_AS(poset_map(chain(2), vee, {{"1", "u"}, {"2", "v"}}), error);
  try {
    poset_map(chain(2), vee, {{"1", "u"}, {"2", "v"}});
  } catch (const error& e) {
    CHECK(e.code() == errc::not_monotone);
  }

  CHECK_THROWS_AS(poset_map(chain(2), chain(2), {{"1", "zz"}, {"2", "2"}}), error);
}

TEST_CASE("wedge product") {
  Poset w3 = wedge_of_chains(4, 3);
  CHECK(w3.size() == 10);
  CHECK(w3.minimal_elements().size() == 1);
  CHECK(w3.maximal_elements().size() == 3);
  CHECK(w3.covers().size() == 9);

  // single summand comes back unchanged
  Poset b2 = boolean_lattice(2);
  CHECK(wedge_product({b2}) == b2);

  Poset v = wedge_product({chain(2), chain(2)});
  CHECK(v.size() == 3);
  CHECK(v.covers().size() == 2);
  CHECK(v.minimal_elements().size() == 1);

  // no unique minimum
  Poset two_points = Poset::from_covers({"a", "b"}, {});
  CHECK_THROWS_AS(wedge_product({two_points, chain(2)}), error);

  // dual of the wedge of three 4-chains: 3 minimal, 1 maximal
  Poset d = dual(w3);
  CHECK(d.minimal_elements().size() == 3);
  CHECK(d.maximal_elements().size() == 1);
}

TEST_CASE("fiber product reproduces the heart poset") {
  Poset fp = fiber_product({box_map(false), box_map(true)});
  CHECK(fp.size() == 16);
  Poset heart = get_poset(make_presentation({"x", "y"}, {"x^5", "x^2*y^2", "y^5"}));
  CHECK(are_isomorphic(fp, heart).has_value());
}

TEST_CASE("fiber product special cases") {
  // identity maps on both sides: everything is identified
  Poset q = boolean_lattice(2);
  std::vector<std::pair<std::string, std::string>> ident;
  for (const auto& l : q.labels()) ident.emplace_back(l, l);
  PosetMap f = poset_map(q, q, ident);
  Poset self = fiber_product({f, f});
  CHECK(are_isomorphic(self, q).has_value());

  // singleton domain mapped to the least elements gives the wedge
  Poset c4 = chain(4);
  PosetMap to_min = poset_map(chain(1), c4, {{"1", "1"}});
  Poset fp = fiber_product({to_min, to_min, to_min});
  CHECK(are_isomorphic(fp, wedge_of_chains(4, 3)).has_value());

  // mismatched domains
  PosetMap other = poset_map(chain(2), c4, {{"1", "1"}, {"2", "2"}});
  CHECK_THROWS_AS(fiber_product({to_min, other}), error);
}

TEST_CASE("closed product") {
  auto three = closed_product({chain(4), chain(4), chain(4)});
  CHECK(three.warnings.empty());
  CHECK(three.poset.size() == 8);
  CHECK(three.poset.minimal_elements().size() == 1);
  CHECK(three.poset.maximal_elements().size() == 1);

  auto diamond = closed_product({chain(3), chain(3)});
  CHECK(diamond.poset.size() == 4);
  CHECK(are_isomorphic(diamond.poset, boolean_lattice(2)).has_value());

  // mismatched ranks: result plus the exact warning text
  auto warned = closed_product({boolean_lattice(2), chain(5)});
  CHECK(warned.poset.size() == 4 + 5 - 2);
  REQUIRE(warned.warnings.size() == 1);
  CHECK(warned.warnings[0] ==
        "The given posets do not have the same rank, therefore the resulting poset will not "
        "be ranked.");
  CHECK_FALSE(warned.poset.ranked());

  CHECK_THROWS_AS(closed_product({Poset::from_covers({"a", "b"}, {}), chain(2)}), error);
}

TEST_CASE("connected sum of two boxes over a chain") {
  Poset box = cartesian_product(chain(2), chain(4));
  PosetMap f = poset_map(chain(2), box, {{"1", "(1,1)"}, {"2", "(2,1)"}});
  Poset cs = connected_sum({f, f});
  CHECK(cs.size() == 12);
  REQUIRE(cs.ranked());
  std::vector<int> sizes;
  for (const auto& lvl : cs.ranks().levels) sizes.push_back(static_cast<int>(lvl.size()));
  CHECK(sizes == std::vector<int>{1, 3, 4, 3, 1});
  CHECK(cs.covers().size() == 2 * box.covers().size() - 2);
}

TEST_CASE("connected sum with singleton domain equals the closed product") {
  Poset b2 = boolean_lattice(2);
  PosetMap to_min = poset_map(chain(1), b2, {{"1", "00"}});
  Poset cs = connected_sum({to_min, to_min});
  Poset cp = closed_product({b2, b2}).poset;
  CHECK(are_isomorphic(cs, cp).has_value());
}

TEST_CASE("connected sum edge cases") {
  Poset box = cartesian_product(chain(2), chain(4));
  PosetMap f = poset_map(chain(2), box, {{"1", "(1,1)"}, {"2", "(2,1)"}});
  // single map: codomain unchanged
  CHECK(connected_sum({f}) == box);

  // non-self-dual codomain
  Poset v = wedge_product({chain(2), chain(2)});
  PosetMap into_v = poset_map(chain(1), v, {{"1", v.label(v.minimal_elements()[0])}});
  CHECK_THROWS_AS(connected_sum({into_v, into_v}), error);

  // image and dual image overlap: map the whole 2-chain into a 2-chain,
  // where the anti-automorphism swaps the two identified vertices
  PosetMap all = poset_map(chain(2), chain(2), {{"1", "1"}, {"2", "2"}});
  CHECK_THROWS_AS(connected_sum({all, all}), error);
  try {
    connected_sum({all, all});
  } catch (const error& e) {
    CHECK(e.code() == errc::inconsistent_identification);
  }

  // the fixed anti-automorphism of the diamond keeps both middle elements in
  // place, so an edge into the diamond has overlapping image and dual image
  PosetMap into_diamond =
      poset_map(chain(2), boolean_lattice(2), {{"1", "00"}, {"2", "01"}});
  CHECK_THROWS_AS(connected_sum({into_diamond, into_diamond}), error);
}

TEST_CASE("operation sizes on random inputs") {
  std::mt19937 rng(73);
  for (int iter = 0; iter < 12; ++iter) {
    // build summands with a unique minimum by wedging at a fresh bottom
    std::vector<Poset> parts;
    int t = 2 + static_cast<int>(rng() % 3);
    size_t total = 0;
    for (int i = 0; i < t; ++i) {
      Poset base = random_ranked_poset(rng, 6);
      // prepend a bottom so the minimum is unique
      std::vector<std::string> labels = {"bot"};
      for (const auto& l : base.labels()) labels.push_back("p" + l);
      std::vector<std::pair<int, int>> covers;
      for (int m : base.minimal_elements()) covers.emplace_back(0, m + 1);
      for (auto [a, b] : base.covers()) covers.emplace_back(a + 1, b + 1);
      parts.push_back(Poset::from_cover_ids(std::move(labels), std::move(covers)));
      total += parts.back().size();
    }
    Poset w = wedge_product(parts);
    CHECK(w.size() == static_cast<int>(total) - (t - 1));
  }
}

TEST_CASE("operations are invariant under permutation of the list") {
  Poset a = boolean_lattice(2);
  Poset b = chain(3);
  Poset w1 = wedge_product({a, b});
  Poset w2 = wedge_product({b, a});
  CHECK(are_isomorphic(w1, w2).has_value());

  Poset c1 = closed_product({a, boolean_lattice(2)}).poset;
  Poset c2 = closed_product({boolean_lattice(2), a}).poset;
  CHECK(are_isomorphic(c1, c2).has_value());

  Poset fp1 = fiber_product({box_map(false), box_map(true)});
  Poset fp2 = fiber_product({box_map(true), box_map(false)});
  CHECK(are_isomorphic(fp1, fp2).has_value());

  // connected sum along two different bottom edges of the box
  Poset box24 = cartesian_product(chain(2), chain(4));
  PosetMap f = poset_map(chain(2), box24, {{"1", "(1,1)"}, {"2", "(2,1)"}});
  PosetMap g = poset_map(chain(2), box24, {{"1", "(1,1)"}, {"2", "(1,2)"}});
  Poset cs1 = connected_sum({f, g});
  Poset cs2 = connected_sum({g, f});
  CHECK(cs1.size() == 8 + 8 - 2 * 2);  // disjoint image and dual-image sets
  CHECK(are_isomorphic(cs1, cs2).has_value());
}

TEST_CASE("quotient relations have witnesses inside a summand") {
  // every cover of the wedge/closed product comes from one summand
  // member labels are "i:label" joined by '='; a cover witness needs a shared i
  auto summands_of = [](const std::string& label) {
    std::set<std::string> out;
    size_t at = 0;
    while (at < label.size()) {
      size_t eq = label.find('=', at);
      std::string member = label.substr(at, eq == std::string::npos ? eq : eq - at);
      out.insert(member.substr(0, member.find(':')));
      if (eq == std::string::npos) break;
      at = eq + 1;
    }
    return out;
  };
  Poset w = wedge_of_chains(3, 3);
  for (auto [a, b] : w.covers()) {
    auto sa = summands_of(w.label(a));
    auto sb = summands_of(w.label(b));
    bool shared = false;
    for (const auto& s : sa)
      if (sb.count(s)) shared = true;
    CHECK(shared);
  }
}
