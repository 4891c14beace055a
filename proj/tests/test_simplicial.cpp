#include "doctest.h"
#include "support.hpp"
#include "twogroups/catalog.hpp"
#include "twogroups/crossed_module.hpp"
#include "twogroups/simplicial.hpp"

using namespace twogroups;

namespace {

std::vector<std::size_t> layer_sizes(const TruncatedSimplicialSet& x) {
  std::vector<std::size_t> out;
  for (const auto& l : x.layers) out.push_back(l.size());
  return out;
}

}  // namespace

TEST_SUITE("simplicial") {
  TEST_CASE("nerve layer counts") {
    const auto z2 = nerve_of_groupoid(delooping(cyclic_group(2)), 3);
    CHECK(layer_sizes(z2) == std::vector<std::size_t>{1, 2, 4, 8});
    CHECK(validate_simplicial(z2).ok());

    const auto disc = nerve_of_groupoid(discrete_groupoid({"p", "q", "r"}), 2);
    CHECK(layer_sizes(disc) == std::vector<std::size_t>{3, 3, 3});
    CHECK(validate_simplicial(disc).ok());

    const FiniteGroupoid g = to_strict_two_group(catalog::xm1()).base;
    const auto xm1 = nerve_of_groupoid(g, 2);
    // Composable pairs: sum over objects of in-degree times out-degree.
    std::size_t pairs = 0;
    for (std::size_t x = 0; x < g.object_count(); ++x) {
      std::size_t in = 0, out = 0;
      for (std::size_t a = 0; a < g.arrow_count(); ++a) {
        in += g.tgt(a) == x;
        out += g.src(a) == x;
      }
      pairs += in * out;
    }
    CHECK(pairs == 16);
    CHECK(layer_sizes(xm1) == std::vector<std::size_t>{4, 8, 16});
    CHECK(validate_simplicial(xm1).ok());
  }

  TEST_CASE("truncated integers {-1,0,1}: X2 has 7 elements, X3 matches enumeration") {
    const PartialGroup v = truncated_integers(1);
    CHECK(validate_partial_group(v).ok());
    const auto x = nerve_of_partial_group(v, 3);
    CHECK(validate_simplicial(x).ok());
    CHECK(x.count(2) == 7);
    const std::vector<int> vals{-1, 0, 1};
    auto in_v = [](int s) { return s >= -1 && s <= 1; };
    std::size_t triples = 0;
    for (int a : vals)
      for (int b : vals)
        for (int c : vals) triples += in_v(a + b) && in_v(b + c) && in_v(a + b + c);
    CHECK(x.count(3) == triples);
  }

  TEST_CASE("a partial group that is a whole group has the group nerve") {
    const Group s3 = symmetric_group(3);
    const auto a = nerve_of_partial_group(as_partial_group(s3), 3);
    const auto b = nerve_of_groupoid(delooping(s3), 3);
    CHECK(a == b);
  }

  TEST_CASE("simplicial identities catch a corrupted face") {
    auto x = nerve_of_groupoid(delooping(cyclic_group(3)), 3);
    std::swap(x.faces[2][0][1], x.faces[2][0][2]);
    CHECK_FALSE(validate_simplicial(x).ok());
  }

  TEST_CASE("nerve of Z/2 is 1-Kan through dimension 3") {
    const auto x = nerve_of_groupoid(delooping(cyclic_group(2)), 3);
    const KanReport r = kan_check(x, 1, 3);
    CHECK(r.ok());
    for (const HornSummary& h : r.horns) {
      CHECK(h.missing == 0);
      if (h.m >= 2) {
        CHECK(h.uniqueness_required);
        CHECK(h.ambiguous == 0);
      }
    }
    // Λ[m,j] horns of a group nerve correspond to (m-1)-tuples.
    CHECK(r.at(2, 1)->horns == 4);
    CHECK(r.at(3, 1)->horns == 8);
  }

  TEST_CASE("truncated integers fail at the Λ[2,1] horn with edges (1,1)") {
    const auto x = nerve_of_partial_group(truncated_integers(1), 3);
    const KanReport r = kan_check(x, 1, 2);
    CHECK_FALSE(r.ok());
    const HornSummary* f = r.at(2, 1);
    REQUIRE(f);
    CHECK(f->missing > 0);
    CHECK(f->first_missing ==
          std::vector<std::pair<std::size_t, std::string>>{{0, "[1]"}, {2, "[1]"}});
  }

  TEST_CASE("kan_check refuses dimensions above the depth") {
    const auto x = nerve_of_groupoid(delooping(cyclic_group(2)), 2);
    CHECK_THROWS_AS(kan_check(x, 1, 3), PreconditionError);
  }

  TEST_CASE("bar nerve of XM2 is 2-Kan through dimension 3") {
    const auto x = two_group_nerve(to_strict_two_group(catalog::xm2()));
    CHECK(validate_simplicial(x).ok());
    CHECK(x.count(1) == 6);
    CHECK(x.count(3) == 36u * 36u * 36u);
    const KanReport r = kan_check(x, 2, 3);
    CHECK(r.ok());
    CHECK(r.at(2, 0)->horns == 36);
    CHECK(r.at(3, 0)->horns == 46656);
  }

  TEST_CASE("bar nerve refuses inputs above the size guard") {
    CHECK_THROWS_AS(two_group_nerve(to_strict_two_group(catalog::xm_s4())), PreconditionError);
  }

  TEST_CASE("2-Kan to groupoid: Z/3 nerve gives three objects with identity arrows") {
    const FiniteGroupoid g = two_kan_to_groupoid(nerve_of_groupoid(delooping(cyclic_group(3)), 3));
    CHECK(validate_groupoid(g).ok());
    CHECK(g.object_count() == 3);
    CHECK(g.arrow_count() == 3);
    for (std::size_t a = 0; a < 3; ++a) CHECK(g.src(a) == g.tgt(a));
  }

  TEST_CASE("2-Kan to groupoid: XM3 gives the delooping of Z/2") {
    const FiniteGroupoid g = two_kan_to_groupoid(two_group_nerve(to_strict_two_group(catalog::xm3())));
    CHECK(validate_groupoid(g).ok());
    CHECK(g.object_count() == 1);
    CHECK(g.arrow_count() == 2);
    CHECK(find_isomorphism(g, delooping(cyclic_group(2))));
  }

  TEST_CASE("2-Kan to groupoid recovers the translation groupoid") {
    for (const auto& name : support::small_xmods()) {
      CAPTURE(name);
      const StrictTwoGroup s = to_strict_two_group(support::xmod(name));
      const FiniteGroupoid g = two_kan_to_groupoid(two_group_nerve(s));
      CHECK(validate_groupoid(g).ok());
      const auto f = find_isomorphism(g, s.base);
      REQUIRE(f);
      CHECK(support::is_groupoid_iso(g, s.base, f->obj_map, f->arr_map));
    }
  }

  TEST_CASE("2-Kan to groupoid refuses non-pointed input") {
    CHECK_THROWS_AS(two_kan_to_groupoid(nerve_of_groupoid(discrete_groupoid({"p", "q"}), 3)),
                    PreconditionError);
  }
}
