#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "support.hpp"
#include "twogroups/catalog.hpp"
#include "twogroups/crossed_module.hpp"
#include "twogroups/group.hpp"
#include "twogroups/groupoid.hpp"

using namespace twogroups;

TEST_SUITE("groupoid_core") {
  TEST_CASE("group constructors satisfy the group axioms") {
    for (const Group& g : {cyclic_group(1), cyclic_group(5), symmetric_group(3), symmetric_group(4),
                           direct_product(cyclic_group(2), cyclic_group(3))})
      CHECK(validate_group_table(g.names(), g.table()).ok());
    CHECK(symmetric_group(4).order() == 24);
    CHECK(even_permutations(symmetric_group(4)).size() == 12);
    CHECK_FALSE(symmetric_group(3).is_abelian());
    CHECK(cyclic_group(6).element_order(2) == 3);
  }

  TEST_CASE("a non-associative table is rejected with a witness") {
    // Subtraction mod 3 has a unit on one side only and is not associative.
    std::vector<std::size_t> table;
    for (std::size_t a = 0; a < 3; ++a)
      for (std::size_t b = 0; b < 3; ++b) table.push_back((a + 3 - b) % 3);
    const ValidationReport r = validate_group_table({"0", "1", "2"}, table);
    CHECK(r.has_violation("associativity"));
    CHECK_THROWS_AS(Group::from_table({"0", "1", "2"}, table), StructuralError);
  }

  TEST_CASE("one-object groupoid of Z/3 is valid") {
    const FiniteGroupoid g = delooping(cyclic_group(3));
    CHECK(validate_groupoid(g).ok());
    CHECK(g.object_count() == 1);
    CHECK(g.arrow_count() == 3);
  }

  TEST_CASE("translation groupoid of XM1 has 4 objects and 8 arrows and is valid") {
    const StrictTwoGroup s = to_strict_two_group(catalog::xm1());
    const ValidationReport r = validate_groupoid(s.base);
    CHECK(r.ok());
    CHECK(s.base.object_count() == 4);
    CHECK(s.base.arrow_count() == 8);
    // Every composable triple was visited: 8 arrows, 2 composable successors each.
    CHECK(r.check("associativity")->cases == 8 * 2 * 2);
  }

  TEST_CASE("redefining inv(g) = g on a non-involution violates the inverse axiom at g") {
    const FiniteGroupoid z3 = delooping(cyclic_group(3));
    std::vector<std::size_t> inv = z3.inv_table();
    inv[1] = 1;
    const FiniteGroupoid bad(z3.objects(), z3.arrows(), z3.comp_table(), z3.ident_table(), inv);
    const ValidationReport r = validate_groupoid(bad);
    CHECK(r.structurally_sound());
    CHECK(r.has_witness("inverse axiom", {z3.arrow_name(1)}));
  }

  TEST_CASE("missing identities and inverses are structural errors") {
    const FiniteGroupoid z2 = delooping(cyclic_group(2));
    std::vector<std::size_t> ident{kNone};
    const FiniteGroupoid bad(z2.objects(), z2.arrows(), z2.comp_table(), ident, z2.inv_table());
    const ValidationReport r = validate_groupoid(bad);
    CHECK_FALSE(r.structurally_sound());
    CHECK(r.structural().front().axiom == "missing identity");
    CHECK_THROWS_AS(FiniteGroupoid({"*"}, z2.arrows(), {0}, {0}, {0, 1}), StructuralError);
  }

  TEST_CASE("a wrong composite is caught by the endpoint or associativity checks") {
    // XM4 has a non-injective boundary, so hom sets have two arrows.
    const StrictTwoGroup s = to_strict_two_group(catalog::xm4());
    std::vector<std::size_t> comp = s.base.comp_table();
    const std::size_t n = s.base.arrow_count();
    // Replace one composite by another arrow with the same endpoints.
    std::size_t h = 0, g = 0;
    for (h = 0; h < n; ++h) {
      for (g = 0; g < n; ++g)
        if (s.base.src(h) == s.base.tgt(g) && s.base.hom(s.base.src(g), s.base.tgt(h)).size() > 1) break;
      if (g < n) break;
    }
    REQUIRE(h < n);
    const auto parallel = s.base.hom(s.base.src(g), s.base.tgt(h));
    comp[h * n + g] = parallel[0] == comp[h * n + g] ? parallel[1] : parallel[0];
    const FiniteGroupoid bad(s.base.objects(), s.base.arrows(), comp, s.base.ident_table(),
                             s.base.inv_table());
    const ValidationReport r = validate_groupoid(bad);
    CHECK_FALSE(r.ok());
    CHECK(r.structurally_sound());
  }

  TEST_CASE("isomorphism search: identity, relabeled copy, and a negative case") {
    const FiniteGroupoid g = to_strict_two_group(catalog::xm1()).base;
    const auto self = find_isomorphism(g, g);
    REQUIRE(self);
    CHECK(support::is_groupoid_iso(g, g, self->obj_map, self->arr_map));

    std::vector<std::size_t> po(g.object_count()), pa(g.arrow_count());
    std::iota(po.rbegin(), po.rend(), 0);
    for (std::size_t a = 0; a < pa.size(); ++a) pa[a] = (a * 3 + 5) % pa.size();
    const FiniteGroupoid copy = relabel(g, po, pa, "r");
    CHECK(validate_groupoid(copy).ok());
    const auto f = find_isomorphism(g, copy);
    REQUIRE(f);
    CHECK(support::is_groupoid_iso(g, copy, f->obj_map, f->arr_map));
    CHECK(validate_hom(*f, g, copy).ok());

    const FiniteGroupoid z4 = delooping(cyclic_group(4));
    const FiniteGroupoid v4 = delooping(direct_product(cyclic_group(2), cyclic_group(2)));
    CHECK_FALSE(find_isomorphism(z4, v4));
  }

  TEST_CASE("connected components of the XM1 translation groupoid are {0,2} and {1,3}") {
    const FiniteGroupoid g = to_strict_two_group(catalog::xm1()).base;
    const auto comps = connected_components(g);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0].objects == std::vector<std::size_t>{0, 2});
    CHECK(comps[1].objects == std::vector<std::size_t>{1, 3});
    for (const auto& c : comps)
      for (std::size_t i = 0; i < c.objects.size(); ++i) {
        CHECK(g.src(c.tree[i]) == c.root);
        CHECK(g.tgt(c.tree[i]) == c.objects[i]);
      }
  }

  TEST_CASE("vertex groups use path order") {
    const Group z5 = cyclic_group(5);
    const FiniteGroupoid d = delooping(z5);
    const Group v = vertex_group(d, 0);
    for (std::size_t a = 0; a < 5; ++a)
      for (std::size_t b = 0; b < 5; ++b) CHECK(v.mul(a, b) == d.comp(b, a));
    CHECK(find_group_isomorphism(v, z5));
  }

  TEST_CASE("natural isomorphisms between conjugate functors") {
    const Group s3 = symmetric_group(3);
    const FiniteGroupoid d = delooping(s3);
    // Conjugation by (12) is naturally isomorphic to the identity.
    const std::size_t c = *s3.find("(12)");
    GroupoidHom conj{{0}, {}};
    for (std::size_t a = 0; a < s3.order(); ++a) conj.arr_map.push_back(s3.mul(s3.mul(c, a), s3.inverse(c)));
    REQUIRE(validate_hom(conj, d, d).ok());
    const auto eta = find_natural_isomorphism(identity_hom(d), conj, d, d);
    REQUIRE(eta);
    CHECK(is_natural(*eta, identity_hom(d), conj, d, d));
    // Naturality by hand: conj(a) ∘ η = η ∘ a.
    for (std::size_t a = 0; a < s3.order(); ++a)
      CHECK(d.comp(conj.arr_map[a], eta->component[0]) == d.comp(eta->component[0], a));
  }

  TEST_CASE("codiscrete and discrete groupoids") {
    const FiniteGroupoid c = codiscrete_groupoid({"p", "q", "r"});
    CHECK(validate_groupoid(c).ok());
    CHECK(c.arrow_count() == 9);
    CHECK(connected_components(c).size() == 1);
    const FiniteGroupoid d = discrete_groupoid({"p", "q", "r"});
    CHECK(validate_groupoid(d).ok());
    CHECK(connected_components(d).size() == 3);
    CHECK_FALSE(find_isomorphism(c, d));
  }

  TEST_CASE("property: random relabelings of catalog groupoids are found isomorphic") {
    std::mt19937 rng(7);
    for (const std::string& name : support::small_xmods()) {
      const FiniteGroupoid g = to_strict_two_group(support::xmod(name)).base;
      for (int trial = 0; trial < 3; ++trial) {
        std::vector<std::size_t> po(g.object_count()), pa(g.arrow_count());
        std::iota(po.begin(), po.end(), 0);
        std::iota(pa.begin(), pa.end(), 0);
        std::shuffle(po.begin(), po.end(), rng);
        std::shuffle(pa.begin(), pa.end(), rng);
        const FiniteGroupoid copy = relabel(g, po, pa, "x");
        const auto f = find_isomorphism(g, copy);
        REQUIRE(f);
        CHECK(support::is_groupoid_iso(g, copy, f->obj_map, f->arr_map));
      }
    }
  }
}
