#include "doctest.h"
#include "support.hpp"
#include "twogroups/catalog.hpp"
#include "twogroups/crossed_module.hpp"
#include "twogroups/two_group.hpp"

using namespace twogroups;

namespace {

std::vector<std::string> strict_names() {
  std::vector<std::string> out;
  for (const auto& x : support::small_xmods()) out.push_back(x + "_strict");
  return out;
}

// e_x ∘ (h⊗x) == e_y ∘ (ȳ⊗g), written against the raw tables.
bool square_commutes(const CoherentTwoGroup& t, std::size_t g, std::size_t h) {
  const FiniteGroupoid& b = t.base;
  const std::size_t x = b.src(g), y = b.tgt(g);
  const std::size_t n = b.arrow_count();
  const std::size_t left = t.tensor_arr[h * n + b.ident(x)];
  const std::size_t right = t.tensor_arr[b.ident(t.bar[y]) * n + g];
  const std::size_t l = b.comp(t.adj_e[x], left), r = b.comp(t.adj_e[y], right);
  return l != kNone && l == r;
}

std::vector<std::size_t> brute_force_transposes(const CoherentTwoGroup& t, std::size_t g) {
  std::vector<std::size_t> out;
  const FiniteGroupoid& b = t.base;
  for (std::size_t h = 0; h < b.arrow_count(); ++h)
    if (b.src(h) == t.bar[b.tgt(g)] && b.tgt(h) == t.bar[b.src(g)] && square_commutes(t, g, h))
      out.push_back(h);
  return out;
}

}  // namespace

TEST_SUITE("monoidal_two_group") {
  TEST_CASE("coherence passes on every catalog strict 2-group and on T_omega") {
    for (const auto& name : strict_names()) {
      CAPTURE(name);
      CHECK(validate_coherent(support::two_group(name)).ok());
    }
    const ValidationReport r = validate_coherent(support::two_group("t_omega"));
    CHECK(r.ok());
    CHECK(r.check("pentagon")->cases == 16);
    CHECK(validate_coherent(catalog::semistrict_lunit(2)).ok());
    CHECK(validate_coherent(catalog::semistrict_lunit(3)).ok());
  }

  TEST_CASE("tampered T_omega fails the pentagon at (1,1,1,1)") {
    const ValidationReport r = validate_coherent(support::two_group("t_omega_tampered"));
    CHECK(r.structurally_sound());
    CHECK(r.has_witness("pentagon", {"1", "1", "1", "1"}));
  }

  TEST_CASE("flipping only omega(1,1,1) gives a cocycle, so only the zig-zags fail") {
    const ValidationReport r = validate_coherent(catalog::t_omega_flip111());
    CHECK_FALSE(r.has_violation("pentagon"));
    CHECK_FALSE(r.has_violation("triangle"));
    CHECK((r.has_violation("zig-zag 1") || r.has_violation("zig-zag 2")));
  }

  TEST_CASE("ill-typed associator is a structural error") {
    CoherentTwoGroup t = catalog::t_omega();
    t.assoc[0] = 1 * 2 + 1;  // lands on object 1, not on 0
    const ValidationReport r = validate_coherent(t);
    CHECK_FALSE(r.structurally_sound());
  }

  TEST_CASE("bar of the unit must be the unit") {
    CoherentTwoGroup t = catalog::t_omega();
    t.bar[t.unit] = 1;
    CHECK_FALSE(validate_coherent(t).structurally_sound());
  }

  TEST_CASE("transpose equals the unique brute-force solution of the characterization square") {
    std::vector<CoherentTwoGroup> inputs;
    for (const auto& name : strict_names()) inputs.push_back(support::two_group(name));
    inputs.push_back(catalog::t_omega());
    for (const CoherentTwoGroup& t : inputs) {
      for (std::size_t g = 0; g < t.base.arrow_count(); ++g) {
        const auto sols = brute_force_transposes(t, g);
        REQUIRE(sols.size() == 1);
        CHECK(transpose(t, g) == sols.front());
      }
      for (std::size_t x = 0; x < t.base.object_count(); ++x)
        CHECK(transpose(t, t.base.ident(x)) == t.base.ident(t.bar[x]));
    }
  }

  TEST_CASE("transpose is an anti-homomorphism on composable pairs") {
    for (const auto& name : strict_names()) {
      const CoherentTwoGroup t = support::two_group(name);
      const FiniteGroupoid& b = t.base;
      for (std::size_t h = 0; h < b.arrow_count(); ++h)
        for (std::size_t g = 0; g < b.arrow_count(); ++g) {
          if (b.src(h) != b.tgt(g)) continue;
          CHECK(transpose(t, b.comp(h, g)) == b.comp(transpose(t, g), transpose(t, h)));
        }
    }
  }

  TEST_CASE("transpose is involutive when bar is") {
    for (const auto& name : strict_names()) {
      const CoherentTwoGroup t = support::two_group(name);
      for (std::size_t x = 0; x < t.base.object_count(); ++x) REQUIRE(t.bar[t.bar[x]] == x);
      for (std::size_t g = 0; g < t.base.arrow_count(); ++g) CHECK(transpose(t, transpose(t, g)) == g);
    }
  }

  TEST_CASE("inversion functor: identities, uniqueness, and i∘i naturally isomorphic to id on XM1") {
    const CoherentTwoGroup t = support::two_group("xm1_strict");
    const GroupoidHom i = inversion_functor(t);
    for (std::size_t x = 0; x < t.base.object_count(); ++x)
      CHECK(i.arr_map[t.base.ident(x)] == t.base.ident(t.bar[x]));
    for (std::size_t g = 0; g < t.base.arrow_count(); ++g)
      CHECK(brute_force_transposes(t, t.base.inv(g)) == std::vector<std::size_t>{i.arr_map[g]});
    const GroupoidHom ii = compose_homs(i, i);
    const auto eta = find_natural_isomorphism(identity_hom(t.base), ii, t.base, t.base);
    REQUIRE(eta);
    CHECK(is_natural(*eta, identity_hom(t.base), ii, t.base, t.base));
  }

  TEST_CASE("inversion is a tensor inverse on arrows of strict inputs") {
    for (const auto& name : strict_names()) {
      const CoherentTwoGroup t = support::two_group(name);
      const GroupoidHom i = inversion_functor(t);
      const std::size_t id_unit = t.base.ident(t.unit);
      for (std::size_t g = 0; g < t.base.arrow_count(); ++g) {
        CHECK(t.tarr(g, i.arr_map[g]) == id_unit);
      }
    }
  }

  TEST_CASE("Eckmann-Hilton on every catalog coherent 2-group") {
    std::vector<CoherentTwoGroup> inputs{catalog::t_omega(), catalog::semistrict_lunit(2),
                                         catalog::semistrict_lunit(3)};
    for (const auto& name : strict_names()) inputs.push_back(support::two_group(name));
    for (const CoherentTwoGroup& t : inputs) {
      const UnitIsotropy u = unit_isotropy(t);
      CHECK(u.report.ok());
      CHECK(u.commutators_checked == u.arrows.size() * u.arrows.size());
      CHECK(u.group.is_abelian());
    }
  }

  TEST_CASE("unit isotropy: XM3 gives Z/2, XM1 and XM2 are trivial") {
    const UnitIsotropy u3 = unit_isotropy(support::two_group("xm3_strict"));
    CHECK(u3.group.order() == 2);
    CHECK(find_group_isomorphism(u3.group, cyclic_group(2)));
    CHECK(unit_isotropy(support::two_group("xm1_strict")).group.order() == 1);
    CHECK(unit_isotropy(support::two_group("xm2_strict")).group.order() == 1);
  }

  TEST_CASE("adjunction search recovers valid zig-zag data") {
    CoherentTwoGroup t = catalog::t_omega();
    const auto found = search_adjunction_data(t);
    REQUIRE(found);
    t.bar = found->bar;
    t.adj_d = found->adj_d;
    t.adj_e = found->adj_e;
    CHECK(validate_coherent(t).ok());
  }

  TEST_CASE("validation is idempotent") {
    const CoherentTwoGroup t = support::two_group("t_omega_tampered");
    const ValidationReport a = validate_coherent(t), b = validate_coherent(t);
    CHECK(a.violations().size() == b.violations().size());
    CHECK(a.checks().size() == b.checks().size());
  }
}
