#include "doctest.h"
#include "support.hpp"
#include "twogroups/catalog.hpp"
#include "twogroups/crossed_module.hpp"
#include "twogroups/groupoid.hpp"

using namespace twogroups;

TEST_SUITE("crossed_module") {
  TEST_CASE("catalog crossed modules are valid") {
    for (const auto& name : support::small_xmods()) {
      CAPTURE(name);
      CHECK(validate_crossed_module(support::xmod(name)).ok());
    }
    CHECK(validate_crossed_module(support::xmod("xm_s4")).ok());
  }

  TEST_CASE("broken boundary: witness (1,1)") {
    const ValidationReport r = validate_crossed_module(support::xmod("broken_boundary"));
    CHECK(r.structurally_sound());
    CHECK(r.has_witness("boundary homomorphism", {"1", "1"}));
  }

  TEST_CASE("S3 over the trivial group fails Pfeiffer at ((12),(13))") {
    const ValidationReport r = validate_crossed_module(support::xmod("broken_pfeiffer"));
    CHECK(r.has_witness("Pfeiffer", {"(12)", "(13)"}));
    CHECK_FALSE(r.has_violation("boundary homomorphism"));
    CHECK_FALSE(r.has_violation("equivariance"));
  }

  TEST_CASE("short tables are structural errors") {
    CrossedModule x = catalog::xm1();
    x.action.pop_back();
    const ValidationReport r = validate_crossed_module(x);
    CHECK_FALSE(r.structurally_sound());
    CHECK(r.violations().empty());
  }

  TEST_CASE("translation groupoids: object and arrow counts, endpoints") {
    struct Expect {
      std::string name;
      std::size_t objects, arrows, components;
    };
    for (const Expect& e : {Expect{"xm1", 4, 8, 2}, Expect{"xm2", 6, 36, 1}, Expect{"xm3", 1, 2, 1},
                            Expect{"xm6", 6, 18, 2}}) {
      CAPTURE(e.name);
      const CrossedModule x = support::xmod(e.name);
      const StrictTwoGroup s = to_strict_two_group(x);
      CHECK(validate_strict(s).ok());
      CHECK(s.base.object_count() == e.objects);
      CHECK(s.base.arrow_count() == e.arrows);
      CHECK(connected_components(s.base).size() == e.components);
      const std::size_t nh = x.g0.order();
      for (std::size_t g = 0; g < x.gamma.order(); ++g)
        for (std::size_t p = 0; p < nh; ++p) {
          CHECK(s.base.src(g * nh + p) == p);
          CHECK(s.base.tgt(g * nh + p) == x.g0.mul(x.partial[g], p));
        }
      CHECK(validate_coherent(as_coherent(s)).ok());
    }
  }

  TEST_CASE("XM3 gives the delooping of Z/2") {
    const StrictTwoGroup s = to_strict_two_group(catalog::xm3());
    const auto f = find_isomorphism(s.base, delooping(cyclic_group(2)));
    CHECK(f.has_value());
  }

  TEST_CASE("kernel and orbits") {
    const KernelCenter k3 = kernel_center_check(catalog::xm3());
    CHECK(k3.kernel.size() == 2);
    CHECK(k3.report.ok());
    CHECK(k3.commutators_checked == 4);
    const KernelCenter k2 = kernel_center_check(catalog::xm2());
    CHECK(k2.kernel.size() == 1);
    CHECK(k2.orbits.size() == 1);
    const KernelCenter k1 = kernel_center_check(catalog::xm1());
    CHECK(k1.kernel.size() == 1);
    REQUIRE(k1.orbits.size() == 2);
    CHECK(k1.orbits[0] == std::vector<std::size_t>{0, 2});
    CHECK(k1.orbits[1] == std::vector<std::size_t>{1, 3});
  }

  TEST_CASE("property: the kernel of the boundary is central in every valid module") {
    for (const auto& name : support::small_xmods()) {
      const CrossedModule x = support::xmod(name);
      const KernelCenter k = kernel_center_check(x);
      CHECK(k.report.ok());
      for (std::size_t a : k.kernel)
        for (std::size_t g = 0; g < x.gamma.order(); ++g)
          CHECK(x.gamma.mul(x.gamma.mul(a, g), x.gamma.inverse(a)) == g);
    }
  }

  TEST_CASE("Pfeiffer holds exactly when the translation interchange law holds") {
    std::vector<CrossedModule> inputs;
    for (const auto& name : support::small_xmods()) inputs.push_back(support::xmod(name));
    inputs.push_back(catalog::broken_pfeiffer());
    for (const CrossedModule& x : inputs) {
      const bool pf = !validate_crossed_module(x).has_violation("Pfeiffer");
      CHECK(translation_interchange(x).ok() == pf);
    }
    CHECK_FALSE(translation_interchange(catalog::broken_pfeiffer()).ok());
  }

  TEST_CASE("isomorphism search between crossed modules") {
    const CrossedModule x = catalog::xm6();
    const auto self = find_crossed_module_isomorphism(x, x);
    REQUIRE(self);
    CHECK(is_crossed_module_iso(x, x, *self));
    CHECK_FALSE(find_crossed_module_isomorphism(catalog::xm4(), catalog::xm5()));
    CHECK_FALSE(find_crossed_module_isomorphism(catalog::xm1(), catalog::xm3()));
  }
}
