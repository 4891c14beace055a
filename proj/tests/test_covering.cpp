#include "doctest.h"
#include "support.hpp"
#include "twogroups/catalog.hpp"
#include "twogroups/covering.hpp"

using namespace twogroups;

namespace {

// Two vertices and two edges forming a circle, Z/2 rotating it by half a
// turn. No 2-cells, so the total space is not simply connected.
EquivariantComplex double_circle() {
  EquivariantComplex c;
  c.vertices = {"v0", "v1"};
  c.edges = {{"e0", 0, 1, "a"}, {"e1", 1, 0, "a"}};
  c.gamma = cyclic_group(2);
  c.vertex_action = {0, 1, 1, 0};
  c.edge_action = {0, 1, 1, 0};
  return c;
}

std::size_t element(const EquivariantComplex& c, const std::string& name) { return *c.gamma.find(name); }

}  // namespace

TEST_SUITE("covering_pi1") {
  TEST_CASE("Cayley complex sizes") {
    struct Expect {
      std::string name;
      std::size_t v, e, c;
    };
    for (const Expect& x : {Expect{"cayley_z2", 2, 2, 2}, Expect{"cayley_z3", 3, 3, 3},
                            Expect{"cayley_z2xz2", 4, 8, 12}, Expect{"cayley_s3", 6, 12, 18}}) {
      CAPTURE(x.name);
      const EquivariantComplex c = support::complex(x.name);
      CHECK(validate_complex(c).ok());
      CHECK(c.vertices.size() == x.v);
      CHECK(c.edges.size() == x.e);
      CHECK(c.cells.size() == x.c);
      const QuotientComplex q = quotient(c);
      CHECK(q.vertex_names.size() == 1);
      CHECK(q.edges.size() == c.presentation->generators.size());
      CHECK(q.cells.size() == c.presentation->relators.size());
    }
    // Euler characteristic of the Z/2 sphere.
    const EquivariantComplex z2 = catalog::cayley_z2();
    CHECK(z2.vertices.size() - z2.edges.size() + z2.cells.size() == 2);
  }

  TEST_CASE("Cayley complex preconditions") {
    Presentation p{{"a"}, {parse_word("a^3", {"a"})}};
    CHECK_THROWS_AS(cayley_complex(p, cyclic_group(2), {1}), PreconditionError);
    p.relators = {parse_word("a^4", {"a"})};
    CHECK_THROWS_AS(cayley_complex(p, cyclic_group(2), {1}), PreconditionError);
  }

  TEST_CASE("non-free actions are rejected") {
    EquivariantComplex c = double_circle();
    c.vertex_action = {0, 1, 0, 1};
    c.edge_action = {0, 1, 0, 1};
    CHECK(validate_complex(c).has_violation("free action"));
  }

  TEST_CASE("path lifting on the Z/2 sphere") {
    const EquivariantComplex c = catalog::cayley_z2();
    const QuotientComplex q = quotient(c);
    const std::size_t e = element(c, "0"), a = element(c, "1");
    CHECK(lift_path(c, q, parse_loop(q, 0, "a"), e).vertices == std::vector<std::size_t>{e, a});
    CHECK(lift_path(c, q, parse_loop(q, 0, "a a"), e).vertices == std::vector<std::size_t>{e, a, e});
    const LiftedPath empty = lift_path(c, q, parse_loop(q, 0, ""), a);
    CHECK(empty.vertices == std::vector<std::size_t>{a});
    CHECK(empty.edges.empty());
  }

  TEST_CASE("boundary map values") {
    {
      const EquivariantComplex c = catalog::cayley_z2();
      const QuotientComplex q = quotient(c);
      CHECK(boundary_map(c, q, parse_loop(q, 0, "a")) == element(c, "1"));
      CHECK(boundary_map(c, q, parse_loop(q, 0, "a a")) == c.gamma.unit());
    }
    {
      const EquivariantComplex c = catalog::cayley_z3();
      const QuotientComplex q = quotient(c);
      const std::size_t g1 = boundary_map(c, q, parse_loop(q, 0, "a"));
      const std::size_t g2 = boundary_map(c, q, parse_loop(q, 0, "a a"));
      CHECK(g1 != g2);
      CHECK(g2 == c.gamma.mul(g1, g1));
      CHECK(boundary_map(c, q, parse_loop(q, 0, "a^-1")) == c.gamma.inverse(g1));
      CHECK(boundary_map(c, q, parse_loop(q, 0, "a^3")) == c.gamma.unit());
    }
  }

  TEST_CASE("lift start does not change the boundary map; deck elements conjugate") {
    const EquivariantComplex c = catalog::cayley_s3();
    const QuotientComplex q = quotient(c);
    for (const char* text : {"s", "t", "s t", "s t t s t", "t^-1 s"}) {
      const EdgeLoop loop = parse_loop(q, 0, text);
      const std::size_t d = boundary_map(c, q, loop);
      const std::size_t v = q.vertex_rep[0];
      for (std::size_t g = 0; g < c.gamma.order(); ++g) {
        const std::size_t start = c.act_vertex(g, v);
        CHECK(boundary_map(c, q, loop, start) == d);
        CHECK(deck_element(c, q, loop, start) == c.gamma.mul(c.gamma.mul(g, d), c.gamma.inverse(g)));
        // The deck element moves the start to the end of the lift.
        const LiftedPath p = lift_path(c, q, loop, start);
        CHECK(c.act_vertex(deck_element(c, q, loop, start), start) == p.vertices.back());
      }
    }
  }

  TEST_CASE("edge-path presentations of the quotients") {
    auto pres = [](const std::string& name) { return pi1_presentation(quotient(support::complex(name))); };
    const Pi1Presentation z2 = pres("cayley_z2");
    CHECK(z2.presentation == Presentation{{"a"}, {parse_word("a^2", {"a"})}});
    const Pi1Presentation z3 = pres("cayley_z3");
    CHECK(z3.presentation == Presentation{{"a"}, {parse_word("a^3", {"a"})}});
    const std::vector<std::string> ab{"a", "b"};
    const Pi1Presentation v4 = pres("cayley_z2xz2");
    CHECK(v4.presentation ==
          Presentation{ab, {parse_word("a^2", ab), parse_word("b^2", ab), parse_word("a b a b", ab)}});
    for (bool t : v4.tree) CHECK_FALSE(t);
  }

  TEST_CASE("boundary map is an isomorphism on every catalog Cayley complex") {
    for (const std::string name : {"cayley_z2", "cayley_z3", "cayley_z2xz2", "cayley_s3"}) {
      CAPTURE(name);
      const EquivariantComplex c = support::complex(name);
      const BoundaryIsoReport r = verify_boundary_iso(c);
      CHECK(r.report.ok());
      CHECK(r.injectivity == InjectivityStatus::kCertified);
      CHECK(r.iso_certified());
      CHECK(r.simple_connectivity == "cayley");
      CHECK(r.gamma_order == c.gamma.order());
      CHECK(r.schreier_certified == r.schreier_generators);
      CHECK(r.surjectivity_words.size() == c.gamma.order());
    }
  }

  TEST_CASE("surjectivity words evaluate to every element") {
    const EquivariantComplex c = catalog::cayley_z2xz2();
    const BoundaryIsoReport r = verify_boundary_iso(c);
    std::vector<bool> hit(c.gamma.order());
    for (const Word& w : r.surjectivity_words) hit[evaluate(w, c.gamma, r.generator_images)] = true;
    for (bool h : hit) CHECK(h);
  }

  TEST_CASE("boundary invariance is exhaustive on Z/2 and Z/3") {
    for (const std::string name : {"cayley_z2", "cayley_z3"}) {
      CAPTURE(name);
      const InvarianceReport r = check_boundary_invariance(support::complex(name), 4);
      CHECK(r.report.ok());
      CHECK(r.loops > 0);
      for (const char* check : {"lift start", "deck conjugation", "reverse", "free reduction", "cell move"})
        CHECK(r.report.check(check) != nullptr);
    }
  }

  TEST_CASE("a total space that is not simply connected is inconclusive, not a failure") {
    const EquivariantComplex c = double_circle();
    CHECK(validate_complex(c).ok());
    const BoundaryIsoReport r = verify_boundary_iso(c, 200);
    CHECK(r.report.ok());
    CHECK(r.injectivity == InjectivityStatus::kInconclusive);
    CHECK_FALSE(r.iso_certified());
    CHECK(r.simple_connectivity == "unknown");
    CHECK(std::string(to_string(r.injectivity)) == "INCONCLUSIVE");
  }

  TEST_CASE("simple connectivity source is reported") {
    EquivariantComplex c = catalog::cayley_z3();
    c.presentation.reset();
    c.generator_images.clear();
    c.simply_connected_asserted = false;
    CHECK(verify_boundary_iso(c).simple_connectivity == "unknown");
    c.simply_connected_asserted = true;
    const BoundaryIsoReport r = verify_boundary_iso(c);
    CHECK(r.simple_connectivity == "asserted");
    CHECK(r.iso_certified());
  }

  TEST_CASE("a closed path around a cell is certified null-homotopic") {
    const EquivariantComplex c = catalog::cayley_s3();
    for (const EdgeWord& cell : c.cells) CHECK(certify_null_homotopic(c, cell, 1000).certified);
    CHECK_FALSE(certify_null_homotopic(double_circle(), {1, 2}, 200).certified);
  }
}
