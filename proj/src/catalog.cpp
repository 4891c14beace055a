#include "twogroups/catalog.hpp"

#include <array>

#include "twogroups/presentation.hpp"
#include "twogroups/strictifier.hpp"

namespace twogroups::catalog {

namespace {

std::size_t element(const Group& g, const std::string& name) {
  const auto i = g.find(name);
  if (!i) throw InternalInconsistency("catalog: no element " + name);
  return *i;
}

CrossedModule make(Group gamma, Group g0, std::vector<std::size_t> partial, bool conjugation) {
  CrossedModule x;
  x.action = conjugation ? conjugation_action(gamma, g0, partial) : trivial_action(gamma, g0);
  x.gamma = std::move(gamma);
  x.g0 = std::move(g0);
  x.partial = std::move(partial);
  return x;
}

CrossedModule trivial_boundary(Group gamma, Group g0) {
  std::vector<std::size_t> partial(gamma.order(), g0.unit());
  return make(std::move(gamma), std::move(g0), std::move(partial), false);
}

Group z2xz2() { return direct_product(cyclic_group(2), cyclic_group(2)); }

EquivariantComplex cayley(const Group& g, const std::vector<std::string>& gens,
                          const std::vector<std::string>& relators, const std::vector<std::string>& images) {
  Presentation p;
  p.generators = gens;
  for (const auto& r : relators) p.relators.push_back(parse_word(r, gens));
  std::vector<std::size_t> img;
  for (const auto& name : images) img.push_back(element(g, name));
  return cayley_complex(p, g, img);
}

}  // namespace

CrossedModule xm1() { return make(cyclic_group(2), cyclic_group(4), {0, 2}, false); }

CrossedModule xm2() {
  const Group s3 = symmetric_group(3);
  std::vector<std::size_t> id;
  for (std::size_t i = 0; i < s3.order(); ++i) id.push_back(i);
  return make(s3, s3, id, true);
}

CrossedModule xm3() { return trivial_boundary(cyclic_group(2), trivial_group()); }

CrossedModule xm4() {
  const Group v = z2xz2();
  std::vector<std::size_t> first;
  for (std::size_t i = 0; i < v.order(); ++i) first.push_back(i / 2);
  return make(v, cyclic_group(2), first, false);
}

CrossedModule xm5() {
  CrossedModule x = trivial_boundary(z2xz2(), cyclic_group(2));
  const std::size_t n = x.gamma.order();
  for (std::size_t g = 0; g < n; ++g) x.action[1 * n + g] = (g % 2) * 2 + g / 2;
  return x;
}

CrossedModule xm6() {
  const Group s3 = symmetric_group(3);
  const Group c3 = cyclic_group(3);
  return make(c3, s3, {s3.unit(), element(s3, "(123)"), element(s3, "(132)")}, true);
}

CrossedModule xm_s4() {
  const Group s4 = symmetric_group(4);
  const std::vector<std::size_t> even = even_permutations(s4);
  return make(subgroup(s4, even), s4, even, true);
}

CrossedModule broken_boundary() { return make(cyclic_group(2), cyclic_group(4), {0, 1}, false); }

CrossedModule broken_pfeiffer() { return trivial_boundary(symmetric_group(3), trivial_group()); }

namespace {

// ω(x,y,z) is 1 on the listed triples and 0 elsewhere.
CoherentTwoGroup omega_group(const std::vector<std::array<std::size_t, 3>>& support) {
  const StrictTwoGroup s = to_strict_two_group(trivial_boundary(cyclic_group(2), cyclic_group(2)));
  CoherentTwoGroup t = as_coherent(s);
  for (const auto& [x, y, z] : support) t.assoc[(x * 2 + y) * 2 + z] = 1 * 2 + (x + y + z) % 2;
  t.adj_d[1] = 1 * 2 + 0;
  return t;
}

}  // namespace

CoherentTwoGroup t_omega() { return omega_group({{1, 1, 1}}); }
CoherentTwoGroup t_omega_tampered() { return omega_group({{1, 1, 1}, {1, 1, 0}}); }
CoherentTwoGroup t_omega_flip111() { return omega_group({}); }

CoherentTwoGroup semistrict_lunit(std::size_t n) {
  CoherentTwoGroup t = as_coherent(to_strict_two_group(trivial_boundary(cyclic_group(n), cyclic_group(2))));
  for (std::size_t x = 0; x < 2; ++x) {
    t.lunit[x] = 1 * 2 + x;
    t.runit[x] = 1 * 2 + x;
  }
  return t;
}

CoherentTwoGroup monoid_objects() {
  CoherentTwoGroup t;
  t.base = codiscrete_groupoid({"1", "z"});
  auto arrow = [](std::size_t x, std::size_t y) { return x * 2 + y; };
  auto mul = [](std::size_t x, std::size_t y) { return x | y; };  // 1 = 0, z = 1
  t.tensor_obj = {0, 1, 1, 1};
  for (std::size_t g = 0; g < 4; ++g)
    for (std::size_t h = 0; h < 4; ++h)
      t.tensor_arr.push_back(arrow(mul(g / 2, h / 2), mul(g % 2, h % 2)));
  t.unit = 0;
  for (std::size_t x = 0; x < 2; ++x)
    for (std::size_t y = 0; y < 2; ++y)
      for (std::size_t z = 0; z < 2; ++z) t.assoc.push_back(arrow(mul(mul(x, y), z), mul(mul(x, y), z)));
  for (std::size_t x = 0; x < 2; ++x) {
    t.lunit.push_back(arrow(x, x));
    t.runit.push_back(arrow(x, x));
    t.bar.push_back(0);
    t.adj_d.push_back(arrow(0, x));
    t.adj_e.push_back(arrow(x, 0));
  }
  return t;
}

EquivariantComplex cayley_z2() { return cayley(cyclic_group(2), {"a"}, {"a^2"}, {"1"}); }
EquivariantComplex cayley_z3() { return cayley(cyclic_group(3), {"a"}, {"a^3"}, {"1"}); }
EquivariantComplex cayley_z2xz2() {
  return cayley(z2xz2(), {"a", "b"}, {"a^2", "b^2", "a b a b"}, {"(1,0)", "(0,1)"});
}
EquivariantComplex cayley_s3() {
  return cayley(symmetric_group(3), {"s", "t"}, {"s^2", "t^2", "s t s t s t"}, {"(12)", "(23)"});
}

Bibundle bibundle_identity_z3() { return identity_bibundle(delooping(cyclic_group(3))); }

Bibundle bibundle_reduction() {
  const FiniteGroupoid z4 = delooping(cyclic_group(4)), z2 = delooping(cyclic_group(2));
  return from_functor(GroupoidHom{{0}, {0, 1, 0, 1}}, z4, z2);
}

std::vector<Entry> entries() {
  using namespace io;
  std::vector<Entry> out;
  auto add = [&](std::string file, std::string kind, Json doc) {
    out.push_back({std::move(file), std::move(kind), std::move(doc)});
  };
  const std::vector<std::pair<std::string, CrossedModule>> xmods{
      {"xm1", xm1()}, {"xm2", xm2()}, {"xm3", xm3()}, {"xm4", xm4()},
      {"xm5", xm5()}, {"xm6", xm6()}, {"xm_s4", xm_s4()}};
  for (const auto& [name, x] : xmods) add(name + ".json", "xmod", write_crossed_module(x));
  for (const auto& [name, x] : xmods)
    if (name != "xm_s4") add(name + "_strict.json", "twogroup", write_two_group(as_coherent(to_strict_two_group(x))));
  add("broken_boundary.json", "xmod", write_crossed_module(broken_boundary()));
  add("broken_pfeiffer.json", "xmod", write_crossed_module(broken_pfeiffer()));
  add("t_omega.json", "twogroup", write_two_group(t_omega()));
  add("t_omega_tampered.json", "twogroup", write_two_group(t_omega_tampered()));
  add("semistrict_lunit.json", "twogroup", write_two_group(semistrict_lunit(2)));
  add("semistrict_lunit_z3.json", "twogroup", write_two_group(semistrict_lunit(3)));
  add("monoid_objects.json", "twogroup", write_two_group(monoid_objects()));
  add("cayley_z2.json", "complex", write_complex(cayley_z2()));
  add("cayley_z3.json", "complex", write_complex(cayley_z3()));
  add("cayley_z2xz2.json", "complex", write_complex(cayley_z2xz2()));
  add("cayley_s3.json", "complex", write_complex(cayley_s3()));
  add("groupoid_z2.json", "groupoid", write_groupoid(delooping(cyclic_group(2))));
  add("groupoid_codiscrete3.json", "groupoid", write_groupoid(codiscrete_groupoid({"p", "q", "r"})));
  add("partial_v1.json", "partial-group", write_partial_group(truncated_integers(1)));
  add("nerve_z2.json", "simplicial", write_simplicial(nerve_of_groupoid(delooping(cyclic_group(2)), 3)));
  add("bibundle_identity_z3.json", "bibundle", write_bibundle(bibundle_identity_z3()));
  add("bibundle_reduction.json", "bibundle", write_bibundle(bibundle_reduction()));
  return out;
}

}  // namespace twogroups::catalog
