// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <sstream>
#include <string>
#include <tuple>

#include "support.hpp"
#include "twogroups/bibundle.hpp"
#include "twogroups/catalog.hpp"
#include "twogroups/cli.hpp"
#include "twogroups/covering.hpp"
#include "twogroups/crossed_module.hpp"
#include "twogroups/simplicial.hpp"
#include "twogroups/strictifier.hpp"

using namespace twogroups;

namespace {

// Per-item wall clock limit for the strictification round trip, seconds.
constexpr double kRoundTripSeconds = 5.0;

struct Check {
  bool ok = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) detail << "first failure: " << what << "; ";
    ok = ok && cond;
  }
};

int failures = 0;

void criterion(int n, const std::string& title, const std::function<void(Check&)>& body) {
  Check c;
  try {
    body(c);
  } catch (const std::exception& e) {
    c.ok = false;
    c.detail << "exception: " << e.what();
  }
  if (!c.ok) ++failures;
  std::string detail = c.detail.str();
  while (!detail.empty() && (detail.back() == ' ' || detail.back() == ';')) detail.pop_back();
  std::printf("%s criterion %d: %s%s%s\n", c.ok ? "PASS" : "FAIL", n, title.c_str(),
              detail.empty() ? "" : " | ", detail.c_str());
}

std::vector<std::string> strict_catalog() {
  std::vector<std::string> out;
  for (const auto& x : support::small_xmods()) out.push_back(x + "_strict");
  return out;
}

bool square_commutes(const CoherentTwoGroup& t, std::size_t g, std::size_t h) {
  const FiniteGroupoid& b = t.base;
  const std::size_t n = b.arrow_count();
  const std::size_t l = b.comp(t.adj_e[b.src(g)], t.tensor_arr[h * n + b.ident(b.src(g))]);
  const std::size_t r = b.comp(t.adj_e[b.tgt(g)], t.tensor_arr[b.ident(t.bar[b.tgt(g)]) * n + g]);
  return l != kNone && l == r;
}

bool is_bibundle_iso(const Bibundle& a, const Bibundle& b, const std::vector<std::size_t>& f) {
  if (a.size() != b.size() || f.size() != a.size()) return false;
  std::vector<bool> seen(b.size());
  for (std::size_t e : f) {
    if (e >= b.size() || seen[e]) return false;
    seen[e] = true;
  }
  for (std::size_t e = 0; e < a.size(); ++e) {
    if (a.left_moment[e] != b.left_moment[f[e]] || a.right_moment[e] != b.right_moment[f[e]]) return false;
    for (std::size_t k = 0; k < a.left.arrow_count(); ++k) {
      const std::size_t x = a.act_left(k, e), y = b.act_left(k, f[e]);
      if ((x == kNone) != (y == kNone) || (x != kNone && f[x] != y)) return false;
    }
    for (std::size_t k = 0; k < a.right.arrow_count(); ++k) {
      const std::size_t x = a.act_right(e, k), y = b.act_right(f[e], k);
      if ((x == kNone) != (y == kNone) || (x != kNone && f[x] != y)) return false;
    }
  }
  return true;
}

}  // namespace

int main() {
  criterion(1, "coherence suite", [](Check& c) {
    std::size_t passed = 0;
    for (const auto& name : strict_catalog()) {
      c.require(validate_coherent(support::two_group(name)).ok(), name);
      ++passed;
    }
    c.require(validate_coherent(support::two_group("t_omega")).ok(), "t_omega");
    const ValidationReport bad = validate_coherent(support::two_group("t_omega_tampered"));
    c.require(bad.has_witness("pentagon", {"1", "1", "1", "1"}), "tampered pentagon witness (1,1,1,1)");
    c.detail << passed + 1 << " coherent inputs pass, tampered pentagon witness (1,1,1,1)";
  });

  criterion(2, "Eckmann-Hilton", [](Check& c) {
    std::vector<std::string> names = strict_catalog();
    names.insert(names.end(), {"t_omega", "semistrict_lunit", "semistrict_lunit_z3"});
    std::size_t commutators = 0;
    for (const auto& name : names) {
      const CoherentTwoGroup t = support::two_group(name);
      const UnitIsotropy u = unit_isotropy(t);
      c.require(u.report.ok(), name);
      // Independent enumeration on the raw composition table.
      for (std::size_t a : u.arrows)
        for (std::size_t b : u.arrows) c.require(t.base.comp(a, b) == t.base.comp(b, a), name);
      commutators += u.commutators_checked;
    }
    c.detail << names.size() << " 2-groups, " << commutators << " commutators";
  });

  criterion(3, "transpose suite", [](Check& c) {
    std::vector<CoherentTwoGroup> inputs;
    for (const auto& name : strict_catalog()) inputs.push_back(support::two_group(name));
    inputs.push_back(as_coherent(to_strict_two_group(support::xmod("xm_s4"))));
    std::size_t arrows = 0, pairs = 0;
    for (const CoherentTwoGroup& t : inputs) {
      const FiniteGroupoid& b = t.base;
      std::vector<std::size_t> tr(b.arrow_count());
      for (std::size_t g = 0; g < b.arrow_count(); ++g) {
        tr[g] = transpose(t, g);
        std::size_t sols = 0, sol = kNone;
        for (std::size_t h : b.hom(t.bar[b.tgt(g)], t.bar[b.src(g)]))
          if (square_commutes(t, g, h)) ++sols, sol = h;
        c.require(sols == 1 && sol == tr[g], "unique solution at " + b.arrow_name(g));
        ++arrows;
      }
      for (std::size_t h = 0; h < b.arrow_count(); ++h)
        for (std::size_t g = 0; g < b.arrow_count(); ++g) {
          if (b.src(h) != b.tgt(g)) continue;
          c.require(tr[b.comp(h, g)] == b.comp(tr[g], tr[h]), "anti-homomorphy");
          ++pairs;
        }
    }
    c.detail << arrows << " arrows, " << pairs << " composable pairs";
  });

  criterion(4, "strictification round trip", [](Check& c) {
    std::vector<std::string> names = support::small_xmods();
    names.push_back("xm_s4");
    double slowest = 0;
    for (const auto& name : names) {
      const CrossedModule x = support::xmod(name);
      c.require(x.gamma.order() <= 24 && x.g0.order() <= 24, name + " size");
      const auto start = std::chrono::steady_clock::now();
      const StrictTwoGroup s = to_strict_two_group(x);
      const Strictification st = strictify(as_coherent(s));
      const CrossedModule y = extract_crossed_module(st.strict);
      const auto f = find_crossed_module_isomorphism(x, y);
      const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      slowest = std::max(slowest, secs);
      c.require(f && is_crossed_module_iso(x, y, *f), name + " isomorphism");
      c.require(secs < kRoundTripSeconds, name + " runtime");
    }
    c.detail << names.size() << " modules, slowest " << static_cast<int>(slowest * 1000) << " ms";
  });

  criterion(5, "wreath product Psi/Phi on XM2", [](Check& c) {
    const StrictTwoGroup s = to_strict_two_group(support::xmod("xm2"));
    const ArrowGroup a = arrow_group(s);
    c.require(a.report.ok(), "arrow group report");
    c.require(a.semidirect.order() == 36, "36 elements");
    const std::size_t nh = a.xmod.g0.order();
    std::size_t products = 0;
    for (std::size_t g = 0; g < s.base.arrow_count(); ++g) {
      c.require(a.psi[a.phi[g]] == g, "Psi∘Phi");
      for (std::size_t h = 0; h < s.base.arrow_count(); ++h) {
        const std::size_t g1 = a.phi[g] / nh, x1 = a.phi[g] % nh, g2 = a.phi[h] / nh, x2 = a.phi[h] % nh;
        const std::size_t expect = a.xmod.gamma.mul(g1, a.xmod.act(x1, g2)) * nh + a.xmod.g0.mul(x1, x2);
        c.require(a.phi[s.arrows.mul(g, h)] == expect, "Phi homomorphism");
        ++products;
      }
    }
    for (std::size_t p = 0; p < a.semidirect.order(); ++p) c.require(a.phi[a.psi[p]] == p, "Phi∘Psi");
    c.detail << a.semidirect.order() << " elements, " << products << " products";
  });

  criterion(6, "crossed-module axioms", [](Check& c) {
    for (const auto& name : support::small_xmods()) {
      const CrossedModule x = support::xmod(name);
      c.require(validate_crossed_module(x).ok(), name);
      const KernelCenter k = kernel_center_check(x);
      c.require(k.report.ok(), name + " kernel central");
    }
    c.require(validate_crossed_module(support::xmod("broken_boundary")).has_witness("boundary homomorphism", {"1", "1"}),
              "broken boundary witness (1,1)");
    c.require(validate_crossed_module(support::xmod("broken_pfeiffer")).has_witness("Pfeiffer", {"(12)", "(13)"}),
              "Pfeiffer witness ((12),(13))");
    c.detail << "XM1-XM6 valid with central kernels; witnesses (1,1) and ((12),(13))";
  });

  criterion(7, "Kan suite", [](Check& c) {
    auto sizes = [](const TruncatedSimplicialSet& x) {
      std::vector<std::size_t> out;
      for (const auto& l : x.layers) out.push_back(l.size());
      return out;
    };
    const auto z2 = nerve_of_groupoid(delooping(cyclic_group(2)), 3);
    c.require(sizes(z2) == std::vector<std::size_t>{1, 2, 4, 8}, "Z/2 layers 1,2,4,8");
    const KanReport r = kan_check(z2, 1, 3);
    c.require(r.ok(), "Z/2 nerve 1-Kan");
    for (const HornSummary& h : r.horns)
      if (h.m >= 2) c.require(h.uniqueness_required && h.ambiguous == 0, "unique fillers");
    c.require(sizes(nerve_of_groupoid(discrete_groupoid({"p", "q", "r"}), 2)) == std::vector<std::size_t>{3, 3, 3},
              "discrete layers 3,3,3");
    c.require(sizes(nerve_of_groupoid(to_strict_two_group(support::xmod("xm1")).base, 2)) ==
                  std::vector<std::size_t>{4, 8, 16},
              "XM1 layers 4,8,16");
    const auto v = nerve_of_partial_group(truncated_integers(1), 2);
    c.require(v.count(2) == 7, "V nerve X2 = 7");
    const KanReport vr = kan_check(v, 1, 2);
    const HornSummary* f = vr.at(2, 1);
    c.require(!vr.ok() && f && f->missing > 0 &&
                  f->first_missing == std::vector<std::pair<std::size_t, std::string>>{{0, "[1]"}, {2, "[1]"}},
              "V fails at Λ[2,1] with edges (1,1)");
    c.detail << "Z/2 nerve Kan through m=3; V fails at Λ[2,1] (1,1)";
  });

  criterion(8, "2-Kan correspondence on XM1", [](Check& c) {
    const StrictTwoGroup s = to_strict_two_group(support::xmod("xm1"));
    const FiniteGroupoid g = two_kan_to_groupoid(two_group_nerve(s));
    c.require(validate_groupoid(g).ok(), "extracted groupoid valid");
    const auto f = find_isomorphism(g, s.base);
    c.require(f && support::is_groupoid_iso(g, s.base, f->obj_map, f->arr_map), "isomorphic to translation groupoid");
    c.detail << g.object_count() << " objects, " << g.arrow_count() << " arrows";
  });

  criterion(9, "bibundle suite", [](Check& c) {
    const FiniteGroupoid tg = to_strict_two_group(support::xmod("xm1")).base;
    const auto [sub, inc] = full_subgroupoid(tg, {0, 2});
    const FiniteGroupoid z4 = delooping(cyclic_group(4)), z2 = delooping(cyclic_group(2));
    const Bibundle functors[] = {from_functor(inc, sub, tg), from_functor(GroupoidHom{{0}, {0, 1, 0, 1}}, z4, z2),
                                 from_functor(GroupoidHom{{0, 0}, {0, 0}}, discrete_groupoid({"p", "q"}), z2)};
    for (const Bibundle& b : functors) c.require(validate_principal(b).right_principal, "right principal");
    c.require(validate_principal(from_functor(identity_hom(tg), tg, tg)).morita, "identity is Morita");
    std::vector<std::size_t> po{2, 3, 0, 1}, pa(tg.arrow_count());
    for (std::size_t a = 0; a < pa.size(); ++a) pa[a] = (a + 3) % pa.size();
    const FiniteGroupoid copy = relabel(tg, po, pa, "c");
    const auto iso = find_isomorphism(tg, copy);
    c.require(iso && validate_principal(from_functor(*iso, tg, copy)).morita, "isomorphism is Morita");
    for (const Bibundle& b : functors) {
      const auto r = bibundle_isomorphism(compose(b, identity_bibundle(b.right)), b);
      const auto l = bibundle_isomorphism(compose(identity_bibundle(b.left), b), b);
      c.require(r && is_bibundle_iso(compose(b, identity_bibundle(b.right)), b, *r), "right unit law");
      c.require(l && is_bibundle_iso(compose(identity_bibundle(b.left), b), b, *l), "left unit law");
    }
    c.detail << "3 functor bibundles right principal; unit laws hold";
  });

  criterion(10, "pi1 suite", [](Check& c) {
    for (const std::string name : {"cayley_z2", "cayley_z3", "cayley_z2xz2", "cayley_s3"}) {
      const BoundaryIsoReport r = verify_boundary_iso(support::complex(name));
      c.require(r.report.ok(), name + " homomorphism and surjectivity");
      c.require(r.injectivity == InjectivityStatus::kCertified, name + " injectivity");
      c.detail << name << " |Γ|=" << r.gamma_order << " moves " << r.moves_used << "; ";
    }
    for (const std::string name : {"cayley_z2", "cayley_z3"}) {
      const InvarianceReport r = check_boundary_invariance(support::complex(name), 4);
      c.require(r.report.ok(), name + " invariance");
      c.detail << name << " invariance over " << r.loops << " loops; ";
    }
  });

  criterion(11, "determinism", [](Check& c) {
    const std::vector<std::tuple<std::string, std::string, std::string>> runs{
        {"validate", "twogroup", "t_omega.json"},        {"validate", "xmod", "xm2.json"},
        {"strictify", "twogroup", "semistrict_lunit.json"}, {"strictify", "twogroup", "t_omega.json"},
        {"extract-xmod", "twogroup", "xm2_strict.json"}, {"xmod-to-2group", "xmod", "xm6.json"},
        {"bibundle-check", "bibundle", "bibundle_reduction.json"}, {"nerve", "groupoid", "groupoid_codiscrete3.json"},
        {"kan-check", "partial-group", "partial_v1.json"}, {"pi1", "complex", "cayley_s3.json"},
        {"roundtrip", "xmod", "xm1.json"}};
    for (const auto& [sub, kind, file] : runs) {
      cli::Command cmd;
      cmd.subcommand = sub;
      cmd.inputs[kind] = support::catalog_path(file);
      cmd.verify_boundary = sub == "pi1";
      const cli::Outcome a = cli::run(cmd), b = cli::run(cmd);
      c.require(a.report == b.report && a.exit_code == b.exit_code, sub + " " + file);
    }
    c.detail << runs.size() << " subcommand runs byte-identical";
  });

  return failures == 0 ? 0 : 1;
}
