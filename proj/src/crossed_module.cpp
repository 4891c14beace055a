#include "twogroups/crossed_module.hpp"

#include <string>

namespace twogroups {

std::vector<std::size_t> trivial_action(const Group& gamma, const Group& g0) {
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < g0.order(); ++x)
    for (std::size_t g = 0; g < gamma.order(); ++g) out.push_back(g);
  return out;
}

std::vector<std::size_t> conjugation_action(const Group& gamma, const Group& g0,
                                            const std::vector<std::size_t>& embedding) {
  std::vector<std::size_t> back(g0.order(), kNone);
  for (std::size_t g = 0; g < embedding.size(); ++g) back[embedding[g]] = g;
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < g0.order(); ++x)
    for (std::size_t g = 0; g < gamma.order(); ++g) {
      const std::size_t c = g0.mul(g0.mul(x, embedding[g]), g0.inverse(x));
      if (back[c] == kNone) throw PreconditionError("image is not normal");
      out.push_back(back[c]);
    }
  return out;
}

ValidationReport validate_crossed_module(const CrossedModule& x) {
  ValidationReport report;
  const Group& G = x.gamma;
  const Group& H = x.g0;
  const std::size_t ng = G.order(), nh = H.order();
  if (x.partial.size() != ng) report.add_structural("boundary table shape");
  if (x.action.size() != ng * nh) report.add_structural("action table shape");
  if (!report.structurally_sound()) return report;
  for (std::size_t g = 0; g < ng; ++g)
    if (x.partial[g] >= nh) report.add_structural("boundary value out of range", {G.name(g)});
  for (std::size_t i = 0; i < x.action.size(); ++i)
    if (x.action[i] >= ng) report.add_structural("action value out of range", {H.name(i / ng), G.name(i % ng)});
  if (!report.structurally_sound()) return report;

  auto d = [&](std::size_t g) { return x.partial[g]; };

  report.begin_check("boundary homomorphism");
  for (std::size_t a = 0; a < ng; ++a)
    for (std::size_t b = 0; b < ng; ++b)
      report.expect("boundary homomorphism", d(G.mul(a, b)) == H.mul(d(a), d(b)),
                    [&] { return Witness{G.name(a), G.name(b)}; });

  report.begin_check("action unital");
  for (std::size_t g = 0; g < ng; ++g)
    report.expect("action unital", x.act(H.unit(), g) == g, [&] { return Witness{G.name(g)}; });

  report.begin_check("action composition");
  for (std::size_t p = 0; p < nh; ++p)
    for (std::size_t q = 0; q < nh; ++q)
      for (std::size_t g = 0; g < ng; ++g)
        report.expect("action composition", x.act(H.mul(p, q), g) == x.act(p, x.act(q, g)),
                      [&] { return Witness{H.name(p), H.name(q), G.name(g)}; });

  report.begin_check("action by automorphisms");
  for (std::size_t p = 0; p < nh; ++p)
    for (std::size_t a = 0; a < ng; ++a)
      for (std::size_t b = 0; b < ng; ++b)
        report.expect("action by automorphisms",
                      x.act(p, G.mul(a, b)) == G.mul(x.act(p, a), x.act(p, b)),
                      [&] { return Witness{H.name(p), G.name(a), G.name(b)}; });

  report.begin_check("equivariance");
  for (std::size_t p = 0; p < nh; ++p)
    for (std::size_t g = 0; g < ng; ++g)
      report.expect("equivariance", d(x.act(p, g)) == H.mul(H.mul(p, d(g)), H.inverse(p)),
                    [&] { return Witness{H.name(p), G.name(g)}; });

  report.begin_check("Pfeiffer");
  for (std::size_t a = 0; a < ng; ++a)
    for (std::size_t b = 0; b < ng; ++b)
      report.expect("Pfeiffer", x.act(d(a), b) == G.mul(G.mul(a, b), G.inverse(a)),
                    [&] { return Witness{G.name(a), G.name(b)}; });
  return report;
}

StrictTwoGroup to_strict_two_group(const CrossedModule& x) {
  const Group& G = x.gamma;
  const Group& H = x.g0;
  const std::size_t ng = G.order(), nh = H.order(), na = ng * nh;
  auto index = [&](std::size_t g, std::size_t p) { return g * nh + p; };

  std::vector<ArrowRecord> arrows;
  std::vector<std::string> names;
  for (std::size_t g = 0; g < ng; ++g)
    for (std::size_t p = 0; p < nh; ++p) {
      names.push_back("(" + G.name(g) + "," + H.name(p) + ")");
      arrows.push_back({names.back(), p, H.mul(x.partial[g], p)});
    }
  std::vector<std::size_t> comp(na * na, kNone), ident, inv(na), mul(na * na);
  for (std::size_t a = 0; a < na; ++a)
    for (std::size_t b = 0; b < na; ++b) {
      if (arrows[a].tgt == arrows[b].src)
        comp[b * na + a] = index(G.mul(b / nh, a / nh), arrows[a].src);
      const std::size_t g1 = a / nh, p1 = a % nh, g2 = b / nh, p2 = b % nh;
      mul[a * na + b] = index(G.mul(g1, x.act(p1, g2)), H.mul(p1, p2));
    }
  for (std::size_t p = 0; p < nh; ++p) ident.push_back(index(G.unit(), p));
  for (std::size_t a = 0; a < na; ++a) inv[a] = index(G.inverse(a / nh), arrows[a].tgt);

  StrictTwoGroup s;
  s.base = FiniteGroupoid(H.names(), std::move(arrows), std::move(comp), std::move(ident), std::move(inv));
  s.objects = H;
  s.arrows = Group::from_table(std::move(names), std::move(mul));
  return s;
}

KernelCenter kernel_center_check(const CrossedModule& x) {
  KernelCenter out;
  const Group& G = x.gamma;
  const Group& H = x.g0;
  for (std::size_t g = 0; g < G.order(); ++g)
    if (x.partial[g] == H.unit()) out.kernel.push_back(g);

  out.report.begin_check("kernel central");
  for (std::size_t k : out.kernel)
    for (std::size_t g = 0; g < G.order(); ++g) {
      ++out.commutators_checked;
      out.report.expect("kernel central", G.mul(k, g) == G.mul(g, k), [&] { return Witness{G.name(k), G.name(g)}; });
    }

  std::vector<bool> seen(H.order(), false);
  for (std::size_t p = 0; p < H.order(); ++p) {
    if (seen[p]) continue;
    std::vector<bool> in(H.order(), false);
    for (std::size_t g = 0; g < G.order(); ++g) in[H.mul(x.partial[g], p)] = true;
    std::vector<std::size_t> orbit;
    for (std::size_t q = 0; q < H.order(); ++q)
      if (in[q]) {
        orbit.push_back(q);
        seen[q] = true;
      }
    out.orbits.push_back(std::move(orbit));
  }

  if (!out.report.ok() && validate_crossed_module(x).ok())
    throw InternalInconsistency("kernel of a valid crossed module is not central");
  return out;
}

ValidationReport translation_interchange(const CrossedModule& x) {
  ValidationReport report;
  const Group& G = x.gamma;
  const Group& H = x.g0;
  struct Arrow {
    std::size_t g, p;
  };
  auto tgt = [&](Arrow a) { return H.mul(x.partial[a.g], a.p); };
  auto mul = [&](Arrow a, Arrow b) {
    return Arrow{G.mul(a.g, x.act(a.p, b.g)), H.mul(a.p, b.p)};
  };
  auto name = [&](Arrow a) { return "(" + G.name(a.g) + "," + H.name(a.p) + ")"; };

  report.begin_check("interchange");
  std::vector<std::pair<Arrow, Arrow>> pairs;  // (first, second) composable
  for (std::size_t g1 = 0; g1 < G.order(); ++g1)
    for (std::size_t p = 0; p < H.order(); ++p) {
      const Arrow first{g1, p};
      for (std::size_t g2 = 0; g2 < G.order(); ++g2) pairs.push_back({first, Arrow{g2, tgt(first)}});
    }
  for (const auto& [a1, a2] : pairs)
    for (const auto& [b1, b2] : pairs) {
      const Arrow lhs_a{G.mul(a2.g, a1.g), a1.p}, lhs_b{G.mul(b2.g, b1.g), b1.p};
      const Arrow lhs = mul(lhs_a, lhs_b);
      const Arrow r1 = mul(a1, b1), r2 = mul(a2, b2);
      const std::vector<std::string> witness{name(a1), name(a2), name(b1), name(b2)};
      if (tgt(r1) != r2.p) {
        report.record("interchange", false, witness, "products are not composable");
        continue;
      }
      const Arrow rhs{G.mul(r2.g, r1.g), r1.p};
      report.record("interchange", lhs.g == rhs.g && lhs.p == rhs.p, witness);
    }
  return report;
}

bool is_crossed_module_iso(const CrossedModule& a, const CrossedModule& b, const CrossedModuleIso& f) {
  if (a.gamma.order() != b.gamma.order() || a.g0.order() != b.g0.order()) return false;
  if (f.gamma_map.size() != a.gamma.order() || f.g0_map.size() != a.g0.order()) return false;
  if (!is_homomorphism(a.gamma, b.gamma, f.gamma_map) || !is_homomorphism(a.g0, b.g0, f.g0_map))
    return false;
  std::vector<bool> hit(b.gamma.order(), false);
  for (std::size_t g : f.gamma_map) {
    if (hit[g]) return false;
    hit[g] = true;
  }
  hit.assign(b.g0.order(), false);
  for (std::size_t p : f.g0_map) {
    if (hit[p]) return false;
    hit[p] = true;
  }
  for (std::size_t g = 0; g < a.gamma.order(); ++g)
    if (b.partial[f.gamma_map[g]] != f.g0_map[a.partial[g]]) return false;
  for (std::size_t p = 0; p < a.g0.order(); ++p)
    for (std::size_t g = 0; g < a.gamma.order(); ++g)
      if (f.gamma_map[a.act(p, g)] != b.act(f.g0_map[p], f.gamma_map[g])) return false;
  return true;
}

std::optional<CrossedModuleIso> find_crossed_module_isomorphism(const CrossedModule& a,
                                                                const CrossedModule& b) {
  if (a.gamma.order() != b.gamma.order() || a.g0.order() != b.g0.order()) return std::nullopt;
  std::optional<CrossedModuleIso> found;
  for_each_homomorphism(
      a.g0, b.g0,
      [&](const std::vector<std::size_t>& beta) {
        for_each_homomorphism(
            a.gamma, b.gamma,
            [&](const std::vector<std::size_t>& alpha) {
              CrossedModuleIso f{alpha, beta};
              if (is_crossed_module_iso(a, b, f)) found = std::move(f);
              return !found.has_value();
            },
            true);
        return !found.has_value();
      },
      true);
  return found;
}

}  // namespace twogroups
