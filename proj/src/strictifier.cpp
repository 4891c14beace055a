#include "twogroups/strictifier.hpp"

namespace twogroups {

namespace {

std::size_t inverse_object(const CoherentTwoGroup& t, std::size_t x) {
  for (std::size_t y = 0; y < t.base.object_count(); ++y)
    if (t.tobj(x, y) == t.unit && t.tobj(y, x) == t.unit) return y;
  return kNone;
}

}  // namespace

std::optional<Group> object_group(const CoherentTwoGroup& t) {
  if (!validate_group_table(t.base.objects(), t.tensor_obj).ok()) return std::nullopt;
  Group g = Group::from_table(t.base.objects(), t.tensor_obj);
  if (g.unit() != t.unit) return std::nullopt;
  return g;
}

AssociatorCocycle associator_cocycle(const CoherentTwoGroup& t) {
  if (!object_group(t)) throw PreconditionError("objects do not form a group under the tensor");
  const FiniteGroupoid& b = t.base;
  const std::size_t n = b.object_count();
  const std::size_t id_unit = b.ident(t.unit);
  AssociatorCocycle c;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        const std::size_t xyz = t.tobj(t.tobj(x, y), z);
        c.h.push_back(t.tensor_right(t.a(x, y, z), inverse_object(t, xyz)));
      }
  c.h0 = c.h[(t.unit * n + t.unit) * n + t.unit];
  const std::size_t sq = b.comp(c.h0, c.h0);
  c.certificate = sq != kNone && sq == b.comp(c.h0, sq);
  c.constant = true;
  c.trivial = true;
  for (std::size_t v : c.h) {
    if (v != c.h.front()) c.constant = false;
    if (v != id_unit) c.trivial = false;
  }
  return c;
}

SemistrictResult is_semistrict(const CoherentTwoGroup& t) {
  SemistrictResult r;
  const FiniteGroupoid& b = t.base;
  const std::size_t n = b.object_count();
  auto on = [&](std::size_t x) { return b.object_name(x); };

  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        if (t.tobj(t.tobj(x, y), z) != t.tobj(x, t.tobj(y, z))) {
          r.reason = "object tensor not associative";
          r.witness = {on(x), on(y), on(z)};
          return r;
        }
  for (std::size_t x = 0; x < n; ++x)
    if (t.tobj(t.unit, x) != x || t.tobj(x, t.unit) != x) {
      r.reason = "unit is not a two-sided unit on objects";
      r.witness = {on(x)};
      return r;
    }
  for (std::size_t x = 0; x < n; ++x)
    if (inverse_object(t, x) == kNone) {
      r.reason = "non-invertible object";
      r.witness = {on(x)};
      return r;
    }
  const std::size_t id_unit = b.ident(t.unit);
  for (std::size_t x = 0; x < n; ++x) {
    if (t.adj_d[x] != id_unit) {
      r.reason = "adjunction data not identity";
      r.witness = {"d_" + on(x)};
      return r;
    }
    if (t.adj_e[x] != id_unit) {
      r.reason = "adjunction data not identity";
      r.witness = {"e_" + on(x)};
      return r;
    }
  }
  r.semistrict = true;
  return r;
}

Strictification strictify(const CoherentTwoGroup& t) {
  const SemistrictResult semi = is_semistrict(t);
  if (!semi.semistrict) throw NotSemistrict(semi.reason, semi.witness);

  const FiniteGroupoid& b = t.base;
  const std::size_t no = b.object_count(), na = b.arrow_count();
  auto on = [&](std::size_t x) { return b.object_name(x); };
  auto an = [&](std::size_t g) { return b.arrow_name(g); };
  const std::size_t id_unit = b.ident(t.unit);

  for (std::size_t x = 0; x < no; ++x)
    for (std::size_t y = 0; y < no; ++y)
      for (std::size_t z = 0; z < no; ++z)
        if (t.a(x, y, z) != b.ident(t.tobj(t.tobj(x, y), z)))
          throw ConnectednessAnalogViolated(kLemmaAssociatorTrivial, {on(x), on(y), on(z)});

  for (std::size_t g = 0; g < na; ++g)
    if (t.tarr(g, id_unit) != g || t.tarr(id_unit, g) != g)
      throw ConnectednessAnalogViolated(kLemmaUnitTensor, {an(g)});

  const std::size_t l = t.lunit[t.unit];
  for (std::size_t x = 0; x < no; ++x)
    if (t.lunit[x] != t.tensor_left(x, l) || t.runit[x] != t.tensor_right(l, x))
      throw ConnectednessAnalogViolated(kLemmaUnitConstraints, {on(x)});

  for (std::size_t g = 0; g < na; ++g) {
    const std::size_t gbar = transpose(t, b.inv(g));
    if (t.tarr(g, gbar) != id_unit || t.tarr(gbar, g) != id_unit)
      throw ConnectednessAnalogViolated(kLemmaContragredient, {an(g)});
  }

  Strictification out;
  out.strict.base = b;
  out.strict.objects = Group::from_table(b.objects(), t.tensor_obj);
  std::vector<std::string> arrow_names;
  for (std::size_t g = 0; g < na; ++g) arrow_names.push_back(an(g));
  try {
    out.strict.arrows = Group::from_table(std::move(arrow_names), t.tensor_arr);
  } catch (const StructuralError& e) {
    throw InternalInconsistency(std::string("arrows do not form a group: ") + e.what());
  }
  if (!validate_strict(out.strict).ok())
    throw InternalInconsistency("strictification is not a strict 2-group");

  for (std::size_t x = 0; x < no; ++x)
    for (std::size_t y = 0; y < no; ++y) out.equivalence.t.push_back(b.ident(t.tobj(x, y)));
  out.equivalence.u = b.inv(l);
  return out;
}

std::vector<std::size_t> gamma_arrows(const StrictTwoGroup& s) {
  std::vector<std::size_t> out;
  for (std::size_t g = 0; g < s.base.arrow_count(); ++g)
    if (s.base.tgt(g) == s.objects.unit()) out.push_back(g);
  return out;
}

CrossedModule extract_crossed_module(const StrictTwoGroup& s) {
  const std::vector<std::size_t> gam = gamma_arrows(s);
  std::vector<std::size_t> pos(s.base.arrow_count(), kNone);
  for (std::size_t i = 0; i < gam.size(); ++i) pos[gam[i]] = i;

  std::vector<std::string> names;
  for (std::size_t g : gam) names.push_back(s.base.arrow_name(g));
  std::vector<std::size_t> table;
  for (std::size_t a : gam)
    for (std::size_t b : gam) {
      const std::size_t p = pos[s.arrows.mul(a, b)];
      if (p == kNone) throw InternalInconsistency("target-unit arrows not closed under tensor");
      table.push_back(p);
    }

  CrossedModule x;
  x.gamma = Group::from_table(std::move(names), std::move(table));
  x.g0 = s.objects;
  for (std::size_t g : gam) x.partial.push_back(s.base.src(g));
  for (std::size_t p = 0; p < s.objects.order(); ++p) {
    const std::size_t id_p = s.base.ident(p), id_pinv = s.base.ident(s.objects.inverse(p));
    for (std::size_t g : gam) {
      const std::size_t q = pos[s.arrows.mul(s.arrows.mul(id_p, g), id_pinv)];
      if (q == kNone) throw InternalInconsistency("conjugate leaves the target-unit arrows");
      x.action.push_back(q);
    }
  }
  return x;
}

ArrowGroup arrow_group(const StrictTwoGroup& s) {
  ArrowGroup out;
  out.xmod = extract_crossed_module(s);
  out.gamma = gamma_arrows(s);
  const Group& G = out.xmod.gamma;
  const Group& H = out.xmod.g0;
  const std::size_t ng = G.order(), nh = H.order(), np = ng * nh;

  std::vector<std::size_t> pos(s.base.arrow_count(), kNone);
  for (std::size_t i = 0; i < out.gamma.size(); ++i) pos[out.gamma[i]] = i;

  std::vector<std::string> names;
  std::vector<std::size_t> table(np * np);
  for (std::size_t g = 0; g < ng; ++g)
    for (std::size_t p = 0; p < nh; ++p) names.push_back("(" + G.name(g) + "," + H.name(p) + ")");
  for (std::size_t a = 0; a < np; ++a)
    for (std::size_t b = 0; b < np; ++b) {
      const std::size_t g1 = a / nh, p1 = a % nh, g2 = b / nh, p2 = b % nh;
      table[a * np + b] = G.mul(g1, out.xmod.act(p1, g2)) * nh + H.mul(p1, p2);
    }
  out.semidirect = Group::from_table(std::move(names), std::move(table));

  for (std::size_t a = 0; a < np; ++a)
    out.psi.push_back(s.arrows.mul(out.gamma[a / nh], s.base.ident(a % nh)));
  for (std::size_t g = 0; g < s.base.arrow_count(); ++g) {
    const std::size_t y = s.base.tgt(g);
    const std::size_t gamma = pos[s.arrows.mul(g, s.base.ident(s.objects.inverse(y)))];
    if (gamma == kNone) throw InternalInconsistency("Phi leaves the target-unit arrows");
    out.phi.push_back(gamma * nh + y);
  }

  auto an = [&](std::size_t g) { return s.base.arrow_name(g); };
  out.report.begin_check("Psi∘Phi");
  for (std::size_t g = 0; g < s.base.arrow_count(); ++g)
    out.report.expect("Psi∘Phi", out.psi[out.phi[g]] == g, [&] { return Witness{an(g)}; });
  out.report.begin_check("Phi∘Psi");
  for (std::size_t a = 0; a < np; ++a)
    out.report.expect("Phi∘Psi", out.phi[out.psi[a]] == a, [&] { return Witness{out.semidirect.name(a)}; });
  out.report.begin_check("Phi homomorphism");
  for (std::size_t a = 0; a < s.base.arrow_count(); ++a)
    for (std::size_t b = 0; b < s.base.arrow_count(); ++b) {
      ++out.products_checked;
      out.report.expect("Phi homomorphism",
                        out.phi[s.arrows.mul(a, b)] == out.semidirect.mul(out.phi[a], out.phi[b]),
                        [&] { return Witness{an(a), an(b)}; });
    }
  return out;
}

}  // namespace twogroups
