#include "twogroups/two_group.hpp"

#include <initializer_list>
#include <string>

namespace twogroups {

namespace {

// Composes arrows in path order: first the first listed arrow.
std::size_t chain(const FiniteGroupoid& g, std::initializer_list<std::size_t> arrows) {
  std::size_t acc = kNone;
  for (std::size_t a : arrows) acc = acc == kNone ? a : g.then(acc, a);
  return acc;
}

std::size_t zigzag_one(const CoherentTwoGroup& t, std::size_t x, std::size_t xb, std::size_t d,
                       std::size_t e) {
  const FiniteGroupoid& g = t.base;
  return chain(g, {g.inv(t.runit[x]), t.tensor_right(d, x), g.inv(t.a(x, xb, x)),
                   t.tensor_left(x, e), t.lunit[x]});
}

std::size_t zigzag_two(const CoherentTwoGroup& t, std::size_t x, std::size_t xb, std::size_t d,
                       std::size_t e) {
  const FiniteGroupoid& g = t.base;
  return chain(g, {g.inv(t.lunit[xb]), t.tensor_left(xb, d), t.a(xb, x, xb),
                   t.tensor_right(e, xb), t.runit[xb]});
}

class EndpointChecker {
 public:
  EndpointChecker(const FiniteGroupoid& g, ValidationReport& report) : g_(g), report_(report) {}

  void expect(const std::string& what, std::size_t arrow, std::size_t src, std::size_t tgt,
              const std::vector<std::string>& witness) {
    if (arrow >= g_.arrow_count()) {
      report_.add_structural(what + " out of range", witness);
    } else if (src >= g_.object_count() || tgt >= g_.object_count()) {
      report_.add_structural(what + " has undefined endpoints", witness);
    } else if (g_.src(arrow) != src || g_.tgt(arrow) != tgt) {
      report_.add_structural(what + " has wrong endpoints", witness,
                             g_.arrow_name(arrow) + ": " + g_.object_name(g_.src(arrow)) + " -> " +
                                 g_.object_name(g_.tgt(arrow)));
    }
  }

 private:
  const FiniteGroupoid& g_;
  ValidationReport& report_;
};

void check_structure(const CoherentTwoGroup& t, ValidationReport& report) {
  const FiniteGroupoid& g = t.base;
  const std::size_t no = g.object_count(), na = g.arrow_count();
  if (t.tensor_obj.size() != no * no || t.tensor_arr.size() != na * na ||
      t.assoc.size() != no * no * no || t.lunit.size() != no || t.runit.size() != no ||
      t.bar.size() != no || t.adj_d.size() != no || t.adj_e.size() != no) {
    report.add_structural("table shape");
    return;
  }
  if (t.unit >= no) {
    report.add_structural("unit out of range");
    return;
  }
  for (std::size_t v : t.tensor_obj)
    if (v >= no) {
      report.add_structural("tensor_obj entry out of range");
      return;
    }
  for (std::size_t v : t.bar)
    if (v >= no) {
      report.add_structural("bar entry out of range");
      return;
    }
  if (t.bar[t.unit] != t.unit) report.add_structural("bar of unit is not unit", {g.object_name(t.unit)});

  EndpointChecker check(g, report);
  auto on = [&](std::size_t x) { return g.object_name(x); };
  for (std::size_t a = 0; a < na; ++a)
    for (std::size_t b = 0; b < na; ++b)
      check.expect("tensor_arr", t.tarr(a, b), t.tobj(g.src(a), g.src(b)), t.tobj(g.tgt(a), g.tgt(b)),
                   {g.arrow_name(a), g.arrow_name(b)});
  for (std::size_t x = 0; x < no; ++x)
    for (std::size_t y = 0; y < no; ++y)
      for (std::size_t z = 0; z < no; ++z)
        check.expect("assoc", t.a(x, y, z), t.tobj(x, t.tobj(y, z)), t.tobj(t.tobj(x, y), z),
                     {on(x), on(y), on(z)});
  for (std::size_t x = 0; x < no; ++x) {
    const std::size_t xb = t.bar[x];
    check.expect("lunit", t.lunit[x], t.tobj(x, t.unit), x, {on(x)});
    check.expect("runit", t.runit[x], t.tobj(t.unit, x), x, {on(x)});
    check.expect("d", t.adj_d[x], t.unit, t.tobj(x, xb), {on(x)});
    check.expect("e", t.adj_e[x], t.tobj(xb, x), t.unit, {on(x)});
  }
}

}  // namespace

ValidationReport validate_coherent(const CoherentTwoGroup& t) {
  ValidationReport report;
  ValidationReport base_report = validate_groupoid(t.base);
  if (!base_report.ok()) {
    report.merge(base_report, "groupoid");
    return report;
  }
  check_structure(t, report);
  if (!report.structurally_sound()) return report;

  const FiniteGroupoid& g = t.base;
  const std::size_t no = g.object_count(), na = g.arrow_count();
  auto on = [&](std::size_t x) { return g.object_name(x); };
  auto an = [&](std::size_t a) { return g.arrow_name(a); };

  report.begin_check("tensor identities");
  for (std::size_t x = 0; x < no; ++x)
    for (std::size_t y = 0; y < no; ++y)
      report.expect("tensor identities", t.tarr(g.ident(x), g.ident(y)) == g.ident(t.tobj(x, y)),
                    [&] { return Witness{on(x), on(y)}; });

  report.begin_check("exchange law");
  for (std::size_t g1 = 0; g1 < na; ++g1)
    for (std::size_t g2 = 0; g2 < na; ++g2) {
      if (g.tgt(g1) != g.src(g2)) continue;
      const std::size_t g21 = g.comp(g2, g1);
      for (std::size_t h1 = 0; h1 < na; ++h1)
        for (std::size_t h2 = 0; h2 < na; ++h2) {
          if (g.tgt(h1) != g.src(h2)) continue;
          const std::size_t lhs = t.tarr(g21, g.comp(h2, h1));
          const std::size_t rhs = g.comp(t.tarr(g2, h2), t.tarr(g1, h1));
          report.expect("exchange law", lhs == rhs, [&] { return Witness{an(g1), an(g2), an(h1), an(h2)}; });
        }
    }

  report.begin_check("associator naturality");
  for (std::size_t f = 0; f < na; ++f)
    for (std::size_t k = 0; k < na; ++k)
      for (std::size_t h = 0; h < na; ++h) {
        const std::size_t lhs =
            g.comp(t.a(g.tgt(f), g.tgt(k), g.tgt(h)), t.tarr(f, t.tarr(k, h)));
        const std::size_t rhs =
            g.comp(t.tarr(t.tarr(f, k), h), t.a(g.src(f), g.src(k), g.src(h)));
        report.expect("associator naturality", lhs == rhs, [&] { return Witness{an(f), an(k), an(h)}; });
      }

  report.begin_check("left unitor naturality");
  report.begin_check("right unitor naturality");
  for (std::size_t f = 0; f < na; ++f) {
    const std::size_t x = g.src(f), y = g.tgt(f);
    report.expect("left unitor naturality",
                  g.comp(t.lunit[y], t.tensor_right(f, t.unit)) == g.comp(f, t.lunit[x]), [&] { return Witness{an(f)}; });
    report.expect("right unitor naturality",
                  g.comp(t.runit[y], t.tensor_left(t.unit, f)) == g.comp(f, t.runit[x]), [&] { return Witness{an(f)}; });
  }

  report.begin_check("pentagon");
  for (std::size_t x = 0; x < no; ++x)
    for (std::size_t y = 0; y < no; ++y)
      for (std::size_t z = 0; z < no; ++z)
        for (std::size_t w = 0; w < no; ++w) {
          const std::size_t lhs = chain(g, {t.a(x, y, t.tobj(z, w)), t.a(t.tobj(x, y), z, w)});
          const std::size_t rhs = chain(g, {t.tensor_left(x, t.a(y, z, w)), t.a(x, t.tobj(y, z), w),
                                            t.tensor_right(t.a(x, y, z), w)});
          report.expect("pentagon", lhs == rhs, [&] { return Witness{on(x), on(y), on(z), on(w)}; });
        }

  report.begin_check("triangle");
  for (std::size_t x = 0; x < no; ++x)
    for (std::size_t y = 0; y < no; ++y) {
      const std::size_t lhs = chain(g, {t.a(x, t.unit, y), t.tensor_right(t.lunit[x], y)});
      report.expect("triangle", lhs == t.tensor_left(x, t.runit[y]), [&] { return Witness{on(x), on(y)}; });
    }

  report.begin_check("zig-zag 1");
  report.begin_check("zig-zag 2");
  for (std::size_t x = 0; x < no; ++x) {
    const std::size_t xb = t.bar[x];
    report.expect("zig-zag 1", zigzag_one(t, x, xb, t.adj_d[x], t.adj_e[x]) == g.ident(x), [&] { return Witness{on(x)}; });
    report.expect("zig-zag 2", zigzag_two(t, x, xb, t.adj_d[x], t.adj_e[x]) == g.ident(xb), [&] { return Witness{on(x)}; });
  }
  return report;
}

ValidationReport validate_strict(const StrictTwoGroup& s) {
  ValidationReport report;
  ValidationReport base_report = validate_groupoid(s.base);
  if (!base_report.ok()) {
    report.merge(base_report, "groupoid");
    return report;
  }
  const FiniteGroupoid& g = s.base;
  if (s.objects.order() != g.object_count() || s.arrows.order() != g.arrow_count()) {
    report.add_structural("group tables do not match the groupoid");
    return report;
  }
  auto an = [&](std::size_t a) { return g.arrow_name(a); };
  const std::size_t na = g.arrow_count(), no = g.object_count();

  report.begin_check("source homomorphism");
  report.begin_check("target homomorphism");
  for (std::size_t a = 0; a < na; ++a)
    for (std::size_t b = 0; b < na; ++b) {
      const std::size_t ab = s.arrows.mul(a, b);
      report.expect("source homomorphism", g.src(ab) == s.objects.mul(g.src(a), g.src(b)),
                    [&] { return Witness{an(a), an(b)}; });
      report.expect("target homomorphism", g.tgt(ab) == s.objects.mul(g.tgt(a), g.tgt(b)),
                    [&] { return Witness{an(a), an(b)}; });
    }

  report.begin_check("identity homomorphism");
  for (std::size_t x = 0; x < no; ++x)
    for (std::size_t y = 0; y < no; ++y)
      report.expect("identity homomorphism",
                    s.arrows.mul(g.ident(x), g.ident(y)) == g.ident(s.objects.mul(x, y)),
                    [&] { return Witness{g.object_name(x), g.object_name(y)}; });
  if (report.has_violation("source homomorphism") || report.has_violation("target homomorphism"))
    return report;

  report.begin_check("exchange law");
  for (std::size_t g1 = 0; g1 < na; ++g1)
    for (std::size_t g2 = 0; g2 < na; ++g2) {
      if (g.tgt(g1) != g.src(g2)) continue;
      for (std::size_t h1 = 0; h1 < na; ++h1)
        for (std::size_t h2 = 0; h2 < na; ++h2) {
          if (g.tgt(h1) != g.src(h2)) continue;
          const std::size_t lhs = s.arrows.mul(g.comp(g2, g1), g.comp(h2, h1));
          const std::size_t rhs = g.comp(s.arrows.mul(g2, h2), s.arrows.mul(g1, h1));
          report.expect("exchange law", lhs == rhs, [&] { return Witness{an(g1), an(g2), an(h1), an(h2)}; });
        }
    }
  return report;
}

CoherentTwoGroup as_coherent(const StrictTwoGroup& s) {
  CoherentTwoGroup t;
  t.base = s.base;
  const std::size_t no = s.base.object_count();
  t.tensor_obj = s.objects.table();
  t.tensor_arr = s.arrows.table();
  t.unit = s.objects.unit();
  t.assoc.resize(no * no * no);
  for (std::size_t x = 0; x < no; ++x)
    for (std::size_t y = 0; y < no; ++y)
      for (std::size_t z = 0; z < no; ++z)
        t.assoc[(x * no + y) * no + z] = s.base.ident(s.objects.mul(s.objects.mul(x, y), z));
  for (std::size_t x = 0; x < no; ++x) {
    t.lunit.push_back(s.base.ident(x));
    t.runit.push_back(s.base.ident(x));
    t.bar.push_back(s.objects.inverse(x));
    t.adj_d.push_back(s.base.ident(t.unit));
    t.adj_e.push_back(s.base.ident(t.unit));
  }
  return t;
}

bool satisfies_transpose_square(const CoherentTwoGroup& t, std::size_t g, std::size_t h) {
  const FiniteGroupoid& b = t.base;
  const std::size_t x = b.src(g), y = b.tgt(g);
  const std::size_t xb = t.bar[x], yb = t.bar[y];
  if (b.src(h) != yb || b.tgt(h) != xb) return false;
  return b.comp(t.adj_e[x], t.tensor_right(h, x)) == b.comp(t.adj_e[y], t.tensor_left(yb, g));
}

std::size_t transpose(const CoherentTwoGroup& t, std::size_t g) {
  const FiniteGroupoid& b = t.base;
  const std::size_t x = b.src(g), y = b.tgt(g);
  const std::size_t xb = t.bar[x], yb = t.bar[y];
  const std::size_t h =
      chain(b, {b.inv(t.lunit[yb]), t.tensor_left(yb, t.adj_d[x]),
                t.tensor_left(yb, t.tensor_right(g, xb)), t.a(yb, y, xb),
                t.tensor_right(t.adj_e[y], xb), t.runit[xb]});
  if (!satisfies_transpose_square(t, g, h))
    throw InternalInconsistency("transpose of " + b.arrow_name(g) +
                                " fails the characterization square");
  return h;
}

GroupoidHom inversion_functor(const CoherentTwoGroup& t) {
  GroupoidHom i;
  i.obj_map = t.bar;
  for (std::size_t g = 0; g < t.base.arrow_count(); ++g)
    i.arr_map.push_back(transpose(t, t.base.inv(g)));
  if (!validate_hom(i, t.base, t.base).ok())
    throw InternalInconsistency("inversion is not a functor");
  return i;
}

UnitIsotropy unit_isotropy(const CoherentTwoGroup& t) {
  UnitIsotropy out;
  out.arrows = t.base.hom(t.unit, t.unit);
  out.group = vertex_group(t.base, t.unit);
  out.report.begin_check("Eckmann-Hilton");
  for (std::size_t a : out.arrows)
    for (std::size_t b : out.arrows) {
      ++out.commutators_checked;
      out.report.expect("Eckmann-Hilton", t.base.comp(a, b) == t.base.comp(b, a),
                        [&] { return Witness{t.base.arrow_name(a), t.base.arrow_name(b)}; });
    }
  return out;
}

std::optional<AdjunctionData> search_adjunction_data(const CoherentTwoGroup& t) {
  const FiniteGroupoid& g = t.base;
  AdjunctionData out;
  for (std::size_t x = 0; x < g.object_count(); ++x) {
    bool found = false;
    for (std::size_t xb = 0; xb < g.object_count() && !found; ++xb) {
      if (x == t.unit && xb != t.unit) continue;
      for (std::size_t d : g.hom(t.unit, t.tobj(x, xb))) {
        for (std::size_t e : g.hom(t.tobj(xb, x), t.unit)) {
          if (zigzag_one(t, x, xb, d, e) == g.ident(x) && zigzag_two(t, x, xb, d, e) == g.ident(xb)) {
            out.bar.push_back(xb);
            out.adj_d.push_back(d);
            out.adj_e.push_back(e);
            found = true;
            break;
          }
        }
        if (found) break;
      }
    }
    if (!found) return std::nullopt;
  }
  return out;
}

}  // namespace twogroups
