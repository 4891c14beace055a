#include "twogroups/groupoid.hpp"

#include <algorithm>
#include <deque>
#include <functional>

namespace twogroups {

FiniteGroupoid::FiniteGroupoid(std::vector<std::string> objects, std::vector<ArrowRecord> arrows,
                               std::vector<std::size_t> comp, std::vector<std::size_t> ident,
                               std::vector<std::size_t> inv)
    : objects_(std::move(objects)),
      arrows_(std::move(arrows)),
      comp_(std::move(comp)),
      ident_(std::move(ident)),
      inv_(std::move(inv)) {
  if (comp_.size() != arrows_.size() * arrows_.size())
    throw StructuralError("composition table has wrong shape");
  if (ident_.size() != objects_.size()) throw StructuralError("identity table has wrong shape");
  if (inv_.size() != arrows_.size()) throw StructuralError("inverse table has wrong shape");
}

std::size_t FiniteGroupoid::then(std::size_t g, std::size_t h) const {
  const std::size_t r = comp(h, g);
  if (r == kNone)
    throw InternalInconsistency("composing non-composable arrows " + arrow_name(g) + ", " +
                                arrow_name(h));
  return r;
}

std::optional<std::size_t> FiniteGroupoid::find_object(std::string_view name) const {
  for (std::size_t i = 0; i < objects_.size(); ++i)
    if (objects_[i] == name) return i;
  return std::nullopt;
}

std::optional<std::size_t> FiniteGroupoid::find_arrow(std::string_view name) const {
  for (std::size_t i = 0; i < arrows_.size(); ++i)
    if (arrows_[i].id == name) return i;
  return std::nullopt;
}

std::vector<std::size_t> FiniteGroupoid::hom(std::size_t x, std::size_t y) const {
  std::vector<std::size_t> out;
  for (std::size_t g = 0; g < arrows_.size(); ++g)
    if (arrows_[g].src == x && arrows_[g].tgt == y) out.push_back(g);
  return out;
}

ValidationReport validate_groupoid(const FiniteGroupoid& g) {
  ValidationReport report;
  const std::size_t no = g.object_count(), na = g.arrow_count();
  for (std::size_t a = 0; a < na; ++a)
    if (g.src(a) >= no || g.tgt(a) >= no)
      report.add_structural("dangling object in arrow", {g.arrow_name(a)});
  for (std::size_t h = 0; h < na; ++h)
    for (std::size_t a = 0; a < na; ++a) {
      const std::size_t r = g.comp(h, a);
      if (r != kNone && r >= na)
        report.add_structural("dangling arrow in composition", {g.arrow_name(h), g.arrow_name(a)});
    }
  for (std::size_t x = 0; x < no; ++x)
    if (g.ident(x) >= na) report.add_structural("missing identity", {g.object_name(x)});
  for (std::size_t a = 0; a < na; ++a)
    if (g.inv(a) >= na) report.add_structural("missing inverse", {g.arrow_name(a)});
  if (!report.structurally_sound()) return report;

  auto name = [&](std::size_t a) { return g.arrow_name(a); };

  report.begin_check("composition domain");
  report.begin_check("composition endpoints");
  for (std::size_t h = 0; h < na; ++h)
    for (std::size_t a = 0; a < na; ++a) {
      const bool composable = g.tgt(a) == g.src(h);
      const std::size_t r = g.comp(h, a);
      report.expect("composition domain", composable == (r != kNone), [&] { return Witness{name(h), name(a)}; });
      if (r != kNone && composable)
        report.expect("composition endpoints", g.src(r) == g.src(a) && g.tgt(r) == g.tgt(h),
                      [&] { return Witness{name(h), name(a)}; });
    }

  report.begin_check("identity endpoints");
  for (std::size_t x = 0; x < no; ++x)
    report.expect("identity endpoints", g.src(g.ident(x)) == x && g.tgt(g.ident(x)) == x,
                  [&] { return Witness{g.object_name(x)}; });

  auto defined = [&](std::size_t h, std::size_t a) {
    return g.tgt(a) == g.src(h) && g.comp(h, a) != kNone;
  };

  report.begin_check("associativity");
  for (std::size_t f = 0; f < na; ++f)
    for (std::size_t a = 0; a < na; ++a) {
      if (!defined(a, f)) continue;
      const std::size_t af = g.comp(a, f);
      for (std::size_t h = 0; h < na; ++h) {
        if (!defined(h, a)) continue;
        const std::size_t ha = g.comp(h, a);
        if (!defined(h, af) || !defined(ha, f)) continue;
        report.expect("associativity", g.comp(h, af) == g.comp(ha, f),
                      [&] { return Witness{name(f), name(a), name(h)}; });
      }
    }

  report.begin_check("identity axiom");
  for (std::size_t a = 0; a < na; ++a) {
    const std::size_t is = g.ident(g.src(a)), it = g.ident(g.tgt(a));
    const bool ok = defined(a, is) && defined(it, a) && g.comp(a, is) == a && g.comp(it, a) == a;
    report.expect("identity axiom", ok, [&] { return Witness{name(a)}; });
  }

  report.begin_check("inverse axiom");
  for (std::size_t a = 0; a < na; ++a) {
    const std::size_t b = g.inv(a);
    const bool ok = defined(b, a) && defined(a, b) && g.comp(b, a) == g.ident(g.src(a)) &&
                    g.comp(a, b) == g.ident(g.tgt(a));
    report.expect("inverse axiom", ok, [&] { return Witness{name(a)}; });
  }
  return report;
}

ValidationReport validate_hom(const GroupoidHom& f, const FiniteGroupoid& a, const FiniteGroupoid& b) {
  ValidationReport report;
  if (f.obj_map.size() != a.object_count() || f.arr_map.size() != a.arrow_count()) {
    report.add_structural("homomorphism tables have wrong shape");
    return report;
  }
  for (std::size_t x : f.obj_map)
    if (x >= b.object_count()) report.add_structural("object image out of range");
  for (std::size_t g : f.arr_map)
    if (g >= b.arrow_count()) report.add_structural("arrow image out of range");
  if (!report.structurally_sound()) return report;

  report.begin_check("preserves endpoints");
  for (std::size_t g = 0; g < a.arrow_count(); ++g)
    report.expect("preserves endpoints",
                  b.src(f.arr_map[g]) == f.obj_map[a.src(g)] &&
                      b.tgt(f.arr_map[g]) == f.obj_map[a.tgt(g)],
                  [&] { return Witness{a.arrow_name(g)}; });
  if (report.has_violation("preserves endpoints")) return report;

  report.begin_check("preserves identities");
  for (std::size_t x = 0; x < a.object_count(); ++x)
    report.expect("preserves identities", f.arr_map[a.ident(x)] == b.ident(f.obj_map[x]),
                  [&] { return Witness{a.object_name(x)}; });
  report.begin_check("preserves composition");
  for (std::size_t h = 0; h < a.arrow_count(); ++h)
    for (std::size_t g = 0; g < a.arrow_count(); ++g) {
      const std::size_t hg = a.comp(h, g);
      if (hg == kNone) continue;
      report.expect("preserves composition",
                    b.comp(f.arr_map[h], f.arr_map[g]) == f.arr_map[hg],
                    [&] { return Witness{a.arrow_name(h), a.arrow_name(g)}; });
    }
  return report;
}

bool is_invertible(const GroupoidHom& f, const FiniteGroupoid& a, const FiniteGroupoid& b) {
  if (a.object_count() != b.object_count() || a.arrow_count() != b.arrow_count()) return false;
  if (!validate_hom(f, a, b).ok()) return false;
  std::vector<bool> hit_o(b.object_count(), false), hit_a(b.arrow_count(), false);
  for (std::size_t x : f.obj_map) {
    if (hit_o[x]) return false;
    hit_o[x] = true;
  }
  for (std::size_t g : f.arr_map) {
    if (hit_a[g]) return false;
    hit_a[g] = true;
  }
  return true;
}

GroupoidHom identity_hom(const FiniteGroupoid& g) {
  GroupoidHom h;
  for (std::size_t x = 0; x < g.object_count(); ++x) h.obj_map.push_back(x);
  for (std::size_t a = 0; a < g.arrow_count(); ++a) h.arr_map.push_back(a);
  return h;
}

GroupoidHom compose_homs(const GroupoidHom& g, const GroupoidHom& f) {
  GroupoidHom h;
  for (std::size_t x : f.obj_map) h.obj_map.push_back(g.obj_map[x]);
  for (std::size_t a : f.arr_map) h.arr_map.push_back(g.arr_map[a]);
  return h;
}

std::vector<Component> connected_components(const FiniteGroupoid& g) {
  std::vector<std::size_t> label(g.object_count(), kNone);
  std::vector<Component> out;
  for (std::size_t root = 0; root < g.object_count(); ++root) {
    if (label[root] != kNone) continue;
    const std::size_t id = out.size();
    label[root] = id;
    std::deque<std::size_t> queue{root};
    while (!queue.empty()) {
      std::size_t x = queue.front();
      queue.pop_front();
      for (std::size_t a = 0; a < g.arrow_count(); ++a) {
        std::size_t y = kNone;
        if (g.src(a) == x) y = g.tgt(a);
        else if (g.tgt(a) == x) y = g.src(a);
        if (y != kNone && label[y] == kNone) {
          label[y] = id;
          queue.push_back(y);
        }
      }
    }
    Component c;
    c.root = root;
    for (std::size_t x = 0; x < g.object_count(); ++x)
      if (label[x] == id) c.objects.push_back(x);
    for (std::size_t x : c.objects) {
      auto arrows = g.hom(root, x);
      if (arrows.empty()) throw PreconditionError("groupoid component is not connected by arrows from its root");
      c.tree.push_back(x == root ? g.ident(root) : arrows.front());
    }
    for (std::size_t a = 0; a < g.arrow_count(); ++a)
      if (label[g.src(a)] == id) c.arrows.push_back(a);
    out.push_back(std::move(c));
  }
  return out;
}

Group vertex_group(const FiniteGroupoid& g, std::size_t x) {
  const std::vector<std::size_t> elems = g.hom(x, x);
  std::vector<std::size_t> pos(g.arrow_count(), kNone);
  for (std::size_t i = 0; i < elems.size(); ++i) pos[elems[i]] = i;
  std::vector<std::string> names;
  std::vector<std::size_t> table(elems.size() * elems.size());
  for (std::size_t a : elems) names.push_back(g.arrow_name(a));
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = 0; j < elems.size(); ++j) {
      const std::size_t r = g.comp(elems[j], elems[i]);
      if (r == kNone || pos[r] == kNone) throw PreconditionError("vertex group not closed");
      table[i * elems.size() + j] = pos[r];
    }
  return Group::from_table(std::move(names), std::move(table));
}

namespace {

// Builds the component part of an isomorphism given the root image and a
// vertex-group isomorphism. Returns false if the component of `b` is too small.
bool map_component(const FiniteGroupoid& a, const FiniteGroupoid& b, const Component& ca,
                   const Component& cb, std::size_t root_b, const std::vector<std::size_t>& phi,
                   GroupoidHom& out) {
  std::vector<std::size_t> targets{root_b};
  for (std::size_t y : cb.objects)
    if (y != root_b) targets.push_back(y);
  if (targets.size() != ca.objects.size()) return false;

  const std::vector<std::size_t> aut_a = a.hom(ca.root, ca.root);
  const std::vector<std::size_t> aut_b = b.hom(root_b, root_b);
  std::vector<std::size_t> pos_a(a.arrow_count(), kNone);
  for (std::size_t i = 0; i < aut_a.size(); ++i) pos_a[aut_a[i]] = i;

  std::vector<std::size_t> tree_index(a.object_count(), kNone);
  std::vector<std::size_t> tree_image(a.object_count(), kNone);
  for (std::size_t i = 0; i < ca.objects.size(); ++i) {
    const std::size_t x = ca.objects[i];
    tree_index[x] = ca.tree[i];
    out.obj_map[x] = targets[i];
    tree_image[x] = i == 0 ? b.ident(root_b) : b.hom(root_b, targets[i]).front();
  }
  for (std::size_t g : ca.arrows) {
    const std::size_t x = a.src(g), y = a.tgt(g);
    // w = tree_y^-1 . g . tree_x lives in Aut(root)
    const std::size_t w = a.then(a.then(tree_index[x], g), a.inv(tree_index[y]));
    const std::size_t fw = aut_b[phi[pos_a[w]]];
    out.arr_map[g] = b.then(b.then(b.inv(tree_image[x]), fw), tree_image[y]);
  }
  return true;
}

}  // namespace

std::optional<GroupoidHom> find_isomorphism(const FiniteGroupoid& a, const FiniteGroupoid& b) {
  if (a.object_count() != b.object_count() || a.arrow_count() != b.arrow_count())
    return std::nullopt;
  const auto comps_a = connected_components(a);
  const auto comps_b = connected_components(b);
  if (comps_a.size() != comps_b.size()) return std::nullopt;

  GroupoidHom hom;
  hom.obj_map.assign(a.object_count(), kNone);
  hom.arr_map.assign(a.arrow_count(), kNone);
  std::vector<bool> used(comps_b.size(), false);

  std::function<bool(std::size_t)> match = [&](std::size_t i) -> bool {
    if (i == comps_a.size()) return true;
    const Component& ca = comps_a[i];
    const Group ga = vertex_group(a, ca.root);
    for (std::size_t j = 0; j < comps_b.size(); ++j) {
      const Component& cb = comps_b[j];
      if (used[j] || cb.objects.size() != ca.objects.size() ||
          cb.arrows.size() != ca.arrows.size())
        continue;
      bool component_matched = false;
      for (std::size_t root_b : cb.objects) {
        const Group gb = vertex_group(b, root_b);
        auto phi = find_group_isomorphism(ga, gb);
        if (!phi) continue;
        if (!map_component(a, b, ca, cb, root_b, *phi, hom)) continue;
        component_matched = true;
        break;
      }
      if (!component_matched) continue;
      used[j] = true;
      if (match(i + 1)) return true;
      used[j] = false;
    }
    return false;
  };

  if (!match(0)) return std::nullopt;
  if (!is_invertible(hom, a, b))
    throw InternalInconsistency("isomorphism search produced a non-invertible map");
  return hom;
}

bool is_natural(const NatTransform& eta, const GroupoidHom& f, const GroupoidHom& g,
                const FiniteGroupoid& a, const FiniteGroupoid& b) {
  if (eta.component.size() != a.object_count()) return false;
  for (std::size_t x = 0; x < a.object_count(); ++x) {
    const std::size_t c = eta.component[x];
    if (c >= b.arrow_count() || b.src(c) != f.obj_map[x] || b.tgt(c) != g.obj_map[x]) return false;
  }
  for (std::size_t h = 0; h < a.arrow_count(); ++h) {
    const std::size_t x = a.src(h), y = a.tgt(h);
    if (b.comp(g.arr_map[h], eta.component[x]) != b.comp(eta.component[y], f.arr_map[h]))
      return false;
  }
  return true;
}

std::optional<NatTransform> find_natural_isomorphism(const GroupoidHom& f, const GroupoidHom& g,
                                                     const FiniteGroupoid& a,
                                                     const FiniteGroupoid& b) {
  NatTransform eta;
  eta.component.assign(a.object_count(), kNone);
  for (const Component& c : connected_components(a)) {
    bool found = false;
    for (std::size_t cand : b.hom(f.obj_map[c.root], g.obj_map[c.root])) {
      for (std::size_t i = 0; i < c.objects.size(); ++i) {
        const std::size_t t = c.tree[i];
        // eta_x = G(t) . eta_root . F(t)^-1
        eta.component[c.objects[i]] =
            b.then(b.then(b.inv(f.arr_map[t]), cand), g.arr_map[t]);
      }
      bool ok = true;
      for (std::size_t h : c.arrows) {
        const std::size_t x = a.src(h), y = a.tgt(h);
        if (b.comp(g.arr_map[h], eta.component[x]) != b.comp(eta.component[y], f.arr_map[h])) {
          ok = false;
          break;
        }
      }
      if (ok) {
        found = true;
        break;
      }
    }
    if (!found) return std::nullopt;
  }
  return eta;
}

FiniteGroupoid delooping(const Group& g, std::string object) {
  const std::size_t n = g.order();
  std::vector<ArrowRecord> arrows;
  for (std::size_t i = 0; i < n; ++i) arrows.push_back({g.name(i), 0, 0});
  std::vector<std::size_t> comp(n * n), inv(n);
  for (std::size_t h = 0; h < n; ++h)
    for (std::size_t a = 0; a < n; ++a) comp[h * n + a] = g.mul(a, h);
  for (std::size_t i = 0; i < n; ++i) inv[i] = g.inverse(i);
  return FiniteGroupoid({std::move(object)}, std::move(arrows), std::move(comp), {g.unit()},
                        std::move(inv));
}

FiniteGroupoid discrete_groupoid(const std::vector<std::string>& objects) {
  const std::size_t n = objects.size();
  std::vector<ArrowRecord> arrows;
  std::vector<std::size_t> comp(n * n, kNone), ident(n), inv(n);
  for (std::size_t i = 0; i < n; ++i) {
    arrows.push_back({"id_" + objects[i], i, i});
    comp[i * n + i] = i;
    ident[i] = i;
    inv[i] = i;
  }
  return FiniteGroupoid(objects, std::move(arrows), std::move(comp), std::move(ident), std::move(inv));
}

FiniteGroupoid codiscrete_groupoid(const std::vector<std::string>& objects) {
  const std::size_t n = objects.size(), m = n * n;
  std::vector<ArrowRecord> arrows;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) arrows.push_back({objects[x] + "->" + objects[y], x, y});
  std::vector<std::size_t> comp(m * m, kNone), ident(n), inv(m);
  for (std::size_t g = 0; g < m; ++g)
    for (std::size_t h = 0; h < m; ++h)
      if (arrows[g].tgt == arrows[h].src) comp[h * m + g] = arrows[g].src * n + arrows[h].tgt;
  for (std::size_t x = 0; x < n; ++x) ident[x] = x * n + x;
  for (std::size_t g = 0; g < m; ++g) inv[g] = arrows[g].tgt * n + arrows[g].src;
  return FiniteGroupoid(objects, std::move(arrows), std::move(comp), std::move(ident), std::move(inv));
}

std::pair<FiniteGroupoid, GroupoidHom> full_subgroupoid(const FiniteGroupoid& g,
                                                        const std::vector<std::size_t>& objects) {
  std::vector<std::size_t> opos(g.object_count(), kNone);
  for (std::size_t i = 0; i < objects.size(); ++i) opos[objects[i]] = i;
  std::vector<std::size_t> arrows;
  std::vector<std::size_t> apos(g.arrow_count(), kNone);
  for (std::size_t a = 0; a < g.arrow_count(); ++a)
    if (opos[g.src(a)] != kNone && opos[g.tgt(a)] != kNone) {
      apos[a] = arrows.size();
      arrows.push_back(a);
    }
  const std::size_t m = arrows.size();
  std::vector<std::string> onames;
  for (std::size_t x : objects) onames.push_back(g.object_name(x));
  std::vector<ArrowRecord> records;
  for (std::size_t a : arrows) records.push_back({g.arrow_name(a), opos[g.src(a)], opos[g.tgt(a)]});
  std::vector<std::size_t> comp(m * m, kNone), ident, inv;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const std::size_t r = g.comp(arrows[i], arrows[j]);
      if (r != kNone) comp[i * m + j] = apos[r];
    }
  for (std::size_t x : objects) ident.push_back(apos[g.ident(x)]);
  for (std::size_t a : arrows) inv.push_back(apos[g.inv(a)]);
  GroupoidHom inclusion{objects, arrows};
  return {FiniteGroupoid(std::move(onames), std::move(records), std::move(comp), std::move(ident),
                         std::move(inv)),
          std::move(inclusion)};
}

FiniteGroupoid relabel(const FiniteGroupoid& g, const std::vector<std::size_t>& perm_obj,
                       const std::vector<std::size_t>& perm_arr, const std::string& prefix) {
  const std::size_t no = g.object_count(), na = g.arrow_count();
  std::vector<std::string> objects(no);
  std::vector<ArrowRecord> arrows(na);
  for (std::size_t x = 0; x < no; ++x) objects[perm_obj[x]] = prefix + g.object_name(x);
  for (std::size_t a = 0; a < na; ++a)
    arrows[perm_arr[a]] = {prefix + g.arrow_name(a), perm_obj[g.src(a)], perm_obj[g.tgt(a)]};
  std::vector<std::size_t> comp(na * na, kNone), ident(no), inv(na);
  for (std::size_t h = 0; h < na; ++h)
    for (std::size_t a = 0; a < na; ++a) {
      const std::size_t r = g.comp(h, a);
      if (r != kNone) comp[perm_arr[h] * na + perm_arr[a]] = perm_arr[r];
    }
  for (std::size_t x = 0; x < no; ++x) ident[perm_obj[x]] = perm_arr[g.ident(x)];
  for (std::size_t a = 0; a < na; ++a) inv[perm_arr[a]] = perm_arr[g.inv(a)];
  return FiniteGroupoid(std::move(objects), std::move(arrows), std::move(comp), std::move(ident),
                        std::move(inv));
}

}  // namespace twogroups
