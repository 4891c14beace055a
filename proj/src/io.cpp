#include "twogroups/io.hpp"

#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "twogroups/presentation.hpp"

namespace twogroups::io {

namespace {

class Names {
 public:
  Names(const std::vector<std::string>& names, std::string what) : what_(std::move(what)) {
    for (std::size_t i = 0; i < names.size(); ++i)
      if (!index_.emplace(names[i], i).second)
        throw StructuralError("duplicate " + what_ + " '" + names[i] + "'");
  }
  std::size_t operator()(const Json& j) const {
    if (!j.is_string()) throw StructuralError(what_ + " reference must be a string");
    const auto it = index_.find(j.get<std::string>());
    if (it == index_.end()) throw StructuralError("unknown " + what_ + " '" + j.get<std::string>() + "'");
    return it->second;
  }

 private:
  std::string what_;
  std::map<std::string, std::size_t> index_;
};

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw StructuralError(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::vector<std::string> strings(const Json& j, const char* what) {
  if (!j.is_array()) throw StructuralError(std::string(what) + " must be an array");
  std::vector<std::string> out;
  for (const Json& x : j) {
    if (!x.is_string()) throw StructuralError(std::string(what) + " entries must be strings");
    out.push_back(x.get<std::string>());
  }
  return out;
}

const Json& tuple(const Json& j, std::size_t n, const char* what) {
  if (!j.is_array() || j.size() != n)
    throw StructuralError(std::string(what) + " entries must have " + std::to_string(n) + " components");
  return j;
}

// {name: name} into a table indexed by the key.
std::vector<std::size_t> read_map(const Json& j, const Names& keys, const Names& values, std::size_t n,
                                  const char* what) {
  if (!j.is_object()) throw StructuralError(std::string(what) + " must be an object");
  std::vector<std::size_t> out(n, kNone);
  for (const auto& [k, v] : j.items()) out[keys(Json(k))] = values(v);
  return out;
}

std::string name_or(const std::vector<std::string>& names, std::size_t i) {
  return i == kNone ? std::string() : names[i];
}

std::vector<std::string> arrow_names(const FiniteGroupoid& g) {
  std::vector<std::string> out;
  for (const auto& a : g.arrows()) out.push_back(a.id);
  return out;
}

template <typename T>
std::vector<T> aligned(const Json& j, std::size_t n, const char* what) {
  if (!j.is_array() || j.size() != n)
    throw StructuralError(std::string(what) + " must list " + std::to_string(n) + " entries");
  return j.get<std::vector<T>>();
}

}  // namespace

Group read_group(const Json& j) {
  const auto names = strings(field(j, "elements"), "elements");
  const Names idx(names, "element");
  const Json& rows = field(j, "table");
  if (!rows.is_array() || rows.size() != names.size())
    throw StructuralError("group table must have one row per element");
  std::vector<std::size_t> table;
  for (const Json& row : rows) {
    if (!row.is_array() || row.size() != names.size())
      throw StructuralError("group table must have one column per element");
    for (const Json& x : row) table.push_back(idx(x));
  }
  return Group::from_table(names, std::move(table));
}

Json write_group(const Group& g) {
  Json rows = Json::array();
  for (std::size_t a = 0; a < g.order(); ++a) {
    Json row = Json::array();
    for (std::size_t b = 0; b < g.order(); ++b) row.push_back(g.name(g.mul(a, b)));
    rows.push_back(std::move(row));
  }
  return Json{{"elements", g.names()}, {"table", std::move(rows)}};
}

FiniteGroupoid read_groupoid(const Json& j) {
  const auto objects = strings(field(j, "objects"), "objects");
  const Names obj(objects, "object");
  std::vector<ArrowRecord> arrows;
  std::vector<std::string> ids;
  const Json& arr = field(j, "arrows");
  if (!arr.is_array()) throw StructuralError("arrows must be an array");
  for (const Json& a : arr) {
    ArrowRecord r;
    r.id = field(a, "id").get<std::string>();
    r.src = obj(field(a, "src"));
    r.tgt = obj(field(a, "tgt"));
    ids.push_back(r.id);
    arrows.push_back(std::move(r));
  }
  const Names arw(ids, "arrow");
  const std::size_t m = arrows.size();
  std::vector<std::size_t> comp(m * m, kNone);
  const Json& c = field(j, "comp");
  if (!c.is_array()) throw StructuralError("comp must be an array");
  for (const Json& e : c) {
    tuple(e, 3, "comp");
    const std::size_t h = arw(e[0]), g = arw(e[1]);
    if (comp[h * m + g] != kNone) throw StructuralError("comp lists (" + ids[h] + "," + ids[g] + ") twice");
    comp[h * m + g] = arw(e[2]);
  }
  auto ident = read_map(field(j, "ident"), obj, arw, objects.size(), "ident");
  auto inv = read_map(field(j, "inv"), arw, arw, m, "inv");
  return FiniteGroupoid(objects, std::move(arrows), std::move(comp), std::move(ident), std::move(inv));
}

Json write_groupoid(const FiniteGroupoid& g) {
  const auto ids = arrow_names(g);
  Json arrows = Json::array();
  for (const auto& a : g.arrows())
    arrows.push_back({{"id", a.id}, {"src", g.object_name(a.src)}, {"tgt", g.object_name(a.tgt)}});
  Json comp = Json::array();
  for (std::size_t h = 0; h < g.arrow_count(); ++h)
    for (std::size_t k = 0; k < g.arrow_count(); ++k)
      if (g.comp(h, k) != kNone) comp.push_back({ids[h], ids[k], ids[g.comp(h, k)]});
  Json ident = Json::object(), inv = Json::object();
  for (std::size_t x = 0; x < g.object_count(); ++x) ident[g.object_name(x)] = name_or(ids, g.ident(x));
  for (std::size_t a = 0; a < g.arrow_count(); ++a) inv[ids[a]] = name_or(ids, g.inv(a));
  return Json{{"objects", g.objects()}, {"arrows", std::move(arrows)}, {"comp", std::move(comp)},
              {"ident", std::move(ident)}, {"inv", std::move(inv)}};
}

CoherentTwoGroup read_two_group(const Json& j) {
  CoherentTwoGroup t;
  t.base = read_groupoid(j);
  const std::size_t n = t.base.object_count(), m = t.base.arrow_count();
  const Names obj(t.base.objects(), "object");
  const Names arw(arrow_names(t.base), "arrow");
  t.tensor_obj.assign(n * n, kNone);
  for (const Json& e : field(j, "tensor_obj")) {
    tuple(e, 3, "tensor_obj");
    t.tensor_obj[obj(e[0]) * n + obj(e[1])] = obj(e[2]);
  }
  t.tensor_arr.assign(m * m, kNone);
  for (const Json& e : field(j, "tensor_arr")) {
    tuple(e, 3, "tensor_arr");
    t.tensor_arr[arw(e[0]) * m + arw(e[1])] = arw(e[2]);
  }
  t.unit = obj(field(j, "unit"));
  t.assoc.assign(n * n * n, kNone);
  for (const Json& e : field(j, "assoc")) {
    tuple(e, 4, "assoc");
    t.assoc[(obj(e[0]) * n + obj(e[1])) * n + obj(e[2])] = arw(e[3]);
  }
  t.lunit = read_map(field(j, "lunit"), obj, arw, n, "lunit");
  t.runit = read_map(field(j, "runit"), obj, arw, n, "runit");
  t.bar = read_map(field(j, "bar"), obj, obj, n, "bar");
  t.adj_d = read_map(field(j, "d"), obj, arw, n, "d");
  t.adj_e = read_map(field(j, "e"), obj, arw, n, "e");
  return t;
}

Json write_two_group(const CoherentTwoGroup& t) {
  Json j = write_groupoid(t.base);
  const auto& objs = t.base.objects();
  const auto ids = arrow_names(t.base);
  const std::size_t n = objs.size(), m = ids.size();
  Json to = Json::array(), ta = Json::array(), as = Json::array();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) to.push_back({objs[x], objs[y], name_or(objs, t.tobj(x, y))});
  for (std::size_t g = 0; g < m; ++g)
    for (std::size_t h = 0; h < m; ++h) ta.push_back({ids[g], ids[h], name_or(ids, t.tarr(g, h))});
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) as.push_back({objs[x], objs[y], objs[z], name_or(ids, t.a(x, y, z))});
  auto per_object = [&](const std::vector<std::size_t>& v, const std::vector<std::string>& names) {
    Json o = Json::object();
    for (std::size_t x = 0; x < n; ++x) o[objs[x]] = name_or(names, v[x]);
    return o;
  };
  j["tensor_obj"] = std::move(to);
  j["tensor_arr"] = std::move(ta);
  j["unit"] = objs[t.unit];
  j["assoc"] = std::move(as);
  j["lunit"] = per_object(t.lunit, ids);
  j["runit"] = per_object(t.runit, ids);
  j["bar"] = per_object(t.bar, objs);
  j["d"] = per_object(t.adj_d, ids);
  j["e"] = per_object(t.adj_e, ids);
  return j;
}

CrossedModule read_crossed_module(const Json& j) {
  CrossedModule x;
  x.gamma = read_group(field(j, "gamma"));
  x.g0 = read_group(field(j, "g0"));
  const Names gam(x.gamma.names(), "gamma element");
  const Names g0(x.g0.names(), "g0 element");
  x.partial = read_map(field(j, "partial"), gam, g0, x.gamma.order(), "partial");
  if (j.contains("trivial_action") && j.at("trivial_action").get<bool>()) {
    if (j.contains("action")) throw StructuralError("both action and trivial_action given");
    x.action = trivial_action(x.gamma, x.g0);
  } else {
    x.action.assign(x.g0.order() * x.gamma.order(), kNone);
    for (const Json& e : field(j, "action")) {
      tuple(e, 3, "action");
      x.action[g0(e[0]) * x.gamma.order() + gam(e[1])] = gam(e[2]);
    }
  }
  for (std::size_t v : x.partial)
    if (v == kNone) throw StructuralError("partial is not total");
  for (std::size_t v : x.action)
    if (v == kNone) throw StructuralError("action is not total");
  return x;
}

Json write_crossed_module(const CrossedModule& x) {
  Json partial = Json::object();
  for (std::size_t g = 0; g < x.gamma.order(); ++g) partial[x.gamma.name(g)] = x.g0.name(x.partial[g]);
  Json j{{"gamma", write_group(x.gamma)}, {"g0", write_group(x.g0)}, {"partial", std::move(partial)}};
  if (x.action == trivial_action(x.gamma, x.g0)) {
    j["trivial_action"] = true;
  } else {
    Json action = Json::array();
    for (std::size_t a = 0; a < x.g0.order(); ++a)
      for (std::size_t g = 0; g < x.gamma.order(); ++g)
        action.push_back({x.g0.name(a), x.gamma.name(g), x.gamma.name(x.act(a, g))});
    j["action"] = std::move(action);
  }
  return j;
}

TruncatedSimplicialSet read_simplicial(const Json& j) {
  TruncatedSimplicialSet x;
  const std::size_t depth = field(j, "depth").get<std::size_t>();
  const Json& layers = field(j, "layers");
  if (!layers.is_array() || layers.size() != depth + 1)
    throw StructuralError("layers must list depth + 1 layers");
  std::vector<Names> idx;
  for (const Json& l : layers) {
    x.layers.push_back(strings(l, "layer"));
    idx.emplace_back(x.layers.back(), "simplex of layer " + std::to_string(x.layers.size() - 1));
  }
  const Json& faces = field(j, "faces");
  const Json& degens = field(j, "degeneracies");
  x.faces.resize(depth + 1);
  x.degeneracies.resize(depth + 1);
  for (std::size_t n = 1; n <= depth; ++n) {
    const Json& fn = field(faces, std::to_string(n).c_str());
    if (!fn.is_array() || fn.size() != n + 1) throw StructuralError("faces of layer " + std::to_string(n));
    for (const Json& fi : fn) {
      if (!fi.is_array() || fi.size() != x.layers[n].size())
        throw StructuralError("face map of layer " + std::to_string(n) + " is not aligned");
      std::vector<std::size_t> map;
      for (const Json& y : fi) map.push_back(idx[n - 1](y));
      x.faces[n].push_back(std::move(map));
    }
  }
  for (std::size_t n = 0; n < depth; ++n) {
    const Json& sn = field(degens, std::to_string(n).c_str());
    if (!sn.is_array() || sn.size() != n + 1) throw StructuralError("degeneracies of layer " + std::to_string(n));
    for (const Json& si : sn) {
      if (!si.is_array() || si.size() != x.layers[n].size())
        throw StructuralError("degeneracy map of layer " + std::to_string(n) + " is not aligned");
      std::vector<std::size_t> map;
      for (const Json& y : si) map.push_back(idx[n + 1](y));
      x.degeneracies[n].push_back(std::move(map));
    }
  }
  return x;
}

Json write_simplicial(const TruncatedSimplicialSet& x) {
  Json faces = Json::object(), degens = Json::object();
  for (std::size_t n = 1; n <= x.depth(); ++n) {
    Json fn = Json::array();
    for (const auto& map : x.faces[n]) {
      Json fi = Json::array();
      for (std::size_t y : map) fi.push_back(x.layers[n - 1][y]);
      fn.push_back(std::move(fi));
    }
    faces[std::to_string(n)] = std::move(fn);
  }
  for (std::size_t n = 0; n < x.depth(); ++n) {
    Json sn = Json::array();
    for (const auto& map : x.degeneracies[n]) {
      Json si = Json::array();
      for (std::size_t y : map) si.push_back(x.layers[n + 1][y]);
      sn.push_back(std::move(si));
    }
    degens[std::to_string(n)] = std::move(sn);
  }
  return Json{{"depth", x.depth()}, {"layers", x.layers}, {"faces", std::move(faces)},
              {"degeneracies", std::move(degens)}};
}

PartialGroup read_partial_group(const Json& j) {
  PartialGroup p;
  p.ambient = strings(field(j, "ambient"), "ambient");
  const Names amb(p.ambient, "ambient element");
  const auto v = strings(field(j, "carrier"), "carrier");
  const Names vi(v, "carrier element");
  for (const auto& name : v) p.carrier.push_back(amb(Json(name)));
  const std::size_t n = v.size();
  p.product.assign(n * n, kNone);
  for (const Json& e : field(j, "product")) {
    tuple(e, 3, "product");
    p.product[vi(e[0]) * n + vi(e[1])] = amb(e[2]);
  }
  p.inverse = read_map(field(j, "inverse"), vi, vi, n, "inverse");
  p.unit = vi(field(j, "unit"));
  return p;
}

Json write_partial_group(const PartialGroup& p) {
  std::vector<std::string> carrier;
  for (std::size_t v = 0; v < p.size(); ++v) carrier.push_back(p.name(v));
  Json product = Json::array(), inverse = Json::object();
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = 0; b < p.size(); ++b)
      if (p.product[a * p.size() + b] != kNone)
        product.push_back({carrier[a], carrier[b], p.ambient[p.product[a * p.size() + b]]});
  for (std::size_t a = 0; a < p.size(); ++a) inverse[carrier[a]] = name_or(carrier, p.inverse[a]);
  return Json{{"ambient", p.ambient}, {"carrier", carrier}, {"product", std::move(product)},
              {"inverse", std::move(inverse)}, {"unit", carrier[p.unit]}};
}

Bibundle read_bibundle(const Json& j) {
  Bibundle b;
  b.left = read_groupoid(field(j, "left"));
  b.right = read_groupoid(field(j, "right"));
  b.total = strings(field(j, "total"), "total");
  const Names tot(b.total, "total element");
  const Names lo(b.left.objects(), "left object"), ro(b.right.objects(), "right object");
  const Names la(arrow_names(b.left), "left arrow"), ra(arrow_names(b.right), "right arrow");
  const std::size_t n = b.size();
  b.left_moment = read_map(field(j, "left_moment"), tot, lo, n, "left_moment");
  b.right_moment = read_map(field(j, "right_moment"), tot, ro, n, "right_moment");
  b.left_action.assign(b.left.arrow_count() * n, kNone);
  for (const Json& e : field(j, "left_action")) {
    tuple(e, 3, "left_action");
    b.left_action[la(e[0]) * n + tot(e[1])] = tot(e[2]);
  }
  b.right_action.assign(n * b.right.arrow_count(), kNone);
  for (const Json& e : field(j, "right_action")) {
    tuple(e, 3, "right_action");
    b.right_action[tot(e[0]) * b.right.arrow_count() + ra(e[1])] = tot(e[2]);
  }
  return b;
}

Json write_bibundle(const Bibundle& b) {
  Json lm = Json::object(), rm = Json::object(), la = Json::array(), ra = Json::array();
  for (std::size_t e = 0; e < b.size(); ++e) {
    lm[b.total[e]] = name_or(b.left.objects(), b.left_moment[e]);
    rm[b.total[e]] = name_or(b.right.objects(), b.right_moment[e]);
  }
  for (std::size_t k = 0; k < b.left.arrow_count(); ++k)
    for (std::size_t e = 0; e < b.size(); ++e)
      if (b.act_left(k, e) != kNone) la.push_back({b.left.arrow_name(k), b.total[e], b.total[b.act_left(k, e)]});
  for (std::size_t e = 0; e < b.size(); ++e)
    for (std::size_t k = 0; k < b.right.arrow_count(); ++k)
      if (b.act_right(e, k) != kNone)
        ra.push_back({b.total[e], b.right.arrow_name(k), b.total[b.act_right(e, k)]});
  return Json{{"left", write_groupoid(b.left)}, {"right", write_groupoid(b.right)}, {"total", b.total},
              {"left_moment", std::move(lm)}, {"right_moment", std::move(rm)},
              {"left_action", std::move(la)}, {"right_action", std::move(ra)}};
}

EquivariantComplex read_complex(const Json& j) {
  EquivariantComplex c;
  c.vertices = strings(field(j, "vertices"), "vertices");
  const Names vx(c.vertices, "vertex");
  std::vector<std::string> ids;
  for (const Json& e : field(j, "edges")) {
    ComplexEdge edge;
    edge.id = field(e, "id").get<std::string>();
    edge.src = vx(field(e, "src"));
    edge.tgt = vx(field(e, "tgt"));
    edge.label = e.contains("label") ? e.at("label").get<std::string>() : std::string();
    ids.push_back(edge.id);
    c.edges.push_back(std::move(edge));
  }
  const Names ex(ids, "edge");
  for (const Json& w : field(j, "cells2")) c.cells.push_back(parse_word(w.get<std::string>(), ids));
  c.gamma = read_group(field(j, "gamma"));
  const Names gx(c.gamma.names(), "gamma element");
  const Json& action = field(j, "action");
  const std::size_t ng = c.gamma.order();
  c.vertex_action.assign(ng * c.vertices.size(), kNone);
  c.edge_action.assign(ng * c.edges.size(), kNone);
  c.cell_action.assign(ng * c.cells.size(), kNone);
  for (const auto& [g, images] : field(action, "vertices").items()) {
    const std::size_t k = gx(Json(g));
    const auto v = aligned<std::string>(images, c.vertices.size(), "vertex action");
    for (std::size_t i = 0; i < v.size(); ++i) c.vertex_action[k * c.vertices.size() + i] = vx(Json(v[i]));
  }
  for (const auto& [g, images] : field(action, "edges").items()) {
    const std::size_t k = gx(Json(g));
    const auto v = aligned<std::string>(images, c.edges.size(), "edge action");
    for (std::size_t i = 0; i < v.size(); ++i) c.edge_action[k * c.edges.size() + i] = ex(Json(v[i]));
  }
  for (const auto& [g, images] : field(action, "cells").items()) {
    const std::size_t k = gx(Json(g));
    const auto v = aligned<std::size_t>(images, c.cells.size(), "cell action");
    for (std::size_t i = 0; i < v.size(); ++i) c.cell_action[k * c.cells.size() + i] = v[i];
  }
  c.simply_connected_asserted = j.value("simply_connected_asserted", false);
  if (j.contains("presentation")) {
    const Json& p = j.at("presentation");
    Presentation pres;
    pres.generators = strings(field(p, "generators"), "generators");
    for (const Json& r : field(p, "relators")) pres.relators.push_back(parse_word(r.get<std::string>(), pres.generators));
    const Names gen(pres.generators, "generator");
    c.generator_images = read_map(field(p, "images"), gen, gx, pres.generators.size(), "images");
    c.presentation = std::move(pres);
  }
  return c;
}

Json write_complex(const EquivariantComplex& c) {
  Json edges = Json::array();
  for (const auto& e : c.edges)
    edges.push_back({{"id", e.id}, {"src", c.vertices[e.src]}, {"tgt", c.vertices[e.tgt]}, {"label", e.label}});
  Json cells = Json::array();
  for (const auto& w : c.cells) cells.push_back(format_edge_word(c.edges, w));
  Json va = Json::object(), ea = Json::object(), ca = Json::object();
  for (std::size_t g = 0; g < c.gamma.order(); ++g) {
    Json v = Json::array(), e = Json::array(), k = Json::array();
    for (std::size_t i = 0; i < c.vertices.size(); ++i) v.push_back(c.vertices[c.act_vertex(g, i)]);
    for (std::size_t i = 0; i < c.edges.size(); ++i) e.push_back(c.edges[c.act_edge(g, i)].id);
    for (std::size_t i = 0; i < c.cells.size(); ++i) k.push_back(c.act_cell(g, i));
    va[c.gamma.name(g)] = std::move(v);
    ea[c.gamma.name(g)] = std::move(e);
    ca[c.gamma.name(g)] = std::move(k);
  }
  Json j{{"vertices", c.vertices},
         {"edges", std::move(edges)},
         {"cells2", std::move(cells)},
         {"gamma", write_group(c.gamma)},
         {"action", Json{{"vertices", std::move(va)}, {"edges", std::move(ea)}, {"cells", std::move(ca)}}},
         {"simply_connected_asserted", c.simply_connected_asserted}};
  if (c.presentation) {
    Json rel = Json::array(), images = Json::object();
    for (const Word& w : c.presentation->relators) rel.push_back(format_word(w, c.presentation->generators));
    for (std::size_t s = 0; s < c.presentation->generators.size(); ++s)
      images[c.presentation->generators[s]] = c.gamma.name(c.generator_images[s]);
    j["presentation"] = Json{{"generators", c.presentation->generators}, {"relators", std::move(rel)},
                             {"images", std::move(images)}};
  }
  return j;
}

Json write_report(const ValidationReport& r) {
  auto violation = [](const Violation& v) {
    Json j{{"axiom", v.axiom}, {"witness", v.witness}};
    if (!v.detail.empty()) j["detail"] = v.detail;
    return j;
  };
  Json structural = Json::array(), checks = Json::array(), violations = Json::array();
  for (const auto& v : r.structural()) structural.push_back(violation(v));
  for (const auto& c : r.checks())
    checks.push_back({{"name", c.name}, {"cases", c.cases}, {"failures", c.failures},
                      {"status", c.failures == 0 ? "PASS" : "FAIL"}});
  for (const auto& v : r.violations()) violations.push_back(violation(v));
  return Json{{"ok", r.ok()}, {"structural", std::move(structural)}, {"checks", std::move(checks)},
              {"violations", std::move(violations)}};
}

Json parse(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw StructuralError(std::string("JSON parse error: ") + e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw StructuralError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw StructuralError("cannot write " + path);
  out << content;
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string checksum_hex(std::string_view bytes) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(bytes)));
  return std::string("fnv1a64:") + buf;
}

}  // namespace twogroups::io
