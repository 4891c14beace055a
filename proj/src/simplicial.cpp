#include "twogroups/simplicial.hpp"

#include <array>
#include <functional>
#include <map>
#include <tuple>

namespace twogroups {

namespace {

using Key = std::vector<std::size_t>;

// A category-like structure with a partial path-order product; covers both
// groupoids and partial groups.
struct PartialCategory {
  std::vector<std::string> objects;
  std::vector<std::string> arrows;
  std::vector<std::size_t> src;
  std::vector<std::size_t> tgt;
  std::vector<std::size_t> ident;
  std::function<std::size_t(std::size_t, std::size_t)> mul;  // a then b, kNone if undefined
};

bool all_products_defined(const PartialCategory& c, const Key& t) {
  for (std::size_t i = 0; i < t.size(); ++i) {
    std::size_t acc = t[i];
    for (std::size_t j = i + 1; j < t.size(); ++j) {
      acc = c.mul(acc, t[j]);
      if (acc == kNone) return false;
    }
  }
  return true;
}

std::string string_name(const PartialCategory& c, const Key& t) {
  std::string s = "[";
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "|" : "") + c.arrows[t[i]];
  return s + "]";
}

TruncatedSimplicialSet build_nerve(const PartialCategory& c, std::size_t depth) {
  TruncatedSimplicialSet x;
  x.layers.resize(depth + 1);
  x.faces.resize(depth + 1);
  x.degeneracies.resize(depth + 1);
  std::vector<std::vector<Key>> strings(depth + 1);
  std::vector<std::map<Key, std::size_t>> index(depth + 1);

  x.layers[0] = c.objects;
  for (std::size_t n = 1; n <= depth; ++n) {
    if (n == 1) {
      for (std::size_t a = 0; a < c.arrows.size(); ++a) strings[1].push_back({a});
    } else {
      for (const Key& t : strings[n - 1])
        for (std::size_t a = 0; a < c.arrows.size(); ++a) {
          if (c.tgt[t.back()] != c.src[a]) continue;
          Key u = t;
          u.push_back(a);
          if (all_products_defined(c, u)) strings[n].push_back(std::move(u));
        }
    }
    for (std::size_t i = 0; i < strings[n].size(); ++i) {
      index[n][strings[n][i]] = i;
      x.layers[n].push_back(string_name(c, strings[n][i]));
    }
  }

  auto lookup = [&](std::size_t n, const Key& t) {
    auto it = index[n].find(t);
    if (it == index[n].end()) throw InternalInconsistency("nerve is not closed under faces");
    return it->second;
  };

  for (std::size_t n = 1; n <= depth; ++n) {
    x.faces[n].assign(n + 1, {});
    for (const Key& t : strings[n]) {
      if (n == 1) {
        x.faces[1][0].push_back(c.tgt[t[0]]);
        x.faces[1][1].push_back(c.src[t[0]]);
        continue;
      }
      for (std::size_t i = 0; i <= n; ++i) {
        Key f;
        if (i == 0) {
          f.assign(t.begin() + 1, t.end());
        } else if (i == n) {
          f.assign(t.begin(), t.end() - 1);
        } else {
          f.assign(t.begin(), t.begin() + (i - 1));
          f.push_back(c.mul(t[i - 1], t[i]));
          f.insert(f.end(), t.begin() + (i + 1), t.end());
        }
        x.faces[n][i].push_back(lookup(n - 1, f));
      }
    }
  }

  for (std::size_t n = 0; n < depth; ++n) {
    x.degeneracies[n].assign(n + 1, {});
    if (n == 0) {
      for (std::size_t o = 0; o < c.objects.size(); ++o)
        x.degeneracies[0][0].push_back(lookup(1, {c.ident[o]}));
      continue;
    }
    for (const Key& t : strings[n])
      for (std::size_t i = 0; i <= n; ++i) {
        const std::size_t obj = i < n ? c.src[t[i]] : c.tgt[t[n - 1]];
        Key u = t;
        u.insert(u.begin() + i, c.ident[obj]);
        x.degeneracies[n][i].push_back(lookup(n + 1, u));
      }
  }
  return x;
}

}  // namespace

ValidationReport validate_simplicial(const TruncatedSimplicialSet& x) {
  ValidationReport r;
  const std::size_t N = x.depth();
  if (x.layers.empty() || x.faces.size() != N + 1 || x.degeneracies.size() != N + 1) {
    r.add_structural("table shape");
    return r;
  }
  for (std::size_t n = 1; n <= N; ++n) {
    if (x.faces[n].size() != n + 1) {
      r.add_structural("face count", {std::to_string(n)});
      continue;
    }
    for (std::size_t i = 0; i <= n; ++i) {
      if (x.faces[n][i].size() != x.count(n)) {
        r.add_structural("face table shape", {std::to_string(n), std::to_string(i)});
        continue;
      }
      for (std::size_t v : x.faces[n][i])
        if (v >= x.count(n - 1)) r.add_structural("face value out of range", {std::to_string(n), std::to_string(i)});
    }
  }
  for (std::size_t n = 0; n < N; ++n) {
    if (x.degeneracies[n].size() != n + 1) {
      r.add_structural("degeneracy count", {std::to_string(n)});
      continue;
    }
    for (std::size_t i = 0; i <= n; ++i) {
      if (x.degeneracies[n][i].size() != x.count(n)) {
        r.add_structural("degeneracy table shape", {std::to_string(n), std::to_string(i)});
        continue;
      }
      for (std::size_t v : x.degeneracies[n][i])
        if (v >= x.count(n + 1))
          r.add_structural("degeneracy value out of range", {std::to_string(n), std::to_string(i)});
    }
  }
  if (!r.structurally_sound()) return r;

  auto w = [&](std::size_t n, std::size_t e, std::size_t i, std::size_t j) {
    return std::vector<std::string>{x.layers[n][e], std::to_string(i), std::to_string(j)};
  };

  r.begin_check("face-face");
  for (std::size_t n = 2; n <= N; ++n)
    for (std::size_t e = 0; e < x.count(n); ++e)
      for (std::size_t j = 1; j <= n; ++j)
        for (std::size_t i = 0; i < j; ++i)
          r.expect("face-face",
                   x.face(n - 1, i, x.face(n, j, e)) == x.face(n - 1, j - 1, x.face(n, i, e)), [&] { return w(n, e, i, j); });

  r.begin_check("face-degeneracy");
  for (std::size_t n = 0; n < N; ++n)
    for (std::size_t e = 0; e < x.count(n); ++e)
      for (std::size_t j = 0; j <= n; ++j)
        for (std::size_t i = 0; i <= n + 1; ++i) {
          const std::size_t lhs = x.face(n + 1, i, x.degen(n, j, e));
          std::size_t rhs;
          if (i == j || i == j + 1) rhs = e;
          else if (i < j) rhs = x.degen(n - 1, j - 1, x.face(n, i, e));
          else rhs = x.degen(n - 1, j, x.face(n, i - 1, e));
          r.expect("face-degeneracy", lhs == rhs, [&] { return w(n, e, i, j); });
        }

  r.begin_check("degeneracy-degeneracy");
  for (std::size_t n = 0; n + 2 <= N; ++n)
    for (std::size_t e = 0; e < x.count(n); ++e)
      for (std::size_t j = 0; j <= n; ++j)
        for (std::size_t i = 0; i <= j; ++i)
          r.expect("degeneracy-degeneracy",
                   x.degen(n + 1, i, x.degen(n, j, e)) == x.degen(n + 1, j + 1, x.degen(n, i, e)), [&] { return w(n, e, i, j); });
  return r;
}

std::size_t PartialGroup::mul_in_v(std::size_t a, std::size_t b) const {
  const std::size_t u = product[a * size() + b];
  if (u == kNone) return kNone;
  for (std::size_t v = 0; v < size(); ++v)
    if (carrier[v] == u) return v;
  return kNone;
}

ValidationReport validate_partial_group(const PartialGroup& p) {
  ValidationReport r;
  const std::size_t n = p.size();
  if (p.product.size() != n * n || p.inverse.size() != n || p.unit >= n) {
    r.add_structural("table shape");
    return r;
  }
  for (std::size_t c : p.carrier)
    if (c >= p.ambient.size()) r.add_structural("carrier element outside the ambient set");
  for (std::size_t v : p.product)
    if (v != kNone && v >= p.ambient.size()) r.add_structural("product outside the ambient set");
  for (std::size_t v : p.inverse)
    if (v >= n) r.add_structural("inverse out of range");
  if (!r.structurally_sound()) return r;

  r.begin_check("unit");
  r.begin_check("inverse");
  for (std::size_t a = 0; a < n; ++a) {
    r.expect("unit", p.mul_in_v(p.unit, a) == a && p.mul_in_v(a, p.unit) == a, [&] { return Witness{p.name(a)}; });
    r.expect("inverse",
             p.mul_in_v(a, p.inverse[a]) == p.unit && p.mul_in_v(p.inverse[a], a) == p.unit,
             [&] { return Witness{p.name(a)}; });
  }
  r.begin_check("associativity");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        const std::size_t ab = p.mul_in_v(a, b), bc = p.mul_in_v(b, c);
        if (ab == kNone || bc == kNone) continue;
        const std::size_t l = p.product[ab * n + c], rr = p.product[a * n + bc];
        if (l == kNone || rr == kNone) continue;
        r.expect("associativity", l == rr, [&] { return Witness{p.name(a), p.name(b), p.name(c)}; });
      }
  return r;
}

PartialGroup truncated_integers(std::size_t k) {
  const long long K = static_cast<long long>(k);
  PartialGroup p;
  for (long long v = -2 * K; v <= 2 * K; ++v) p.ambient.push_back(std::to_string(v));
  auto u_index = [&](long long v) { return static_cast<std::size_t>(v + 2 * K); };
  std::vector<long long> values{0};
  for (long long v = 1; v <= K; ++v) {
    values.push_back(v);
    values.push_back(-v);
  }
  for (long long v : values) p.carrier.push_back(u_index(v));
  const std::size_t n = values.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) p.product.push_back(u_index(values[a] + values[b]));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (values[b] == -values[a]) p.inverse.push_back(b);
  p.unit = 0;
  return p;
}

PartialGroup as_partial_group(const Group& g) {
  PartialGroup p;
  p.ambient = g.names();
  for (std::size_t a = 0; a < g.order(); ++a) {
    p.carrier.push_back(a);
    p.inverse.push_back(g.inverse(a));
  }
  p.product = g.table();
  p.unit = g.unit();
  return p;
}

TruncatedSimplicialSet nerve_of_groupoid(const FiniteGroupoid& g, std::size_t depth) {
  PartialCategory c;
  c.objects = g.objects();
  for (std::size_t a = 0; a < g.arrow_count(); ++a) {
    c.arrows.push_back(g.arrow_name(a));
    c.src.push_back(g.src(a));
    c.tgt.push_back(g.tgt(a));
  }
  c.ident = g.ident_table();
  c.mul = [&g](std::size_t a, std::size_t b) {
    return g.tgt(a) == g.src(b) ? g.comp(b, a) : kNone;
  };
  return build_nerve(c, depth);
}

TruncatedSimplicialSet nerve_of_partial_group(const PartialGroup& p, std::size_t depth) {
  PartialCategory c;
  c.objects = {"*"};
  for (std::size_t v = 0; v < p.size(); ++v) {
    c.arrows.push_back(p.name(v));
    c.src.push_back(0);
    c.tgt.push_back(0);
  }
  c.ident = {p.unit};
  c.mul = [&p](std::size_t a, std::size_t b) { return p.mul_in_v(a, b); };
  return build_nerve(c, depth);
}

TruncatedSimplicialSet two_group_nerve(const StrictTwoGroup& s) {
  const FiniteGroupoid& G = s.base;
  const Group& O = s.objects;
  const Group& A = s.arrows;
  const std::size_t no = G.object_count(), na = G.arrow_count();
  const std::size_t e = O.unit();
  if (na * na * na > kMaxBarNerveSimplices)
    throw PreconditionError("bar nerve would have " + std::to_string(na * na * na) + " 3-simplices");

  TruncatedSimplicialSet x;
  x.layers.resize(4);
  x.faces.resize(4);
  x.degeneracies.resize(4);
  x.layers[0] = {"*"};
  x.layers[1] = G.objects();

  using Cell = std::tuple<std::size_t, std::size_t, std::size_t>;  // x01, x12, g
  std::vector<Cell> cells;
  std::map<Cell, std::size_t> cell_index;
  for (std::size_t a = 0; a < no; ++a)
    for (std::size_t b = 0; b < no; ++b)
      for (std::size_t g = 0; g < na; ++g)
        if (G.src(g) == O.mul(a, b)) {
          cell_index[{a, b, g}] = cells.size();
          cells.push_back({a, b, g});
          x.layers[2].push_back("[" + G.object_name(a) + "," + G.object_name(b) + ";" +
                                G.arrow_name(g) + "]");
        }
  auto cell = [&](std::size_t a, std::size_t b, std::size_t g) {
    auto it = cell_index.find({a, b, g});
    if (it == cell_index.end()) throw InternalInconsistency("2-cell with wrong source");
    return it->second;
  };

  struct Tetra {
    std::size_t x01, x12, x23, g012, g123, g023, g013;
  };
  std::vector<Tetra> tetras;
  std::map<std::array<std::size_t, 6>, std::size_t> tetra_index;
  for (const auto& [x01, x12, g012] : cells)
    for (std::size_t x23 = 0; x23 < no; ++x23)
      for (std::size_t g123 = 0; g123 < na; ++g123) {
        if (G.src(g123) != O.mul(x12, x23)) continue;
        const std::size_t x02 = G.tgt(g012);
        for (std::size_t g023 = 0; g023 < na; ++g023) {
          if (G.src(g023) != O.mul(x02, x23)) continue;
          // g013 = g023 ∘ (g012 ⊗ x23) ∘ (x01 ⊗ g123)⁻¹
          const std::size_t back = G.inv(A.mul(G.ident(x01), g123));
          const std::size_t g013 = G.then(G.then(back, A.mul(g012, G.ident(x23))), g023);
          tetra_index[{x01, x12, x23, g012, g123, g023}] = tetras.size();
          tetras.push_back({x01, x12, x23, g012, g123, g023, g013});
          x.layers[3].push_back("[" + G.object_name(x01) + "," + G.object_name(x12) + "," +
                                G.object_name(x23) + ";" + G.arrow_name(g012) + "," +
                                G.arrow_name(g123) + "," + G.arrow_name(g023) + "]");
        }
      }
  auto tetra = [&](std::size_t a, std::size_t b, std::size_t c, std::size_t g1, std::size_t g2,
                   std::size_t g3) {
    auto it = tetra_index.find({a, b, c, g1, g2, g3});
    if (it == tetra_index.end()) throw InternalInconsistency("3-simplex outside the nerve");
    return it->second;
  };

  x.faces[1] = {std::vector<std::size_t>(no, 0), std::vector<std::size_t>(no, 0)};
  x.faces[2].assign(3, {});
  for (const auto& [a, b, g] : cells) {
    x.faces[2][0].push_back(b);
    x.faces[2][1].push_back(G.tgt(g));
    x.faces[2][2].push_back(a);
  }
  x.faces[3].assign(4, {});
  for (const Tetra& t : tetras) {
    const std::size_t x02 = G.tgt(t.g012), x13 = G.tgt(t.g123);
    x.faces[3][0].push_back(cell(t.x12, t.x23, t.g123));
    x.faces[3][1].push_back(cell(x02, t.x23, t.g023));
    x.faces[3][2].push_back(cell(t.x01, x13, t.g013));
    x.faces[3][3].push_back(cell(t.x01, t.x12, t.g012));
  }

  x.degeneracies[0] = {{e}};
  x.degeneracies[1].assign(2, {});
  for (std::size_t o = 0; o < no; ++o) {
    x.degeneracies[1][0].push_back(cell(e, o, G.ident(o)));
    x.degeneracies[1][1].push_back(cell(o, e, G.ident(o)));
  }
  x.degeneracies[2].assign(3, {});
  for (const auto& [a, b, g] : cells) {
    const std::size_t c = G.tgt(g);
    x.degeneracies[2][0].push_back(tetra(e, a, b, G.ident(a), g, g));
    x.degeneracies[2][1].push_back(tetra(a, e, b, G.ident(a), G.ident(b), g));
    x.degeneracies[2][2].push_back(tetra(a, b, e, g, G.ident(b), G.ident(c)));
  }
  return x;
}

bool KanReport::ok() const {
  for (const auto& h : horns)
    if (!h.ok()) return false;
  return true;
}

const HornSummary* KanReport::first_failure() const {
  for (const auto& h : horns)
    if (!h.ok()) return &h;
  return nullptr;
}

const HornSummary* KanReport::at(std::size_t m, std::size_t j) const {
  for (const auto& h : horns)
    if (h.m == m && h.j == j) return &h;
  return nullptr;
}

KanReport kan_check(const TruncatedSimplicialSet& x, std::size_t n, std::size_t max_m) {
  if (max_m > x.depth())
    throw PreconditionError("depth " + std::to_string(x.depth()) + " too small for m = " +
                            std::to_string(max_m));
  KanReport report;
  report.n = n;
  report.max_m = max_m;
  for (std::size_t m = 1; m <= max_m; ++m) {
    for (std::size_t j = 0; j <= m; ++j) {
      HornSummary s;
      s.m = m;
      s.j = j;
      s.uniqueness_required = m > n;

      std::map<Key, std::pair<std::size_t, std::size_t>> fillers;  // key -> (count, first)
      for (std::size_t e = 0; e < x.count(m); ++e) {
        Key key;
        for (std::size_t i = 0; i <= m; ++i)
          if (i != j) key.push_back(x.face(m, i, e));
        auto [it, inserted] = fillers.try_emplace(key, 0, e);
        ++it->second.first;
      }

      std::vector<std::size_t> indices;
      for (std::size_t i = 0; i <= m; ++i)
        if (i != j) indices.push_back(i);
      Key chosen;
      auto describe = [&]() {
        std::vector<std::pair<std::size_t, std::string>> out;
        for (std::size_t k = 0; k < chosen.size(); ++k)
          out.push_back({indices[k], x.layers[m - 1][chosen[k]]});
        return out;
      };
      std::function<void(std::size_t)> extend = [&](std::size_t pos) {
        if (pos == indices.size()) {
          ++s.horns;
          auto it = fillers.find(chosen);
          const std::size_t count = it == fillers.end() ? 0 : it->second.first;
          if (count == 0) {
            if (s.missing++ == 0) s.first_missing = describe();
          } else if (count > 1 && s.uniqueness_required) {
            if (s.ambiguous++ == 0) {
              s.first_ambiguous = describe();
              s.first_ambiguous_fillers = count;
            }
          }
          return;
        }
        const std::size_t i = indices[pos];
        for (std::size_t y = 0; y < x.count(m - 1); ++y) {
          bool compatible = true;
          // d_k y_i = d_{i-1} y_k for every chosen k < i
          for (std::size_t q = 0; q < pos && compatible && m >= 2; ++q) {
            const std::size_t k = indices[q];
            compatible = x.face(m - 1, k, y) == x.face(m - 1, i - 1, chosen[q]);
          }
          if (!compatible) continue;
          chosen.push_back(y);
          extend(pos + 1);
          chosen.pop_back();
        }
      };
      extend(0);
      report.horns.push_back(std::move(s));
    }
  }
  return report;
}

FiniteGroupoid two_kan_to_groupoid(const TruncatedSimplicialSet& x) {
  if (x.depth() < 3) throw PreconditionError("two_kan_to_groupoid needs depth 3");
  if (x.count(0) != 1) throw PreconditionError("simplicial set is not pointed");
  const std::size_t pt_edge = x.degen(0, 0, 0);
  const std::size_t pt_cell = x.degen(1, 0, pt_edge);

  std::vector<std::size_t> arrows;
  std::vector<std::size_t> pos(x.count(2), kNone);
  for (std::size_t c = 0; c < x.count(2); ++c)
    if (x.face(2, 2, c) == pt_edge) {
      pos[c] = arrows.size();
      arrows.push_back(c);
    }

  std::map<Key, std::vector<std::size_t>> fillers;  // (d0, d2, d3) -> 3-simplices
  for (std::size_t w = 0; w < x.count(3); ++w)
    fillers[{x.face(3, 0, w), x.face(3, 2, w), x.face(3, 3, w)}].push_back(w);

  const std::size_t na = arrows.size();
  std::vector<ArrowRecord> records;
  for (std::size_t c : arrows) records.push_back({x.layers[2][c], x.face(2, 0, c), x.face(2, 1, c)});

  std::vector<std::size_t> comp(na * na, kNone);
  for (std::size_t a = 0; a < na; ++a)
    for (std::size_t b = 0; b < na; ++b) {
      if (records[a].tgt != records[b].src) continue;
      auto it = fillers.find({arrows[a], arrows[b], pt_cell});
      if (it == fillers.end())
        throw PreconditionError("missing Λ[3,1] filler for " + records[a].id + ", " + records[b].id);
      if (it->second.size() != 1)
        throw PreconditionError("non-unique Λ[3,1] filler for " + records[a].id + ", " + records[b].id);
      const std::size_t r = pos[x.face(3, 1, it->second.front())];
      if (r == kNone) throw InternalInconsistency("composite is not an arrow");
      comp[b * na + a] = r;
    }

  std::vector<std::size_t> ident;
  for (std::size_t o = 0; o < x.count(1); ++o) {
    const std::size_t id = pos[x.degen(1, 0, o)];
    if (id == kNone) throw InternalInconsistency("degenerate 2-simplex is not an arrow");
    ident.push_back(id);
  }
  std::vector<std::size_t> inv(na, kNone);
  for (std::size_t a = 0; a < na; ++a)
    for (std::size_t b = 0; b < na && inv[a] == kNone; ++b)
      if (comp[b * na + a] == ident[records[a].src] && comp[a * na + b] == ident[records[a].tgt])
        inv[a] = b;
  for (std::size_t a = 0; a < na; ++a)
    if (inv[a] == kNone) throw InternalInconsistency("arrow " + records[a].id + " has no inverse");

  FiniteGroupoid g(x.layers[1], std::move(records), std::move(comp), std::move(ident), std::move(inv));
  const ValidationReport report = validate_groupoid(g);
  if (!report.ok()) throw InternalInconsistency("extracted groupoid fails validation");
  return g;
}

}  // namespace twogroups
