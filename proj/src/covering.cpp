#include "twogroups/covering.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <queue>
#include <set>

namespace twogroups {

namespace {

std::size_t edge_of(int letter) { return static_cast<std::size_t>(std::abs(letter)) - 1; }
int letter_of(std::size_t edge, bool forward) {
  const int l = static_cast<int>(edge + 1);
  return forward ? l : -l;
}

template <typename Edges>
std::size_t letter_src(const Edges& edges, int l) {
  return l > 0 ? edges[edge_of(l)].src : edges[edge_of(l)].tgt;
}
template <typename Edges>
std::size_t letter_tgt(const Edges& edges, int l) {
  return l > 0 ? edges[edge_of(l)].tgt : edges[edge_of(l)].src;
}

// Unique lifting tables for one complex and its quotient.
class Lifter {
 public:
  Lifter(const EquivariantComplex& c, const QuotientComplex& q) : c_(c), q_(q) {
    const std::size_t nv = c.vertices.size(), nq = q.edges.size();
    out_.assign(nv * nq, kNone);
    in_.assign(nv * nq, kNone);
    for (std::size_t e = 0; e < c.edges.size(); ++e) {
      out_[c.edges[e].src * nq + q.edge_orbit[e]] = e;
      in_[c.edges[e].tgt * nq + q.edge_orbit[e]] = e;
    }
    fiber_.assign(nv, kNone);
    for (std::size_t b = 0; b < q.vertex_rep.size(); ++b)
      for (std::size_t g = 0; g < c.gamma.order(); ++g) fiber_[c.act_vertex(g, q.vertex_rep[b])] = g;
  }

  LiftedPath lift(const EdgeLoop& loop, std::size_t start) const {
    if (start >= c_.vertices.size() || q_.vertex_orbit[start] != loop.base)
      throw PreconditionError("lift start does not lie over the base vertex");
    const std::size_t nq = q_.edges.size();
    LiftedPath p;
    p.vertices.push_back(start);
    std::size_t qv = loop.base, v = start;
    for (int l : loop.word) {
      const std::size_t qe = edge_of(l);
      if (qe >= nq || letter_src(q_.edges, l) != qv)
        throw PreconditionError("loop word is not a path in the quotient");
      const std::size_t e = l > 0 ? out_[v * nq + qe] : in_[v * nq + qe];
      if (e == kNone) throw InternalInconsistency("no lift for edge " + q_.edges[qe].id);
      p.edges.push_back(letter_of(e, l > 0));
      v = l > 0 ? c_.edges[e].tgt : c_.edges[e].src;
      qv = letter_tgt(q_.edges, l);
      p.vertices.push_back(v);
    }
    return p;
  }

  // γ with γ·rep(orbit of v) = v.
  std::size_t fiber_coordinate(std::size_t v) const { return fiber_[v]; }

  std::size_t boundary(const EdgeLoop& loop, std::size_t start) const {
    const LiftedPath p = lift(loop, start);
    if (q_.vertex_orbit[p.vertices.back()] != loop.base)
      throw PreconditionError("loop is not closed in the quotient");
    const Group& G = c_.gamma;
    return G.mul(G.inverse(fiber_[start]), fiber_[p.vertices.back()]);
  }

  std::size_t deck(const EdgeLoop& loop, std::size_t start) const {
    const LiftedPath p = lift(loop, start);
    if (q_.vertex_orbit[p.vertices.back()] != loop.base)
      throw PreconditionError("loop is not closed in the quotient");
    const Group& G = c_.gamma;
    return G.mul(fiber_[p.vertices.back()], G.inverse(fiber_[start]));
  }

 private:
  const EquivariantComplex& c_;
  const QuotientComplex& q_;
  std::vector<std::size_t> out_;
  std::vector<std::size_t> in_;
  std::vector<std::size_t> fiber_;
};

EdgeWord cyclic_reduce(EdgeWord w) {
  w = free_reduce(w);
  std::size_t i = 0, j = w.size();
  while (j - i >= 2 && w[i] == -w[j - 1]) {
    ++i;
    --j;
  }
  return EdgeWord(w.begin() + static_cast<long>(i), w.begin() + static_cast<long>(j));
}

EdgeWord least_rotation(const EdgeWord& w) {
  EdgeWord best = w;
  for (std::size_t r = 1; r < w.size(); ++r) {
    EdgeWord rot(w.begin() + static_cast<long>(r), w.end());
    rot.insert(rot.end(), w.begin(), w.begin() + static_cast<long>(r));
    if (rot < best) best = std::move(rot);
  }
  return best;
}

}  // namespace

const char* to_string(InjectivityStatus s) {
  return s == InjectivityStatus::kCertified ? "CERTIFIED" : "INCONCLUSIVE";
}

ValidationReport validate_complex(const EquivariantComplex& c) {
  ValidationReport r;
  const std::size_t nv = c.vertices.size(), ne = c.edges.size(), nc = c.cells.size();
  const std::size_t ng = c.gamma.order();
  for (const auto& e : c.edges)
    if (e.src >= nv || e.tgt >= nv) r.add_structural("edge endpoint out of range", {e.id});
  for (std::size_t k = 0; k < nc; ++k)
    for (int l : c.cells[k])
      if (l == 0 || edge_of(l) >= ne) r.add_structural("cell letter out of range", {std::to_string(k)});
  if (c.vertex_action.size() != ng * nv || c.edge_action.size() != ng * ne ||
      c.cell_action.size() != ng * nc)
    r.add_structural("action table shape");
  if (!r.structurally_sound()) return r;
  for (std::size_t v : c.vertex_action)
    if (v >= nv) r.add_structural("vertex action out of range");
  for (std::size_t v : c.edge_action)
    if (v >= ne) r.add_structural("edge action out of range");
  for (std::size_t v : c.cell_action)
    if (v >= nc) r.add_structural("cell action out of range");
  if (!r.structurally_sound()) return r;

  const Group& G = c.gamma;
  r.begin_check("cell boundary closed");
  for (std::size_t k = 0; k < nc; ++k) {
    const EdgeWord& w = c.cells[k];
    bool ok = !w.empty();
    for (std::size_t i = 0; ok && i < w.size(); ++i)
      ok = letter_tgt(c.edges, w[i]) == letter_src(c.edges, w[(i + 1) % w.size()]);
    r.expect("cell boundary closed", ok, [&] { return Witness{std::to_string(k)}; });
  }

  r.begin_check("action unital");
  for (std::size_t v = 0; v < nv; ++v) r.expect("action unital", c.act_vertex(G.unit(), v) == v, [&] { return Witness{c.vertices[v]}; });
  for (std::size_t e = 0; e < ne; ++e) r.expect("action unital", c.act_edge(G.unit(), e) == e, [&] { return Witness{c.edges[e].id}; });
  for (std::size_t k = 0; k < nc; ++k) r.expect("action unital", c.act_cell(G.unit(), k) == k, [&] { return Witness{std::to_string(k)}; });

  r.begin_check("action composition");
  for (std::size_t g = 0; g < ng; ++g)
    for (std::size_t h = 0; h < ng; ++h) {
      const std::size_t gh = G.mul(g, h);
      const std::vector<std::string> w{G.name(g), G.name(h)};
      bool ok = true;
      for (std::size_t v = 0; v < nv && ok; ++v) ok = c.act_vertex(gh, v) == c.act_vertex(g, c.act_vertex(h, v));
      for (std::size_t e = 0; e < ne && ok; ++e) ok = c.act_edge(gh, e) == c.act_edge(g, c.act_edge(h, e));
      for (std::size_t k = 0; k < nc && ok; ++k) ok = c.act_cell(gh, k) == c.act_cell(g, c.act_cell(h, k));
      r.record("action composition", ok, w);
    }

  r.begin_check("incidence");
  for (std::size_t g = 0; g < ng; ++g) {
    for (std::size_t e = 0; e < ne; ++e) {
      const ComplexEdge& a = c.edges[e];
      const ComplexEdge& b = c.edges[c.act_edge(g, e)];
      r.expect("incidence",
               b.src == c.act_vertex(g, a.src) && b.tgt == c.act_vertex(g, a.tgt) && b.label == a.label,
               [&] { return Witness{G.name(g), a.id}; });
    }
    for (std::size_t k = 0; k < nc; ++k) {
      EdgeWord moved;
      for (int l : c.cells[k]) moved.push_back(letter_of(c.act_edge(g, edge_of(l)), l > 0));
      r.expect("incidence", moved == c.cells[c.act_cell(g, k)], [&] { return Witness{G.name(g), std::to_string(k)}; });
    }
  }

  r.begin_check("free action");
  for (std::size_t g = 0; g < ng; ++g) {
    if (g == G.unit()) continue;
    for (std::size_t v = 0; v < nv; ++v)
      r.expect("free action", c.act_vertex(g, v) != v, [&] { return Witness{G.name(g), c.vertices[v]}; });
  }

  r.begin_check("connected");
  if (nv > 0) {
    std::vector<bool> seen(nv, false);
    std::deque<std::size_t> queue{0};
    seen[0] = true;
    while (!queue.empty()) {
      const std::size_t v = queue.front();
      queue.pop_front();
      for (const auto& e : c.edges) {
        std::size_t w = kNone;
        if (e.src == v) w = e.tgt;
        else if (e.tgt == v) w = e.src;
        if (w != kNone && !seen[w]) {
          seen[w] = true;
          queue.push_back(w);
        }
      }
    }
    for (std::size_t v = 0; v < nv; ++v) r.expect("connected", seen[v], [&] { return Witness{c.vertices[v]}; });
  }
  return r;
}

EquivariantComplex cayley_complex(const Presentation& p, const Group& grp,
                                  const std::vector<std::size_t>& images, std::size_t max_cosets) {
  if (images.size() != p.generators.size())
    throw PreconditionError("one image per generator is required");
  for (const Word& w : p.relators)
    if (evaluate(w, grp, images) != grp.unit())
      throw PreconditionError("relator " + format_word(w, p.generators) + " does not hold");
  if (generated_subgroup(grp, images).size() != grp.order())
    throw PreconditionError("generator images do not generate the group");
  const auto table = todd_coxeter(p, max_cosets);
  if (!table) throw PreconditionError("coset enumeration bound exceeded");
  if (table->order() != grp.order())
    throw PreconditionError("presentation defines a group of order " + std::to_string(table->order()) +
                            ", expected " + std::to_string(grp.order()));

  const std::size_t n = grp.order(), ns = p.generators.size(), nr = p.relators.size();
  EquivariantComplex c;
  c.gamma = grp;
  c.vertices = grp.names();
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t s = 0; s < ns; ++s)
      c.edges.push_back({"(" + grp.name(g) + "," + p.generators[s] + ")", g, grp.mul(g, images[s]),
                         p.generators[s]});
  for (std::size_t g = 0; g < n; ++g)
    for (const Word& w : p.relators) {
      EdgeWord cell;
      std::size_t v = g;
      for (int l : w) {
        const std::size_t s = static_cast<std::size_t>(std::abs(l)) - 1;
        if (l > 0) {
          cell.push_back(letter_of(v * ns + s, true));
          v = grp.mul(v, images[s]);
        } else {
          v = grp.mul(v, grp.inverse(images[s]));
          cell.push_back(letter_of(v * ns + s, false));
        }
      }
      c.cells.push_back(std::move(cell));
    }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t g = 0; g < n; ++g) c.vertex_action.push_back(grp.mul(a, g));
    for (std::size_t g = 0; g < n; ++g)
      for (std::size_t s = 0; s < ns; ++s) c.edge_action.push_back(grp.mul(a, g) * ns + s);
    for (std::size_t g = 0; g < n; ++g)
      for (std::size_t k = 0; k < nr; ++k) c.cell_action.push_back(grp.mul(a, g) * nr + k);
  }
  c.simply_connected_asserted = true;
  c.presentation = p;
  c.generator_images = images;
  return c;
}

QuotientComplex quotient(const EquivariantComplex& c) {
  QuotientComplex q;
  const std::size_t ng = c.gamma.order();
  auto orbits = [&](std::size_t count, auto act, std::vector<std::size_t>& label,
                    std::vector<std::size_t>& rep) {
    label.assign(count, kNone);
    for (std::size_t x = 0; x < count; ++x) {
      if (label[x] != kNone) continue;
      for (std::size_t g = 0; g < ng; ++g) label[act(g, x)] = rep.size();
      rep.push_back(x);
    }
  };
  orbits(c.vertices.size(), [&](std::size_t g, std::size_t v) { return c.act_vertex(g, v); },
         q.vertex_orbit, q.vertex_rep);
  orbits(c.edges.size(), [&](std::size_t g, std::size_t e) { return c.act_edge(g, e); }, q.edge_orbit,
         q.edge_rep);
  orbits(c.cells.size(), [&](std::size_t g, std::size_t k) { return c.act_cell(g, k); }, q.cell_orbit,
         q.cell_rep);

  for (std::size_t v : q.vertex_rep) q.vertex_names.push_back(c.vertices[v]);
  std::map<std::string, std::size_t> label_count;
  for (std::size_t e : q.edge_rep) ++label_count[c.edges[e].label];
  for (std::size_t i = 0; i < q.edge_rep.size(); ++i) {
    const ComplexEdge& e = c.edges[q.edge_rep[i]];
    std::string name = e.label.empty() ? e.id : e.label;
    if (!e.label.empty() && label_count[e.label] > 1) name += "#" + std::to_string(i);
    q.edges.push_back({name, q.vertex_orbit[e.src], q.vertex_orbit[e.tgt], e.label});
  }
  for (std::size_t k : q.cell_rep) {
    EdgeWord w;
    for (int l : c.cells[k]) w.push_back(letter_of(q.edge_orbit[edge_of(l)], l > 0));
    q.cells.push_back(std::move(w));
  }
  return q;
}

EdgeLoop parse_loop(const QuotientComplex& q, std::size_t base, std::string_view text) {
  std::vector<std::string> names;
  for (const auto& e : q.edges) names.push_back(e.id);
  return EdgeLoop{base, parse_word(text, names)};
}

std::string format_edge_word(const std::vector<ComplexEdge>& edges, const EdgeWord& w) {
  std::vector<std::string> names;
  for (const auto& e : edges) names.push_back(e.id);
  return format_word(w, names);
}

LiftedPath lift_path(const EquivariantComplex& c, const QuotientComplex& q, const EdgeLoop& loop,
                     std::size_t start) {
  return Lifter(c, q).lift(loop, start);
}

std::size_t boundary_map(const EquivariantComplex& c, const QuotientComplex& q, const EdgeLoop& loop,
                         std::size_t start) {
  return Lifter(c, q).boundary(loop, start);
}

std::size_t boundary_map(const EquivariantComplex& c, const QuotientComplex& q, const EdgeLoop& loop) {
  return boundary_map(c, q, loop, q.vertex_rep[loop.base]);
}

std::size_t deck_element(const EquivariantComplex& c, const QuotientComplex& q, const EdgeLoop& loop,
                         std::size_t start) {
  return Lifter(c, q).deck(loop, start);
}

Pi1Presentation pi1_presentation(const QuotientComplex& q, std::size_t base) {
  const std::size_t nv = q.vertex_names.size(), ne = q.edges.size();
  Pi1Presentation out;
  out.tree.assign(ne, false);
  std::vector<EdgeWord> path(nv);
  std::vector<bool> seen(nv, false);
  std::deque<std::size_t> queue{base};
  seen[base] = true;
  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop_front();
    for (std::size_t e = 0; e < ne; ++e) {
      int l = 0;
      if (q.edges[e].src == v && !seen[q.edges[e].tgt]) l = letter_of(e, true);
      else if (q.edges[e].tgt == v && !seen[q.edges[e].src]) l = letter_of(e, false);
      if (l == 0) continue;
      const std::size_t w = letter_tgt(q.edges, l);
      seen[w] = true;
      out.tree[e] = true;
      path[w] = path[v];
      path[w].push_back(l);
      queue.push_back(w);
    }
  }
  std::vector<std::size_t> generator_of(ne, kNone);
  for (std::size_t e = 0; e < ne; ++e) {
    if (out.tree[e]) continue;
    generator_of[e] = out.generator_edges.size();
    out.generator_edges.push_back(e);
    out.presentation.generators.push_back(q.edges[e].id);
    EdgeLoop loop{base, path[q.edges[e].src]};
    loop.word.push_back(letter_of(e, true));
    const EdgeWord back = inverse_word(path[q.edges[e].tgt]);
    loop.word.insert(loop.word.end(), back.begin(), back.end());
    out.generator_loops.push_back(std::move(loop));
  }
  for (const EdgeWord& cell : q.cells) {
    Word r;
    for (int l : cell) {
      const std::size_t e = edge_of(l);
      if (out.tree[e]) continue;
      r.push_back(static_cast<int>(generator_of[e] + 1) * (l > 0 ? 1 : -1));
    }
    out.presentation.relators.push_back(std::move(r));
  }
  return out;
}

NullHomotopyResult certify_null_homotopic(const EquivariantComplex& c, const EdgeWord& closed_path,
                                          std::size_t move_budget) {
  NullHomotopyResult result;
  const EdgeWord start = least_rotation(cyclic_reduce(closed_path));
  if (start.empty()) {
    result.certified = true;
    return result;
  }

  std::vector<EdgeWord> relators;
  std::size_t longest = 0;
  for (const EdgeWord& cell : c.cells) {
    for (const EdgeWord& w : {cell, inverse_word(cell)}) {
      for (std::size_t r = 0; r < w.size(); ++r) {
        EdgeWord rot(w.begin() + static_cast<long>(r), w.end());
        rot.insert(rot.end(), w.begin(), w.begin() + static_cast<long>(r));
        relators.push_back(std::move(rot));
      }
      longest = std::max(longest, w.size());
    }
  }
  std::sort(relators.begin(), relators.end());
  relators.erase(std::unique(relators.begin(), relators.end()), relators.end());
  const std::size_t max_length = start.size() + longest;

  using Entry = std::pair<std::pair<std::size_t, std::size_t>, EdgeWord>;  // ((length, seq), word)
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> frontier;
  std::set<EdgeWord> visited{start};
  std::size_t seq = 0;
  frontier.push({{start.size(), seq++}, start});

  while (!frontier.empty() && result.moves < move_budget) {
    const EdgeWord w = frontier.top().second;
    frontier.pop();
    ++result.moves;
    const std::size_t n = w.size();
    for (const EdgeWord& r : relators) {
      const std::size_t k = r.size();
      for (std::size_t len = std::min(k, n); len >= 1; --len) {
        for (std::size_t i = 0; i < n; ++i) {
          bool match = true;
          for (std::size_t t = 0; t < len && match; ++t) match = w[(i + t) % n] == r[t];
          if (!match) continue;
          // Replace w[i, i+len) by the inverse of r[len, k).
          EdgeWord next;
          for (std::size_t t = len; t < n; ++t) next.push_back(w[(i + t) % n]);
          const EdgeWord rest = inverse_word(EdgeWord(r.begin() + static_cast<long>(len), r.end()));
          next.insert(next.begin(), rest.begin(), rest.end());
          next = least_rotation(cyclic_reduce(next));
          if (next.empty()) {
            result.certified = true;
            return result;
          }
          if (next.size() > max_length || !visited.insert(next).second) continue;
          frontier.push({{next.size(), seq++}, std::move(next)});
        }
      }
    }
  }
  return result;
}

BoundaryIsoReport verify_boundary_iso(const EquivariantComplex& c, std::size_t move_budget,
                                      std::size_t word_bound) {
  BoundaryIsoReport out;
  const ValidationReport valid = validate_complex(c);
  if (!valid.ok()) {
    out.report.merge(valid, "complex");
    return out;
  }
  const Group& G = c.gamma;
  out.gamma_order = G.order();
  const QuotientComplex q = quotient(c);
  const Lifter lifter(c, q);
  const std::size_t v0 = q.vertex_rep[0];
  out.pi1 = pi1_presentation(q, 0);
  const std::size_t ns = out.pi1.presentation.generators.size();

  auto loop_of = [&](const Word& w) {
    EdgeLoop loop{0, {}};
    for (int l : w) {
      const EdgeWord& g = out.pi1.generator_loops[static_cast<std::size_t>(std::abs(l)) - 1].word;
      const EdgeWord piece = l > 0 ? g : inverse_word(g);
      loop.word.insert(loop.word.end(), piece.begin(), piece.end());
    }
    return loop;
  };
  auto boundary = [&](const Word& w) { return lifter.boundary(loop_of(w), v0); };
  for (std::size_t s = 0; s < ns; ++s)
    out.generator_images.push_back(lifter.boundary(out.pi1.generator_loops[s], v0));

  // Words over generators and inverses of length <= word_bound.
  std::vector<Word> words{{}};
  for (std::size_t len = 1; len <= word_bound; ++len) {
    std::vector<Word> next;
    for (const Word& w : words)
      if (w.size() == len - 1)
        for (std::size_t s = 0; s < ns; ++s)
          for (int sign : {1, -1}) {
            Word u = w;
            u.push_back(static_cast<int>(s + 1) * sign);
            next.push_back(std::move(u));
          }
    words.insert(words.end(), next.begin(), next.end());
  }
  auto wname = [&](const Word& w) { return format_word(w, out.pi1.presentation.generators); };
  out.report.begin_check("homomorphism");
  for (const Word& a : words)
    for (const Word& b : words) {
      ++out.homomorphism_cases;
      out.report.expect("homomorphism", boundary(concat(a, b)) == G.mul(boundary(a), boundary(b)),
                        [&] { return Witness{wname(a), wname(b)}; });
    }

  // BFS over Γ by generator images: coset representatives for Schreier.
  std::vector<std::optional<Word>> rep(G.order());
  rep[G.unit()] = Word{};
  std::deque<std::size_t> queue{G.unit()};
  while (!queue.empty()) {
    const std::size_t g = queue.front();
    queue.pop_front();
    for (std::size_t s = 0; s < ns; ++s)
      for (int sign : {1, -1}) {
        const std::size_t img = sign > 0 ? out.generator_images[s] : G.inverse(out.generator_images[s]);
        const std::size_t h = G.mul(g, img);
        if (rep[h]) continue;
        rep[h] = *rep[g];
        rep[h]->push_back(static_cast<int>(s + 1) * sign);
        queue.push_back(h);
      }
  }
  out.report.begin_check("surjectivity");
  bool surjective = true;
  for (std::size_t g = 0; g < G.order(); ++g) {
    const bool ok = rep[g].has_value() && boundary(*rep[g]) == g;
    out.report.expect("surjectivity", ok, [&] { return Witness{G.name(g)}; });
    out.surjectivity_words.push_back(rep[g].value_or(Word{}));
    surjective = surjective && ok;
  }

  if (surjective) {
    bool all = true;
    for (std::size_t g = 0; g < G.order(); ++g)
      for (std::size_t s = 0; s < ns; ++s) {
        const std::size_t h = G.mul(g, out.generator_images[s]);
        Word w = *rep[g];
        w.push_back(static_cast<int>(s + 1));
        w = free_reduce(concat(w, inverse_word(*rep[h])));
        if (w.empty()) continue;
        ++out.schreier_generators;
        const LiftedPath p = lifter.lift(loop_of(w), v0);
        if (p.vertices.back() != v0) throw InternalInconsistency("Schreier generator lifts to an open path");
        const NullHomotopyResult nh = certify_null_homotopic(c, p.edges, move_budget);
        out.moves_used += nh.moves;
        if (nh.certified) ++out.schreier_certified;
        else all = false;
      }
    out.injectivity = all ? InjectivityStatus::kCertified : InjectivityStatus::kInconclusive;
  }

  out.simple_connectivity = "unknown";
  if (c.presentation) {
    try {
      if (cayley_complex(*c.presentation, c.gamma, c.generator_images) == c) out.simple_connectivity = "cayley";
    } catch (const PreconditionError&) {
    }
  }
  if (out.simple_connectivity == "unknown" && c.simply_connected_asserted) out.simple_connectivity = "asserted";
  return out;
}

InvarianceReport check_boundary_invariance(const EquivariantComplex& c, std::size_t max_length) {
  InvarianceReport out;
  const Group& G = c.gamma;
  const QuotientComplex q = quotient(c);
  const Lifter lifter(c, q);
  const std::size_t v0 = q.vertex_rep[0];
  const std::size_t ne = q.edges.size();

  std::vector<std::size_t> fiber;
  for (std::size_t v = 0; v < c.vertices.size(); ++v)
    if (q.vertex_orbit[v] == 0) fiber.push_back(v);

  // Based loops at quotient vertex 0 with at most max_length letters.
  std::vector<EdgeWord> loops;
  EdgeWord current;
  std::function<void(std::size_t)> walk = [&](std::size_t at) {
    if (at == 0) loops.push_back(current);
    if (current.size() == max_length) return;
    for (std::size_t e = 0; e < ne; ++e)
      for (bool fwd : {true, false}) {
        const int l = letter_of(e, fwd);
        if (letter_src(q.edges, l) != at) continue;
        current.push_back(l);
        walk(letter_tgt(q.edges, l));
        current.pop_back();
      }
  };
  walk(0);

  // Rotations of each quotient cell boundary and its inverse, by start vertex.
  std::vector<EdgeWord> cell_words;
  for (const EdgeWord& cell : q.cells)
    for (const EdgeWord& w : {cell, inverse_word(cell)})
      for (std::size_t r = 0; r < w.size(); ++r) {
        EdgeWord rot(w.begin() + static_cast<long>(r), w.end());
        rot.insert(rot.end(), w.begin(), w.begin() + static_cast<long>(r));
        cell_words.push_back(std::move(rot));
      }

  ValidationReport& r = out.report;
  for (const char* name : {"lift start", "deck conjugation", "reverse", "free reduction", "cell move"})
    r.begin_check(name);
  for (const EdgeWord& word : loops) {
    ++out.loops;
    const EdgeLoop loop{0, word};
    const std::size_t gamma = lifter.boundary(loop, v0);
    const std::string wn = format_edge_word(q.edges, word);
    for (std::size_t s : fiber) {
      const std::size_t g = lifter.fiber_coordinate(s);
      r.expect("lift start", lifter.boundary(loop, s) == gamma, [&] { return Witness{wn, c.vertices[s]}; });
      r.expect("deck conjugation",
               lifter.deck(loop, s) == G.mul(G.mul(g, gamma), G.inverse(g)), [&] { return Witness{wn, c.vertices[s]}; });
    }
    r.expect("reverse", lifter.boundary({0, inverse_word(word)}, v0) == G.inverse(gamma), [&] { return Witness{wn}; });
    r.expect("free reduction", lifter.boundary({0, free_reduce(word)}, v0) == gamma, [&] { return Witness{wn}; });

    std::size_t at = 0;
    for (std::size_t i = 0; i <= word.size(); ++i) {
      for (std::size_t e = 0; e < ne; ++e)
        for (bool fwd : {true, false}) {
          const int l = letter_of(e, fwd);
          if (letter_src(q.edges, l) != at) continue;
          EdgeWord w = word;
          w.insert(w.begin() + static_cast<long>(i), {l, -l});
          r.expect("free reduction", lifter.boundary({0, w}, v0) == gamma, [&] { return Witness{wn, std::to_string(i)}; });
        }
      for (const EdgeWord& cw : cell_words) {
        if (letter_src(q.edges, cw.front()) != at) continue;
        EdgeWord w = word;
        w.insert(w.begin() + static_cast<long>(i), cw.begin(), cw.end());
        r.expect("cell move", lifter.boundary({0, w}, v0) == gamma,
                 [&] { return Witness{wn, std::to_string(i), format_edge_word(q.edges, cw)}; });
      }
      if (i < word.size()) at = letter_tgt(q.edges, word[i]);
    }
  }
  return out;
}

}  // namespace twogroups
