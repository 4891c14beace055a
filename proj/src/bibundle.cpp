#include "twogroups/bibundle.hpp"

#include <deque>
#include <functional>
#include <map>

namespace twogroups {

Bibundle from_functor(const GroupoidHom& f, const FiniteGroupoid& src, const FiniteGroupoid& dst) {
  Bibundle b;
  b.left = src;
  b.right = dst;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> index;
  for (std::size_t x = 0; x < src.object_count(); ++x)
    for (std::size_t k = 0; k < dst.arrow_count(); ++k)
      if (dst.tgt(k) == f.obj_map[x]) {
        index[{x, k}] = b.total.size();
        b.total.push_back("(" + src.object_name(x) + "," + dst.arrow_name(k) + ")");
        b.left_moment.push_back(x);
        b.right_moment.push_back(dst.src(k));
      }
  std::vector<std::pair<std::size_t, std::size_t>> element(b.size());
  for (const auto& [key, e] : index) element[e] = key;

  b.left_action.assign(src.arrow_count() * b.size(), kNone);
  for (std::size_t k = 0; k < src.arrow_count(); ++k)
    for (std::size_t e = 0; e < b.size(); ++e) {
      const auto [x, kp] = element[e];
      if (src.src(k) != x) continue;
      b.left_action[k * b.size() + e] = index.at({src.tgt(k), dst.then(kp, f.arr_map[k])});
    }
  b.right_action.assign(b.size() * dst.arrow_count(), kNone);
  for (std::size_t e = 0; e < b.size(); ++e)
    for (std::size_t k = 0; k < dst.arrow_count(); ++k) {
      const auto [x, kp] = element[e];
      if (dst.tgt(k) != dst.src(kp)) continue;
      b.right_action[e * dst.arrow_count() + k] = index.at({x, dst.then(k, kp)});
    }
  return b;
}

Bibundle identity_bibundle(const FiniteGroupoid& g) { return from_functor(identity_hom(g), g, g); }

PrincipalReport validate_principal(const Bibundle& b) {
  PrincipalReport out;
  ValidationReport& r = out.report;
  const FiniteGroupoid& K = b.left;
  const FiniteGroupoid& L = b.right;
  const std::size_t n = b.size();
  if (b.left_moment.size() != n || b.right_moment.size() != n ||
      b.left_action.size() != K.arrow_count() * n || b.right_action.size() != n * L.arrow_count()) {
    r.add_structural("table shape");
    return out;
  }
  for (std::size_t e = 0; e < n; ++e)
    if (b.left_moment[e] >= K.object_count() || b.right_moment[e] >= L.object_count())
      r.add_structural("moment out of range", {b.total[e]});
  if (!r.structurally_sound()) return out;

  auto en = [&](std::size_t e) { return b.total[e]; };
  for (std::size_t k = 0; k < K.arrow_count(); ++k)
    for (std::size_t e = 0; e < n; ++e) {
      const std::size_t v = b.act_left(k, e);
      const bool should = K.src(k) == b.left_moment[e];
      if (should != (v != kNone)) r.add_structural("left action domain", {K.arrow_name(k), en(e)});
      else if (v != kNone && (v >= n || b.left_moment[v] != K.tgt(k) ||
                              b.right_moment[v] != b.right_moment[e]))
        r.add_structural("left action ill-typed", {K.arrow_name(k), en(e)});
    }
  for (std::size_t e = 0; e < n; ++e)
    for (std::size_t k = 0; k < L.arrow_count(); ++k) {
      const std::size_t v = b.act_right(e, k);
      const bool should = L.tgt(k) == b.right_moment[e];
      if (should != (v != kNone)) r.add_structural("right action domain", {en(e), L.arrow_name(k)});
      else if (v != kNone && (v >= n || b.right_moment[v] != L.src(k) ||
                              b.left_moment[v] != b.left_moment[e]))
        r.add_structural("right action ill-typed", {en(e), L.arrow_name(k)});
    }
  if (!r.structurally_sound()) return out;

  r.begin_check("left unital");
  r.begin_check("right unital");
  for (std::size_t e = 0; e < n; ++e) {
    r.expect("left unital", b.act_left(K.ident(b.left_moment[e]), e) == e, [&] { return Witness{en(e)}; });
    r.expect("right unital", b.act_right(e, L.ident(b.right_moment[e])) == e, [&] { return Witness{en(e)}; });
  }
  r.begin_check("left associative");
  for (std::size_t k1 = 0; k1 < K.arrow_count(); ++k1)
    for (std::size_t k2 = 0; k2 < K.arrow_count(); ++k2) {
      if (K.tgt(k1) != K.src(k2)) continue;
      for (std::size_t e = 0; e < n; ++e) {
        if (K.src(k1) != b.left_moment[e]) continue;
        r.expect("left associative",
                 b.act_left(k2, b.act_left(k1, e)) == b.act_left(K.comp(k2, k1), e),
                 [&] { return Witness{K.arrow_name(k1), K.arrow_name(k2), en(e)}; });
      }
    }
  r.begin_check("right associative");
  for (std::size_t e = 0; e < n; ++e)
    for (std::size_t k1 = 0; k1 < L.arrow_count(); ++k1) {
      if (L.tgt(k1) != b.right_moment[e]) continue;
      for (std::size_t k2 = 0; k2 < L.arrow_count(); ++k2) {
        if (L.tgt(k2) != L.src(k1)) continue;
        r.expect("right associative",
                 b.act_right(b.act_right(e, k1), k2) == b.act_right(e, L.comp(k1, k2)),
                 [&] { return Witness{en(e), L.arrow_name(k1), L.arrow_name(k2)}; });
      }
    }
  r.begin_check("actions commute");
  for (std::size_t k = 0; k < K.arrow_count(); ++k)
    for (std::size_t e = 0; e < n; ++e) {
      if (K.src(k) != b.left_moment[e]) continue;
      for (std::size_t kp = 0; kp < L.arrow_count(); ++kp) {
        if (L.tgt(kp) != b.right_moment[e]) continue;
        r.expect("actions commute",
                 b.act_right(b.act_left(k, e), kp) == b.act_left(k, b.act_right(e, kp)),
                 [&] { return Witness{K.arrow_name(k), en(e), L.arrow_name(kp)}; });
      }
    }

  r.begin_check("left moment surjective");
  {
    std::vector<bool> hit(K.object_count(), false);
    for (std::size_t x : b.left_moment) hit[x] = true;
    for (std::size_t x = 0; x < K.object_count(); ++x)
      r.expect("left moment surjective", hit[x], [&] { return Witness{K.object_name(x)}; });
  }
  r.begin_check("right principal");
  for (std::size_t e = 0; e < n; ++e)
    for (std::size_t e2 = 0; e2 < n; ++e2) {
      if (b.left_moment[e] != b.left_moment[e2]) continue;
      std::size_t solutions = 0;
      for (std::size_t k = 0; k < L.arrow_count(); ++k)
        if (L.tgt(k) == b.right_moment[e] && b.act_right(e, k) == e2) ++solutions;
      r.expect("right principal", solutions == 1, [&] { return Witness{en(e), en(e2)}; },
               std::to_string(solutions) + " arrows");
    }

  ValidationReport& l = out.left_report;
  l.begin_check("right moment surjective");
  {
    std::vector<bool> hit(L.object_count(), false);
    for (std::size_t x : b.right_moment) hit[x] = true;
    for (std::size_t x = 0; x < L.object_count(); ++x)
      l.expect("right moment surjective", hit[x], [&] { return Witness{L.object_name(x)}; });
  }
  l.begin_check("left principal");
  for (std::size_t e = 0; e < n; ++e)
    for (std::size_t e2 = 0; e2 < n; ++e2) {
      if (b.right_moment[e] != b.right_moment[e2]) continue;
      std::size_t solutions = 0;
      for (std::size_t k = 0; k < K.arrow_count(); ++k)
        if (K.src(k) == b.left_moment[e] && b.act_left(k, e) == e2) ++solutions;
      l.expect("left principal", solutions == 1, [&] { return Witness{en(e), en(e2)}; }, std::to_string(solutions) + " arrows");
    }

  out.right_principal = r.ok();
  out.morita = out.right_principal && l.ok();
  return out;
}

Bibundle compose(const Bibundle& b1, const Bibundle& b2) {
  if (!(b1.right == b2.left)) throw PreconditionError("middle groupoids differ");
  const FiniteGroupoid& M = b1.right;
  const std::size_t n1 = b1.size(), n2 = b2.size();

  // Pairs in lexicographic order; orbit label per pair.
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> pair_index;
  for (std::size_t e1 = 0; e1 < n1; ++e1)
    for (std::size_t e2 = 0; e2 < n2; ++e2)
      if (b1.right_moment[e1] == b2.left_moment[e2]) {
        pair_index[{e1, e2}] = pairs.size();
        pairs.push_back({e1, e2});
      }
  std::vector<std::size_t> orbit(pairs.size(), kNone);
  std::vector<std::size_t> reps;
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    if (orbit[p] != kNone) continue;
    const std::size_t id = reps.size();
    reps.push_back(p);
    std::deque<std::size_t> queue{p};
    orbit[p] = id;
    while (!queue.empty()) {
      const auto [e1, e2] = pairs[queue.front()];
      queue.pop_front();
      for (std::size_t k = 0; k < M.arrow_count(); ++k) {
        if (M.tgt(k) != b1.right_moment[e1]) continue;
        const std::size_t q = pair_index.at({b1.act_right(e1, k), b2.act_left(M.inv(k), e2)});
        if (orbit[q] == kNone) {
          orbit[q] = id;
          queue.push_back(q);
        }
      }
    }
  }

  Bibundle b;
  b.left = b1.left;
  b.right = b2.right;
  for (std::size_t p : reps) {
    const auto [e1, e2] = pairs[p];
    b.total.push_back("[" + b1.total[e1] + "," + b2.total[e2] + "]");
    b.left_moment.push_back(b1.left_moment[e1]);
    b.right_moment.push_back(b2.right_moment[e2]);
  }
  const std::size_t n = reps.size();
  b.left_action.assign(b.left.arrow_count() * n, kNone);
  b.right_action.assign(n * b.right.arrow_count(), kNone);
  for (std::size_t o = 0; o < n; ++o) {
    const auto [e1, e2] = pairs[reps[o]];
    for (std::size_t k = 0; k < b.left.arrow_count(); ++k)
      if (b.left.src(k) == b1.left_moment[e1])
        b.left_action[k * n + o] = orbit[pair_index.at({b1.act_left(k, e1), e2})];
    for (std::size_t k = 0; k < b.right.arrow_count(); ++k)
      if (b.right.tgt(k) == b2.right_moment[e2])
        b.right_action[o * b.right.arrow_count() + k] = orbit[pair_index.at({e1, b2.act_right(e2, k)})];
  }
  return b;
}

Bibundle reverse(const Bibundle& b) {
  Bibundle r;
  r.left = b.right;
  r.right = b.left;
  r.total = b.total;
  r.left_moment = b.right_moment;
  r.right_moment = b.left_moment;
  const std::size_t n = b.size();
  r.left_action.assign(r.left.arrow_count() * n, kNone);
  r.right_action.assign(n * r.right.arrow_count(), kNone);
  for (std::size_t k = 0; k < r.left.arrow_count(); ++k)
    for (std::size_t e = 0; e < n; ++e)
      if (r.left.src(k) == r.left_moment[e])
        r.left_action[k * n + e] = b.act_right(e, b.right.inv(k));
  for (std::size_t e = 0; e < n; ++e)
    for (std::size_t k = 0; k < r.right.arrow_count(); ++k)
      if (r.right.tgt(k) == r.right_moment[e])
        r.right_action[e * r.right.arrow_count() + k] = b.act_left(b.left.inv(k), e);
  return r;
}

std::optional<std::vector<std::size_t>> bibundle_isomorphism(const Bibundle& a, const Bibundle& b) {
  if (a.size() != b.size() || !(a.left == b.left) || !(a.right == b.right)) return std::nullopt;
  const std::size_t n = a.size();
  std::vector<std::size_t> map(n, kNone);

  // Propagates map[e] = v along both actions; returns false on conflict and
  // records what it assigned so the caller can undo.
  auto propagate = [&](std::size_t e, std::size_t v, std::vector<std::size_t>& assigned) {
    std::vector<bool> used(n, false);
    for (std::size_t x = 0; x < n; ++x)
      if (map[x] != kNone) used[map[x]] = true;
    std::deque<std::pair<std::size_t, std::size_t>> queue{{e, v}};
    while (!queue.empty()) {
      const auto [x, y] = queue.front();
      queue.pop_front();
      if (map[x] != kNone) {
        if (map[x] != y) return false;
        continue;
      }
      if (used[y] || a.left_moment[x] != b.left_moment[y] || a.right_moment[x] != b.right_moment[y])
        return false;
      map[x] = y;
      used[y] = true;
      assigned.push_back(x);
      for (std::size_t k = 0; k < a.left.arrow_count(); ++k)
        if (a.left.src(k) == a.left_moment[x]) queue.push_back({a.act_left(k, x), b.act_left(k, y)});
      for (std::size_t k = 0; k < a.right.arrow_count(); ++k)
        if (a.right.tgt(k) == a.right_moment[x]) queue.push_back({a.act_right(x, k), b.act_right(y, k)});
    }
    return true;
  };

  std::function<bool(std::size_t)> search = [&](std::size_t e) -> bool {
    while (e < n && map[e] != kNone) ++e;
    if (e == n) return true;
    for (std::size_t v = 0; v < n; ++v) {
      std::vector<std::size_t> assigned;
      if (propagate(e, v, assigned) && search(e + 1)) return true;
      for (std::size_t x : assigned) map[x] = kNone;
    }
    return false;
  };
  if (!search(0)) return std::nullopt;
  return map;
}

std::optional<Bibundle> find_morita_bibundle(const FiniteGroupoid& a, const FiniteGroupoid& b) {
  if (a.object_count() != 1 || b.object_count() != 1)
    throw PreconditionError("Morita search is implemented for one-object groupoids");
  const Group ga = vertex_group(a, 0), gb = vertex_group(b, 0);
  std::optional<Bibundle> found;
  for_each_homomorphism(ga, gb, [&](const std::vector<std::size_t>& phi) {
    Bibundle candidate = from_functor(GroupoidHom{{0}, phi}, a, b);
    if (validate_principal(candidate).morita) found = std::move(candidate);
    return !found.has_value();
  });
  return found;
}

}  // namespace twogroups
