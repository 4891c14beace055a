#include "twogroups/group.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>

namespace twogroups {

ValidationReport validate_group_table(const std::vector<std::string>& names,
                                      const std::vector<std::size_t>& table) {
  ValidationReport report;
  const std::size_t n = names.size();
  if (n == 0) {
    report.add_structural("empty group");
    return report;
  }
  if (table.size() != n * n) {
    report.add_structural("table shape", {}, "expected " + std::to_string(n * n) + " entries");
    return report;
  }
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (table[i] >= n) {
      report.add_structural("table entry out of range", {names[i / n], names[i % n]});
    }
  }
  if (!report.structurally_sound()) return report;

  auto m = [&](std::size_t a, std::size_t b) { return table[a * n + b]; };

  report.begin_check("associativity");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        report.expect("associativity", m(m(a, b), c) == m(a, m(b, c)),
                      [&] { return Witness{names[a], names[b], names[c]}; });

  std::size_t unit = kNone;
  for (std::size_t e = 0; e < n && unit == kNone; ++e) {
    bool is_unit = true;
    for (std::size_t a = 0; a < n && is_unit; ++a) is_unit = m(e, a) == a && m(a, e) == a;
    if (is_unit) unit = e;
  }
  if (unit == kNone) {
    report.add_violation("unit");
    return report;
  }
  report.record("unit", true);

  report.begin_check("inverses");
  for (std::size_t a = 0; a < n; ++a) {
    bool found = false;
    for (std::size_t b = 0; b < n && !found; ++b) found = m(a, b) == unit && m(b, a) == unit;
    report.expect("inverses", found, [&] { return Witness{names[a]}; });
  }
  return report;
}

Group Group::from_table(std::vector<std::string> names, std::vector<std::size_t> table) {
  ValidationReport report = validate_group_table(names, table);
  if (!report.ok()) {
    std::string what = "not a group table";
    const auto& list = report.structural().empty() ? report.violations() : report.structural();
    if (!list.empty()) {
      what += ": " + list.front().axiom;
      for (const auto& w : list.front().witness) what += " " + w;
    }
    throw StructuralError(what);
  }
  Group g;
  g.names_ = std::move(names);
  g.table_ = std::move(table);
  const std::size_t n = g.order();
  for (std::size_t e = 0; e < n; ++e) {
    if (g.mul(e, e) == e) {
      g.unit_ = e;
      break;
    }
  }
  g.inverse_.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (g.mul(a, b) == g.unit_) g.inverse_[a] = b;
  return g;
}

std::size_t Group::power(std::size_t a, long long k) const {
  std::size_t base = k < 0 ? inverse(a) : a;
  unsigned long long e = k < 0 ? static_cast<unsigned long long>(-k) : static_cast<unsigned long long>(k);
  std::size_t result = unit_;
  while (e--) result = mul(result, base);
  return result;
}

std::size_t Group::element_order(std::size_t a) const {
  std::size_t k = 1;
  for (std::size_t x = a; x != unit_; x = mul(x, a)) ++k;
  return k;
}

bool Group::is_abelian() const {
  for (std::size_t a = 0; a < order(); ++a)
    for (std::size_t b = a + 1; b < order(); ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::optional<std::size_t> Group::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

Group trivial_group(std::string unit_name) {
  return Group::from_table({std::move(unit_name)}, {0});
}

Group cyclic_group(std::size_t n) {
  std::vector<std::string> names;
  std::vector<std::size_t> table(n * n);
  for (std::size_t i = 0; i < n; ++i) names.push_back(std::to_string(i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) table[i * n + j] = (i + j) % n;
  return Group::from_table(std::move(names), std::move(table));
}

Group direct_product(const Group& a, const Group& b) {
  const std::size_t na = a.order(), nb = b.order(), n = na * nb;
  std::vector<std::string> names;
  std::vector<std::size_t> table(n * n);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j) names.push_back("(" + a.name(i) + "," + b.name(j) + ")");
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      table[x * n + y] = a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb);
  return Group::from_table(std::move(names), std::move(table));
}

namespace {

std::string cycle_notation(const std::vector<std::size_t>& perm) {
  std::string out;
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i] || perm[i] == i) continue;
    out += "(";
    for (std::size_t j = i; !seen[j]; j = perm[j]) {
      seen[j] = true;
      out += std::to_string(j + 1);
    }
    out += ")";
  }
  return out.empty() ? "e" : out;
}

}  // namespace

Group symmetric_group(std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<std::size_t>> perms;
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));

  auto moved = [](const std::vector<std::size_t>& q) {
    std::size_t c = 0;
    for (std::size_t i = 0; i < q.size(); ++i) c += q[i] != i;
    return c;
  };
  std::stable_sort(perms.begin(), perms.end(), [&](const auto& x, const auto& y) {
    auto kx = std::make_pair(moved(x), cycle_notation(x));
    auto ky = std::make_pair(moved(y), cycle_notation(y));
    return kx < ky;
  });

  std::map<std::vector<std::size_t>, std::size_t> index;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < perms.size(); ++i) {
    index[perms[i]] = i;
    names.push_back(cycle_notation(perms[i]));
  }
  const std::size_t m = perms.size();
  std::vector<std::size_t> table(m * m);
  std::vector<std::size_t> r(n);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      for (std::size_t i = 0; i < n; ++i) r[i] = perms[a][perms[b][i]];
      table[a * m + b] = index.at(r);
    }
  return Group::from_table(std::move(names), std::move(table));
}

std::vector<std::size_t> even_permutations(const Group& sym) {
  // An element is even iff it is a product of an even number of
  // transpositions; the cycle notation gives sum(len - 1) over cycles.
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < sym.order(); ++a) {
    const std::string& s = sym.name(a);
    std::size_t transpositions = 0, len = 0;
    for (char c : s) {
      if (c == '(') len = 0;
      else if (c == ')') transpositions += len - 1;
      else if (c != 'e') ++len;
    }
    if (transpositions % 2 == 0) out.push_back(a);
  }
  return out;
}

Group subgroup(const Group& g, const std::vector<std::size_t>& elements) {
  std::map<std::size_t, std::size_t> pos;
  for (std::size_t i = 0; i < elements.size(); ++i) pos[elements[i]] = i;
  const std::size_t n = elements.size();
  std::vector<std::string> names;
  std::vector<std::size_t> table(n * n);
  for (std::size_t x : elements) names.push_back(g.name(x));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      auto it = pos.find(g.mul(elements[i], elements[j]));
      if (it == pos.end()) throw StructuralError("subgroup not closed under multiplication");
      table[i * n + j] = it->second;
    }
  return Group::from_table(std::move(names), std::move(table));
}

std::vector<std::size_t> generated_subgroup(const Group& g, std::span<const std::size_t> generators) {
  std::vector<std::size_t> order{g.unit()};
  std::vector<bool> seen(g.order(), false);
  seen[g.unit()] = true;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t s : generators) {
      std::size_t y = g.mul(order[i], s);
      if (!seen[y]) {
        seen[y] = true;
        order.push_back(y);
      }
    }
  return order;
}

std::vector<std::size_t> generating_set(const Group& g) {
  std::vector<std::size_t> gens;
  std::vector<bool> in(g.order(), false);
  in[g.unit()] = true;
  for (std::size_t a = 0; a < g.order(); ++a) {
    if (in[a]) continue;
    gens.push_back(a);
    std::fill(in.begin(), in.end(), false);
    for (std::size_t x : generated_subgroup(g, gens)) in[x] = true;
  }
  return gens;
}

namespace {

// Extends generator images to the subgroup generated by the first `k`
// generators; returns false on an inconsistency.
bool extend_images(const Group& a, const Group& b, const std::vector<std::size_t>& gens,
                   const std::vector<std::size_t>& images, std::size_t k,
                   std::vector<std::size_t>& map) {
  std::fill(map.begin(), map.end(), kNone);
  map[a.unit()] = b.unit();
  std::deque<std::size_t> queue{a.unit()};
  while (!queue.empty()) {
    std::size_t x = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < k; ++i) {
      std::size_t y = a.mul(x, gens[i]);
      std::size_t fy = b.mul(map[x], images[i]);
      if (map[y] == kNone) {
        map[y] = fy;
        queue.push_back(y);
      } else if (map[y] != fy) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace

void for_each_homomorphism(const Group& a, const Group& b, const HomomorphismVisitor& visit,
                           bool bijective_only) {
  if (bijective_only && a.order() != b.order()) return;
  const std::vector<std::size_t> gens = generating_set(a);
  std::vector<std::size_t> images(gens.size(), 0);
  std::vector<std::size_t> map(a.order(), kNone);
  bool stop = false;

  std::function<void(std::size_t)> search = [&](std::size_t k) {
    if (stop) return;
    if (k == gens.size()) {
      if (!extend_images(a, b, gens, images, k, map)) return;
      if (bijective_only) {
        std::vector<bool> hit(b.order(), false);
        for (std::size_t y : map) {
          if (hit[y]) return;
          hit[y] = true;
        }
      }
      if (!visit(map)) stop = true;
      return;
    }
    const std::size_t need = a.element_order(gens[k]);
    for (std::size_t y = 0; y < b.order() && !stop; ++y) {
      const std::size_t oy = b.element_order(y);
      if (bijective_only ? oy != need : need % oy != 0) continue;
      images[k] = y;
      if (extend_images(a, b, gens, images, k + 1, map)) search(k + 1);
    }
  };
  search(0);
}

std::optional<std::vector<std::size_t>> find_group_isomorphism(const Group& a, const Group& b) {
  std::optional<std::vector<std::size_t>> found;
  for_each_homomorphism(
      a, b,
      [&](const std::vector<std::size_t>& m) {
        found = m;
        return false;
      },
      true);
  return found;
}

std::vector<std::vector<std::size_t>> all_group_isomorphisms(const Group& a, const Group& b) {
  std::vector<std::vector<std::size_t>> out;
  for_each_homomorphism(
      a, b,
      [&](const std::vector<std::size_t>& m) {
        out.push_back(m);
        return true;
      },
      true);
  return out;
}

bool is_homomorphism(const Group& a, const Group& b, const std::vector<std::size_t>& map) {
  if (map.size() != a.order()) return false;
  for (std::size_t x = 0; x < a.order(); ++x)
    for (std::size_t y = 0; y < a.order(); ++y)
      if (map[a.mul(x, y)] != b.mul(map[x], map[y])) return false;
  return true;
}

}  // namespace twogroups
