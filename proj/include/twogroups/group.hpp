#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "twogroups/common.hpp"

namespace twogroups {

/// A finite group given by its full multiplication table. Elements are the
/// indices 0..order()-1 in the order the names were supplied; every search
/// over a group walks that order.
class Group {
 public:
  Group() = default;

  /// Throws StructuralError when the table is not a group table.
  static Group from_table(std::vector<std::string> names, std::vector<std::size_t> table);

  std::size_t order() const { return names_.size(); }
  std::size_t mul(std::size_t a, std::size_t b) const { return table_[a * order() + b]; }
  std::size_t inverse(std::size_t a) const { return inverse_[a]; }
  std::size_t unit() const { return unit_; }
  std::size_t power(std::size_t a, long long k) const;
  std::size_t element_order(std::size_t a) const;
  bool is_abelian() const;

  const std::string& name(std::size_t a) const { return names_[a]; }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<std::size_t>& table() const { return table_; }
  std::optional<std::size_t> find(std::string_view name) const;

  friend bool operator==(const Group&, const Group&) = default;

 private:
  std::vector<std::string> names_;
  std::vector<std::size_t> table_;
  std::vector<std::size_t> inverse_;
  std::size_t unit_ = 0;
};

/// Associativity, two-sided unit and inverses, with witnesses.
ValidationReport validate_group_table(const std::vector<std::string>& names,
                                      const std::vector<std::size_t>& table);

Group trivial_group(std::string unit_name = "e");
Group cyclic_group(std::size_t n);
Group direct_product(const Group& a, const Group& b);
/// Permutations of {1..n} written in cycle notation, identity first, then
/// ordered by (cycle type size, lexicographic images). Product is
/// composition: (p*q)(i) = p(q(i)).
Group symmetric_group(std::size_t n);
/// Subgroup on the listed elements (kept in the listed order, unit first
/// recommended). Throws StructuralError when not closed.
Group subgroup(const Group& g, const std::vector<std::size_t>& elements);
std::vector<std::size_t> even_permutations(const Group& sym);

/// Closure of `generators` under multiplication, in BFS order from the unit.
std::vector<std::size_t> generated_subgroup(const Group& g, std::span<const std::size_t> generators);

/// Greedy generating set: walks the elements in order and keeps each one not
/// already in the subgroup generated so far.
std::vector<std::size_t> generating_set(const Group& g);

using HomomorphismVisitor = std::function<bool(const std::vector<std::size_t>&)>;

/// Enumerates every homomorphism a -> b in a deterministic order (backtracking
/// over images of `generating_set(a)`). The visitor returns false to stop.
void for_each_homomorphism(const Group& a, const Group& b, const HomomorphismVisitor& visit,
                           bool bijective_only = false);

std::optional<std::vector<std::size_t>> find_group_isomorphism(const Group& a, const Group& b);
std::vector<std::vector<std::size_t>> all_group_isomorphisms(const Group& a, const Group& b);

bool is_homomorphism(const Group& a, const Group& b, const std::vector<std::size_t>& map);

}  // namespace twogroups
