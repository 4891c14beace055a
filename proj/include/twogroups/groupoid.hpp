#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "twogroups/common.hpp"
#include "twogroups/group.hpp"

namespace twogroups {

struct ArrowRecord {
  std::string id;
  std::size_t src = kNone;
  std::size_t tgt = kNone;

  friend bool operator==(const ArrowRecord&, const ArrowRecord&) = default;
};

/// A finite groupoid given by explicit tables. Objects and arrows are
/// indices into the input order. `comp(h, g)` is "first g, then h" and is
/// kNone exactly on non-composable pairs.
///
/// The constructor only checks table shapes; `validate_groupoid` does the rest.
class FiniteGroupoid {
 public:
  FiniteGroupoid() = default;
  FiniteGroupoid(std::vector<std::string> objects, std::vector<ArrowRecord> arrows,
                 std::vector<std::size_t> comp, std::vector<std::size_t> ident,
                 std::vector<std::size_t> inv);

  std::size_t object_count() const { return objects_.size(); }
  std::size_t arrow_count() const { return arrows_.size(); }

  std::size_t src(std::size_t g) const { return arrows_[g].src; }
  std::size_t tgt(std::size_t g) const { return arrows_[g].tgt; }
  std::size_t comp(std::size_t h, std::size_t g) const { return comp_[h * arrow_count() + g]; }
  std::size_t ident(std::size_t x) const { return ident_[x]; }
  std::size_t inv(std::size_t g) const { return inv_[g]; }

  /// comp that throws InternalInconsistency instead of returning kNone.
  std::size_t then(std::size_t g, std::size_t h) const;

  const std::string& object_name(std::size_t x) const { return objects_[x]; }
  const std::string& arrow_name(std::size_t g) const { return arrows_[g].id; }
  const std::vector<std::string>& objects() const { return objects_; }
  const std::vector<ArrowRecord>& arrows() const { return arrows_; }
  const std::vector<std::size_t>& comp_table() const { return comp_; }
  const std::vector<std::size_t>& ident_table() const { return ident_; }
  const std::vector<std::size_t>& inv_table() const { return inv_; }

  std::optional<std::size_t> find_object(std::string_view name) const;
  std::optional<std::size_t> find_arrow(std::string_view name) const;

  /// Arrows x -> y in canonical order.
  std::vector<std::size_t> hom(std::size_t x, std::size_t y) const;

  friend bool operator==(const FiniteGroupoid&, const FiniteGroupoid&) = default;

 private:
  std::vector<std::string> objects_;
  std::vector<ArrowRecord> arrows_;
  std::vector<std::size_t> comp_;
  std::vector<std::size_t> ident_;
  std::vector<std::size_t> inv_;
};

struct GroupoidHom {
  std::vector<std::size_t> obj_map;
  std::vector<std::size_t> arr_map;

  friend bool operator==(const GroupoidHom&, const GroupoidHom&) = default;
};

struct NatTransform {
  std::vector<std::size_t> component;  // object of the source -> arrow of the target

  friend bool operator==(const NatTransform&, const NatTransform&) = default;
};

ValidationReport validate_groupoid(const FiniteGroupoid& g);

/// Functor checks: endpoints, composition and identities are preserved.
ValidationReport validate_hom(const GroupoidHom& f, const FiniteGroupoid& a, const FiniteGroupoid& b);
bool is_invertible(const GroupoidHom& f, const FiniteGroupoid& a, const FiniteGroupoid& b);

GroupoidHom identity_hom(const FiniteGroupoid& g);
/// g after f.
GroupoidHom compose_homs(const GroupoidHom& g, const GroupoidHom& f);

/// Returns an invertible homomorphism a -> b if one exists. Deterministic:
/// components, roots and vertex-group generator images are tried in
/// canonical order and the first success is returned.
std::optional<GroupoidHom> find_isomorphism(const FiniteGroupoid& a, const FiniteGroupoid& b);

/// Searches for a natural isomorphism F => G between homomorphisms
/// a -> b. Components are fixed per connected component of `a` by the
/// choice at its root; the rest follows from naturality along tree arrows.
std::optional<NatTransform> find_natural_isomorphism(const GroupoidHom& f, const GroupoidHom& g,
                                                     const FiniteGroupoid& a,
                                                     const FiniteGroupoid& b);
bool is_natural(const NatTransform& eta, const GroupoidHom& f, const GroupoidHom& g,
                const FiniteGroupoid& a, const FiniteGroupoid& b);

struct Component {
  std::size_t root = 0;
  std::vector<std::size_t> objects;  // canonical order, root first
  std::vector<std::size_t> tree;     // tree[i]: first arrow root -> objects[i]
  std::vector<std::size_t> arrows;   // all arrows between objects of the component
};

std::vector<Component> connected_components(const FiniteGroupoid& g);

/// Automorphism group of x. Multiplication is path order: mul(a, b) is
/// "a, then b", i.e. comp(b, a). Element names are arrow ids.
Group vertex_group(const FiniteGroupoid& g, std::size_t x);

/// One-object groupoid of a group, object "*". Composition follows path
/// order, comp(h, g) = g·h, so that nerve faces multiply as g1·g2.
FiniteGroupoid delooping(const Group& g, std::string object = "*");
FiniteGroupoid discrete_groupoid(const std::vector<std::string>& objects);
/// Exactly one arrow between any two objects.
FiniteGroupoid codiscrete_groupoid(const std::vector<std::string>& objects);
/// Full subgroupoid on the listed objects (kept in that order) plus the
/// inclusion homomorphism into g.
std::pair<FiniteGroupoid, GroupoidHom> full_subgroupoid(const FiniteGroupoid& g,
                                                        const std::vector<std::size_t>& objects);
/// Same groupoid with objects and arrows permuted and renamed. perm_obj[i] is
/// the new position of old object i; likewise for arrows.
FiniteGroupoid relabel(const FiniteGroupoid& g, const std::vector<std::size_t>& perm_obj,
                       const std::vector<std::size_t>& perm_arr, const std::string& prefix);

}  // namespace twogroups
