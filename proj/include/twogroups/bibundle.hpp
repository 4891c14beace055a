#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "twogroups/common.hpp"
#include "twogroups/groupoid.hpp"

namespace twogroups {

/// A bibundle K -> K' on a finite set E.
///   left_action[k * |E| + e]   = k·e, defined iff s(k) = J_l(e); J_l(k·e) = t(k)
///   right_action[e * |K'₁| + k'] = e·k', defined iff J_r(e) = t(k'); J_r(e·k') = s(k')
/// Undefined entries are kNone.
struct Bibundle {
  FiniteGroupoid left;
  FiniteGroupoid right;
  std::vector<std::string> total;
  std::vector<std::size_t> left_moment;
  std::vector<std::size_t> right_moment;
  std::vector<std::size_t> left_action;
  std::vector<std::size_t> right_action;

  std::size_t size() const { return total.size(); }
  std::size_t act_left(std::size_t k, std::size_t e) const { return left_action[k * size() + e]; }
  std::size_t act_right(std::size_t e, std::size_t k) const {
    return right_action[e * right.arrow_count() + k];
  }

  friend bool operator==(const Bibundle&, const Bibundle&) = default;
};

/// E = {(x, k') : t(k') = f(x)}, named "(x,k')", in order of x then k'.
Bibundle from_functor(const GroupoidHom& f, const FiniteGroupoid& src, const FiniteGroupoid& dst);
Bibundle identity_bibundle(const FiniteGroupoid& g);

struct PrincipalReport {
  ValidationReport report;       // structure, action axioms, right principality
  ValidationReport left_report;  // left principality
  bool right_principal = false;
  bool morita = false;
};

PrincipalReport validate_principal(const Bibundle& b);

/// (E₁ ×_{K'₀} E₂) / K' with the least pair of each orbit as representative,
/// named "[e1,e2]". Throws PreconditionError on a middle-groupoid mismatch.
Bibundle compose(const Bibundle& b1, const Bibundle& b2);

/// The same set read as a bibundle K' -> K, with inverted actions.
Bibundle reverse(const Bibundle& b);

/// Bijection E₁ -> E₂ commuting with both moments and both actions, if any.
std::optional<std::vector<std::size_t>> bibundle_isomorphism(const Bibundle& a, const Bibundle& b);

/// Morita bibundle between one-object groupoids found among the bibundles of
/// homomorphisms, in enumeration order. Throws PreconditionError unless
/// both groupoids have a single object.
std::optional<Bibundle> find_morita_bibundle(const FiniteGroupoid& a, const FiniteGroupoid& b);

}  // namespace twogroups
