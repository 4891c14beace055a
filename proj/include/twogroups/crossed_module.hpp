#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "twogroups/common.hpp"
#include "twogroups/group.hpp"
#include "twogroups/two_group.hpp"

namespace twogroups {

/// (Γ, G₀, ∂, *). `action[x * |Γ| + γ]` is x*γ.
struct CrossedModule {
  Group gamma;
  Group g0;
  std::vector<std::size_t> partial;
  std::vector<std::size_t> action;

  std::size_t act(std::size_t x, std::size_t g) const { return action[x * gamma.order() + g]; }

  friend bool operator==(const CrossedModule&, const CrossedModule&) = default;
};

/// Trivial action table for the given groups.
std::vector<std::size_t> trivial_action(const Group& gamma, const Group& g0);
/// Conjugation action of G₀ on Γ through an embedding Γ -> G₀ (images of
/// each Γ element); requires the image to be normal.
std::vector<std::size_t> conjugation_action(const Group& gamma, const Group& g0,
                                            const std::vector<std::size_t>& embedding);

/// Checks: boundary homomorphism, action unital, action composition,
/// action by automorphisms, equivariance, Pfeiffer.
ValidationReport validate_crossed_module(const CrossedModule& x);

/// Translation groupoid Γ⋉G₀ with the semidirect arrow group. Arrow
/// (γ, x) has index γ·|G₀| + x, source x and target ∂(γ)x.
StrictTwoGroup to_strict_two_group(const CrossedModule& x);

struct KernelCenter {
  std::vector<std::size_t> kernel;               // ker ∂ in Γ order
  std::vector<std::vector<std::size_t>> orbits;  // G₀ / im ∂, least element first
  std::size_t commutators_checked = 0;
  ValidationReport report;                       // "kernel central"
};

/// ker ∂ ⊆ Z(Γ) by commutator enumeration, and the orbit set G₀/im∂.
/// Throws InternalInconsistency if a valid crossed module fails the check.
KernelCenter kernel_center_check(const CrossedModule& x);

/// Exchange law for composition and the semidirect product on the pairs
/// (γ, x), computed from the raw tables. Holds exactly when Pfeiffer does
/// (for modules satisfying the other axioms).
ValidationReport translation_interchange(const CrossedModule& x);

struct CrossedModuleIso {
  std::vector<std::size_t> gamma_map;
  std::vector<std::size_t> g0_map;
};

bool is_crossed_module_iso(const CrossedModule& a, const CrossedModule& b, const CrossedModuleIso& f);

/// First pair of group isomorphisms (G₀ outer, Γ inner, both in
/// enumeration order) commuting with ∂ and the actions.
std::optional<CrossedModuleIso> find_crossed_module_isomorphism(const CrossedModule& a,
                                                                const CrossedModule& b);

}  // namespace twogroups
