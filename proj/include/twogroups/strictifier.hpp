#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "twogroups/common.hpp"
#include "twogroups/crossed_module.hpp"
#include "twogroups/group.hpp"
#include "twogroups/two_group.hpp"

namespace twogroups {

class NotSemistrict : public PreconditionError {
 public:
  NotSemistrict(std::string reason, std::vector<std::string> witness)
      : PreconditionError("NotSemistrict: " + reason), reason_(std::move(reason)),
        witness_(std::move(witness)) {}
  const std::string& reason() const { return reason_; }
  const std::vector<std::string>& witness() const { return witness_; }

 private:
  std::string reason_;
  std::vector<std::string> witness_;
};

/// A conclusion that the smooth theory derives from connectedness of the
/// base fails on this finite input.
class ConnectednessAnalogViolated : public std::runtime_error {
 public:
  ConnectednessAnalogViolated(std::string lemma, std::vector<std::string> witness)
      : std::runtime_error("ConnectednessAnalogViolated: " + lemma), lemma_(std::move(lemma)),
        witness_(std::move(witness)) {}
  const std::string& lemma() const { return lemma_; }
  const std::vector<std::string>& witness() const { return witness_; }

 private:
  std::string lemma_;
  std::vector<std::string> witness_;
};

/// Lemma names used by ConnectednessAnalogViolated.
inline constexpr const char* kLemmaAssociatorTrivial = "associator is trivial";
inline constexpr const char* kLemmaUnitTensor = "unit tensor is identity";
inline constexpr const char* kLemmaUnitConstraints = "unit constraints factor through the unit";
inline constexpr const char* kLemmaContragredient = "contragredient is a tensor inverse";

/// The objects under ⊗ as a group, if they form one with unit 𝕀.
std::optional<Group> object_group(const CoherentTwoGroup& t);

struct AssociatorCocycle {
  std::vector<std::size_t> h;  // objects³ -> arrow in Aut(𝕀)
  std::size_t h0 = kNone;
  bool certificate = false;    // h0∘h0 == h0∘h0∘h0
  bool constant = false;
  bool trivial = false;        // h ≡ id_𝕀
};

/// h(x,y,z) = a_{x,y,z} ⊗ id of the inverse of x⊗y⊗z. Throws
/// PreconditionError when the objects do not form a group.
AssociatorCocycle associator_cocycle(const CoherentTwoGroup& t);

struct SemistrictResult {
  bool semistrict = false;
  std::string reason;                 // empty when semistrict
  std::vector<std::string> witness;
};

/// Objects form a group with unit 𝕀 and every d_x, e_x is id_𝕀. The witness
/// names the first failure: the object group first, then d_x and e_x for x
/// in canonical order.
SemistrictResult is_semistrict(const CoherentTwoGroup& t);

/// Tensor functor constraints of the identity functor G -> Str(G):
/// t_{x,y} = id_{x⊗y} and the unit constraint u.
struct StrictificationEquivalence {
  std::vector<std::size_t> t;  // objects² -> arrow
  std::size_t u = kNone;
};

struct Strictification {
  StrictTwoGroup strict;
  StrictificationEquivalence equivalence;
};

/// Discards a, ℓ, r after verifying on the finite input: associator
/// trivial, g⊗𝕀 = g = 𝕀⊗g, ℓ and r are ℓ_𝕀 tensored with identities,
/// and g ⊗ ḡ = id_𝕀 = ḡ ⊗ g for ḡ = transpose(g⁻¹).
/// Throws NotSemistrict or ConnectednessAnalogViolated.
Strictification strictify(const CoherentTwoGroup& t);

/// Arrows with target 𝕀, in canonical order.
std::vector<std::size_t> gamma_arrows(const StrictTwoGroup& s);

/// Γ = t⁻¹(𝕀) under ⊗ (elements named by their arrows), ∂ = source,
/// x*γ = x⊗γ⊗x̄.
CrossedModule extract_crossed_module(const StrictTwoGroup& s);

struct ArrowGroup {
  CrossedModule xmod;                // extracted module
  std::vector<std::size_t> gamma;    // Γ index -> arrow
  Group semidirect;                  // Γ⋊G₀, pair (γ, x) at γ·|G₀| + x
  std::vector<std::size_t> psi;      // pair -> arrow, γ ⊗ x
  std::vector<std::size_t> phi;      // arrow -> pair, (g ⊗ tgt(g)-bar, tgt(g))
  std::size_t products_checked = 0;
  ValidationReport report;           // "Psi∘Phi", "Phi∘Psi", "Phi homomorphism"
};

ArrowGroup arrow_group(const StrictTwoGroup& s);

}  // namespace twogroups
