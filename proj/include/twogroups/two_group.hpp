#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "twogroups/common.hpp"
#include "twogroups/group.hpp"
#include "twogroups/groupoid.hpp"

namespace twogroups {

/// A groupoid with tensor data, unit, associator, unit constraints and
/// adjunction data. Conventions:
///   a(x,y,z): x⊗(y⊗z) -> (x⊗y)⊗z
///   lunit(x): x⊗𝕀 -> x,   runit(x): 𝕀⊗x -> x
///   adj_d(x): 𝕀 -> x⊗x̄,   adj_e(x): x̄⊗x -> 𝕀
struct CoherentTwoGroup {
  FiniteGroupoid base;
  std::vector<std::size_t> tensor_obj;  // objects²
  std::vector<std::size_t> tensor_arr;  // arrows²
  std::size_t unit = 0;
  std::vector<std::size_t> assoc;  // objects³
  std::vector<std::size_t> lunit;
  std::vector<std::size_t> runit;
  std::vector<std::size_t> bar;
  std::vector<std::size_t> adj_d;
  std::vector<std::size_t> adj_e;

  std::size_t tobj(std::size_t x, std::size_t y) const {
    return tensor_obj[x * base.object_count() + y];
  }
  std::size_t tarr(std::size_t g, std::size_t h) const {
    return tensor_arr[g * base.arrow_count() + h];
  }
  std::size_t a(std::size_t x, std::size_t y, std::size_t z) const {
    const std::size_t n = base.object_count();
    return assoc[(x * n + y) * n + z];
  }
  /// g ⊗ id_x and id_x ⊗ g.
  std::size_t tensor_right(std::size_t g, std::size_t x) const { return tarr(g, base.ident(x)); }
  std::size_t tensor_left(std::size_t x, std::size_t g) const { return tarr(base.ident(x), g); }

  friend bool operator==(const CoherentTwoGroup&, const CoherentTwoGroup&) = default;
};

/// Group object in groupoids. `objects` and `arrows` are indexed like the
/// objects and arrows of `base`.
struct StrictTwoGroup {
  FiniteGroupoid base;
  Group objects;
  Group arrows;

  friend bool operator==(const StrictTwoGroup&, const StrictTwoGroup&) = default;
};

/// Structural checks (table shapes, endpoints of every structure arrow,
/// bar(𝕀) = 𝕀) first; if those pass, every coherence check runs and all
/// failures are collected: tensor identities, exchange law, naturality of
/// a, ℓ and r, pentagon, triangle and both zig-zags.
ValidationReport validate_coherent(const CoherentTwoGroup& t);

/// Group tables aligned with the base, source/target/identity are
/// homomorphisms, exchange law.
ValidationReport validate_strict(const StrictTwoGroup& s);

/// The strict 2-group with identity associator, unitors and adjunction data.
CoherentTwoGroup as_coherent(const StrictTwoGroup& s);

/// Six-step transpose of g: x -> y, an arrow ȳ -> x̄. Throws
/// InternalInconsistency when the result does not satisfy
/// e_x ∘ (h⊗x) = e_y ∘ (ȳ⊗g).
std::size_t transpose(const CoherentTwoGroup& t, std::size_t g);

/// True when h satisfies the characterization square for g.
bool satisfies_transpose_square(const CoherentTwoGroup& t, std::size_t g, std::size_t h);

/// i(x) = x̄, i(g) = transpose(g⁻¹). Verified to be a functor.
GroupoidHom inversion_functor(const CoherentTwoGroup& t);

struct UnitIsotropy {
  Group group;                      // Aut(𝕀) under composition, path order
  std::vector<std::size_t> arrows;  // group element i is arrow arrows[i]
  std::size_t commutators_checked = 0;
  ValidationReport report;          // "Eckmann-Hilton" check
};

UnitIsotropy unit_isotropy(const CoherentTwoGroup& t);

struct AdjunctionData {
  std::vector<std::size_t> bar;
  std::vector<std::size_t> adj_d;
  std::vector<std::size_t> adj_e;
};

/// Brute-force search for bar, d, e satisfying both zig-zags, object by
/// object in canonical order. The result is a choice, not canonical.
std::optional<AdjunctionData> search_adjunction_data(const CoherentTwoGroup& t);

}  // namespace twogroups
