#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "twogroups/common.hpp"
#include "twogroups/group.hpp"
#include "twogroups/groupoid.hpp"
#include "twogroups/two_group.hpp"

namespace twogroups {

/// Layers X_0..X_N with faces[n][i]: X_n -> X_{n-1} (n >= 1, i <= n) and
/// degeneracies[n][i]: X_n -> X_{n+1} (n < N, i <= n).
struct TruncatedSimplicialSet {
  std::vector<std::vector<std::string>> layers;
  std::vector<std::vector<std::vector<std::size_t>>> faces;
  std::vector<std::vector<std::vector<std::size_t>>> degeneracies;

  std::size_t depth() const { return layers.empty() ? 0 : layers.size() - 1; }
  std::size_t count(std::size_t n) const { return layers[n].size(); }
  std::size_t face(std::size_t n, std::size_t i, std::size_t x) const { return faces[n][i][x]; }
  std::size_t degen(std::size_t n, std::size_t i, std::size_t x) const {
    return degeneracies[n][i][x];
  }

  friend bool operator==(const TruncatedSimplicialSet&, const TruncatedSimplicialSet&) = default;
};

/// All simplicial identities on every element up to the depth.
ValidationReport validate_simplicial(const TruncatedSimplicialSet& x);

/// V ⊆ U with a partial product V×V ⇀ U (kNone where undefined). Elements
/// of V are indexed 0..|V|-1; `carrier[v]` is the index in U.
struct PartialGroup {
  std::vector<std::string> ambient;
  std::vector<std::size_t> carrier;
  std::vector<std::size_t> product;  // |V|² -> U or kNone
  std::vector<std::size_t> inverse;  // V -> V
  std::size_t unit = 0;              // index in V

  std::size_t size() const { return carrier.size(); }
  const std::string& name(std::size_t v) const { return ambient[carrier[v]]; }
  /// Product as an element of V, kNone when undefined or outside V.
  std::size_t mul_in_v(std::size_t a, std::size_t b) const;
};

/// Unit, inverse and associativity wherever both sides are defined in V.
ValidationReport validate_partial_group(const PartialGroup& p);

/// V = {-k..k} inside U = {-2k..2k} with integer addition, V ordered
/// 0, 1, -1, 2, -2, ...
PartialGroup truncated_integers(std::size_t k);
/// The whole group as a partial group.
PartialGroup as_partial_group(const Group& g);

/// X_n = composable strings (g1, ..., gn) in path order, named "[g1|...|gn]",
/// in lexicographic order of arrow indices. d_i composes g_i and g_{i+1}.
TruncatedSimplicialSet nerve_of_groupoid(const FiniteGroupoid& g, std::size_t depth);

/// X_0 = {*}; X_n = tuples all of whose consecutive sub-products lie in V.
TruncatedSimplicialSet nerve_of_partial_group(const PartialGroup& p, std::size_t depth);

/// |X_3| of the bar nerve is |arrows|³; larger inputs are refused.
inline constexpr std::size_t kMaxBarNerveSimplices = 2000000;

/// Bar nerve of a strict 2-group, depth 3. X_0 = {*}, X_1 = objects,
/// X_2 = (x01, x12, g) with g: x01⊗x12 -> x02, X_3 = compatible triples of
/// 2-cells with the fourth face determined by strictness. Throws
/// PreconditionError when |X_3| would exceed kMaxBarNerveSimplices.
TruncatedSimplicialSet two_group_nerve(const StrictTwoGroup& s);

struct HornSummary {
  std::size_t m = 0;
  std::size_t j = 0;
  bool uniqueness_required = false;
  std::size_t horns = 0;
  std::size_t missing = 0;
  std::size_t ambiguous = 0;
  /// Faces (i, simplex name) of the first missing / ambiguous horn.
  std::vector<std::pair<std::size_t, std::string>> first_missing;
  std::vector<std::pair<std::size_t, std::string>> first_ambiguous;
  std::size_t first_ambiguous_fillers = 0;

  bool ok() const { return missing == 0 && (!uniqueness_required || ambiguous == 0); }
};

struct KanReport {
  std::size_t n = 0;
  std::size_t max_m = 0;
  std::vector<HornSummary> horns;  // m ascending, then j

  bool ok() const;
  const HornSummary* first_failure() const;
  const HornSummary* at(std::size_t m, std::size_t j) const;
};

/// Every horn Λ[m, j] for 1 <= m <= max_m must have a filler; for m > n
/// the filler must be unique. Throws PreconditionError if max_m > depth.
KanReport kan_check(const TruncatedSimplicialSet& x, std::size_t n, std::size_t max_m);

/// Objects X_1, arrows d_2⁻¹(s_0(X_0)) with source d_0 and target d_1,
/// composition d_1 of the unique filler of the Λ[3,1] horn
/// (σ, τ, s_0 s_0 *), identities s_0(x), inverses by search.
/// Throws PreconditionError when |X_0| != 1, depth < 3, or a filler is
/// missing or not unique.
FiniteGroupoid two_kan_to_groupoid(const TruncatedSimplicialSet& x);

}  // namespace twogroups
