#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "twogroups/common.hpp"
#include "twogroups/group.hpp"
#include "twogroups/presentation.hpp"

namespace twogroups {

struct ComplexEdge {
  std::string id;
  std::size_t src = 0;
  std::size_t tgt = 0;
  std::string label;

  friend bool operator==(const ComplexEdge&, const ComplexEdge&) = default;
};

/// A signed edge: +(e+1) traverses edge e forwards, -(e+1) backwards.
using EdgeWord = std::vector<int>;

/// A 2-complex with a free Γ-action. Action tables are indexed
/// [γ * count + item].
struct EquivariantComplex {
  std::vector<std::string> vertices;
  std::vector<ComplexEdge> edges;
  std::vector<EdgeWord> cells;
  Group gamma;
  std::vector<std::size_t> vertex_action;
  std::vector<std::size_t> edge_action;
  std::vector<std::size_t> cell_action;
  bool simply_connected_asserted = false;
  /// Set for Cayley complexes: the presentation and generator images.
  std::optional<Presentation> presentation;
  std::vector<std::size_t> generator_images;

  std::size_t act_vertex(std::size_t g, std::size_t v) const {
    return vertex_action[g * vertices.size() + v];
  }
  std::size_t act_edge(std::size_t g, std::size_t e) const { return edge_action[g * edges.size() + e]; }
  std::size_t act_cell(std::size_t g, std::size_t c) const { return cell_action[g * cells.size() + c]; }

  friend bool operator==(const EquivariantComplex&, const EquivariantComplex&) = default;
};

/// Action axioms, incidence preservation, freeness, connectivity and
/// closed cell boundaries.
ValidationReport validate_complex(const EquivariantComplex& c);

/// Cayley 2-complex of the presentation over `grp`, with generator i sent
/// to images[i]. Vertices are group elements, edge (g, s) runs g -> g·s,
/// one cell per (g, relator), Γ acts by left translation. Throws
/// PreconditionError when a relator fails in grp, when coset enumeration
/// exceeds `max_cosets`, or when the presentation does not present grp.
EquivariantComplex cayley_complex(const Presentation& p, const Group& grp,
                                  const std::vector<std::size_t>& images,
                                  std::size_t max_cosets = 100000);

/// Orbit complex. Orbits are represented by their least member; edge names
/// are the labels (suffixed with "#k" only when two orbits share a label).
struct QuotientComplex {
  std::vector<std::size_t> vertex_orbit;  // total vertex -> quotient vertex
  std::vector<std::size_t> edge_orbit;
  std::vector<std::size_t> cell_orbit;
  std::vector<std::size_t> vertex_rep;    // quotient vertex -> least total vertex
  std::vector<std::size_t> edge_rep;
  std::vector<std::size_t> cell_rep;
  std::vector<std::string> vertex_names;
  std::vector<ComplexEdge> edges;
  std::vector<EdgeWord> cells;
};

QuotientComplex quotient(const EquivariantComplex& c);

/// A based loop in the quotient: signed quotient edges.
struct EdgeLoop {
  std::size_t base = 0;
  EdgeWord word;
};

EdgeLoop parse_loop(const QuotientComplex& q, std::size_t base, std::string_view text);
std::string format_edge_word(const std::vector<ComplexEdge>& edges, const EdgeWord& w);

struct LiftedPath {
  std::vector<std::size_t> vertices;  // length word + 1
  EdgeWord edges;                     // signed total edges
};

/// Unique lift starting at `start`. Throws PreconditionError when the word
/// is not a path in the quotient or start lies over another vertex.
LiftedPath lift_path(const EquivariantComplex& c, const QuotientComplex& q, const EdgeLoop& loop,
                     std::size_t start);

/// λ(0)⁻¹λ(1), where the fiber over the base is identified with Γ through
/// its least vertex v: γ·v ↔ γ. Independent of the start in the fiber.
std::size_t boundary_map(const EquivariantComplex& c, const QuotientComplex& q, const EdgeLoop& loop,
                         std::size_t start);
std::size_t boundary_map(const EquivariantComplex& c, const QuotientComplex& q, const EdgeLoop& loop);

/// The γ with γ·start = end of the lift. Equals g·∂₁·g⁻¹ for start = g·v.
std::size_t deck_element(const EquivariantComplex& c, const QuotientComplex& q, const EdgeLoop& loop,
                         std::size_t start);

/// Edge-path group presentation: spanning tree by BFS from `base` in edge
/// order, generators are the non-tree edges, relators the cell boundaries
/// with tree edges deleted.
struct Pi1Presentation {
  Presentation presentation;
  std::vector<std::size_t> generator_edges;  // generator -> quotient edge
  std::vector<EdgeLoop> generator_loops;     // tree path, edge, tree path back
  std::vector<bool> tree;                    // quotient edge in spanning tree
};

Pi1Presentation pi1_presentation(const QuotientComplex& q, std::size_t base = 0);

enum class InjectivityStatus { kCertified, kInconclusive };

struct NullHomotopyResult {
  bool certified = false;
  std::size_t moves = 0;
};

/// Best-first search over cyclic edge words in the total complex: free
/// reduction plus replacement of part of a cell boundary by the rest of it.
NullHomotopyResult certify_null_homotopic(const EquivariantComplex& c, const EdgeWord& closed_path,
                                          std::size_t move_budget);

struct BoundaryIsoReport {
  std::size_t gamma_order = 0;
  Pi1Presentation pi1;
  std::vector<std::size_t> generator_images;  // ∂₁ of each generator loop
  ValidationReport report;                    // "homomorphism", "surjectivity"
  std::size_t homomorphism_cases = 0;
  std::vector<Word> surjectivity_words;       // per γ
  std::size_t schreier_generators = 0;
  std::size_t schreier_certified = 0;
  std::size_t moves_used = 0;
  InjectivityStatus injectivity = InjectivityStatus::kInconclusive;
  /// "cayley", "asserted" or "unknown".
  std::string simple_connectivity;

  bool iso_certified() const {
    return report.ok() && injectivity == InjectivityStatus::kCertified;
  }
};

/// (i) ∂₁ multiplicative on all pairs of generator words up to
/// `word_bound` letters; (ii) every γ is ∂₁ of a concatenation of generator
/// loops along a BFS word; (iii) every Schreier generator of the kernel of
/// the free group on the generators is certified null-homotopic in the
/// total complex within `move_budget` moves each.
BoundaryIsoReport verify_boundary_iso(const EquivariantComplex& c, std::size_t move_budget = 10000,
                                      std::size_t word_bound = 2);

struct InvarianceReport {
  ValidationReport report;  // "lift start", "deck conjugation", "reverse", "free reduction", "cell move"
  std::size_t loops = 0;
};

/// Exhaustive over based quotient loops up to `max_length` edges: every
/// start in the fiber, reversal, insertion of backtracks and insertion of
/// every rotation of every cell boundary (and its inverse) at every position.
InvarianceReport check_boundary_invariance(const EquivariantComplex& c, std::size_t max_length);

const char* to_string(InjectivityStatus s);

}  // namespace twogroups
