#pragma once

#include <string>
#include <vector>

#include "twogroups/bibundle.hpp"
#include "twogroups/covering.hpp"
#include "twogroups/crossed_module.hpp"
#include "twogroups/io.hpp"
#include "twogroups/simplicial.hpp"
#include "twogroups/two_group.hpp"

/// Fixed example instances. Everything in catalog/ is generated from here.
namespace twogroups::catalog {

CrossedModule xm1();    // ℤ/2 -> ℤ/4, ∂(1) = 2, trivial action
CrossedModule xm2();    // S₃ -> S₃, identity, conjugation
CrossedModule xm3();    // ℤ/2 -> 1
CrossedModule xm4();    // ℤ/2×ℤ/2 -> ℤ/2, first projection, trivial action
CrossedModule xm5();    // ℤ/2×ℤ/2 -> ℤ/2, trivial ∂, swap action
CrossedModule xm6();    // ℤ/3 -> S₃, inclusion, conjugation
CrossedModule xm_s4();  // A₄ -> S₄, inclusion, conjugation

CrossedModule broken_boundary();  // ℤ/2 -> ℤ/4 with ∂(1) = 1
CrossedModule broken_pfeiffer();  // S₃ -> 1

/// Objects ℤ/2, arrows from ℤ/2 -> ℤ/2 with trivial ∂, associator
/// a(x,y,z) = (xyz, xyz), d_1 = (1,0), everything else identities.
CoherentTwoGroup t_omega();
/// t_omega with the associator at (1,1,0) flipped.
CoherentTwoGroup t_omega_tampered();
/// t_omega with the associator at (1,1,1) flipped, i.e. ω ≡ 0 but d_1 kept.
CoherentTwoGroup t_omega_flip111();
/// Trivial associator, ℓ_x = r_x = (1, x) over ℤ/n -> ℤ/2 with trivial ∂.
CoherentTwoGroup semistrict_lunit(std::size_t n);
/// Codiscrete groupoid on {1, z} with z⊗z = z.
CoherentTwoGroup monoid_objects();

EquivariantComplex cayley_z2();
EquivariantComplex cayley_z3();
EquivariantComplex cayley_z2xz2();
EquivariantComplex cayley_s3();

Bibundle bibundle_identity_z3();
/// Bibundle of the reduction homomorphism ℤ/4 -> ℤ/2 between deloopings.
Bibundle bibundle_reduction();

struct Entry {
  std::string file;  // name inside catalog/
  std::string kind;  // CLI input kind
  io::Json doc;
};

/// Every catalog file in a fixed order.
std::vector<Entry> entries();

}  // namespace twogroups::catalog
