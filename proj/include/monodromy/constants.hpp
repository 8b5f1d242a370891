#ifndef MONODROMY_CONSTANTS_HPP
#define MONODROMY_CONSTANTS_HPP

#include "monodromy/int_matrix.hpp"
#include "monodromy/mod_matrix.hpp"
#include "monodromy/symplectic.hpp"
#include "monodromy/word.hpp"

namespace monodromy {

// The fixed cast of the verification suite: the local monodromy
// generators A, T (and T_inf) acting on degree-3 cohomology of the
// quintic-mirror fibers, the rational conjugator P that unitriangularizes
// their inverses mod 5, the invariant symplectic form recovered from the
// generators, and the mod-5 images plus the two elementary matrices the
// closure argument hinges on.
struct MonodromyConstants {
  IntMatrix A;
  IntMatrix T;
  IntMatrix T_inf;
  IntMatrix P;
  SymplecticForm form;

  ModMatrix A_tilde;  // reduce_mod(P^-1 A^-1 P, 5)
  ModMatrix T_tilde;  // reduce_mod(P^-1 T^-1 P, 5)
  ModMatrix E1;       // I + e(0,3) mod 5
  ModMatrix E2;       // I + e(1,3) mod 5

  // Generators named "A" and "T" over Z resp. Z/5Z.
  IntGeneratorSet int_generators() const;
  GeneratorSet mod_generators() const;

  // Builds everything from the literal A, T, T_inf, P; derives the form
  // and the mod-5 images, and cross-checks a few pinned entries so a
  // silent typo in the literals cannot slip through.
  static MonodromyConstants standard();
};

}  // namespace monodromy

#endif
