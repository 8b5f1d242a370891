#ifndef MONODROMY_SYMPLECTIC_HPP
#define MONODROMY_SYMPLECTIC_HPP

#include <gmpxx.h>

#include <vector>

#include "monodromy/int_matrix.hpp"

namespace monodromy {

// Gram matrix of a unimodular anti-symmetric bilinear form.
struct SymplecticForm {
  IntMatrix gram;

  // Validates: even dimension, J^T == -J, det(J) == 1.
  explicit SymplecticForm(IntMatrix j);
};

// x^T J x == J, exactly.
bool is_symplectic(const IntMatrix& x, const SymplecticForm& form);

// Basis of the integer solution space of { m^T J m == J for all m in gens,
// J^T == -J }, computed by exact rational elimination on the 6-parameter
// antisymmetric coordinates (general dim: n(n-1)/2 parameters). Each basis
// matrix is scaled to content 1 with its first nonzero upper entry positive.
// Throws EmptySolutionError when only J = 0 solves the system.
std::vector<IntMatrix> find_invariant_form(const std::vector<IntMatrix>& gens);

// find_invariant_form specialized to the generic case: requires the solution
// space to be one-dimensional with a unimodular generator, and wraps it.
SymplecticForm discover_symplectic_form(const std::vector<IntMatrix>& gens);

// I + c * v * (v^T J): symplectic for every integer vector v and scalar c.
IntMatrix symplectic_transvection(const SymplecticForm& form,
                                  const std::vector<mpz_class>& v,
                                  const mpz_class& c);

}  // namespace monodromy

#endif
