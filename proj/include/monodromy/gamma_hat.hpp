#ifndef MONODROMY_GAMMA_HAT_HPP
#define MONODROMY_GAMMA_HAT_HPP

#include <cstdint>

#include "monodromy/group.hpp"
#include "monodromy/mod_matrix.hpp"

namespace monodromy {

// The unitriangular mod-5 matrix parametrized by (n, a, b, c):
//   (0,1) = n, (0,2) = 3n^2 + 2n, (0,3) = a,
//   (1,2) = n, (1,3) = b, (2,3) = c.
ModMatrix gamma_hat_element(std::uint64_t n, std::uint64_t a, std::uint64_t b,
                            std::uint64_t c);

// All 5^4 parameter tuples, verified pairwise distinct and closed under
// multiplication (ClosureViolationError otherwise — it never is).
FiniteMatrixGroup enumerate_gamma_hat();

}  // namespace monodromy

#endif
