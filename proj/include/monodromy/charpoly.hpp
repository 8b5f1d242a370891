#ifndef MONODROMY_CHARPOLY_HPP
#define MONODROMY_CHARPOLY_HPP

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

#include "monodromy/int_matrix.hpp"

namespace monodromy {

// Monic integer polynomial x^d + c[d-1] x^{d-1} + ... + c[1] x + c[0].
// coeff[k] multiplies x^k; the leading 1 is implicit.
struct CharPoly {
  std::size_t degree = 0;
  std::vector<mpz_class> coeff;

  // True when the coefficient list reads the same in both directions
  // (with the implicit leading 1 counted), i.e. c[k] == c[d-k] for all k.
  bool palindromic() const;

  std::string to_string() const;

  friend bool operator==(const CharPoly& a, const CharPoly& b) {
    return a.degree == b.degree && a.coeff == b.coeff;
  }
};

// Exact characteristic polynomial of a, division-free (Berkowitz).
CharPoly charpoly(const IntMatrix& a);

}  // namespace monodromy

#endif
