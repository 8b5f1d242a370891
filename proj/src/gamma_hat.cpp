#include "monodromy/gamma_hat.hpp"

#include <algorithm>

namespace monodromy {

ModMatrix gamma_hat_element(std::uint64_t n, std::uint64_t a, std::uint64_t b,
                            std::uint64_t c) {
  n %= 5;
  ModMatrix x = ModMatrix::identity(4, 5);
  x.set(0, 1, n);
  x.set(0, 2, 3 * n * n + 2 * n);
  x.set(0, 3, a);
  x.set(1, 2, n);
  x.set(1, 3, b);
  x.set(2, 3, c);
  return x;
}

FiniteMatrixGroup enumerate_gamma_hat() {
  FiniteMatrixGroup g;
  g.dim = 4;
  g.modulus = 5;
  g.elements.reserve(625);
  for (std::uint64_t n = 0; n < 5; ++n)
    for (std::uint64_t a = 0; a < 5; ++a)
      for (std::uint64_t b = 0; b < 5; ++b)
        for (std::uint64_t c = 0; c < 5; ++c)
          g.elements.push_back(encode(gamma_hat_element(n, a, b, c)));

  std::sort(g.elements.begin(), g.elements.end());
  if (std::adjacent_find(g.elements.begin(), g.elements.end()) !=
      g.elements.end()) {
    throw ClosureViolationError("parameter tuples are not injective");
  }

  // The pattern must actually be a group: check every pairwise product
  // stays inside (625^2 multiplications, well under a second).
  std::vector<ModMatrix> mats;
  mats.reserve(g.elements.size());
  for (MatrixCode c : g.elements) mats.push_back(decode(c, 4, 5));
  for (const ModMatrix& x : mats) {
    for (const ModMatrix& y : mats) {
      if (!g.contains_code(encode(x * y))) {
        throw ClosureViolationError("pattern set not closed under product");
      }
    }
  }

  g.closed = true;
  return g;
}

}  // namespace monodromy
