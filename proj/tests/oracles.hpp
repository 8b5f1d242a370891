#ifndef TESTS_ORACLES_HPP
#define TESTS_ORACLES_HPP

// Independent reference implementations the test suites check the library
// against. Everything here is deliberately naive (cofactor expansions,
// schoolbook polynomial arithmetic) and shares no code with src/.

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "monodromy/int_matrix.hpp"

namespace oracles {

// --- polynomials over Z, coeff[k] multiplies x^k ---------------------------

using Poly = std::vector<mpz_class>;

inline void poly_trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline Poly poly_sub(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), mpz_class(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  poly_trim(r);
  return r;
}

inline Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, mpz_class(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  poly_trim(r);
  return r;
}

// --- cofactor expansions ----------------------------------------------------

template <typename Cell, typename Mul, typename Sub>
Cell det_expand(const std::vector<std::vector<Cell>>& m, Mul mul, Sub sub,
                const Cell& zero) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  Cell acc = zero;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::vector<Cell>> minor;
    minor.reserve(n - 1);
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Cell> row;
      row.reserve(n - 1);
      for (std::size_t jj = 0; jj < n; ++jj) {
        if (jj != j) row.push_back(m[i][jj]);
      }
      minor.push_back(std::move(row));
    }
    Cell term = mul(m[0][j], det_expand(minor, mul, sub, zero));
    if (j % 2 == 1) term = sub(zero, term);
    acc = sub(acc, sub(zero, term));  // acc += term
  }
  return acc;
}

inline mpz_class det_cofactor(const monodromy::IntMatrix& a) {
  std::vector<std::vector<mpz_class>> m(a.dim(),
                                        std::vector<mpz_class>(a.dim()));
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) m[i][j] = a.at(i, j);
  return det_expand<mpz_class>(
      m, [](const mpz_class& x, const mpz_class& y) { return mpz_class(x * y); },
      [](const mpz_class& x, const mpz_class& y) { return mpz_class(x - y); },
      mpz_class(0));
}

// charpoly as det(xI - A) over Z[x]; returns all degree+1 coefficients,
// coeff[k] multiplying x^k (so coeff.back() == 1).
inline Poly charpoly_cofactor(const monodromy::IntMatrix& a) {
  const std::size_t n = a.dim();
  std::vector<std::vector<Poly>> m(n, std::vector<Poly>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Poly cell{mpz_class(-a.at(i, j))};
      if (i == j) cell.push_back(1);  // x on the diagonal
      poly_trim(cell);
      m[i][j] = std::move(cell);
    }
  }
  Poly det = det_expand<Poly>(m, poly_mul, poly_sub, Poly{});
  det.resize(n + 1, mpz_class(0));
  return det;
}

// p(A) for p given by all degree+1 coefficients (coeff[k] * x^k), Horner.
inline monodromy::IntMatrix poly_eval_matrix(const Poly& coeff,
                                             const monodromy::IntMatrix& a) {
  monodromy::IntMatrix acc(a.dim());  // zero
  for (std::size_t k = coeff.size(); k-- > 0;) {
    acc = acc * a;
    for (std::size_t i = 0; i < a.dim(); ++i) acc.at(i, i) += coeff[k];
  }
  return acc;
}

// --- randomness (xorshift64*, distinct from the library's splitmix) --------

struct Rng {
  std::uint64_t s;
  explicit Rng(std::uint64_t seed) : s(seed ? seed : 0x9E3779B97F4A7C15ull) {}

  std::uint64_t next() {
    s ^= s >> 12;
    s ^= s << 25;
    s ^= s >> 27;
    return s * 0x2545F4914F6CDD1Dull;
  }
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }
  long in_range(long lo, long hi) {  // inclusive
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }
};

inline monodromy::IntMatrix random_matrix(Rng& rng, std::size_t dim, long lo,
                                          long hi) {
  monodromy::IntMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) m.at(i, j) = rng.in_range(lo, hi);
  return m;
}

// --- tiny symplectic count --------------------------------------------------

// For x = [[a,b],[c,d]] and J = [[0,1],[-1,0]], x^T J x works out to
// [[0, ad-bc], [bc-ad, 0]], so x preserves J exactly when ad - bc = 1 mod p.
inline unsigned long count_form_preserving_2x2(unsigned long p) {
  unsigned long count = 0;
  for (unsigned long a = 0; a < p; ++a)
    for (unsigned long b = 0; b < p; ++b)
      for (unsigned long c = 0; c < p; ++c)
        for (unsigned long d = 0; d < p; ++d)
          if ((a * d + p * p - b * c) % p == 1 % p) ++count;
  return count;
}

}  // namespace oracles

#endif
