#ifndef MONODROMY_INT_MATRIX_HPP
#define MONODROMY_INT_MATRIX_HPP

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "monodromy/errors.hpp"

namespace monodromy {

// Square matrix over Z with arbitrary-precision entries, row-major.
// Values are immutable in practice: every operation returns a fresh matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t dim)
      : dim_(dim), entries_(dim * dim, mpz_class(0)) {}
  IntMatrix(std::size_t dim, std::vector<mpz_class> entries);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t dim);

  std::size_t dim() const { return dim_; }

  const mpz_class& at(std::size_t i, std::size_t j) const {
    return entries_[i * dim_ + j];
  }
  mpz_class& at(std::size_t i, std::size_t j) { return entries_[i * dim_ + j]; }

  const std::vector<mpz_class>& entries() const { return entries_; }

  IntMatrix transpose() const;
  bool is_identity() const;

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.dim_ == b.dim_ && a.entries_ == b.entries_;
  }
  friend bool operator!=(const IntMatrix& a, const IntMatrix& b) {
    return !(a == b);
  }

 private:
  std::size_t dim_ = 0;
  std::vector<mpz_class> entries_;
};

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b);

inline IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  return mat_mul(a, b);
}

// k-fold product, k = 0 yields the identity.
IntMatrix mat_pow(const IntMatrix& a, unsigned long k);

mpz_class trace(const IntMatrix& a);

// Exact determinant, fraction-free (Bareiss).
mpz_class det(const IntMatrix& a);

// Exact adjugate: a * adjugate(a) == det(a) * I.
IntMatrix adjugate(const IntMatrix& a);

// Exact integer inverse; requires det in {+1, -1}, else NotUnimodularError.
IntMatrix inverse_unimodular(const IntMatrix& a);

// p^-1 x p computed as adj(p) * x * p with every entry divided exactly by
// det(p). Throws NonIntegralConjugateError when divisibility fails, and
// MatrixError when p is singular.
IntMatrix conjugate_exact(const IntMatrix& p, const IntMatrix& x);

}  // namespace monodromy

#endif
