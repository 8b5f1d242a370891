#include "monodromy/int_matrix.hpp"

#include <string>
#include <utility>

namespace monodromy {

namespace {

void require_same_dim(const IntMatrix& a, const IntMatrix& b) {
  if (a.dim() != b.dim()) {
    throw DimMismatchError("matrix dimensions differ: " +
                           std::to_string(a.dim()) + " vs " +
                           std::to_string(b.dim()));
  }
}

}  // namespace

IntMatrix::IntMatrix(std::size_t dim, std::vector<mpz_class> entries)
    : dim_(dim), entries_(std::move(entries)) {
  if (entries_.size() != dim_ * dim_) {
    throw DimMismatchError("entry count " + std::to_string(entries_.size()) +
                           " does not match dim " + std::to_string(dim_));
  }
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : dim_(rows.size()) {
  entries_.reserve(dim_ * dim_);
  for (const auto& row : rows) {
    if (row.size() != dim_) {
      throw DimMismatchError("ragged initializer row");
    }
    for (long v : row) entries_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t dim) {
  IntMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix r(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) r.at(j, i) = at(i, j);
  return r;
}

bool IntMatrix::is_identity() const {
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j)
      if (at(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
  require_same_dim(a, b);
  const std::size_t n = a.dim();
  IntMatrix r(n);
  mpz_class acc, prod;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      acc = 0;
      for (std::size_t k = 0; k < n; ++k) {
        prod = a.at(i, k) * b.at(k, j);
        acc += prod;
      }
      r.at(i, j) = acc;
    }
  }
  return r;
}

IntMatrix mat_pow(const IntMatrix& a, unsigned long k) {
  IntMatrix result = IntMatrix::identity(a.dim());
  IntMatrix base = a;
  while (k > 0) {
    if (k & 1UL) result = mat_mul(result, base);
    k >>= 1UL;
    if (k > 0) base = mat_mul(base, base);
  }
  return result;
}

mpz_class trace(const IntMatrix& a) {
  mpz_class t = 0;
  for (std::size_t i = 0; i < a.dim(); ++i) t += a.at(i, i);
  return t;
}

mpz_class det(const IntMatrix& a) {
  const std::size_t n = a.dim();
  if (n == 0) return 1;
  std::vector<mpz_class> m = a.entries();
  mpz_class prev = 1;
  int sign = 1;
  mpz_class t;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k * n + k] == 0) {
      std::size_t piv = k + 1;
      while (piv < n && m[piv * n + k] == 0) ++piv;
      if (piv == n) return 0;
      for (std::size_t j = 0; j < n; ++j)
        std::swap(m[k * n + j], m[piv * n + j]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        t = m[i * n + j] * m[k * n + k] - m[i * n + k] * m[k * n + j];
        // Bareiss: division by the previous pivot is exact.
        mpz_divexact(m[i * n + j].get_mpz_t(), t.get_mpz_t(),
                     prev.get_mpz_t());
      }
      m[i * n + k] = 0;
    }
    prev = m[k * n + k];
  }
  mpz_class d = m[n * n - 1];
  if (sign < 0) d = -d;
  return d;
}

namespace {

mpz_class minor_det(const IntMatrix& a, std::size_t drop_row,
                    std::size_t drop_col) {
  const std::size_t n = a.dim();
  IntMatrix sub(n - 1);
  std::size_t r = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (i == drop_row) continue;
    std::size_t c = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == drop_col) continue;
      sub.at(r, c) = a.at(i, j);
      ++c;
    }
    ++r;
  }
  return det(sub);
}

}  // namespace

IntMatrix adjugate(const IntMatrix& a) {
  const std::size_t n = a.dim();
  IntMatrix adj(n);
  if (n == 0) return adj;
  if (n == 1) {
    adj.at(0, 0) = 1;
    return adj;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      mpz_class c = minor_det(a, i, j);
      if ((i + j) % 2 == 1) c = -c;
      adj.at(j, i) = c;
    }
  }
  return adj;
}

IntMatrix inverse_unimodular(const IntMatrix& a) {
  mpz_class d = det(a);
  if (d != 1 && d != -1) {
    throw NotUnimodularError("det = " + d.get_str() +
                             ", integer inverse requires det = +1 or -1");
  }
  IntMatrix inv = adjugate(a);
  if (d == -1) {
    for (std::size_t i = 0; i < inv.dim(); ++i)
      for (std::size_t j = 0; j < inv.dim(); ++j) inv.at(i, j) = -inv.at(i, j);
  }
  return inv;
}

IntMatrix conjugate_exact(const IntMatrix& p, const IntMatrix& x) {
  require_same_dim(p, x);
  mpz_class d = det(p);
  if (d == 0) throw MatrixError("conjugation by a singular matrix");
  IntMatrix num = mat_mul(mat_mul(adjugate(p), x), p);
  const std::size_t n = num.dim();
  IntMatrix r(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!mpz_divisible_p(num.at(i, j).get_mpz_t(), d.get_mpz_t())) {
        throw NonIntegralConjugateError(
            "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
            ") = " + num.at(i, j).get_str() + " not divisible by det = " +
            d.get_str());
      }
      mpz_divexact(r.at(i, j).get_mpz_t(), num.at(i, j).get_mpz_t(),
                   d.get_mpz_t());
    }
  }
  return r;
}

}  // namespace monodromy
