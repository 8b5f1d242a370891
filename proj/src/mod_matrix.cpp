#include "monodromy/mod_matrix.hpp"

#include <limits>
#include <stdexcept>
#include <string>
#include <utility>

namespace monodromy {

namespace {

constexpr std::uint64_t kMaxModulus = 0xFFFFFFFFULL;

void require_valid_modulus(std::uint64_t m) {
  if (m < 2 || m > kMaxModulus) {
    throw std::invalid_argument("modulus must lie in [2, 2^32-1], got " +
                                std::to_string(m));
  }
}

void require_compatible(const ModMatrix& a, const ModMatrix& b) {
  if (a.dim() != b.dim()) {
    throw DimMismatchError("matrix dimensions differ: " +
                           std::to_string(a.dim()) + " vs " +
                           std::to_string(b.dim()));
  }
  if (a.modulus() != b.modulus()) {
    throw DimMismatchError("moduli differ: " + std::to_string(a.modulus()) +
                           " vs " + std::to_string(b.modulus()));
  }
}

}  // namespace

ModMatrix::ModMatrix(std::size_t dim, std::uint64_t modulus)
    : dim_(dim), mod_(modulus), entries_(dim * dim, 0) {
  require_valid_modulus(modulus);
}

ModMatrix::ModMatrix(std::size_t dim, std::uint64_t modulus,
                     std::vector<std::uint64_t> entries)
    : dim_(dim), mod_(modulus), entries_(std::move(entries)) {
  require_valid_modulus(modulus);
  if (entries_.size() != dim_ * dim_) {
    throw DimMismatchError("entry count " + std::to_string(entries_.size()) +
                           " does not match dim " + std::to_string(dim_));
  }
  for (auto& e : entries_) e %= mod_;
}

ModMatrix::ModMatrix(
    std::uint64_t modulus,
    std::initializer_list<std::initializer_list<unsigned long>> rows)
    : dim_(rows.size()), mod_(modulus) {
  require_valid_modulus(modulus);
  entries_.reserve(dim_ * dim_);
  for (const auto& row : rows) {
    if (row.size() != dim_) throw DimMismatchError("ragged initializer row");
    for (unsigned long v : row) entries_.push_back(v % mod_);
  }
}

ModMatrix ModMatrix::identity(std::size_t dim, std::uint64_t modulus) {
  ModMatrix m(dim, modulus);
  for (std::size_t i = 0; i < dim; ++i) m.entries_[i * dim + i] = 1 % modulus;
  return m;
}

bool ModMatrix::is_identity() const {
  return *this == identity(dim_, mod_);
}

ModMatrix mat_mul(const ModMatrix& a, const ModMatrix& b) {
  require_compatible(a, b);
  const std::size_t n = a.dim();
  const std::uint64_t m = a.modulus();
  ModMatrix r(n, m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::uint64_t acc = 0;
      for (std::size_t k = 0; k < n; ++k) {
        // entries < m <= 2^32-1, so the product fits and acc + product
        // cannot wrap after the per-term reduction
        acc = (acc + a.at(i, k) * b.at(k, j)) % m;
      }
      r.set(i, j, acc);
    }
  }
  return r;
}

ModMatrix mat_pow(const ModMatrix& a, unsigned long k) {
  ModMatrix result = ModMatrix::identity(a.dim(), a.modulus());
  ModMatrix base = a;
  while (k > 0) {
    if (k & 1UL) result = mat_mul(result, base);
    k >>= 1UL;
    if (k > 0) base = mat_mul(base, base);
  }
  return result;
}

ModMatrix reduce_mod(const IntMatrix& a, std::uint64_t m) {
  require_valid_modulus(m);
  const std::size_t n = a.dim();
  std::vector<std::uint64_t> entries(n * n);
  for (std::size_t i = 0; i < n * n; ++i) {
    // floor-division remainder is canonical for negative entries
    entries[i] = mpz_fdiv_ui(a.entries()[i].get_mpz_t(),
                             static_cast<unsigned long>(m));
  }
  return ModMatrix(n, m, std::move(entries));
}

IntMatrix lift(const ModMatrix& a) {
  const std::size_t n = a.dim();
  IntMatrix r(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      r.at(i, j) = static_cast<unsigned long>(a.at(i, j));
  return r;
}

ModMatrix inverse(const ModMatrix& a) {
  const std::uint64_t m = a.modulus();
  IntMatrix lifted = lift(a);
  mpz_class d = det(lifted);
  mpz_class mz = static_cast<unsigned long>(m);
  mpz_class dinv;
  if (mpz_invert(dinv.get_mpz_t(), d.get_mpz_t(), mz.get_mpz_t()) == 0) {
    throw NotInvertibleError("det = " + d.get_str() +
                             " is not invertible mod " + std::to_string(m));
  }
  IntMatrix adj = adjugate(lifted);
  const std::size_t n = a.dim();
  std::vector<std::uint64_t> entries(n * n);
  mpz_class t;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      t = adj.at(i, j) * dinv;
      entries[i * n + j] =
          mpz_fdiv_ui(t.get_mpz_t(), static_cast<unsigned long>(m));
    }
  }
  return ModMatrix(n, m, std::move(entries));
}

}  // namespace monodromy
