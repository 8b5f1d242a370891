#ifndef MONODROMY_MOD_MATRIX_HPP
#define MONODROMY_MOD_MATRIX_HPP

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include "monodromy/int_matrix.hpp"

namespace monodromy {

// Square matrix over Z/mZ with canonical entries in [0, m).
// The modulus is capped at 2^32 - 1 so entry products fit in 64 bits.
class ModMatrix {
 public:
  ModMatrix() = default;
  ModMatrix(std::size_t dim, std::uint64_t modulus);
  ModMatrix(std::size_t dim, std::uint64_t modulus,
            std::vector<std::uint64_t> entries);
  ModMatrix(std::uint64_t modulus,
            std::initializer_list<std::initializer_list<unsigned long>> rows);

  static ModMatrix identity(std::size_t dim, std::uint64_t modulus);

  std::size_t dim() const { return dim_; }
  std::uint64_t modulus() const { return mod_; }

  std::uint64_t at(std::size_t i, std::size_t j) const {
    return entries_[i * dim_ + j];
  }
  void set(std::size_t i, std::size_t j, std::uint64_t v) {
    entries_[i * dim_ + j] = v % mod_;
  }

  const std::vector<std::uint64_t>& entries() const { return entries_; }

  bool is_identity() const;

  friend bool operator==(const ModMatrix& a, const ModMatrix& b) {
    return a.dim_ == b.dim_ && a.mod_ == b.mod_ && a.entries_ == b.entries_;
  }
  friend bool operator!=(const ModMatrix& a, const ModMatrix& b) {
    return !(a == b);
  }

 private:
  std::size_t dim_ = 0;
  std::uint64_t mod_ = 0;
  std::vector<std::uint64_t> entries_;
};

ModMatrix mat_mul(const ModMatrix& a, const ModMatrix& b);

inline ModMatrix operator*(const ModMatrix& a, const ModMatrix& b) {
  return mat_mul(a, b);
}

ModMatrix mat_pow(const ModMatrix& a, unsigned long k);

// Entrywise canonical residue in [0, m); requires m >= 2.
ModMatrix reduce_mod(const IntMatrix& a, std::uint64_t m);

// Canonical residues reinterpreted as integer entries.
IntMatrix lift(const ModMatrix& a);

// Inverse mod m via integer adjugate and det^-1 mod m.
// Throws NotInvertibleError when gcd(det, m) != 1.
ModMatrix inverse(const ModMatrix& a);

}  // namespace monodromy

#endif
