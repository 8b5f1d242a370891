#ifndef MONODROMY_GROUP_HPP
#define MONODROMY_GROUP_HPP

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "monodromy/mod_matrix.hpp"
#include "monodromy/word.hpp"

namespace monodromy {

// Base-m positional packing of a ModMatrix, row-major with the least
// significant digit at entry (0,0).  Bijective on matrices whose code
// fits 64 bits (m^(dim^2) <= 2^64).
using MatrixCode = std::uint64_t;

MatrixCode encode(const ModMatrix& x);
ModMatrix decode(MatrixCode code, std::size_t dim, std::uint64_t modulus);

// Element set of a subgroup of GL(dim, Z/mZ), canonical codes in
// ascending order.  closed = false marks a closure cut off by its cap.
struct FiniteMatrixGroup {
  std::size_t dim = 0;
  std::uint64_t modulus = 0;
  GeneratorSet generators;
  std::vector<MatrixCode> elements;
  bool closed = false;

  std::size_t order() const { return elements.size(); }
  bool contains_code(MatrixCode c) const;
};

// Breadth-first closure of the generated subgroup: seed with the
// identity, multiply frontier elements by every generator until nothing
// new appears.  Inverses are not needed: in a finite group each
// generator's inverse is one of its powers.  When the element count
// passes cap the partial set is returned with closed = false.
FiniteMatrixGroup closure(const GeneratorSet& gens,
                          std::uint64_t cap = 10'000'000);

// Membership by code lookup; requires a completed closure.
bool member(const FiniteMatrixGroup& g, const ModMatrix& x);

// Smallest k >= 1 with x^k = I, or nullopt if none exists up to cap.
std::optional<unsigned long> element_order(const IntMatrix& x,
                                           unsigned long cap = 1000);
std::optional<unsigned long> element_order(const ModMatrix& x,
                                           unsigned long cap = 1000);

// |Sp(2n, Z/p^kZ)| = p^((k-1)n(2n+1)) * p^(n^2) * prod_{i=1..n}(p^2i - 1).
// Throws std::invalid_argument unless p is prime.
mpz_class sp_order(unsigned n, unsigned long p, unsigned k);

// Exhaustive count of 2n x 2n matrices over Z/pZ preserving the standard
// antisymmetric block form [[0, I], [-I, 0]].  Feasible only for tiny
// p^(4n^2); used to validate sp_order.
mpz_class count_symplectic_brute(unsigned n, unsigned long p);

// Canonical dump: header "dim m order", then one code per line ascending.
// Dumping requires a completed closure; loading trusts the dump is one.
std::string group_dump(const FiniteMatrixGroup& g);
FiniteMatrixGroup load_group_dump(const std::string& text);

}  // namespace monodromy

#endif
