#ifndef MONODROMY_WORD_HPP
#define MONODROMY_WORD_HPP

#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "monodromy/errors.hpp"
#include "monodromy/int_matrix.hpp"
#include "monodromy/mod_matrix.hpp"

namespace monodromy {

// One letter of a word: a named generator raised to a nonzero power.
struct WordToken {
  std::string name;
  long exponent = 1;

  bool operator==(const WordToken&) const = default;
};

// Freely reduced word over named generators.  Appending merges adjacent
// tokens with the same name and drops tokens whose exponents cancel, so
// consecutive tokens always carry distinct names.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<WordToken> tokens);

  void append(const std::string& name, long exponent);
  void append(const WordToken& tok) { append(tok.name, tok.exponent); }

  Word& operator*=(const Word& rhs);
  friend Word operator*(Word lhs, const Word& rhs) {
    lhs *= rhs;
    return lhs;
  }

  // w^k for k >= 0; k = 0 gives the empty word.
  Word pow(unsigned k) const;
  Word inverse() const;

  const std::vector<WordToken>& tokens() const { return tokens_; }
  bool empty() const { return tokens_.empty(); }
  std::size_t size() const { return tokens_.size(); }

  // Total letter count, i.e. the sum of |exponent| over tokens.
  std::size_t length() const;

  // "A T^4 A^-1", or "1" for the empty word.
  std::string to_string() const;

  bool operator==(const Word&) const = default;

 private:
  std::vector<WordToken> tokens_;
};

// Named generator list; all matrices share one dim (and modulus).
template <typename M>
class GeneratorSetT {
 public:
  GeneratorSetT() = default;

  void add(const std::string& name, M matrix) {
    if (name.empty()) throw MatrixError("generator name must be nonempty");
    if (find(name) != nullptr) {
      throw MatrixError("duplicate generator name '" + name + "'");
    }
    if (!matrices_.empty()) check_compatible(matrices_.front(), matrix);
    check_invertible(matrix);
    names_.push_back(name);
    matrices_.push_back(std::move(matrix));
  }

  std::size_t size() const { return names_.size(); }
  const std::string& name_at(std::size_t i) const { return names_.at(i); }
  const M& matrix_at(std::size_t i) const { return matrices_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<M>& matrices() const { return matrices_; }

  // nullptr when the name is not bound.
  const M* find(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (names_[i] == name) return &matrices_[i];
    }
    return nullptr;
  }

 private:
  static void check_compatible(const M& a, const M& b);
  static void check_invertible(const M& m);

  std::vector<std::string> names_;
  std::vector<M> matrices_;
};

using GeneratorSet = GeneratorSetT<ModMatrix>;
using IntGeneratorSet = GeneratorSetT<IntMatrix>;

// Left-to-right product of generator powers.  Negative exponents invert
// the generator (modular inverse resp. unimodular integer inverse).
ModMatrix evaluate_word(const GeneratorSet& gens, const Word& w);
IntMatrix evaluate_word(const IntGeneratorSet& gens, const Word& w);

// splitmix64: tiny seedable PRNG, stable across platforms, so a seed
// pins every sampled sequence bit-for-bit.
struct Splitmix64 {
  std::uint64_t state = 0;

  explicit Splitmix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next();
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }
};

// Deterministic sampler of freely reduced words: letters are generators
// or their inverses, adjacent letters are never mutually inverse, and the
// letter count is uniform in [1, max_len].
class WordSampler {
 public:
  WordSampler(std::vector<std::string> names, std::uint64_t seed,
              std::size_t max_len);

  Word next();

 private:
  std::vector<std::string> names_;
  Splitmix64 rng_;
  std::size_t max_len_;
};

}  // namespace monodromy

#endif
