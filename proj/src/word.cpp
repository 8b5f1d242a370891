#include "monodromy/word.hpp"

#include <cstdlib>
#include <sstream>
#include <type_traits>

namespace monodromy {

Word::Word(std::initializer_list<WordToken> tokens) {
  for (const auto& t : tokens) append(t);
}

void Word::append(const std::string& name, long exponent) {
  if (exponent == 0) return;
  if (!tokens_.empty() && tokens_.back().name == name) {
    tokens_.back().exponent += exponent;
    if (tokens_.back().exponent == 0) tokens_.pop_back();
    return;
  }
  tokens_.push_back({name, exponent});
}

Word& Word::operator*=(const Word& rhs) {
  for (const auto& t : rhs.tokens_) append(t);
  return *this;
}

Word Word::pow(unsigned k) const {
  Word out;
  for (unsigned i = 0; i < k; ++i) out *= *this;
  return out;
}

Word Word::inverse() const {
  Word out;
  for (auto it = tokens_.rbegin(); it != tokens_.rend(); ++it) {
    out.append(it->name, -it->exponent);
  }
  return out;
}

std::size_t Word::length() const {
  std::size_t n = 0;
  for (const auto& t : tokens_) n += static_cast<std::size_t>(std::labs(t.exponent));
  return n;
}

std::string Word::to_string() const {
  if (tokens_.empty()) return "1";
  std::ostringstream out;
  for (std::size_t i = 0; i < tokens_.size(); ++i) {
    if (i > 0) out << ' ';
    out << tokens_[i].name;
    if (tokens_[i].exponent != 1) out << '^' << tokens_[i].exponent;
  }
  return out.str();
}

template <>
void GeneratorSetT<ModMatrix>::check_compatible(const ModMatrix& a,
                                                const ModMatrix& b) {
  if (a.dim() != b.dim()) throw DimMismatchError("generator dims differ");
  if (a.modulus() != b.modulus()) {
    throw DimMismatchError("generator moduli differ");
  }
}

template <>
void GeneratorSetT<IntMatrix>::check_compatible(const IntMatrix& a,
                                                const IntMatrix& b) {
  if (a.dim() != b.dim()) throw DimMismatchError("generator dims differ");
}

template <>
void GeneratorSetT<ModMatrix>::check_invertible(const ModMatrix& m) {
  inverse(m);  // throws NotInvertibleError when gcd(det, modulus) > 1
}

template <>
void GeneratorSetT<IntMatrix>::check_invertible(const IntMatrix&) {
  // Integer generators may be non-invertible over Z; inversion is only
  // needed (and checked) when a word actually uses a negative exponent.
}

namespace {

template <typename S, typename M>
M evaluate_word_impl(const S& gens, const Word& w, M acc) {
  for (const auto& tok : w.tokens()) {
    const M* g = gens.find(tok.name);
    if (g == nullptr) {
      throw UnknownGeneratorError("unknown generator '" + tok.name + "'");
    }
    if (tok.exponent > 0) {
      acc = acc * mat_pow(*g, static_cast<unsigned long>(tok.exponent));
    } else {
      M ginv = [&] {
        if constexpr (std::is_same_v<M, ModMatrix>) return inverse(*g);
        else return inverse_unimodular(*g);
      }();
      acc = acc * mat_pow(ginv, static_cast<unsigned long>(-tok.exponent));
    }
  }
  return acc;
}

}  // namespace

ModMatrix evaluate_word(const GeneratorSet& gens, const Word& w) {
  if (gens.size() == 0) throw MatrixError("empty generator set");
  const ModMatrix& first = gens.matrix_at(0);
  return evaluate_word_impl(gens, w,
                            ModMatrix::identity(first.dim(), first.modulus()));
}

IntMatrix evaluate_word(const IntGeneratorSet& gens, const Word& w) {
  if (gens.size() == 0) throw MatrixError("empty generator set");
  return evaluate_word_impl(gens, w,
                            IntMatrix::identity(gens.matrix_at(0).dim()));
}

std::uint64_t Splitmix64::next() {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

WordSampler::WordSampler(std::vector<std::string> names, std::uint64_t seed,
                         std::size_t max_len)
    : names_(std::move(names)), rng_(seed), max_len_(max_len) {
  if (names_.empty()) throw MatrixError("sampler needs at least one name");
  if (max_len_ == 0) throw MatrixError("max_len must be positive");
}

Word WordSampler::next() {
  const std::size_t len = 1 + static_cast<std::size_t>(rng_.below(max_len_));
  const std::uint64_t alphabet = 2 * names_.size();
  Word w;
  std::uint64_t prev = alphabet;  // sentinel: no previous letter
  for (std::size_t i = 0; i < len; ++i) {
    // Letters are 2k (generator k) and 2k+1 (its inverse).  After the
    // first letter, draw from alphabet-1 values and skip the inverse of
    // the previous letter, so the word stays freely reduced by
    // construction (no rejection loop, fixed draw count per word).
    std::uint64_t letter;
    if (prev == alphabet) {
      letter = rng_.below(alphabet);
    } else {
      letter = rng_.below(alphabet - 1);
      if (letter >= (prev ^ 1ull)) ++letter;
    }
    w.append(names_[letter / 2], letter % 2 == 0 ? 1 : -1);
    prev = letter;
  }
  return w;
}

}  // namespace monodromy
