#ifndef MONODROMY_ERRORS_HPP
#define MONODROMY_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace monodromy {

struct MatrixError : std::runtime_error {
  explicit MatrixError(const std::string& msg) : std::runtime_error(msg) {}
};

// Dimension or modulus disagreement between operands.
struct DimMismatchError : MatrixError {
  using MatrixError::MatrixError;
};

// Integer inverse requested for a matrix with det outside {+1, -1}.
struct NotUnimodularError : MatrixError {
  using MatrixError::MatrixError;
};

// p^-1 x p has an entry not divisible by det(p).
struct NonIntegralConjugateError : MatrixError {
  using MatrixError::MatrixError;
};

// Inverse mod m requested for a matrix with gcd(det, m) != 1.
struct NotInvertibleError : MatrixError {
  using MatrixError::MatrixError;
};

// Invariant-form system admits only the zero solution.
struct EmptySolutionError : MatrixError {
  using MatrixError::MatrixError;
};

// Word names a generator absent from the bound set.
struct UnknownGeneratorError : MatrixError {
  using MatrixError::MatrixError;
};

// Membership queried on a capped, partially-expanded closure.
struct NotClosedError : MatrixError {
  using MatrixError::MatrixError;
};

// A product of two pattern elements left the pattern set.
struct ClosureViolationError : MatrixError {
  using MatrixError::MatrixError;
};

struct ParseError : MatrixError {
  using MatrixError::MatrixError;
};

}  // namespace monodromy

#endif
