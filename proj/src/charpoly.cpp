#include "monodromy/charpoly.hpp"

#include <algorithm>

namespace monodromy {

bool CharPoly::palindromic() const {
  // full[k] is the coefficient of x^k including the leading 1
  std::vector<mpz_class> full = coeff;
  full.push_back(1);
  for (std::size_t k = 0; k <= degree; ++k) {
    if (full[k] != full[degree - k]) return false;
  }
  return true;
}

std::string CharPoly::to_string() const {
  std::string s = "x^" + std::to_string(degree);
  for (std::size_t k = degree; k-- > 0;) {
    const mpz_class& c = coeff[k];
    if (c == 0) continue;
    mpz_class absc = abs(c);
    s += (c < 0) ? " - " : " + ";
    if (k == 0) {
      s += absc.get_str();
    } else {
      if (absc != 1) s += absc.get_str() + "*";
      s += (k == 1) ? "x" : "x^" + std::to_string(k);
    }
  }
  return s;
}

CharPoly charpoly(const IntMatrix& a) {
  const std::size_t n = a.dim();
  CharPoly p;
  p.degree = n;
  if (n == 0) return p;

  // Berkowitz iteration: extend the coefficient vector of the leading r x r
  // block to the (r+1) x (r+1) block by a lower-triangular Toeplitz product.
  // C holds coefficients leading-first: C[0] = 1 multiplies x^r.
  std::vector<mpz_class> c = {mpz_class(1), -a.at(0, 0)};
  for (std::size_t r = 1; r < n; ++r) {
    // Block split of the (r+1) x (r+1) leading principal submatrix:
    // M = a[0..r-1][0..r-1], col = a[0..r-1][r], row = a[r][0..r-1].
    std::vector<mpz_class> t(r + 2);
    t[0] = 1;
    t[1] = -a.at(r, r);
    std::vector<mpz_class> v(r);
    for (std::size_t i = 0; i < r; ++i) v[i] = a.at(i, r);
    for (std::size_t k = 0; k < r; ++k) {
      mpz_class dot = 0;
      for (std::size_t i = 0; i < r; ++i) dot += a.at(r, i) * v[i];
      t[k + 2] = -dot;
      if (k + 1 < r) {
        std::vector<mpz_class> w(r, mpz_class(0));
        for (std::size_t i = 0; i < r; ++i)
          for (std::size_t j = 0; j < r; ++j) w[i] += a.at(i, j) * v[j];
        v = std::move(w);
      }
    }
    std::vector<mpz_class> next(r + 2, mpz_class(0));
    for (std::size_t i = 0; i < r + 2; ++i) {
      const std::size_t jmax = std::min(i, r);
      for (std::size_t j = 0; j <= jmax; ++j) next[i] += t[i - j] * c[j];
    }
    c = std::move(next);
  }

  // c is leading-first of length n+1; store as coeff[k] for x^k.
  p.coeff.resize(n);
  for (std::size_t k = 0; k < n; ++k) p.coeff[k] = c[n - k];
  return p;
}

}  // namespace monodromy
