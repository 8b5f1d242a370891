#include "monodromy/symplectic.hpp"

#include <cstddef>
#include <string>
#include <utility>

namespace monodromy {

SymplecticForm::SymplecticForm(IntMatrix j) : gram(std::move(j)) {
  const std::size_t n = gram.dim();
  if (n == 0 || n % 2 != 0) {
    throw MatrixError("symplectic form needs even dimension, got " +
                      std::to_string(n));
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      if (gram.at(i, k) != -gram.at(k, i)) {
        throw MatrixError("form matrix is not anti-symmetric");
      }
    }
  }
  if (det(gram) != 1) {
    throw MatrixError("form matrix is not unimodular");
  }
}

bool is_symplectic(const IntMatrix& x, const SymplecticForm& form) {
  if (x.dim() != form.gram.dim()) {
    throw DimMismatchError("matrix dim " + std::to_string(x.dim()) +
                           " does not match form dim " +
                           std::to_string(form.gram.dim()));
  }
  return mat_mul(mat_mul(x.transpose(), form.gram), x) == form.gram;
}

namespace {

// Upper-triangle coordinates (i, j), i < j, in row-major order.
std::vector<std::pair<std::size_t, std::size_t>> upper_pairs(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  return pairs;
}

}  // namespace

std::vector<IntMatrix> find_invariant_form(
    const std::vector<IntMatrix>& gens) {
  if (gens.empty()) throw MatrixError("no generators given");
  const std::size_t n = gens.front().dim();
  for (const auto& g : gens) {
    if (g.dim() != n) throw DimMismatchError("generator dims differ");
  }
  const auto pairs = upper_pairs(n);
  const std::size_t u = pairs.size();
  if (u == 0) throw EmptySolutionError("no anti-symmetric forms in dim 1");

  // One row per (generator, upper pair): the (i,j) entry of m^T J m - J
  // expanded in the coordinates J_{kl}, k < l.
  std::vector<std::vector<mpq_class>> rows;
  rows.reserve(gens.size() * u);
  for (const auto& m : gens) {
    for (std::size_t e = 0; e < u; ++e) {
      const auto [i, j] = pairs[e];
      std::vector<mpq_class> row(u);
      for (std::size_t f = 0; f < u; ++f) {
        const auto [k, l] = pairs[f];
        mpz_class c = m.at(k, i) * m.at(l, j) - m.at(l, i) * m.at(k, j);
        if (f == e) c -= 1;
        row[f] = c;
      }
      rows.push_back(std::move(row));
    }
  }

  // Gauss-Jordan over Q.
  std::vector<std::size_t> pivot_cols;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < u && rank < rows.size(); ++col) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    mpq_class inv = rows[rank][col];
    for (auto& x : rows[rank]) x /= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      mpq_class factor = rows[r][col];
      for (std::size_t cidx = 0; cidx < u; ++cidx)
        rows[r][cidx] -= factor * rows[rank][cidx];
    }
    pivot_cols.push_back(col);
    ++rank;
  }

  std::vector<IntMatrix> basis;
  for (std::size_t free_col = 0; free_col < u; ++free_col) {
    bool is_pivot = false;
    for (std::size_t c : pivot_cols) {
      if (c == free_col) {
        is_pivot = true;
        break;
      }
    }
    if (is_pivot) continue;
    std::vector<mpq_class> v(u, mpq_class(0));
    v[free_col] = 1;
    for (std::size_t r = 0; r < pivot_cols.size(); ++r)
      v[pivot_cols[r]] = -rows[r][free_col];

    // clear denominators, divide by content, first nonzero positive
    mpz_class den = 1;
    for (const auto& x : v) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(),
                                    x.get_den().get_mpz_t());
    std::vector<mpz_class> w(u);
    for (std::size_t e = 0; e < u; ++e) {
      mpq_class scaled = v[e] * den;
      w[e] = scaled.get_num();
    }
    mpz_class content = 0;
    for (const auto& x : w)
      mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), x.get_mpz_t());
    for (auto& x : w) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(),
                                   content.get_mpz_t());
    for (const auto& x : w) {
      if (x != 0) {
        if (x < 0)
          for (auto& y : w) y = -y;
        break;
      }
    }

    IntMatrix j(n);
    for (std::size_t e = 0; e < u; ++e) {
      const auto [a, b] = pairs[e];
      j.at(a, b) = w[e];
      j.at(b, a) = -w[e];
    }
    basis.push_back(std::move(j));
  }

  if (basis.empty()) {
    throw EmptySolutionError("only J = 0 is invariant under the generators");
  }
  return basis;
}

SymplecticForm discover_symplectic_form(const std::vector<IntMatrix>& gens) {
  std::vector<IntMatrix> basis = find_invariant_form(gens);
  if (basis.size() != 1) {
    throw MatrixError("invariant-form space has rank " +
                      std::to_string(basis.size()) + ", expected 1");
  }
  return SymplecticForm(std::move(basis.front()));
}

IntMatrix symplectic_transvection(const SymplecticForm& form,
                                  const std::vector<mpz_class>& v,
                                  const mpz_class& c) {
  const std::size_t n = form.gram.dim();
  if (v.size() != n) {
    throw DimMismatchError("vector length " + std::to_string(v.size()) +
                           " does not match form dim " + std::to_string(n));
  }
  std::vector<mpz_class> vtj(n, mpz_class(0));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) vtj[j] += v[k] * form.gram.at(k, j);
  IntMatrix r = IntMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) r.at(i, j) += c * v[i] * vtj[j];
  return r;
}

}  // namespace monodromy
