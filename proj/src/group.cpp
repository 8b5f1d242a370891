#include "monodromy/group.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace monodromy {

MatrixCode encode(const ModMatrix& x) {
  const std::uint64_t m = x.modulus();
  const auto& e = x.entries();
  MatrixCode code = 0;
  // Most significant digit first so the left-to-right fold keeps the
  // least significant digit at entry (0,0).
  for (std::size_t k = e.size(); k-- > 0;) {
    if (code > (std::numeric_limits<MatrixCode>::max() - e[k]) / m) {
      throw MatrixError("matrix code does not fit 64 bits");
    }
    code = code * m + e[k];
  }
  return code;
}

ModMatrix decode(MatrixCode code, std::size_t dim, std::uint64_t modulus) {
  std::vector<std::uint64_t> entries(dim * dim);
  for (auto& e : entries) {
    e = code % modulus;
    code /= modulus;
  }
  if (code != 0) throw MatrixError("matrix code out of range");
  return ModMatrix(dim, modulus, std::move(entries));
}

bool FiniteMatrixGroup::contains_code(MatrixCode c) const {
  return std::binary_search(elements.begin(), elements.end(), c);
}

FiniteMatrixGroup closure(const GeneratorSet& gens, std::uint64_t cap) {
  if (gens.size() == 0) throw MatrixError("closure needs a generator");
  if (cap == 0) throw MatrixError("cap must be positive");
  const ModMatrix& g0 = gens.matrix_at(0);

  FiniteMatrixGroup group;
  group.dim = g0.dim();
  group.modulus = g0.modulus();
  group.generators = gens;

  std::unordered_set<MatrixCode> seen;
  std::deque<ModMatrix> frontier;

  const ModMatrix id = ModMatrix::identity(g0.dim(), g0.modulus());
  seen.insert(encode(id));
  frontier.push_back(id);

  bool capped = false;
  while (!frontier.empty() && !capped) {
    ModMatrix x = std::move(frontier.front());
    frontier.pop_front();
    for (std::size_t i = 0; i < gens.size() && !capped; ++i) {
      ModMatrix y = x * gens.matrix_at(i);
      MatrixCode c = encode(y);
      if (seen.insert(c).second) {
        if (seen.size() > cap) {
          capped = true;
          break;
        }
        frontier.push_back(std::move(y));
      }
    }
  }

  group.elements.assign(seen.begin(), seen.end());
  std::sort(group.elements.begin(), group.elements.end());
  group.closed = !capped;
  return group;
}

bool member(const FiniteMatrixGroup& g, const ModMatrix& x) {
  if (!g.closed) throw NotClosedError("membership on a capped partial closure");
  if (x.dim() != g.dim || x.modulus() != g.modulus) {
    throw DimMismatchError("matrix does not match the group's dim/modulus");
  }
  return g.contains_code(encode(x));
}

namespace {

template <typename M>
std::optional<unsigned long> element_order_impl(const M& x, const M& id,
                                                unsigned long cap) {
  if (cap == 0) return std::nullopt;
  M acc = x;
  for (unsigned long k = 1; k <= cap; ++k) {
    if (acc == id) return k;
    if (k < cap) acc = acc * x;
  }
  return std::nullopt;
}

}  // namespace

std::optional<unsigned long> element_order(const IntMatrix& x,
                                           unsigned long cap) {
  return element_order_impl(x, IntMatrix::identity(x.dim()), cap);
}

std::optional<unsigned long> element_order(const ModMatrix& x,
                                           unsigned long cap) {
  return element_order_impl(x, ModMatrix::identity(x.dim(), x.modulus()), cap);
}

mpz_class sp_order(unsigned n, unsigned long p, unsigned k) {
  if (n == 0) throw std::invalid_argument("n must be positive");
  if (k == 0) throw std::invalid_argument("k must be positive");
  mpz_class pz(static_cast<unsigned long>(p));
  if (mpz_probab_prime_p(pz.get_mpz_t(), 32) == 0) {
    throw std::invalid_argument("p must be prime");
  }
  mpz_class result;
  // p^((k-1) n (2n+1)) * p^(n^2)
  unsigned long exp =
      static_cast<unsigned long>(k - 1) * n * (2ul * n + 1) +
      static_cast<unsigned long>(n) * n;
  mpz_pow_ui(result.get_mpz_t(), pz.get_mpz_t(), exp);
  for (unsigned i = 1; i <= n; ++i) {
    mpz_class q;
    mpz_pow_ui(q.get_mpz_t(), pz.get_mpz_t(), 2ul * i);
    result *= q - 1;
  }
  return result;
}

mpz_class count_symplectic_brute(unsigned n, unsigned long p) {
  const std::size_t dim = 2ul * n;
  const std::size_t cells = dim * dim;
  // Total candidates p^(dim^2); callers keep this tiny (16 or 81).
  double total_log = static_cast<double>(cells) * std::log2(double(p));
  if (total_log > 26) throw MatrixError("brute-force count too large");

  // Standard block form [[0, I], [-I, 0]].
  IntMatrix j(dim);
  for (unsigned i = 0; i < n; ++i) {
    j.at(i, n + i) = 1;
    j.at(n + i, i) = -1;
  }
  ModMatrix jm = reduce_mod(j, p);

  std::uint64_t total = 1;
  for (std::size_t i = 0; i < cells; ++i) total *= p;

  mpz_class count = 0;
  std::vector<std::uint64_t> entries(cells, 0);
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t c = code;
    for (auto& e : entries) {
      e = c % p;
      c /= p;
    }
    ModMatrix x(dim, p, entries);
    ModMatrix xt(dim, p);
    for (std::size_t r = 0; r < dim; ++r)
      for (std::size_t s = 0; s < dim; ++s) xt.set(r, s, x.at(s, r));
    if (xt * jm * x == jm) ++count;
  }
  return count;
}

std::string group_dump(const FiniteMatrixGroup& g) {
  if (!g.closed) throw NotClosedError("refusing to dump a partial closure");
  std::ostringstream out;
  out << g.dim << ' ' << g.modulus << ' ' << g.order() << '\n';
  for (MatrixCode c : g.elements) out << c << '\n';
  return out.str();
}

FiniteMatrixGroup load_group_dump(const std::string& text) {
  std::istringstream in(text);
  FiniteMatrixGroup g;
  std::size_t order = 0;
  if (!(in >> g.dim >> g.modulus >> order)) {
    throw ParseError("bad group dump header (want: dim m order)");
  }
  if (g.dim == 0 || g.modulus < 2) throw ParseError("bad group dump header");
  g.elements.reserve(order);
  MatrixCode c = 0;
  while (in >> c) g.elements.push_back(c);
  if (!in.eof()) throw ParseError("bad code in group dump");
  if (g.elements.size() != order) {
    throw ParseError("group dump code count does not match header");
  }
  if (std::adjacent_find(g.elements.begin(), g.elements.end(),
                         [](MatrixCode a, MatrixCode b) { return a >= b; }) !=
      g.elements.end()) {
    throw ParseError("group dump codes must be strictly ascending");
  }
  g.closed = true;
  return g;
}

}  // namespace monodromy
