#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "monodromy/constants.hpp"
#include "monodromy/errors.hpp"
#include "monodromy/gamma_hat.hpp"
#include "monodromy/group.hpp"
#include "monodromy/mod_matrix.hpp"
#include "monodromy/word.hpp"
#include "oracles.hpp"

using namespace monodromy;

namespace {

GeneratorSet tilde_generators() {
  const auto k = MonodromyConstants::standard();
  GeneratorSet gens;
  gens.add("A", k.A_tilde);
  gens.add("T", k.T_tilde);
  return gens;
}

constexpr MatrixCode kIdentityCode = 30527346876ull;  // I_4 over Z/5Z

}  // namespace

TEST_CASE("matrix codes") {
  ModMatrix i5 = ModMatrix::identity(4, 5);
  CHECK(encode(i5) == kIdentityCode);
  CHECK(encode(ModMatrix(4, 5)) == 0);

  ModMatrix e1 = i5;
  e1.set(0, 3, 1);
  CHECK(encode(e1) == 30527347001ull);  // identity + 5^3

  SUBCASE("encode and decode are mutually inverse") {
    oracles::Rng rng(7);
    const std::uint64_t space = 152587890625ull;  // 5^16
    for (int t = 0; t < 1000; ++t) {
      MatrixCode c = rng.below(space);
      ModMatrix m = decode(c, 4, 5);
      CHECK(encode(m) == c);
    }
    CHECK(decode(encode(i5), 4, 5) == i5);
  }

  SUBCASE("decode rejects codes beyond the matrix space") {
    CHECK_THROWS_AS(decode(152587890625ull, 4, 5), MatrixError);
  }

  SUBCASE("encode rejects codes that overflow 64 bits") {
    // 97^25 >> 2^64, and the identity's top digit makes the fold overflow.
    CHECK_THROWS_AS(encode(ModMatrix::identity(5, 97)), MatrixError);
    // The zero matrix of the same shape still codes to 0.
    CHECK(encode(ModMatrix(5, 97)) == 0);
  }

  SUBCASE("codes order matrices consistently") {
    // The zero matrix is the smallest code, all-(m-1) the largest.
    std::vector<std::uint64_t> maxed(16, 4);
    ModMatrix top(4, 5, maxed);
    CHECK(encode(top) == 152587890624ull);
  }
}

TEST_CASE("closure of the reduced generators has order 625") {
  GeneratorSet gens = tilde_generators();
  FiniteMatrixGroup g = closure(gens);

  CHECK(g.closed);
  CHECK(g.order() == 625);
  CHECK(g.dim == 4);
  CHECK(g.modulus == 5);
  CHECK(std::is_sorted(g.elements.begin(), g.elements.end()));
  CHECK(g.contains_code(kIdentityCode));

  SUBCASE("generator order does not matter") {
    GeneratorSet swapped;
    swapped.add("T", gens.matrix_at(1));
    swapped.add("A", gens.matrix_at(0));
    CHECK(closure(swapped).elements == g.elements);
  }

  SUBCASE("group axioms hold on samples") {
    oracles::Rng rng(13);
    for (int t = 0; t < 1000; ++t) {
      ModMatrix x = decode(g.elements[rng.below(g.order())], 4, 5);
      ModMatrix y = decode(g.elements[rng.below(g.order())], 4, 5);
      CHECK(g.contains_code(encode(x * y)));
    }
    for (int t = 0; t < 50; ++t) {
      ModMatrix x = decode(g.elements[rng.below(g.order())], 4, 5);
      CHECK(g.contains_code(encode(inverse(x))));
    }
  }

  SUBCASE("membership lookups") {
    const auto k = MonodromyConstants::standard();
    CHECK(member(g, k.E1));
    CHECK(member(g, k.E2));
    CHECK(member(g, ModMatrix::identity(4, 5)));

    ModMatrix lower = ModMatrix::identity(4, 5);
    lower.set(1, 0, 1);
    CHECK_FALSE(member(g, lower));
  }
}

TEST_CASE("small closures") {
  const auto k = MonodromyConstants::standard();

  GeneratorSet only_t;
  only_t.add("T", k.T_tilde);
  CHECK(closure(only_t).order() == 5);

  GeneratorSet trivial;
  trivial.add("I", ModMatrix::identity(4, 5));
  FiniteMatrixGroup g = closure(trivial);
  CHECK(g.order() == 1);
  CHECK(g.elements == std::vector<MatrixCode>{kIdentityCode});
}

TEST_CASE("capped closure returns a marked partial set") {
  FiniteMatrixGroup g = closure(tilde_generators(), 10);
  CHECK_FALSE(g.closed);
  CHECK(g.order() == 11);
  CHECK_THROWS_AS(member(g, ModMatrix::identity(4, 5)), NotClosedError);
  CHECK_THROWS_AS(group_dump(g), NotClosedError);
}

TEST_CASE("group dump round trip") {
  FiniteMatrixGroup g = closure(tilde_generators());
  std::string dump = group_dump(g);
  CHECK(dump.substr(0, 8) == "4 5 625\n");

  FiniteMatrixGroup loaded = load_group_dump(dump);
  CHECK(loaded.closed);
  CHECK(loaded.dim == g.dim);
  CHECK(loaded.modulus == g.modulus);
  CHECK(loaded.elements == g.elements);

  SUBCASE("malformed dumps are rejected") {
    CHECK_THROWS_AS(load_group_dump(""), ParseError);
    CHECK_THROWS_AS(load_group_dump("4 5\n"), ParseError);
    CHECK_THROWS_AS(load_group_dump("4 5 2\n30527346876\n"), ParseError);
    CHECK_THROWS_AS(load_group_dump("4 5 2\n100\n100\n"), ParseError);
    CHECK_THROWS_AS(load_group_dump("4 5 2\n200\n100\n"), ParseError);
    CHECK_THROWS_AS(load_group_dump("4 5 1\nxyz\n"), ParseError);
  }
}

TEST_CASE("element orders") {
  const auto k = MonodromyConstants::standard();

  CHECK(element_order(IntMatrix::identity(4)) == 1ul);
  CHECK(element_order(k.A) == 5ul);
  CHECK(element_order(k.A_tilde) == 5ul);
  CHECK(element_order(ModMatrix::identity(4, 5)) == 1ul);

  // T is unipotent and nontrivial, so no power returns to the identity.
  CHECK(element_order(k.T, 100) == std::nullopt);
  // Mod 5 its order is finite.
  CHECK(element_order(reduce_mod(k.T, 5)) == 5ul);
}

TEST_CASE("symplectic group orders") {
  CHECK(sp_order(1, 2, 1) == 6);
  CHECK(sp_order(1, 3, 1) == 24);
  CHECK(sp_order(2, 5, 1) == 9360000);
  CHECK(sp_order(2, 5, 2) == mpz_class("91406250000000"));
  // Sp(2) = SL(2): p (p^2 - 1).
  CHECK(sp_order(1, 101, 1) == 101ul * (101ul * 101ul - 1ul));

  SUBCASE("the formula matches exhaustive counting") {
    CHECK(count_symplectic_brute(1, 2) == sp_order(1, 2, 1));
    CHECK(count_symplectic_brute(1, 3) == sp_order(1, 3, 1));
    CHECK(count_symplectic_brute(1, 2) ==
          mpz_class(oracles::count_form_preserving_2x2(2)));
    CHECK(count_symplectic_brute(1, 3) ==
          mpz_class(oracles::count_form_preserving_2x2(3)));
  }

  SUBCASE("argument validation") {
    CHECK_THROWS_AS(sp_order(1, 4, 1), std::invalid_argument);
    CHECK_THROWS_AS(sp_order(1, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(sp_order(0, 5, 1), std::invalid_argument);
    CHECK_THROWS_AS(sp_order(1, 5, 0), std::invalid_argument);
    CHECK_THROWS_AS(count_symplectic_brute(2, 5), MatrixError);
  }
}

TEST_CASE("unitriangular parametrization") {
  const auto k = MonodromyConstants::standard();

  CHECK(gamma_hat_element(0, 0, 0, 0).is_identity());
  CHECK(gamma_hat_element(1, 0, 4, 4) == k.A_tilde);
  CHECK(gamma_hat_element(0, 0, 0, 1) == k.T_tilde);
  CHECK(gamma_hat_element(0, 1, 0, 0) == k.E1);
  CHECK(gamma_hat_element(0, 0, 1, 0) == k.E2);

  // Parameters reduce mod 5.
  CHECK(gamma_hat_element(6, 5, 9, 12) == gamma_hat_element(1, 0, 4, 2));

  SUBCASE("the enumeration equals the closure") {
    FiniteMatrixGroup enumerated = enumerate_gamma_hat();
    CHECK(enumerated.closed);
    CHECK(enumerated.order() == 625);
    CHECK(enumerated.elements == closure(tilde_generators()).elements);
  }
}

TEST_CASE("words reduce freely") {
  Word w;
  CHECK(w.empty());
  CHECK(w.to_string() == "1");
  CHECK(w.length() == 0);

  w.append("A", 1);
  w.append("A", 1);
  CHECK(w.size() == 1);
  CHECK(w.length() == 2);
  CHECK(w.to_string() == "A^2");

  w.append("A", -2);
  CHECK(w.empty());

  Word v{{"A", 1}, {"T", 4}, {"A", -1}};
  CHECK(v.to_string() == "A T^4 A^-1");
  CHECK(v.length() == 6);

  SUBCASE("inverse reverses and negates") {
    CHECK(v.inverse().to_string() == "A T^-4 A^-1");
    CHECK((v * v.inverse()).empty());
    CHECK((v.inverse() * v).empty());
  }

  SUBCASE("pow repeats with cancellation at the seams") {
    Word u{{"A", 1}, {"T", 1}};
    CHECK(u.pow(0).empty());
    CHECK(u.pow(1) == u);
    CHECK(u.pow(3).to_string() == "A T A T A T");
    Word s{{"A", 1}, {"T", 1}, {"A", -1}};
    CHECK(s.pow(3).to_string() == "A T^3 A^-1");
  }

  SUBCASE("concatenation merges boundary tokens") {
    Word left{{"A", 1}, {"T", 2}};
    Word right{{"T", 3}, {"A", 1}};
    CHECK((left * right).to_string() == "A T^5 A");
    Word cancel{{"T", -2}, {"A", -1}};
    CHECK((left * cancel).empty());
  }

  SUBCASE("zero exponents are dropped") {
    Word z{{"A", 0}, {"T", 1}};
    CHECK(z.to_string() == "T");
  }
}

TEST_CASE("generator sets validate their input") {
  const auto k = MonodromyConstants::standard();
  GeneratorSet gens;
  gens.add("A", k.A_tilde);

  CHECK_THROWS_AS(gens.add("", k.T_tilde), MatrixError);
  CHECK_THROWS_AS(gens.add("A", k.T_tilde), MatrixError);
  CHECK_THROWS_AS(gens.add("B", ModMatrix::identity(3, 5)), DimMismatchError);
  CHECK_THROWS_AS(gens.add("B", ModMatrix::identity(4, 7)), DimMismatchError);
  CHECK_THROWS_AS(gens.add("Z", ModMatrix(4, 5)), NotInvertibleError);

  CHECK(gens.find("A") != nullptr);
  CHECK(gens.find("B") == nullptr);
}

TEST_CASE("word evaluation") {
  const auto k = MonodromyConstants::standard();
  GeneratorSet mod_gens = k.mod_generators();
  IntGeneratorSet int_gens = k.int_generators();

  CHECK(evaluate_word(mod_gens, Word{}).is_identity());
  CHECK(evaluate_word(int_gens, Word{}).is_identity());
  CHECK(evaluate_word(int_gens, Word{{"A", 5}}).is_identity());
  CHECK(evaluate_word(int_gens, Word{{"T", -1}}) == inverse_unimodular(k.T));
  CHECK_THROWS_AS(evaluate_word(mod_gens, Word{{"X", 1}}),
                  UnknownGeneratorError);

  SUBCASE("evaluation is a homomorphism") {
    WordSampler sampler({"A", "T"}, 19, 10);
    for (int t = 0; t < 100; ++t) {
      Word w1 = sampler.next();
      Word w2 = sampler.next();
      CHECK(evaluate_word(mod_gens, w1 * w2) ==
            evaluate_word(mod_gens, w1) * evaluate_word(mod_gens, w2));
    }
  }

  SUBCASE("evaluation commutes with reduction mod 5") {
    GeneratorSet reduced;
    reduced.add("A", reduce_mod(k.A, 5));
    reduced.add("T", reduce_mod(k.T, 5));
    WordSampler sampler({"A", "T"}, 23, 8);
    for (int t = 0; t < 200; ++t) {
      Word w = sampler.next();
      CHECK(reduce_mod(evaluate_word(int_gens, w), 5) ==
            evaluate_word(reduced, w));
    }
  }
}

TEST_CASE("elementary matrices are words in the reduced generators") {
  const auto k = MonodromyConstants::standard();
  GeneratorSet gens;
  gens.add("A", k.A_tilde);
  gens.add("T", k.T_tilde);

  Word w2{{"A", 1}, {"T", 1}, {"A", 4}, {"T", 4}};
  CHECK(evaluate_word(gens, w2) == k.E2);

  Word w1 = (w2.pow(2) * Word{{"A", 2}, {"T", 4}, {"A", 3}, {"T", 1}}).pow(4);
  CHECK(evaluate_word(gens, w1) == k.E1);
}

TEST_CASE("word sampler") {
  WordSampler a({"A", "T"}, 42, 12);
  WordSampler b({"A", "T"}, 42, 12);
  WordSampler c({"A", "T"}, 43, 12);

  bool all_same = true;
  bool any_differ_across_seeds = false;
  for (int t = 0; t < 200; ++t) {
    Word wa = a.next();
    Word wb = b.next();
    Word wc = c.next();
    if (wa != wb) all_same = false;
    if (wa != wc) any_differ_across_seeds = true;

    REQUIRE(!wa.empty());
    CHECK(wa.length() >= 1);
    CHECK(wa.length() <= 12);
    for (std::size_t i = 0; i < wa.size(); ++i) {
      CHECK(wa.tokens()[i].exponent != 0);
      if (i > 0) CHECK(wa.tokens()[i].name != wa.tokens()[i - 1].name);
    }
  }
  CHECK(all_same);
  CHECK(any_differ_across_seeds);
}
