#include "monodromy/constants.hpp"

namespace monodromy {

IntGeneratorSet MonodromyConstants::int_generators() const {
  IntGeneratorSet gens;
  gens.add("A", A);
  gens.add("T", T);
  return gens;
}

GeneratorSet MonodromyConstants::mod_generators() const {
  GeneratorSet gens;
  gens.add("A", A_tilde);
  gens.add("T", T_tilde);
  return gens;
}

MonodromyConstants MonodromyConstants::standard() {
  IntMatrix a{{11, 8, -5, 0},  //
              {5, -4, -3, 1},
              {20, 15, -9, 0},
              {5, -5, -3, 1}};
  IntMatrix t{{1, 0, 0, 0},  //
              {0, 1, 0, -1},
              {0, 0, 1, 0},
              {0, 0, 0, 1}};
  IntMatrix t_inf{{-9, -3, 5, 0},  //
                  {0, 1, 0, 0},
                  {-20, -5, 11, 0},
                  {-15, 5, 8, 1}};
  IntMatrix p{{5, -3, 0, 0},  //
              {0, 0, 1, 0},
              {10, -5, 0, 0},
              {0, 0, 0, 1}};

  // Spot anchors against the published displays; a mistyped literal here
  // would otherwise poison every downstream check.
  if (a.at(0, 0) != 11 || t.at(1, 3) != -1 || t_inf.at(0, 0) != -9 ||
      p.at(2, 0) != 10) {
    throw MatrixError("constant matrices fail their spot anchors");
  }

  SymplecticForm form = discover_symplectic_form({a, t, t_inf});

  ModMatrix a_tilde = reduce_mod(conjugate_exact(p, inverse_unimodular(a)), 5);
  ModMatrix t_tilde = reduce_mod(conjugate_exact(p, inverse_unimodular(t)), 5);

  ModMatrix e1 = ModMatrix::identity(4, 5);
  e1.set(0, 3, 1);
  ModMatrix e2 = ModMatrix::identity(4, 5);
  e2.set(1, 3, 1);

  return MonodromyConstants{std::move(a),       std::move(t),
                            std::move(t_inf),   std::move(p),
                            std::move(form),    std::move(a_tilde),
                            std::move(t_tilde), std::move(e1),
                            std::move(e2)};
}

}  // namespace monodromy
