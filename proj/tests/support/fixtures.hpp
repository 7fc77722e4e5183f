#pragma once
// Small groups shared by the unit tests and the acceptance runner.

#include <cstdint>
#include <string>
#include <vector>

#include "agroup/constructions.hpp"
#include "agroup/finite_field.hpp"
#include "agroup/number_theory.hpp"

namespace fixtures {

using namespace agroup;

inline std::uint64_t residue(const FiniteGroup& g, ElementId id) {
  return g.element(id).as_cyclic().residue;
}

// Residue of the cyclic factor on the right of a semidirect product C_n x| C_m, or of
// C_m itself.
inline std::uint64_t top_residue(const FiniteGroup& g, ElementId id) {
  const GroupElement e = g.element(id);
  return e.is_cyclic() ? e.as_cyclic().residue : e.right().as_cyclic().residue;
}

inline FiniteGroup s3() { return semidirect_product(cyclic(3), cyclic(2), power_action(cyclic(3), cyclic(2), 2)); }

// C_3 x| C_4, the generator of C_4 inverting C_3.
inline FiniteGroup c3_c4() {
  const FiniteGroup c3 = cyclic(3), c4 = cyclic(4);
  return semidirect_product(c3, c4, power_action(c3, c4, 2));
}

inline FiniteGroup metacyclic(std::uint64_t n, std::uint64_t m, std::uint64_t k) {
  const FiniteGroup cn = cyclic(n), cm = cyclic(m);
  return semidirect_product(cn, cm, power_action(cn, cm, k));
}

// (C_3 x C_3) x| C_3 with (x, y) -> (x + e y, y): nonabelian of order 27.
inline FiniteGroup heisenberg27() {
  const FiniteGroup c3 = cyclic(3);
  const FiniteGroup k = direct_product(c3, c3);
  const FiniteGroup top = cyclic(3);
  const Action act = Action::tabulate(k, top, [&](ElementId gamma, ElementId h) {
    const std::uint64_t e = residue(top, gamma);
    const GroupElement v = k.element(h);
    const std::uint64_t x = v.left().as_cyclic().residue;
    const std::uint64_t y = v.right().as_cyclic().residue;
    return k.id_of(GroupElement::pair(GroupElement::cyclic((x + e * y) % 3, 3),
                                      GroupElement::cyclic(y, 3)));
  });
  return semidirect_product(k, top, act);
}

// C_7 x| S_3, S_3 acting through its sign by inversion.
inline FiniteGroup c7_s3() {
  const FiniteGroup c7 = cyclic(7);
  const FiniteGroup top = s3();
  const Action act = Action::tabulate(c7, top, [&](ElementId gamma, ElementId h) {
    const std::uint64_t x = residue(c7, h);
    const std::uint64_t y = top_residue(top, gamma) == 0 ? x : (7 - x) % 7;
    return c7.id_of(GroupElement::cyclic(y, 7));
  });
  return semidirect_product(c7, top, act);
}

// F_4^+ x| (C_7 x| C_3), the C_3 quotient acting by a cube root of unity.
inline FiniteGroup f4_c7c3() {
  const FieldSpec f4 = make_field(2, 2);
  const FieldElement w = element_of_order(f4, 3);
  const FiniteGroup k = field_additive(f4);
  const FiniteGroup top = metacyclic(7, 3, 2);
  const Action act = Action::tabulate(k, top, [&](ElementId gamma, ElementId h) {
    const auto e = static_cast<std::int64_t>(top_residue(top, gamma));
    return k.id_of(GroupElement::field(f4.mul(f4.pow(w, e), k.element(h).as_field().value)));
  });
  return semidirect_product(k, top, act);
}

struct Named {
  std::string name;
  FiniteGroup group;
};

// Groups produced by explicit abelian / coprime-semidirect / direct constructions.
inline std::vector<Named> rule_built_corpus() {
  std::vector<Named> out;
  auto add = [&](std::string name, FiniteGroup g) { out.push_back({std::move(name), std::move(g)}); };
  add("C_12", cyclic(12));
  add("C_2 x C_2", direct_product(cyclic(2), cyclic(2)));
  add("C_4 x C_6", direct_product(cyclic(4), cyclic(6)));
  add("F_8^+", field_additive(make_field(2, 3)));
  add("F_9^+", field_additive(make_field(3, 2)));
  add("S_3", s3());
  add("C_3 x| C_4", c3_c4());
  add("D_5", metacyclic(5, 2, 4));
  add("C_7 x| C_3", metacyclic(7, 3, 2));
  add("C_11 x| C_10", metacyclic(11, 10, 2));
  add("C_13 x| C_4", metacyclic(13, 4, 5));
  add("A_4", scalar_semidirect(2, 2, 3));
  add("F_8 x| C_7", scalar_semidirect(2, 3, 7));
  add("F_9 x| C_8", scalar_semidirect(3, 2, 8));
  add("F_16 x| C_15", scalar_semidirect(2, 4, 15));
  add("F_25 x| C_24", scalar_semidirect(5, 2, 24));
  add("F_25 x| C_2", build_family_component(5, 2, 2));
  add("F_16 x| C_5", build_family_component(2, 5, 4));
  add("S_3 x C_5", direct_product(s3(), cyclic(5)));
  add("S_3 x D_5", direct_product(s3(), metacyclic(5, 2, 4)));
  add("A_4 x D_5", direct_product(scalar_semidirect(2, 2, 3), metacyclic(5, 2, 4)));
  add("C_7 x| S_3", c7_s3());
  add("F_4 x| (C_7 x| C_3)", f4_c7c3());
  add("H_1 x H_2 (5,2;2,4)", build_two_prime_pair(5, 2, 2, 4));
  return out;
}

struct ComponentParams {
  std::uint64_t p, q;
  unsigned a;
};

// Every two-prime family component F_{p^a}^+ x| C_q with order <= max_order.
inline std::vector<ComponentParams> component_candidates(std::uint64_t max_order) {
  std::vector<ComponentParams> out;
  for (std::uint64_t p : primes_up_to(max_order)) {
    for (std::uint64_t q : primes_up_to(max_order)) {
      if (p == q) continue;
      for (unsigned a = 1;; ++a) {
        const auto pa = checked_pow(p, a, max_order);
        if (!pa || *pa * q > max_order) break;
        if ((*pa - 1) % q == 0) out.push_back({p, q, a});
      }
    }
  }
  return out;
}

}  // namespace fixtures
