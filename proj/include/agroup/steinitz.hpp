#pragma once

// Group-theoretic facts behind the realizable-Steinitz-class argument for family
// groups G = H x| Gamma, H = F_{p^a}^+ x F_{q^b}^+ and Gamma = C_q x C_p x C_r.
// Number-theoretic objects are represented only by their integer exponents.

#include <cstdint>
#include <optional>
#include <vector>

#include "agroup/group.hpp"
#include "agroup/subgroup.hpp"

namespace agroup {

struct FamilyProjection {
  std::uint64_t p = 0, q = 0, r = 0;
  /// Field coordinates: normal abelian subgroup of order p^a q^b.
  Subgroup h;
  /// Cyclic coordinates: abelian complement of order pqr.
  Subgroup gamma;
  /// C_r coordinate subgroup.
  Subgroup c_r;
  /// pi[g]: id in G of the Gamma-coordinate of g.
  std::vector<ElementId> pi;
};

/// Coordinate split of a family-built group, with H normal abelian, H n Gamma = 1,
/// H Gamma = G and pi a homomorphism with kernel H (all verified). Error NotFamilyGroup.
FamilyProjection family_projection(const FiniteGroup& g);

struct SylowExponent {
  std::uint64_t prime;
  std::size_t sylow_order;
  std::uint64_t exponent;
};

std::vector<SylowExponent> sylow_exponent_report(const FiniteGroup& g);

/// One conjugacy class of elements of prime order ell.
struct OrderEllClass {
  std::uint64_t ell = 0;
  ElementId representative = 0;
  std::size_t size = 0;
  /// 'a': pi(tau) has order ell.  'b': pi(tau) = 1.
  char case_tag = 'b';
  /// Case (a): N_G(<tau>) equals C_G(tau) as element sets.
  std::optional<bool> normalizer_equals_centralizer;
  /// Case (b): every element of the class lies in H.
  std::optional<bool> inside_h;
  /// (ell - 1) * |G| / o(tau); the exponent is half of it.
  std::uint64_t exponent_times_two = 0;
  /// ((ell - 1) / 2) * (|G| / o(tau)) when it is an integer.
  std::optional<std::uint64_t> exponent;
  /// Case (a) terms fold into the Gamma contribution.
  bool absorbed = false;
};

std::vector<OrderEllClass> order_ell_classification(const FiniteGroup& g, std::uint64_t ell);

struct SteinitzReport {
  /// Some prime is 2; the checks still run but the odd-order setting does not apply.
  bool parity_caveat = false;
  std::vector<SylowExponent> sylow_exponents;
  std::vector<OrderEllClass> classes;
  /// Per prime: (ell, elements of order ell, case (a) elements, case (b) elements).
  struct Count {
    std::uint64_t ell;
    std::size_t total;
    std::size_t case_a;
    std::size_t case_b;
  };
  std::vector<Count> counts;
  bool all_checks_pass = false;
};

SteinitzReport steinitz_report(const FiniteGroup& g);

struct ExponentRow {
  std::uint64_t ell;
  ElementId representative;
  char case_tag;
  std::uint64_t exponent_times_two;
  std::optional<std::uint64_t> exponent;
  bool absorbed;
};

std::vector<ExponentRow> steinitz_exponent_table(const FiniteGroup& g);

}  // namespace agroup
