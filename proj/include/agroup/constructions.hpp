#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "agroup/finite_field.hpp"
#include "agroup/group.hpp"

namespace agroup {

// Rule-based builders. Generators are canonical: residue 1 for a cyclic leaf, the
// monomial basis 1, x, ..., x^(a-1) for a field leaf, and the embedded generators of
// both factors for a product.

FiniteGroup cyclic(std::uint64_t n, const Limits& limits = {});
/// Additive group of a finite field.
FiniteGroup field_additive(const FieldSpec& field, const Limits& limits = {});
FiniteGroup direct_product(const FiniteGroup& left, const FiniteGroup& right,
                           const Limits& limits = {});
/// kernel x| acting, with (h1, g1)(h2, g2) = (h1 * action(g1, h2), g1 g2).
/// The action is validated first (Error InvalidAction).
FiniteGroup semidirect_product(const FiniteGroup& kernel, const FiniteGroup& acting,
                               const Action& action, const Limits& limits = {});

/// C_m acting on the additive group of a field by x -> u^e x; `cyclic_group` must be C_m
/// with m the exact multiplicative order of u (Error WrongOrder otherwise).
Action scalar_action(const FiniteGroup& field_group, const FiniteGroup& cyclic_group,
                     const FieldElement& u);
/// C_m acting on C_n by x -> k^e x.
Action power_action(const FiniteGroup& cyclic_n, const FiniteGroup& cyclic_m, std::uint64_t k);

/// F_{p^a}^+ x| C_m with C_m acting through element_of_order(F_{p^a}, m).
FiniteGroup scalar_semidirect(std::uint64_t p, unsigned a, std::uint64_t m,
                              const Limits& limits = {});

struct FamilyParams {
  std::uint64_t p = 0, q = 0, r = 0;
  unsigned a = 0, b = 0;

  /// "p,q,r,a,b" as comma-separated decimal integers. Error ParseError.
  static FamilyParams parse(std::string_view text);
  std::string to_string() const;
  /// p^(a+1) q^(b+1) r, or nullopt on 64-bit overflow.
  std::optional<std::uint64_t> order() const;

  friend bool operator==(const FamilyParams&, const FamilyParams&) = default;
  friend auto operator<=>(const FamilyParams&, const FamilyParams&) = default;
};

/// Reason the tuple is not a valid family parameterization, if any.
std::optional<std::string> family_params_problem(const FamilyParams& params);
/// Throws Error(BadParams) with the reason.
void validate_family_params(const FamilyParams& params);

/// H_1 = F_{p^a}^+ x| C_q (requires q | p^a - 1).
FiniteGroup build_family_component(std::uint64_t p, std::uint64_t q, unsigned a,
                                   const Limits& limits = {});
/// H_1 x H_2 with H_1 = F_{p^a}^+ x| C_q and H_2 = F_{q^b}^+ x| C_p.
FiniteGroup build_two_prime_pair(std::uint64_t p, std::uint64_t q, unsigned a, unsigned b,
                                 const Limits& limits = {});
/// (H_1 x H_2) x| C_r, C_r scaling both field coordinates by units of order r.
FiniteGroup build_family_group(const FamilyParams& params, const Limits& limits = {});

struct FamilyEntry {
  FamilyParams params;
  std::uint64_t order;

  friend bool operator==(const FamilyEntry&, const FamilyEntry&) = default;
};

/// Every valid parameter tuple with group order <= max_order (minimal and non-minimal
/// a, b), sorted by order then parameters.
std::vector<FamilyEntry> search_family(std::uint64_t max_order);

}  // namespace agroup
