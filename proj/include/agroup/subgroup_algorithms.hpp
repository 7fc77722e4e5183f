#pragma once

#include <span>
#include <vector>

#include "agroup/group.hpp"
#include "agroup/subgroup.hpp"

namespace agroup {

Subgroup trivial_subgroup(const FiniteGroup& g);
Subgroup whole_group(const FiniteGroup& g);

/// Least subgroup containing `ids` (Dimino's coset extension, one generator at a time).
Subgroup closure(const FiniteGroup& g, std::span<const ElementId> ids);
/// Least subgroup containing `base` and `ids`.
Subgroup extend(const Subgroup& base, std::span<const ElementId> ids);
/// Subgroup from a set already known to be closed; throws if it is not.
Subgroup subgroup_from_elements(const FiniteGroup& g, std::span<const ElementId> ids);

Subgroup intersection(const Subgroup& a, const Subgroup& b);

/// { g : g s = s g for every s in ids }, by full scan over the element table.
Subgroup centralizer(const FiniteGroup& g, std::span<const ElementId> ids);
Subgroup centralizer(const Subgroup& s);
Subgroup center(const FiniteGroup& g);
/// { g : g S g^-1 = S }, by full scan over the element table.
Subgroup normalizer(const Subgroup& s);
bool is_normal(const Subgroup& s);
bool is_abelian(const Subgroup& s);
/// Least common multiple of element orders.
std::uint64_t exponent(const Subgroup& s);

/// Smallest normal subgroup of the ambient group containing `s`.
Subgroup normal_closure(const Subgroup& s);
/// [H, H] for a subgroup H, as a subgroup of the ambient group.
Subgroup derived_subgroup(const Subgroup& h);
/// G, G', G'', ... ending at the first repeated term.
std::vector<Subgroup> derived_series(const FiniteGroup& g);

/// Conjugacy classes as sorted id lists, ordered by minimal element.
std::vector<std::vector<ElementId>> conjugacy_classes(const FiniteGroup& g);
/// All normal subgroups, ordered by (size, elements). Throws LatticeCapExceeded.
std::vector<Subgroup> normal_subgroups(const FiniteGroup& g, const Limits& limits = {});
/// N1 N2 for normal subgroups.
Subgroup join_normal(const Subgroup& n1, const Subgroup& n2);

/// G/N with cosets labelled by their minimal parent id. Throws NotNormal.
FiniteGroup quotient(const Subgroup& normal);
/// Preimage in the parent of a subgroup of a quotient group.
Subgroup preimage(const Subgroup& in_quotient);
/// Image of a parent subgroup in a quotient group.
Subgroup image(const FiniteGroup& quotient_group, const Subgroup& in_parent);

/// The subgroup re-indexed as a group (ids follow the sorted parent ids).
FiniteGroup as_group(const Subgroup& s);
/// A subgroup of a subgroup view, moved back into the parent.
Subgroup lift(const Subgroup& in_view);

/// Sylow ell-subgroup by normalizer ascent from the lowest-id element of maximal
/// ell-power order. Throws PrimeDoesNotDivide.
Subgroup sylow(const FiniteGroup& g, std::uint64_t ell);

}  // namespace agroup
