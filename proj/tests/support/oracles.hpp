#pragma once
// Naive reference implementations: plain loops over compose/invert with std::set,
// no Cayley-table shortcuts, membership masks or generator tricks.

#include <set>
#include <vector>

#include "agroup/group.hpp"

namespace oracle {

using agroup::ElementId;
using agroup::FiniteGroup;
using agroup::GroupElement;

inline std::uint32_t element_order(const FiniteGroup& g, ElementId x) {
  std::uint32_t k = 1;
  for (ElementId y = x; y != 0; y = g.compose(y, x)) ++k;
  return k;
}

inline std::set<ElementId> closure(const FiniteGroup& g, const std::vector<ElementId>& ids) {
  std::set<ElementId> s(ids.begin(), ids.end());
  s.insert(0);
  for (bool grew = true; grew;) {
    grew = false;
    const std::vector<ElementId> snapshot(s.begin(), s.end());
    for (ElementId a : snapshot) {
      for (ElementId b : snapshot) grew |= s.insert(g.compose(a, b)).second;
    }
  }
  return s;
}

inline std::set<ElementId> centralizer(const FiniteGroup& g, const std::vector<ElementId>& ids) {
  std::set<ElementId> out;
  for (ElementId x = 0; x < g.order(); ++x) {
    bool ok = true;
    for (ElementId s : ids) ok = ok && g.compose(x, s) == g.compose(s, x);
    if (ok) out.insert(x);
  }
  return out;
}

inline std::set<ElementId> normalizer(const FiniteGroup& g, const std::set<ElementId>& sub) {
  std::set<ElementId> out;
  for (ElementId x = 0; x < g.order(); ++x) {
    std::set<ElementId> image;
    for (ElementId s : sub) image.insert(g.compose(g.compose(x, s), g.invert(x)));
    if (image == sub) out.insert(x);
  }
  return out;
}

// Product computed on construction-tree elements, reaching child groups only
// through id_of / element lookups and the tabulated action.
inline GroupElement tree_compose(const FiniteGroup& g, const GroupElement& a,
                                 const GroupElement& b) {
  const auto& kind = g.construction()->kind;
  if (const auto* c = std::get_if<agroup::CyclicNode>(&kind)) {
    return GroupElement::cyclic((a.as_cyclic().residue + b.as_cyclic().residue) % c->n, c->n);
  }
  if (const auto* f = std::get_if<agroup::FieldAddNode>(&kind)) {
    return GroupElement::field(f->field.add(a.as_field().value, b.as_field().value));
  }
  if (const auto* d = std::get_if<agroup::DirectNode>(&kind)) {
    return GroupElement::pair(tree_compose(d->left, a.left(), b.left()),
                              tree_compose(d->right, a.right(), b.right()));
  }
  const auto& s = std::get<agroup::SemidirectNode>(kind);
  const ElementId gamma = s.quotient.id_of(a.right());
  const GroupElement moved =
      s.kernel.element(s.action->apply(gamma, s.kernel.id_of(b.left())));
  return GroupElement::pair(tree_compose(s.kernel, a.left(), moved),
                            tree_compose(s.quotient, a.right(), b.right()));
}

}  // namespace oracle
