#include "agroup/subgroup_algorithms.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "agroup/number_theory.hpp"
#include "group_internal.hpp"

namespace agroup {

using detail::kNoElement;

Subgroup::Subgroup(FiniteGroup group, std::vector<ElementId> sorted_elements,
                   std::vector<ElementId> generators)
    : group_(std::move(group)),
      elements_(std::move(sorted_elements)),
      generators_(std::move(generators)),
      members_(group_.order()) {
  for (ElementId e : elements_) members_.set(e);
}

void verify_subgroup(const Subgroup& s) {
  const FiniteGroup& g = s.group();
  auto fail = [](const std::string& why) { throw Error(ErrorCode::UnknownElement, why); };
  if (!s.contains(FiniteGroup::identity())) fail("subgroup lacks the identity");
  if (!std::is_sorted(s.elements().begin(), s.elements().end())) fail("elements not sorted");
  if (s.members().count() != s.size()) fail("membership mask disagrees with element list");
  if (g.order() % s.size() != 0) fail("subgroup order does not divide group order");
  for (ElementId x : s.elements()) {
    if (!s.contains(g.invert(x))) fail("not closed under inversion");
    for (ElementId t : s.generators()) {
      if (!s.contains(g.compose(x, t))) fail("not closed under composition");
    }
  }
  if (closure(g, s.generators()).size() != s.size()) fail("generators do not generate");
}

Subgroup trivial_subgroup(const FiniteGroup& g) {
  return Subgroup(g, {FiniteGroup::identity()}, {});
}

Subgroup whole_group(const FiniteGroup& g) {
  std::vector<ElementId> all(g.order());
  std::iota(all.begin(), all.end(), ElementId{0});
  return Subgroup(g, std::move(all), g.generators());
}

Subgroup extend(const Subgroup& base, std::span<const ElementId> ids) {
  const FiniteGroup& g = base.group();
  Bitset members = base.members();
  std::vector<ElementId> elements = base.elements();
  std::vector<ElementId> gens = base.generators();

  for (ElementId x : ids) {
    if (members.test(x)) continue;
    gens.push_back(x);
    const std::size_t h_size = elements.size();
    // elements[0 .. h_size) is the previous subgroup H; grow by right cosets H y
    const std::vector<ElementId> h(elements.begin(), elements.begin() + h_size);
    std::vector<ElementId> reps{FiniteGroup::identity()};
    for (std::size_t r = 0; r < reps.size(); ++r) {
      for (ElementId s : gens) {
        const ElementId y = g.compose(reps[r], s);
        if (members.test(y)) continue;
        reps.push_back(y);
        for (ElementId e : h) {
          const ElementId z = g.compose(e, y);
          members.set(z);
          elements.push_back(z);
        }
      }
    }
  }
  std::sort(elements.begin(), elements.end());
  return Subgroup(g, std::move(elements), std::move(gens));
}

Subgroup closure(const FiniteGroup& g, std::span<const ElementId> ids) {
  return extend(trivial_subgroup(g), ids);
}

Subgroup subgroup_from_elements(const FiniteGroup& g, std::span<const ElementId> ids) {
  Subgroup s = closure(g, ids);
  std::vector<ElementId> sorted(ids.begin(), ids.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (s.elements() != sorted) {
    throw Error(ErrorCode::UnknownElement, "element set is not a subgroup");
  }
  return s;
}

Subgroup intersection(const Subgroup& a, const Subgroup& b) {
  Bitset m = a.members();
  m &= b.members();
  const auto ids = m.to_ids();
  return subgroup_from_elements(a.group(), ids);
}

Subgroup centralizer(const FiniteGroup& g, std::span<const ElementId> ids) {
  const auto gens = closure(g, ids).generators();
  std::vector<ElementId> out;
  for (ElementId x = 0; x < g.order(); ++x) {
    bool commutes = true;
    for (ElementId s : gens) {
      if (g.compose(x, s) != g.compose(s, x)) {
        commutes = false;
        break;
      }
    }
    if (commutes) out.push_back(x);
  }
  return subgroup_from_elements(g, out);
}

Subgroup centralizer(const Subgroup& s) { return centralizer(s.group(), s.generators()); }

Subgroup center(const FiniteGroup& g) { return centralizer(g, g.generators()); }

Subgroup normalizer(const Subgroup& s) {
  const FiniteGroup& g = s.group();
  std::vector<ElementId> out;
  for (ElementId x = 0; x < g.order(); ++x) {
    bool normalizes = true;
    for (ElementId t : s.generators()) {
      if (!s.contains(g.conjugate(x, t))) {
        normalizes = false;
        break;
      }
    }
    if (normalizes) out.push_back(x);
  }
  return subgroup_from_elements(g, out);
}

bool is_normal(const Subgroup& s) {
  const FiniteGroup& g = s.group();
  for (ElementId x : g.generators()) {
    for (ElementId t : s.generators()) {
      if (!s.contains(g.conjugate(x, t))) return false;
    }
  }
  return true;
}

bool is_abelian(const Subgroup& s) {
  const FiniteGroup& g = s.group();
  const auto& gens = s.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (g.compose(gens[i], gens[j]) != g.compose(gens[j], gens[i])) return false;
    }
  }
  return true;
}

std::uint64_t exponent(const Subgroup& s) {
  std::uint64_t e = 1;
  for (ElementId x : s.elements()) e = std::lcm(e, std::uint64_t{s.group().element_order(x)});
  return e;
}

namespace {

// Smallest subgroup containing s and closed under conjugation by `conjugators`.
Subgroup close_under_conjugation(Subgroup s, std::span<const ElementId> conjugators) {
  const FiniteGroup& g = s.group();
  for (std::size_t i = 0; i < s.generators().size(); ++i) {
    for (ElementId x : conjugators) {
      const ElementId c = g.conjugate(x, s.generators()[i]);
      if (!s.contains(c)) s = extend(s, std::span<const ElementId>(&c, 1));
    }
  }
  return s;
}

}  // namespace

Subgroup normal_closure(const Subgroup& s) {
  return close_under_conjugation(s, s.group().generators());
}

Subgroup derived_subgroup(const Subgroup& h) {
  const FiniteGroup& g = h.group();
  const auto& gens = h.generators();
  std::vector<ElementId> commutators;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      commutators.push_back(g.commutator(gens[i], gens[j]));
    }
  }
  return close_under_conjugation(closure(g, commutators), gens);
}

std::vector<Subgroup> derived_series(const FiniteGroup& g) {
  std::vector<Subgroup> series{whole_group(g)};
  while (true) {
    Subgroup next = derived_subgroup(series.back());
    if (next.size() == series.back().size()) break;
    series.push_back(std::move(next));
  }
  return series;
}

std::vector<std::vector<ElementId>> conjugacy_classes(const FiniteGroup& g) {
  std::vector<std::vector<ElementId>> classes;
  Bitset seen(g.order());
  for (ElementId start = 0; start < g.order(); ++start) {
    if (seen.test(start)) continue;
    std::vector<ElementId> cls{start};
    seen.set(start);
    for (std::size_t i = 0; i < cls.size(); ++i) {
      for (ElementId x : g.generators()) {
        const ElementId c = g.conjugate(x, cls[i]);
        if (seen.insert(c)) cls.push_back(c);
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

Subgroup join_normal(const Subgroup& n1, const Subgroup& n2) {
  const FiniteGroup& g = n1.group();
  if (n2.is_subset_of(n1)) return n1;
  if (n1.is_subset_of(n2)) return n2;
  Bitset members = n1.members();
  std::vector<ElementId> elements = n1.elements();
  // N1 N2 is the disjoint union of cosets N1 y, y in N2
  for (ElementId y : n2.elements()) {
    if (members.test(y)) continue;
    for (ElementId m : n1.elements()) {
      const ElementId z = g.compose(m, y);
      members.set(z);
      elements.push_back(z);
    }
  }
  std::sort(elements.begin(), elements.end());
  std::vector<ElementId> gens = n1.generators();
  for (ElementId t : n2.generators()) {
    if (!n1.contains(t)) gens.push_back(t);
  }
  return Subgroup(g, std::move(elements), std::move(gens));
}

std::vector<Subgroup> normal_subgroups(const FiniteGroup& g, const Limits& limits) {
  std::vector<Subgroup> lattice;
  std::unordered_multimap<std::size_t, std::size_t> index;

  auto add = [&](Subgroup s) {
    const std::size_t h = s.members().hash();
    auto [lo, hi] = index.equal_range(h);
    for (auto it = lo; it != hi; ++it) {
      if (lattice[it->second] == s) return;
    }
    if (lattice.size() >= limits.lattice_cap) {
      throw Error(ErrorCode::LatticeCapExceeded,
                  "more than " + std::to_string(limits.lattice_cap) + " normal subgroups");
    }
    index.emplace(h, lattice.size());
    lattice.push_back(std::move(s));
  };

  for (const auto& cls : conjugacy_classes(g)) add(closure(g, cls));
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (lattice[i].is_subset_of(lattice[j]) || lattice[j].is_subset_of(lattice[i])) continue;
      add(join_normal(lattice[i], lattice[j]));
    }
  }
  std::sort(lattice.begin(), lattice.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.elements() < b.elements();
  });
  return lattice;
}

FiniteGroup quotient(const Subgroup& normal) {
  const FiniteGroup& g = normal.group();
  if (!is_normal(normal)) throw Error(ErrorCode::NotNormal, "subgroup is not normal");
  std::vector<ElementId> coset_of(g.order(), kNoElement);
  std::vector<ElementId> reps;
  for (ElementId x = 0; x < g.order(); ++x) {
    if (coset_of[x] != kNoElement) continue;
    const auto q = static_cast<ElementId>(reps.size());
    reps.push_back(x);
    for (ElementId n : normal.elements()) coset_of[g.compose(x, n)] = q;
  }
  std::vector<ElementId> gens;
  for (ElementId x : g.generators()) {
    const ElementId q = coset_of[x];
    if (q != 0 && std::find(gens.begin(), gens.end(), q) == gens.end()) gens.push_back(q);
  }
  std::string name = g.name() + "/N" + std::to_string(normal.size());
  return detail::make_quotient(g, std::move(coset_of), std::move(reps), std::move(gens),
                               std::move(name));
}

Subgroup preimage(const Subgroup& in_quotient) {
  const FiniteGroup& q = in_quotient.group();
  const FiniteGroup& parent = q.parent();
  std::vector<ElementId> out;
  for (ElementId x = 0; x < parent.order(); ++x) {
    if (in_quotient.contains(q.from_parent(x))) out.push_back(x);
  }
  return subgroup_from_elements(parent, out);
}

Subgroup image(const FiniteGroup& quotient_group, const Subgroup& in_parent) {
  std::vector<ElementId> out;
  for (ElementId x : in_parent.elements()) out.push_back(quotient_group.from_parent(x));
  return subgroup_from_elements(quotient_group, out);
}

FiniteGroup as_group(const Subgroup& s) {
  return detail::make_view(s.group(), s.elements(), s.generators(),
                           "<" + std::to_string(s.size()) + " in " + s.group().name() + ">");
}

Subgroup lift(const Subgroup& in_view) {
  const FiniteGroup& view = in_view.group();
  const FiniteGroup& parent = view.parent();
  std::vector<ElementId> elements;
  std::vector<ElementId> gens;
  for (ElementId x : in_view.elements()) elements.push_back(view.to_parent(x));
  for (ElementId x : in_view.generators()) gens.push_back(view.to_parent(x));
  std::sort(elements.begin(), elements.end());
  return Subgroup(parent, std::move(elements), std::move(gens));
}

Subgroup sylow(const FiniteGroup& g, std::uint64_t ell) {
  if (!is_prime(ell) || g.order() % ell != 0) {
    throw Error(ErrorCode::PrimeDoesNotDivide,
                std::to_string(ell) + " is not a prime divisor of " + std::to_string(g.order()));
  }
  const std::uint64_t target = pi_part(g.order(), {ell});
  const auto& orders = g.element_orders();
  auto is_ell_element = [ell](std::uint64_t o) {
    while (o % ell == 0) o /= ell;
    return o == 1;
  };

  ElementId seed = 0;
  for (ElementId x = 0; x < g.order(); ++x) {
    if (is_ell_element(orders[x]) && orders[x] > orders[seed]) seed = x;
  }
  Subgroup p = closure(g, std::span<const ElementId>(&seed, 1));
  while (p.size() < target) {
    const Subgroup n = normalizer(p);
    ElementId pick = kNoElement;
    for (ElementId x : n.elements()) {
      if (!p.contains(x) && is_ell_element(orders[x])) {
        pick = x;
        break;
      }
    }
    if (pick == kNoElement) {
      throw Error(ErrorCode::UnknownElement, "Sylow ascent stalled");  // impossible by Sylow
    }
    p = extend(p, std::span<const ElementId>(&pick, 1));
  }
  return p;
}

}  // namespace agroup
