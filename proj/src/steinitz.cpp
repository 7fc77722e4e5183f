#include "agroup/steinitz.hpp"

#include <algorithm>

#include "agroup/number_theory.hpp"
#include "agroup/subgroup_algorithms.hpp"

namespace agroup {
namespace {

const SemidirectNode* semidirect_of(const FiniteGroup& g) {
  const auto* node = g.construction();
  if (!node) return nullptr;
  return std::get_if<SemidirectNode>(&node->kind);
}

// F^+ x| C_m with the field leaf on the left; returns (char, m).
std::optional<std::pair<std::uint64_t, std::uint64_t>> component_shape(const FiniteGroup& h) {
  const auto* s = semidirect_of(h);
  if (!s || !s->kernel.construction() || !s->quotient.construction()) return std::nullopt;
  const auto* f = std::get_if<FieldAddNode>(&s->kernel.construction()->kind);
  const auto* c = std::get_if<CyclicNode>(&s->quotient.construction()->kind);
  if (!f || !c) return std::nullopt;
  return std::pair{std::uint64_t{f->field.characteristic()}, c->n};
}

[[noreturn]] void not_family(const std::string& why) {
  throw Error(ErrorCode::NotFamilyGroup, why);
}

void check(bool ok, const std::string& why) {
  if (!ok) not_family(why);
}

GroupElement zero_fields(const GroupElement& e, bool keep_fields) {
  auto leaf = [&](const GroupElement& comp) {
    // comp = (field, cyclic)
    const auto& field = comp.left().as_field().value;
    const auto& cyc = comp.right().as_cyclic();
    FieldElement zero{std::vector<std::uint32_t>(field.coeffs.size(), 0)};
    if (keep_fields) {
      return GroupElement::pair(comp.left(), GroupElement::cyclic(0, cyc.modulus));
    }
    return GroupElement::pair(GroupElement::field(zero), comp.right());
  };
  const auto& r = e.right().as_cyclic();
  return GroupElement::pair(
      GroupElement::pair(leaf(e.left().left()), leaf(e.left().right())),
      keep_fields ? GroupElement::cyclic(0, r.modulus) : e.right());
}

}  // namespace

FamilyProjection family_projection(const FiniteGroup& g) {
  const auto* top = semidirect_of(g);
  if (!top) not_family("not a semidirect construction");
  const auto* cr = top->quotient.construction();
  if (!cr || !std::holds_alternative<CyclicNode>(cr->kind)) not_family("acting group not cyclic");
  const auto* k = top->kernel.construction();
  if (!k || !std::holds_alternative<DirectNode>(k->kind)) not_family("kernel not a direct product");
  const auto& d = std::get<DirectNode>(k->kind);
  const auto c1 = component_shape(d.left);
  const auto c2 = component_shape(d.right);
  if (!c1 || !c2) not_family("direct factors are not field-by-cyclic products");

  FamilyProjection out{c1->first, c2->first, std::get<CyclicNode>(cr->kind).n,
                       trivial_subgroup(g), trivial_subgroup(g), trivial_subgroup(g), {}};
  check(c1->second == out.q && c2->second == out.p, "component primes do not interlock");

  std::vector<ElementId> h_ids;
  std::vector<ElementId> gamma_ids;
  out.pi.resize(g.order());
  for (ElementId x = 0; x < g.order(); ++x) {
    const GroupElement e = g.element(x);
    const ElementId image = g.id_of(zero_fields(e, false));
    out.pi[x] = image;
    if (image == x) gamma_ids.push_back(x);
    if (g.id_of(zero_fields(e, true)) == x) h_ids.push_back(x);
  }

  try {
    out.h = subgroup_from_elements(g, h_ids);
    out.gamma = subgroup_from_elements(g, gamma_ids);
  } catch (const Error&) {
    not_family("coordinate sets are not subgroups");
  }
  check(is_normal(out.h) && is_abelian(out.h), "H is not normal abelian");
  check(is_abelian(out.gamma), "Gamma is not abelian");
  check(out.gamma.size() == out.p * out.q * out.r, "Gamma has the wrong order");
  check(out.h.members().intersection_count(out.gamma.members()) == 1, "H n Gamma != 1");
  check(out.h.size() * out.gamma.size() == g.order(), "H Gamma != G");
  for (ElementId x = 0; x < g.order(); ++x) {
    for (ElementId s : g.generators()) {
      check(out.pi[g.compose(x, s)] == g.compose(out.pi[x], out.pi[s]), "pi not a homomorphism");
    }
    check((out.pi[x] == 0) == out.h.contains(x), "kernel of pi differs from H");
  }

  const ElementId cr_gen = g.id_of(GroupElement::pair(
      top->kernel.element(0), top->quotient.element(top->quotient.generators().at(0))));
  out.c_r = closure(g, std::span<const ElementId>(&cr_gen, 1));
  return out;
}

std::vector<SylowExponent> sylow_exponent_report(const FiniteGroup& g) {
  std::vector<SylowExponent> out;
  for (std::uint64_t ell : prime_divisors(g.order())) {
    const Subgroup p = sylow(g, ell);
    out.push_back({ell, p.size(), exponent(p)});
  }
  return out;
}

namespace {

std::vector<OrderEllClass> classify_classes(const FiniteGroup& g, const FamilyProjection& proj,
                                            const std::vector<std::vector<ElementId>>& classes,
                                            std::uint64_t ell) {
  std::vector<OrderEllClass> out;
  for (const auto& cls : classes) {
    const ElementId tau = cls.front();
    if (g.element_order(tau) != ell) continue;
    OrderEllClass row;
    row.ell = ell;
    row.representative = tau;
    row.size = cls.size();
    const auto pi_order = g.element_order(proj.pi[tau]);
    row.case_tag = pi_order == ell ? 'a' : 'b';
    if (row.case_tag == 'a') {
      const Subgroup cyclic = closure(g, std::span<const ElementId>(&tau, 1));
      row.normalizer_equals_centralizer =
          normalizer(cyclic) == centralizer(g, std::span<const ElementId>(&tau, 1));
      row.absorbed = true;
    } else {
      row.inside_h = std::all_of(cls.begin(), cls.end(),
                                 [&](ElementId x) { return proj.h.contains(x); });
    }
    row.exponent_times_two = (ell - 1) * (g.order() / ell);
    if (row.exponent_times_two % 2 == 0) row.exponent = row.exponent_times_two / 2;
    out.push_back(row);
  }
  return out;
}

}  // namespace

std::vector<OrderEllClass> order_ell_classification(const FiniteGroup& g, std::uint64_t ell) {
  if (!is_prime(ell) || g.order() % ell != 0) {
    throw Error(ErrorCode::PrimeDoesNotDivide,
                std::to_string(ell) + " is not a prime divisor of " + std::to_string(g.order()));
  }
  const FamilyProjection proj = family_projection(g);
  return classify_classes(g, proj, conjugacy_classes(g), ell);
}

SteinitzReport steinitz_report(const FiniteGroup& g) {
  const FamilyProjection proj = family_projection(g);
  SteinitzReport report;
  report.parity_caveat = proj.p == 2 || proj.q == 2 || proj.r == 2;
  report.sylow_exponents = sylow_exponent_report(g);
  const auto classes = conjugacy_classes(g);
  const auto& orders = g.element_orders();

  bool ok = true;
  for (const auto& se : report.sylow_exponents) ok = ok && se.exponent == se.prime;
  for (std::uint64_t ell : prime_divisors(g.order())) {
    auto rows = classify_classes(g, proj, classes, ell);
    SteinitzReport::Count count{ell, 0, 0, 0};
    count.total = static_cast<std::size_t>(std::count(orders.begin(), orders.end(), ell));
    for (const auto& row : rows) {
      (row.case_tag == 'a' ? count.case_a : count.case_b) += row.size;
      ok = ok && row.normalizer_equals_centralizer.value_or(true) && row.inside_h.value_or(true);
    }
    ok = ok && count.case_a + count.case_b == count.total;
    report.counts.push_back(count);
    report.classes.insert(report.classes.end(), rows.begin(), rows.end());
  }
  report.all_checks_pass = ok;
  return report;
}

std::vector<ExponentRow> steinitz_exponent_table(const FiniteGroup& g) {
  const FamilyProjection proj = family_projection(g);
  const auto classes = conjugacy_classes(g);
  std::vector<ExponentRow> out;
  for (std::uint64_t ell : prime_divisors(g.order())) {
    for (const auto& row : classify_classes(g, proj, classes, ell)) {
      out.push_back({row.ell, row.representative, row.case_tag, row.exponent_times_two,
                     row.exponent, row.absorbed});
    }
  }
  return out;
}

}  // namespace agroup
