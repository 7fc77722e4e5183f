#include "agroup/constructions.hpp"

#include <algorithm>
#include <charconv>
#include <memory>

#include "agroup/number_theory.hpp"
#include "group_internal.hpp"

namespace agroup {
namespace {

void check_cap(std::uint64_t predicted, const Limits& limits) {
  if (predicted > limits.element_cap) {
    throw Error(ErrorCode::SizeCapExceeded, "order " + std::to_string(predicted) +
                                                " exceeds cap " +
                                                std::to_string(limits.element_cap));
  }
}

std::uint64_t checked_product(std::uint64_t a, std::uint64_t b, const Limits& limits) {
  if (a != 0 && b > limits.element_cap / a) {
    throw Error(ErrorCode::SizeCapExceeded,
                "order " + std::to_string(a) + " * " + std::to_string(b) + " exceeds cap " +
                    std::to_string(limits.element_cap));
  }
  return a * b;
}

}  // namespace

FiniteGroup cyclic(std::uint64_t n, const Limits& limits) {
  if (n == 0) throw Error(ErrorCode::BadParams, "cyclic group order must be positive");
  check_cap(n, limits);
  auto node = std::make_shared<const ConstructionNode>(ConstructionNode{CyclicNode{n}});
  std::vector<std::uint32_t> gens;
  if (n > 1) gens.push_back(1);
  return detail::enumerate_codes(node, gens, limits, "C" + std::to_string(n));
}

FiniteGroup field_additive(const FieldSpec& field, const Limits& limits) {
  check_cap(field.size(), limits);
  auto node = std::make_shared<const ConstructionNode>(ConstructionNode{FieldAddNode{field}});
  std::vector<std::uint32_t> gens;
  std::uint32_t basis = 1;
  for (unsigned i = 0; i < field.degree(); ++i) {
    gens.push_back(basis);
    basis *= field.characteristic();
  }
  return detail::enumerate_codes(node, gens, limits, "F" + std::to_string(field.size()) + "+");
}

FiniteGroup direct_product(const FiniteGroup& left, const FiniteGroup& right,
                           const Limits& limits) {
  checked_product(left.order(), right.order(), limits);
  auto node =
      std::make_shared<const ConstructionNode>(ConstructionNode{DirectNode{left, right}});
  const auto nr = static_cast<std::uint32_t>(right.order());
  std::vector<std::uint32_t> gens;
  for (ElementId g : left.generators()) gens.push_back(g * nr);
  for (ElementId g : right.generators()) gens.push_back(g);
  return detail::enumerate_codes(node, gens, limits,
                                 "(" + left.name() + " x " + right.name() + ")");
}

FiniteGroup semidirect_product(const FiniteGroup& kernel, const FiniteGroup& acting,
                               const Action& action, const Limits& limits) {
  checked_product(kernel.order(), acting.order(), limits);
  action.validate(kernel, acting);
  auto node = std::make_shared<const ConstructionNode>(ConstructionNode{
      SemidirectNode{kernel, acting, std::make_shared<const Action>(action)}});
  const auto nq = static_cast<std::uint32_t>(acting.order());
  std::vector<std::uint32_t> gens;
  for (ElementId g : kernel.generators()) gens.push_back(g * nq);
  for (ElementId g : acting.generators()) gens.push_back(g);
  return detail::enumerate_codes(node, gens, limits,
                                 "(" + kernel.name() + " x| " + acting.name() + ")");
}

Action scalar_action(const FiniteGroup& field_group, const FiniteGroup& cyclic_group,
                     const FieldElement& u) {
  const auto* fnode = field_group.construction();
  const auto* cnode = cyclic_group.construction();
  if (!fnode || !std::holds_alternative<FieldAddNode>(fnode->kind) || !cnode ||
      !std::holds_alternative<CyclicNode>(cnode->kind)) {
    throw Error(ErrorCode::InvalidAction, "scalar action needs a field group and a cyclic group");
  }
  const FieldSpec& f = std::get<FieldAddNode>(fnode->kind).field;
  const std::uint64_t m = std::get<CyclicNode>(cnode->kind).n;
  if (f.is_zero(u) || f.multiplicative_order(u) != m) {
    throw Error(ErrorCode::WrongOrder, f.to_string(u) + " does not have multiplicative order " +
                                           std::to_string(m));
  }
  std::vector<FieldElement> scalars{f.one()};
  for (std::uint64_t e = 1; e < m; ++e) scalars.push_back(f.mul(scalars.back(), u));
  std::vector<FieldElement> values;
  for (ElementId h = 0; h < field_group.order(); ++h) {
    values.push_back(field_group.element(h).as_field().value);
  }
  return Action::tabulate(field_group, cyclic_group, [&](ElementId g, ElementId h) {
    const auto e = cyclic_group.element(g).as_cyclic().residue;
    return field_group.id_of(GroupElement::field(f.mul(scalars[e], values[h])));
  });
}

Action power_action(const FiniteGroup& cyclic_n, const FiniteGroup& cyclic_m, std::uint64_t k) {
  const auto* nnode = cyclic_n.construction();
  if (!nnode || !std::holds_alternative<CyclicNode>(nnode->kind) ||
      !cyclic_m.construction() ||
      !std::holds_alternative<CyclicNode>(cyclic_m.construction()->kind)) {
    throw Error(ErrorCode::InvalidAction, "power action needs two cyclic groups");
  }
  const std::uint64_t n = std::get<CyclicNode>(nnode->kind).n;
  return Action::tabulate(cyclic_n, cyclic_m, [&](ElementId g, ElementId h) {
    const auto e = cyclic_m.element(g).as_cyclic().residue;
    const auto x = cyclic_n.element(h).as_cyclic().residue;
    const std::uint64_t image =
        static_cast<std::uint64_t>(static_cast<unsigned __int128>(pow_mod(k, e, n)) * x % n);
    return cyclic_n.id_of(GroupElement::cyclic(image, n));
  });
}

FiniteGroup scalar_semidirect(std::uint64_t p, unsigned a, std::uint64_t m,
                              const Limits& limits) {
  const FieldSpec f = make_field(p, a, limits.element_cap);
  const FieldElement u = element_of_order(f, m);
  checked_product(f.size(), m, limits);
  const FiniteGroup fg = field_additive(f, limits);
  const FiniteGroup cm = cyclic(m, limits);
  return semidirect_product(fg, cm, scalar_action(fg, cm, u), limits);
}

// ---------------------------------------------------------------------------
// Family parameters

FamilyParams FamilyParams::parse(std::string_view text) {
  std::vector<std::uint64_t> values;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    std::string_view tok = text.substr(start, comma == std::string_view::npos ? text.npos
                                                                              : comma - start);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size()) {
      throw Error(ErrorCode::ParseError,
                  "expected \"p,q,r,a,b\" as decimal integers, got \"" + std::string(text) + "\"");
    }
    values.push_back(v);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (values.size() != 5 || values[3] > 64 || values[4] > 64) {
    throw Error(ErrorCode::ParseError,
                "expected \"p,q,r,a,b\" (five integers, a and b at most 64), got \"" +
                    std::string(text) + "\"");
  }
  return FamilyParams{values[0], values[1], values[2], static_cast<unsigned>(values[3]),
                      static_cast<unsigned>(values[4])};
}

std::string FamilyParams::to_string() const {
  return std::to_string(p) + "," + std::to_string(q) + "," + std::to_string(r) + "," +
         std::to_string(a) + "," + std::to_string(b);
}

std::optional<std::uint64_t> FamilyParams::order() const {
  auto pa = checked_pow(p, a + 1);
  auto qb = checked_pow(q, b + 1);
  if (!pa || !qb) return std::nullopt;
  const unsigned __int128 total = static_cast<unsigned __int128>(*pa) * *qb * r;
  if (total > UINT64_MAX) return std::nullopt;
  return static_cast<std::uint64_t>(total);
}

std::optional<std::string> family_params_problem(const FamilyParams& params) {
  const auto [p, q, r, a, b] = params;
  for (auto [name, v] : {std::pair{"p", p}, std::pair{"q", q}, std::pair{"r", r}}) {
    if (!is_prime(v)) return std::string(name) + " = " + std::to_string(v) + " is not prime";
  }
  if (p == q || q == r || p == r) return std::string("p, q, r must be pairwise distinct");
  if (a == 0 || b == 0) return std::string("a and b must be positive");
  auto minus_one = [](std::uint64_t base, unsigned e) {
    auto v = checked_pow(base, e);
    return v ? std::to_string(*v - 1) : std::to_string(base) + "^" + std::to_string(e) + " - 1";
  };
  if (pow_mod(p, a, q * r) != 1 % (q * r)) {
    return "q*r = " + std::to_string(q * r) + " does not divide p^a - 1 = " + minus_one(p, a);
  }
  if (pow_mod(q, b, p * r) != 1 % (p * r)) {
    return "p*r = " + std::to_string(p * r) + " does not divide q^b - 1 = " + minus_one(q, b);
  }
  return std::nullopt;
}

void validate_family_params(const FamilyParams& params) {
  if (auto problem = family_params_problem(params)) throw Error(ErrorCode::BadParams, *problem);
}

// ---------------------------------------------------------------------------
// Family groups

FiniteGroup build_family_component(std::uint64_t p, std::uint64_t q, unsigned a,
                                   const Limits& limits) {
  if (!is_prime(p) || !is_prime(q) || p == q || a == 0) {
    throw Error(ErrorCode::BadParams, "component needs distinct primes p, q and a >= 1");
  }
  if (pow_mod(p, a, q) != 1) {
    throw Error(ErrorCode::BadParams,
                "q = " + std::to_string(q) + " does not divide p^a - 1");
  }
  return scalar_semidirect(p, a, q, limits);
}

FiniteGroup build_two_prime_pair(std::uint64_t p, std::uint64_t q, unsigned a, unsigned b,
                                 const Limits& limits) {
  const FiniteGroup h1 = build_family_component(p, q, a, limits);
  const FiniteGroup h2 = build_family_component(q, p, b, limits);
  return direct_product(h1, h2, limits);
}

FiniteGroup build_family_group(const FamilyParams& params, const Limits& limits) {
  validate_family_params(params);
  const auto order = params.order();
  if (!order || *order > limits.element_cap) {
    throw Error(ErrorCode::SizeCapExceeded,
                "family order " + (order ? std::to_string(*order) : std::string("(overflow)")) +
                    " exceeds cap " + std::to_string(limits.element_cap));
  }
  const auto [p, q, r, a, b] = params;
  const FieldSpec f1 = make_field(p, a, limits.element_cap);
  const FieldSpec f2 = make_field(q, b, limits.element_cap);

  const FiniteGroup h1 = build_family_component(p, q, a, limits);
  const FiniteGroup h2 = build_family_component(q, p, b, limits);
  const FiniteGroup k = direct_product(h1, h2, limits);
  const FiniteGroup cr = cyclic(r, limits);

  const FieldElement rho1 = element_of_order(f1, r);
  const FieldElement rho2 = element_of_order(f2, r);
  std::vector<FieldElement> pow1{f1.one()};
  std::vector<FieldElement> pow2{f2.one()};
  for (std::uint64_t e = 1; e < r; ++e) {
    pow1.push_back(f1.mul(pow1.back(), rho1));
    pow2.push_back(f2.mul(pow2.back(), rho2));
  }

  std::vector<GroupElement> decoded;
  decoded.reserve(k.order());
  for (ElementId x = 0; x < k.order(); ++x) decoded.push_back(k.element(x));

  // C_r scales the field coordinates and fixes the C_q, C_p coordinates
  const Action rho = Action::tabulate(k, cr, [&](ElementId g, ElementId x) {
    const auto e = cr.element(g).as_cyclic().residue;
    const GroupElement& el = decoded[x];
    const GroupElement left = GroupElement::pair(
        GroupElement::field(f1.mul(pow1[e], el.left().left().as_field().value)),
        el.left().right());
    const GroupElement right = GroupElement::pair(
        GroupElement::field(f2.mul(pow2[e], el.right().left().as_field().value)),
        el.right().right());
    return k.id_of(GroupElement::pair(left, right));
  });

  auto node = std::make_shared<const ConstructionNode>(
      ConstructionNode{SemidirectNode{k, cr, std::make_shared<const Action>(rho)}});
  rho.validate(k, cr);
  const auto nq = static_cast<std::uint32_t>(cr.order());
  std::vector<std::uint32_t> gens;
  for (ElementId g : k.generators()) gens.push_back(g * nq);
  for (ElementId g : cr.generators()) gens.push_back(g);
  return detail::enumerate_codes(node, gens, limits, "G(" + params.to_string() + ")");
}

std::vector<FamilyEntry> search_family(std::uint64_t max_order) {
  std::vector<FamilyEntry> out;
  if (max_order < 2 * 2 * 3 * 3 * 5) return out;
  // every valid order is at least p^2 q^2 r
  const auto primes = primes_up_to(max_order / 36 + 1);
  for (std::uint64_t p : primes) {
    for (std::uint64_t q : primes) {
      if (q == p) continue;
      const unsigned __int128 pq2 = static_cast<unsigned __int128>(p * p) * (q * q);
      if (pq2 * 2 > max_order) break;
      for (std::uint64_t r : primes) {
        if (pq2 * r > max_order) break;
        if (r == p || r == q) continue;
        const std::uint64_t a0 = multiplicative_order(p, q * r);
        const std::uint64_t b0 = multiplicative_order(q, p * r);
        for (std::uint64_t a = a0; a <= 64; a += a0) {
          FamilyParams params{p, q, r, static_cast<unsigned>(a), static_cast<unsigned>(b0)};
          auto o = params.order();
          if (!o || *o > max_order) break;
          for (std::uint64_t b = b0; b <= 64; b += b0) {
            params.b = static_cast<unsigned>(b);
            o = params.order();
            if (!o || *o > max_order) break;
            out.push_back({params, *o});
          }
        }
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const FamilyEntry& x, const FamilyEntry& y) {
    if (x.order != y.order) return x.order < y.order;
    return x.params < y.params;
  });
  return out;
}

}  // namespace agroup
