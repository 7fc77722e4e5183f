#include "agroup/classify.hpp"

#include <algorithm>
#include <sstream>

#include "agroup/number_theory.hpp"
#include "agroup/subgroup_algorithms.hpp"

namespace agroup {
namespace {

bool is_pi_number(std::uint64_t n, const std::vector<std::uint64_t>& primes) {
  for (std::uint64_t ell : primes) {
    while (n % ell == 0) n /= ell;
  }
  return n == 1;
}

std::string prime_set(const std::vector<std::uint64_t>& primes) {
  std::string s = "{";
  for (std::size_t i = 0; i < primes.size(); ++i) s += (i ? "," : "") + std::to_string(primes[i]);
  return s + "}";
}

}  // namespace

StructureReport structure_report(const FiniteGroup& g) {
  StructureReport r;
  r.order = g.order();
  r.factorization = factorize(g.order());
  r.abelian = g.is_abelian();
  const auto series = derived_series(g);
  for (const auto& s : series) r.derived_orders.push_back(s.size());
  r.solvable = series.back().is_trivial();
  r.derived_length = series.size() - 1;
  r.metabelian = r.solvable && r.derived_length <= 2;
  for (auto [ell, e] : r.factorization) {
    const Subgroup p = sylow(g, ell);
    r.sylows.push_back({ell, p.size(), is_abelian(p), normalizer(p).is_whole()});
  }
  return r;
}

bool is_a_group(const FiniteGroup& g) {
  for (std::uint64_t ell : prime_divisors(g.order())) {
    if (!is_abelian(sylow(g, ell))) return false;
  }
  return true;
}

std::optional<Subgroup> normal_hall(const FiniteGroup& g,
                                    const std::vector<std::uint64_t>& primes) {
  const auto& orders = g.element_orders();
  std::vector<ElementId> members;
  for (ElementId x = 0; x < g.order(); ++x) {
    if (is_pi_number(orders[x], primes)) members.push_back(x);
  }
  if (members.size() != pi_part(g.order(), primes)) return std::nullopt;
  Subgroup s = closure(g, members);
  if (s.size() != members.size()) return std::nullopt;
  return s;
}

std::vector<std::pair<Subgroup, Subgroup>> direct_factor_pairs(const FiniteGroup& g,
                                                               const Limits& limits) {
  std::vector<std::pair<Subgroup, Subgroup>> out;
  const auto lattice = normal_subgroups(g, limits);
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    const Subgroup& n1 = lattice[i];
    if (n1.is_trivial() || n1.is_whole()) continue;
    for (std::size_t j = i + 1; j < lattice.size(); ++j) {
      const Subgroup& n2 = lattice[j];
      if (n2.is_trivial() || n2.is_whole()) continue;
      if (n1.size() * n2.size() != g.order()) continue;
      if (n1.members().intersection_count(n2.members()) != 1) continue;
      out.emplace_back(n1, n2);
    }
  }
  return out;
}

std::string to_string(APrimeTrace::Rule rule) {
  switch (rule) {
    case APrimeTrace::Rule::Abelian: return "abelian";
    case APrimeTrace::Rule::Semidirect: return "semidirect";
    case APrimeTrace::Rule::Direct: return "direct";
    case APrimeTrace::Rule::None: return "none";
  }
  return "none";
}

APrimeTrace is_a_prime_group(const FiniteGroup& g, const Limits& limits) {
  APrimeTrace trace;
  trace.order = g.order();
  if (g.is_abelian()) {
    trace.result = true;
    trace.rule = APrimeTrace::Rule::Abelian;
    trace.detail = "abelian of order " + std::to_string(g.order());
    return trace;
  }
  trace.attempts.push_back("not abelian");

  const auto primes = prime_divisors(g.order());
  const std::size_t k = primes.size();
  for (std::uint32_t mask = 1; mask + 1 < (1u << k); ++mask) {
    std::vector<std::uint64_t> pi;
    for (std::size_t i = 0; i < k; ++i) {
      if (mask & (1u << i)) pi.push_back(primes[i]);
    }
    const std::string label = "normal Hall " + prime_set(pi);
    const auto hall = normal_hall(g, pi);
    if (!hall) {
      trace.attempts.push_back(label + ": none");
      continue;
    }
    if (!is_abelian(*hall)) {
      trace.attempts.push_back(label + ": order " + std::to_string(hall->size()) + ", nonabelian");
      continue;
    }
    APrimeTrace sub = is_a_prime_group(quotient(*hall), limits);
    if (sub.result) {
      trace.result = true;
      trace.rule = APrimeTrace::Rule::Semidirect;
      trace.detail = label + " of order " + std::to_string(hall->size()) +
                     " is abelian; complement of order " + std::to_string(sub.order);
      trace.attempts.clear();
      trace.children.push_back(std::move(sub));
      return trace;
    }
    trace.attempts.push_back(label + ": abelian, but the quotient is not recognised");
  }

  const auto pairs = direct_factor_pairs(g, limits);
  for (const auto& [n1, n2] : pairs) {
    APrimeTrace left = is_a_prime_group(as_group(n1), limits);
    if (!left.result) {
      trace.attempts.push_back("direct factor of order " + std::to_string(n1.size()) +
                               " not recognised");
      continue;
    }
    APrimeTrace right = is_a_prime_group(as_group(n2), limits);
    if (!right.result) {
      trace.attempts.push_back("direct factor of order " + std::to_string(n2.size()) +
                               " not recognised");
      continue;
    }
    trace.result = true;
    trace.rule = APrimeTrace::Rule::Direct;
    trace.detail = "direct product of normal subgroups of orders " + std::to_string(n1.size()) +
                   " and " + std::to_string(n2.size());
    trace.attempts.clear();
    trace.children.push_back(std::move(left));
    trace.children.push_back(std::move(right));
    return trace;
  }
  trace.attempts.push_back(std::to_string(pairs.size()) + " direct factorizations");
  trace.detail = "no rule applies";
  return trace;
}

// ---------------------------------------------------------------------------
// Two-prime decomposition

namespace {

void require(bool ok, const std::string& what, std::vector<std::string>& certificate) {
  if (!ok) throw Error(ErrorCode::DecompositionInvariantFailed, what);
  certificate.push_back(what);
}

Subgroup sylow_or_trivial(const FiniteGroup& g, std::uint64_t ell) {
  if (ell != 0 && g.order() % ell == 0) return sylow(g, ell);
  return trivial_subgroup(g);
}

// K_p: the normal subgroup with K_p G'/G' the p-Sylow of G/G' and K_p n G' the q-Sylow of G'.
PrimeComponent component(const FiniteGroup& g, const Subgroup& derived, std::uint64_t p,
                         std::uint64_t q, std::vector<std::string>& certificate) {
  PrimeComponent c{p, trivial_subgroup(g)};
  const std::string tag = "[" + std::to_string(p) + "] ";

  const Subgroup s_q = lift(sylow_or_trivial(as_group(derived), q));
  require(is_normal(s_q), tag + "Sylow of G' is normal in G", certificate);
  c.derived_sylow_order = s_q.size();

  const FiniteGroup gt = quotient(s_q);
  c.quotient_order = gt.order();
  const Subgroup pt = sylow_or_trivial(gt, p);
  require(is_normal(pt), tag + "Sylow of the quotient is normal", certificate);
  c.quotient_sylow_order = pt.size();

  const Subgroup qt = sylow_or_trivial(gt, q);
  const Subgroup gt_derived = derived_subgroup(whole_group(gt));
  c.quotient_derived_order = gt_derived.size();
  require(gt_derived.is_subset_of(pt), tag + "derived subgroup of the quotient lies in its Sylow",
          certificate);

  // coprime action: the Sylow splits as [P, Q] x C_P(Q)
  const Subgroup fixed = intersection(pt, centralizer(qt));
  c.fixed_point_order = fixed.size();
  require(fixed.members().intersection_count(gt_derived.members()) == 1,
          tag + "fixed points meet the derived subgroup trivially", certificate);
  require(fixed.size() * gt_derived.size() == pt.size(),
          tag + "fixed points complement the derived subgroup", certificate);
  require(is_normal(fixed), tag + "fixed points are normal in the quotient", certificate);

  c.k = preimage(fixed);
  return c;
}

// K is an extension of its abelian Sylow inside G' by an abelian quotient.
void certify_component(const PrimeComponent& c, const Subgroup& derived,
                       std::vector<std::string>& certificate) {
  const std::string tag = "[" + std::to_string(c.prime) + "] ";
  const Subgroup inner = intersection(c.k, derived);
  require(inner.size() == c.derived_sylow_order, tag + "K meets G' in the Sylow of G'",
          certificate);
  require(is_abelian(inner), tag + "K n G' is abelian", certificate);
  require(derived_subgroup(c.k).is_subset_of(inner), tag + "K / (K n G') is abelian",
          certificate);
  require(c.k.size() / inner.size() == pi_part(c.k.size(), {c.prime}) || c.prime == 0,
          tag + "K / (K n G') is a Sylow quotient", certificate);
}

}  // namespace

TwoPrimeDecomposition two_prime_decompose(const FiniteGroup& g) {
  const auto primes = prime_divisors(g.order());
  if (primes.size() > 2) {
    throw Error(ErrorCode::TooManyPrimes,
                "order " + std::to_string(g.order()) + " has " + std::to_string(primes.size()) +
                    " prime divisors");
  }
  if (!is_a_group(g)) throw Error(ErrorCode::NotAGroup, "some Sylow subgroup is nonabelian");

  TwoPrimeDecomposition out{{0, whole_group(g)}, {0, trivial_subgroup(g)}, {}};
  if (primes.size() <= 1) {
    require(g.is_abelian(), "group of prime-power order is abelian", out.certificate);
    out.first.prime = primes.empty() ? 0 : primes[0];
    return out;
  }

  const std::uint64_t p = primes[0];
  const std::uint64_t q = primes[1];
  const Subgroup derived = derived_subgroup(whole_group(g));
  require(is_abelian(derived), "G' is abelian", out.certificate);

  out.first = component(g, derived, p, q, out.certificate);
  out.second = component(g, derived, q, p, out.certificate);
  const Subgroup& kp = out.first.k;
  const Subgroup& kq = out.second.k;
  require(is_normal(kp) && is_normal(kq), "K_p and K_q are normal", out.certificate);
  require(kp.members().intersection_count(kq.members()) == 1, "K_p n K_q = 1", out.certificate);
  require(kp.size() * kq.size() == g.order(), "K_p K_q = G", out.certificate);
  certify_component(out.first, derived, out.certificate);
  certify_component(out.second, derived, out.certificate);
  return out;
}

}  // namespace agroup
