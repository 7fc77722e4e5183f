#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "agroup/constructions.hpp"
#include "agroup/error.hpp"
#include "agroup/number_theory.hpp"
#include "agroup/subgroup_algorithms.hpp"
#include "support/fixtures.hpp"

using namespace agroup;

namespace {

// Every tuple with qr | p^a - 1, pr | q^b - 1 and p^(a+1) q^(b+1) r <= n, by direct arithmetic.
std::vector<FamilyEntry> search_oracle(std::uint64_t n) {
  std::vector<FamilyEntry> out;
  const auto primes = primes_up_to(n / 8 + 2);
  for (std::uint64_t p : primes) {
    for (std::uint64_t q : primes) {
      if (p == q || p * p * q * q > n) continue;
      for (std::uint64_t r : primes) {
        if (r == p || r == q || p * p * q * q * r > n) continue;
        std::uint64_t pa = p;
        for (unsigned a = 1; pa * p * q * q * r <= n; ++a, pa *= p) {
          std::uint64_t qb = q;
          for (unsigned b = 1; pa * p * qb * q * r <= n; ++b, qb *= q) {
            if ((pa - 1) % (q * r) == 0 && (qb - 1) % (p * r) == 0) {
              out.push_back({{p, q, r, a, b}, pa * p * qb * q * r});
            }
          }
        }
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const FamilyEntry& l, const FamilyEntry& r) {
    return l.order != r.order ? l.order < r.order : l.params < r.params;
  });
  return out;
}

std::multiset<std::uint32_t> order_multiset(const FiniteGroup& g) {
  const auto& o = g.element_orders();
  return {o.begin(), o.end()};
}

}  // namespace

TEST_CASE("rule builders") {
  const FiniteGroup c2c3 = direct_product(cyclic(2), cyclic(3));
  CHECK(c2c3.order() == 6);
  CHECK(c2c3.is_abelian());
  CHECK(fixtures::s3().order() == 6);
  CHECK_FALSE(fixtures::s3().is_abelian());
  const FiniteGroup h27 = fixtures::heisenberg27();
  CHECK(h27.order() == 27);
  CHECK_FALSE(h27.is_abelian());
}

TEST_CASE("scalar actions") {
  const FieldSpec f25 = make_field(5, 2);
  const FiniteGroup fg = field_additive(f25);
  const FiniteGroup c1 = cyclic(1);
  CHECK(scalar_action(fg, c1, f25.one()).is_trivial());

  const FiniteGroup c2 = cyclic(2);
  const Action inv = scalar_action(fg, c2, f25.constant(4));
  for (ElementId h = 0; h < fg.order(); ++h) CHECK(inv.apply(1, h) == fg.invert(h));

  const FieldSpec f16 = make_field(2, 4);
  const FiniteGroup f16g = field_additive(f16);
  const FiniteGroup c5 = cyclic(5);
  const Action five = scalar_action(f16g, c5, element_of_order(f16, 5));
  const ElementId gen = c5.id_of(GroupElement::cyclic(1, 5));
  for (ElementId h = 1; h < f16g.order(); ++h) CHECK(five.apply(gen, h) != h);

  try {
    scalar_action(fg, cyclic(3), f25.constant(4));
    FAIL("expected WrongOrder");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::WrongOrder);
  }
}

TEST_CASE("invalid actions are rejected") {
  const FiniteGroup c3 = cyclic(3), c2 = cyclic(2);
  // x -> x + 1 is not an automorphism.
  const Action shift = Action::tabulate(c3, c2, [&](ElementId g, ElementId h) {
    const auto x = c3.element(h).as_cyclic().residue;
    const auto e = c2.element(g).as_cyclic().residue;
    return c3.id_of(GroupElement::cyclic((x + e) % 3, 3));
  });
  try {
    semidirect_product(c3, c2, shift);
    FAIL("expected InvalidAction");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidAction);
  }
  // Multiplication by 2 has order 2 on C_3, so C_3 cannot carry it.
  const FiniteGroup c3b = cyclic(3);
  try {
    semidirect_product(c3, c3b, power_action(c3, c3b, 2));
    FAIL("expected InvalidAction");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidAction);
  }
}

TEST_CASE("family parameters") {
  const FamilyParams p = FamilyParams::parse(" 5, 2,3 ,2,4");
  CHECK(p == FamilyParams{5, 2, 3, 2, 4});
  CHECK(p.to_string() == "5,2,3,2,4");
  CHECK(p.order() == 12000u);
  for (const char* bad : {"", "5,2,3,2", "5,2,3,2,4,1", "a,b,c,d,e", "5,2,3,-2,4", "5,,3,2,4"}) {
    CAPTURE(bad);
    try {
      FamilyParams::parse(bad);
      FAIL("expected ParseError");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::ParseError);
    }
  }
  try {
    build_family_group({5, 2, 3, 1, 4});
    FAIL("expected BadParams");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BadParams);
    CHECK(std::string(e.what()).find("does not divide") != std::string::npos);
  }
  CHECK(family_params_problem({5, 2, 3, 2, 4}) == std::nullopt);
  CHECK(family_params_problem({5, 5, 3, 2, 4}).has_value());
  CHECK(family_params_problem({4, 2, 3, 2, 4}).has_value());
}

TEST_CASE("family group orders") {
  CHECK(build_family_group({5, 2, 3, 2, 4}).order() == 12000);
  CHECK(build_family_group({13, 3, 2, 1, 3}).order() == 27378);
  for (const auto& e : search_family(30000)) {
    CAPTURE(e.params.to_string());
    CHECK(build_family_group(e.params).order() == e.order);
    CHECK(e.params.order() == e.order);
  }
}

TEST_CASE("search matches direct order arithmetic") {
  CHECK(search_family(100).empty());
  for (std::uint64_t n : {100u, 5000u, 12000u, 30000u, 200000u}) {
    CAPTURE(n);
    CHECK(search_family(n) == search_oracle(n));
  }
  std::multiset<std::uint64_t> orders;
  std::set<FamilyParams> params;
  for (const auto& e : search_family(30000)) {
    orders.insert(e.order);
    params.insert(e.params);
  }
  CHECK(orders == std::multiset<std::uint64_t>{12000, 12000, 18816, 18816, 27378, 27378});
  for (const auto& p : params) CHECK(params.count({p.q, p.p, p.r, p.b, p.a}) == 1);
  CHECK(params.count({5, 2, 3, 2, 4}) == 1);
  CHECK(params.count({13, 3, 2, 1, 3}) == 1);
  CHECK(params.count({7, 2, 3, 1, 6}) == 1);

  for (const auto& e : search_family(12000)) CHECK(e.order == 12000);
  CHECK(search_family(12000).size() == 2);
}

TEST_CASE("mirror parameterizations share element-order statistics") {
  for (const auto& e : search_family(30000)) {
    const FamilyParams m{e.params.q, e.params.p, e.params.r, e.params.b, e.params.a};
    if (e.params > m) continue;
    CAPTURE(e.params.to_string());
    CHECK(order_multiset(build_family_group(e.params)) == order_multiset(build_family_group(m)));
  }
}

TEST_CASE("family component examples") {
  const FiniteGroup h1 = build_family_component(5, 2, 2);
  CHECK(h1.order() == 50);
  const FiniteGroup h2 = build_family_component(2, 5, 4);
  CHECK(h2.order() == 80);
  CHECK(build_two_prime_pair(5, 2, 2, 4).order() == 4000);
  CHECK_THROWS_AS(build_family_component(5, 3, 1), Error);
}
