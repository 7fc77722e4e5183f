#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "agroup/error.hpp"
#include "agroup/subgroup_algorithms.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace agroup;

namespace {

std::set<ElementId> as_set(const Subgroup& s) { return {s.elements().begin(), s.elements().end()}; }

std::vector<fixtures::Named> small_groups() {
  std::vector<fixtures::Named> out;
  for (auto& n : fixtures::rule_built_corpus()) {
    if (n.group.order() <= 700) out.push_back(n);
  }
  out.push_back({"(C_3 x C_3) x| C_3", fixtures::heisenberg27()});
  return out;
}

}  // namespace

TEST_CASE("compose examples") {
  const FiniteGroup c6 = cyclic(6);
  CHECK(c6.order() == 6);
  const ElementId four = c6.id_of(GroupElement::cyclic(4, 6));
  const ElementId five = c6.id_of(GroupElement::cyclic(5, 6));
  CHECK(c6.element(c6.compose(four, five)) == GroupElement::cyclic(3, 6));
  for (ElementId g = 0; g < 6; ++g) CHECK(c6.compose(g, c6.invert(g)) == 0);
  CHECK(c6.element_order(c6.id_of(GroupElement::cyclic(2, 6))) == 3);
  CHECK(c6.element_order(0) == 1);

  const FiniteGroup h1 = build_family_component(5, 2, 2);
  const FieldSpec f25 = make_field(5, 2);
  const GroupElement t = GroupElement::pair(GroupElement::field(f25.x()), GroupElement::cyclic(1, 2));
  const ElementId tid = h1.id_of(t);
  CHECK(h1.compose(tid, tid) == 0);
  CHECK(h1.element_order(tid) == 2);

  const ElementId xid = h1.id_of(GroupElement::pair(GroupElement::field(f25.x()), GroupElement::cyclic(0, 2)));
  const ElementId one[] = {xid};
  CHECK(closure(h1, one).size() == 5);
  CHECK(closure(h1, {}).size() == 1);
  CHECK(closure(h1, h1.generators()).is_whole());
}

TEST_CASE("unknown elements are rejected") {
  const FiniteGroup c6 = cyclic(6);
  try {
    c6.id_of(GroupElement::cyclic(1, 5));
    FAIL("expected UnknownElement");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnknownElement);
  }
}

TEST_CASE("enumeration caps") {
  Limits tight;
  tight.element_cap = 100;
  try {
    CHECK(build_family_component(5, 2, 2, tight).order() == 50);
    direct_product(cyclic(20), cyclic(20), tight);
    FAIL("expected SizeCapExceeded");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SizeCapExceeded);
  }
  const FiniteGroup c6 = cyclic(6);
  try {
    enumerate(c6.construction_ptr(), {GroupElement::cyclic(2, 6)});
    FAIL("expected GeneratorsDoNotGenerate");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::GeneratorsDoNotGenerate);
  }
}

TEST_CASE("structural products agree with the group law") {
  for (const auto& [name, g] : small_groups()) {
    CAPTURE(name);
    std::size_t mismatches = 0;
    const std::size_t step = g.order() <= 60 ? 1 : g.order() / 37 + 1;
    for (ElementId a = 0; a < g.order(); a += static_cast<ElementId>(step)) {
      for (ElementId b = 0; b < g.order(); ++b) {
        if (oracle::tree_compose(g, g.element(a), g.element(b)) != g.element(g.compose(a, b))) {
          ++mismatches;
        }
      }
    }
    CHECK(mismatches == 0);
  }
}

TEST_CASE("element set does not depend on generator order") {
  for (const auto& [name, g] : small_groups()) {
    CAPTURE(name);
    std::vector<GroupElement> gens;
    for (ElementId id : g.generators()) gens.push_back(g.element(id));
    std::reverse(gens.begin(), gens.end());
    const FiniteGroup h = enumerate(g.construction_ptr(), gens);
    REQUIRE(h.order() == g.order());
    std::set<std::string> left, right;
    for (ElementId i = 0; i < g.order(); ++i) {
      left.insert(g.element(i).to_string());
      right.insert(h.element(i).to_string());
    }
    CHECK(left == right);
    for (ElementId i = 0; i < g.order(); ++i) {
      CHECK(h.element_order(h.id_of(g.element(i))) == g.element_order(i));
    }
  }
}

TEST_CASE("Lagrange and the class equation") {
  for (const auto& [name, g] : small_groups()) {
    CAPTURE(name);
    const auto classes = conjugacy_classes(g);
    std::size_t total = 0;
    for (const auto& cls : classes) {
      total += cls.size();
      CHECK(g.order() % cls.size() == 0);
      const ElementId rep[] = {cls.front()};
      CHECK(cls.size() * centralizer(g, rep).size() == g.order());
    }
    CHECK(total == g.order());
    for (const auto& n : normal_subgroups(g)) {
      CHECK(g.order() % n.size() == 0);
      CHECK(is_normal(n));
      verify_subgroup(n);
    }
    for (std::uint64_t ell : prime_divisors(g.order())) {
      const Subgroup p = sylow(g, ell);
      CHECK(p.size() == pi_part(g.order(), {ell}));
      CHECK(p == sylow(g, ell));
    }
    if (g.is_abelian()) CHECK(classes.size() == g.order());
  }
}

TEST_CASE("lattice, series and Sylow examples") {
  CHECK(normal_subgroups(cyclic(6)).size() == 4);
  CHECK(normal_subgroups(fixtures::s3()).size() == 3);
  CHECK(normal_subgroups(direct_product(cyclic(2), cyclic(2))).size() == 5);

  std::multiset<std::size_t> s3_classes;
  for (const auto& c : conjugacy_classes(fixtures::s3())) s3_classes.insert(c.size());
  CHECK(s3_classes == std::multiset<std::size_t>{1, 2, 3});

  const auto series = derived_series(fixtures::s3());
  REQUIRE(series.size() == 3);
  CHECK(series[1].size() == 3);
  CHECK(series[2].is_trivial());
  CHECK(derived_series(cyclic(12)).size() == 2);

  CHECK(sylow(cyclic(6), 2).size() == 2);
  try {
    sylow(cyclic(6), 5);
    FAIL("expected PrimeDoesNotDivide");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::PrimeDoesNotDivide);
  }
}

TEST_CASE("derived series matches the commutator double loop") {
  for (const auto& [name, g] : small_groups()) {
    CAPTURE(name);
    std::vector<ElementId> current(g.order());
    for (ElementId i = 0; i < g.order(); ++i) current[i] = i;
    for (const Subgroup& term : derived_series(g)) {
      CHECK(as_set(term) == std::set<ElementId>(current.begin(), current.end()));
      std::vector<ElementId> comms;
      for (ElementId a : current) {
        for (ElementId b : current) comms.push_back(g.commutator(a, b));
      }
      const auto next = oracle::closure(g, comms);
      current.assign(next.begin(), next.end());
    }
  }
}

TEST_CASE("quotients") {
  for (const auto& [name, g] : small_groups()) {
    CAPTURE(name);
    for (const auto& n : normal_subgroups(g)) {
      const FiniteGroup q = quotient(n);
      CHECK(q.order() * n.size() == g.order());
      // The projection is a homomorphism with kernel N.
      std::size_t bad = 0;
      for (ElementId a = 0; a < g.order(); a += 3) {
        for (ElementId b = 0; b < g.order(); b += 5) {
          if (q.from_parent(g.compose(a, b)) != q.compose(q.from_parent(a), q.from_parent(b))) ++bad;
        }
        if ((q.from_parent(a) == 0) != n.contains(a)) ++bad;
      }
      CHECK(bad == 0);
      CHECK(preimage(trivial_subgroup(q)) == n);
      // Representatives are minimal ids in their cosets.
      for (ElementId c = 0; c < q.order(); ++c) {
        const ElementId rep = q.to_parent(c);
        for (ElementId x : n.elements()) CHECK(g.compose(rep, x) >= rep);
      }
    }
  }
  const FiniteGroup s3 = fixtures::s3();
  try {
    const ElementId t[] = {s3.id_of(GroupElement::pair(GroupElement::cyclic(0, 3), GroupElement::cyclic(1, 2)))};
    quotient(closure(s3, t));
    FAIL("expected NotNormal");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotNormal);
  }
}

TEST_CASE("nested quotients and subgroup views") {
  const FiniteGroup g = direct_product(fixtures::s3(), fixtures::metacyclic(5, 2, 4));
  const auto lattice = normal_subgroups(g);
  const Subgroup& n = lattice[1];
  const FiniteGroup q = quotient(n);
  const FiniteGroup qq = quotient(derived_subgroup(whole_group(q)));
  CHECK(qq.is_abelian());
  const FiniteGroup v = as_group(sylow(g, 5));
  CHECK(v.order() == 5);
  CHECK(lift(whole_group(v)) == sylow(g, 5));
}

TEST_CASE("centralizer, normalizer, closure and element order match naive oracles") {
  for (const auto& [name, g] : small_groups()) {
    CAPTURE(name);
    const std::size_t step = g.order() <= 100 ? 1 : g.order() / 50;
    for (ElementId x = 0; x < g.order(); x += static_cast<ElementId>(step)) {
      CHECK(g.element_order(x) == oracle::element_order(g, x));
      const ElementId one[] = {x};
      CHECK(as_set(centralizer(g, one)) == oracle::centralizer(g, {x}));
      const Subgroup cyc = closure(g, one);
      CHECK(as_set(cyc) == oracle::closure(g, {x}));
      CHECK(as_set(normalizer(cyc)) == oracle::normalizer(g, as_set(cyc)));
    }
  }
}
