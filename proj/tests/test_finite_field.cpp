#include <doctest.h>

#include <cmath>
#include <vector>

#include "agroup/error.hpp"
#include "agroup/finite_field.hpp"

using namespace agroup;

namespace {

// Polynomials over Z_p as coefficient vectors, constant term first.
using Poly = std::vector<std::uint32_t>;

Poly decode(std::uint64_t code, unsigned len, std::uint32_t p) {
  Poly out(len);
  for (auto& c : out) {
    c = static_cast<std::uint32_t>(code % p);
    code /= p;
  }
  return out;
}

Poly multiply(const Poly& f, const Poly& g, std::uint32_t p) {
  Poly out(f.size() + g.size() - 1, 0);
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (std::size_t j = 0; j < g.size(); ++j) out[i + j] = (out[i + j] + f[i] * g[j]) % p;
  }
  return out;
}

// Reducible iff it is the product of two monic polynomials of positive degree.
bool reducible_by_search(const Poly& f, std::uint32_t p) {
  const unsigned n = static_cast<unsigned>(f.size() - 1);
  for (unsigned d = 1; d <= n / 2; ++d) {
    std::uint64_t count_d = 1, count_e = 1;
    for (unsigned i = 0; i < d; ++i) count_d *= p;
    for (unsigned i = 0; i < n - d; ++i) count_e *= p;
    for (std::uint64_t u = 0; u < count_d; ++u) {
      Poly g = decode(u, d, p);
      g.push_back(1);
      for (std::uint64_t v = 0; v < count_e; ++v) {
        Poly h = decode(v, n - d, p);
        h.push_back(1);
        if (multiply(g, h, p) == f) return true;
      }
    }
  }
  return false;
}

// First monic irreducible of degree a in code order, found by exhaustive factor search.
Poly first_irreducible(std::uint32_t p, unsigned a) {
  for (std::uint64_t code = 0;; ++code) {
    Poly f = decode(code, a, p);
    f.push_back(1);
    if (!reducible_by_search(f, p)) return f;
  }
}

Poly modulus_of(const FieldSpec& f) { return {f.modulus().begin(), f.modulus().end()}; }

std::uint64_t brute_order(const FieldSpec& f, const FieldElement& x) {
  std::uint64_t k = 1;
  for (FieldElement y = x; y != f.one(); y = f.mul(y, x)) ++k;
  return k;
}

}  // namespace

TEST_CASE("modulus is the first irreducible in code order") {
  CHECK(modulus_of(make_field(13, 1)) == Poly{0, 1});
  CHECK(modulus_of(make_field(5, 2)) == Poly{2, 0, 1});
  CHECK(modulus_of(make_field(2, 4)) == Poly{1, 1, 0, 0, 1});

  for (auto [p, a] : std::vector<std::pair<std::uint32_t, unsigned>>{
           {2, 1}, {2, 2}, {2, 3}, {2, 4}, {2, 5}, {2, 6}, {3, 2}, {3, 3}, {3, 4},
           {5, 2}, {5, 3}, {7, 2}, {7, 3}, {11, 2}, {13, 2}}) {
    CAPTURE(p);
    CAPTURE(a);
    const FieldSpec f = make_field(p, a);
    CHECK(modulus_of(f) == first_irreducible(p, a));
    CHECK(f.size() == static_cast<std::uint64_t>(std::pow(p, a)));
  }
}

TEST_CASE("Ben-Or test agrees with factor search on every small monic polynomial") {
  for (auto [p, n] : std::vector<std::pair<std::uint32_t, unsigned>>{
           {2, 2}, {2, 3}, {2, 4}, {2, 6}, {3, 2}, {3, 3}, {3, 4}, {5, 2}, {5, 3}, {7, 2}}) {
    std::uint64_t count = 1;
    for (unsigned i = 0; i < n; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      Poly f = decode(code, n, p);
      f.push_back(1);
      CAPTURE(p);
      CAPTURE(code);
      CHECK(is_irreducible(f, p) == !reducible_by_search(f, p));
    }
  }
}

TEST_CASE("field errors") {
  CHECK_THROWS_AS(make_field(4, 1), Error);
  try {
    make_field(9, 2);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonPrime);
  }
  try {
    make_field(2, 30, 1'000'000);
    FAIL("expected SizeCapExceeded");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SizeCapExceeded);
  }
  const FieldSpec f25 = make_field(5, 2);
  try {
    f25.inv(f25.zero());
    FAIL("expected ZeroInverse");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ZeroInverse);
  }
  const FieldSpec f16 = make_field(2, 4);
  try {
    f25.add(f25.one(), f16.one());
    FAIL("expected MixedFields");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::MixedFields);
  }
  try {
    element_of_order(make_field(13, 1), 7);
    FAIL("expected OrderDoesNotDivide");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::OrderDoesNotDivide);
  }
}

TEST_CASE("arithmetic examples") {
  const FieldSpec f25 = make_field(5, 2);
  CHECK(f25.is_zero(f25.add(f25.x(), f25.neg(f25.x()))));
  CHECK(f25.mul(f25.x(), f25.x()) == f25.constant(3));
  const FieldSpec f13 = make_field(13, 1);
  CHECK(f13.pow(f13.constant(2), 12) == f13.one());
  CHECK(f13.pow(f13.constant(2), -1) == f13.constant(7));
}

TEST_CASE("canonical generator and elements of prescribed order") {
  CHECK(canonical_generator(make_field(2, 1)) == make_field(2, 1).one());
  CHECK(canonical_generator(make_field(13, 1)) == make_field(13, 1).constant(2));

  for (auto [p, a] : std::vector<std::pair<std::uint32_t, unsigned>>{
           {2, 2}, {2, 4}, {3, 2}, {5, 2}, {7, 2}, {13, 1}, {2, 6}, {3, 3}}) {
    const FieldSpec f = make_field(p, a);
    const std::uint64_t n = f.size() - 1;
    std::uint64_t first = 0;
    for (std::uint64_t code = 1; code < f.size(); ++code) {
      if (brute_order(f, f.from_code(code)) == n) {
        first = code;
        break;
      }
    }
    CAPTURE(p);
    CAPTURE(a);
    CHECK(f.code(canonical_generator(f)) == first);
    for (std::uint64_t m = 1; m <= n; ++m) {
      if (n % m != 0) continue;
      const FieldElement u = element_of_order(f, m);
      CHECK(brute_order(f, u) == m);
      CHECK(f.multiplicative_order(u) == m);
    }
  }
  const FieldSpec f25 = make_field(5, 2);
  CHECK(element_of_order(f25, 2) == f25.constant(4));
}

TEST_CASE("field axioms on all pairs for fields of at most 625 elements") {
  for (auto [p, a] : std::vector<std::pair<std::uint32_t, unsigned>>{
           {2, 3}, {3, 2}, {2, 4}, {5, 2}, {7, 2}, {3, 3}, {2, 5}, {5, 4}}) {
    const FieldSpec f = make_field(p, a);
    CAPTURE(f.size());
    std::vector<FieldElement> all;
    for (std::uint64_t c = 0; c < f.size(); ++c) all.push_back(f.from_code(c));
    // Associativity against a fixed third element keeps the loop quadratic.
    const FieldElement z = f.from_code(f.size() / 2 + 1);
    std::size_t failures = 0;
    for (const auto& x : all) {
      if (!f.is_zero(x) && f.mul(x, f.inv(x)) != f.one()) ++failures;
      if (!f.is_zero(f.add(x, f.neg(x)))) ++failures;
      for (const auto& y : all) {
        if (f.add(x, y) != f.add(y, x)) ++failures;
        if (f.mul(x, y) != f.mul(y, x)) ++failures;
        if (f.mul(f.mul(x, y), z) != f.mul(x, f.mul(y, z))) ++failures;
        if (f.add(f.add(x, y), z) != f.add(x, f.add(y, z))) ++failures;
        if (f.mul(x, f.add(y, z)) != f.add(f.mul(x, y), f.mul(x, z))) ++failures;
      }
      if (f.code(x) != static_cast<std::uint64_t>(&x - all.data())) ++failures;
    }
    CHECK(failures == 0);
  }
}
