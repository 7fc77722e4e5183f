#include "agroup/finite_field.hpp"

#include <algorithm>
#include <sstream>

#include "agroup/number_theory.hpp"

namespace agroup {
namespace {

using Poly = std::vector<std::uint64_t>;  // constant term first, trimmed

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) { return pow_mod(a, p - 2, p); }

Poly poly_mod(Poly f, const Poly& m, std::uint64_t p) {
  trim(f);
  const std::uint64_t lead_inv = inv_mod(m.back(), p);
  while (f.size() >= m.size()) {
    const std::uint64_t c = f.back() * lead_inv % p;
    const std::size_t shift = f.size() - m.size();
    for (std::size_t i = 0; i < m.size(); ++i) {
      f[shift + i] = (f[shift + i] + p - c * m[i] % p) % p;
    }
    trim(f);
  }
  return f;
}

Poly poly_mulmod(const Poly& f, const Poly& g, const Poly& m, std::uint64_t p) {
  if (f.empty() || g.empty()) return {};
  Poly out(f.size() + g.size() - 1, 0);
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (std::size_t j = 0; j < g.size(); ++j) out[i + j] = (out[i + j] + f[i] * g[j]) % p;
  }
  return poly_mod(std::move(out), m, p);
}

Poly poly_gcd(Poly f, Poly g, std::uint64_t p) {
  trim(f);
  trim(g);
  while (!g.empty()) {
    Poly r = poly_mod(f, g, p);
    f = std::move(g);
    g = std::move(r);
  }
  return f;
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& m, std::uint64_t p) {
  Poly result{1};
  base = poly_mod(std::move(base), m, p);
  while (e > 0) {
    if (e & 1) result = poly_mulmod(result, base, m, p);
    base = poly_mulmod(base, base, m, p);
    e >>= 1;
  }
  return result;
}

}  // namespace

bool is_irreducible(std::span<const std::uint32_t> monic, std::uint32_t p) {
  Poly f(monic.begin(), monic.end());
  trim(f);
  const std::size_t deg = f.size() - 1;
  if (deg == 0) return false;
  if (deg == 1) return true;
  Poly h{0, 1};
  for (std::size_t i = 1; i <= deg / 2; ++i) {
    h = poly_powmod(h, p, f, p);
    Poly diff = h;
    diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
    diff[1] = (diff[1] + p - 1) % p;
    Poly g = poly_gcd(f, diff, p);
    if (g.size() > 1) return false;
  }
  return true;
}

FieldSpec make_field(std::uint64_t p, unsigned a, std::uint64_t size_cap) {
  if (!is_prime(p)) throw Error(ErrorCode::NonPrime, std::to_string(p) + " is not prime");
  if (a == 0) throw Error(ErrorCode::BadParams, "field degree must be positive");
  auto size = checked_pow(p, a, size_cap);
  if (!size) {
    throw Error(ErrorCode::SizeCapExceeded,
                "field of order " + std::to_string(p) + "^" + std::to_string(a) +
                    " exceeds cap " + std::to_string(size_cap));
  }

  FieldSpec f;
  f.p_ = static_cast<std::uint32_t>(p);
  f.a_ = a;
  f.size_ = *size;
  f.modulus_.assign(a + 1, 0);
  f.modulus_[a] = 1;
  for (std::uint64_t code = 0; code < *size; ++code) {
    std::uint64_t c = code;
    for (unsigned i = 0; i < a; ++i) {
      f.modulus_[i] = static_cast<std::uint32_t>(c % p);
      c /= p;
    }
    if (is_irreducible(f.modulus_, f.p_)) return f;
  }
  throw Error(ErrorCode::BadParams, "no irreducible polynomial found");  // unreachable
}

void FieldSpec::check(const FieldElement& x) const {
  if (x.coeffs.size() != a_ ||
      std::any_of(x.coeffs.begin(), x.coeffs.end(), [&](auto c) { return c >= p_; })) {
    throw Error(ErrorCode::MixedFields, "element does not belong to F_" + std::to_string(size_));
  }
}

FieldElement FieldSpec::zero() const { return FieldElement{std::vector<std::uint32_t>(a_, 0)}; }

FieldElement FieldSpec::one() const { return constant(1); }

FieldElement FieldSpec::constant(std::uint64_t c) const {
  FieldElement e = zero();
  e.coeffs[0] = static_cast<std::uint32_t>(c % p_);
  return e;
}

FieldElement FieldSpec::x() const {
  if (a_ == 1) return constant(p_ - modulus_[0]);
  FieldElement e = zero();
  e.coeffs[1] = 1;
  return e;
}

FieldElement FieldSpec::from_code(std::uint64_t code) const {
  if (code >= size_) throw Error(ErrorCode::MixedFields, "code out of range");
  FieldElement e = zero();
  for (unsigned i = 0; i < a_; ++i) {
    e.coeffs[i] = static_cast<std::uint32_t>(code % p_);
    code /= p_;
  }
  return e;
}

std::uint64_t FieldSpec::code(const FieldElement& e) const {
  check(e);
  std::uint64_t code = 0;
  for (unsigned i = a_; i-- > 0;) code = code * p_ + e.coeffs[i];
  return code;
}

FieldElement FieldSpec::add(const FieldElement& x, const FieldElement& y) const {
  check(x);
  check(y);
  FieldElement out = x;
  for (unsigned i = 0; i < a_; ++i) out.coeffs[i] = (x.coeffs[i] + y.coeffs[i]) % p_;
  return out;
}

FieldElement FieldSpec::neg(const FieldElement& x) const {
  check(x);
  FieldElement out = x;
  for (auto& c : out.coeffs) c = (p_ - c) % p_;
  return out;
}

FieldElement FieldSpec::sub(const FieldElement& x, const FieldElement& y) const {
  return add(x, neg(y));
}

FieldElement FieldSpec::mul(const FieldElement& x, const FieldElement& y) const {
  check(x);
  check(y);
  const std::uint64_t p = p_;
  std::vector<std::uint64_t> prod(2 * a_ - 1, 0);
  for (unsigned i = 0; i < a_; ++i) {
    if (x.coeffs[i] == 0) continue;
    for (unsigned j = 0; j < a_; ++j) {
      prod[i + j] = (prod[i + j] + std::uint64_t{x.coeffs[i]} * y.coeffs[j]) % p;
    }
  }
  // modulus is monic: x^a = -(m_0 + ... + m_{a-1} x^{a-1})
  for (std::size_t k = prod.size(); k-- > a_;) {
    const std::uint64_t c = prod[k];
    if (c == 0) continue;
    prod[k] = 0;
    for (unsigned i = 0; i < a_; ++i) {
      prod[k - a_ + i] = (prod[k - a_ + i] + (p - c) * modulus_[i]) % p;
    }
  }
  FieldElement out = zero();
  for (unsigned i = 0; i < a_; ++i) out.coeffs[i] = static_cast<std::uint32_t>(prod[i]);
  return out;
}

FieldElement FieldSpec::pow(const FieldElement& x, std::int64_t e) const {
  check(x);
  FieldElement base = x;
  if (e < 0) {
    base = inv(x);
    e = -e;
  }
  FieldElement result = one();
  auto exp = static_cast<std::uint64_t>(e);
  while (exp > 0) {
    if (exp & 1) result = mul(result, base);
    base = mul(base, base);
    exp >>= 1;
  }
  return result;
}

FieldElement FieldSpec::inv(const FieldElement& x) const {
  check(x);
  if (is_zero(x)) throw Error(ErrorCode::ZeroInverse, "inverse of zero");
  return pow(x, static_cast<std::int64_t>(size_ - 2));
}

bool FieldSpec::is_zero(const FieldElement& x) const {
  check(x);
  return std::all_of(x.coeffs.begin(), x.coeffs.end(), [](auto c) { return c == 0; });
}

std::uint64_t FieldSpec::multiplicative_order(const FieldElement& x) const {
  if (is_zero(x)) throw Error(ErrorCode::ZeroInverse, "zero has no multiplicative order");
  std::uint64_t order = size_ - 1;
  for (auto [ell, e] : factorize(size_ - 1)) {
    for (unsigned i = 0; i < e; ++i) {
      if (pow(x, static_cast<std::int64_t>(order / ell)) == one()) {
        order /= ell;
      } else {
        break;
      }
    }
  }
  return order;
}

std::string FieldSpec::to_string(const FieldElement& x) const {
  check(x);
  std::ostringstream os;
  bool first = true;
  for (unsigned i = a_; i-- > 0;) {
    if (x.coeffs[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0 || x.coeffs[i] != 1) os << x.coeffs[i];
    if (i >= 1) os << "x";
    if (i >= 2) os << "^" << i;
  }
  if (first) os << "0";
  return os.str();
}

std::string FieldSpec::modulus_string() const {
  std::ostringstream os;
  os << "x";
  if (a_ > 1) os << "^" << a_;
  for (unsigned i = a_; i-- > 0;) {
    if (modulus_[i] == 0) continue;
    os << " + ";
    if (i == 0 || modulus_[i] != 1) os << modulus_[i];
    if (i >= 1) os << "x";
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

FieldElement canonical_generator(const FieldSpec& field) {
  const std::uint64_t n = field.size() - 1;
  const auto primes = prime_divisors(n);
  for (std::uint64_t code = 1; code < field.size(); ++code) {
    const FieldElement x = field.from_code(code);
    bool generator = true;
    for (auto ell : primes) {
      if (field.pow(x, static_cast<std::int64_t>(n / ell)) == field.one()) {
        generator = false;
        break;
      }
    }
    if (generator) return x;
  }
  return field.one();
}

FieldElement element_of_order(const FieldSpec& field, std::uint64_t m) {
  const std::uint64_t n = field.size() - 1;
  if (m == 0 || n % m != 0) {
    throw Error(ErrorCode::OrderDoesNotDivide,
                std::to_string(m) + " does not divide " + std::to_string(n));
  }
  return field.pow(canonical_generator(field), static_cast<std::int64_t>(n / m));
}

}  // namespace agroup
