#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "agroup/error.hpp"

namespace agroup {

/// Element of F_{p^a}: polynomial residue of degree < a, constant term first.
struct FieldElement {
  std::vector<std::uint32_t> coeffs;

  friend bool operator==(const FieldElement&, const FieldElement&) = default;
  friend auto operator<=>(const FieldElement&, const FieldElement&) = default;
};

/// The field F_{p^a} realised as Z_p[x] / (modulus).
///
/// Elements have a canonical integer code: the coefficient tuple read as a
/// base-p number with the constant term least significant. All "first
/// element" choices in this module scan codes in ascending order.
class FieldSpec {
 public:
  static constexpr std::uint64_t kDefaultSizeCap = 1'000'000;

  std::uint32_t characteristic() const { return p_; }
  unsigned degree() const { return a_; }
  std::uint64_t size() const { return size_; }
  /// Monic modulus, constant term first, length degree() + 1.
  std::span<const std::uint32_t> modulus() const { return modulus_; }

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement constant(std::uint64_t c) const;
  /// The residue class of x (equals constant(0) only when degree() == 1 and modulus = x).
  FieldElement x() const;

  FieldElement from_code(std::uint64_t code) const;
  std::uint64_t code(const FieldElement& e) const;

  FieldElement add(const FieldElement& x, const FieldElement& y) const;
  FieldElement sub(const FieldElement& x, const FieldElement& y) const;
  FieldElement neg(const FieldElement& x) const;
  FieldElement mul(const FieldElement& x, const FieldElement& y) const;
  FieldElement inv(const FieldElement& x) const;
  /// Square-and-multiply; negative exponents invert first.
  FieldElement pow(const FieldElement& x, std::int64_t e) const;

  bool is_zero(const FieldElement& x) const;
  std::uint64_t multiplicative_order(const FieldElement& x) const;

  std::string to_string(const FieldElement& x) const;
  std::string modulus_string() const;

  friend bool operator==(const FieldSpec& l, const FieldSpec& r) {
    return l.p_ == r.p_ && l.modulus_ == r.modulus_;
  }

 private:
  friend FieldSpec make_field(std::uint64_t, unsigned, std::uint64_t);
  void check(const FieldElement& x) const;

  std::uint32_t p_ = 2;
  unsigned a_ = 1;
  std::uint64_t size_ = 2;
  std::vector<std::uint32_t> modulus_;
};

/// F_{p^a} with the first irreducible monic modulus in code order.
FieldSpec make_field(std::uint64_t p, unsigned a,
                     std::uint64_t size_cap = FieldSpec::kDefaultSizeCap);

/// Irreducibility of a monic polynomial over Z_p (Ben-Or gcd test).
bool is_irreducible(std::span<const std::uint32_t> monic, std::uint32_t p);

/// First element (in code order) of multiplicative order p^a - 1.
FieldElement canonical_generator(const FieldSpec& field);

/// canonical_generator^((p^a - 1) / m), of exact multiplicative order m.
FieldElement element_of_order(const FieldSpec& field, std::uint64_t m);

}  // namespace agroup
