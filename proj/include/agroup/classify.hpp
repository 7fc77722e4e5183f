#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "agroup/group.hpp"
#include "agroup/subgroup.hpp"

namespace agroup {

struct SylowInfo {
  std::uint64_t prime;
  std::size_t order;
  bool abelian;
  bool normal;
};

struct StructureReport {
  std::size_t order = 0;
  std::vector<std::pair<std::uint64_t, unsigned>> factorization;
  bool abelian = false;
  bool solvable = false;
  /// Number of strict descents in the derived series.
  std::size_t derived_length = 0;
  bool metabelian = false;
  /// |G|, |G'|, |G''|, ... down to the point of stabilisation.
  std::vector<std::size_t> derived_orders;
  std::vector<SylowInfo> sylows;
};

StructureReport structure_report(const FiniteGroup& g);

/// Every Sylow subgroup abelian (one per prime suffices).
bool is_a_group(const FiniteGroup& g);

/// The normal Hall pi-subgroup, if the pi-elements form one.
std::optional<Subgroup> normal_hall(const FiniteGroup& g, const std::vector<std::uint64_t>& primes);

/// Unordered pairs (N1, N2) of nontrivial proper normal subgroups with G = N1 x N2.
std::vector<std::pair<Subgroup, Subgroup>> direct_factor_pairs(const FiniteGroup& g,
                                                               const Limits& limits = {});

/// Derivation produced by the A'-recogniser.
struct APrimeTrace {
  enum class Rule { Abelian, Semidirect, Direct, None };

  bool result = false;
  Rule rule = Rule::None;
  std::size_t order = 0;
  std::string detail;
  /// Failed attempts, recorded only when result is false.
  std::vector<std::string> attempts;
  std::vector<APrimeTrace> children;
};

std::string to_string(APrimeTrace::Rule rule);

/// Decides membership in the class generated from abelian groups by coprime
/// abelian-kernel semidirect products and direct products.
APrimeTrace is_a_prime_group(const FiniteGroup& g, const Limits& limits = {});

/// One side of the two-prime splitting G = K_p x K_q.
struct PrimeComponent {
  std::uint64_t prime = 0;  // 0 when the order has no second prime
  Subgroup k;
  std::size_t derived_sylow_order = 0;      // the other prime's Sylow of G'
  std::size_t quotient_order = 0;           // |G / that Sylow|
  std::size_t quotient_sylow_order = 0;     // this prime's Sylow of the quotient
  std::size_t quotient_derived_order = 0;   // derived subgroup of the quotient
  std::size_t fixed_point_order = 0;        // invariant complement in the Sylow
};

struct TwoPrimeDecomposition {
  PrimeComponent first;
  PrimeComponent second;
  /// Named certificate checks, all of which held.
  std::vector<std::string> certificate;
};

/// Splits an A-group with at most two prime divisors into normal factors K_p x K_q.
/// Errors: NotAGroup, TooManyPrimes, DecompositionInvariantFailed.
TwoPrimeDecomposition two_prime_decompose(const FiniteGroup& g);

}  // namespace agroup
