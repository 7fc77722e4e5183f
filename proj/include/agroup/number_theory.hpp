#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace agroup {

bool is_prime(std::uint64_t n);

/// Prime factorization as (prime, exponent) pairs in ascending prime order.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);

std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

/// Primes up to and including `limit`, ascending.
std::vector<std::uint64_t> primes_up_to(std::uint64_t limit);

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);

/// Least k >= 1 with base^k = 1 (mod m); requires gcd(base, m) = 1 and m >= 2.
std::uint64_t multiplicative_order(std::uint64_t base, std::uint64_t m);

/// base^exp, or nullopt when the result would exceed `limit`.
std::optional<std::uint64_t> checked_pow(std::uint64_t base, unsigned exp,
                                         std::uint64_t limit = UINT64_MAX);

/// The largest divisor of n whose prime factors all lie in `primes`.
std::uint64_t pi_part(std::uint64_t n, const std::vector<std::uint64_t>& primes);

}  // namespace agroup
