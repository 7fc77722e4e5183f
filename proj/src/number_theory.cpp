#include "agroup/number_theory.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace agroup {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (auto [p, e] : factorize(n)) out.push_back(p);
  return out;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  if (limit < 2) return out;
  std::vector<bool> composite(limit + 1, false);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return out;
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  unsigned __int128 result = 1 % mod;
  unsigned __int128 b = base % mod;
  while (exp > 0) {
    if (exp & 1) result = result * b % mod;
    b = b * b % mod;
    exp >>= 1;
  }
  return static_cast<std::uint64_t>(result);
}

std::uint64_t multiplicative_order(std::uint64_t base, std::uint64_t m) {
  if (m < 2 || std::gcd(base % m, m) != 1) {
    throw std::invalid_argument("multiplicative_order: base must be a unit modulo m >= 2");
  }
  std::uint64_t k = 1;
  std::uint64_t x = base % m;
  while (x != 1) {
    x = static_cast<std::uint64_t>(static_cast<unsigned __int128>(x) * (base % m) % m);
    ++k;
  }
  return k;
}

std::optional<std::uint64_t> checked_pow(std::uint64_t base, unsigned exp, std::uint64_t limit) {
  std::uint64_t result = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (base != 0 && result > limit / base) return std::nullopt;
    result *= base;
  }
  if (result > limit) return std::nullopt;
  return result;
}

std::uint64_t pi_part(std::uint64_t n, const std::vector<std::uint64_t>& primes) {
  std::uint64_t part = 1;
  for (auto [p, e] : factorize(n)) {
    if (std::find(primes.begin(), primes.end(), p) == primes.end()) continue;
    for (unsigned i = 0; i < e; ++i) part *= p;
  }
  return part;
}

}  // namespace agroup
