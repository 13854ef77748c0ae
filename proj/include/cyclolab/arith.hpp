#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace cyclo {

using u64 = std::uint64_t;

struct PrimePower {
  u64 prime = 0;
  unsigned exponent = 0;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Canonical factorization; primes strictly increasing. n = 1 has no factors.
struct Factorization {
  u64 n = 1;
  std::vector<PrimePower> factors;

  u64 rad() const;
  unsigned omega() const { return static_cast<unsigned>(factors.size()); }
  bool squarefree() const;
  /// Distinct primes in increasing order.
  std::vector<u64> primes() const;
};

/// Factorization-derived data of an index n.
struct ArithProfile {
  u64 n = 1;
  u64 phi = 1;
  int mu_rad = 1;  ///< mu(rad(n)) = (-1)^omega
  unsigned omega = 0;
  u64 rad = 1;
  u64 qpart = 1;  ///< q(n) = n / rad(n)
};

// All functions below reject 0 with std::invalid_argument unless noted.

Factorization factorize(u64 n);
ArithProfile profile(u64 n);
u64 totient(u64 n);
int moebius(u64 n);
std::vector<u64> divisors(u64 n);
std::vector<u64> divisors(const Factorization& f);

/// Deterministic for every 64-bit input; 0 and 1 are not prime.
bool is_prime(u64 n);

u64 gcd(u64 a, u64 b);

/// Every n with phi(n) = k, ascending. Empty for nontotients.
std::vector<u64> inverse_phi(u64 k);

struct PrimePowerWitness {
  u64 p = 0;  ///< the prime with p - 1 = phi(q^j)
  u64 q = 0;
  unsigned j = 0;
  friend bool operator==(const PrimePowerWitness&, const PrimePowerWitness&) = default;
};

/// Primes p <= limit with p - 1 = phi(q^j) for a prime q and j >= 2, ascending in p.
/// The witness reported is the one with the smallest q.
std::vector<PrimePowerWitness> phi_prime_power_primes(u64 limit);

/// The first `count` primes.
std::vector<u64> first_primes(std::size_t count);

}  // namespace cyclo
