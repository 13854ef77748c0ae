#include "cyclolab/arith.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace cyclo {

namespace {

constexpr u64 kSieveLimit = 1'000'000;

// Read-only after the (thread-safe) static initialization.
const std::vector<u64>& small_primes() {
  static const std::vector<u64> primes = [] {
    std::vector<bool> composite(kSieveLimit + 1, false);
    std::vector<u64> out;
    for (u64 i = 2; i <= kSieveLimit; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (u64 j = i * i; j <= kSieveLimit; j += i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

u64 mulmod(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<unsigned __int128>(a) * b % m);
}

u64 powmod(u64 base, u64 e, u64 m) {
  u64 r = 1 % m;
  base %= m;
  while (e) {
    if (e & 1) r = mulmod(r, base, m);
    base = mulmod(base, base, m);
    e >>= 1;
  }
  return r;
}

bool miller_rabin(u64 n) {
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Witness set known to be deterministic below 2^64.
  for (u64 a : {2ULL, 325ULL, 9375ULL, 28178ULL, 450775ULL, 9780504ULL, 1795265022ULL}) {
    u64 x = a % n;
    if (x == 0) continue;
    x = powmod(x, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

// Pollard-Brent; n is odd, composite, and has no prime factor below the sieve limit.
u64 pollard_brent(u64 n) {
  for (u64 c = 1;; ++c) {
    u64 y = 2, x = 2, g = 1, q = 1, ys = 2;
    auto f = [&](u64 v) { return (mulmod(v, v, n) + c) % n; };
    u64 r = 1;
    constexpr u64 m = 128;
    do {
      x = y;
      for (u64 i = 0; i < r; ++i) y = f(y);
      u64 k = 0;
      do {
        ys = y;
        for (u64 i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          q = mulmod(q, x > y ? x - y : y - x, n);
        }
        g = gcd(q, n);
        k += m;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void split_large(u64 n, std::map<u64, unsigned>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  u64 d = pollard_brent(n);
  split_large(d, out);
  split_large(n / d, out);
}

void require_positive(u64 n, const char* what) {
  if (n == 0) throw std::invalid_argument(std::string(what) + ": argument must be positive");
}

}  // namespace

u64 gcd(u64 a, u64 b) {
  while (b) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  if (n < 41 * 41) return true;
  return miller_rabin(n);
}

Factorization factorize(u64 n) {
  require_positive(n, "factorize");
  Factorization f;
  f.n = n;
  u64 rest = n;
  for (u64 p : small_primes()) {
    if (p * p > rest) break;
    if (rest % p) continue;
    unsigned e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    f.factors.push_back({p, e});
  }
  if (rest > 1) {
    const u64 sieve_sq = kSieveLimit * kSieveLimit;
    if (rest < sieve_sq || is_prime(rest)) {
      f.factors.push_back({rest, 1});
    } else {
      std::map<u64, unsigned> large;
      split_large(rest, large);
      for (auto [p, e] : large) f.factors.push_back({p, e});
    }
  }
  return f;
}

u64 Factorization::rad() const {
  u64 r = 1;
  for (const auto& pe : factors) r *= pe.prime;
  return r;
}

bool Factorization::squarefree() const {
  return std::all_of(factors.begin(), factors.end(), [](const PrimePower& pe) { return pe.exponent == 1; });
}

std::vector<u64> Factorization::primes() const {
  std::vector<u64> out;
  out.reserve(factors.size());
  for (const auto& pe : factors) out.push_back(pe.prime);
  return out;
}

ArithProfile profile(u64 n) {
  require_positive(n, "profile");
  Factorization f = factorize(n);
  ArithProfile pr;
  pr.n = n;
  pr.omega = f.omega();
  pr.rad = f.rad();
  pr.qpart = n / pr.rad;
  pr.mu_rad = (pr.omega % 2 == 0) ? 1 : -1;
  u64 phi = 1;
  for (const auto& pe : f.factors) {
    phi *= pe.prime - 1;
    for (unsigned i = 1; i < pe.exponent; ++i) phi *= pe.prime;
  }
  pr.phi = phi;
  return pr;
}

u64 totient(u64 n) { return profile(n).phi; }

int moebius(u64 n) {
  require_positive(n, "moebius");
  Factorization f = factorize(n);
  if (!f.squarefree()) return 0;
  return (f.omega() % 2 == 0) ? 1 : -1;
}

std::vector<u64> divisors(const Factorization& f) {
  std::vector<u64> out{1};
  for (const auto& pe : f.factors) {
    std::size_t base = out.size();
    u64 pk = 1;
    for (unsigned e = 1; e <= pe.exponent; ++e) {
      pk *= pe.prime;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<u64> divisors(u64 n) {
  require_positive(n, "divisors");
  return divisors(factorize(n));
}

std::vector<u64> inverse_phi(u64 k) {
  require_positive(k, "inverse_phi");
  // Candidate primes p with (p - 1) | k, ascending.
  std::vector<u64> candidates;
  for (u64 d : divisors(k))
    if (is_prime(d + 1)) candidates.push_back(d + 1);

  std::vector<u64> out;
  // Builds n from prime powers with strictly increasing primes; `rest` is the
  // totient value still to be produced.
  auto rec = [&](auto&& self, u64 rest, std::size_t from, u64 n) -> void {
    if (rest == 1) out.push_back(n);
    for (std::size_t i = from; i < candidates.size(); ++i) {
      u64 p = candidates[i];
      if (p - 1 > rest) break;
      if (rest % (p - 1)) continue;
      u64 r = rest / (p - 1);
      u64 pk = p;
      while (true) {
        self(self, r, i + 1, n * pk);
        if (r % p) break;
        r /= p;
        pk *= p;
      }
    }
  };
  rec(rec, k, 0, 1);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<PrimePowerWitness> phi_prime_power_primes(u64 limit) {
  std::map<u64, PrimePowerWitness> found;
  for (u64 q = 2; q <= limit; ++q) {
    if ((q - 1) * q + 1 > limit) break;
    if (!is_prime(q)) continue;
    u64 value = (q - 1) * q;  // phi(q^2)
    for (unsigned j = 2; value + 1 <= limit; ++j) {
      u64 p = value + 1;
      if (is_prime(p) && !found.count(p)) found[p] = {p, q, j};
      if (value > limit / q) break;
      value *= q;
    }
  }
  std::vector<PrimePowerWitness> out;
  for (auto& [p, w] : found) out.push_back(w);
  return out;
}

std::vector<u64> first_primes(std::size_t count) {
  const auto& sp = small_primes();
  if (count > sp.size()) throw std::invalid_argument("first_primes: count too large");
  return {sp.begin(), sp.begin() + static_cast<std::ptrdiff_t>(count)};
}

}  // namespace cyclo
