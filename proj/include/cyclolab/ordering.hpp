#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "cyclolab/poly.hpp"

namespace cyclo {

enum class Order { Less, Greater };

struct OrderKey {
  u64 n = 0;
  u64 phi = 0;
  IntPoly coeffs;  ///< Phi_n
};
OrderKey order_key(u64 n);

/// m < n in the ordering by values at any x > 2: first by phi, then by the sign of the
/// highest-index nonzero coefficient of Phi_m - Phi_n. Rejects m == n.
Order compare_large(u64 m, u64 n);
/// m <' n in the ordering by values on (0, 1/2]: the lowest-index differing coefficient decides.
Order compare_small(u64 m, u64 n);

/// Highest-index rule on two distinct polynomials; -1 when a sorts first.
int compare_large(const IntPoly& a, const IntPoly& b);
/// Lowest-index rule; -1 when a sorts first.
int compare_small(const IntPoly& a, const IntPoly& b);

/// Every n with phi(n) = k, in increasing order under compare_large.
std::vector<u64> phi_class_sorted(u64 k);
/// Every n with phi(n) <= K in increasing order under compare_large; classes are sorted on
/// `jobs` workers and concatenated in k order.
std::vector<u64> ordered_prefix(u64 K, unsigned jobs = 1);

/// phi(n) - i for the largest i < phi(n) with a nonzero coefficient of x^i in Phi_n.
u64 gap(u64 n);

struct ConsecutiveCertificate {
  u64 first = 0;   ///< the smaller of the pair
  u64 second = 0;
  bool consecutive = false;
  std::vector<std::pair<u64, std::vector<u64>>> classes;  ///< (k, sorted class) for each k examined
  std::vector<u64> between;  ///< integers strictly between first and second
};

/// Decides adjacency by sorting every phi-class from phi(first) to phi(second).
ConsecutiveCertificate certify_consecutive(u64 m, u64 n);

struct Mod4Report {
  u64 p = 0;
  bool consecutive = false;
  std::optional<PrimePowerWitness> witness;  ///< phi(q^j) = p - 1 with j >= 2, smallest q
};

/// For a prime p = 3 (mod 4): 2p and p are adjacent unless p - 1 = phi(q^j), j >= 2.
/// The answer is confirmed with certify_consecutive; std::logic_error on disagreement.
Mod4Report check_3mod4_criterion(u64 p);

}  // namespace cyclo
