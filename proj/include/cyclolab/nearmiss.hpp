#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cyclolab/interval.hpp"
#include "cyclolab/poly.hpp"

namespace cyclo {

/// x^k - x^(k-1) - ... - x - 1.
IntPoly psi(u64 k);

/// Largest real root of psi(k), k >= 2: one Newton step from 2 (psi_k(2) = 1,
/// psi_k'(2) = 2^k - 1), a certified bracket, then exact bisection.
BigFloatValue alpha_root(u64 k, int digits);

/// Primes q in (p, q_max] with r = pq - p - q prime, as (q, r) ascending in q.
std::vector<std::pair<u64, u64>> find_triples(u64 p, u64 q_max);

struct DeltaDecomposition {
  u64 p = 0, q = 0, r = 0;
  IntPoly main;   ///< psi_{p-1}(x) x^(phi(pq) - (p - 1))
  IntPoly delta;  ///< Phi_pq - Phi_r - main
};

/// Throws std::invalid_argument unless p < q and p, q, r are prime; std::logic_error if the
/// degree or coefficient bounds on delta fail.
DeltaDecomposition delta_decompose(u64 p, u64 q);

/// Largest real root of Phi_pq - Phi_r.
BigFloatValue near_miss_root(u64 p, u64 q, int digits);

/// Index of psi whose largest root sits next to the near-miss roots for a given p.
inline u64 reference_index(u64 p) { return p + 1; }

struct PerturbationEstimate {
  u64 p = 0, q = 0, r = 0;
  BigFloatValue alpha;     ///< largest root of psi_{p+1}
  BigFloatValue estimate;  ///< alpha - delta(alpha) / main'(alpha), with main built on psi_{p+1}
  BigFloatValue alpha_low;     ///< largest root of psi_{p-1}
  BigFloatValue estimate_low;  ///< the same first-order step built on psi_{p-1}
  BigFloatValue crude;         ///< alpha - 2^-q
  BigFloatValue beta;          ///< the actual root
  BigFloatValue true_gap;      ///< alpha - beta
  BigFloatValue estimated_gap; ///< alpha - estimate
};

/// First-order root perturbation: with main_k = psi_k(x) x^(phi(pq) - k) and
/// delta_k = Phi_pq - Phi_r - main_k, estimate = alpha_k - delta_k(alpha_k) / main_k'(alpha_k).
PerturbationEstimate perturbation_estimate(u64 p, u64 q, int digits);

struct TripleRecord {
  u64 p = 0, q = 0, r = 0;
  BigFloatValue beta;
  BigFloatValue alpha;       ///< largest root of psi_{p+1}
  BigFloatValue alpha_low;   ///< largest root of psi_{p-1}
  BigFloatValue inv_gap;     ///< 1 / (alpha - beta)
  BigFloatValue scaled_gap;  ///< 1 / (2^q (alpha - beta))
  int digits = 15;
};

/// The ten (p, q) rows of the near-miss error table.
const std::vector<std::pair<u64, u64>>& table1_rows();

/// One record per row, computed on `jobs` workers, in input order. Every column fixes
/// `digits` significant digits.
std::vector<TripleRecord> table1(const std::vector<std::pair<u64, u64>>& rows, int digits, unsigned jobs = 1);

enum class LimitFamily { ThreeP, SixP, ThirtyP, Primorial };

/// The real root of the family member nearest its limit:
///   ThreeP(p):    Phi_3p - Phi_4 near rho
///   SixP(p):      Phi_6p - Phi_4 near -rho
///   ThirtyP(p):   Phi_30p - Phi_4p near sigma; p = 1 gives Phi_30 - Phi_4
///   Primorial(k): Phi_m - Phi_{2m/15}, m the product of the first k >= 3 primes, near 0.52
BigFloatValue limit_family_root(LimitFamily family, u64 param, int digits);

/// (m, n) of the difference used by limit_family_root.
std::pair<u64, u64> limit_family_indices(LimitFamily family, u64 param);

struct LimitConstants {
  BigFloatValue rho;    ///< real root of x^3 + x^2 + 2x + 1
  BigFloatValue sigma;  ///< root of Phi_30 - Phi_4 in (0, 1)
};
LimitConstants limit_constants(int digits);

}  // namespace cyclo
