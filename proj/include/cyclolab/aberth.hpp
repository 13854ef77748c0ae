#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "cyclolab/interval.hpp"
#include "cyclolab/poly.hpp"

namespace cyclo {

/// Approximate roots of p (degree >= 1, p(0) != 0 recommended) by Aberth-Ehrlich iteration
/// in double precision. No accuracy guarantee; used for seeding and hybrid isolation.
std::vector<std::complex<double>> aberth_double(const IntPoly& p, int max_sweeps = 1000);

struct MpComplex {
  Real re;
  Real im;
  explicit MpComplex(mpfr_prec_t prec) : re(prec), im(prec) {}
  MpComplex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
};

/// Polishes `seeds` to all roots of the squarefree polynomial p at `prec` bits. Returns
/// nullopt when the corrections have not dropped below 2^-(prec-8) after `max_sweeps`.
std::optional<std::vector<MpComplex>> aberth_mpfr(const IntPoly& p,
                                                  const std::vector<std::complex<double>>& seeds,
                                                  mpfr_prec_t prec, int max_sweeps = 200);

}  // namespace cyclo
