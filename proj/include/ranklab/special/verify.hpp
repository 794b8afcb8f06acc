#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ranklab/special/precision.hpp"

namespace ranklab::special {

struct LawResult {
  std::string law;
  int samples = 0;
  int rejected = 0;          // draws discarded for sitting near a pole or a theta zero
  double max_residual = 0;   // max |lhs - rhs| (for the bound: max(|h| - bound, 0), gated at quad_tol)
  double tol = 0;
  std::string witness;       // parameters of the worst sample
  bool passed() const noexcept { return samples > 0 && max_residual < tol; }
};

struct SuiteReport {
  std::uint64_t seed = 0;
  std::vector<LawResult> laws;
  bool passed() const noexcept;
};

/// Theta (shift, inversion), mu (shift, inversion), h (even, inversion, shift,
/// stability, mu cross-check) and the A_l decomposition for l = 1, 2, 3, each
/// at `samples` seeded points.
SuiteReport verify_transforms(int samples, std::uint64_t seed, double tol, const PrecisionSpec& prec);

/// |h(i beta/(kappa z) + alpha; i/(kappa z))| <= h_bound at `samples` admissible
/// points; every fifth sample sits on beta = -1/2.
SuiteReport verify_h_bound(int samples, std::uint64_t seed, const PrecisionSpec& prec);

/// R(zeta;q) from the exact series (order N) against the Appell form at
/// z in `zs`, tau = i.
SuiteReport verify_rank_appell(const std::vector<std::pair<int, int>>& zs, int order, double tol,
                               const PrecisionSpec& prec);

}  // namespace ranklab::special
