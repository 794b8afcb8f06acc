#pragma once

#include "ranklab/numeric/mp.hpp"

namespace ranklab::asymptotics {

using numeric::Real;

/// f(e^{-eps}) ~ lambda eps^alpha e^{A/eps}
struct TauberianTriple {
  Real A;
  Real lambda;
  Real alpha;

  TauberianTriple(Real a, Real lambda, Real alpha);  // DomainError unless A > 0
};

/// (pi^2/6, 1/sqrt(2 pi), 1/2): the behaviour of 1/phi at q = e^{-eps}.
TauberianTriple partition_triple();

/// e^{2 pi sqrt(n/6)} / (4 sqrt(3) n)
Real hardy_ramanujan_estimate(int n);

/// lambda / (2 sqrt(pi)) * A^{alpha/2 + 1/4} n^{-(alpha/2 + 3/4)} e^{2 sqrt(A n)}
Real ingham_estimate(const TauberianTriple& t, int n);

/// hardy_ramanujan_estimate(n) / t; the residue r does not enter.
Real rank_mod_asymptotic(int r, int t, int n);

}  // namespace ranklab::asymptotics
