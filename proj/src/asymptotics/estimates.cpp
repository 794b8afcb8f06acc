#include "ranklab/asymptotics/estimates.hpp"

#include "ranklab/errors.hpp"

namespace ranklab::asymptotics {

using boost::multiprecision::exp;
using boost::multiprecision::pow;
using boost::multiprecision::sqrt;

TauberianTriple::TauberianTriple(Real a, Real l, Real al) : A(std::move(a)), lambda(std::move(l)), alpha(std::move(al)) {
  if (!(A > 0)) throw DomainError("TauberianTriple: A must be positive");
}

TauberianTriple partition_triple() {
  const Real pi = numeric::pi();
  return {pi * pi / 6, 1 / sqrt(2 * pi), Real(1) / 2};
}

Real hardy_ramanujan_estimate(int n) {
  if (n < 1) throw DomainError("hardy_ramanujan_estimate: n must be >= 1");
  const Real nn(n);
  return exp(2 * numeric::pi() * sqrt(nn / 6)) / (4 * sqrt(Real(3)) * nn);
}

Real ingham_estimate(const TauberianTriple& t, int n) {
  if (n < 1) throw DomainError("ingham_estimate: n must be >= 1");
  const Real nn(n);
  const Real e1 = t.alpha / 2 + Real(1) / 4;
  const Real e2 = t.alpha / 2 + Real(3) / 4;
  return t.lambda / (2 * sqrt(numeric::pi())) * pow(t.A, e1) / pow(nn, e2) * exp(2 * sqrt(t.A * nn));
}

Real rank_mod_asymptotic(int r, int t, int n) {
  (void)r;
  if (t < 1) throw DomainError("rank_mod_asymptotic: t must be >= 1");
  return hardy_ramanujan_estimate(n) / t;
}

}  // namespace ranklab::asymptotics
