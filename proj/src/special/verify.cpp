#include "ranklab/special/verify.hpp"

#include <cmath>
#include <functional>
#include <random>
#include <sstream>

#include "ranklab/errors.hpp"
#include "ranklab/special/appell3.hpp"
#include "ranklab/special/functions.hpp"

namespace ranklab::special {

namespace {

constexpr double kAdmissible = 0.05;
constexpr int kMaxDraws = 100000;

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}
  // bit-exact across platforms: top 53 bits of the engine output
  double uniform(double lo, double hi) { return lo + (hi - lo) * static_cast<double>(rng_() >> 11) * 0x1p-53; }
  int integer(int lo, int hi) { return lo + static_cast<int>(rng_() % static_cast<std::uint64_t>(hi - lo + 1)); }
  Complex tau() { return {Real(uniform(-0.4, 0.4)), Real(uniform(0.8, 1.5))}; }
  Complex small() { return {Real(uniform(-0.4, 0.4)), Real(uniform(-0.4, 0.4))}; }

 private:
  std::mt19937_64 rng_;
};

std::string fmt(const Complex& z) {
  std::ostringstream os;
  os.precision(17);
  const auto c = numeric::to_cdouble(z);
  os << "(" << c.real() << "," << c.imag() << ")";
  return os.str();
}

double dist(const Complex& a, const Complex& b) { return numeric::to_double(numeric::abs(a - b)); }

Complex inv(const Complex& z) { return Complex(Real(1)) / z; }

Complex i_pi() { return Complex(Real(0), numeric::pi()); }

// 1/sqrt(-i tau), principal branch
Complex inv_root(const Complex& tau) { return inv(numeric::sqrt(Complex(Real(0), Real(-1)) * tau)); }

bool far_from_poles(const Complex& u, const Complex& tau) {
  for (int n = -3; n <= 3; ++n) {
    if (numeric::abs(Complex(Real(1)) - numeric::e2pi(u + Real(n) * tau)) < kAdmissible) return false;
  }
  return true;
}

bool theta_ok(const Complex& v, const Complex& tau, const PrecisionSpec& prec) {
  return numeric::abs(jacobi_theta(v, tau, prec)) >= kAdmissible;
}

// Runs `draw` until `samples` admissible evaluations were made. `draw` returns
// false to reject; otherwise it sets residual and witness.
LawResult run_law(const std::string& name, int samples, double tol,
                  const std::function<bool(double&, std::string&)>& draw) {
  LawResult r;
  r.law = name;
  r.tol = tol;
  for (int attempts = 0; r.samples < samples; ++attempts) {
    if (attempts > kMaxDraws) throw UsageError(name + ": sampler cannot find admissible points");
    double residual = 0;
    std::string witness;
    bool ok = false;
    try {
      ok = draw(residual, witness);
    } catch (const NearPoleError&) {
      ok = false;
    }
    if (!ok) {
      ++r.rejected;
      continue;
    }
    ++r.samples;
    if (residual > r.max_residual || r.witness.empty()) {
      r.max_residual = std::max(r.max_residual, residual);
      r.witness = witness;
    }
  }
  return r;
}

}  // namespace

bool SuiteReport::passed() const noexcept {
  if (laws.empty()) return false;
  for (const auto& l : laws) {
    if (!l.passed()) return false;
  }
  return true;
}

SuiteReport verify_transforms(int samples, std::uint64_t seed, double tol, const PrecisionSpec& prec) {
  if (samples < 1) throw UsageError("verify_transforms: samples must be >= 1");
  prec.validate();
  numeric::ScopedPrecision guard(prec.digits);
  Sampler s(seed);
  SuiteReport rep;
  rep.seed = seed;
  const Complex one(Real(1));
  const Complex half(Real(1) / 2);

  rep.laws.push_back(run_law("theta_shift", samples, tol, [&](double& res, std::string& w) {
    const Complex z = s.small(), tau = s.tau();
    res = dist(jacobi_theta(z + one, tau, prec), -jacobi_theta(z, tau, prec));
    w = "z=" + fmt(z) + " tau=" + fmt(tau);
    return true;
  }));

  rep.laws.push_back(run_law("theta_inversion", samples, tol, [&](double& res, std::string& w) {
    const Complex z = s.small(), tau = s.tau();
    const Complex rhs = Complex(Real(0), Real(1)) * inv_root(tau) * numeric::exp(-(i_pi() * z * z / tau)) *
                        jacobi_theta(z / tau, -inv(tau), prec);
    res = dist(jacobi_theta(z, tau, prec), rhs);
    w = "z=" + fmt(z) + " tau=" + fmt(tau);
    return true;
  }));

  rep.laws.push_back(run_law("mu_shift", samples, tol, [&](double& res, std::string& w) {
    const Complex u = s.small(), v = s.small(), tau = s.tau();
    if (!far_from_poles(u, tau) || !theta_ok(v, tau, prec)) return false;
    res = dist(zwegers_mu(u + one, v, tau, prec), -zwegers_mu(u, v, tau, prec));
    w = "u=" + fmt(u) + " v=" + fmt(v) + " tau=" + fmt(tau);
    return true;
  }));

  rep.laws.push_back(run_law("mu_inversion", samples, tol, [&](double& res, std::string& w) {
    const Complex u = s.small(), v = s.small(), tau = s.tau();
    const Complex ti = -inv(tau);
    if (!far_from_poles(u, tau) || !theta_ok(v, tau, prec)) return false;
    if (!far_from_poles(u / tau, ti) || !theta_ok(v / tau, ti, prec)) return false;
    const Complex d = u - v;
    const Complex rhs = -(inv_root(tau) * numeric::exp(i_pi() * d * d / tau) * zwegers_mu(u / tau, v / tau, ti, prec)) +
                        mordell_h(d, tau, prec) / Complex(Real(0), Real(2));
    res = dist(zwegers_mu(u, v, tau, prec), rhs);
    w = "u=" + fmt(u) + " v=" + fmt(v) + " tau=" + fmt(tau);
    return true;
  }));

  rep.laws.push_back(run_law("h_even", samples, tol, [&](double& res, std::string& w) {
    const Complex z = s.small(), tau = s.tau();
    res = dist(mordell_h(-z, tau, prec), mordell_h(z, tau, prec));
    w = "z=" + fmt(z) + " tau=" + fmt(tau);
    return true;
  }));

  rep.laws.push_back(run_law("h_inversion", samples, tol, [&](double& res, std::string& w) {
    const Complex z = s.small(), tau = s.tau();
    const Complex rhs = inv_root(tau) * numeric::exp(i_pi() * z * z / tau) * mordell_h(z / tau, -inv(tau), prec);
    res = dist(mordell_h(z, tau, prec), rhs);
    w = "z=" + fmt(z) + " tau=" + fmt(tau);
    return true;
  }));

  rep.laws.push_back(run_law("h_shift", samples, tol, [&](double& res, std::string& w) {
    const Complex z = s.small(), tau = s.tau();
    const Complex lhs =
        mordell_h(z, tau, prec) + numeric::exp(Real(-2) * i_pi() * z - i_pi() * tau) * mordell_h(z + tau, tau, prec);
    const Complex rhs = Real(2) * numeric::exp(-(i_pi() * z) - i_pi() * tau / Real(4));
    res = dist(lhs, rhs);
    w = "z=" + fmt(z) + " tau=" + fmt(tau);
    return true;
  }));

  rep.laws.push_back(run_law("h_stability", samples, prec.quad_tol, [&](double& res, std::string& w) {
    const Complex z = s.small(), tau = s.tau();
    QuadratureSpec wide;
    wide.truncation = 2 * mordell_truncation(z, tau, prec.quad_tol / 4);
    res = dist(mordell_h(z, tau, prec), mordell_h(z, tau, prec, wide));
    w = "z=" + fmt(z) + " tau=" + fmt(tau);
    return true;
  }));

  rep.laws.push_back(run_law("h_mu_cross_check", samples, tol, [&](double& res, std::string& w) {
    const Complex u = s.small(), v = s.small(), tau = s.tau();
    const Complex ti = -inv(tau);
    if (!far_from_poles(u, tau) || !theta_ok(v, tau, prec)) return false;
    if (!far_from_poles(u / tau, ti) || !theta_ok(v / tau, ti, prec)) return false;
    const Complex d = u - v;
    const Complex from_mu =
        Complex(Real(0), Real(2)) * (zwegers_mu(u, v, tau, prec) +
                                     inv_root(tau) * numeric::exp(i_pi() * d * d / tau) * zwegers_mu(u / tau, v / tau, ti, prec));
    res = dist(mordell_h(d, tau, prec), from_mu);
    w = "u=" + fmt(u) + " v=" + fmt(v) + " tau=" + fmt(tau);
    return true;
  }));

  for (int level = 1; level <= 3; ++level) {
    rep.laws.push_back(run_law("appell_decomposition_l" + std::to_string(level), samples, tol,
                               [&](double& res, std::string& w) {
                                 const Complex u = s.small(), v = s.small(), tau = s.tau();
                                 const Complex lt = Real(level) * tau;
                                 if (!far_from_poles(u, tau) || !far_from_poles(Real(level) * u, lt)) return false;
                                 Complex rhs;
                                 for (int k = 0; k < level; ++k) {
                                   const Complex vk = v + Real(k) * tau + Complex(Real(level - 1) / 2);
                                   const Complex th = jacobi_theta(vk, lt, prec);
                                   if (numeric::abs(th) < kAdmissible) return false;
                                   rhs += numeric::e2pi(u * Real(k)) * th * zwegers_mu(Real(level) * u, vk, lt, prec);
                                 }
                                 res = dist(appell_A(level, u, v, tau, prec), rhs);
                                 w = "u=" + fmt(u) + " v=" + fmt(v) + " tau=" + fmt(tau);
                                 return true;
                               }));
  }
  return rep;
}

SuiteReport verify_h_bound(int samples, std::uint64_t seed, const PrecisionSpec& prec) {
  if (samples < 1) throw UsageError("verify_h_bound: samples must be >= 1");
  prec.validate();
  numeric::ScopedPrecision guard(prec.digits);
  Sampler s(seed);
  SuiteReport rep;
  rep.seed = seed;
  int drawn = 0;
  LawResult r = run_law("h_bound", samples, prec.quad_tol, [&](double& res, std::string& w) {
    const Complex wv(Real(s.uniform(0.5, 3.0)), Real(s.uniform(-1.0, 1.0)));
    const int kappa = s.integer(1, 3);
    const double alpha = s.uniform(-0.49, 0.49);
    double beta = s.uniform(-0.5, 0.49);
    if (drawn++ % 5 == 0) beta = -0.5;
    const Complex z = inv(wv);
    const Complex tau = Complex(Real(0), Real(1)) * wv / Real(kappa);
    const Complex arg = Complex(Real(0), Real(beta)) * wv / Real(kappa) + Complex(Real(alpha));
    const Real h = numeric::abs(mordell_h(arg, tau, prec));
    const Real bound = h_bound(kappa, Real(alpha), Real(beta), z);
    res = std::max(0.0, numeric::to_double(h - bound));
    std::ostringstream os;
    os.precision(17);
    os << "kappa=" << kappa << " alpha=" << alpha << " beta=" << beta << " 1/z=" << fmt(wv)
       << " |h|=" << numeric::to_double(h) << " bound=" << numeric::to_double(bound);
    w = os.str();
    return true;
  });
  rep.laws.push_back(std::move(r));
  return rep;
}

SuiteReport verify_rank_appell(const std::vector<std::pair<int, int>>& zs, int order, double tol,
                               const PrecisionSpec& prec) {
  prec.validate();
  numeric::ScopedPrecision guard(prec.digits);
  SuiteReport rep;
  const Complex tau(Real(0), Real(1));
  for (const auto& [j, t] : zs) {
    if (t < 1 || j <= 0 || 2 * j > t) throw UsageError("verify_rank_appell: need 0 < j/t <= 1/2");
    const TruncatedValue series = rank_series_at_root(j, t, tau, order, prec);
    const Complex appell = rank_to_appell(Real(j) / t, tau, prec);
    LawResult r;
    r.law = "rank_appell_z=" + std::to_string(j) + "/" + std::to_string(t);
    r.samples = 1;
    r.tol = tol;
    r.max_residual = dist(series.value, appell);
    std::ostringstream os;
    os.precision(17);
    os << "series=" << fmt(series.value) << " appell=" << fmt(appell)
       << " log10_truncation_bound=" << series.log10_truncation_bound;
    r.witness = os.str();
    rep.laws.push_back(std::move(r));
  }
  return rep;
}

}  // namespace ranklab::special
