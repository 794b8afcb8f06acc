#include "ranklab/asymptotics/scans.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ranklab/errors.hpp"
#include "ranklab/rank/partitions.hpp"
#include "ranklab/special/appell3.hpp"
#include "ranklab/special/functions.hpp"

namespace ranklab::asymptotics {

using numeric::Real;
using rank::Integer;

namespace {

double mpq_to_double(const mpq_class& q) {
  numeric::ScopedPrecision guard(40);
  return numeric::to_double(numeric::from_mpq(q));
}

std::string str(const Integer& z) { return z.get_str(); }

void require_decreasing_eps(const std::vector<double>& eps, const char* who) {
  if (eps.empty()) throw UsageError(std::string(who) + ": empty eps grid");
  for (std::size_t i = 0; i < eps.size(); ++i) {
    if (!(eps[i] >= 0.05)) throw DomainError(std::string(who) + ": eps below the 0.05 floor");
    if (i > 0 && !(eps[i] < eps[i - 1])) throw UsageError(std::string(who) + ": eps grid must be strictly decreasing");
  }
}

}  // namespace

Json ScanReport::to_json() const {
  Json j;
  j["check"] = check;
  j["params"] = params;
  j["grid"] = grid;
  j["values"] = values;
  j["gate"] = gate;
  j["status"] = status;
  j["witnesses"] = witnesses;
  return j;
}

ScanReport equidistribution_report(const rank::RankTable& table, int t, const std::vector<int>& n_list, double gate) {
  if (t < 1) throw DomainError("equidistribution_report: t must be >= 1");
  if (n_list.empty()) throw UsageError("equidistribution_report: empty n list");
  for (std::size_t i = 0; i < n_list.size(); ++i) {
    if (n_list[i] < 1 || n_list[i] > table.max_n()) {
      throw UsageError("equidistribution_report: n = " + std::to_string(n_list[i]) + " outside the table");
    }
    if (i > 0 && n_list[i] <= n_list[i - 1]) throw UsageError("equidistribution_report: n list must increase");
  }
  const rank::RankModTable mod = rank::rank_mod_table(table, t);
  ScanReport rep;
  rep.check = "equidistribution";
  rep.params = {{"t", t}};
  rep.grid = {{"n", n_list}};
  rep.gate = {{"final_below", gate}, {"weakly_decreasing", true}};

  bool decreasing = true;
  double prev = 0;
  for (std::size_t i = 0; i < n_list.size(); ++i) {
    const int n = n_list[i];
    const Integer p = table.total(n);
    mpq_class worst = 0;
    int worst_r = 0;
    Integer signed_sum = 0;
    for (int r = 0; r < t; ++r) {
      const Integer diff = Integer(t) * mod.count(r, n) - p;  // t N - p
      signed_sum += diff;
      mpq_class dev(abs(diff), p);
      dev.canonicalize();
      if (dev > worst) {
        worst = dev;
        worst_r = r;
      }
    }
    const double d = mpq_to_double(worst);
    if (i > 0 && d > prev) decreasing = false;
    prev = d;
    rep.values.push_back({{"n", n},
                          {"max_deviation", d},
                          {"worst_r", worst_r},
                          {"p", str(p)},
                          {"count_worst_r", str(mod.count(worst_r, n))},
                          {"signed_deviation_sum", str(signed_sum)}});
  }
  const bool ok = decreasing && prev < gate;
  rep.status = ok ? "pass" : "fail";
  if (!ok) rep.witnesses.push_back({{"n", n_list.back()}, {"max_deviation", prev}, {"weakly_decreasing", decreasing}});
  return rep;
}

ScanReport equidistribution_report(int t, const std::vector<int>& n_list, double gate) {
  if (n_list.empty()) throw UsageError("equidistribution_report: empty n list");
  return equidistribution_report(rank::rank_table(*std::max_element(n_list.begin(), n_list.end())), t, n_list, gate);
}

ScanReport a3_limit_scan(double u, const std::vector<double>& eps_list, unsigned digits, double limit_tol,
                         A3Route route) {
  if (!(u > 0 && u <= 0.5)) throw DomainError("a3_limit_scan: need 0 < u <= 1/2");
  require_decreasing_eps(eps_list, "a3_limit_scan");
  ScanReport rep;
  rep.check = "a3_limit";
  rep.params = {{"u", u}, {"route", route == A3Route::direct ? "direct" : "s1s2"}, {"digits", digits}};
  rep.grid = {{"eps", eps_list}};
  rep.gate = {{"final_below", limit_tol}, {"strictly_decreasing", true}};

  bool decreasing = true;
  double prev = 0;
  for (std::size_t i = 0; i < eps_list.size(); ++i) {
    const double eps = eps_list[i];
    const special::PrecisionSpec prec =
        digits ? special::PrecisionSpec::for_digits(digits) : special::PrecisionSpec::for_eps(eps);
    numeric::ScopedPrecision guard(prec.digits);
    Json row = {{"eps", eps}, {"digits", prec.digits}};
    double value = 0;
    if (route == A3Route::direct) {
      const auto tau = special::HalfPlanePoint::from_eps(eps).tau();
      value = numeric::to_double(numeric::abs(special::appell_A3_direct(Real(u), tau, prec)));
    } else {
      const special::A3Pieces pieces = special::appell_A3_S1S2(u, eps, prec);
      numeric::ScopedPrecision inner(pieces.digits);
      value = numeric::to_double(numeric::abs(pieces.total()));
      row["digits"] = pieces.digits;
      row["fallback"] = pieces.fallback;
      if (!pieces.fallback) {
        row["abs_s1"] = numeric::to_double(numeric::abs(pieces.s1));
        row["abs_s2"] = numeric::to_double(numeric::abs(pieces.s2));
        row["route_gap"] = numeric::to_double(numeric::abs(pieces.s1 + pieces.s2 - pieces.direct));
        if (u > 1.0 / 6) {
          row["abs_s21"] = numeric::to_double(numeric::abs(pieces.s21));
          row["s21_bound"] = numeric::to_double(pieces.s21_bound);
        }
      }
    }
    row["abs_a3"] = value;
    if (!std::isfinite(value)) throw PrecisionError("a3_limit_scan: non-finite value; raise --digits", prec.digits * 2);
    if (i > 0 && !(value < prev)) decreasing = false;
    prev = value;
    rep.values.push_back(row);
  }
  const bool ok = decreasing && prev < limit_tol;
  rep.status = ok ? "pass" : "fail";
  if (!ok) rep.witnesses.push_back({{"eps", eps_list.back()}, {"abs_a3", prev}, {"strictly_decreasing", decreasing}});
  return rep;
}

ScanReport phi_asymptotic_check(const std::vector<double>& eps_list, unsigned digits, double tol) {
  require_decreasing_eps(eps_list, "phi_asymptotic_check");
  ScanReport rep;
  rep.check = "phi_asymptotic";
  rep.params = {{"digits", digits}};
  rep.grid = {{"eps", eps_list}};
  rep.gate = {{"final_within", tol}, {"monotone_improvement", true}};
  bool improving = true;
  double prev = 0;
  for (std::size_t i = 0; i < eps_list.size(); ++i) {
    const double eps = eps_list[i];
    const special::PrecisionSpec prec =
        digits ? special::PrecisionSpec::for_digits(digits) : special::PrecisionSpec::for_eps(eps);
    numeric::ScopedPrecision guard(prec.digits);
    const Real pi = numeric::pi();
    const Real e(eps);
    const auto tau = special::HalfPlanePoint::from_eps(eps).tau();
    const numeric::Complex inv_phi = numeric::Complex(Real(1)) / special::euler_phi(tau, prec);
    const Real model = boost::multiprecision::sqrt(e / (2 * pi)) * boost::multiprecision::exp(pi * pi / (6 * e));
    const Real ratio = inv_phi.re / model;
    const double gap = std::fabs(numeric::to_double(ratio) - 1);
    if (i > 0 && !(gap < prev)) improving = false;
    prev = gap;
    rep.values.push_back({{"eps", eps},
                          {"digits", prec.digits},
                          {"inv_phi", numeric::to_string(inv_phi.re, 20)},
                          {"model", numeric::to_string(model, 20)},
                          {"ratio", numeric::to_double(ratio)},
                          {"abs_ratio_minus_1", gap}});
  }
  const bool ok = improving && prev < tol;
  rep.status = ok ? "pass" : "fail";
  if (!ok) rep.witnesses.push_back({{"eps", eps_list.back()}, {"abs_ratio_minus_1", prev}, {"monotone", improving}});
  return rep;
}

ScanReport convexity_scan(const rank::RankTable& table, int r, int t, int n_cap) {
  if (t < 1) throw DomainError("convexity_scan: t must be >= 1");
  if (n_cap < 2 || n_cap > table.max_n()) throw UsageError("convexity_scan: cap outside the table");
  const rank::RankModTable mod = rank::rank_mod_table(table, t);
  const int rr = ((r % t) + t) % t;
  ScanReport rep;
  rep.check = "convexity";
  rep.params = {{"r", rr}, {"t", t}, {"cap", n_cap}};
  rep.grid = {{"a_min", 1}, {"b_min", "a"}, {"a_plus_b_max", n_cap}};
  rep.gate = {{"threshold_found", true}};

  int last_bad_a = 0;
  long violations = 0;
  for (int a = 1; 2 * a <= n_cap; ++a) {
    int worst_b = -1, count = 0;
    for (int b = a; a + b <= n_cap; ++b) {
      const Integer lhs = mod.count(rr, a) * mod.count(rr, b);
      const Integer& rhs = mod.count(rr, a + b);
      if (lhs <= rhs) {
        ++count;
        worst_b = b;
      }
    }
    if (count > 0) {
      last_bad_a = a;
      violations += count;
      const Integer lhs = mod.count(rr, a) * mod.count(rr, worst_b);
      rep.witnesses.push_back({{"a", a},
                               {"max_violating_b", worst_b},
                               {"violations", count},
                               {"lhs", str(lhs)},
                               {"rhs", str(mod.count(rr, a + worst_b))}});
    }
  }
  const int threshold = last_bad_a + 1;
  // diagonal ratio profile N(a)^2 / N(2a)
  for (int a = 1; 2 * a <= n_cap; ++a) {
    const Integer& na = mod.count(rr, a);
    const Integer& n2a = mod.count(rr, 2 * a);
    Json row = {{"a", a}, {"b", a}};
    if (n2a == 0) {
      row["ratio"] = nullptr;
    } else {
      mpq_class q(Integer(na * na), n2a);
      q.canonicalize();
      row["ratio"] = mpq_to_double(q);
    }
    rep.values.push_back(row);
  }
  rep.params["violations"] = violations;
  if (2 * threshold > n_cap) {
    rep.status = "not-found";
    rep.params["threshold"] = nullptr;
  } else {
    rep.status = "pass";
    rep.params["threshold"] = threshold;
  }
  return rep;
}

ScanReport convexity_scan(int r, int t, int n_cap) { return convexity_scan(rank::rank_table(n_cap), r, t, n_cap); }

ScanReport bessenrodt_ono_check(int n_cap, int min_part, int min_sum) {
  if (n_cap < 2) throw UsageError("bessenrodt_ono_check: cap must be >= 2");
  const auto p = rank::partition_counts(n_cap);
  ScanReport rep;
  rep.check = "bessenrodt_ono";
  rep.params = {{"cap", n_cap}, {"min_part", min_part}, {"min_sum", min_sum}};
  rep.grid = {{"a_min", 1}, {"b_min", "a"}, {"a_plus_b_max", n_cap}};
  rep.gate = {{"in_region_failures", 0}};
  long in_region = 0, outside = 0;
  for (int a = 1; 2 * a <= n_cap; ++a) {
    for (int b = a; a + b <= n_cap; ++b) {
      const Integer lhs = p[static_cast<std::size_t>(a)] * p[static_cast<std::size_t>(b)];
      const Integer& rhs = p[static_cast<std::size_t>(a + b)];
      if (lhs > rhs) continue;
      const bool inside = a >= min_part && a + b >= min_sum;
      (inside ? in_region : outside) += 1;
      rep.witnesses.push_back({{"a", a}, {"b", b}, {"lhs", str(lhs)}, {"rhs", str(rhs)}, {"in_region", inside}});
    }
  }
  rep.values.push_back({{"failures_in_region", in_region}, {"failures_outside", outside}});
  rep.status = in_region == 0 ? "pass" : "fail";
  return rep;
}

}  // namespace ranklab::asymptotics
