#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "ranklab/rank/rank_table.hpp"

namespace ranklab::asymptotics {

using Json = nlohmann::ordered_json;

/// Outcome of a scan. `values` is an array of flat objects (one per grid
/// point) so it can be written as CSV as well as JSON.
struct ScanReport {
  std::string check;
  Json params = Json::object();
  Json grid = Json::object();
  Json values = Json::array();
  Json gate = Json::object();
  std::string status;  // "pass", "fail" or "not-found"
  Json witnesses = Json::array();

  bool passed() const noexcept { return status == "pass"; }
  Json to_json() const;
};

/// max_r |t N(r,t;n)/p(n) - 1| for every n in n_list, from exact rationals.
/// Passes when the last deviation is below `gate` and the deviations weakly
/// decrease along n_list.
ScanReport equidistribution_report(const rank::RankTable& table, int t, const std::vector<int>& n_list,
                                   double gate = 1e-3);
ScanReport equidistribution_report(int t, const std::vector<int>& n_list, double gate = 1e-3);

enum class A3Route { direct, s1s2 };

/// |A_3(u, -tau; tau)| at tau = i eps/2pi along a decreasing eps grid (min 0.05).
/// Passes when the values strictly decrease and the last is below limit_tol.
/// digits = 0 uses 30 digits for eps >= 0.5 and 60 below.
ScanReport a3_limit_scan(double u, const std::vector<double>& eps_list, unsigned digits = 0,
                         double limit_tol = 1e-3, A3Route route = A3Route::direct);

/// 1/phi(i eps/2pi) against eps^{1/2} e^{pi^2/(6 eps)} / sqrt(2 pi). Passes when
/// |ratio - 1| decreases along the grid and ends below `tol`.
ScanReport phi_asymptotic_check(const std::vector<double>& eps_list, unsigned digits = 0, double tol = 0.1);

/// Smallest T with N(r,t;a) N(r,t;b) > N(r,t;a+b) for all T <= a <= b, a+b <= n_cap.
/// Violations with a >= 1 form the frontier; T > n_cap/2 is reported as not-found.
ScanReport convexity_scan(const rank::RankTable& table, int r, int t, int n_cap);
ScanReport convexity_scan(int r, int t, int n_cap);

/// p(a) p(b) > p(a+b) for 1 <= a <= b, a+b <= n_cap. Failures are allowed only
/// outside the region min(a,b) >= min_part, a+b >= min_sum.
ScanReport bessenrodt_ono_check(int n_cap, int min_part = 1, int min_sum = 9);

}  // namespace ranklab::asymptotics
