// Runs every acceptance criterion once and prints one PASS/FAIL line each.
// Exit status is 0 only when all criteria pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>

#include "ranklab/asymptotics/estimates.hpp"
#include "ranklab/asymptotics/scans.hpp"
#include "ranklab/rank/checks.hpp"
#include "ranklab/rank/partitions.hpp"
#include "ranklab/rank/rank_table.hpp"
#include "ranklab/special/verify.hpp"

namespace {

using namespace ranklab;
using Clock = std::chrono::steady_clock;
using numeric::Real;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Result {
  bool pass = false;
  std::string detail;
};

int failures = 0;

void criterion(int id, const std::string& name, const std::function<Result()>& body) {
  const auto start = Clock::now();
  Result r;
  try {
    r = body();
  } catch (const std::exception& e) {
    r = {false, std::string("exception: ") + e.what()};
  }
  if (!r.pass) ++failures;
  std::printf("%s  %2d  %-34s %s [%.1fs]\n", r.pass ? "PASS" : "FAIL", id, name.c_str(), r.detail.c_str(),
              seconds_since(start));
  std::fflush(stdout);
}

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(3);
  os << x;
  return os.str();
}

const rank::RankTable& table300() {
  static const rank::RankTable t = rank::rank_table(300);
  return t;
}

}  // namespace

int main() {
  criterion(1, "rank table vs enumeration", [] {
    const auto start = Clock::now();
    const auto table = rank::rank_table(40);
    int bad = 0;
    for (int n = 0; n <= 40; ++n) {
      const auto hist = rank::brute_force_rank_histogram(n);
      for (int m = -n; m <= n; ++m) {
        const auto it = hist.find(m);
        const rank::Integer want = it == hist.end() ? rank::Integer(0) : it->second;
        bad += table.count(m, n) != want;
      }
    }
    const double secs = seconds_since(start);
    return Result{bad == 0 && secs < 60, "n<=40 mismatches=" + std::to_string(bad) + " time=" + fmt(secs) + "s"};
  });

  criterion(2, "weak monotonicity exception set", [] {
    const auto table = rank::rank_table(100);
    std::set<std::pair<int, int>> found, want;
    for (const auto& v : rank::check_weak_monotonicity(table, 100, 40)) found.insert({v.first, v.n});
    for (const auto& p : rank::expected_weak_exceptions(100, 40)) want.insert(p);
    const bool named = found.count({1, 7}) && found.count({0, 8}) && found.count({3, 11});
    return Result{found == want && named, "found=" + std::to_string(found.size()) +
                                              " expected=" + std::to_string(want.size())};
  });

  criterion(3, "strict monotonicity region", [] {
    const auto v = rank::check_strict_monotonicity(table300(), 300);
    return Result{v.empty(), "n<=300 violations=" + std::to_string(v.size())};
  });

  criterion(4, "N(0,n) increment and rank-mod", [] {
    const auto inc = rank::check_N0_increment(table300(), 300, 15);
    std::size_t mod = 0;
    for (int t = 1; t <= 10; ++t) mod += rank::check_rank_mod_monotonicity(table300(), t, 300).size();
    return Result{inc.empty() && mod == 0,
                  "increment violations=" + std::to_string(inc.size()) + " t<=10 violations=" + std::to_string(mod)};
  });

  criterion(5, "lemma suite", [] {
    std::size_t bad = rank::verify_lemma_postage(500).violations.size();
    for (int m = 1; m <= 30; ++m) bad += rank::verify_lemma_nonneg(m, 500).violations.size();
    bad += rank::verify_lemma_fmk(25, 25).violations.size();
    bad += rank::verify_fmk_decomposition(25, 25).violations.size();
    const auto gap = rank::verify_gap_series_positivity(500).violations.size();
    return Result{bad == 0 && gap == 0,
                  "lemma violations=" + std::to_string(bad) + " positivity violations=" + std::to_string(gap)};
  });

  criterion(6, "generating identity t=2..7", [] {
    const auto table = rank::rank_table(60);
    double worst = 0;
    bool ok = true;
    for (int t = 2; t <= 7; ++t) {
      const auto d = rank::verify_generating_identity(table, t, 60, 1e-9, 30);
      worst = std::max(worst, d.max_abs_deviation);
      ok = ok && d.passed();
    }
    return Result{ok, "max deviation=" + fmt(worst) + " tol=1e-9"};
  });

  criterion(7, "transformation laws", [] {
    const auto start = Clock::now();
    const auto prec = special::PrecisionSpec::for_digits(30);
    const auto laws = special::verify_transforms(50, 7, 1e-8, prec);
    const auto bound = special::verify_h_bound(50, 7, prec);
    bool ok = laws.passed() && bound.passed();
    double worst = 0;
    int min_samples = 1 << 30;
    for (const auto* suite : {&laws, &bound}) {
      for (const auto& l : suite->laws) {
        if (l.law != "h_bound") worst = std::max(worst, l.max_residual);
        min_samples = std::min(min_samples, l.samples);
      }
    }
    const double secs = seconds_since(start);
    ok = ok && min_samples >= 50 && secs < 300;
    return Result{ok, std::to_string(laws.laws.size()) + " laws, max residual=" + fmt(worst) +
                          " bound excess=" + fmt(bound.laws.front().max_residual) +
                          " min samples=" + std::to_string(min_samples) + " time=" + fmt(secs) + "s"};
  });

  criterion(8, "rank series vs Appell form", [] {
    const auto rep = special::verify_rank_appell({{1, 6}, {1, 4}, {1, 3}, {1, 2}}, 80, 1e-8,
                                                 special::PrecisionSpec::for_digits(30));
    double worst = 0;
    for (const auto& l : rep.laws) worst = std::max(worst, l.max_residual);
    return Result{rep.passed() && rep.laws.size() == 4, "max residual=" + fmt(worst) + " tol=1e-8"};
  });

  criterion(9, "A3 decay along eps", [] {
    bool ok = true;
    std::string detail;
    for (double u : {0.1, 1.0 / 6, 0.25, 0.5}) {
      const auto rep = asymptotics::a3_limit_scan(u, {1.0, 0.5, 0.25, 0.1});
      ok = ok && rep.passed();
      detail += "u=" + fmt(u) + ":" + fmt(rep.values.back()["abs_a3"].get<double>()) + " ";
    }
    return Result{ok, detail + "(final < 1e-3, decreasing)"};
  });

  criterion(10, "equidistribution", [] {
    const auto start = Clock::now();
    const auto table = rank::rank_table(500);
    const double build = seconds_since(start);
    bool ok = build < 120;
    double worst = 0;
    for (int t : {2, 3, 4, 5, 7}) {
      const auto rep = asymptotics::equidistribution_report(table, t, {100, 200, 500}, 1e-3);
      ok = ok && rep.passed();
      worst = std::max(worst, rep.values.back()["max_deviation"].get<double>());
    }
    return Result{ok, "max deviation at n=500: " + fmt(worst) + " table build=" + fmt(build) + "s"};
  });

  criterion(11, "convexity and Bessenrodt-Ono", [] {
    bool convex = true;
    std::string thresholds;
    for (int t : {2, 3, 5}) {
      for (int r = 0; r < t; ++r) {
        const auto rep = asymptotics::convexity_scan(table300(), r, t, 300);
        convex = convex && rep.passed();
        thresholds += rep.passed() ? std::to_string(rep.params["threshold"].get<int>()) : "none";
        thresholds += t == 5 && r == 4 ? "" : ",";
      }
    }
    const auto bo = asymptotics::bessenrodt_ono_check(300, 1, 9);
    const auto fails = bo.values.front()["failures_in_region"].get<long>();
    return Result{convex && bo.passed(), "thresholds T=" + thresholds + "; p(a)p(b)>p(a+b) with a,b>=1, a+b>=9: " +
                                             std::to_string(fails) + " failures (e.g. a=1, or (2,7): 30=30)"};
  });

  {
    const auto bo = asymptotics::bessenrodt_ono_check(300, 2, 10);
    std::printf("info      Bessenrodt-Ono with a,b>=2, a+b>=10: %s, %ld in-region failures\n", bo.status.c_str(),
                bo.values.front()["failures_in_region"].get<long>());
  }

  criterion(12, "Hardy-Ramanujan and Ingham", [] {
    numeric::ScopedPrecision guard(40);
    const Real hr = asymptotics::hardy_ramanujan_estimate(1000);
    const double ratio = numeric::to_double(numeric::from_mpz(rank::partition_count(1000)) / hr);
    double worst = 0;
    for (int n : {1, 100, 1000}) {
      const Real ing = asymptotics::ingham_estimate(asymptotics::partition_triple(), n);
      const Real growth = boost::multiprecision::exp(numeric::pi() * boost::multiprecision::sqrt(Real(n) * 2 / 3));
      const Real prefactor = ing / growth;
      const Real want = 1 / (4 * Real(n) * boost::multiprecision::sqrt(Real(3)));
      worst = std::max(worst, numeric::to_double(boost::multiprecision::abs(prefactor / want - 1)));
    }
    return Result{std::abs(ratio - 1) < 0.05 && worst < 1e-25,
                  "p(1000)/estimate=" + fmt(ratio) + " prefactor rel. error=" + fmt(worst)};
  });

  std::printf("%d of 12 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
