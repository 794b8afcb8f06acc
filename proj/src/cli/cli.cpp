#include "ranklab/cli/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <ostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "ranklab/asymptotics/scans.hpp"
#include "ranklab/errors.hpp"
#include "ranklab/rank/checks.hpp"
#include "ranklab/rank/rank_table.hpp"
#include "ranklab/report/report.hpp"
#include "ranklab/special/verify.hpp"

namespace ranklab::cli {

namespace {

const std::vector<std::string> kTables = {"rank", "mod", "p"};
const std::vector<std::string> kSuites = {"lemmas", "monotonicity", "identities", "transforms", "bound"};
const std::vector<std::string> kScans = {"equidistribution", "a3", "phi", "convexity", "bessenrodt-ono"};

constexpr int kMaxTableN = 2000;

void require(bool ok, const std::string& msg) {
  if (!ok) throw UsageError(msg);
}

template <class T>
void default_to(T& field, const T& unset, const T& value) {
  if (field == unset) field = value;
}

unsigned env_digits() {
  const char* env = std::getenv("RANKLAB_PRECISION");
  if (!env || !*env) return 0;
  char* end = nullptr;
  const long d = std::strtol(env, &end, 10);
  require(*end == '\0' && d >= 16 && d <= 2000, "RANKLAB_PRECISION must be an integer in [16, 2000]");
  return static_cast<unsigned>(d);
}

special::PrecisionSpec precision(unsigned digits) {
  auto p = special::PrecisionSpec::for_digits(digits);
  p.validate();
  return p;
}

Json law_json(const special::LawResult& l) {
  return {{"law", l.law},         {"samples", l.samples},   {"rejected", l.rejected},
          {"max_residual", l.max_residual}, {"tol", l.tol}, {"status", l.passed() ? "pass" : "fail"},
          {"witness", l.witness}};
}

struct Outcome {
  Json report;           // check-specific fields, merged after the header
  Json rows;             // CSV body
  bool passed = true;
};

// --- tables -------------------------------------------------------------------

Outcome cmd_table(const RunConfig& c) {
  Outcome o;
  o.report["check"] = "table_" + c.subcommand;
  if (c.subcommand == "p") {
    o.rows = report::partition_rows(c.max_n);
  } else {
    const auto table = rank::rank_table(c.max_n);
    o.rows = c.subcommand == "rank" ? report::rank_table_rows(table)
                                    : report::rank_mod_rows(rank::rank_mod_table(table, c.t.front()));
  }
  o.report["params"] = {{"max_n", c.max_n}};
  if (c.subcommand == "mod") o.report["params"]["t"] = c.t.front();
  o.report["status"] = "pass";
  o.report["violations"] = Json::array();
  o.report["rows"] = o.rows;
  return o;
}

// --- verification suites ----------------------------------------------------------

struct ItemSink {
  Outcome& o;
  void add(Json item, bool ok, const Json& violations = Json::array()) {
    item["status"] = ok ? "pass" : "fail";
    o.passed = o.passed && ok;
    o.rows.push_back(item);
    for (const auto& v : violations) o.report["violations"].push_back(v);
  }
};

Json pairs_json(const std::vector<std::pair<int, int>>& ps) {
  Json a = Json::array();
  for (const auto& [m, n] : ps) a.push_back({m, n});
  return a;
}

Outcome verify_lemmas(const RunConfig& c) {
  Outcome o;
  o.report = {{"check", "lemmas"}, {"params", {{"max_n", c.max_n}, {"zq_order", c.zq_order}}}};
  o.report["violations"] = Json::array();
  o.rows = Json::array();
  ItemSink sink{o};
  auto verdict = [&](const std::string& name, const rank::Verdict& v, Json extra = Json::object()) {
    extra["item"] = name;
    extra["violations"] = v.violations.size();
    sink.add(extra, v.holds(), report::violations_json(v.violations));
  };
  verdict("postage", rank::verify_lemma_postage(c.max_n), {{"n_max", c.max_n}});
  for (int m = 1; m <= 30; ++m) {
    verdict("nonneg", rank::verify_lemma_nonneg(m, c.max_n), {{"m", m}, {"n_max", c.max_n}});
  }
  verdict("fmk", rank::verify_lemma_fmk(c.zq_order, c.zq_order), {{"n_max", c.zq_order}});
  verdict("fmk_decomposition", rank::verify_fmk_decomposition(c.zq_order, c.zq_order), {{"n_max", c.zq_order}});
  verdict("gap_series_positivity", rank::verify_gap_series_positivity(c.max_n), {{"n_max", c.max_n}});
  return o;
}

Outcome verify_monotonicity(const RunConfig& c) {
  Outcome o;
  o.report = {{"check", "monotonicity"}, {"params", {{"max_n", c.max_n}, {"max_m", c.max_m}, {"t", c.t}}}};
  o.report["violations"] = Json::array();
  o.rows = Json::array();
  ItemSink sink{o};
  const auto table = rank::rank_table(c.max_n);

  const auto weak = rank::check_weak_monotonicity(table, c.max_n, c.max_m);
  auto expected = rank::expected_weak_exceptions(c.max_n, c.max_m);
  std::sort(expected.begin(), expected.end());
  std::set<std::pair<int, int>> found, want(expected.begin(), expected.end());
  for (const auto& v : weak) found.insert({v.first, v.n});
  std::vector<std::pair<int, int>> unexpected, missing;
  std::set_difference(found.begin(), found.end(), want.begin(), want.end(), std::back_inserter(unexpected));
  std::set_difference(want.begin(), want.end(), found.begin(), found.end(), std::back_inserter(missing));
  o.report["exception_set"] = pairs_json({found.begin(), found.end()});
  o.report["expected_exception_set"] = pairs_json(expected);
  o.report["unexpected"] = pairs_json(unexpected);
  o.report["missing"] = pairs_json(missing);
  Json unexpected_records = Json::array();
  for (const auto& v : weak) {
    if (!want.count({v.first, v.n})) unexpected_records.push_back(report::violation_json(v));
  }
  sink.add({{"item", "weak_exceptions"}, {"t", nullptr}, {"violations", unexpected.size() + missing.size()}},
           unexpected.empty() && missing.empty(), unexpected_records);

  const auto strict = rank::check_strict_monotonicity(table, c.max_n);
  sink.add({{"item", "strict"}, {"t", nullptr}, {"violations", strict.size()}}, strict.empty(),
           report::violations_json(strict));
  const auto inc = rank::check_N0_increment(table, c.max_n);
  sink.add({{"item", "N0_increment"}, {"t", nullptr}, {"violations", inc.size()}}, inc.empty(),
           report::violations_json(inc));
  for (int t : c.t) {
    const auto mod = rank::check_rank_mod_monotonicity(table, t, c.max_n);
    Json vs = report::violations_json(mod);
    for (auto& v : vs) v["t"] = t;
    sink.add({{"item", "rank_mod"}, {"t", t}, {"violations", mod.size()}}, mod.empty(), vs);
  }
  return o;
}

Outcome verify_identities(const RunConfig& c) {
  Outcome o;
  o.report = {{"check", "identities"},
              {"params", {{"t", c.t}, {"max_n", c.max_n}, {"tol", c.tol}, {"digits", c.digits}}}};
  o.report["violations"] = Json::array();
  o.rows = Json::array();
  ItemSink sink{o};
  const auto table = rank::rank_table(c.max_n);
  for (int t : c.t) {
    const auto d = rank::verify_generating_identity(table, t, c.max_n, c.tol, c.digits);
    Json item = {{"item", "generating_identity"}, {"t", t},           {"max_residual", d.max_abs_deviation},
                 {"max_imag", d.max_imag},       {"max_form_gap", d.max_form_gap}, {"tol", d.tol},
                 {"witness", "r=" + std::to_string(d.witness_r) + " n=" + std::to_string(d.witness_n)}};
    Json v = Json::array();
    if (!d.passed()) v.push_back({{"kind", "generating_identity"}, {"t", t}, {"witness", {d.witness_r, d.witness_n}},
                                  {"deviation", d.max_abs_deviation}});
    sink.add(item, d.passed(), v);
  }
  const auto appell = special::verify_rank_appell({{1, 6}, {1, 4}, {1, 3}, {1, 2}}, 80, c.tol, precision(c.digits));
  for (const auto& l : appell.laws) {
    Json item = {{"item", l.law}, {"t", nullptr}, {"max_residual", l.max_residual}, {"max_imag", nullptr},
                 {"max_form_gap", nullptr}, {"tol", l.tol}, {"witness", l.witness}};
    Json v = Json::array();
    if (!l.passed()) v.push_back(law_json(l));
    sink.add(item, l.passed(), v);
  }
  return o;
}

Outcome verify_laws(const RunConfig& c) {
  const auto prec = precision(c.digits);
  const auto suite = c.subcommand == "transforms" ? special::verify_transforms(c.samples, c.seed, c.tol, prec)
                                                  : special::verify_h_bound(c.samples, c.seed, prec);
  Outcome o;
  o.report = {{"check", c.subcommand}, {"params", {{"samples", c.samples}, {"digits", c.digits}}}};
  if (c.subcommand == "transforms") o.report["params"]["tol"] = c.tol;
  o.report["seed"] = suite.seed;
  o.report["violations"] = Json::array();
  o.rows = Json::array();
  ItemSink sink{o};
  for (const auto& l : suite.laws) {
    Json v = Json::array();
    if (!l.passed()) v.push_back(law_json(l));
    sink.add(law_json(l), l.passed(), v);
  }
  return o;
}

// --- scans ----------------------------------------------------------------------

Outcome cmd_scan(const RunConfig& c) {
  asymptotics::ScanReport s;
  if (c.subcommand == "equidistribution") {
    const int top = *std::max_element(c.n_list.begin(), c.n_list.end());
    const auto table = rank::rank_table(top);
    // one table serves every t; reports are concatenated in t order
    if (c.t.size() == 1) {
      s = asymptotics::equidistribution_report(table, c.t.front(), c.n_list, c.tol);
    } else {
      s.check = "equidistribution";
      s.status = "pass";
      s.params = {{"t", c.t}};
      for (int t : c.t) {
        auto one = asymptotics::equidistribution_report(table, t, c.n_list, c.tol);
        s.grid = one.grid;
        s.gate = one.gate;
        for (auto row : one.values) {
          row["t"] = t;
          s.values.push_back(row);
        }
        for (const auto& w : one.witnesses) s.witnesses.push_back(w);
        if (!one.passed()) s.status = "fail";
      }
    }
  } else if (c.subcommand == "a3") {
    s = asymptotics::a3_limit_scan(c.u, c.eps, c.digits, c.tol,
                                   c.route == "s1s2" ? asymptotics::A3Route::s1s2 : asymptotics::A3Route::direct);
  } else if (c.subcommand == "phi") {
    s = asymptotics::phi_asymptotic_check(c.eps, c.digits, c.tol);
  } else if (c.subcommand == "convexity") {
    s = asymptotics::convexity_scan(c.r, c.t.front(), c.cap);
  } else {
    s = asymptotics::bessenrodt_ono_check(c.cap, c.min_part, c.min_sum);
  }
  Outcome o;
  o.report = s.to_json();
  o.rows = s.values;
  o.passed = s.passed();
  return o;
}

void add_options(CLI::App* sub, RunConfig& c) {
  sub->add_option("--max-n", c.max_n, "largest n")->check(CLI::NonNegativeNumber);
  sub->add_option("--max-m", c.max_m, "largest m in the monotonicity window")->check(CLI::NonNegativeNumber);
  sub->add_option("--zq-order", c.zq_order, "q-order for two-variable lemma checks")->check(CLI::PositiveNumber);
  sub->add_option("--t", c.t, "modulus, or a comma list")->delimiter(',');
  sub->add_option("--r", c.r, "residue class");
  sub->add_option("--cap", c.cap, "largest a+b")->check(CLI::NonNegativeNumber);
  sub->add_option("--n", c.n_list, "comma list of n")->delimiter(',');
  sub->add_option("--u", c.u, "A3 elliptic variable");
  sub->add_option("--eps", c.eps, "comma list of eps (tau = i eps/2pi)")->delimiter(',');
  sub->add_option("--samples", c.samples, "seeded sample points per law")->check(CLI::PositiveNumber);
  sub->add_option("--seed", c.seed, "64-bit seed");
  sub->add_option("--tol", c.tol, "tolerance or gate");
  sub->add_option("--digits", c.digits, "working precision in decimal digits");
  sub->add_option("--route", c.route, "A3 evaluation route")->check(CLI::IsMember({"direct", "s1s2"}));
  sub->add_option("--min-part", c.min_part, "smallest part of the Bessenrodt-Ono region");
  sub->add_option("--min-sum", c.min_sum, "smallest a+b of the Bessenrodt-Ono region");
  sub->add_option("--format", c.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  sub->add_option("--out", c.out, "output path (default stdout)");
}

}  // namespace

Json RunConfig::to_json() const {
  Json j = {{"command", command}, {"subcommand", subcommand}};
  auto put = [&](const char* k, const auto& v, bool set) {
    if (set) j[k] = v;
  };
  put("max_n", max_n, max_n >= 0);
  put("max_m", max_m, max_m >= 0);
  put("zq_order", zq_order, zq_order >= 0);
  put("t", t, !t.empty());
  put("r", r, subcommand == "convexity");
  put("cap", cap, cap >= 0);
  put("n", n_list, !n_list.empty());
  put("u", u, subcommand == "a3");
  put("eps", eps, !eps.empty());
  put("route", route, subcommand == "a3");
  put("samples", samples, subcommand == "transforms" || subcommand == "bound");
  put("seed", seed, subcommand == "transforms" || subcommand == "bound");
  put("tol", tol, tol >= 0);
  put("digits", digits, digits > 0);
  put("min_part", min_part, subcommand == "bessenrodt-ono");
  put("min_sum", min_sum, subcommand == "bessenrodt-ono");
  j["format"] = format;
  j["out"] = out;
  return j;
}

void resolve(RunConfig& c) {
  if (c.digits == 0) c.digits = env_digits();
  const std::string& s = c.subcommand;
  if (c.command == "table") {
    default_to(c.max_n, -1, s == "p" ? 100 : 50);
    if (s == "mod") require(c.t.size() == 1, "table mod needs exactly one --t");
    default_to(c.format, std::string(), std::string("csv"));
  } else {
    default_to(c.format, std::string(), std::string("json"));
  }
  if (c.command == "verify") {
    if (c.digits == 0) c.digits = 30;
    if (s == "lemmas") {
      default_to(c.max_n, -1, 500);
      default_to(c.zq_order, -1, 25);
    } else if (s == "monotonicity") {
      default_to(c.max_n, -1, 100);
      default_to(c.max_m, -1, 40);
      if (c.t.empty()) {
        for (int t = 2; t <= 10; ++t) c.t.push_back(t);
      }
    } else if (s == "identities") {
      default_to(c.max_n, -1, 60);
      default_to(c.tol, -1.0, 1e-9);
      if (c.t.empty()) {
        for (int t = 2; t <= 7; ++t) c.t.push_back(t);
      }
    } else if (s == "transforms") {
      default_to(c.tol, -1.0, 1e-8);
    }
  } else if (c.command == "scan") {
    if (s == "equidistribution") {
      if (c.t.empty()) c.t = {7};
      if (c.n_list.empty()) c.n_list = {100, 200, 500};
      default_to(c.tol, -1.0, 1e-3);
      for (int n : c.n_list) require(n >= 0 && n <= kMaxTableN, "--n entries must lie in [0, 2000]");
    } else if (s == "a3" || s == "phi") {
      if (c.eps.empty()) c.eps = {1.0, 0.5, 0.25, 0.1};
      default_to(c.tol, -1.0, s == "a3" ? 1e-3 : 0.1);
    } else if (s == "convexity") {
      if (c.t.empty()) c.t = {3};
      default_to(c.cap, -1, 300);
      require(c.t.size() == 1, "scan convexity takes one --t");
      require(c.r >= 0 && c.r < c.t.front(), "--r must satisfy 0 <= r < t");
    } else {
      default_to(c.cap, -1, 200);
    }
  }
  for (int t : c.t) {
    if (t < 1) throw DomainError("--t must be >= 1");
  }
  if (c.max_n > kMaxTableN) throw UsageError("--max-n above 2000 is outside desk scale");
  if (c.cap > kMaxTableN) throw UsageError("--cap above 2000 is outside desk scale");
  if (c.command == "verify" && c.subcommand != "monotonicity" && c.subcommand != "lemmas") precision(c.digits);
  if (c.tol != -1.0) require(c.tol > 0, "--tol must be positive");
}

int dispatch(const RunConfig& c, std::ostream& out) {
  Outcome o;
  if (c.command == "table") {
    o = cmd_table(c);
  } else if (c.command == "verify") {
    if (c.subcommand == "lemmas") o = verify_lemmas(c);
    else if (c.subcommand == "monotonicity") o = verify_monotonicity(c);
    else if (c.subcommand == "identities") o = verify_identities(c);
    else o = verify_laws(c);
    o.report["status"] = o.passed ? "pass" : "fail";
    o.report["items"] = o.rows;
  } else {
    o = cmd_scan(c);
  }

  std::string content;
  if (c.format == "csv") {
    content = report::to_csv(o.rows);
  } else {
    Json doc = {{"version", report::kVersion}, {"config", c.to_json()}};
    for (const auto& item : o.report.items()) doc[item.key()] = item.value();
    content = doc.dump(2) + "\n";
  }
  report::emit(content, c.out, out);
  return o.passed ? kPass : kCheckFailed;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Dyson rank statistics, Appell-Lerch sums and asymptotic checks", "ranklab"};
  app.set_version_flag("--version", report::kVersion);
  app.require_subcommand(1);
  RunConfig c;

  auto* table = app.add_subcommand("table", "exact tables: rank, mod, p");
  table->add_option("kind", c.subcommand)->required()->check(CLI::IsMember(kTables));
  auto* verify = app.add_subcommand("verify", "verification suites");
  verify->add_option("suite", c.subcommand)->required()->check(CLI::IsMember(kSuites));
  auto* scan = app.add_subcommand("scan", "asymptotic scans");
  scan->add_option("kind", c.subcommand)->required()->check(CLI::IsMember(kScans));
  for (auto* sub : {table, verify, scan}) add_options(sub, c);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kUsage;
  }
  c.command = app.get_subcommands().front()->get_name();

  try {
    resolve(c);
    return dispatch(c, out);
  } catch (const report::IoError& e) {
    err << "ranklab: " << e.what() << '\n';
    return kIo;
  } catch (const PrecisionError& e) {
    err << "ranklab: " << e.what() << " (needs about " << e.required_digits() << " digits)\n";
    return kUsage;
  } catch (const TruncationError& e) {
    err << "ranklab: " << e.what() << '\n';
    return kUsage;
  } catch (const NearPoleError& e) {
    err << "ranklab: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "ranklab: " << e.what() << '\n';
    return kUsage;
  } catch (const std::domain_error& e) {
    err << "ranklab: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "ranklab: " << e.what() << '\n';
    return kCheckFailed;
  }
}

}  // namespace ranklab::cli
