#include "ranklab/report/report.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "ranklab/rank/partitions.hpp"

namespace ranklab::report {

Json violation_json(const rank::ViolationRecord& v) {
  return {{"kind", v.kind}, {"witness", {v.first, v.n}}, {"lhs", v.lhs.get_str()}, {"rhs", v.rhs.get_str()}};
}

Json violations_json(const std::vector<rank::ViolationRecord>& vs) {
  Json a = Json::array();
  for (const auto& v : vs) a.push_back(violation_json(v));
  return a;
}

Json rank_table_rows(const rank::RankTable& table) {
  Json rows = Json::array();
  for (int n = 0; n <= table.max_n(); ++n) {
    for (int m = -n; m <= n; ++m) rows.push_back({{"m", m}, {"n", n}, {"count", table.count(m, n).get_str()}});
  }
  return rows;
}

Json rank_mod_rows(const rank::RankModTable& table) {
  Json rows = Json::array();
  for (int n = 0; n <= table.max_n(); ++n) {
    for (int r = 0; r < table.modulus(); ++r) {
      rows.push_back({{"r", r}, {"t", table.modulus()}, {"n", n}, {"count", table.count(r, n).get_str()}});
    }
  }
  return rows;
}

Json partition_rows(int max_n) {
  Json rows = Json::array();
  const auto p = rank::partition_counts(max_n);
  for (int n = 0; n <= max_n; ++n) rows.push_back({{"n", n}, {"p", p[static_cast<std::size_t>(n)].get_str()}});
  return rows;
}

namespace {

std::string cell(const Json& v) {
  std::string s;
  if (v.is_string()) {
    s = v.get<std::string>();
  } else if (v.is_null()) {
    return "";
  } else {
    s = v.dump();
  }
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

}  // namespace

std::string to_csv(const Json& rows) {
  std::vector<std::string> header;
  for (const auto& row : rows) {
    for (const auto& item : row.items()) {
      if (std::find(header.begin(), header.end(), item.key()) == header.end()) header.push_back(item.key());
    }
  }
  std::ostringstream os;
  for (std::size_t i = 0; i < header.size(); ++i) os << (i ? "," : "") << header[i];
  os << '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < header.size(); ++i) {
      if (i) os << ',';
      if (row.contains(header[i])) os << cell(row.at(header[i]));
    }
    os << '\n';
  }
  return os.str();
}

void emit(const std::string& content, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << content;
    out.flush();
    if (!out) throw IoError("cannot write to standard output");
    return;
  }
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot open '" + path + "' for writing");
  f << content;
  f.close();
  if (!f) throw IoError("write to '" + path + "' failed");
}

}  // namespace ranklab::report
