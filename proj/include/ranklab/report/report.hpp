#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "json.hpp"
#include "ranklab/rank/checks.hpp"
#include "ranklab/rank/rank_table.hpp"

namespace ranklab::report {

using Json = nlohmann::ordered_json;

inline constexpr const char* kVersion = "0.1.0";

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json violation_json(const rank::ViolationRecord& v);
Json violations_json(const std::vector<rank::ViolationRecord>& vs);

/// Rows m,n,count for 0 <= n <= max_n and -n <= m <= n.
Json rank_table_rows(const rank::RankTable& table);
/// Rows r,t,n,count.
Json rank_mod_rows(const rank::RankModTable& table);
/// Rows n,p.
Json partition_rows(int max_n);

/// An array of flat objects as CSV: header from the keys, LF line endings,
/// RFC 4180 quoting. Strings are written bare, numbers as JSON renders them.
std::string to_csv(const Json& rows);

/// Writes to `path`, or to `out` when path is empty. IoError on failure.
void emit(const std::string& content, const std::string& path, std::ostream& out);

}  // namespace ranklab::report
