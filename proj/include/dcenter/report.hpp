#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace dcenter {

struct CheckRecord {
  std::string check_id;
  std::map<std::string, std::string> parameters;
  std::string expected;
  std::string actual;
  bool pass = false;
  double elapsed_ms = 0.0;

  friend bool operator==(const CheckRecord&, const CheckRecord&) = default;
};

struct VerifyReport {
  std::vector<CheckRecord> records;

  std::size_t total() const noexcept { return records.size(); }
  std::size_t failed() const noexcept;
  bool passed() const noexcept { return failed() == 0; }

  friend bool operator==(const VerifyReport&, const VerifyReport&) = default;
};

/// JSON with sorted keys: {"records": [...], "summary": {"failed": f, "total": t}}.
std::string report_to_json(const VerifyReport& report, int indent = 2);

/// Inverse of report_to_json. Throws Error{Domain} on malformed input or a
/// summary that disagrees with the records.
VerifyReport report_from_json(const std::string& text);

/// Aligned plain-text table, one line per record plus a summary line.
std::string report_to_text(const VerifyReport& report);

}  // namespace dcenter
