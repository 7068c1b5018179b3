#include "dcenter/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "dcenter/error.hpp"

namespace dcenter {

using nlohmann::json;

std::size_t VerifyReport::failed() const noexcept {
  return static_cast<std::size_t>(std::count_if(records.begin(), records.end(), [](const auto& r) { return !r.pass; }));
}

std::string report_to_json(const VerifyReport& report, int indent) {
  json records = json::array();
  for (const auto& r : report.records) {
    records.push_back(json{{"check_id", r.check_id},
                           {"parameters", r.parameters},
                           {"expected", r.expected},
                           {"actual", r.actual},
                           {"pass", r.pass},
                           {"elapsed_ms", r.elapsed_ms}});
  }
  const json doc{{"records", std::move(records)},
                 {"summary", {{"total", report.total()}, {"failed", report.failed()}}}};
  return doc.dump(indent);
}

VerifyReport report_from_json(const std::string& text) {
  VerifyReport report;
  try {
    const json doc = json::parse(text);
    for (const auto& r : doc.at("records")) {
      CheckRecord rec;
      rec.check_id = r.at("check_id").get<std::string>();
      rec.parameters = r.at("parameters").get<std::map<std::string, std::string>>();
      rec.expected = r.at("expected").get<std::string>();
      rec.actual = r.at("actual").get<std::string>();
      rec.pass = r.at("pass").get<bool>();
      rec.elapsed_ms = r.at("elapsed_ms").get<double>();
      report.records.push_back(std::move(rec));
    }
    const auto& summary = doc.at("summary");
    if (summary.at("total").get<std::size_t>() != report.total() ||
        summary.at("failed").get<std::size_t>() != report.failed())
      throw Error(ErrorKind::Domain, "report: summary disagrees with records");
  } catch (const json::exception& e) {
    throw Error(ErrorKind::Domain, std::string("report: malformed JSON: ") + e.what());
  }
  return report;
}

std::string report_to_text(const VerifyReport& report) {
  std::size_t id_width = 8;
  for (const auto& r : report.records) id_width = std::max(id_width, r.check_id.size());
  std::ostringstream out;
  for (const auto& r : report.records) {
    std::string params;
    for (const auto& [k, v] : r.parameters) params += (params.empty() ? "" : " ") + k + "=" + v;
    char ms[32];
    std::snprintf(ms, sizeof ms, "%10.1f ms", r.elapsed_ms);
    out << (r.pass ? "PASS  " : "FAIL  ") << r.check_id << std::string(id_width - r.check_id.size() + 2, ' ') << ms
        << "  " << params << "\n";
    if (!r.pass) out << "      expected: " << r.expected << "\n      actual:   " << r.actual << "\n";
  }
  out << "summary: " << report.total() - report.failed() << "/" << report.total() << " passed\n";
  return out.str();
}

}  // namespace dcenter
