#pragma once

#include <json.hpp>

#include <cstdio>
#include <string>
#include <vector>

#include "clausum/theorems.hpp"
#include "clausum/version.hpp"

namespace clausum {

inline std::string route_name(PsiRoute r) {
  return r == PsiRoute::murty ? "murty" : "gauss";
}

struct ReportSummary {
  int pass = 0;
  int fail = 0;
  int expected_fail = 0;
};

inline ReportSummary summarize(const std::vector<VerifyReport>& reps) {
  ReportSummary s;
  for (const VerifyReport& r : reps) {
    if (r.verdict == Verdict::pass) ++s.pass;
    else if (r.verdict == Verdict::fail) ++s.fail;
    else ++s.expected_fail;
  }
  return s;
}

// Diffs and error bounds are rendered short: they are magnitudes, not values.
inline constexpr int kDiffDigits = 3;

inline nlohmann::ordered_json verify_report_json(const std::vector<VerifyReport>& reps,
                                                 int digits, PsiRoute route) {
  nlohmann::ordered_json root;
  root["tool"] = kToolName;
  root["version"] = kVersion;
  root["digits"] = digits;
  root["route"] = route_name(route);
  nlohmann::ordered_json records = nlohmann::ordered_json::array();
  for (const VerifyReport& r : reps) {
    nlohmann::ordered_json j;
    j["id"] = r.id;
    j["c"] = r.c.str();
    j["status"] = to_string(r.status);
    j["digits"] = r.digits;
    if (r.eval_error.empty()) {
      j["closed_form"] = r.closed_form;
      j["closed_value"] = r.closed_value.str(r.digits);
      j["series_value"] = r.series_value.str(r.digits);
      j["series_eps"] = r.series_eps.str(kDiffDigits);
      j["rhs_value"] = r.rhs_value.str(r.digits);
      j["diff_closed"] = r.diff_closed.str(kDiffDigits);
      j["diff_series"] = r.diff_series.str(kDiffDigits);
    } else {
      j["error"] = r.eval_error;
    }
    j["verdict"] = to_string(r.verdict);
    records.push_back(std::move(j));
  }
  root["records"] = std::move(records);
  ReportSummary s = summarize(reps);
  root["summary"] = {{"pass", s.pass}, {"fail", s.fail}, {"expected_fail", s.expected_fail}};
  return root;
}

inline std::string verify_report_csv(const std::vector<VerifyReport>& reps) {
  std::string out =
      "id,c,status,digits,closed_value,series_value,series_eps,rhs_value,"
      "diff_closed,diff_series,verdict\n";
  for (const VerifyReport& r : reps) {
    out += r.id + "," + r.c.str() + "," + to_string(r.status) + "," +
           std::to_string(r.digits) + ",";
    if (r.eval_error.empty()) {
      out += r.closed_value.str(r.digits) + "," + r.series_value.str(r.digits) + "," +
             r.series_eps.str(kDiffDigits) + "," + r.rhs_value.str(r.digits) + "," +
             r.diff_closed.str(kDiffDigits) + "," + r.diff_series.str(kDiffDigits) + ",";
    } else {
      out += ",,,,,,";
    }
    out += to_string(r.verdict) + "\n";
  }
  return out;
}

inline std::string verify_report_text(const std::vector<VerifyReport>& reps) {
  char line[256];
  std::string out;
  std::snprintf(line, sizeof line, "%-6s %-7s %-11s %-14s %-12s %-12s %s\n", "id", "c",
                "status", "verdict", "diff_closed", "diff_series", "series_eps");
  out += line;
  for (const VerifyReport& r : reps) {
    if (r.eval_error.empty()) {
      std::snprintf(line, sizeof line, "%-6s %-7s %-11s %-14s %-12s %-12s %s\n",
                    r.id.c_str(), r.c.str().c_str(), to_string(r.status).c_str(),
                    to_string(r.verdict).c_str(), r.diff_closed.str(kDiffDigits).c_str(),
                    r.diff_series.str(kDiffDigits).c_str(),
                    r.series_eps.str(kDiffDigits).c_str());
    } else {
      std::snprintf(line, sizeof line, "%-6s %-7s %-11s %-14s error: %s\n", r.id.c_str(),
                    r.c.str().c_str(), to_string(r.status).c_str(),
                    to_string(r.verdict).c_str(), r.eval_error.c_str());
    }
    out += line;
  }
  ReportSummary s = summarize(reps);
  std::snprintf(line, sizeof line, "%d pass, %d fail, %d expected-fail\n", s.pass, s.fail,
                s.expected_fail);
  out += line;
  return out;
}

}  // namespace clausum
