#include "qrf/report.hpp"

namespace qrf {

ReportEntry& VerificationReport::add(const std::string& name,
                                     const std::string& anchor,
                                     double residual, double tolerance) {
  ReportEntry e;
  e.name = name;
  e.anchor = anchor;
  e.residual = residual;
  e.tolerance = tolerance;
  e.pass = residual <= tolerance;
  entries.push_back(e);
  return entries.back();
}

ReportEntry& VerificationReport::add_skipped(const std::string& name,
                                             const std::string& anchor) {
  ReportEntry e;
  e.name = name;
  e.anchor = anchor;
  e.skipped = true;
  e.pass = true;
  entries.push_back(e);
  return entries.back();
}

void VerificationReport::merge(const VerificationReport& other) {
  entries.insert(entries.end(), other.entries.begin(), other.entries.end());
}

bool VerificationReport::passed() const {
  for (const auto& e : entries)
    if (!e.skipped && !e.pass) return false;
  return true;
}

nlohmann::ordered_json VerificationReport::to_json(bool include_times) const {
  nlohmann::ordered_json out;
  out["suite"] = suite;
  out["passed"] = passed();
  out["entries"] = nlohmann::ordered_json::array();
  for (const auto& e : entries) {
    nlohmann::ordered_json je;
    je["name"] = e.name;
    je["anchor"] = e.anchor;
    if (e.skipped) {
      je["status"] = "SKIPPED";
    } else {
      je["status"] = e.pass ? "PASS" : "FAIL";
      je["residual"] = e.residual;
      je["tolerance"] = e.tolerance;
    }
    if (include_times) je["wall_time_ms"] = e.wall_time_ms;
    out["entries"].push_back(je);
  }
  return out;
}

}  // namespace qrf
