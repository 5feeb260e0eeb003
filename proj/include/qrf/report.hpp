#ifndef QRF_REPORT_HPP
#define QRF_REPORT_HPP

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace qrf {

struct ReportEntry {
  std::string name;
  std::string anchor;  // which identity this checks, in equation terms
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  bool skipped = false;
  double wall_time_ms = 0.0;
};

struct VerificationReport {
  std::string suite;
  std::vector<ReportEntry> entries;

  ReportEntry& add(const std::string& name, const std::string& anchor,
                   double residual, double tolerance);
  ReportEntry& add_skipped(const std::string& name, const std::string& anchor);
  void merge(const VerificationReport& other);

  bool passed() const;
  nlohmann::ordered_json to_json(bool include_times = true) const;
};

}  // namespace qrf

#endif
