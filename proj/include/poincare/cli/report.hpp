#pragma once
#include <functional>
#include <ostream>
#include <vector>

#include "poincare/cli/checks.hpp"

namespace poincare::cli {

// a single record as an object, several as an array; CSV with a header row
void write_records(std::ostream& os, const std::vector<CheckRecord>& recs, Format f);

struct Report {
  std::vector<Suite> suites;
  std::vector<CheckRecord> diagnostics;
  bool pass() const;
};

// runs the selected criteria (all when empty); progress(suite, seconds) after each
Report run_report(const RunConfig& cfg, const Constants& k, const std::vector<int>& criteria,
                  bool with_diagnostics,
                  const std::function<void(const Suite&, double)>& progress = {});

// machine-readable report: no timings, so fixed config and seed give identical bytes
void write_report(std::ostream& os, const Report& r, const RunConfig& cfg, const Constants& k);
// "criterion  PASS/FAIL  name  worst check" lines
std::string summary_line(const Suite& s);

}  // namespace poincare::cli
