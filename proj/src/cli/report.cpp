#include "poincare/cli/report.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace poincare::cli {

using nlohmann::json;

namespace {

std::string csv_num(double v) {
  if (!std::isfinite(v)) return "";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string csv_quote(const std::string& s) {
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

void csv_row(std::ostream& os, const CheckRecord& r) {
  os << r.check << ',' << csv_quote(r.inputs.dump()) << ',' << csv_num(r.lhs) << ',' << csv_num(r.rhs) << ','
     << csv_num(r.abs_err) << ',' << csv_num(r.rel_err) << ',' << csv_num(r.tol) << ','
     << (r.pass ? "true" : "false") << '\n';
}

const char* kHeader = "check,inputs,lhs,rhs,abs_err,rel_err,tol,pass";

}  // namespace

void write_records(std::ostream& os, const std::vector<CheckRecord>& recs, Format f) {
  if (f == Format::csv) {
    os << kHeader << '\n';
    for (auto& r : recs) csv_row(os, r);
    return;
  }
  if (recs.size() == 1) {
    os << to_json(recs[0]).dump(2) << '\n';
    return;
  }
  json a = json::array();
  for (auto& r : recs) a.push_back(to_json(r));
  os << a.dump(2) << '\n';
}

bool Report::pass() const {
  for (auto& s : suites)
    if (!s.pass()) return false;
  return true;
}

Report run_report(const RunConfig& cfg, const Constants& k, const std::vector<int>& criteria,
                  bool with_diagnostics, const std::function<void(const Suite&, double)>& progress) {
  std::vector<int> which = criteria;
  if (which.empty())
    for (int c = 1; c <= kCriteria; ++c) which.push_back(c);
  Report r;
  for (int c : which) {
    auto t0 = std::chrono::steady_clock::now();
    r.suites.push_back(acceptance(c, cfg, k));
    if (progress)
      progress(r.suites.back(), std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  }
  if (with_diagnostics) r.diagnostics = diagnostics(cfg, k);
  return r;
}

void write_report(std::ostream& os, const Report& r, const RunConfig& cfg, const Constants& k) {
  if (cfg.format == Format::csv) {
    os << "criterion," << kHeader << '\n';
    for (auto& s : r.suites)
      for (auto& c : s.checks) {
        os << s.criterion << ',';
        csv_row(os, c);
      }
    for (auto& c : r.diagnostics) {
      os << "diagnostic,";
      csv_row(os, c);
    }
    return;
  }
  json suites = json::array();
  int passed = 0;
  for (auto& s : r.suites) {
    json checks = json::array();
    for (auto& c : s.checks) checks.push_back(to_json(c));
    suites.push_back({{"criterion", s.criterion}, {"name", s.name}, {"pass", s.pass()}, {"checks", checks}});
    passed += s.pass();
  }
  json diag = json::array();
  for (auto& c : r.diagnostics) diag.push_back(to_json(c));
  json out = {
      {"config",
       {{"quad_tol", cfg.quad_tol}, {"quad_order", cfg.quad_order}, {"window", cfg.window}, {"seed", cfg.seed}}},
      {"constants",
       {{"scale", k.scale}, {"icoeff_sign", k.icoeff_sign}, {"d7_scalar", k.d7_scalar}, {"c_main", k.c_main},
        {"c_sec", k.c_sec}}},
      {"suites", suites},
      {"diagnostics", diag},
      {"summary", {{"criteria", r.suites.size()}, {"passed", passed}, {"pass", r.pass()}}}};
  os << out.dump(2) << '\n';
}

std::string summary_line(const Suite& s) {
  char buf[256];
  const CheckRecord* w = s.worst();
  std::string detail = "no checks";
  if (w) {
    std::snprintf(buf, sizeof buf, "worst %s abs %.3g rel %.3g tol %.3g", w->check.c_str(), w->abs_err, w->rel_err,
                  w->tol);
    detail = buf;
  }
  std::snprintf(buf, sizeof buf, "%2d %s  %-28s %4zu checks  %s", s.criterion, s.pass() ? "PASS" : "FAIL",
                s.name.c_str(), s.checks.size(), detail.c_str());
  return buf;
}

}  // namespace poincare::cli
