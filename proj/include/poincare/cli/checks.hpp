#pragma once
#include <string>
#include <vector>

#include <json.hpp>

#include "poincare/cli/config.hpp"
#include "poincare/cli/constants.hpp"

namespace poincare::cli {

// one row of output: {check, inputs, lhs, rhs, abs_err, rel_err, tol, pass}
struct CheckRecord {
  std::string check;
  nlohmann::json inputs = nlohmann::json::object();
  double lhs = 0, rhs = 0, abs_err = 0, rel_err = 0, tol = 0;
  bool pass = false;
};

enum class Measure { absolute, relative };

// abs_err = |lhs - rhs|, rel_err = abs_err / |rhs| (abs_err when rhs = 0); pass on the chosen one
CheckRecord compare(std::string check, nlohmann::json inputs, double lhs, double rhs, double tol,
                    Measure m);
// a residual that should vanish: lhs = residual, rhs = 0, rel_err supplied by the caller
CheckRecord residual(std::string check, nlohmann::json inputs, double res, double rel, double tol,
                     Measure m);
// the record for a failed evaluation (exception); never passes
CheckRecord failure(std::string check, nlohmann::json inputs, double tol, const std::string& what);

nlohmann::json to_json(const CheckRecord& r);

struct Suite {
  int criterion = 0;
  std::string name;
  std::vector<CheckRecord> checks;
  bool pass() const;
  // the record with the largest error ratio (for the one-line summary)
  const CheckRecord* worst() const;
};

// acceptance criteria 1..15
Suite acceptance(int criterion, const RunConfig& cfg, const Constants& k);
inline constexpr int kCriteria = 15;
const char* criterion_name(int criterion);

// measurements kept next to the suite but not asserted
std::vector<CheckRecord> diagnostics(const RunConfig& cfg, const Constants& k);

// single queries behind the subcommands
std::vector<CheckRecord> eval_h(double u);
std::vector<CheckRecord> eval_eisenstein(double x, double y, int cutoff, int modes);
std::vector<CheckRecord> icoeff_query(int n1, int n2, double y, bool quad, const RunConfig& cfg,
                                      const Constants& k);
std::vector<CheckRecord> pde_check(int n1, int n2, double y, const Constants& k);
std::vector<CheckRecord> assemble_query(double x, double y, const RunConfig& cfg, const Constants& k);
std::vector<CheckRecord> vanishing(long r);
std::vector<CheckRecord> ldr_query(long d, long r);
std::vector<CheckRecord> lemma_check(long d, double s, const std::string& variant, int k, long N);

}  // namespace poincare::cli
