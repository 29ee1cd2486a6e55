// acceptance criteria 1..15 at their stated tolerances, one line each
#include <chrono>
#include <iostream>

#include "poincare/cli/checks.hpp"
#include "poincare/cli/constants.hpp"
#include "poincare/cli/report.hpp"

using namespace poincare::cli;

int main(int argc, char** argv) {
  RunConfig cfg;
  if (argc > 1) cfg.constants = argv[1];
  cfg.apply_threads();
  Constants k;
  try {
    k = load_constants(cfg.constants_path());
  } catch (const std::exception& e) {
    std::cerr << e.what() << '\n';
    return 2;
  }
  int failed = 0;
  for (int c = 1; c <= kCriteria; ++c) {
    auto t0 = std::chrono::steady_clock::now();
    Suite s = acceptance(c, cfg, k);
    double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cout << summary_line(s) << "  [" << sec << " s]" << std::endl;
    if (!s.pass()) {
      ++failed;
      for (auto& r : s.checks)
        if (!r.pass) std::cout << "    " << to_json(r).dump() << '\n';
    }
  }
  std::cout << (failed ? "FAILED " : "ALL PASSED ") << kCriteria - failed << "/" << kCriteria << '\n';
  return failed ? 1 : 0;
}
