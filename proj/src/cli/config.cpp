#include "poincare/cli/config.hpp"

#include <cstdlib>
#include <stdexcept>

#include "poincare/numkit/parallel.hpp"

namespace poincare::cli {

void RunConfig::validate() const {
  if (!(quad_tol > 0 && quad_tol < 1)) throw std::invalid_argument("quad-tol must lie in (0, 1)");
  if (quad_order != 8 && quad_order != 10 && quad_order != 16 && quad_order != 20 && quad_order != 30)
    throw std::invalid_argument("quad-order must be one of 8, 10, 16, 20, 30");
  if (window < 1 || window > 30) throw std::invalid_argument("window must lie in [1, 30]");
  if (threads < 0) throw std::invalid_argument("threads must be >= 0");
}

int RunConfig::apply_threads() const {
  int n = threads;
  if (n == 0)
    if (const char* env = std::getenv("POINCARE_THREADS")) {
      char* end = nullptr;
      long v = std::strtol(env, &end, 10);
      if (end == env || *end != '\0' || v < 1) throw std::invalid_argument("POINCARE_THREADS must be a positive integer");
      n = static_cast<int>(v);
    }
  if (n > 0) set_threads(n);
  return thread_count();
}

std::string RunConfig::constants_path() const {
  return constants.empty() ? std::string(POINCARE_DATA_DIR) + "/constants.json" : constants;
}

Format parse_format(const std::string& s) {
  if (s == "json") return Format::json;
  if (s == "csv") return Format::csv;
  throw std::invalid_argument("format must be json or csv");
}

}  // namespace poincare::cli
