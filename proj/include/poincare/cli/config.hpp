#pragma once
#include <cstdint>
#include <string>

namespace poincare::cli {

enum class Format { json, csv };

// everything a run depends on; defaults reproduce the acceptance suite
struct RunConfig {
  double quad_tol = 1e-5;  // target relative accuracy of the 2-D quadrature oracle
  int quad_order = 20;     // Gauss-Legendre order per panel
  int window = 20;         // pair window W for field assembly
  int threads = 0;         // 0: take POINCARE_THREADS or the OpenMP default
  Format format = Format::json;
  std::uint64_t seed = 20240607;
  std::string out;        // empty: stdout
  std::string constants;  // empty: the installed data/constants.json

  // throws std::invalid_argument naming the bad field
  void validate() const;
  // resolves the thread count (flag wins over POINCARE_THREADS) and applies it
  int apply_threads() const;
  std::string constants_path() const;
};

Format parse_format(const std::string& s);

}  // namespace poincare::cli
