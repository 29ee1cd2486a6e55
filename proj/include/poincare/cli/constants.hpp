#pragma once
#include <string>

namespace poincare::cli {

// calibration constants, written once by `calibrate`
struct Constants {
  int version = 1;
  double scale = 0;         // per-pair PDE normalization s
  double icoeff_sign = -1;  // phase convention of the I integral
  double d7_scalar = 1;     // quadrature / closed-form ratio
  double c_main = 0, c_sec = 0;  // fitted constant Fourier mode of E_{3/2}
  // calibration points, for the record
  int scale_n1 = 1, scale_n2 = 2;
  double scale_y = 1;
  double quad_y = 0.5;
};

// throws std::runtime_error if the file is missing or malformed
Constants load_constants(const std::string& path);
// refuses to replace an existing file unless force is set
void save_constants(const Constants& c, const std::string& path, bool force);

// runs the oracles (a few quadratures and lattice sums)
Constants calibrate(double quad_tol);

}  // namespace poincare::cli
