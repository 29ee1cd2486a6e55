#include "poincare/cli/constants.hpp"

#include <filesystem>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

#include "poincare/eisenstein/eisenstein.hpp"
#include "poincare/fourier/fourier.hpp"
#include "poincare/icoeff/icoeff.hpp"

namespace poincare::cli {

using nlohmann::json;

Constants load_constants(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read constants file " + path + " (run `poincare calibrate`)");
  json j;
  try {
    in >> j;
    Constants c;
    c.version = j.at("version");
    if (c.version != 1) throw std::runtime_error("unsupported constants version");
    c.scale = j.at("scale");
    c.icoeff_sign = j.at("icoeff_sign");
    c.d7_scalar = j.at("d7_scalar");
    c.c_main = j.at("constant_mode").at("c_main");
    c.c_sec = j.at("constant_mode").at("c_sec");
    c.scale_n1 = j.at("calibration").at("scale_pair").at(0);
    c.scale_n2 = j.at("calibration").at("scale_pair").at(1);
    c.scale_y = j.at("calibration").at("scale_y");
    c.quad_y = j.at("calibration").at("quad_y");
    return c;
  } catch (const json::exception& e) {
    throw std::runtime_error("malformed constants file " + path + ": " + e.what());
  }
}

void save_constants(const Constants& c, const std::string& path, bool force) {
  namespace fs = std::filesystem;
  if (fs::exists(path)) {
    if (!force) throw std::runtime_error(path + " exists; constants are read-only once written (use --force)");
    fs::permissions(path, fs::perms::owner_write, fs::perm_options::add);
  }
  json j = {{"version", c.version},
            {"scale", c.scale},
            {"icoeff_sign", c.icoeff_sign},
            {"d7_scalar", c.d7_scalar},
            {"constant_mode", {{"c_main", c.c_main}, {"c_sec", c.c_sec}}},
            {"calibration",
             {{"scale_pair", {c.scale_n1, c.scale_n2}}, {"scale_y", c.scale_y}, {"quad_y", c.quad_y}}}};
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(2) << '\n';
  out.close();
  fs::permissions(path, fs::perms::owner_write | fs::perms::group_write | fs::perms::others_write,
                  fs::perm_options::remove);
}

Constants calibrate(double quad_tol) {
  Constants c;
  c.scale = fourier::calibrate_scale(c.scale_n1, c.scale_n2, c.scale_y);
  const auto cm = eisenstein::calibrate_constant_mode(1, 2, 1000);
  c.c_main = cm.c_main;
  c.c_sec = cm.c_sec;
  // the integrand is even under (r1,r2) -> -(r1,r2), so both phase signs give the same real I;
  // the ratio against the closed forms fixes the scalar, the sign stays at its convention
  const Estimate plus = icoeff::i_quadrature(c.scale_n1, c.scale_n2, c.quad_y, quad_tol);
  const Estimate minus = icoeff::i_quadrature(-c.scale_n1, -c.scale_n2, c.quad_y, quad_tol);
  const double closed = icoeff::i_total(c.scale_n1, c.scale_n2, c.quad_y);
  if (std::abs(plus.value - minus.value) > 10 * quad_tol * std::abs(closed))
    throw std::runtime_error("calibrate: quadrature depends on the phase sign");
  c.icoeff_sign = -1;
  c.d7_scalar = plus.value / closed;
  return c;
}

}  // namespace poincare::cli
