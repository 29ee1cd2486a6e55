#include <cmath>
#include <map>
#include <mutex>

#include "poincare/fourier/fourier.hpp"
#include "poincare/hsolver/hclosed.hpp"
#include "poincare/numkit/quadrature.hpp"

namespace poincare::fourier {

namespace {
constexpr double kU = 40;  // split point; beyond it the 1/u series is used analytically or by parts

Estimate h_hat_uncached(double t) {
  const double w = 2 * pi * std::abs(t);
  auto h = [](double u) { return hsolver::h_closed_32(u); };
  const double hmax = w == 0 ? 1.0 : std::min(1.0, 0.25 * 2 * pi / w);
  auto f = [&](double u) { return h(u) * std::cos(w * u); };
  double hi = numkit::gl_panels(f, 0, kU, hmax, 20), lo = numkit::gl_panels(f, 0, kU, hmax, 16);
  double tail;
  if (w == 0) {
    // int_U^inf sum c_k u^{-k} du, c_0..c_2 = 0
    const auto& c = hsolver::detail::h32_w_series_as<double>();
    tail = 0;
    for (size_t k = 3; k < c.size(); ++k) tail += c[k] * std::pow(kU, 1.0 - k) / (k - 1.0);
  } else {
    auto jet = hsolver::h_closed_32(Taylor<double, 8>::var(kU));
    std::vector<double> d(8);
    for (int k = 0; k < 8; ++k) d[k] = jet.deriv(k);
    tail = numkit::ibp_tail_upper(d, w, kU).real();
  }
  // even integrand: twice the half line
  return {2 * (hi + tail), 2 * std::abs(hi - lo) + 1e-14};
}
}  // namespace

Estimate h_hat(double t) {
  static std::mutex mu;
  static std::map<double, Estimate> cache;
  const double key = std::abs(t);
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  Estimate e = h_hat_uncached(key);
  if (e.err > 1e-10) throw AccuracyError("h_hat: tolerance not met", e);
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(key, e);
  return e;
}

}  // namespace poincare::fourier
