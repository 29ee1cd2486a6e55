#include <cmath>

#include "poincare/convolution/convolution.hpp"
#include "poincare/numkit/mp.hpp"
#include "poincare/numkit/special.hpp"

namespace poincare::convolution {

namespace {
template <class T>
T g_t(const T& x) {
  using std::abs;
  using std::log;
  const T L = log(abs(x));
  return 60 * x * L - 60 * L - 60 + 24 / x + 4 / (x * x);
}
}  // namespace

double g_eval(double x) {
  if (x == 0) throw PoleError("g: x = 0");
  return g_t(x);
}

double g_reflection_defect(double x) {
  return g_eval(x) + g_eval(-x) - 8 * (-15 * std::log(std::abs(x)) + 1 / (x * x) - 15);
}

double g2() { return 60 * std::log(2.0) - 47; }

double alpha_tilde(i64 m, i64 n) {
  if (m == 0 || n == 0 || m + n == 0) throw DomainError("alpha_tilde: need m n (m+n) != 0");
  // for |m+n| << |m| the two g values cancel to many digits
  const Real50 X = Real50(m + n);
  const Real50 gg = g_t(2 * Real50(m) / X) + g_t(2 * Real50(n) / X);
  return double(numkit::sigma2(std::llabs(m))) * double(numkit::sigma2(std::llabs(n))) * static_cast<double>(gg);
}

double alpha_tilde_axis(i64 r) {
  const auto& z = numkit::zeta_constants();
  const double rr = double(r);
  return double(numkit::sigma2(std::llabs(r))) * (rr * rr * z.zeta2 + 60 * z.zeta_prime_minus2);
}

namespace {
template <class W>
double weighted_sum(i64 r, i64 M, W&& w) {
  // m and r - m give the same term; summed once each as listed, in a fixed order
  double s = 2 * alpha_tilde_axis(r);
  for (i64 m = -M; m <= M; ++m) {
    if (m == 0 || m == r) continue;
    s += alpha_tilde(m, r - m) * w(m);
  }
  return s;
}
}  // namespace

PartialSums smoothed_partial_sum(i64 r, i64 N) {
  if (r == 0) throw DomainError("smoothed_partial_sum: r = 0");
  if (N < 1 || N > 100000) throw DomainError("smoothed_partial_sum: need 1 <= N <= 1e5");
  auto at = [r](i64 n) {
    // Gaussian cutoff, negligible beyond 8 n
    return weighted_sum(r, 8 * n, [n](i64 m) {
      double t = double(m) / double(n);
      return std::exp(-t * t);
    });
  };
  PartialSums p;
  p.at_N = at(N);
  p.at_2N = at(2 * N);
  p.difference = p.at_2N - p.at_N;
  return p;
}

double raw_partial_sum(i64 r, i64 N) {
  return weighted_sum(r, N, [](i64) { return 1.0; });
}

}  // namespace poincare::convolution
