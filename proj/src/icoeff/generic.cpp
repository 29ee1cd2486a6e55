#include <boost/math/special_functions/bessel.hpp>
#include <boost/math/special_functions/beta.hpp>
#include <map>
#include <mutex>

#include "poincare/icoeff/icoeff.hpp"
#include "poincare/symcore/split.hpp"

namespace poincare::icoeff {

namespace {
using R = Real50;

// sum_j xi^j (k0[j] K0(c xi) + k1[j] K1(c xi)), c = 2 pi, xi > 0
struct KForm {
  std::map<int, std::pair<R, R>> t;
  KForm derivative() const {
    const R c = 2 * pi_as<R>();
    KForm d;
    for (auto& [j, kk] : t) {
      auto& [a, b] = kk;
      // d[xi^j K0] = j xi^{j-1} K0 - c xi^j K1 ; d[xi^j K1] = (j-1) xi^{j-1} K1 - c xi^j K0
      if (j != 0) d.t[j - 1].first += a * j;
      d.t[j].second -= c * a;
      if (j != 1) d.t[j - 1].second += b * (j - 1);
      d.t[j].first -= c * b;
    }
    return d;
  }
  R eval(const R& xi) const {
    const R z = 2 * pi_as<R>() * xi;
    const R K0 = boost::math::cyl_bessel_k(0, z), K1 = boost::math::cyl_bessel_k(1, z);
    R s = 0;
    for (auto& [j, kk] : t) s += pow(xi, j) * (kk.first * K0 + kk.second * K1);
    return s;
  }
};

// K(xi) = 256 pi^7 xi^7 K_7(2 pi xi) / 135135 reduced to K0, K1 and its first 12 derivatives
const std::vector<KForm>& kernel_derivatives() {
  static const std::vector<KForm> ders = [] {
    const R PI = pi_as<R>(), c = 2 * PI;
    // K_nu = A_nu(1/z) K0 + B_nu(1/z) K1 as maps power-of-(1/z) -> coefficient
    std::vector<std::map<int, R>> A(8), B(8);
    A[0][0] = 1;
    B[1][0] = 1;
    for (int nu = 2; nu <= 7; ++nu) {
      A[nu] = A[nu - 2];
      B[nu] = B[nu - 2];
      for (auto& [p, v] : A[nu - 1]) A[nu][p + 1] += 2 * (nu - 1) * v;
      for (auto& [p, v] : B[nu - 1]) B[nu][p + 1] += 2 * (nu - 1) * v;
    }
    const R pref = 256 * pow(PI, 7) / 135135;
    KForm k;
    // xi^7 z^{-p} = xi^{7-p} c^{-p}
    for (auto& [p, v] : A[7]) k.t[7 - p].first += pref * v / pow(c, p);
    for (auto& [p, v] : B[7]) k.t[7 - p].second += pref * v / pow(c, p);
    std::vector<KForm> out{k};
    for (int a = 1; a <= 12; ++a) out.push_back(out.back().derivative());
    return out;
  }();
  return ders;
}

// int r^b (1+r^2)^{-15/2} dr
R moment(int b) {
  if (b % 2) return 0;
  return boost::math::beta(R(b + 1) / 2, R(7) - R(b) / 2);
}

// K^{(a)}(xi) including the xi < 0 reflection and xi = 0 moments, divided by (-2 pi)^a;
// the remaining factor i^{-a} is handled by the caller
R kernel_scaled(int a, const R& xi) {
  const R PI = pi_as<R>();
  // M_a(0) is the plain moment, with no phase
  if (xi == 0) return moment(a);
  R v = kernel_derivatives()[a].eval(abs(xi));
  if (xi < 0 && a % 2) v = -v;
  return v / pow(R(-2) * PI, a);
}
}  // namespace

double i2_generic(int n1, int n2, double y) {
  if (n1 + n2 == 0) throw DegenerateError("i2_generic: n1 + n2 = 0");
  const auto& p2 = symcore::d7_split().p2;
  const R PI = pi_as<R>(), yy = y, X = n1 + n2;
  const R xi1 = R(n1) * yy, xi2 = R(n2) * yy;
  R re = 0, im = 0;
  std::vector<R> m1(13), m2(13);
  for (int a = 0; a <= 12; ++a) {
    m1[a] = kernel_scaled(a, xi1);
    m2[a] = kernel_scaled(a, xi2);
  }
  for (auto& [mono, c] : p2.terms()) {
    int a = mono.first, b = mono.second;
    // phase i^{-(a+b+1)}, dropping i^{-a} for zero arguments
    int k = (n1 ? a : 0) + (n2 ? b : 0) + 1;
    R v = q_to<R>(c) * m1[a] * m2[b];
    switch (((-k) % 4 + 4) % 4) {
      case 0: re += v; break;
      case 1: im += v; break;
      case 2: re -= v; break;
      case 3: im -= v; break;
    }
  }
  // I2 = -S / (128 i pi^7 X^7 y^7); the 1/i is in the phase above
  R den = 128 * pow(PI, 7) * pow(X, 7) * pow(yy, 7);
  if (abs(im) > abs(re) * R(1e-20) + R(1e-40)) throw AccuracyError("i2_generic: imaginary part", Estimate{static_cast<double>(re), static_cast<double>(abs(im))});
  return static_cast<double>(-re / den);
}

}  // namespace poincare::icoeff
