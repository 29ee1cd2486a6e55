#include "poincare/hsolver/fit.hpp"

#include <map>
#include <mutex>
#include <sstream>

#include <Eigen/Dense>
#include <boost/multiprecision/eigen.hpp>

#include "poincare/common.hpp"

namespace poincare::hsolver {

using R = Real100;
using J = Taylor<R, 3>;

const numkit::LegendreIU& legendre_iu_cached(int m) {
  static std::mutex mu;
  static std::map<int, numkit::LegendreIU> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(m);
  if (it == cache.end()) it = cache.emplace(m, numkit::legendre_iu(m)).first;
  return it->second;
}

namespace {

// ansatz with a single unit coefficient (index j in A|B|C order), c1 = c2 = 0
HalfIntAnsatz unit(int n, int j) {
  HalfIntAnsatz h;
  h.n = n;
  h.A.assign(n + 1, 0);
  h.B.assign(n + 1, 0);
  h.C.assign(2 * n + 2, 0);
  if (j <= n)
    h.A[j] = 1;
  else if (j <= 2 * n + 1)
    h.B[j - n - 1] = 1;
  else
    h.C[j - 2 * n - 2] = 1;
  return h;
}

// (1+u^2)^a L[f](u), a = n + 1/2
R scaled_L(const HalfIntAnsatz& h, const R& u, double b) {
  J t = h.eval(J::var(u));
  R L = (1 + u * u) * 2 * t.c[2] + 2 * u * t.c[1] - R(b) * t.c[0];
  return L * pow(1 + u * u, h.n) * sqrt(1 + u * u);
}

// best continued-fraction convergent with denominator <= dmax within tol
std::optional<mpq_class> snap(const R& x, const R& tol, long dmax = 1000000) {
  R y = x;
  mpz_class h0 = 1, h1 = 0, k0 = 0, k1 = 1;  // h_{-1}, h_{-2}
  for (int it = 0; it < 40; ++it) {
    R fl = floor(y);
    if (abs(fl) > R(1e15)) return std::nullopt;
    mpz_class a(std::to_string(fl.convert_to<long long>()));
    mpz_class h2 = a * h0 + h1, k2 = a * k0 + k1;
    if (k2 > dmax) return std::nullopt;
    mpq_class c(h2, k2);
    c.canonicalize();
    if (abs(q_to<R>(c) - x) <= tol) return c;
    h1 = h0;
    h0 = h2;
    k1 = k0;
    k0 = k2;
    R fr = y - fl;
    if (fr == 0) return std::nullopt;
    y = 1 / fr;
  }
  return std::nullopt;
}

void set_coeffs(HalfIntAnsatz& h, const std::vector<R>& x) {
  int n = h.n;
  for (int k = 0; k <= n; ++k) h.A[k] = x[k];
  for (int k = 0; k <= n; ++k) h.B[k] = x[n + 1 + k];
  for (int k = 0; k <= 2 * n + 1; ++k) h.C[k] = x[2 * n + 2 + k];
}

R grid_residual(const HalfIntAnsatz& h, const std::vector<R>& us, double b) {
  R worst = 0;
  for (auto& u : us) worst = std::max(worst, R(abs(scaled_L(h, u, b) + 1)));
  return worst;
}

// c1, c2 cancelling the growing p-direction at both ends (q/p -> -+pi/2 at +-inf).
// Each term's limit of f/p at +-inf is accumulated in beta[0] (+inf), beta[1] (-inf).
void decay_constants(HalfIntAnsatz& h) {
  const int n = h.n, m = 2 * n + 1;
  const auto& L = legendre_iu_cached(m);
  const R PI = pi_as<R>();
  // w/p = kappa/u + O(u^-3)
  R kappa = q_to<R>(L.w[m - 1]) / q_to<R>(L.p[m]);
  R bp = 0, bm = 0;
  for (int k = 0; k <= n; ++k) {
    R t = pow(R(2), R(0.5) - k);
    // A_k: -2^{1/2-k} q/p; for k = 0 the (1+u^2)^{1/2} q/p part leaves +-(1-kappa)
    bp += h.A[k] * (PI / 2 * t + (k == 0 ? 1 - kappa : R(0)));
    bm += h.A[k] * (-PI / 2 * t - (k == 0 ? 1 - kappa : R(0)));
    // B_k: -pi 2^{-k-3/2}; for k = 0 arctan u sqrt(1+u^2) leaves -+1
    R c = -PI * pow(R(2), -R(k) - R(1.5));
    bp += h.B[k] * (c - (k == 0 ? 1 : 0));
    bm += h.B[k] * (c + (k == 0 ? 1 : 0));
  }
  for (int k = 0; k <= 2 * n + 1; ++k) {
    R t = pow(R(2), -R(k) - R(0.5));
    bp += h.C[k] * (1 - t);
    bm += h.C[k] * (-1 - t);
  }
  h.c1 = -(bp + bm) / 2;
  h.c2 = (bp - bm) / PI;
}

}  // namespace

double HalfIntAnsatz::operator()(double u) const { return static_cast<double>(eval(R(u))); }

double HalfIntAnsatz::residual(double u) const {
  J t = eval(J::var(R(u)));
  R uu = u;
  R res = (1 + uu * uu) * 2 * t.c[2] + 2 * uu * t.c[1] - R(b) * t.c[0] +
          pow(1 + uu * uu, -R(a));
  return static_cast<double>(res);
}

HalfIntAnsatz fit_halfint(int n) {
  if (n < 0 || n > 4) throw UnsupportedError("fit_halfint: n must be in [0, 4]");
  const int N = 4 * n + 4, M = 4 * N;
  const double b = (2.0 * n + 1) * (2.0 * n + 2);
  const R PI = pi_as<R>();

  std::vector<R> us(M);
  for (int i = 0; i < M; ++i) us[i] = 20 * cos(PI * (i + R(0.5)) / M);

  using Mat = Eigen::Matrix<R, Eigen::Dynamic, Eigen::Dynamic>;
  using Vec = Eigen::Matrix<R, Eigen::Dynamic, 1>;
  Mat Amat(M, N);
  Vec rhs = Vec::Constant(M, R(-1));
  for (int j = 0; j < N; ++j) {
    HalfIntAnsatz e = unit(n, j);
    for (int i = 0; i < M; ++i) Amat(i, j) = scaled_L(e, us[i], b);
  }
  Vec scale(N);
  for (int j = 0; j < N; ++j) {
    scale[j] = Amat.col(j).norm();
    Amat.col(j) /= scale[j];
  }
  Eigen::JacobiSVD<Mat> svd(Amat, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  std::ostringstream svs;
  for (int j = 0; j < sv.size(); ++j) svs << (j ? " " : "") << static_cast<double>(sv[j]);
  if (sv[sv.size() - 1] < sv[0] * R(1e-60))
    throw FitDegenerate("fit_halfint: rank-deficient collocation system", svs.str());
  Vec x = svd.solve(rhs);

  HalfIntAnsatz h = unit(n, 0);
  h.a = n + 0.5;
  h.b = b;
  h.b_minus = 2 * n + 1;
  h.b_plus = 2 * n + 2;
  h.singular_values = svs.str();
  std::vector<R> coef(N);
  for (int j = 0; j < N; ++j) coef[j] = x[j] / scale[j];
  set_coeffs(h, coef);
  R r0 = grid_residual(h, us, b);

  // snap to small rationals when that does not worsen the residual
  std::vector<mpq_class> exact;
  std::vector<R> snapped(N);
  bool all = true;
  for (int j = 0; j < N; ++j) {
    auto q = snap(coef[j], R(1e-30) * std::max(R(1), R(abs(coef[j]))));
    if (!q) {
      all = false;
      break;
    }
    exact.push_back(*q);
    snapped[j] = q_to<R>(*q);
  }
  if (all) {
    HalfIntAnsatz hs = h;
    set_coeffs(hs, snapped);
    R rs = grid_residual(hs, us, b);
    if (rs <= std::max(R(10) * r0, R(1e-60))) {
      h = hs;
      h.exact_ABC = exact;
    }
  }
  decay_constants(h);

  double worst = 0;
  for (int i = 0; i <= 100; ++i) worst = std::max(worst, std::abs(h.residual(-20 + 0.4 * i)));
  h.residual_bound = worst;
  auto scaled_tail = [&](double u) {
    return static_cast<double>(pow(R(u), 2 * n + 1) * h.eval(R(u)));
  };
  double t3 = scaled_tail(1e3), t4 = scaled_tail(1e4);
  h.c_inf = t4;
  h.decay_ratio = t4 / t3;
  return h;
}

}  // namespace poincare::hsolver
