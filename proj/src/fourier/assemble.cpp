#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

#include "poincare/fourier/fourier.hpp"
#include "poincare/icoeff/icoeff.hpp"

namespace poincare::fourier {

ModeAssembly assemble_mode(int n, double y, int W, Exec exec) {
  if (!(y > 0)) throw DomainError("assemble_mode: y must be positive");
  ModeAssembly m;
  m.n = n;
  m.y = y;
  m.window = W;
  const double s = default_scale();
  if (n == 0) m.sigma00 = s * sigma00_identity(y);
  if (std::abs(n) <= 2 * W) m.sigma01 = 2 * s * sigma01_mode(n, y);
  const int lo = std::max(-W, n - W), hi = std::min(W, n + W);
  if (lo <= hi) {
    auto v = map_indices<double>(hi - lo + 1, [&](int i) { return mode_pair(lo + i, n - lo - i, y); }, exec);
    for (int i = 0; i <= hi - lo; ++i) {
      m.pairs += v[i];
      if (icoeff::PairIndex(lo + i, n - lo - i).degenerate()) m.degenerate += v[i];
    }
    m.tail = std::max(std::abs(v.front()), std::abs(v.back()));
  }
  m.total = m.sigma00 + m.sigma01 + m.pairs;
  return m;
}

namespace {
// mode tables are reused across the finite-difference stencil
const std::vector<ModeAssembly>& modes_at(double y, int W, Exec exec) {
  static std::mutex mu;
  static std::map<std::pair<double, int>, std::vector<ModeAssembly>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find({y, W}); it != cache.end()) return it->second;
  }
  std::vector<ModeAssembly> v;
  for (int n = 0; n <= 2 * W; ++n) v.push_back(assemble_mode(n, y, W, exec));
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(std::make_pair(y, W), std::move(v)).first->second;
}

double sum_modes(const std::vector<ModeAssembly>& m, double x) {
  double f = m[0].total;
  for (size_t n = 1; n < m.size(); ++n) f += 2 * m[n].total * std::cos(2 * pi * double(n) * x);
  return f;
}
}  // namespace

FieldValue assemble_f(UpperHalfPoint z, int W, Exec exec) {
  if (z.y < 0.5 || W > 30 || W < 1) throw DomainError("assemble_f: need y >= 0.5 and 1 <= W <= 30");
  FieldValue r;
  r.modes = modes_at(z.y, W, exec);
  r.value = sum_modes(r.modes, z.x);
  for (auto& m : r.modes) r.tail += (m.n ? 2 : 1) * m.tail;
  return r;
}

FieldResidual field_pde_residual(UpperHalfPoint z, int W, double step, double scale, Exec exec) {
  const double h = step;
  auto& m0 = modes_at(z.y, W, exec);
  auto& mp = modes_at(z.y + h, W, exec);
  auto& mm = modes_at(z.y - h, W, exec);
  double f0 = sum_modes(m0, z.x);
  double lap = (sum_modes(m0, z.x + h) + sum_modes(m0, z.x - h) + sum_modes(mp, z.x) + sum_modes(mm, z.x) -
                4 * f0) /
               (h * h);
  FieldResidual r;
  r.laplace_minus_12 = z.y * z.y * lap - 12 * f0;
  double E = eisenstein::eisenstein_fourier(z, 40);
  r.source = scale * E * E;
  r.residual = std::abs(r.laplace_minus_12 + r.source);
  return r;
}

}  // namespace poincare::fourier
