#include "poincare/numkit/quadrature.hpp"

#include <boost/math/quadrature/gauss.hpp>

#include "poincare/common.hpp"

namespace poincare::numkit {

namespace {
template <unsigned N>
GaussRule make_rule() {
  using G = boost::math::quadrature::gauss<double, N>;
  GaussRule r;
  const auto& a = G::abscissa();
  const auto& w = G::weights();
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) {
      r.x.push_back(0);
      r.w.push_back(w[i]);
    } else {
      r.x.push_back(a[i]);
      r.w.push_back(w[i]);
      r.x.push_back(-a[i]);
      r.w.push_back(w[i]);
    }
  }
  return r;
}
}  // namespace

const GaussRule& gauss_rule(int order) {
  static const GaussRule r8 = make_rule<8>(), r10 = make_rule<10>(), r16 = make_rule<16>(),
                         r20 = make_rule<20>(), r30 = make_rule<30>();
  switch (order) {
    case 8: return r8;
    case 10: return r10;
    case 16: return r16;
    case 20: return r20;
    case 30: return r30;
    default: throw UnsupportedError("gauss_rule: unsupported order");
  }
}

std::complex<double> ibp_tail_upper(const std::vector<double>& d, double w, double R) {
  const std::complex<double> iw(0, w);
  std::complex<double> s = 0, p = iw;
  for (size_t k = 0; k < d.size(); ++k) {
    s += (k % 2 ? -1.0 : 1.0) * d[k] / p;
    p *= iw;
  }
  return -std::exp(iw * R) * s;
}

std::complex<double> ibp_tail_lower(const std::vector<double>& d, double w, double L) {
  const std::complex<double> iw(0, w);
  std::complex<double> s = 0, p = iw;
  for (size_t k = 0; k < d.size(); ++k) {
    s += (k % 2 ? -1.0 : 1.0) * d[k] / p;
    p *= iw;
  }
  return std::exp(iw * L) * s;
}

}  // namespace poincare::numkit
