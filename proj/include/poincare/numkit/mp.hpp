#pragma once
#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include "poincare/numkit/legendre.hpp"
#include "poincare/numkit/taylor.hpp"

namespace poincare {

using Real50 = boost::multiprecision::cpp_bin_float_50;
using Real100 = boost::multiprecision::cpp_bin_float_100;

template <class S>
S pi_as() {
  if constexpr (std::is_same_v<S, double>)
    return std::numbers::pi;
  else if constexpr (is_taylor_v<S>)
    return S(pi_as<scalar_of_t<S>>());
  else
    return boost::math::constants::pi<S>();
}

// exact rational -> scalar (double, Real50)
template <class S>
S q_to(const mpq_class& q) {
  if constexpr (std::is_same_v<S, double>) {
    return q.get_d();
  } else {
    return S(q.get_num().get_str()) / S(q.get_den().get_str());
  }
}

// polynomial with rational coefficients at a scalar or Taylor argument
template <class X>
X qpoly_eval(const numkit::QPoly& c, const X& x) {
  using S = scalar_of_t<X>;
  X r = X(S(0));
  for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * x + X(q_to<S>(*it));
  return r;
}

}  // namespace poincare
