#pragma once
// Truncated Taylor series in one variable: c[k] = f^(k)(x0)/k!.
// Used for exact derivatives (N = 3 gives f, f', f''/2) and for limits along
// a small parameter (coefficient extraction).
#include <array>
#include <cmath>
#include <type_traits>

namespace poincare {

template <class T, int N>
struct Taylor {
  static_assert(N >= 1);
  std::array<T, N> c{};

  Taylor() = default;
  Taylor(const T& v) { c.fill(T(0)); c[0] = v; }
  template <class S, std::enable_if_t<std::is_arithmetic_v<S> && !std::is_same_v<S, T>, int> = 0>
  Taylor(S v) : Taylor(T(v)) {}

  static Taylor var(const T& x0) {
    Taylor t(x0);
    if constexpr (N > 1) t.c[1] = T(1);
    return t;
  }
  const T& operator[](int k) const { return c[k]; }
  T& operator[](int k) { return c[k]; }
  const T& value() const { return c[0]; }
  // k-th derivative
  T deriv(int k) const {
    T f = c[k];
    for (int j = 2; j <= k; ++j) f *= j;
    return f;
  }

  Taylor operator-() const { Taylor r; for (int k = 0; k < N; ++k) r.c[k] = -c[k]; return r; }
  Taylor& operator+=(const Taylor& o) { for (int k = 0; k < N; ++k) c[k] += o.c[k]; return *this; }
  Taylor& operator-=(const Taylor& o) { for (int k = 0; k < N; ++k) c[k] -= o.c[k]; return *this; }
  Taylor& operator*=(const Taylor& o) { *this = *this * o; return *this; }
  Taylor& operator/=(const Taylor& o) { *this = *this / o; return *this; }

  friend Taylor operator+(Taylor a, const Taylor& b) { return a += b; }
  friend Taylor operator-(Taylor a, const Taylor& b) { return a -= b; }
  friend Taylor operator*(const Taylor& a, const Taylor& b) {
    Taylor r;
    for (int k = 0; k < N; ++k) {
      T s(0);
      for (int j = 0; j <= k; ++j) s += a.c[j] * b.c[k - j];
      r.c[k] = s;
    }
    return r;
  }
  friend Taylor inv(const Taylor& a) {
    Taylor r;
    r.c[0] = T(1) / a.c[0];
    for (int k = 1; k < N; ++k) {
      T s(0);
      for (int j = 1; j <= k; ++j) s += a.c[j] * r.c[k - j];
      r.c[k] = -s * r.c[0];
    }
    return r;
  }
  friend Taylor operator/(const Taylor& a, const Taylor& b) { return a * inv(b); }

  friend bool operator<(const Taylor& a, const Taylor& b) { return a.c[0] < b.c[0]; }
  friend bool operator>(const Taylor& a, const Taylor& b) { return a.c[0] > b.c[0]; }
};

template <class X> struct is_taylor : std::false_type {};
template <class T, int N> struct is_taylor<Taylor<T, N>> : std::true_type {};
template <class X> inline constexpr bool is_taylor_v = is_taylor<X>::value;

template <class X> struct scalar_of { using type = X; };
template <class T, int N> struct scalar_of<Taylor<T, N>> { using type = T; };
template <class X> using scalar_of_t = typename scalar_of<X>::type;

// leading value of a scalar or a series
template <class X>
auto value_of(const X& x) {
  if constexpr (is_taylor_v<X>) return x.c[0];
  else return x;
}

// mixed arithmetic with plain numbers
#define POINCARE_TAYLOR_SCALAR_OPS(OP)                                                  \
  template <class T, int N, class S, std::enable_if_t<std::is_arithmetic_v<S>, int> = 0> \
  Taylor<T, N> operator OP(const Taylor<T, N>& a, S s) { return a OP Taylor<T, N>(T(s)); } \
  template <class T, int N, class S, std::enable_if_t<std::is_arithmetic_v<S>, int> = 0> \
  Taylor<T, N> operator OP(S s, const Taylor<T, N>& a) { return Taylor<T, N>(T(s)) OP a; }
POINCARE_TAYLOR_SCALAR_OPS(+)
POINCARE_TAYLOR_SCALAR_OPS(-)
POINCARE_TAYLOR_SCALAR_OPS(*)
POINCARE_TAYLOR_SCALAR_OPS(/)
#undef POINCARE_TAYLOR_SCALAR_OPS

template <class T, int N, class S, std::enable_if_t<std::is_arithmetic_v<S>, int> = 0>
bool operator<(const Taylor<T, N>& a, S s) { return a.c[0] < s; }
template <class T, int N, class S, std::enable_if_t<std::is_arithmetic_v<S>, int> = 0>
bool operator>(const Taylor<T, N>& a, S s) { return a.c[0] > s; }

// f(a) from the Taylor coefficients w[k] of f at a.c[0]
template <class T, int N>
Taylor<T, N> compose(const std::array<T, N>& w, const Taylor<T, N>& a) {
  Taylor<T, N> d = a;
  d.c[0] = T(0);
  Taylor<T, N> r(w[N - 1]);
  for (int k = N - 2; k >= 0; --k) r = r * d + Taylor<T, N>(w[k]);
  return r;
}

template <class T, int N>
Taylor<T, N> exp(const Taylor<T, N>& a) {
  using std::exp;
  Taylor<T, N> r;
  r.c[0] = exp(a.c[0]);
  for (int k = 1; k < N; ++k) {
    T s(0);
    for (int j = 1; j <= k; ++j) s += T(j) * a.c[j] * r.c[k - j];
    r.c[k] = s / T(k);
  }
  return r;
}

template <class T, int N>
Taylor<T, N> log(const Taylor<T, N>& a) {
  using std::log;
  Taylor<T, N> r;
  r.c[0] = log(a.c[0]);
  for (int k = 1; k < N; ++k) {
    T s(0);
    for (int j = 1; j < k; ++j) s += T(j) * r.c[j] * a.c[k - j];
    r.c[k] = (a.c[k] - s / T(k)) / a.c[0];
  }
  return r;
}

// a^p for real p, a.c[0] > 0
template <class T, int N>
Taylor<T, N> pow(const Taylor<T, N>& a, const T& p) {
  using std::pow;
  Taylor<T, N> r;
  r.c[0] = pow(a.c[0], p);
  for (int k = 1; k < N; ++k) {
    T s(0);
    for (int j = 1; j <= k; ++j) s += (p * T(j) - T(k - j)) * a.c[j] * r.c[k - j];
    r.c[k] = s / (T(k) * a.c[0]);
  }
  return r;
}

template <class T, int N>
Taylor<T, N> pow(const Taylor<T, N>& a, int n) {
  if (n < 0) return inv(pow(a, -n));
  Taylor<T, N> r(T(1)), b = a;
  while (n) {
    if (n & 1) r = r * b;
    n >>= 1;
    if (n) b = b * b;
  }
  return r;
}

template <class T, int N>
Taylor<T, N> sqrt(const Taylor<T, N>& a) {
  using std::sqrt;
  Taylor<T, N> r;
  r.c[0] = sqrt(a.c[0]);
  for (int k = 1; k < N; ++k) {
    T s(0);
    for (int j = 1; j < k; ++j) s += r.c[j] * r.c[k - j];
    r.c[k] = (a.c[k] - s) / (T(2) * r.c[0]);
  }
  return r;
}

template <class T, int N>
Taylor<T, N> atan(const Taylor<T, N>& a) {
  using std::atan;
  Taylor<T, N> r;
  r.c[0] = atan(a.c[0]);
  if constexpr (N > 1) {
    Taylor<T, N> da;
    for (int k = 0; k + 1 < N; ++k) da.c[k] = T(k + 1) * a.c[k + 1];
    Taylor<T, N> q = da / (T(1) + a * a);
    for (int k = 1; k < N; ++k) r.c[k] = q.c[k - 1] / T(k);
  }
  return r;
}

template <class T, int N>
Taylor<T, N> abs(const Taylor<T, N>& a) {
  return a.c[0] < T(0) ? -a : a;
}

template <class T, int N>
Taylor<T, N> sin(const Taylor<T, N>& a);
template <class T, int N>
Taylor<T, N> cos(const Taylor<T, N>& a);

namespace detail {
template <class T, int N>
void sincos_series(const Taylor<T, N>& a, Taylor<T, N>& s, Taylor<T, N>& c) {
  using std::sin;
  using std::cos;
  s.c[0] = sin(a.c[0]);
  c.c[0] = cos(a.c[0]);
  for (int k = 1; k < N; ++k) {
    T ss(0), cc(0);
    for (int j = 1; j <= k; ++j) {
      ss += T(j) * a.c[j] * c.c[k - j];
      cc -= T(j) * a.c[j] * s.c[k - j];
    }
    s.c[k] = ss / T(k);
    c.c[k] = cc / T(k);
  }
}
}  // namespace detail

template <class T, int N>
Taylor<T, N> sin(const Taylor<T, N>& a) {
  Taylor<T, N> s, c;
  detail::sincos_series(a, s, c);
  return s;
}
template <class T, int N>
Taylor<T, N> cos(const Taylor<T, N>& a) {
  Taylor<T, N> s, c;
  detail::sincos_series(a, s, c);
  return c;
}

}  // namespace poincare
