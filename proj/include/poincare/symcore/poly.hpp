#pragma once
#include <map>
#include <optional>
#include <string>
#include <utility>

#include <gmpxx.h>

namespace poincare::symcore {

// exact bivariate polynomial in r1, r2; key (i, j) is r1^i r2^j
class BiPoly {
 public:
  using Mono = std::pair<int, int>;
  BiPoly() = default;
  explicit BiPoly(const mpq_class& c);
  static BiPoly r1();
  static BiPoly r2();
  static BiPoly mono(int i, int j, const mpq_class& c = 1);

  bool is_zero() const { return t_.empty(); }
  const std::map<Mono, mpq_class>& terms() const { return t_; }
  mpq_class coeff(int i, int j) const;
  void add_term(int i, int j, const mpq_class& c);

  int deg1() const;
  int deg2() const;
  int total_degree() const;
  std::optional<mpq_class> as_constant() const;

  BiPoly operator+(const BiPoly& o) const;
  BiPoly operator-(const BiPoly& o) const;
  BiPoly operator*(const BiPoly& o) const;
  BiPoly operator*(const mpq_class& s) const;
  BiPoly operator-() const { return *this * mpq_class(-1); }
  bool operator==(const BiPoly& o) const { return t_ == o.t_; }
  bool operator!=(const BiPoly& o) const { return !(*this == o); }

  BiPoly pow(int n) const;
  BiPoly d1() const;
  BiPoly d2() const;
  BiPoly swapped() const;

  // exact quotient by g, or nothing if g does not divide
  std::optional<BiPoly> divide_exact(const BiPoly& g) const;

  template <class T>
  T eval(const T& x1, const T& x2) const;

  // graded-lex dump (total degree descending, then r1 exponent descending)
  std::string dump() const;

 private:
  std::map<Mono, mpq_class> t_;
  std::optional<BiPoly> divide_r1(const BiPoly& g) const;
};

// the three denominator factors
const BiPoly& factor_v();   // r2 - r1
const BiPoly& factor_p1();  // 1 + r1^2
const BiPoly& factor_p2();  // 1 + r2^2

template <class T>
T BiPoly::eval(const T& x1, const T& x2) const {
  // Horner in r1 over rows of r2-polynomials
  int d1m = deg1(), d2m = deg2();
  if (t_.empty()) return T(0);
  T r = T(0);
  for (int i = d1m; i >= 0; --i) {
    T row = T(0);
    for (int j = d2m; j >= 0; --j) {
      auto it = t_.find({i, j});
      row = row * x2;
      if (it != t_.end()) row = row + T(it->second.get_d());
    }
    r = r * x1 + row;
  }
  return r;
}

}  // namespace poincare::symcore
