#pragma once
#include <array>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "poincare/symcore/poly.hpp"

namespace poincare::symcore {

enum class Atom { s1, s2, t1, t2, A, pi_inv };

// immutable expression tree
class Expr {
 public:
  enum class Kind { constant, r1, r2, atom, add, mul, pow };
  struct Node {
    Kind kind;
    mpq_class value;  // constant
    Atom atom{};
    int exponent = 0;  // pow
    std::vector<Expr> args;
  };

  Expr() : Expr(mpq_class(0)) {}
  Expr(const mpq_class& c);  // NOLINT(implicit)
  Expr(int c) : Expr(mpq_class(c)) {}  // NOLINT(implicit)
  static Expr r1();
  static Expr r2();
  static Expr atom(Atom a);
  static Expr pow(const Expr& b, int e);

  const Node& node() const { return *n_; }
  Kind kind() const { return n_->kind; }
  std::string str() const;

  friend Expr operator+(const Expr& a, const Expr& b);
  friend Expr operator-(const Expr& a, const Expr& b);
  friend Expr operator*(const Expr& a, const Expr& b);
  friend Expr operator-(const Expr& a);

 private:
  explicit Expr(std::shared_ptr<const Node> n) : n_(std::move(n)) {}
  std::shared_ptr<const Node> n_;
};

// key of a canonical monomial: s1^e1 s2^e2 t1^k1 t2^k2 A^kA pi^(-kpi)
struct MonoKey {
  int e1 = 0, e2 = 0, kt1 = 0, kt2 = 0, kA = 0, kpi = 0;
  auto tie() const { return std::array<int, 6>{e1, e2, kt1, kt2, kA, kpi}; }
  bool operator<(const MonoKey& o) const { return tie() < o.tie(); }
  bool operator==(const MonoKey& o) const { return tie() == o.tie(); }
};

// num / (v^dv P1^dp1 P2^dp2), v = r2 - r1, Pi = 1 + ri^2
struct RatTerm {
  BiPoly num;
  int dv = 0, dp1 = 0, dp2 = 0;
  bool operator==(const RatTerm& o) const {
    return num == o.num && dv == o.dv && dp1 == o.dp1 && dp2 == o.dp2;
  }
};

// sum over keys of RatTerm * monomial; denominators fully reduced, e1, e2 in {0,1}
class NormalForm {
 public:
  const std::map<MonoKey, RatTerm>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  void add(const MonoKey& k, const RatTerm& r);  // adds and re-reduces that key
  bool operator==(const NormalForm& o) const { return t_ == o.t_; }

  NormalForm operator+(const NormalForm& o) const;
  NormalForm operator*(const NormalForm& o) const;
  NormalForm scaled(const mpq_class& c) const;
  NormalForm inverse() const;  // single-term monomials in v, P1, P2, s_i, pi only

  // numeric evaluation on the chart r2 > r1
  double eval(double r1, double r2) const;
  Expr to_expr() const;

 private:
  std::map<MonoKey, RatTerm> t_;
};

NormalForm normalize(const Expr& e);
inline NormalForm normalize(const NormalForm& e) { return normalize(e.to_expr()); }
NormalForm apply_D(const NormalForm& e, int k = 1);
Expr apply_D(const Expr& e, int k);

// H on the chart r2 > r1
Expr build_H();
// direct binary64 evaluation of H(r1, r2) = h(u)/|r2-r1|^3 (either chart)
double H_direct(double r1, double r2);

// strip v, P1, P2 factors shared by numerator and denominator
RatTerm reduce(RatTerm t);

}  // namespace poincare::symcore
