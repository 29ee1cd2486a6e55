#include <cmath>

#include "poincare/common.hpp"
#include "poincare/symcore/expr.hpp"

namespace poincare::symcore {

namespace {

BiPoly den_poly(int a, int b, int c) {
  return factor_v().pow(a) * factor_p1().pow(b) * factor_p2().pow(c);
}

const BiPoly& fac(int i) {
  switch (i) {
    case 0: return factor_v();
    case 1: return factor_p1();
    default: return factor_p2();
  }
}

int& den_slot(RatTerm& t, int i) { return i == 0 ? t.dv : (i == 1 ? t.dp1 : t.dp2); }

RatTerm add_rat(const RatTerm& x, const RatTerm& y) {
  RatTerm r;
  r.dv = std::max(x.dv, y.dv);
  r.dp1 = std::max(x.dp1, y.dp1);
  r.dp2 = std::max(x.dp2, y.dp2);
  r.num = x.num * den_poly(r.dv - x.dv, r.dp1 - x.dp1, r.dp2 - x.dp2) +
          y.num * den_poly(r.dv - y.dv, r.dp1 - y.dp1, r.dp2 - y.dp2);
  return reduce(r);
}

}  // namespace

RatTerm reduce(RatTerm t) {
  if (t.num.is_zero()) return RatTerm{};
  for (int i = 0; i < 3; ++i) {
    while (den_slot(t, i) > 0) {
      auto q = t.num.divide_exact(fac(i));
      if (!q) break;
      t.num = std::move(*q);
      --den_slot(t, i);
    }
  }
  return t;
}

void NormalForm::add(const MonoKey& k, const RatTerm& r) {
  if (r.num.is_zero()) return;
  auto it = t_.find(k);
  if (it == t_.end()) {
    t_[k] = reduce(r);
    return;
  }
  RatTerm s = add_rat(it->second, r);
  if (s.num.is_zero())
    t_.erase(it);
  else
    it->second = std::move(s);
}

NormalForm NormalForm::operator+(const NormalForm& o) const {
  NormalForm r = *this;
  for (auto& [k, t] : o.t_) r.add(k, t);
  return r;
}

NormalForm NormalForm::scaled(const mpq_class& c) const {
  NormalForm r;
  if (c == 0) return r;
  for (auto& [k, t] : t_) r.t_[k] = RatTerm{t.num * c, t.dv, t.dp1, t.dp2};
  return r;
}

NormalForm NormalForm::operator*(const NormalForm& o) const {
  NormalForm r;
  for (auto& [k, x] : t_)
    for (auto& [l, y] : o.t_) {
      MonoKey m{k.e1 + l.e1, k.e2 + l.e2, k.kt1 + l.kt1, k.kt2 + l.kt2, k.kA + l.kA, k.kpi + l.kpi};
      RatTerm p{x.num * y.num, x.dv + y.dv, x.dp1 + y.dp1, x.dp2 + y.dp2};
      // s_i^2 = P_i
      if (m.e1 == 2) {
        m.e1 = 0;
        p.num = p.num * factor_p1();
      }
      if (m.e2 == 2) {
        m.e2 = 0;
        p.num = p.num * factor_p2();
      }
      r.add(m, p);
    }
  return r;
}

NormalForm NormalForm::inverse() const {
  if (t_.size() != 1) throw UnsupportedError("inverse: not a monomial");
  const auto& [k, t] = *t_.begin();
  if (k.kt1 || k.kt2 || k.kA) throw UnsupportedError("inverse: transcendental atom in denominator");
  BiPoly n = t.num;
  int ex[3] = {0, 0, 0};
  for (int i = 0; i < 3; ++i)
    while (true) {
      auto q = n.divide_exact(fac(i));
      if (!q) break;
      n = std::move(*q);
      ++ex[i];
    }
  auto kappa = n.as_constant();
  if (!kappa || *kappa == 0) throw UnsupportedError("inverse: numerator has other factors");
  // 1/s_i = s_i / P_i
  RatTerm r{den_poly(t.dv, t.dp1, t.dp2) * (1 / *kappa), ex[0], ex[1] + k.e1, ex[2] + k.e2};
  NormalForm out;
  out.add(MonoKey{k.e1, k.e2, 0, 0, 0, -k.kpi}, r);
  return out;
}

NormalForm normalize(const Expr& e) {
  const auto& n = e.node();
  NormalForm r;
  switch (n.kind) {
    case Expr::Kind::constant: r.add(MonoKey{}, RatTerm{BiPoly(n.value)}); return r;
    case Expr::Kind::r1: r.add(MonoKey{}, RatTerm{BiPoly::r1()}); return r;
    case Expr::Kind::r2: r.add(MonoKey{}, RatTerm{BiPoly::r2()}); return r;
    case Expr::Kind::atom: {
      MonoKey k;
      switch (n.atom) {
        case Atom::s1: k.e1 = 1; break;
        case Atom::s2: k.e2 = 1; break;
        case Atom::t1: k.kt1 = 1; break;
        case Atom::t2: k.kt2 = 1; break;
        case Atom::A: k.kA = 1; break;
        case Atom::pi_inv: k.kpi = 1; break;
      }
      r.add(k, RatTerm{BiPoly(1)});
      return r;
    }
    case Expr::Kind::add:
      for (auto& a : n.args) r = r + normalize(a);
      return r;
    case Expr::Kind::mul: {
      r.add(MonoKey{}, RatTerm{BiPoly(1)});
      for (auto& a : n.args) r = r * normalize(a);
      return r;
    }
    case Expr::Kind::pow: {
      NormalForm b = normalize(n.args[0]);
      int p = n.exponent;
      if (p < 0) {
        b = b.inverse();
        p = -p;
      }
      r.add(MonoKey{}, RatTerm{BiPoly(1)});
      for (int i = 0; i < p; ++i) r = r * b;
      return r;
    }
  }
  return r;
}

NormalForm apply_D(const NormalForm& e, int k) {
  NormalForm cur = e;
  const BiPoly R1 = BiPoly::r1(), R2 = BiPoly::r2();
  const BiPoly dA = (R1 + R2) * factor_v();  // D arctan u = (r1+r2) v / (P1 P2)
  for (int step = 0; step < k; ++step) {
    NormalForm next;
    for (auto& [key, t] : cur.terms()) {
      const int a = t.dv, b = t.dp1, c = t.dp2;
      // numerator and denominator (D v = 0)
      next.add(key, RatTerm{t.num.d1() + t.num.d2(), a, b, c});
      if (b) next.add(key, RatTerm{t.num * R1 * mpq_class(-2 * b), a, b + 1, c});
      if (c) next.add(key, RatTerm{t.num * R2 * mpq_class(-2 * c), a, b, c + 1});
      // s_i' = r_i s_i / P_i
      if (key.e1) next.add(key, RatTerm{t.num * R1, a, b + 1, c});
      if (key.e2) next.add(key, RatTerm{t.num * R2, a, b, c + 1});
      // t_i' = 1 / P_i
      if (key.kt1) {
        MonoKey m = key;
        --m.kt1;
        next.add(m, RatTerm{t.num * mpq_class(key.kt1), a, b + 1, c});
      }
      if (key.kt2) {
        MonoKey m = key;
        --m.kt2;
        next.add(m, RatTerm{t.num * mpq_class(key.kt2), a, b, c + 1});
      }
      if (key.kA) {
        MonoKey m = key;
        --m.kA;
        next.add(m, RatTerm{t.num * dA * mpq_class(key.kA), a, b + 1, c + 1});
      }
    }
    cur = std::move(next);
  }
  return cur;
}

Expr apply_D(const Expr& e, int k) { return apply_D(normalize(e), k).to_expr(); }

double NormalForm::eval(double r1, double r2) const {
  const double v = r2 - r1, u = (r1 * r2 + 1) / v;
  const double s1 = std::sqrt(1 + r1 * r1), s2 = std::sqrt(1 + r2 * r2);
  const double t1 = std::atan(r1), t2 = std::atan(r2), A = std::atan(u);
  double sum = 0;
  for (auto& [k, t] : t_) {
    double x = t.num.eval(r1, r2) / (std::pow(v, t.dv) * std::pow(1 + r1 * r1, t.dp1) *
                                     std::pow(1 + r2 * r2, t.dp2));
    x *= std::pow(s1, k.e1) * std::pow(s2, k.e2) * std::pow(t1, k.kt1) * std::pow(t2, k.kt2) *
         std::pow(A, k.kA) * std::pow(pi, -k.kpi);
    sum += x;
  }
  return sum;
}

Expr NormalForm::to_expr() const {
  Expr sum(0);
  Expr v = Expr::r2() - Expr::r1();
  Expr p1 = 1 + Expr::r1() * Expr::r1(), p2 = 1 + Expr::r2() * Expr::r2();
  for (auto& [k, t] : t_) {
    Expr num(0);
    for (auto& [m, c] : t.num.terms())
      num = num + Expr(c) * Expr::pow(Expr::r1(), m.first) * Expr::pow(Expr::r2(), m.second);
    Expr term = num * Expr::pow(v, -t.dv) * Expr::pow(p1, -t.dp1) * Expr::pow(p2, -t.dp2);
    term = term * Expr::pow(Expr::atom(Atom::s1), k.e1) * Expr::pow(Expr::atom(Atom::s2), k.e2) *
           Expr::pow(Expr::atom(Atom::t1), k.kt1) * Expr::pow(Expr::atom(Atom::t2), k.kt2) *
           Expr::pow(Expr::atom(Atom::A), k.kA) * Expr::pow(Expr::atom(Atom::pi_inv), k.kpi);
    sum = sum + term;
  }
  return sum;
}

}  // namespace poincare::symcore
