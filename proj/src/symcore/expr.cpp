#include "poincare/symcore/expr.hpp"

#include <cmath>
#include <sstream>

#include "poincare/common.hpp"

namespace poincare::symcore {

namespace {
std::shared_ptr<const Expr::Node> leaf(Expr::Kind k) {
  auto n = std::make_shared<Expr::Node>();
  n->kind = k;
  return n;
}
}  // namespace

Expr::Expr(const mpq_class& c) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::constant;
  n->value = c;
  n_ = n;
}
Expr Expr::r1() { return Expr(leaf(Kind::r1)); }
Expr Expr::r2() { return Expr(leaf(Kind::r2)); }
Expr Expr::atom(Atom a) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::atom;
  n->atom = a;
  return Expr(std::shared_ptr<const Node>(n));
}
Expr Expr::pow(const Expr& b, int e) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::pow;
  n->exponent = e;
  n->args = {b};
  return Expr(std::shared_ptr<const Node>(n));
}
Expr operator+(const Expr& a, const Expr& b) {
  auto n = std::make_shared<Expr::Node>();
  n->kind = Expr::Kind::add;
  n->args = {a, b};
  return Expr(std::shared_ptr<const Expr::Node>(n));
}
Expr operator*(const Expr& a, const Expr& b) {
  auto n = std::make_shared<Expr::Node>();
  n->kind = Expr::Kind::mul;
  n->args = {a, b};
  return Expr(std::shared_ptr<const Expr::Node>(n));
}
Expr operator-(const Expr& a) { return Expr(mpq_class(-1)) * a; }
Expr operator-(const Expr& a, const Expr& b) { return a + (-b); }

std::string Expr::str() const {
  const Node& n = *n_;
  switch (n.kind) {
    case Kind::constant: return n.value.get_str();
    case Kind::r1: return "r1";
    case Kind::r2: return "r2";
    case Kind::atom: {
      static const char* names[] = {"s1", "s2", "t1", "t2", "A", "1/pi"};
      return names[static_cast<int>(n.atom)];
    }
    case Kind::pow: return "(" + n.args[0].str() + ")^" + std::to_string(n.exponent);
    case Kind::add:
    case Kind::mul: {
      std::string s = "(";
      for (size_t i = 0; i < n.args.size(); ++i) {
        if (i) s += n.kind == Kind::add ? " + " : "*";
        s += n.args[i].str();
      }
      return s + ")";
    }
  }
  return "?";
}

double H_direct(double r1, double r2) {
  double v = r2 - r1, u = (r1 * r2 + 1) / v;
  double h = (7 + 44 * u * u + 40 * u * u * u * u) / (3 * std::sqrt(1 + u * u)) -
             16 / (3 * pi) * (4.0 / 3 + 5 * u * u + u * (3 + 5 * u * u) * std::atan(u));
  return h / std::abs(v * v * v);
}

Expr build_H() {
  Expr r1 = Expr::r1(), r2 = Expr::r2();
  Expr v = r2 - r1;
  Expr u = (r1 * r2 + 1) * Expr::pow(v, -1);
  Expr u2 = u * u;
  Expr s1 = Expr::atom(Atom::s1), s2 = Expr::atom(Atom::s2);
  Expr root = s1 * s2 * Expr::pow(v, -1);  // sqrt(1+u^2)
  Expr h = Expr(mpq_class(1, 3)) * (7 + 44 * u2 + 40 * u2 * u2) * Expr::pow(root, -1) -
           Expr(mpq_class(16, 3)) * Expr::atom(Atom::pi_inv) *
               (Expr(mpq_class(4, 3)) + 5 * u2 + u * (3 + 5 * u2) * Expr::atom(Atom::A));
  return h * Expr::pow(v, -3);
}

}  // namespace poincare::symcore
