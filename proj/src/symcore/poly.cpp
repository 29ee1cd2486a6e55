#include "poincare/symcore/poly.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace poincare::symcore {

BiPoly::BiPoly(const mpq_class& c) {
  if (c != 0) t_[{0, 0}] = c;
}
BiPoly BiPoly::r1() { return mono(1, 0); }
BiPoly BiPoly::r2() { return mono(0, 1); }
BiPoly BiPoly::mono(int i, int j, const mpq_class& c) {
  BiPoly p;
  p.add_term(i, j, c);
  return p;
}

mpq_class BiPoly::coeff(int i, int j) const {
  auto it = t_.find({i, j});
  return it == t_.end() ? mpq_class(0) : it->second;
}

void BiPoly::add_term(int i, int j, const mpq_class& c) {
  if (c == 0) return;
  auto [it, fresh] = t_.try_emplace({i, j}, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) t_.erase(it);
  }
}

int BiPoly::deg1() const {
  int d = -1;
  for (auto& [m, c] : t_) d = std::max(d, m.first);
  return d;
}
int BiPoly::deg2() const {
  int d = -1;
  for (auto& [m, c] : t_) d = std::max(d, m.second);
  return d;
}
int BiPoly::total_degree() const {
  int d = -1;
  for (auto& [m, c] : t_) d = std::max(d, m.first + m.second);
  return d;
}

std::optional<mpq_class> BiPoly::as_constant() const {
  if (t_.empty()) return mpq_class(0);
  if (t_.size() == 1 && t_.begin()->first == Mono{0, 0}) return t_.begin()->second;
  return std::nullopt;
}

BiPoly BiPoly::operator+(const BiPoly& o) const {
  BiPoly r = *this;
  for (auto& [m, c] : o.t_) r.add_term(m.first, m.second, c);
  return r;
}
BiPoly BiPoly::operator-(const BiPoly& o) const {
  BiPoly r = *this;
  for (auto& [m, c] : o.t_) r.add_term(m.first, m.second, -c);
  return r;
}
BiPoly BiPoly::operator*(const BiPoly& o) const {
  BiPoly r;
  for (auto& [m, c] : t_)
    for (auto& [n, d] : o.t_) r.add_term(m.first + n.first, m.second + n.second, c * d);
  return r;
}
BiPoly BiPoly::operator*(const mpq_class& s) const {
  BiPoly r;
  if (s == 0) return r;
  for (auto& [m, c] : t_) r.t_[m] = c * s;
  return r;
}

BiPoly BiPoly::pow(int n) const {
  BiPoly r(1), b = *this;
  while (n > 0) {
    if (n & 1) r = r * b;
    n >>= 1;
    if (n) b = b * b;
  }
  return r;
}

BiPoly BiPoly::d1() const {
  BiPoly r;
  for (auto& [m, c] : t_)
    if (m.first > 0) r.add_term(m.first - 1, m.second, c * m.first);
  return r;
}
BiPoly BiPoly::d2() const {
  BiPoly r;
  for (auto& [m, c] : t_)
    if (m.second > 0) r.add_term(m.first, m.second - 1, c * m.second);
  return r;
}
BiPoly BiPoly::swapped() const {
  BiPoly r;
  for (auto& [m, c] : t_) r.t_[{m.second, m.first}] = c;
  return r;
}

// long division in r1; g must have positive r1-degree with a constant leading
// r1-coefficient
std::optional<BiPoly> BiPoly::divide_r1(const BiPoly& g) const {
  int dg = g.deg1();
  BiPoly lead;
  for (auto& [m, c] : g.t_)
    if (m.first == dg) lead.add_term(0, m.second, c);
  auto lc = lead.as_constant();
  if (!lc || *lc == 0) return std::nullopt;
  BiPoly q, rem = *this;
  while (!rem.is_zero()) {
    int dr = rem.deg1();
    if (dr < dg) return std::nullopt;
    BiPoly step;
    for (auto& [m, c] : rem.t_)
      if (m.first == dr) step.add_term(dr - dg, m.second, c / *lc);
    q = q + step;
    rem = rem - step * g;
  }
  return q;
}

std::optional<BiPoly> BiPoly::divide_exact(const BiPoly& g) const {
  if (g.is_zero()) return std::nullopt;
  if (auto c = g.as_constant()) return *this * (1 / *c);
  if (g.deg1() > 0) return divide_r1(g);
  auto q = swapped().divide_r1(g.swapped());
  if (!q) return std::nullopt;
  return q->swapped();
}

std::string BiPoly::dump() const {
  std::vector<std::pair<Mono, mpq_class>> v(t_.begin(), t_.end());
  std::sort(v.begin(), v.end(), [](auto& a, auto& b) {
    int da = a.first.first + a.first.second, db = b.first.first + b.first.second;
    if (da != db) return da > db;
    return a.first.first > b.first.first;
  });
  std::ostringstream os;
  for (auto& [m, c] : v) os << m.first << ' ' << m.second << ' ' << c.get_str() << '\n';
  return os.str();
}

const BiPoly& factor_v() {
  static const BiPoly v = BiPoly::r2() - BiPoly::r1();
  return v;
}
const BiPoly& factor_p1() {
  static const BiPoly p = BiPoly(1) + BiPoly::mono(2, 0);
  return p;
}
const BiPoly& factor_p2() {
  static const BiPoly p = BiPoly(1) + BiPoly::mono(0, 2);
  return p;
}

}  // namespace poincare::symcore
