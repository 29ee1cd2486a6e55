#include "poincare/cli/checks.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "poincare/convolution/convolution.hpp"
#include "poincare/eisenstein/eisenstein.hpp"
#include "poincare/fourier/fourier.hpp"
#include "poincare/hsolver/fit.hpp"
#include "poincare/hsolver/hclosed.hpp"
#include "poincare/icoeff/icoeff.hpp"
#include "poincare/numkit/arith.hpp"
#include "poincare/numkit/legendre.hpp"
#include "poincare/numkit/mp.hpp"
#include "poincare/numkit/special.hpp"
#include "poincare/symcore/split.hpp"

namespace poincare::cli {

using nlohmann::json;

CheckRecord compare(std::string check, json inputs, double lhs, double rhs, double tol, Measure m) {
  CheckRecord r;
  r.check = std::move(check);
  r.inputs = std::move(inputs);
  r.lhs = lhs;
  r.rhs = rhs;
  r.abs_err = std::abs(lhs - rhs);
  r.rel_err = rhs != 0 ? r.abs_err / std::abs(rhs) : r.abs_err;
  r.tol = tol;
  const double e = m == Measure::absolute ? r.abs_err : r.rel_err;
  r.pass = std::isfinite(e) && e <= tol;
  return r;
}

CheckRecord residual(std::string check, json inputs, double res, double rel, double tol, Measure m) {
  CheckRecord r = compare(std::move(check), std::move(inputs), res, 0, tol, Measure::absolute);
  r.rel_err = rel;
  const double e = m == Measure::absolute ? r.abs_err : r.rel_err;
  r.pass = std::isfinite(e) && e <= tol;
  return r;
}

CheckRecord failure(std::string check, json inputs, double tol, const std::string& what) {
  CheckRecord r;
  r.check = std::move(check);
  r.inputs = std::move(inputs);
  r.inputs["error"] = what;
  r.lhs = r.rhs = r.abs_err = r.rel_err = std::numeric_limits<double>::quiet_NaN();
  r.tol = tol;
  r.pass = false;
  return r;
}

namespace {
// JSON has no NaN or infinity
json num(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }
}  // namespace

json to_json(const CheckRecord& r) {
  return {{"check", r.check},     {"inputs", r.inputs},       {"lhs", num(r.lhs)},
          {"rhs", num(r.rhs)},    {"abs_err", num(r.abs_err)}, {"rel_err", num(r.rel_err)},
          {"tol", r.tol},         {"pass", r.pass}};
}

bool Suite::pass() const {
  return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](auto& c) { return c.pass; });
}

const CheckRecord* Suite::worst() const {
  const CheckRecord* w = nullptr;
  for (auto& c : checks) {
    if (!c.pass) return &c;
    if (!w || std::min(c.abs_err, c.rel_err) > std::min(w->abs_err, w->rel_err)) w = &c;
  }
  return w;
}

namespace {

template <class F>
void guarded(std::vector<CheckRecord>& out, const std::string& name, json inputs, double tol, F&& f) {
  try {
    out.push_back(f(inputs));
  } catch (const std::exception& e) {
    out.push_back(failure(name, inputs, tol, e.what()));
  }
}

double sigma2d(int n) { return double(numkit::sigma2(std::abs(n))); }

// H(r1, r2) = h(u) / |r2 - r1|^3 in 50 digits
Real50 H50(const Real50& r1, const Real50& r2) {
  Real50 v = r2 - r1;
  Real50 u = (r1 * r2 + 1) / v;
  return hsolver::h_closed_32(u) / abs(v * v * v);
}

// 7th derivative along (1,1) by central differences, Richardson over h and h/2
double d7_fd(double r1, double r2) {
  static const int binom[8] = {1, 7, 21, 35, 35, 21, 7, 1};
  auto delta = [&](const Real50& h) {
    Real50 acc = 0;
    for (int k = 0; k <= 7; ++k) {
      Real50 t = (Real50(7) / 2 - k) * h;
      Real50 term = binom[k] * H50(Real50(r1) + t, Real50(r2) + t);
      acc += k % 2 ? -term : term;
    }
    return acc / pow(h, 7);
  };
  Real50 h("1e-3");
  Real50 a = delta(h), b = delta(h / 2);
  return static_cast<double>((4 * b - a) / 3);
}

bool pair_nondegenerate(int n1, int n2) { return n1 != 0 && n2 != 0 && n1 + n2 != 0; }

Suite c01_ode() {
  Suite s;
  auto h = [](auto u) { return hsolver::h_closed_32(u); };
  for (int k = 0; k <= 100; ++k) {
    const double u = -20 + 0.4 * k;
    guarded(s.checks, "ode_residual_h32", {{"u", u}}, 1e-8, [&](const json& in) {
      double r = std::abs(hsolver::ode_residual_jet(h, 1.5, 12, u));
      return residual("ode_residual_h32", in, r, r * std::pow(1 + u * u, 1.5), 1e-8,
                      Measure::absolute);
    });
  }
  guarded(s.checks, "ode_residual_fitted_ansatz", {{"n", 1}, {"points", 101}}, 1e-8, [&](const json& in) {
    const auto& fit = hsolver::fit_halfint(1);
    return residual("ode_residual_fitted_ansatz", in, fit.residual_bound, fit.residual_bound, 1e-8,
                    Measure::absolute);
  });
  return s;
}

Suite c02_decay() {
  Suite s;
  guarded(s.checks, "decay_u3h", {{"u_small", 1e3}, {"u_large", 1e4}}, 0.05, [&](const json& in) {
    auto u3h = [](double u) {
      Real50 U = u;
      return static_cast<double>(U * U * U * hsolver::h_closed_32(U));
    };
    return compare("decay_u3h", in, u3h(1e4), u3h(1e3), 0.05, Measure::relative);
  });
  guarded(s.checks, "decay_fitted_ansatz", {{"n", 1}}, 0.05, [&](const json& in) {
    return compare("decay_fitted_ansatz", in, hsolver::fit_halfint(1).decay_ratio, 1, 0.05, Measure::relative);
  });
  return s;
}

Suite c03_wronskian() {
  Suite s;
  for (int n = 1; n <= 6; ++n) {
    auto w = numkit::legendre_wronskian(n);
    const mpq_class target(1, n);
    const bool exact = w.size() == 1 && w[0] == target;
    double lhs = w.empty() ? 0 : w[0].get_d();
    // any non-constant part counts as error
    double extra = 0;
    for (size_t j = 1; j < w.size(); ++j) extra += std::abs(w[j].get_d());
    CheckRecord r = compare("legendre_wronskian", {{"n", n}}, lhs, target.get_d(), 0, Measure::absolute);
    r.abs_err += extra;
    r.rel_err = r.abs_err * n;
    r.pass = exact;
    s.checks.push_back(r);
  }
  return s;
}

Suite c04_symbolic() {
  Suite s;
  guarded(s.checks, "d7_arctan_terms", {{"k", 7}}, 0, [&](const json& in) {
    auto e = symcore::apply_D(symcore::normalize(symcore::build_H()), 7);
    int atan_terms = 0;
    for (auto& [key, t] : e.terms())
      if (key.kA || key.kt1 || key.kt2) ++atan_terms;
    return compare("d7_arctan_terms", in, atan_terms, 0, 0, Measure::absolute);
  });
  const double pts[5][2] = {{0.3, 1.7}, {-0.5, 0.8}, {1.2, 2.5}, {-2.0, -0.4}, {0.1, -1.3}};
  for (auto& p : pts)
    guarded(s.checks, "d7_split_vs_fd", {{"r1", p[0]}, {"r2", p[1]}}, 1e-5, [&](const json& in) {
      const auto& sp = symcore::d7_split();
      double t = symcore::T1_eval(sp, p[0], p[1]) + symcore::T2_eval(sp, p[0], p[1]);
      return compare("d7_split_vs_fd", in, t, d7_fd(p[0], p[1]), 1e-5, Measure::relative);
    });
  return s;
}

Suite c05_i1_alpha() {
  Suite s;
  for (double y : {0.5, 1.0, 2.0})
    for (int n1 = -3; n1 <= 3; ++n1)
      for (int n2 = -3; n2 <= 3; ++n2) {
        if (!pair_nondegenerate(n1, n2)) continue;
        guarded(s.checks, "i1_vs_alpha_k72", {{"n1", n1}, {"n2", n2}, {"y", y}}, 1e-10, [&](const json& in) {
          double lhs = 4 / (y * n1 * n1 * n2 * n2) * sigma2d(n1) * sigma2d(n2) * icoeff::i1_closed(n1, n2, y);
          double rhs = icoeff::alpha_pair(n1, n2, y) * std::sqrt(y) *
                       numkit::bessel_k72(2 * pi * std::abs(n1 + n2) * y);
          return compare("i1_vs_alpha_k72", in, lhs, rhs, 1e-10, Measure::relative);
        });
      }
  return s;
}

Suite c06_quadrature(const RunConfig& cfg, const Constants& k) {
  Suite s;
  const int pts[5][2] = {{1, 2}, {1, 1}, {2, -1}, {1, -3}, {2, 3}};
  for (auto& p : pts) {
    const double y = 0.5;
    guarded(s.checks, "closed_vs_quadrature", {{"n1", p[0]}, {"n2", p[1]}, {"y", y}}, 1e-3,
            [&](const json& in) {
              icoeff::QuadOptions o;
              o.order = cfg.quad_order;
              Estimate q = icoeff::i_quadrature(p[0], p[1], y, cfg.quad_tol, o);
              double closed = icoeff::i1_closed(p[0], p[1], y) + icoeff::i2_closed(p[0], p[1], y);
              return compare("closed_vs_quadrature", in, closed, k.d7_scalar * q.value, 1e-3, Measure::relative);
            });
  }
  return s;
}

Suite c07_pair_pde(const Constants& k) {
  Suite s;
  for (double y : {0.5, 1.0, 2.0})
    for (int n1 = -3; n1 <= 3; ++n1)
      for (int n2 = -3; n2 <= 3; ++n2) {
        if (!pair_nondegenerate(n1, n2)) continue;
        guarded(s.checks, "pair_pde", {{"n1", n1}, {"n2", n2}, {"y", y}, {"s", k.scale}}, 1e-6,
                [&](const json& in) {
                  auto r = fourier::pde_mode_residual(n1, n2, y, k.scale);
                  return residual("pair_pde", in, r.residual, r.relative, 1e-6, Measure::relative);
                });
      }
  return s;
}

const double kFieldGrid[3] = {0.1, 0.3, 0.45};
const double kFieldHeights[3] = {0.9, 1.1, 1.4};

Suite c08_field(const RunConfig& cfg, const Constants& k) {
  Suite s;
  for (double y : kFieldHeights)
    for (double x : kFieldGrid)
      guarded(s.checks, "field_pde", {{"x", x}, {"y", y}, {"W", cfg.window}, {"step", 1e-2}}, 1e-2,
              [&](const json& in) {
                auto r = fourier::field_pde_residual({x, y}, cfg.window, 1e-2, k.scale);
                CheckRecord c = compare("field_pde", in, r.laplace_minus_12, -r.source, 1e-2, Measure::absolute);
                return c;
              });
  return s;
}

Suite c09_reflection(const RunConfig& cfg) {
  Suite s;
  std::mt19937_64 rng(cfg.seed);
  std::uniform_real_distribution<double> mag(0.1, 10), coin(0, 1);
  for (int i = 0; i < 100; ++i) {
    double x = mag(rng);
    if (coin(rng) < 0.5) x = -x;
    const double ax = std::abs(x);
    const double rhs = 8 * (-15 * std::log(ax) + 1 / (x * x) - 15);
    s.checks.push_back(compare("g_reflection", {{"x", x}}, convolution::g_eval(x) + convolution::g_eval(-x), rhs,
                               1e-12, Measure::absolute));
  }
  return s;
}

Suite c10_alpha_tilde(const RunConfig& cfg) {
  Suite s;
  std::mt19937_64 rng(cfg.seed + 1);
  std::uniform_int_distribution<int> pick(-30, 30);
  while (s.checks.size() < 50) {
    int m = pick(rng), n = pick(rng);
    if (!pair_nondegenerate(m, n)) continue;
    guarded(s.checks, "alpha_tilde", {{"m", m}, {"n", n}}, 1e-10, [&](const json& in) {
      return compare("alpha_tilde", in, convolution::alpha_tilde(m, n), icoeff::alpha_tilde(m, n), 1e-10,
                     Measure::relative);
    });
  }
  return s;
}

// (d, r) with d not dividing r
const long kNonDividing[20][2] = {{2, 1},  {3, 1},  {4, 1},   {4, 2},  {5, 2},  {6, 4},  {7, 3},
                                  {8, 6},  {9, 3},  {10, 4},  {12, 8}, {12, 5}, {15, 6}, {16, 12},
                                  {10, -3}, {7, -5}, {11, 7}, {13, 1}, {14, 21}, {16, -4}};

Suite c11_hurwitz() {
  Suite s;
  for (auto& dr : kNonDividing) {
    const long d = dr[0], r = dr[1];
    guarded(s.checks, "ldr_nondividing", {{"d", d}, {"r", r}}, 1e-10, [&](const json& in) {
      auto L = convolution::l_dr_minus2(d, r);
      for (auto& p : L.pairs) {
        CheckRecord c = compare("hurwitz_pair", {{"d", d}, {"r", r}, {"c", p.c}, {"d_minus_c", d - p.c}}, p.sum, 0,
                                1e-10, Measure::absolute);
        c.pass = c.pass && p.exact_zero;
        s.checks.push_back(c);
      }
      const double target = -convolution::g2() * double(numkit::sigma2(std::abs(r)));
      return compare("ldr_nondividing", in, L.value.value(), target, 1e-10, Measure::absolute);
    });
  }
  return s;
}

Suite c12_ldr_dividing() {
  Suite s;
  for (long d = 1; d <= 10; ++d)
    for (long m = 1; m <= 10; ++m) {
      const long r = d * m;
      guarded(s.checks, "ldr_dividing", {{"d", d}, {"r", r}}, 1e-12, [&](const json& in) {
        auto L = convolution::l_dr_minus2(d, r);
        const auto& z = numkit::zeta_constants();
        const double closed = -60 * z.zeta_prime_minus2 - double(r) * double(r) * z.zeta2 -
                               convolution::g2() * double(numkit::sigma2(r));
        return compare("ldr_dividing", in, L.value.value(), closed, 1e-12, Measure::relative);
      });
    }
  return s;
}

Suite c13_vanishing() {
  Suite s;
  std::vector<long> rs;
  for (long r = 1; r <= 100; ++r) rs.push_back(r);
  rs.push_back(1000);
  rs.push_back(9999);
  for (long r : rs)
    for (auto& c : vanishing(r)) s.checks.push_back(c);
  return s;
}

Suite c14_lemma() {
  Suite s;
  for (long d : {1, 8, 12, 30})
    for (double sv : {3.0, 4.0})
      for (const char* v : {"log-gcd", "gcd-power"})
        for (auto& c : lemma_check(d, sv, v, 2, 1000000)) s.checks.push_back(c);
  return s;
}

Suite c15_eisenstein(const RunConfig& cfg) {
  Suite s;
  const double pts[6][2] = {{0, 1}, {0.25, 1}, {0.5, 1.2}, {-0.3, 1.5}, {0.1, 2}, {0.45, 3}};
  for (auto& p : pts)
    for (auto& c : eval_eisenstein(p[0], p[1], 1000, 30)) s.checks.push_back(c);
  std::mt19937_64 rng(cfg.seed + 2);
  std::uniform_int_distribution<long> ent(-9, 9);
  std::uniform_real_distribution<double> ux(-0.5, 0.5), uy(0.5, 2);
  while (s.checks.size() < 106) {
    long m1 = ent(rng), n1 = ent(rng), m2 = ent(rng), n2 = ent(rng);
    if (m1 * n2 - n1 * m2 == 0) continue;
    const double x = ux(rng), y = uy(rng);
    json in = {{"m1", m1}, {"n1", n1}, {"m2", m2}, {"n2", n2}, {"x", x}, {"y", y}};
    double e = eisenstein::unfold_identity_check(m1, n1, m2, n2, {x, y});
    s.checks.push_back(residual("unfolding_identities", in, e, e, 1e-12, Measure::absolute));
  }
  return s;
}

}  // namespace

const char* criterion_name(int c) {
  static const char* names[kCriteria] = {
      "ODE residual of h_{3/2}",         "decay |u|^3 h",
      "Legendre Wronskian",              "symbolic D^7 H",
      "I1 vs alpha K_{7/2}",             "closed forms vs quadrature",
      "per-pair PDE",                    "full-field PDE",
      "g reflection",                    "alpha~ vs alpha",
      "Hurwitz pair cancellation",       "L_{d,r}(-2) for d | r",
      "vanishing identity A_r",          "Dirichlet lemma",
      "Eisenstein consistency"};
  return c >= 1 && c <= kCriteria ? names[c - 1] : "?";
}

Suite acceptance(int criterion, const RunConfig& cfg, const Constants& k) {
  Suite s;
  switch (criterion) {
    case 1: s = c01_ode(); break;
    case 2: s = c02_decay(); break;
    case 3: s = c03_wronskian(); break;
    case 4: s = c04_symbolic(); break;
    case 5: s = c05_i1_alpha(); break;
    case 6: s = c06_quadrature(cfg, k); break;
    case 7: s = c07_pair_pde(k); break;
    case 8: s = c08_field(cfg, k); break;
    case 9: s = c09_reflection(cfg); break;
    case 10: s = c10_alpha_tilde(cfg); break;
    case 11: s = c11_hurwitz(); break;
    case 12: s = c12_ldr_dividing(); break;
    case 13: s = c13_vanishing(); break;
    case 14: s = c14_lemma(); break;
    case 15: s = c15_eisenstein(cfg); break;
    default: throw std::invalid_argument("criterion must be in 1..15");
  }
  s.criterion = criterion;
  s.name = criterion_name(criterion);
  return s;
}

std::vector<CheckRecord> diagnostics(const RunConfig& cfg, const Constants& k) {
  std::vector<CheckRecord> out;
  // Sigma00 taken as c_inf E_3 (all diagonal pairs) instead of c_inf y^3
  guarded(out, "field_pde_sigma00_lattice", {{"x", 0.3}, {"y", 1.1}, {"W", cfg.window}}, 1e-2, [&](const json& in) {
    const eisenstein::UpperHalfPoint z{0.3, 1.1};
    const double h = 1e-2;
    auto extra = [&](double x, double y) {
      return k.scale * (fourier::sigma00_term({x, y}, 400) - fourier::sigma00_identity(y));
    };
    const double lap = z.y * z.y *
                           (extra(z.x + h, z.y) + extra(z.x - h, z.y) + extra(z.x, z.y + h) + extra(z.x, z.y - h) -
                            4 * extra(z.x, z.y)) /
                           (h * h) -
                       12 * extra(z.x, z.y);
    auto base = fourier::field_pde_residual(z, cfg.window, h, k.scale);
    return compare("field_pde_sigma00_lattice", in, base.laplace_minus_12 + lap, -base.source, 1e-2,
                   Measure::absolute);
  });
  guarded(out, "degenerating_family", {{"m", 1}, {"n", 0}, {"x", 0.3}, {"y", 1.1}, {"det", 1e-4}}, 1e-2,
          [&](const json& in) {
            const eisenstein::UpperHalfPoint z{0.3, 1.1};
            const double target = hsolver::h32_c_inf() * std::pow(z.y / (z.x * z.x + z.y * z.y), 3);
            return compare("degenerating_family", in, fourier::degenerating_family(1, 0, z, 1e-4), target, 1e-2,
                           Measure::relative);
          });
  guarded(out, "pair_pde_fd_oracle", {{"n1", 1}, {"n2", 2}, {"y", 1.0}, {"h", 1e-3}}, 1e-6, [&](const json& in) {
    auto r = fourier::pde_mode_residual_fd(1, 2, 1.0, k.scale);
    return residual("pair_pde_fd_oracle", in, r.residual, r.relative, 1e-6, Measure::relative);
  });
  guarded(out, "homogeneous_part", {{"n1", 2}, {"n2", -3}, {"y", 1.0}}, 1e-10, [&](const json& in) {
    double r = fourier::homogeneous_residual(2, -3, 1.0);
    return residual("homogeneous_part", in, r, r, 1e-10, Measure::relative);
  });
  // exploratory, not asserted: tol 0
  for (long r : {1L, 6L})
    guarded(out, "smoothed_partial_sum", {{"r", r}, {"N", 1000}}, 0, [&](const json& in) {
      auto p = convolution::smoothed_partial_sum(r, 1000);
      CheckRecord c = compare("smoothed_partial_sum", in, p.at_N, p.at_2N, 0, Measure::absolute);
      c.pass = false;
      return c;
    });
  return out;
}

std::vector<CheckRecord> eval_h(double u) {
  std::vector<CheckRecord> out;
  guarded(out, "h_closed_vs_fit", {{"u", u}}, 1e-10, [&](const json& in) {
    return compare("h_closed_vs_fit", in, hsolver::h_closed_32(u), hsolver::fit_halfint(1)(u), 1e-10,
                   Measure::relative);
  });
  guarded(out, "ode_residual_h32", {{"u", u}}, 1e-8, [&](const json& in) {
    double r = std::abs(hsolver::ode_residual_jet([](auto v) { return hsolver::h_closed_32(v); }, 1.5, 12, u));
    return residual("ode_residual_h32", in, r, r, 1e-8, Measure::absolute);
  });
  return out;
}

std::vector<CheckRecord> eval_eisenstein(double x, double y, int cutoff, int modes) {
  std::vector<CheckRecord> out;
  guarded(out, "eisenstein_fourier_vs_lattice", {{"x", x}, {"y", y}, {"cutoff", cutoff}, {"modes", modes}}, 1e-5,
          [&](const json& in) {
            return compare("eisenstein_fourier_vs_lattice", in, eisenstein::eisenstein_fourier({x, y}, modes),
                           eisenstein::eisenstein_lattice(1.5, {x, y}, cutoff), 1e-5, Measure::absolute);
          });
  return out;
}

std::vector<CheckRecord> icoeff_query(int n1, int n2, double y, bool quad, const RunConfig& cfg,
                                      const Constants& k) {
  std::vector<CheckRecord> out;
  const json in = {{"n1", n1}, {"n2", n2}, {"y", y}};
  if (pair_nondegenerate(n1, n2))
    guarded(out, "i1_vs_alpha_k72", in, 1e-10, [&](const json& j) {
      double lhs = 4 / (y * n1 * n1 * n2 * n2) * sigma2d(n1) * sigma2d(n2) * icoeff::i1_closed(n1, n2, y);
      double rhs = icoeff::alpha_pair(n1, n2, y) * std::sqrt(y) * numkit::bessel_k72(2 * pi * std::abs(n1 + n2) * y);
      return compare("i1_vs_alpha_k72", j, lhs, rhs, 1e-10, Measure::relative);
    });
  if (n1 != 0 && n1 + n2 == 0)
    guarded(out, "limit_lower_orders", in, 1e-20, [&](const json& j) {
      auto l = icoeff::i_limit_opposite(n1, y);
      return residual("limit_lower_orders", j, l.lower_orders, l.lower_orders, 1e-20, Measure::absolute);
    });
  if (quad)
    guarded(out, "closed_vs_quadrature", in, 1e-3, [&](const json& j) {
      icoeff::QuadOptions o;
      o.order = cfg.quad_order;
      Estimate q = icoeff::i_quadrature(n1, n2, y, cfg.quad_tol, o);
      return compare("closed_vs_quadrature", j, icoeff::i_total(n1, n2, y), k.d7_scalar * q.value, 1e-3,
                     Measure::relative);
    });
  else
    guarded(out, "i_total", in, 0, [&](const json& j) {
      double v = icoeff::i_total(n1, n2, y);
      return compare("i_total", j, v, v, 0, Measure::absolute);
    });
  return out;
}

std::vector<CheckRecord> pde_check(int n1, int n2, double y, const Constants& k) {
  std::vector<CheckRecord> out;
  guarded(out, "pair_pde", {{"n1", n1}, {"n2", n2}, {"y", y}, {"s", k.scale}}, 1e-6, [&](const json& in) {
    auto r = fourier::pde_mode_residual(n1, n2, y, k.scale);
    return residual("pair_pde", in, r.residual, r.relative, 1e-6, Measure::relative);
  });
  return out;
}

std::vector<CheckRecord> assemble_query(double x, double y, const RunConfig& cfg, const Constants& k) {
  std::vector<CheckRecord> out;
  const json in = {{"x", x}, {"y", y}, {"W", cfg.window}};
  guarded(out, "field_value", in, 0, [&](const json& j) {
    auto f = fourier::assemble_f({x, y}, cfg.window);
    // lhs the truncated value, rhs the same minus the outermost-pair tail estimate
    CheckRecord c = compare("field_value", j, f.value, f.value - f.tail, 0, Measure::absolute);
    c.tol = f.tail;
    c.pass = true;
    return c;
  });
  guarded(out, "field_pde", in, 1e-2, [&](const json& j) {
    auto r = fourier::field_pde_residual({x, y}, cfg.window, 1e-2, k.scale);
    return compare("field_pde", j, r.laplace_minus_12, -r.source, 1e-2, Measure::absolute);
  });
  return out;
}

std::vector<CheckRecord> vanishing(long r) {
  std::vector<CheckRecord> out;
  guarded(out, "vanishing_identity", {{"r", r}}, 1e-10, [&](const json& in) {
    auto rec = convolution::a_r_identity(r);
    // the coefficients over zeta(2), zeta'(-2), g(2) must agree exactly as well
    const mpq_class sig2 = numkit::divisor_sigma(2, std::abs(r)), R2 = mpq_class(r) * r;
    const double coeff_gap = std::abs(mpq_class(rec.lhs.c_zeta2 + 2 * sig2 * R2).get_d()) +
                             std::abs(mpq_class(rec.lhs.c_zetap2 + 120 * sig2).get_d()) +
                             std::abs(rec.lhs.c_g2.get_d()) + std::abs(rec.lhs.remainder);
    out.push_back(residual("vanishing_coefficients", in, coeff_gap, coeff_gap, 0, Measure::absolute));
    return compare("vanishing_identity", in, rec.lhs_value, rec.rhs, 1e-10, Measure::relative);
  });
  return out;
}

std::vector<CheckRecord> ldr_query(long d, long r) {
  std::vector<CheckRecord> out;
  guarded(out, "ldr", {{"d", d}, {"r", r}}, 1e-10, [&](const json& in) {
    auto L = convolution::l_dr_minus2(d, r);
    for (auto& p : L.pairs) {
      CheckRecord c = compare("hurwitz_pair", {{"d", d}, {"r", r}, {"c", p.c}, {"d_minus_c", d - p.c}}, p.sum, 0, 1e-10,
                              Measure::absolute);
      c.pass = c.pass && p.exact_zero;
      out.push_back(c);
    }
    return compare(L.d_divides_r ? "ldr_dividing" : "ldr_nondividing", in, L.value.value(), L.closed_form,
                   L.d_divides_r ? 1e-12 : 1e-10, L.d_divides_r ? Measure::relative : Measure::absolute);
  });
  return out;
}

std::vector<CheckRecord> lemma_check(long d, double s, const std::string& variant, int k, long N) {
  std::vector<CheckRecord> out;
  const json in = {{"d", d}, {"s", s}, {"variant", variant}, {"k", k}, {"N", N}};
  guarded(out, "lemma_dirichlet", in, 1e-8, [&](const json& j) {
    auto v = convolution::parse_variant(variant);
    Estimate t = convolution::lemma_dirichlet_truncated(d, s, v, k, N);
    if (t.err > 1e-9) throw AccuracyError("lemma_check: truncation tail above 1e-9, raise N", t);
    return compare("lemma_dirichlet", j, t.value, convolution::lemma_dirichlet(d, s, v, k), 1e-8, Measure::absolute);
  });
  return out;
}

}  // namespace poincare::cli
