// command-line front end: single queries, the acceptance report, calibration
#include <fstream>
#include <iostream>
#include <memory>

#include <CLI11.hpp>

#include "poincare/cli/checks.hpp"
#include "poincare/cli/config.hpp"
#include "poincare/cli/constants.hpp"
#include "poincare/cli/report.hpp"

using namespace poincare::cli;

namespace {

struct Output {
  std::ofstream file;
  std::ostream& stream(const RunConfig& cfg) {
    if (cfg.out.empty()) return std::cout;
    file.open(cfg.out);
    if (!file) throw std::runtime_error("cannot open " + cfg.out);
    return file;
  }
};

int emit(const std::vector<CheckRecord>& recs, const RunConfig& cfg) {
  Output o;
  write_records(o.stream(cfg), recs, cfg.format);
  for (auto& r : recs)
    if (!r.pass) return 1;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Poincare-series and shifted-convolution verification"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string format = "json";

  auto common = [&](CLI::App* sub) {
    sub->add_option("--threads", cfg.threads, "worker threads (default: POINCARE_THREADS, then OpenMP)");
    sub->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--out", cfg.out, "write to this path instead of stdout");
    sub->add_option("--constants", cfg.constants, "constants file (default: data/constants.json)");
  };

  double u = 0;
  auto* eval_h_cmd = app.add_subcommand("eval-h", "h_{3/2}(u) against the fitted ansatz, and its ODE residual");
  eval_h_cmd->add_option("--u", u, "argument")->required();
  common(eval_h_cmd);

  double x = 0, y = 1;
  int cutoff = 1000, modes = 30;
  auto* eis_cmd = app.add_subcommand("eval-eisenstein", "E_{3/2}(x+iy): Fourier series against the lattice sum");
  eis_cmd->add_option("--x", x)->required();
  eis_cmd->add_option("--y", y)->required()->check(CLI::PositiveNumber);
  eis_cmd->add_option("--cutoff", cutoff, "lattice box half-width")->check(CLI::Range(1, 100000));
  eis_cmd->add_option("--modes", modes, "Fourier modes |n| <= N")->check(CLI::Range(0, 1000));
  common(eis_cmd);

  int n1 = 1, n2 = 2;
  bool quad = false;
  auto* ic_cmd = app.add_subcommand("icoeff", "I(n1,n2;y): closed forms, the I1 / alpha K_{7/2} relation, optional quadrature");
  ic_cmd->add_option("--n1", n1)->required();
  ic_cmd->add_option("--n2", n2)->required();
  ic_cmd->add_option("--y", y)->required()->check(CLI::PositiveNumber);
  ic_cmd->add_flag("--quad", quad, "also run the 2-D quadrature oracle");
  ic_cmd->add_option("--quad-tol", cfg.quad_tol);
  ic_cmd->add_option("--quad-order", cfg.quad_order);
  common(ic_cmd);

  auto* pde_cmd = app.add_subcommand("pde-check", "per-pair Fourier-mode PDE residual");
  pde_cmd->add_option("--n1", n1)->required();
  pde_cmd->add_option("--n2", n2)->required();
  pde_cmd->add_option("--y", y)->required()->check(CLI::PositiveNumber);
  common(pde_cmd);

  auto* asm_cmd = app.add_subcommand("assemble", "assembled f(z) and the full-field PDE residual");
  asm_cmd->add_option("--x", x)->required();
  asm_cmd->add_option("--y", y)->required()->check(CLI::Range(0.5, 1e3));
  asm_cmd->add_option("--W", cfg.window, "pair window");
  common(asm_cmd);

  long r = 1, d = 1;
  bool grid = false;
  auto* van_cmd = app.add_subcommand("vanishing", "A_r identity (regularized)");
  van_cmd->add_option("--r", r)->required();
  van_cmd->add_flag("--grid", grid, "all r from 1 to |R|");
  common(van_cmd);

  auto* ldr_cmd = app.add_subcommand("ldr", "L_{d,r}(-2) with the paired Hurwitz terms");
  ldr_cmd->add_option("--d", d)->required()->check(CLI::PositiveNumber);
  ldr_cmd->add_option("--r", r)->required();
  common(ldr_cmd);

  double s = 3;
  std::string variant = "log-gcd";
  int k = 2;
  long N = 1000000;
  auto* lem_cmd = app.add_subcommand("lemma-check", "Dirichlet-series lemma against truncated sums");
  lem_cmd->add_option("--d", d)->required()->check(CLI::PositiveNumber);
  lem_cmd->add_option("--s", s)->required();
  lem_cmd->add_option("--variant", variant)->check(CLI::IsMember({"log-gcd", "gcd-power"}));
  lem_cmd->add_option("--k", k);
  lem_cmd->add_option("--N", N)->check(CLI::Range(1L, 100000000L));
  common(lem_cmd);

  std::vector<int> criteria;
  bool no_diag = false;
  auto* rep_cmd = app.add_subcommand("report-all", "run the acceptance suite and write a report");
  rep_cmd->add_option("--criteria", criteria, "subset of 1..15")->check(CLI::Range(1, kCriteria));
  rep_cmd->add_option("--seed", cfg.seed);
  rep_cmd->add_option("--quad-tol", cfg.quad_tol);
  rep_cmd->add_option("--quad-order", cfg.quad_order);
  rep_cmd->add_option("--W", cfg.window);
  rep_cmd->add_flag("--no-diagnostics", no_diag);
  common(rep_cmd);

  bool force = false;
  auto* cal_cmd = app.add_subcommand("calibrate", "compute the calibration constants and write them once");
  cal_cmd->add_flag("--force", force, "replace an existing constants file");
  cal_cmd->add_option("--quad-tol", cfg.quad_tol);
  common(cal_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    cfg.format = parse_format(format);
    cfg.validate();
    cfg.apply_threads();
  } catch (const std::exception& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  }

  try {
    auto constants = [&] { return load_constants(cfg.constants_path()); };
    if (*eval_h_cmd) return emit(eval_h(u), cfg);
    if (*eis_cmd) return emit(eval_eisenstein(x, y, cutoff, modes), cfg);
    if (*ic_cmd) return emit(icoeff_query(n1, n2, y, quad, cfg, quad ? constants() : Constants{}), cfg);
    if (*pde_cmd) return emit(pde_check(n1, n2, y, constants()), cfg);
    if (*asm_cmd) return emit(assemble_query(x, y, cfg, constants()), cfg);
    if (*van_cmd) {
      if (r == 0 || std::labs(r) > 10000) throw std::invalid_argument("need 0 < |r| <= 10000");
      std::vector<CheckRecord> recs;
      for (long q = grid ? 1 : r; q <= (grid ? std::labs(r) : r); ++q)
        for (auto& c : vanishing(q)) recs.push_back(c);
      return emit(recs, cfg);
    }
    if (*ldr_cmd) {
      if (r == 0) throw std::invalid_argument("need r != 0");
      return emit(ldr_query(d, r), cfg);
    }
    if (*lem_cmd) {
      if (!(s > 1)) throw std::invalid_argument("need s > 1");
      return emit(lemma_check(d, s, variant, k, N), cfg);
    }
    if (*rep_cmd) {
      const Constants kc = constants();
      Report rep = run_report(cfg, kc, criteria, !no_diag, [](const Suite& su, double sec) {
        std::cerr << summary_line(su) << "  (" << sec << " s)\n";
      });
      Output o;
      write_report(o.stream(cfg), rep, cfg, kc);
      return rep.pass() ? 0 : 1;
    }
    if (*cal_cmd) {
      const std::string path = cfg.constants_path();
      Constants c = calibrate(cfg.quad_tol);
      save_constants(c, path, force);
      std::cerr << "wrote " << path << '\n';
      return 0;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
