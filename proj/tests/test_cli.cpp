#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <sstream>

#include "poincare/cli/checks.hpp"
#include "poincare/cli/config.hpp"
#include "poincare/cli/constants.hpp"
#include "poincare/cli/report.hpp"
#include "poincare/numkit/parallel.hpp"

using namespace poincare::cli;

TEST_CASE("config validation") {
  RunConfig c;
  CHECK_NOTHROW(c.validate());
  c.window = 0;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c = RunConfig{};
  c.quad_order = 12;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  CHECK(parse_format("csv") == Format::csv);
  CHECK_THROWS(parse_format("xml"));
}

TEST_CASE("thread count: flag wins over the environment") {
  RunConfig c;
  setenv("POINCARE_THREADS", "1", 1);
  CHECK(c.apply_threads() == 1);
  c.threads = 2;
  CHECK(c.apply_threads() == 2);
  setenv("POINCARE_THREADS", "zero", 1);
  c.threads = 0;
  CHECK_THROWS_AS(c.apply_threads(), std::invalid_argument);
  unsetenv("POINCARE_THREADS");
  c.threads = 1;
  c.apply_threads();
}

TEST_CASE("record schema and serialization") {
  auto r = compare("x", {{"a", 1}}, 1.0, 1.0 + 1e-12, 1e-10, Measure::relative);
  CHECK(r.pass);
  auto j = to_json(r);
  for (const char* key : {"check", "inputs", "lhs", "rhs", "abs_err", "rel_err", "tol", "pass"}) CHECK(j.contains(key));
  CHECK(j.size() == 8);
  auto bad = failure("y", {}, 1e-3, "boom");
  CHECK(!bad.pass);
  CHECK(to_json(bad)["lhs"].is_null());
  std::ostringstream os;
  write_records(os, {r, bad}, Format::csv);
  CHECK(os.str().rfind("check,inputs,lhs,rhs,abs_err,rel_err,tol,pass\n", 0) == 0);
  std::ostringstream js;
  write_records(js, {r}, Format::json);
  CHECK(nlohmann::json::parse(js.str())["check"] == "x");
}

TEST_CASE("constants file round trip, read-only once written") {
  auto path = (std::filesystem::temp_directory_path() / "poincare_constants_test.json").string();
  std::filesystem::remove(path);
  Constants c;
  c.scale = 5.5;
  c.c_sec = 2.7;
  save_constants(c, path, false);
  auto d = load_constants(path);
  CHECK(d.scale == 5.5);
  CHECK(d.c_sec == 2.7);
  CHECK_THROWS(save_constants(c, path, false));
  CHECK_NOTHROW(save_constants(c, path, true));
  std::filesystem::remove(path);
  CHECK_THROWS(load_constants(path));
}

TEST_CASE("the installed constants are loadable") {
  RunConfig cfg;
  auto k = load_constants(cfg.constants_path());
  CHECK(k.scale == doctest::Approx(4 * 1.2020569031595942 * 1.2020569031595942).epsilon(1e-10));
  CHECK(k.d7_scalar == doctest::Approx(1).epsilon(1e-5));
}

TEST_CASE("queries") {
  auto v = vanishing(6);
  REQUIRE(v.size() == 2);
  for (auto& r : v) CHECK(r.pass);
  auto h = eval_h(0);
  CHECK(h[0].lhs == doctest::Approx(7.0 / 3 - 64 / (9 * 3.14159265358979323846)).epsilon(1e-15));
  for (auto& r : ldr_query(5, 2)) CHECK(r.pass);
  auto l = lemma_check(12, 4, "gcd-power", 2, 100000);
  CHECK(l[0].pass);
  CHECK(!lemma_check(12, 1.5, "log-gcd", 2, 10)[0].pass);
}

TEST_CASE("report is deterministic for a fixed seed") {
  RunConfig cfg;
  Constants k = load_constants(cfg.constants_path());
  auto a = run_report(cfg, k, {9, 10}, false), b = run_report(cfg, k, {9, 10}, false);
  std::ostringstream sa, sb;
  write_report(sa, a, cfg, k);
  write_report(sb, b, cfg, k);
  CHECK(sa.str() == sb.str());
  CHECK(a.suites.size() == 2);
  cfg.format = Format::csv;
  std::ostringstream sc;
  write_report(sc, a, cfg, k);
  CHECK(sc.str().rfind("criterion,check,", 0) == 0);
}
