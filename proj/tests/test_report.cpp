#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "carlab/errors.hpp"
#include "carlab/random_inputs.hpp"
#include "carlab/report.hpp"

using namespace carlab;

TEST_CASE("config defaults and round trip") {
  const Config c = config_from_json(json::object());
  CHECK(c.n_max == 8);
  CHECK(c.fock_n_max == 6);
  CHECK(c.seed == 20240611u);
  CHECK_FALSE(c.record_timing);
  const Config back = config_from_json(config_to_json(c));
  CHECK(back.vev_windows == c.vev_windows);
  CHECK(back.tol.rank_zero == c.tol.rank_zero);
}

TEST_CASE("config errors") {
  CHECK_THROWS_AS(config_from_json(json::array()), PreconditionError);
  CHECK_THROWS_AS(config_from_json(json{{"nmax", 3}}), PreconditionError);
  CHECK_THROWS_AS(config_from_json(json{{"n_max", "eight"}}), PreconditionError);
  CHECK_THROWS_AS(config_from_json(json{{"n_max", 0}}), PreconditionError);
  CHECK_THROWS_AS(config_from_json(json{{"tolerances", {{"algebriac", 1e-3}}}}), PreconditionError);
  const Config c = config_from_json(json{{"tolerances", {{"algebraic", 1e-9}}}, {"seed", 5}});
  CHECK(c.tol.algebraic == 1e-9);
  CHECK(c.seed == 5u);
}

TEST_CASE("config from a file") {
  const std::string path = "report_test_config.json";
  std::ofstream(path) << R"({"n_max": 10, "record_timing": true})";
  const Config c = load_config(path);
  CHECK(c.n_max == 10);
  CHECK(c.record_timing);
  CHECK_THROWS(load_config("does_not_exist.json"));
  std::remove(path.c_str());
}

TEST_CASE("check records") {
  const CheckRecord r = real_check("x.y", {{"a", 1}}, 1.0 + 1e-13, 1.0, 1e-12, 8);
  CHECK(r.pass);
  CHECK_FALSE(exact_check("x.z", {}, 2, 3, 8).pass);
  CHECK(complex_check("c", {}, cplx(0, 2), cplx(0, 2), 0.0, 4).pass);
  const json j = record_to_json(r, false);
  for (const char* key : {"check_id", "params", "value", "expected", "tolerance", "pass", "window", "runtime_ms"})
    CHECK(j.contains(key));
  CHECK(j["runtime_ms"] == 0);
  const std::string lines = json_lines({bool_check("b", {}, true, 0), bool_check("a", {}, true, 0)}, false);
  CHECK(lines.find("\"a\"") < lines.find("\"b\""));
}

TEST_CASE("suites are deterministic and pass") {
  Config c;
  for (const std::string& name : {std::string("index"), std::string("stabilizer")}) {
    const auto a = run_suite(name, c), b = run_suite(name, c);
    CHECK(json_lines(a, false) == json_lines(b, false));
    CHECK(all_pass(a));
    CHECK(std::is_sorted(a.begin(), a.end(),
                         [](const CheckRecord& x, const CheckRecord& y) { return x.check_id < y.check_id; }));
  }
  CHECK_THROWS_AS(run_suite("nonsense", c), PreconditionError);
  CHECK(suite_names().size() == 6);
}

TEST_CASE("convergence sweeps") {
  Config c;
  const Sweep hs = convergence_sweep("hs_shift", {6, 8, 10}, c);
  REQUIRE(hs.rows.size() == 3);
  CHECK(hs.monotone);
  for (const SweepRow& r : hs.rows) CHECK(r.value == doctest::Approx(1.0));
  const Sweep vev = convergence_sweep("vev", {4, 5, 6}, c);
  CHECK(vev.monotone);
  CHECK(vev.rows.back().delta == 0.0);
  CHECK(vev.rows.front().delta > vev.rows[1].delta);
  const std::string csv = sweep_csv(vev);
  CHECK(csv.rfind("check_id,window,value,delta", 0) == 0);
  CHECK_THROWS_AS(convergence_sweep("unknown", {4}, c), PreconditionError);
}

TEST_CASE("JSON round trips") {
  Rng rng(81);
  const TrigPolynomial a = random_trig(rng, 3, 1.0);
  CHECK(trig_from_json(trig_to_json(a)).coeffs().max_abs_diff(a.coeffs()) == 0.0);
  const LoopFunction f = random_loop(rng, -2, 2);
  const LoopFunction g = loop_from_json(loop_to_json(f));
  CHECK(g.winding() == f.winding());
  CHECK(g.fourier().max_abs_diff(f.fourier()) < 1e-15);
  const GradedElement x = random_element(rng, 0.4);
  CHECK(element_from_json(element_to_json(x), 0.4).distance(x) == 0.0);
  // one-sided real series are mirrored
  const TrigPolynomial one = trig_from_json(json{{"coeffs", {{1, 1.0, 0.0}}}});
  CHECK(one.coeffs().max_abs_diff(TrigPolynomial::cosine(1, 2.0).coeffs()) == 0.0);
}
