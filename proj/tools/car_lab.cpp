// car-lab: command-line front end for the verification suites and single checks.
// Exit status: 0 all checks pass, 1 some check failed, 2 bad input.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "carlab/commutant_lab.hpp"
#include "carlab/errors.hpp"
#include "carlab/fock_engine.hpp"
#include "carlab/report.hpp"
#include "carlab/selfdual_car.hpp"

using namespace carlab;

namespace {

int emit(const json& j, bool pass) {
  std::cout << j.dump(2) << "\n";
  return pass ? 0 : 1;
}

json hs_json(const HsReport& r) {
  return {{"upper", r.upper}, {"lower", r.lower}, {"converged", r.converged}, {"n_max", r.n_max}};
}

json check_json(const json& value, const json& expected, double tolerance, bool pass, int window) {
  return {{"value", value}, {"expected", expected}, {"tolerance", tolerance}, {"pass", pass}, {"window", window}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"car-lab: finite-window checks for CAR/CCR quantization of circle actions"};
  app.require_subcommand(1);
  std::string config_path;
  app.add_option("--config", config_path, "config JSON (default: $CAR_LAB_CONFIG, then built-in defaults)");

  std::string suite_name;
  auto* suite = app.add_subcommand("suite", "run a verification suite, JSON lines on stdout");
  suite->add_option("name", suite_name, "index | schwinger | weyl | grading | stabilizer | all")->required();

  std::string loop_path;
  int window = 0;
  auto* index = app.add_subcommand("index", "charge index of a loop");
  index->add_option("--loop", loop_path, "loop JSON")->required();
  index->add_option("--window", window, "n_max (default: smallest stable window)");

  std::string unitary_path;
  auto* implementable = app.add_subcommand("implementable", "HS norms and index sum for a loop unitary");
  implementable->add_option("--unitary", unitary_path, "loop JSON")->required();

  std::string a_path, b_path;
  auto* schwinger = app.add_subcommand("schwinger", "Fock-space commutator of dG(A), dG(B)");
  schwinger->add_option("--a", a_path, "trig polynomial JSON")->required();
  schwinger->add_option("--b", b_path, "trig polynomial JSON")->required();
  schwinger->add_option("--window", window, "Fock n_max (default from config)");

  double amplitude = 1.0;
  auto* vev = app.add_subcommand("vev", "vacuum expectation of exp(i c dG(A))");
  vev->add_option("--a", a_path, "trig polynomial JSON")->required();
  vev->add_option("--amplitude", amplitude, "c");
  vev->add_option("--window", window, "Fock n_max (default from config)");

  auto* covariance = app.add_subcommand("covariance", "gauge covariance exponent of an implementer");
  covariance->add_option("--loop", loop_path, "loop JSON")->required();
  covariance->add_option("--window", window, "Fock n_max (default from config)");

  std::string model_name = "clockshift";
  int m = 5, k = 1;
  auto* commutant_cmd = app.add_subcommand("commutant", "center identity in a clock-shift model");
  commutant_cmd->add_option("--model", model_name)->check(CLI::IsMember({"clockshift"}));
  commutant_cmd->add_option("--M", m, "modulus")->check(CLI::Range(2, 12));
  commutant_cmd->add_option("--K", k, "multiplicity")->check(CLI::Range(1, 4));

  std::string f_path, element_path;
  double theta = 0.0;
  auto* stabilizer = app.add_subcommand("stabilizer", "stabilizer action on a graded element");
  stabilizer->add_option("--f", f_path, "circle function JSON")->required();
  stabilizer->add_option("--element", element_path, "graded element JSON")->required();
  stabilizer->add_option("--theta", theta, "rotation angle theta0")->required();

  std::string gens_path, v1_path;
  auto* requirements = app.add_subcommand("requirements", "the four requirements for a generator space");
  requirements->add_option("--gens", gens_path, "{\"generators\": [...]} JSON")->required();
  requirements->add_option("--v1", v1_path, "loop JSON")->required();

  std::string word_path;
  auto* weyl = app.add_subcommand("weyl", "Weyl algebra tools");
  weyl->require_subcommand(1);
  auto* reduce_cmd = weyl->add_subcommand("reduce", "normal form of a Weyl word");
  reduce_cmd->add_option("--word", word_path, "word JSON")->required();

  std::string check_id, out_path;
  std::vector<int> windows;
  auto* sweep = app.add_subcommand("sweep", "convergence sweep as CSV");
  sweep->add_option("--check", check_id, "vev | pairing | hs_shift | schwinger")->required();
  sweep->add_option("--windows", windows, "window sizes")->required()->delimiter(',');
  sweep->add_option("--out", out_path, "CSV file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    const Config cfg = config_path.empty() ? config_from_env() : load_config(config_path);
    const Tolerances& tol = cfg.tol;

    if (*suite) {
      const auto records = run_suite(suite_name, cfg);
      std::cout << json_lines(records, cfg.record_timing);
      return all_pass(records) ? 0 : 1;
    }
    if (*index) {
      const LoopFunction f = loop_from_json(read_json_file(loop_path));
      const ModeWindow w = window > 0 ? ModeWindow(window) : index_window(f.bandwidth());
      const IndexReport r = charge_index(loop_family(f), w, Half::nonnegative, tol);
      const int wind = winding_number(f);
      return emit({{"kernel_dim", r.kernel_dim},
                   {"cokernel_dim", r.cokernel_dim},
                   {"q", r.q},
                   {"stable", r.stable},
                   {"windows", r.windows},
                   {"winding", wind},
                   {"pass", r.stable && r.q == wind}},
                  r.stable && r.q == wind);
    }
    if (*implementable) {
      const ImplementabilityReport r = implementability_check(loop_from_json(read_json_file(unitary_path)), tol);
      return emit({{"hs", hs_json(r.hs)},
                   {"index_p", r.index_p},
                   {"index_p_perp", r.index_p_perp},
                   {"index_sum", r.index_sum},
                   {"implementable", r.implementable},
                   {"pass", r.implementable && r.index_sum == 0}},
                  r.implementable && r.index_sum == 0);
    }
    if (*schwinger) {
      const int n = window > 0 ? window : cfg.fock_n_max;
      const ModeWindow w(n);
      const auto r = schwinger_commutator(multiplication_operator(trig_from_json(read_json_file(a_path)), w),
                                          multiplication_operator(trig_from_json(read_json_file(b_path)), w), tol);
      json j = check_json(complex_to_json(r.value), complex_to_json(r.expected), tol.quadrature,
                          std::abs(r.value - r.expected) <= tol.quadrature, n);
      j["residual"] = r.residual;
      j["safe_states"] = r.safe_states;
      return emit(j, j["pass"].get<bool>());
    }
    if (*vev) {
      const int n = window > 0 ? window : cfg.fock_n_max;
      const Generator a(trig_from_json(read_json_file(a_path)));
      const KappaMeasurement km = measure_kappa(a, {amplitude}, n);
      const double expected = std::exp(-0.5 * amplitude * amplitude * km.pairing);
      json j = check_json(km.vev.front(), expected, 5e-3, std::abs(km.vev.front() - expected) <= 5e-3, n);
      j["kappa"] = km.kappa.front();
      j["pairing"] = km.pairing;
      j["generating_functional"] = generating_functional(a * amplitude);
      return emit(j, j["pass"].get<bool>());
    }
    if (*covariance) {
      const int n = window > 0 ? window : cfg.fock_n_max;
      const LoopFunction f = loop_from_json(read_json_file(loop_path));
      const ModeWindow w(n);
      const bool pure_power = f.phase().coeffs().bandwidth(0.0) == 0 && std::abs(f.phase().coeffs()[0]) == 0.0;
      FockOperator phi = identity(FockBasis::full(n));
      double residual = 0.0;
      if (pure_power && f.winding() >= 0) {
        for (int i = 0; i < f.winding(); ++i) phi = shift_implementer(n) * phi;
      } else {
        const ImplementerSolution s = solve_implementer(loop_family(f), w, 0, tol);
        phi = s.phi;
        residual = s.residual;
      }
      const CovarianceReport r = gauge_covariance(loop_family(f), w, phi, tol);
      json j = check_json(r.q, r.index_q, 0.0, r.q == r.index_q, n);
      j["phase_residual"] = r.residual;
      j["implementer_residual"] = residual;
      return emit(j, r.q == r.index_q);
    }
    if (*commutant_cmd) {
      const ClockShiftModel model(m, k);
      const CenterReport full = verify_center_identity(model.fixed_point_generators(), model.full_generators(),
                                                       model.dim(), {model.u()}, tol.subspace);
      json j = {{"M", m},
                {"K", k},
                {"dim_a", full.dim_a},
                {"dim_f", full.dim_f},
                {"dim_center", full.dim_center},
                {"dim_relative_commutant", full.dim_relative_commutant},
                {"center_identity", full.center_equals_relative_commutant},
                {"u_in_center", full.containment}};
      bool pass = full.center_equals_relative_commutant && full.containment;
      if (k == 1) {
        const CenterReport minimal =
            verify_center_identity({model.u()}, {model.u(), model.v()}, model.dim(), {}, tol.subspace);
        j["minimal"] = {{"dim_a", minimal.dim_a},
                        {"dim_center", minimal.dim_center},
                        {"center_identity", minimal.center_equals_relative_commutant},
                        {"a_equals_center", minimal.a_is_abelian}};
        pass = pass && minimal.center_equals_relative_commutant && minimal.a_is_abelian;
      }
      j["pass"] = pass;
      return emit(j, pass);
    }
    if (*stabilizer) {
      const CircleFn f = circle_from_json(read_json_file(f_path));
      const GradedElement x = element_from_json(read_json_file(element_path), theta);
      const StabilizerReport r = check_stabilizer_properties(f, x, cplx(0.0, 1.0));
      const bool pass = r.pass(tol.algebraic);
      return emit({{"image", element_to_json(stabilizer_action(f, x))},
                   {"fixes_degree0", r.fixes_degree0},
                   {"commutes_with_gauge", r.commutes_with_gauge},
                   {"multiplicative", r.multiplicative},
                   {"implements_kappa", r.implements_kappa},
                   {"pass", pass}},
                  pass);
    }
    if (*requirements) {
      std::vector<TrigPolynomial> gens;
      const json doc = read_json_file(gens_path);
      for (const auto& g : doc.at("generators")) gens.push_back(trig_from_json(g));
      const RequirementsReport r = requirements_checklist(gens, loop_from_json(read_json_file(v1_path)), tol);
      json hs = json::array();
      for (const auto& h : r.hs) hs.push_back(hs_json(h));
      return emit({{"hs_convergent", r.hs_convergent},
                   {"commuting", r.commuting},
                   {"positive_definite", r.positive_definite},
                   {"shift_stable", r.shift_stable},
                   {"gram_min_eigenvalue", r.gram_min_eigenvalue},
                   {"q_v1", r.q_v1},
                   {"hs", hs},
                   {"pass", r.all()}},
                  r.all());
    }
    if (*reduce_cmd) {
      const WeylWord word = word_from_json(read_json_file(word_path));
      const WeylElement left = reduce(word), right = reduce_right(word);
      const double spread = std::abs(left.phase - right.phase);
      json j = weyl_element_to_json(left);
      j["association_spread"] = spread;
      j["sign_convention"] = kWeylPhaseSign;
      j["pass"] = spread <= tol.algebraic;
      return emit(j, spread <= tol.algebraic);
    }
    if (*sweep) {
      const Sweep s = convergence_sweep(check_id, windows, cfg);
      if (out_path.empty()) {
        std::cout << sweep_csv(s);
      } else {
        std::ofstream(out_path) << sweep_csv(s);
      }
      return s.monotone ? 0 : 1;
    }
  } catch (const carlab::Error& e) {
    std::cerr << "car-lab: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "car-lab: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
