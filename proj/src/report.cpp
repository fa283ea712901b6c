#include "carlab/report.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <set>
#include <sstream>

#include "carlab/commutant_lab.hpp"
#include "carlab/crossed_product.hpp"
#include "carlab/errors.hpp"
#include "carlab/fock_engine.hpp"
#include "carlab/fredholm_index.hpp"
#include "carlab/random_inputs.hpp"
#include "carlab/selfdual_car.hpp"
#include "carlab/weyl_ccr.hpp"

namespace carlab {

// ------------------------------------------------------------------ config

Config config_from_json(const json& j) {
  if (!j.is_object()) throw PreconditionError("config must be a JSON object");
  static const std::set<std::string> kKeys = {"n_max", "fock_n_max", "vev_windows", "tolerances",
                                              "seed", "sector_cap", "record_timing"};
  for (const auto& [k, v] : j.items())
    if (!kKeys.count(k)) throw PreconditionError("config: unknown key '" + k + "'");
  Config c;
  try {
    c.n_max = j.value("n_max", c.n_max);
    c.fock_n_max = j.value("fock_n_max", c.fock_n_max);
    c.vev_windows = j.value("vev_windows", c.vev_windows);
    c.seed = j.value("seed", c.seed);
    c.sector_cap = j.value("sector_cap", c.sector_cap);
    c.record_timing = j.value("record_timing", c.record_timing);
    if (j.contains("tolerances")) {
      const json& t = j.at("tolerances");
      static const std::set<std::string> kTolKeys = {"algebraic",   "quadrature", "rank_zero", "rank_nonzero",
                                                     "convergence", "subspace",   "loop_tail"};
      if (!t.is_object()) throw PreconditionError("config: tolerances must be an object");
      for (const auto& [k, v] : t.items())
        if (!kTolKeys.count(k)) throw PreconditionError("config: unknown tolerance '" + k + "'");
      c.tol.algebraic = t.value("algebraic", c.tol.algebraic);
      c.tol.quadrature = t.value("quadrature", c.tol.quadrature);
      c.tol.rank_zero = t.value("rank_zero", c.tol.rank_zero);
      c.tol.rank_nonzero = t.value("rank_nonzero", c.tol.rank_nonzero);
      c.tol.convergence = t.value("convergence", c.tol.convergence);
      c.tol.subspace = t.value("subspace", c.tol.subspace);
      c.tol.loop_tail = t.value("loop_tail", c.tol.loop_tail);
    }
  } catch (const json::exception& e) {
    throw PreconditionError(std::string("config: ") + e.what());
  }
  if (c.n_max < 1 || c.fock_n_max < 1) throw PreconditionError("config: windows must be positive");
  return c;
}

json config_to_json(const Config& c) {
  return {{"n_max", c.n_max},
          {"fock_n_max", c.fock_n_max},
          {"vev_windows", c.vev_windows},
          {"seed", c.seed},
          {"sector_cap", c.sector_cap},
          {"record_timing", c.record_timing},
          {"tolerances",
           {{"algebraic", c.tol.algebraic},
            {"quadrature", c.tol.quadrature},
            {"rank_zero", c.tol.rank_zero},
            {"rank_nonzero", c.tol.rank_nonzero},
            {"convergence", c.tol.convergence},
            {"subspace", c.tol.subspace},
            {"loop_tail", c.tol.loop_tail}}}};
}

Config load_config(const std::string& path) { return config_from_json(read_json_file(path)); }

Config config_from_env() {
  const char* path = std::getenv("CAR_LAB_CONFIG");
  if (!path || !*path) return Config{};
  return load_config(path);
}

// ------------------------------------------------------------------ records

CheckRecord real_check(std::string id, json params, double value, double expected, double tolerance, int window) {
  return {std::move(id), std::move(params), value, expected, tolerance,
          std::abs(value - expected) <= tolerance, window, 0};
}

CheckRecord complex_check(std::string id, json params, cplx value, cplx expected, double tolerance, int window) {
  return {std::move(id), std::move(params), complex_to_json(value), complex_to_json(expected), tolerance,
          std::abs(value - expected) <= tolerance, window, 0};
}

CheckRecord exact_check(std::string id, json params, long value, long expected, int window) {
  return {std::move(id), std::move(params), value, expected, 0.0, value == expected, window, 0};
}

CheckRecord bool_check(std::string id, json params, bool value, int window) {
  return {std::move(id), std::move(params), value, true, 0.0, value, window, 0};
}

json record_to_json(const CheckRecord& r, bool with_timing) {
  return {{"check_id", r.check_id}, {"params", r.params},   {"value", r.value},
          {"expected", r.expected}, {"tolerance", r.tolerance}, {"pass", r.pass},
          {"window", r.window},     {"runtime_ms", with_timing ? r.runtime_ms : 0}};
}

std::string json_lines(std::vector<CheckRecord> records, bool with_timing) {
  std::stable_sort(records.begin(), records.end(),
                   [](const CheckRecord& a, const CheckRecord& b) { return a.check_id < b.check_id; });
  std::string out;
  for (const auto& r : records) out += record_to_json(r, with_timing).dump() + "\n";
  return out;
}

bool all_pass(const std::vector<CheckRecord>& records) {
  return std::all_of(records.begin(), records.end(), [](const CheckRecord& r) { return r.pass; });
}

// ------------------------------------------------------------------ suites

namespace {

using Records = std::vector<CheckRecord>;

// Runs one check, timing it and turning exceptions into failing records.
void run(Records& out, const std::string& id, int window, const std::function<CheckRecord()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  CheckRecord r;
  try {
    r = body();
  } catch (const std::exception& e) {
    r = CheckRecord{id, {{"error", e.what()}}, nullptr, nullptr, 0.0, false, window, 0};
  }
  r.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
  out.push_back(std::move(r));
}

double interior_defect(const OneParticleOperator& x, int radius) {
  double worst = 0.0;
  for (int m = -radius; m <= radius; ++m)
    for (int n = -radius; n <= radius; ++n) worst = std::max(worst, std::abs(x.entry(m, n)));
  return worst;
}

TrigPolynomial two_cos() { return TrigPolynomial::cosine(1, 2.0); }
TrigPolynomial two_sin() { return TrigPolynomial::sine(1, 2.0); }

void index_suite(Records& out, const Config& cfg) {
  const Tolerances& tol = cfg.tol;
  const int n = cfg.n_max;

  run(out, "index.q_zeta", 0, [&] {
    const IndexReport r = charge_index(LoopFunction::power(1), tol);
    return exact_check("index.q_zeta", {{"loop", "zeta"}}, r.q, 1, r.windows.front());
  });

  run(out, "index.additivity", 0, [&] {
    Rng rng(cfg.seed);
    long ok = 0;
    for (int i = 0; i < 50; ++i) {
      const LoopFunction f = random_loop(rng, -3, 3);
      const LoopFunction g = random_loop(rng, -3, 3);
      ok += verify_additivity(f, g, tol) ? 1 : 0;
    }
    return exact_check("index.additivity", {{"pairs", 50}, {"seed", cfg.seed}}, ok, 50, 0);
  });

  run(out, "index.winding_agreement", 0, [&] {
    Rng rng(cfg.seed + 1);
    long ok = 0;
    for (int i = 0; i < 50; ++i) ok += index_winding_agreement(random_loop(rng, -3, 3), tol) ? 1 : 0;
    return exact_check("index.winding_agreement", {{"loops", 50}, {"seed", cfg.seed + 1}}, ok, 50, 0);
  });

  run(out, "index.sum_zero", 0, [&] {
    Rng rng(cfg.seed + 2);
    long ok = 0;
    for (int i = 0; i < 20; ++i) {
      const ImplementabilityReport r = implementability_check(random_loop(rng, -3, 3), tol);
      ok += (r.index_sum == 0 && r.implementable) ? 1 : 0;
    }
    return exact_check("index.sum_zero", {{"loops", 20}, {"seed", cfg.seed + 2}}, ok, 20, 0);
  });

  run(out, "index.shift_covariance", n, [&] {
    Rng rng(cfg.seed + 3);
    const ModeWindow w(n);
    const OneParticleOperator v = shift_operator(w);
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
      const cplx zeta = random_unit(rng);
      const OneParticleOperator lhs = regular_rep(zeta, w) * v * regular_rep(std::conj(zeta), w);
      const OneParticleOperator d = lhs - v * zeta;
      worst = std::max(worst, interior_defect(d, d.exact_radius()));
    }
    return real_check("index.shift_covariance", {{"samples", 20}}, worst, 0.0, tol.algebraic, n);
  });

  run(out, "index.finite_rank", n, [&] {
    const ModeWindow w(n);
    const OneParticleOperator v = shift_operator(w);
    const Eigen::MatrixXcd term =
        nonnegative_projection(w).matrix() * v.matrix() * negative_projection(w).matrix();
    const Eigen::MatrixXcd e0ve1 = mode_projection(0, w).matrix() * v.matrix() * mode_projection(-1, w).matrix();
    const double diff = (term - e0ve1).cwiseAbs().maxCoeff();
    long ranks_ok = 0;
    for (int k = 1; k <= 3; ++k) {
      Eigen::MatrixXcd big = Eigen::MatrixXcd::Zero(term.rows() * k, term.cols() * k);
      for (int b = 0; b < k; ++b) big.block(b * term.rows(), b * term.cols(), term.rows(), term.cols()) = term;
      Eigen::JacobiSVD<Eigen::MatrixXcd> svd(big);
      long rank = 0;
      for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i)
        if (svd.singularValues()[i] > 0.5) ++rank;
      ranks_ok += rank == k ? 1 : 0;
    }
    CheckRecord r = bool_check("index.finite_rank", {{"multiplicities", {1, 2, 3}}, {"entry_difference", diff}},
                               diff == 0.0 && ranks_ok == 3, n);
    return r;
  });

  run(out, "index.hs_shift", n, [&] {
    const HsReport r = hs_offdiag_norms(loop_family(LoopFunction::power(1)), ModeWindow(n), tol);
    return real_check("index.hs_shift", {{"lower", r.lower}, {"converged", r.converged}}, r.upper, 1.0,
                      tol.algebraic, n);
  });
}

void schwinger_suite(Records& out, const Config& cfg) {
  const Tolerances& tol = cfg.tol;
  const int n = cfg.fock_n_max;
  const ModeWindow w(n);

  run(out, "schwinger.cos_sin", n, [&] {
    const auto r = schwinger_commutator(multiplication_operator(two_cos(), w), multiplication_operator(two_sin(), w), tol);
    return complex_check("schwinger.cos_sin", {{"a1", "2cos"}, {"a2", "2sin"}, {"residual", r.residual}}, r.value,
                         cplx(0.0, 2.0), tol.quadrature, n);
  });

  run(out, "schwinger.random_pairs", n, [&] {
    Rng rng(cfg.seed + 10);
    double residual = 0.0, routes = 0.0, scalar = 0.0;
    for (int i = 0; i < 10; ++i) {
      const int b1 = 1, b2 = (i % 2) + 1;
      const TrigPolynomial a1 = random_trig(rng, b1, 1.0), a2 = random_trig(rng, b2, 1.0);
      const OneParticleOperator o1 = multiplication_operator(a1, w), o2 = multiplication_operator(a2, w);
      const auto r = schwinger_commutator(o1, o2, tol);
      const SchwingerRoutes s = schwinger_routes(o1, o2, tol);
      residual = std::max(residual, r.residual);
      scalar = std::max(scalar, std::abs(r.value - r.expected));
      routes = std::max({routes, std::abs(s.trace - s.fourier), std::abs(s.trace - s.quadrature)});
    }
    CheckRecord r = real_check("schwinger.random_pairs",
                               {{"pairs", 10}, {"route_disagreement", routes}, {"scalar_error", scalar}},
                               std::max({residual, routes, scalar}), 0.0, tol.quadrature, n);
    return r;
  });

  for (int m : {4, 6}) {
    const std::string id = "schwinger.positivity_n" + std::to_string(m);
    run(out, id, m, [&, id, m] {
      const PositivityReport p = spectrum_positivity(m);
      const bool zero_space = p.zero_multiplicity == 2;
      return bool_check(id,
                        {{"min_eigenvalue", p.min_eigenvalue},
                         {"second_eigenvalue", p.second_eigenvalue},
                         {"zero_multiplicity_full", p.zero_multiplicity},
                         {"zero_multiplicity_charge0", p.charge0_zero_multiplicity}},
                        p.min_eigenvalue >= -1e-12 && p.vacuum_unique_in_charge0 && zero_space &&
                            p.second_eigenvalue == 1.0 && p.diagonal_defect == 0.0,
                        m);
    });
  }

  for (int power = 1; power <= 3; ++power) {
    const std::string id = "schwinger.covariance_shift" + std::to_string(power);
    run(out, id, n, [&, id, power] {
      FockOperator phi = shift_implementer(n);
      for (int k = 1; k < power; ++k) phi = shift_implementer(n) * phi;
      const CovarianceReport r = gauge_covariance(loop_family(LoopFunction::power(power)), w, phi, tol);
      CheckRecord rec = exact_check(id, {{"power", power}, {"residual", r.residual}, {"index_q", r.index_q}}, r.q,
                                    power, n);
      rec.pass = rec.pass && r.residual < tol.quadrature;
      return rec;
    });
  }

  run(out, "schwinger.covariance_gauge", n, [&] {
    const FockOperator phi = gauge_implementer(std::polar(1.0, 0.7), FockBasis::full(n));
    double residual = 0.0;
    const int q = covariance_exponent(phi, &residual, tol.quadrature);
    return exact_check("schwinger.covariance_gauge", {{"residual", residual}}, q, 0, n);
  });
}

void weyl_suite(Records& out, const Config& cfg) {
  const Tolerances& tol = cfg.tol;
  const int n = cfg.fock_n_max;

  run(out, "weyl.association", 0, [&] {
    Rng rng(cfg.seed + 20);
    double worst = 0.0;
    for (int i = 0; i < 10; ++i) {
      WeylWord word;
      for (int k = 0; k < 4; ++k) word.letters.emplace_back(random_trig(rng, 3, 1.0));
      const WeylElement left = reduce(word);
      const WeylElement right = reduce_right(word);
      worst = std::max(worst, std::abs(left.phase - right.phase));
      for (unsigned s = 0; s < 5; ++s)
        worst = std::max(worst, std::abs(left.phase - reduce_bracketed(word, s + 7 * i).phase));
    }
    return real_check("weyl.association", {{"words", 10}, {"letters", 4}}, worst, 0.0, tol.algebraic, 0);
  });

  run(out, "weyl.norm_sum", 0, [&] {
    Rng rng(cfg.seed + 21);
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
      const Generator a(random_trig(rng, 4, 1.0));
      worst = std::max(worst, std::abs(pairing(a.poly(), a.poly()).real() - norm_sum(a)));
    }
    return real_check("weyl.norm_sum", {{"samples", 20}}, worst, 0.0, tol.algebraic, 0);
  });

  run(out, "weyl.functional_2cos", 0, [&] {
    return real_check("weyl.functional_2cos", {{"a", "2cos"}}, generating_functional(Generator(two_cos())),
                      std::exp(-0.25), tol.algebraic, 0);
  });

  run(out, "weyl.kappa", n, [&] {
    const KappaMeasurement k = measure_kappa(Generator(two_cos()), {0.25, 0.5, 1.0}, n);
    double mean = 0.0;
    for (double x : k.kappa) mean += x;
    mean /= static_cast<double>(k.kappa.size());
    CheckRecord r = real_check("weyl.kappa",
                               {{"amplitudes", k.amplitudes}, {"kappa", k.kappa}, {"spread", k.spread},
                                {"paper_convention", 0.25}},
                               mean, 0.5, 5e-3, n);
    r.pass = r.pass && k.spread <= 5e-3;
    return r;
  });

  run(out, "weyl.vev_convergence", 0, [&] {
    const Sweep s = convergence_sweep("vev", cfg.vev_windows, cfg);
    json deltas = json::array();
    for (const auto& row : s.rows) deltas.push_back(row.delta);
    return bool_check("weyl.vev_convergence", {{"windows", cfg.vev_windows}, {"deltas", deltas}}, s.monotone,
                      cfg.vev_windows.empty() ? 0 : cfg.vev_windows.back());
  });

  run(out, "weyl.phase_sign", n, [&] {
    const ModeWindow w(n);
    const WeylPhase p = weyl_phase(multiplication_operator(two_cos(), w), multiplication_operator(two_sin(), w),
                                   cfg.sector_cap);
    CheckRecord r = exact_check("weyl.phase_sign",
                                {{"phase", complex_to_json(p.phase)}, {"s", p.s}, {"error", p.error}, {"state_defect", p.state_defect}}, p.sign,
                                kWeylPhaseSign, n);
    r.pass = r.pass && p.error < 1e-6;
    return r;
  });

  run(out, "weyl.requirements", 0, [&] {
    const RequirementsReport r = requirements_checklist(
        {two_cos(), two_sin(), TrigPolynomial::cosine(2, 2.0)}, LoopFunction::power(1), tol);
    return bool_check("weyl.requirements",
                      {{"hs", r.hs_convergent}, {"commuting", r.commuting}, {"positive", r.positive_definite},
                       {"shift_stable", r.shift_stable}, {"gram_min", r.gram_min_eigenvalue}},
                      r.all(), 0);
  });

  run(out, "weyl.requirements_constant", 0, [&] {
    const RequirementsReport r =
        requirements_checklist({two_cos(), TrigPolynomial::constant(1.0)}, LoopFunction::power(1), tol);
    return bool_check("weyl.requirements_constant", {{"positive", r.positive_definite}},
                      !r.positive_definite && r.hs_convergent && r.commuting && r.shift_stable, 0);
  });
}

void grading_suite(Records& out, const Config& cfg) {
  const double tol = cfg.tol.subspace;
  for (int m : {4, 5}) {
    for (int k : {1, 2}) {
      const std::string tag = "M" + std::to_string(m) + "_K" + std::to_string(k);
      const ClockShiftModel model(m, k);
      run(out, "grading.center_full_" + tag, 0, [&, tag] {
        const CenterReport r = verify_center_identity(model.fixed_point_generators(), model.full_generators(),
                                                      model.dim(), {model.u()}, tol);
        std::vector<Eigen::MatrixXcd> e;
        for (int i = 0; i < m; ++i) e.push_back(model.block_projection(i));
        const MatrixSubspace span_e(model.dim(), e);
        const MatrixAlgebra a = generated_algebra(model.fixed_point_generators(), model.dim(), tol);
        const bool z_is_e = center(a, tol).equals(span_e, tol);
        return bool_check("grading.center_full_" + tag,
                          {{"dim_a", r.dim_a}, {"dim_f", r.dim_f}, {"dim_center", r.dim_center},
                           {"dim_relative_commutant", r.dim_relative_commutant}},
                          r.center_equals_relative_commutant && z_is_e && r.containment, 0);
      });
      run(out, "grading.double_commutant_" + tag, 0, [&, tag] {
        const MatrixAlgebra a = generated_algebra(model.fixed_point_generators(), model.dim(), tol);
        const MatrixAlgebra cc = commutant(commutant(a, tol), tol);
        return bool_check("grading.double_commutant_" + tag, {{"dim", a.dim()}}, cc.span.equals(a.span, tol), 0);
      });
      run(out, "grading.spectral_" + tag, 0, [&, tag] {
        Rng rng(cfg.seed + 30 + m * 10 + k);
        std::normal_distribution<double> g;
        Eigen::MatrixXcd f(model.dim(), model.dim());
        for (Eigen::Index i = 0; i < f.size(); ++i) f.data()[i] = cplx(g(rng), g(rng));
        const GradingReport r = check_grading(f, model);
        return real_check("grading.spectral_" + tag,
                          {{"reconstruction", r.reconstruction}, {"fixed_point", r.fixed_point},
                           {"idempotence", r.idempotence}},
                          std::max({r.reconstruction, r.fixed_point, r.idempotence}), 0.0, 1e-12 * model.dim(), 0);
      });
    }
    run(out, "grading.center_minimal_M" + std::to_string(m), 0, [&, m] {
      const ClockShiftModel model(m, 1);
      const CenterReport r =
          verify_center_identity({model.u()}, {model.u(), model.v()}, model.dim(), {model.u()}, tol);
      return bool_check("grading.center_minimal_M" + std::to_string(m),
                        {{"dim_a", r.dim_a}, {"dim_f", r.dim_f}, {"dim_center", r.dim_center}},
                        r.center_equals_relative_commutant && r.a_is_abelian && r.dim_f == m * m, 0);
    });
  }
}

void stabilizer_suite(Records& out, const Config& cfg) {
  const double tol = cfg.tol.algebraic;

  run(out, "stabilizer.properties", 0, [&] {
    Rng rng(cfg.seed + 40);
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
      const double theta = std::uniform_real_distribution<double>(0.0, kTwoPi)(rng);
      const CircleFn f = random_phase(rng);
      const GradedElement x = random_element(rng, theta);
      const StabilizerReport r = check_stabilizer_properties(f, x, random_unit(rng));
      worst = std::max({worst, r.fixes_degree0, r.commutes_with_gauge, r.multiplicative, r.implements_kappa});
    }
    return real_check("stabilizer.properties", {{"phases", 20}}, worst, 0.0, tol, 0);
  });

  run(out, "stabilizer.homomorphism", 0, [&] {
    Rng rng(cfg.seed + 41);
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
      const double theta = std::uniform_real_distribution<double>(0.0, kTwoPi)(rng);
      const CircleFn f = random_phase(rng), g = random_phase(rng);
      const GradedElement x = random_element(rng, theta);
      worst = std::max(worst, homomorphism_defect(f, g, x));
      worst = std::max(worst, stabilizer_action(f.conjugate(), stabilizer_action(f, x)).distance(x));
    }
    return real_check("stabilizer.homomorphism", {{"phases", 20}}, worst, 0.0, tol, 0);
  });

  run(out, "stabilizer.cocycle_pointwise", 0, [&] {
    Rng rng(cfg.seed + 42);
    const double theta = 0.7853981634;
    const CircleFn f = random_phase(rng);
    double worst = 0.0;
    for (int deg : {1, 2, 3, -1, -2}) {
      const GradedElement v = GradedElement::monomial(theta, deg, CircleFn::constant(1.0));
      const CircleFn c = stabilizer_action(f, v).components().at(deg).front().circle;
      for (double a : circle_grid(64)) {
        cplx want = 1.0;
        if (deg > 0)
          for (int j = 1; j <= deg; ++j) want *= f(a + j * theta);
        else
          for (int j = 0; j < -deg; ++j) want *= std::conj(f(a - j * theta));
        worst = std::max(worst, std::abs(c(a) - want));
      }
    }
    return real_check("stabilizer.cocycle_pointwise", {{"theta", theta}}, worst, 0.0, 1e-10, 0);
  });

  run(out, "stabilizer.locality_disjoint", 0, [&] {
    const LocalityReport r =
        net_locality(bump_generator({0.0, kPi / 2}), bump_generator({kPi, 3 * kPi / 2}), cfg.tol.quadrature);
    CheckRecord rec = real_check("stabilizer.locality_disjoint", {{"disjoint", r.disjoint}}, r.s, 0.0,
                                 cfg.tol.quadrature, 4096);
    rec.pass = rec.pass && r.disjoint && r.holds;
    return rec;
  });

  run(out, "stabilizer.locality_overlap", 0, [&] {
    const LocalityReport r = net_locality(bump_generator({0.0, kPi}), bump_generator({kPi / 2, 3 * kPi / 2}),
                                          cfg.tol.quadrature);
    return bool_check("stabilizer.locality_overlap", {{"s", r.s}, {"disjoint", r.disjoint}},
                      !r.disjoint && !r.commute && r.holds, 4096);
  });
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> kNames = {"index", "schwinger", "weyl", "grading", "stabilizer", "all"};
  return kNames;
}

std::vector<CheckRecord> run_suite(const std::string& name, const Config& config) {
  Records out;
  const bool all = name == "all";
  if (std::find(suite_names().begin(), suite_names().end(), name) == suite_names().end())
    throw PreconditionError("unknown suite '" + name + "'");
  if (all || name == "index") index_suite(out, config);
  if (all || name == "schwinger") schwinger_suite(out, config);
  if (all || name == "weyl") weyl_suite(out, config);
  if (all || name == "grading") grading_suite(out, config);
  if (all || name == "stabilizer") stabilizer_suite(out, config);
  std::stable_sort(out.begin(), out.end(),
                   [](const CheckRecord& a, const CheckRecord& b) { return a.check_id < b.check_id; });
  return out;
}

// ------------------------------------------------------------------ sweeps

Sweep convergence_sweep(const std::string& check_id, std::vector<int> windows, const Config& config) {
  if (windows.empty()) throw PreconditionError("convergence_sweep: no windows given");
  std::sort(windows.begin(), windows.end());
  std::function<double(int)> value;
  if (check_id == "vev") {
    value = [&](int n) {
      const OneParticleOperator a = multiplication_operator(two_cos(), ModeWindow(n));
      return vacuum_expectation(a, config.sector_cap).real();
    };
  } else if (check_id == "pairing") {
    const TrigPolynomial a = two_cos() + TrigPolynomial::sine(2, 1.0);
    const TrigPolynomial b = two_sin() + TrigPolynomial::cosine(2, 0.5);
    value = [a, b, &config](int n) {
      const ModeWindow w(n);
      return pairing(multiplication_operator(a, w), multiplication_operator(b, w), config.tol).imag();
    };
  } else if (check_id == "hs_shift") {
    value = [](int n) {
      const ModeWindow w(n);
      return offdiag_hs(shift_operator(w), nonnegative_projection(w)).upper;
    };
  } else if (check_id == "schwinger") {
    value = [&](int n) {
      const ModeWindow w(n);
      return schwinger_commutator(multiplication_operator(two_cos(), w), multiplication_operator(two_sin(), w),
                                  config.tol)
          .value.imag();
    };
  } else {
    throw PreconditionError("convergence_sweep: check '" + check_id + "' has no window parameter");
  }

  Sweep s;
  s.check_id = check_id;
  for (int n : windows) s.rows.push_back({n, value(n), 0.0});
  const double ref = s.rows.back().value;
  for (auto& r : s.rows) r.delta = std::abs(r.value - ref);
  s.monotone = true;
  for (std::size_t i = 1; i < s.rows.size(); ++i)
    if (s.rows[i].delta > s.rows[i - 1].delta + 1e-12) s.monotone = false;
  return s;
}

std::string sweep_csv(const Sweep& s) {
  std::ostringstream os;
  os.precision(17);
  os << "check_id,window,value,delta,monotone\n";
  for (const auto& r : s.rows)
    os << s.check_id << ',' << r.window << ',' << r.value << ',' << r.delta << ',' << (s.monotone ? "true" : "false")
       << '\n';
  return os.str();
}

}  // namespace carlab
