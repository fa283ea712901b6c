#include "carlab/weyl_ccr.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <random>

#include "carlab/errors.hpp"
#include "carlab/fock_engine.hpp"
#include "carlab/fredholm_index.hpp"

namespace carlab {

Generator::Generator(TrigPolynomial a, double tol) : a_(std::move(a)) {
  if (!a_.zero_mean(tol)) throw PreconditionError("Generator: nonzero mean");
}

WeylElement weyl_product(const WeylElement& x, const WeylElement& y) {
  const double s = schwinger_form(x.exponent.poly(), y.exponent.poly());
  return {x.exponent + y.exponent, x.phase * y.phase * std::polar(1.0, kWeylPhaseSign * s / 2.0)};
}

WeylElement reduce(const WeylWord& word) {
  WeylElement acc{Generator{}, word.phase};
  for (const auto& g : word.letters) acc = weyl_product(acc, {g, 1.0});
  return acc;
}

WeylElement reduce_right(const WeylWord& word) {
  WeylElement acc{Generator{}, 1.0};
  for (auto it = word.letters.rbegin(); it != word.letters.rend(); ++it) acc = weyl_product({*it, 1.0}, acc);
  acc.phase *= word.phase;
  return acc;
}

namespace {

WeylElement bracket(const std::vector<Generator>& letters, std::size_t lo, std::size_t hi, std::mt19937& rng) {
  if (hi - lo == 1) return {letters[lo], 1.0};
  std::uniform_int_distribution<std::size_t> cut(lo + 1, hi - 1);
  const std::size_t mid = cut(rng);
  return weyl_product(bracket(letters, lo, mid, rng), bracket(letters, mid, hi, rng));
}

}  // namespace

WeylElement reduce_bracketed(const WeylWord& word, unsigned seed) {
  if (word.letters.empty()) return {Generator{}, word.phase};
  std::mt19937 rng(seed);
  WeylElement out = bracket(word.letters, 0, word.letters.size(), rng);
  out.phase *= word.phase;
  return out;
}

cplx commutation_phase(const Generator& a, const Generator& b) {
  return std::polar(1.0, kWeylPhaseSign * schwinger_form(a.poly(), b.poly()));
}

double norm_sum(const Generator& a) {
  double total = 0.0;
  const auto& c = a.poly().coeffs();
  for (int m = 1; m <= c.extent(); ++m) total += m * std::norm(c[m]);
  return total;
}

double generating_functional(const Generator& a) {
  return std::exp(-0.25 * pairing(a.poly(), a.poly()).real());
}

KappaMeasurement measure_kappa(const Generator& a, const std::vector<double>& amplitudes, int n_max) {
  KappaMeasurement m;
  m.amplitudes = amplitudes;
  m.n_max = n_max;
  m.pairing = pairing(a.poly(), a.poly()).real();
  if (m.pairing <= 0.0) throw PreconditionError("measure_kappa: <A, A> must be positive");
  const ModeWindow w(n_max);
  const OneParticleOperator op = multiplication_operator(a.poly(), w);
  for (double c : amplitudes) {
    const double v = vacuum_expectation(op * cplx(c)).real();
    m.vev.push_back(v);
    m.kappa.push_back(-std::log(v) / (c * c * m.pairing));
  }
  if (!m.kappa.empty()) {
    const auto [lo, hi] = std::minmax_element(m.kappa.begin(), m.kappa.end());
    m.spread = *hi - *lo;
  }
  return m;
}

RequirementsReport requirements_checklist(const std::vector<TrigPolynomial>& gens, const LoopFunction& v1,
                                          const Tolerances& tol) {
  RequirementsReport r;
  int band = v1.bandwidth();
  for (const auto& g : gens) band = std::max(band, g.bandwidth());
  const ModeWindow w(std::max(pairing_window(band, band).n_max(), 2 * band + 2));

  r.hs_convergent = true;
  for (const auto& g : gens) {
    r.hs.push_back(hs_offdiag_norms(generator_family(g), w, tol));
    r.hs_convergent = r.hs_convergent && r.hs.back().converged;
  }

  std::vector<OneParticleOperator> ops;
  for (const auto& g : gens) ops.push_back(multiplication_operator(g, w));
  for (std::size_t i = 0; i < ops.size(); ++i) {
    for (std::size_t j = i + 1; j < ops.size(); ++j) {
      const OneParticleOperator c = ops[i] * ops[j] - ops[j] * ops[i];
      for (int m = -c.exact_radius(); m <= c.exact_radius(); ++m)
        for (int n = -c.exact_radius(); n <= c.exact_radius(); ++n)
          r.commutator_defect = std::max(r.commutator_defect, std::abs(c.entry(m, n)));
    }
  }
  r.commuting = r.commutator_defect <= tol.algebraic;

  const auto k = static_cast<Eigen::Index>(gens.size());
  Eigen::MatrixXd gram(k, k);
  for (Eigen::Index i = 0; i < k; ++i)
    for (Eigen::Index j = 0; j < k; ++j) gram(i, j) = pairing(gens[i], gens[j], tol).real();
  if (k > 0) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(gram);
    r.gram_min_eigenvalue = es.eigenvalues()[0];
    r.positive_definite = r.gram_min_eigenvalue > tol.algebraic * std::max(1.0, es.eigenvalues()[k - 1]);
  }

  const OneParticleOperator u = multiplication_operator(v1, w);
  const OneParticleOperator u_inv = multiplication_operator(v1.inverse(), w);
  for (const auto& a : ops) {
    const OneParticleOperator c = u * a * u_inv - a;
    for (int m = -c.exact_radius(); m <= c.exact_radius(); ++m)
      for (int n = -c.exact_radius(); n <= c.exact_radius(); ++n)
        r.conjugation_defect = std::max(r.conjugation_defect, std::abs(c.entry(m, n)));
  }
  r.q_v1 = charge_index(v1, tol).q;
  r.shift_stable = r.conjugation_defect <= tol.algebraic && r.q_v1 == 1;
  return r;
}

}  // namespace carlab
