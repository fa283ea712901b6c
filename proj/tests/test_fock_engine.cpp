#include <doctest.h>

#include "carlab/errors.hpp"
#include "carlab/fock_engine.hpp"
#include "carlab/random_inputs.hpp"
#include "jw_oracle.hpp"

using namespace carlab;

namespace {

const TrigPolynomial kTwoCos = TrigPolynomial::cosine(1, 2.0);
const TrigPolynomial kTwoSin = TrigPolynomial::sine(1, 2.0);

double dist(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) { return (a - b).cwiseAbs().maxCoeff(); }

Eigen::MatrixXcd restrict(const Eigen::MatrixXcd& full, const FockBasis& b) {
  Eigen::MatrixXcd out(b.size(), b.size());
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out(i, j) = full(b.state(i), b.state(j));
  return out;
}

// Normal-ordered second quantization straight from the Kronecker oracle.
Eigen::MatrixXcd dgamma_oracle(const OneParticleOperator& a) {
  const int modes = a.window().dim();
  Eigen::MatrixXcd out = jw::bilinear(a.matrix(), modes);
  cplx shift = 0.0;
  for (int p = -a.window().n_max(); p < 0; ++p) shift -= a.entry(p, p);
  out.diagonal().array() += shift;
  return out;
}

DoubledVector random_interior(const ModeWindow& w, int margin, Rng& rng) {
  std::normal_distribution<double> g;
  DoubledVector h{Eigen::VectorXcd::Zero(w.dim()), Eigen::VectorXcd::Zero(w.dim())};
  for (int n = -w.n_max() + margin; n <= w.n_max() - margin; ++n) {
    h.top(w.index(n)) = cplx(g(rng), g(rng));
    h.bottom(w.index(n)) = cplx(g(rng), g(rng));
  }
  return h;
}

}  // namespace

TEST_CASE("creation and annihilation match Jordan-Wigner") {
  const int n_max = 2;
  const auto full = FockBasis::full(n_max);
  for (int m = -n_max; m <= n_max; ++m) {
    CHECK(dist(creation(m, full).dense(), jw::creation(m + n_max, full->modes())) == 0.0);
    CHECK(dist(annihilation(m, full).dense(), jw::annihilation(m + n_max, full->modes())) == 0.0);
  }
}

TEST_CASE("canonical anticommutation relations") {
  const auto full = FockBasis::full(2);
  const Eigen::MatrixXcd one = identity(full).dense();
  for (int p = -2; p <= 2; ++p)
    for (int q = -2; q <= 2; ++q) {
      const FockOperator cp = creation(p, full), cq = creation(q, full);
      const FockOperator aq = annihilation(q, full);
      const FockOperator ap = annihilation(p, full);
      CHECK(dist((ap * creation(q, full) + creation(q, full) * ap).dense(), (p == q ? 1.0 : 0.0) * one) == 0.0);
      CHECK((cp * cq + cq * cp).max_abs() == 0.0);
      CHECK((ap * aq + aq * ap).max_abs() == 0.0);
    }
}

TEST_CASE("vacuum is the Dirac sea") {
  const auto full = FockBasis::full(3);
  const Eigen::VectorXcd omega = vacuum_vector(*full);
  for (int n = -3; n <= 3; ++n) {
    const Eigen::VectorXcd out = (n < 0 ? creation(n, full) : annihilation(n, full)).apply(omega);
    CHECK(out.norm() == 0.0);
  }
  CHECK(full->charge(full->vacuum()) == 0);
  CHECK(full->energy(full->vacuum()) == 0);
}

TEST_CASE("self-dual CAR for the field operator") {
  const int n_max = 2;
  const ModeWindow w(n_max);
  const auto full = FockBasis::full(n_max);
  const Eigen::MatrixXcd one = identity(full).dense();
  Rng rng(51);
  for (int i = 0; i < 5; ++i) {
    const DoubledVector h = random_interior(w, 0, rng), k = random_interior(w, 0, rng);
    const FockOperator bh = car_field(h, n_max), bk = car_field(k, n_max);
    CHECK(dist(car_field(doubled_conjugation(h), n_max).dense(), bh.adjoint().dense()) < 1e-14);
    CHECK(dist((bh.adjoint() * bk + bk * bh.adjoint()).dense(), h.inner(k) * one) < 1e-12);
  }
}

TEST_CASE("dgamma matches the dense oracle, serial and parallel") {
  const ModeWindow w(3);
  const auto full = FockBasis::full(3);
  for (const TrigPolynomial& a : {kTwoCos, kTwoSin, TrigPolynomial::constant(0.7) + TrigPolynomial::cosine(1, 0.4)}) {
    const OneParticleOperator op = multiplication_operator(a, w);
    const Eigen::MatrixXcd oracle = dgamma_oracle(op);
    CHECK(dist(dgamma(op, full, false).dense(), oracle) < 1e-13);
    CHECK(dist(dgamma(op, full, true).dense(), oracle) < 1e-13);
  }
  const OneParticleOperator mn = mode_number_operator(w);
  CHECK(dist(dgamma(mn, full).dense(), dgamma_oracle(mn)) < 1e-13);
}

TEST_CASE("dgamma preconditions") {
  CHECK_THROWS_AS(dgamma(multiplication_operator(TrigPolynomial::cosine(3, 1.0), ModeWindow(4))), InsufficientWindow);
  const ModeWindow w(4);
  CHECK_THROWS_AS(dgamma(shift_operator(w)), PreconditionError);
}

TEST_CASE("vacuum fluctuation of dGamma(2 cos) is 1") {
  const OneParticleOperator a = multiplication_operator(kTwoCos, ModeWindow(6));
  const FockOperator d = dgamma(a);
  const Eigen::VectorXcd omega = vacuum_vector(d.source());
  CHECK(std::abs(omega.dot(d.apply(omega))) < 1e-14);
  CHECK(d.apply(omega).squaredNorm() == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("Schwinger commutator of dGamma(2 cos), dGamma(2 sin) is 2i") {
  for (int n : {4, 6}) {
    const ModeWindow w(n);
    const SchwingerCommutator c =
        schwinger_commutator(multiplication_operator(kTwoCos, w), multiplication_operator(kTwoSin, w));
    CHECK(std::abs(c.value - cplx(0.0, 2.0)) < 1e-12);
    CHECK(std::abs(c.expected - cplx(0.0, 2.0)) < 1e-12);
    CHECK(c.safe_states > 0);
  }
  CHECK_THROWS_AS(schwinger_commutator(multiplication_operator(kTwoCos, ModeWindow(3)),
                                       multiplication_operator(kTwoSin, ModeWindow(3))),
                  InsufficientWindow);
}

TEST_CASE("gauge implementer and covariance exponents") {
  const auto full = FockBasis::full(3);
  const FockOperator g = gauge_implementer(std::polar(1.0, 0.3), full);
  CHECK(std::abs(g.dense()(full->vacuum(), full->vacuum()) - cplx(1.0)) == 0.0);
  CHECK(covariance_exponent(creation(1, full)) == 1);
  CHECK(covariance_exponent(annihilation(-2, full)) == -1);
  CHECK(covariance_exponent(creation(1, full) * creation(2, full)) == 2);
  CHECK(covariance_exponent(dgamma(mode_number_operator(ModeWindow(3)), full)) == 0);
  CHECK(covariance_exponent(shift_implementer(3)) == 1);
  CHECK_THROWS_AS(covariance_exponent(creation(1, full) + annihilation(1, full)), ConsistencyError);
}

TEST_CASE("shift implementer: vacuum image and intertwining") {
  const int n_max = 4;
  const ModeWindow w(n_max);
  const auto full = FockBasis::full(n_max);
  const FockOperator phi = shift_implementer(n_max);
  const Eigen::VectorXcd omega = vacuum_vector(*full);
  CHECK((phi.apply(omega) - creation(0, full).apply(omega)).norm() == 0.0);

  // Phi B(h) = B(u h) Phi, u h = (z f, g shifted down by one)
  Rng rng(52);
  for (int i = 0; i < 10; ++i) {
    const DoubledVector h = random_interior(w, 2, rng);
    DoubledVector uh{Eigen::VectorXcd::Zero(w.dim()), Eigen::VectorXcd::Zero(w.dim())};
    for (int n = -n_max; n <= n_max; ++n) {
      if (n - 1 >= -n_max) uh.top(w.index(n)) = h.top(w.index(n - 1));
      if (n + 1 <= n_max) uh.bottom(w.index(n)) = h.bottom(w.index(n + 1));
    }
    const FockOperator lhs = phi * car_field(h, n_max);
    const FockOperator rhs = car_field(uh, n_max) * phi;
    const Eigen::MatrixXcd l = lhs.dense(), r = rhs.dense();
    double worst = 0.0;
    const FockState top2 = FockState{3} << (2 * n_max - 1);
    for (std::size_t j = 0; j < full->size(); ++j)
      if ((full->state(j) & top2) == 0) worst = std::max(worst, (l.col(j) - r.col(j)).cwiseAbs().maxCoeff());
    CHECK(worst < 1e-13);
  }
}

TEST_CASE("shift implementer outside its domain") {
  const int n_max = 3;
  const auto full = FockBasis::full(n_max);
  const FockState top = FockState{1} << (2 * n_max);
  CHECK_THROWS_AS(shift_implementer(n_max).apply(basis_vector(*full, full->vacuum() | top)), MarginExhausted);
}

TEST_CASE("least-squares implementer for the shift") {
  const ModeWindow w(4);
  const ImplementerSolution sol = solve_implementer(loop_family(LoopFunction::power(1)), w);
  CHECK(sol.q == 1);
  CHECK(sol.null_dim == 1);
  CHECK(sol.residual < 1e-7);
  const auto full = FockBasis::full(4);
  const Eigen::VectorXcd target = creation(0, full).apply(vacuum_vector(*full));
  CHECK(std::abs(std::abs(target.dot(sol.vacuum_image)) - 1.0) < 1e-10);
}

TEST_CASE("Weyl exponential against the spectral oracle") {
  const ModeWindow w(4);
  const OneParticleOperator a = multiplication_operator(kTwoCos * 0.6, w);
  const FockOperator u = weyl_exponential(a);
  const Eigen::MatrixXcd h = restrict(dgamma_oracle(a), u.source());
  CHECK(dist(u.dense(), jw::exp_hermitian(h, cplx(0.0, 1.0))) < 1e-10);
  const Eigen::MatrixXcd uu = u.dense().adjoint() * u.dense();
  CHECK(dist(uu, Eigen::MatrixXcd::Identity(uu.rows(), uu.cols())) < 1e-10);
  CHECK_THROWS_AS(weyl_exponential(a, 10), CapExceeded);
}

TEST_CASE("vacuum expectation of W(2 cos) approaches exp(-1/2)") {
  const cplx v = vacuum_expectation(multiplication_operator(kTwoCos, ModeWindow(7)));
  CHECK(std::abs(v - std::exp(-0.5)) < 1e-10);
}

TEST_CASE("Weyl phase for 2 cos, 2 sin is e^{i}") {
  const ModeWindow w(6);
  const WeylPhase p = weyl_phase(multiplication_operator(kTwoCos, w), multiplication_operator(kTwoSin, w));
  CHECK(p.s == doctest::Approx(2.0));
  CHECK(p.sign == 1);
  CHECK(std::abs(p.phase - std::polar(1.0, 1.0)) < 1e-6);
}

TEST_CASE("positivity of the rotation generator") {
  for (int n : {3, 4}) {
    const PositivityReport r = spectrum_positivity(n);
    CHECK(r.min_eigenvalue == doctest::Approx(0.0));
    CHECK(r.second_eigenvalue == doctest::Approx(1.0));
    CHECK(r.charge0_zero_multiplicity == 1);
    CHECK(r.vacuum_unique_in_charge0);
    CHECK(r.diagonal_defect < 1e-12);
    // Brute force: energies of all states are >= 0, zero only for the two
    // Dirac seas with mode 0 empty or filled.
    const auto full = FockBasis::full(n);
    std::size_t zeros = 0;
    for (FockState s : full->states()) {
      CHECK(full->energy(s) >= 0);
      zeros += full->energy(s) == 0;
    }
    CHECK(zeros == r.zero_multiplicity);
  }
}
