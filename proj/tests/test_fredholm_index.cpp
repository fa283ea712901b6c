#include <doctest.h>

#include "carlab/errors.hpp"
#include "carlab/fredholm_index.hpp"
#include "carlab/random_inputs.hpp"

using namespace carlab;

namespace {

// Rank-k perturbation supported on modes 0..k-1, built without any library routine.
OperatorFamily perturbed(const LoopFunction& f, int k, double amp) {
  return [f, k, amp](const ModeWindow& w) {
    OneParticleOperator u = multiplication_operator(f, w);
    Eigen::MatrixXcd m = u.matrix();
    for (int j = 0; j < k; ++j) m(w.index(j), w.index(j)) += cplx(amp, 0.25 * j);
    return OneParticleOperator(w, m, u.exact_radius());
  };
}

}  // namespace

TEST_CASE("q of the bilateral shift is +1") {
  const IndexReport r = charge_index(LoopFunction::power(1));
  CHECK(r.q == 1);
  CHECK(r.cokernel_dim == 1);
  CHECK(r.kernel_dim == 0);
  CHECK(r.stable);
  CHECK(r.windows.size() == 3);
}

TEST_CASE("pure powers: kernel and cokernel counted by hand") {
  // P z^w P is an isometry with cokernel span{e_0..e_{w-1}} for w > 0,
  // a coisometry with kernel span{e_0..e_{|w|-1}} for w < 0.
  for (int w = -4; w <= 4; ++w) {
    const IndexReport r = charge_index(LoopFunction::power(w));
    CHECK(r.cokernel_dim == std::max(w, 0));
    CHECK(r.kernel_dim == std::max(-w, 0));
  }
}

TEST_CASE("negative half carries the opposite index") {
  for (int w : {-2, 1, 3}) {
    const OperatorFamily fam = loop_family(LoopFunction::power(w));
    const IndexReport neg = charge_index(fam, index_window(std::abs(w)), Half::negative);
    CHECK(neg.q == -w);
  }
}

TEST_CASE("index agrees with the argument-lift winding for random loops") {
  Rng rng(31);
  for (int i = 0; i < 20; ++i) {
    const LoopFunction f = random_loop(rng, -3, 3, 2, 0.5);
    const int lift = winding_by_argument_lift([&](double a) { return f(a); });
    CHECK(charge_index(f).q == lift);
    CHECK(index_winding_agreement(f));
  }
}

TEST_CASE("additivity over random pairs") {
  Rng rng(32);
  for (int i = 0; i < 10; ++i) {
    const LoopFunction f = random_loop(rng, -2, 2), g = random_loop(rng, -2, 2);
    CHECK(verify_additivity(f, g));
    const OperatorFamily prod = product_family(loop_family(f), loop_family(g));
    const IndexReport r = charge_index(prod, index_window(f.bandwidth() + g.bandwidth()));
    CHECK(r.q == f.winding() + g.winding());
  }
}

TEST_CASE("finite-rank perturbations leave the index unchanged") {
  const LoopFunction zeta = LoopFunction::power(1);
  for (int k = 1; k <= 3; ++k) {
    const IndexReport r = charge_index(perturbed(zeta, k, 0.5), index_window(1));
    CHECK(r.q == 1);
  }
}

TEST_CASE("a family whose index drifts with the window is reported") {
  OperatorFamily drifts = [](const ModeWindow& w) {
    return multiplication_operator(LoopFunction::power(w.n_max() / 4), w);
  };
  CHECK_THROWS_AS(charge_index(drifts, ModeWindow(8)), NotStabilized);
}

TEST_CASE("index window") {
  CHECK(index_window(0).n_max() == 8);
  CHECK(index_window(5).n_max() == 16);
}
