#include <doctest.h>

#include "carlab/errors.hpp"
#include "carlab/random_inputs.hpp"
#include "carlab/selfdual_car.hpp"

using namespace carlab;

namespace {

DoubledVector random_doubled(int dim, unsigned seed) {
  std::srand(seed);
  return {Eigen::VectorXcd::Random(dim), Eigen::VectorXcd::Random(dim)};
}

double distance(const DoubledOperator& a, const DoubledOperator& b) { return (a - b).max_abs(); }

}  // namespace

TEST_CASE("Gamma is an antiunitary involution") {
  const ModeWindow w(5);
  const DoubledVector h = random_doubled(w.dim(), 1), k = random_doubled(w.dim(), 2);
  const DoubledVector gh = doubled_conjugation(h), gk = doubled_conjugation(k);
  CHECK((doubled_conjugation(gh) - h).squared_norm() == 0.0);
  // <Gamma h, Gamma k> = <k, h>
  CHECK(std::abs(gh.inner(gk) - k.inner(h)) < 1e-12);
  // explicit component check: (Gamma h)_top at mode n = conj(h_bottom at -n)
  for (int n = -5; n <= 5; ++n)
    CHECK(gh.top(w.index(n)) == std::conj(h.bottom(w.index(-n))));
}

TEST_CASE("standard basis projection") {
  const ModeWindow w(6);
  const BasisProjection bp = standard_basis_projection(w);
  CHECK(basis_projection_defect(bp) == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(is_projection(bp.pi.top, 1e-14));
  CHECK(is_projection(bp.pi.bottom, 1e-14));
  CHECK_THROWS_AS(basis_projection(mode_number_operator(w)), PreconditionError);
}

TEST_CASE("Bogoljubov double commutes with Gamma") {
  Rng rng(41);
  const LoopFunction f = random_loop(rng, -2, 2, 2, 0.4);
  const ModeWindow w(f.bandwidth() + 4);
  const DoubledOperator x = bogoljubov_double(multiplication_operator(f, w));
  CHECK(distance(gamma_conjugated(x), x) < 1e-12);
}

TEST_CASE("antisymmetric double and its exponential") {
  const ModeWindow w(6);
  const TrigPolynomial a = TrigPolynomial::cosine(1, 2.0) + TrigPolynomial::sine(2, 0.5);
  const DoubledOperator x = antisym_double(multiplication_operator(a, w));
  // Gamma diag(A, -A) Gamma = diag(-A, A) for gamma-real A
  const DoubledOperator neg{x.top * cplx(-1.0), x.bottom * cplx(-1.0)};
  CHECK(distance(gamma_conjugated(x), neg) < 1e-13);
  const DoubledOperator u = unitary_exp(x, 0.7);
  CHECK(distance(gamma_conjugated(u), u) < 1e-12);
  CHECK_THROWS_AS(antisym_double(mode_number_operator(w)), PreconditionError);
}

TEST_CASE("gauge and multiplication operators versus the basis projection") {
  const ModeWindow w(8);
  const BasisProjection bp = standard_basis_projection(w);
  const DoubledOperator gauge = bogoljubov_double(regular_rep(std::polar(1.0, 0.9), w));
  CHECK(commutes_with_basis_projection(gauge, bp));
  const DoubledOperator mult = antisym_double(multiplication_operator(TrigPolynomial::cosine(1, 2.0), w));
  CHECK_FALSE(commutes_with_basis_projection(mult, bp));
}

TEST_CASE("implementability: shift and small loops") {
  const ImplementabilityReport shift = implementability_check(LoopFunction::power(1));
  CHECK(shift.implementable);
  CHECK(shift.index_p == 1);
  CHECK(shift.index_p_perp == -1);
  CHECK(shift.index_sum == 0);

  Rng rng(42);
  for (int i = 0; i < 5; ++i) {
    const LoopFunction f = random_loop(rng, -2, 2, 2, 0.4);
    const ImplementabilityReport r = implementability_check(f);
    CHECK(r.implementable);
    CHECK(r.index_p == f.winding());
    CHECK(r.index_sum == 0);
  }
}
