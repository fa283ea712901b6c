#include <doctest.h>

#include "carlab/errors.hpp"
#include "carlab/random_inputs.hpp"
#include "carlab/weyl_ccr.hpp"

using namespace carlab;

namespace {

// s(A, B) = (1/2pi) int A B' by the midpoint rule, independent of the coefficient route.
double s_quadrature(const Generator& a, const Generator& b, int grid = 4096) {
  double acc = 0.0;
  for (int i = 0; i < grid; ++i) {
    const double t = 2.0 * kPi * (i + 0.5) / grid;
    acc += a.poly()(t) * b.poly().derivative(t);
  }
  return acc / grid;
}

Generator random_generator(Rng& rng, int band) {
  TrigPolynomial t = random_trig(rng, band, 1.0);
  return Generator(t - TrigPolynomial::constant(t.coeffs()[0].real()));
}

const Generator kTwoCos(TrigPolynomial::cosine(1, 2.0));
const Generator kTwoSin(TrigPolynomial::sine(1, 2.0));

}  // namespace

TEST_CASE("generators must have zero mean") {
  CHECK_THROWS_AS(Generator(TrigPolynomial::constant(1.0)), PreconditionError);
}

TEST_CASE("product of two Weyl elements") {
  const WeylElement x{kTwoCos, 1.0}, y{kTwoSin, 1.0};
  const WeylElement xy = weyl_product(x, y);
  CHECK(std::abs(xy.phase - std::polar(1.0, 1.0)) < 1e-12);
  CHECK(std::abs(commutation_phase(kTwoCos, kTwoSin) - std::polar(1.0, 2.0)) < 1e-12);
  CHECK(std::abs(commutation_phase(kTwoCos, kTwoCos) - cplx(1.0)) < 1e-14);
}

TEST_CASE("word reduction: all orders agree with the pairwise phase formula") {
  Rng rng(61);
  for (int trial = 0; trial < 10; ++trial) {
    WeylWord word;
    for (int i = 0; i < 5; ++i) word.letters.push_back(random_generator(rng, 3));
    word.phase = std::polar(1.0, 0.2 * trial);
    double total = 0.2 * trial;
    for (std::size_t i = 0; i < word.letters.size(); ++i)
      for (std::size_t j = i + 1; j < word.letters.size(); ++j)
        total += 0.5 * kWeylPhaseSign * s_quadrature(word.letters[i], word.letters[j]);
    const WeylElement left = reduce(word), right = reduce_right(word), br = reduce_bracketed(word, 77 + trial);
    CHECK(std::abs(left.phase - std::polar(1.0, total)) < 1e-10);
    CHECK(std::abs(right.phase - left.phase) < 1e-12);
    CHECK(std::abs(br.phase - left.phase) < 1e-12);
    for (int k = -3; k <= 3; ++k) {
      cplx sum = 0.0;
      for (const Generator& g : word.letters) sum += g.poly().coeffs()[k];
      CHECK(std::abs(left.exponent.poly().coeffs()[k] - sum) < 1e-12);
    }
  }
}

TEST_CASE("norm sum and the algebraic generating functional") {
  CHECK(norm_sum(kTwoCos) == doctest::Approx(1.0));
  CHECK(norm_sum(Generator(TrigPolynomial::cosine(3, 2.0))) == doctest::Approx(3.0));
  CHECK(generating_functional(kTwoCos) == doctest::Approx(std::exp(-0.25)));
}

TEST_CASE("kappa measured in the Fock representation") {
  const KappaMeasurement m = measure_kappa(kTwoCos, {0.25, 0.5, 1.0}, 7);
  REQUIRE(m.kappa.size() == 3);
  for (double k : m.kappa) CHECK(k == doctest::Approx(0.5).epsilon(1e-8));
  CHECK(m.spread < 1e-8);
  CHECK(m.pairing == doctest::Approx(1.0));
}

TEST_CASE("requirements checklist") {
  const std::vector<TrigPolynomial> good = {TrigPolynomial::cosine(1, 2.0), TrigPolynomial::sine(1, 2.0),
                                            TrigPolynomial::cosine(2, 1.0)};
  const RequirementsReport r = requirements_checklist(good, LoopFunction::power(1));
  CHECK(r.all());
  CHECK(r.q_v1 == 1);
  CHECK(r.gram_min_eigenvalue > 0.0);
  CHECK(r.commutator_defect < 1e-12);

  const RequirementsReport bad =
      requirements_checklist({TrigPolynomial::cosine(1, 2.0), TrigPolynomial::constant(1.0)}, LoopFunction::power(1));
  CHECK_FALSE(bad.all());
}
