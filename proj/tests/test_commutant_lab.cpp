#include <doctest.h>

#include <Eigen/LU>

#include "carlab/commutant_lab.hpp"

using namespace carlab;
using Mat = Eigen::MatrixXcd;

namespace {

// dim {X : [X, G] = 0 for all G} from the rank of the vectorized commutator map.
int commutant_dim_oracle(const std::vector<Mat>& gens, int d) {
  Mat big(d * d * static_cast<int>(gens.size()), d * d);
  const Mat id = Mat::Identity(d, d);
  for (std::size_t g = 0; g < gens.size(); ++g) {
    // vec(X G - G X) = (G^T (x) I - I (x) G) vec(X), column-major vec
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        Mat x = Mat::Zero(d, d);
        x(i, j) = 1.0;
        const Mat c = x * gens[g] - gens[g] * x;
        big.block(static_cast<int>(g) * d * d, j * d + i, d * d, 1) = c.reshaped();
      }
  }
  Eigen::FullPivLU<Mat> lu(big);
  lu.setThreshold(1e-10);
  return d * d - static_cast<int>(lu.rank());
}

Mat random_matrix(int d, unsigned seed) {
  std::srand(seed);
  return Mat::Random(d, d);
}

}  // namespace

TEST_CASE("subspace basics") {
  const Mat a = Mat::Identity(2, 2);
  Mat b = Mat::Zero(2, 2);
  b(0, 1) = 1.0;
  const MatrixSubspace s(2, {a, a * 2.0, b});
  CHECK(s.dim() == 2);
  CHECK(s.residual(a + b) < 1e-12);
  Mat c = Mat::Zero(2, 2);
  c(1, 0) = 1.0;
  CHECK(s.residual(c) == doctest::Approx(1.0));
  CHECK(s.contains(MatrixSubspace(2, {b})));
  CHECK_FALSE(s.equals(MatrixSubspace(2, {b})));
}

TEST_CASE("clock and shift relations") {
  for (int m : {3, 4, 5}) {
    const ClockShiftModel model(m, 2);
    CHECK((model.u() * model.v() * model.u().inverse() - model.omega() * model.v()).norm() < 1e-12);
    CHECK((model.u_power(m) - Mat::Identity(model.dim(), model.dim())).norm() < 1e-12);
    CHECK((model.v_power(m) - Mat::Identity(model.dim(), model.dim())).norm() < 1e-12);
  }
}

TEST_CASE("generated algebra dimensions") {
  for (int m : {3, 4}) {
    for (int k : {1, 2}) {
      const ClockShiftModel model(m, k);
      const MatrixAlgebra full = generated_algebra(model.full_generators(), model.dim());
      CHECK(full.dim() == model.dim() * model.dim());
      CHECK(full.closure_defect() < 1e-9);
      const MatrixAlgebra fix = generated_algebra(model.fixed_point_generators(), model.dim());
      CHECK(fix.dim() == m * k * k);
      CHECK(fix.closure_defect() < 1e-9);
      CHECK(generated_algebra({model.u()}, model.dim()).dim() == m);
    }
  }
}

TEST_CASE("commutants against the vectorized rank oracle") {
  const ClockShiftModel model(4, 2);
  const int d = model.dim();
  for (const auto& gens : {model.full_generators(), model.fixed_point_generators(), std::vector<Mat>{model.u()}}) {
    const MatrixAlgebra alg = generated_algebra(gens, d);
    CHECK(commutant(alg).dim() == commutant_dim_oracle(gens, d));
    CHECK(commuting_subspace(gens, d).dim() == commutant_dim_oracle(gens, d));
  }
  const MatrixAlgebra rnd = generated_algebra({random_matrix(d, 3)}, d);
  CHECK(commutant(rnd).dim() == 1);
}

TEST_CASE("double commutant and center of the fixed-point algebra") {
  for (int m : {4, 5}) {
    const ClockShiftModel model(m, 2);
    const MatrixAlgebra fix = generated_algebra(model.fixed_point_generators(), model.dim());
    const MatrixAlgebra dc = commutant(commutant(fix));
    CHECK(dc.span.equals(fix.span));
    const MatrixSubspace z = center(fix);
    CHECK(z.dim() == m);
    for (int n = 0; n < m; ++n) CHECK(z.residual(model.block_projection(n)) < 1e-9);
  }
}

TEST_CASE("center equals the relative commutant") {
  const ClockShiftModel model(4, 2);
  const CenterReport r = verify_center_identity(model.fixed_point_generators(), model.fixed_point_generators(),
                                                model.dim(), {model.u()});
  CHECK(r.center_equals_relative_commutant);
  CHECK(r.dim_center == 4);
  CHECK(r.containment);
  CHECK_FALSE(r.a_is_abelian);

  const CenterReport ab = verify_center_identity({model.u()}, model.full_generators(), model.dim());
  CHECK(ab.a_is_abelian);
  CHECK(ab.dim_center == 4);
  CHECK(ab.dim_relative_commutant == 4 * 4);  // U' = block diagonal M_2 blocks
  CHECK_FALSE(ab.center_equals_relative_commutant);
}

TEST_CASE("spectral components") {
  const ClockShiftModel model(5, 2);
  const Mat f = random_matrix(model.dim(), 4);
  Mat sum = Mat::Zero(model.dim(), model.dim());
  for (int n = -2; n <= 2; ++n) {
    const Mat p = spectral_component(f, n, model);
    sum += p;
    // U P U^-1 = omega^n P
    CHECK((model.u() * p * model.u().adjoint() - std::pow(model.omega(), n) * p).norm() < 1e-12);
  }
  CHECK((sum - f).norm() < 1e-12);
  CHECK((spectral_component(model.v_power(2), 2, model) - model.v_power(2)).norm() < 1e-12);
  CHECK(spectral_component(model.v_power(2), 1, model).norm() < 1e-12);
  const GradingReport g = check_grading(f, model);
  CHECK(g.reconstruction < 1e-12);
  CHECK(g.fixed_point < 1e-12);
  CHECK(g.idempotence < 1e-12);
}
