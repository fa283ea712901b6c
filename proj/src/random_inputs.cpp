#include "carlab/random_inputs.hpp"

namespace carlab {

namespace {

cplx random_coeff(Rng& rng, double amplitude) {
  std::uniform_real_distribution<double> r(0.0, amplitude);
  std::uniform_real_distribution<double> a(0.0, kTwoPi);
  return std::polar(r(rng), a(rng));
}

}  // namespace

TrigPolynomial random_trig(Rng& rng, int bandwidth, double amplitude, bool zero_mean) {
  FourierSeries c(bandwidth);
  for (int k = 1; k <= bandwidth; ++k) {
    const cplx v = random_coeff(rng, amplitude);
    c.set(k, v);
    c.set(-k, std::conj(v));
  }
  if (!zero_mean) c.set(0, std::uniform_real_distribution<double>(-amplitude, amplitude)(rng));
  return TrigPolynomial(c);
}

LoopFunction random_loop(Rng& rng, int w_lo, int w_hi, int bandwidth, double amplitude) {
  const int w = std::uniform_int_distribution<int>(w_lo, w_hi)(rng);
  return LoopFunction(w, random_trig(rng, bandwidth, amplitude));
}

cplx random_unit(Rng& rng) { return std::polar(1.0, std::uniform_real_distribution<double>(0.0, kTwoPi)(rng)); }

CircleFn random_phase(Rng& rng, int w_lo, int w_hi, int bandwidth, double amplitude) {
  const cplx lambda = random_unit(rng);
  const int w = std::uniform_int_distribution<int>(w_lo, w_hi)(rng);
  return CircleFn::phase(lambda, w, random_trig(rng, bandwidth, amplitude).coeffs());
}

CircleFn random_circle(Rng& rng, int bandwidth) {
  FourierSeries c(bandwidth);
  for (int k = -bandwidth; k <= bandwidth; ++k) c.set(k, random_coeff(rng, 1.0));
  return CircleFn(c);
}

GradedElement random_element(Rng& rng, double theta0, int terms) {
  static constexpr int kDegrees[] = {-1, 0, 2};
  GradedElement x(theta0);
  std::uniform_int_distribution<int> gen(0, 3), nu(-1, 1), len(0, 2);
  for (int i = 0; i < terms; ++i) {
    BWord w;
    const int l = len(rng);
    for (int j = 0; j < l; ++j) w.push_back(Letter{gen(rng), nu(rng)});
    x.add(kDegrees[i % 3], Term{random_circle(rng, 2), std::move(w)});
  }
  return x;
}

}  // namespace carlab
