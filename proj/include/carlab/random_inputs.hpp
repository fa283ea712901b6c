#pragma once

// Seeded random inputs shared by suites, tests and the acceptance binary.

#include <random>

#include "carlab/crossed_product.hpp"
#include "carlab/mode_space.hpp"

namespace carlab {

using Rng = std::mt19937_64;

/// Real trig polynomial with coefficients k = 1..bandwidth of modulus <= amplitude.
TrigPolynomial random_trig(Rng& rng, int bandwidth, double amplitude, bool zero_mean = true);
/// Loop zeta^w e^{i h}, w uniform in [w_lo, w_hi], h = random_trig(bandwidth, amplitude).
LoopFunction random_loop(Rng& rng, int w_lo, int w_hi, int bandwidth = 2, double amplitude = 0.3);
cplx random_unit(Rng& rng);
/// lambda mu^w e^{i h} with |lambda| = 1.
CircleFn random_phase(Rng& rng, int w_lo = -2, int w_hi = 2, int bandwidth = 2, double amplitude = 0.4);
CircleFn random_circle(Rng& rng, int bandwidth);
/// A few terms in degrees -1, 0, 2 with short B-words.
GradedElement random_element(Rng& rng, double theta0, int terms = 3);

}  // namespace carlab
