#pragma once

// JSON forms of the lab's inputs and outputs.
//
// Real series (loop phases, trig polynomials) may list k >= 0 only; the
// negative coefficients are then taken as conjugates.
//
//   loop:      {"winding": w, "h": [[k, re, im], ...]}
//   trig poly: {"coeffs": [[k, re, im], ...]}      (reality is enforced)
//   circle fn: {"coeffs": [...]} or {"lambda": [re, im], "winding": w, "h": [...]}
//   word:      {"letters": [trig poly, ...], "phase": [re, im]}
//   element:   {"theta": t, "terms": [{"degree": n, "coeffs": [...], "word": [[gen, nu], ...]}]}

#include "json.hpp"
#include <string>

#include "carlab/crossed_product.hpp"
#include "carlab/mode_space.hpp"
#include "carlab/weyl_ccr.hpp"

namespace carlab {

using json = nlohmann::json;

json complex_to_json(cplx z);
cplx complex_from_json(const json& j);

FourierSeries series_from_json(const json& pairs);
json series_to_json(const FourierSeries& f, double tol = 0.0);

LoopFunction loop_from_json(const json& j);
json loop_to_json(const LoopFunction& f);

TrigPolynomial trig_from_json(const json& j);
json trig_to_json(const TrigPolynomial& a);

CircleFn circle_from_json(const json& j);
WeylWord word_from_json(const json& j);
json weyl_element_to_json(const WeylElement& e);

GradedElement element_from_json(const json& j, std::optional<double> theta = std::nullopt);
json element_to_json(const GradedElement& x, double tol = 0.0);

/// Dense window matrix, columnar: {"n_max": N, "re": [[...]], "im": [[...]]} by column.
json operator_to_json(const OneParticleOperator& op);

json read_json_file(const std::string& path);

}  // namespace carlab
