#include "carlab/json_io.hpp"

#include <fstream>

#include "carlab/errors.hpp"

namespace carlab {

json complex_to_json(cplx z) { return json::array({z.real(), z.imag()}); }

cplx complex_from_json(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2) return {j[0].get<double>(), j[1].get<double>()};
  if (j.is_object()) return {j.value("re", 0.0), j.value("im", 0.0)};
  throw PreconditionError("expected a complex number as [re, im]");
}

FourierSeries series_from_json(const json& pairs) {
  if (!pairs.is_array()) throw PreconditionError("Fourier coefficients must be a list of [k, re, im]");
  std::vector<std::pair<int, cplx>> v;
  for (const auto& p : pairs) {
    if (!p.is_array() || p.size() < 2 || p.size() > 3) throw PreconditionError("coefficient entry must be [k, re, im]");
    v.emplace_back(p[0].get<int>(), cplx(p[1].get<double>(), p.size() == 3 ? p[2].get<double>() : 0.0));
  }
  return FourierSeries::from_pairs(v);
}

json series_to_json(const FourierSeries& f, double tol) {
  json out = json::array();
  for (int k = -f.extent(); k <= f.extent(); ++k) {
    const cplx c = f[k];
    if (std::abs(c) > tol || (tol == 0.0 && c != cplx(0.0))) out.push_back({k, c.real(), c.imag()});
  }
  return out;
}

namespace {

// Real series given by k >= 0 only get their conjugates filled in.
FourierSeries real_series_from_json(const json& pairs) {
  FourierSeries c = series_from_json(pairs);
  bool one_sided = true;
  for (int k = 1; k <= c.extent(); ++k)
    if (c[-k] != cplx(0.0)) one_sided = false;
  if (!one_sided) return c;
  for (int k = 1; k <= c.extent(); ++k) c.set(-k, std::conj(c[k]));
  c.set(0, c[0].real());
  return c;
}

}  // namespace

LoopFunction loop_from_json(const json& j) {
  return LoopFunction(j.value("winding", 0), TrigPolynomial(real_series_from_json(j.value("h", json::array()))));
}

json loop_to_json(const LoopFunction& f) {
  return {{"winding", f.winding()}, {"h", series_to_json(f.phase().coeffs())}};
}

TrigPolynomial trig_from_json(const json& j) {
  return TrigPolynomial(real_series_from_json(j.is_array() ? j : j.at("coeffs")));
}

json trig_to_json(const TrigPolynomial& a) { return {{"coeffs", series_to_json(a.coeffs())}}; }

CircleFn circle_from_json(const json& j) {
  if (j.contains("coeffs")) return CircleFn(series_from_json(j.at("coeffs")));
  const cplx lambda = j.contains("lambda") ? complex_from_json(j.at("lambda")) : cplx(1.0);
  return CircleFn::phase(lambda, j.value("winding", 0), real_series_from_json(j.value("h", json::array())));
}

WeylWord word_from_json(const json& j) {
  WeylWord w;
  for (const auto& l : j.at("letters")) w.letters.emplace_back(trig_from_json(l));
  if (j.contains("phase")) w.phase = complex_from_json(j.at("phase"));
  return w;
}

json weyl_element_to_json(const WeylElement& e) {
  return {{"exponent", trig_to_json(e.exponent.poly())}, {"phase", complex_to_json(e.phase)}};
}

GradedElement element_from_json(const json& j, std::optional<double> theta) {
  GradedElement x(theta.value_or(j.value("theta", 0.0)));
  for (const auto& t : j.at("terms")) {
    BWord w;
    for (const auto& l : t.value("word", json::array())) w.push_back(Letter{l.at(0).get<int>(), l.at(1).get<int>()});
    x.add(t.at("degree").get<int>(), Term{CircleFn(series_from_json(t.at("coeffs"))), std::move(w)});
  }
  return x;
}

json element_to_json(const GradedElement& x, double tol) {
  json terms = json::array();
  for (const auto& [n, ts] : x.components()) {
    for (const auto& t : ts) {
      json word = json::array();
      for (const auto& l : t.word) word.push_back({l.generator, l.nu_power});
      terms.push_back({{"degree", n}, {"coeffs", series_to_json(t.circle.coeffs(), tol)}, {"word", word}});
    }
  }
  return {{"theta", x.theta0()}, {"terms", terms}};
}

json operator_to_json(const OneParticleOperator& op) {
  json re = json::array(), im = json::array();
  for (Eigen::Index c = 0; c < op.matrix().cols(); ++c) {
    json rc = json::array(), ic = json::array();
    for (Eigen::Index r = 0; r < op.matrix().rows(); ++r) {
      rc.push_back(op.matrix()(r, c).real());
      ic.push_back(op.matrix()(r, c).imag());
    }
    re.push_back(rc);
    im.push_back(ic);
  }
  return {{"n_max", op.window().n_max()}, {"exact_radius", op.exact_radius()}, {"re", re}, {"im", im}};
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw PreconditionError("malformed JSON in " + path + ": " + e.what());
  }
}

}  // namespace carlab
