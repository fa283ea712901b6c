#include "carlab/crossed_product.hpp"

#include <algorithm>
#include <cmath>

#include "carlab/errors.hpp"

namespace carlab {

bool Arc::closures_disjoint(const Arc& o) const {
  if (std::max(start, o.start) <= std::min(end, o.end)) return false;
  const bool wrap = (end >= kTwoPi && o.start <= 0.0) || (o.end >= kTwoPi && start <= 0.0);
  return !wrap;
}

CircleFn CircleFn::phase(cplx lambda, int w, const FourierSeries& h, double tail_tol) {
  if (!h.is_real(1e-12)) throw PreconditionError("CircleFn::phase: h must be real");
  return CircleFn((FourierSeries::monomial(w, lambda) * exp_i(h, tail_tol)).trimmed(tail_tol));
}

double CircleFn::unimodularity_defect(int grid) const {
  double worst = 0.0;
  for (double a : circle_grid(grid)) worst = std::max(worst, std::abs(std::abs(c_(a)) - 1.0));
  return worst;
}

GradedElement GradedElement::monomial(double theta0, int degree, CircleFn f, BWord w) {
  GradedElement x(theta0);
  x.add(degree, Term{std::move(f), std::move(w)});
  return x;
}

std::vector<int> GradedElement::degrees() const {
  std::vector<int> out;
  for (const auto& [n, terms] : parts_) out.push_back(n);
  return out;
}

GradedElement GradedElement::degree_part(int n) const {
  GradedElement x(theta0_);
  if (auto it = parts_.find(n); it != parts_.end()) x.parts_[n] = it->second;
  return x;
}

void GradedElement::add(int degree, Term t) {
  auto& terms = parts_[degree];
  for (auto& existing : terms) {
    if (existing.word == t.word) {
      existing.circle = existing.circle + t.circle;
      return;
    }
  }
  terms.push_back(std::move(t));
}

GradedElement GradedElement::operator+(const GradedElement& o) const {
  GradedElement x = *this;
  for (const auto& [n, terms] : o.parts_)
    for (const auto& t : terms) x.add(n, t);
  return x;
}

GradedElement GradedElement::operator*(const GradedElement& o) const {
  if (theta0_ != o.theta0_) throw PreconditionError("GradedElement: rotation angles differ");
  GradedElement out(theta0_);
  for (const auto& [a, xs] : parts_) {
    for (const auto& [b, ys] : o.parts_) {
      for (const auto& x : xs) {
        for (const auto& y : ys) {
          const Term ky = kappa(y, theta0_, a);
          BWord w = x.word;
          w.insert(w.end(), ky.word.begin(), ky.word.end());
          out.add(a + b, Term{x.circle * ky.circle, std::move(w)});
        }
      }
    }
  }
  return out;
}

GradedElement GradedElement::operator*(cplx s) const {
  GradedElement x = *this;
  for (auto& [n, terms] : x.parts_)
    for (auto& t : terms) t.circle = CircleFn(t.circle.coeffs() * s);
  return x;
}

double GradedElement::distance(const GradedElement& o) const {
  double worst = 0.0;
  auto compare = [&worst](const std::map<int, std::vector<Term>>& lhs, const std::map<int, std::vector<Term>>& rhs) {
    for (const auto& [n, terms] : lhs) {
      const auto it = rhs.find(n);
      for (const auto& t : terms) {
        const Term* match = nullptr;
        if (it != rhs.end())
          for (const auto& u : it->second)
            if (u.word == t.word) match = &u;
        worst = std::max(worst, t.circle.max_abs_diff(match ? match->circle : CircleFn{}));
      }
    }
  };
  compare(parts_, o.parts_);
  compare(o.parts_, parts_);
  return worst;
}

Term kappa(const Term& t, double theta0, int j) {
  Term out{t.circle.rotated(j * theta0), t.word};
  for (auto& l : out.word) l.nu_power += j;
  return out;
}

CircleFn stabilizer_cocycle(const CircleFn& f, int n, double theta0) {
  CircleFn c = CircleFn::constant(1.0);
  if (n >= 1) {
    for (int j = 1; j <= n; ++j) c = c * f.rotated(j * theta0);
  } else {
    const CircleFn fbar = f.conjugate();
    for (int j = 0; j < -n; ++j) c = c * fbar.rotated(-j * theta0);
  }
  return c;
}

GradedElement stabilizer_action(const CircleFn& f, const GradedElement& x, double tol) {
  if (!f.is_unimodular(tol)) throw PreconditionError("stabilizer_action: f is not unimodular");
  GradedElement out(x.theta0());
  for (const auto& [n, terms] : x.components()) {
    const CircleFn c = stabilizer_cocycle(f, n, x.theta0());
    for (const auto& t : terms) out.add(n, Term{t.circle * c, t.word});
  }
  return out;
}

GradedElement gauge_action(cplx zeta, const GradedElement& x) {
  GradedElement out(x.theta0());
  for (const auto& [n, terms] : x.components()) {
    const cplx z = std::pow(zeta, n);
    for (const auto& t : terms) out.add(n, Term{CircleFn(t.circle.coeffs() * z), t.word});
  }
  return out;
}

StabilizerReport check_stabilizer_properties(const CircleFn& f, const GradedElement& x, cplx zeta) {
  const double th = x.theta0();
  const auto beta = [&f](const GradedElement& y) { return stabilizer_action(f, y); };
  StabilizerReport r;

  const GradedElement d0 = x.degree_part(0);
  r.fixes_degree0 = beta(d0).distance(d0);
  r.commutes_with_gauge = beta(gauge_action(zeta, x)).distance(gauge_action(zeta, beta(x)));

  const GradedElement v = GradedElement::monomial(th, 1, CircleFn::constant(1.0));
  const GradedElement v_inv = GradedElement::monomial(th, -1, CircleFn::constant(1.0));
  for (const auto& [p, q] : {std::pair{x, x}, std::pair{x, v}, std::pair{v_inv, x}})
    r.multiplicative = std::max(r.multiplicative, beta(p * q).distance(beta(p) * beta(q)));

  // Ad beta(V) on A reproduces kappa
  const GradedElement a = d0 + GradedElement::monomial(th, 0, f, BWord{Letter{1, 0}});
  GradedElement ka(th);
  for (const auto& t : a.components().at(0)) ka.add(0, kappa(t, th));
  r.implements_kappa = (beta(v) * a * beta(v_inv)).distance(ka);
  return r;
}

double homomorphism_defect(const CircleFn& f, const CircleFn& g, const GradedElement& x) {
  return stabilizer_action(f, stabilizer_action(g, x)).distance(stabilizer_action(f * g, x));
}

LocalGenerator bump_generator(const Arc& support, double amplitude) {
  if (!(support.start >= 0.0 && support.start < support.end && support.end <= kTwoPi))
    throw PreconditionError("bump_generator: arc must satisfy 0 <= start < end <= 2 pi");
  const double len = support.end - support.start;
  auto coord = [support, len](double alpha) {
    double a = std::fmod(alpha, kTwoPi);
    if (a < 0) a += kTwoPi;
    return (a - support.start) / len;
  };
  auto phi = [](double t) { return std::exp(4.0 - 1.0 / (t * (1.0 - t))); };
  LocalGenerator g;
  g.support = support;
  g.value = [=](double alpha) {
    const double t = coord(alpha);
    if (t <= 0.0 || t >= 1.0) return 0.0;
    return amplitude * phi(t) * std::sin(kTwoPi * t);
  };
  g.derivative = [=](double alpha) {
    const double t = coord(alpha);
    if (t <= 0.0 || t >= 1.0) return 0.0;
    const double p = phi(t);
    const double dp = p * (1.0 - 2.0 * t) / std::pow(t * (1.0 - t), 2);
    return amplitude / len * (dp * std::sin(kTwoPi * t) + p * kTwoPi * std::cos(kTwoPi * t));
  };
  return g;
}

double local_schwinger_form(const LocalGenerator& a, const LocalGenerator& b, int grid) {
  double total = 0.0;
  for (double alpha : circle_grid(grid)) total += a.value(alpha) * b.derivative(alpha);
  return total / grid;
}

LocalityReport net_locality(const LocalGenerator& a, const LocalGenerator& b, double tol) {
  LocalityReport r;
  r.disjoint = a.support.closures_disjoint(b.support);
  r.contained = b.support.contains(a.support);
  r.s = local_schwinger_form(a, b);
  r.commutation_phase = std::polar(1.0, r.s);
  r.commute = std::abs(r.s) <= tol;
  r.holds = !r.disjoint || r.commute;
  return r;
}

}  // namespace carlab
