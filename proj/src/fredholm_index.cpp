#include "carlab/fredholm_index.hpp"

#include <algorithm>
#include <string>

#include "carlab/errors.hpp"

namespace carlab {

namespace {

// Singular values (ascending) of the tall section of u compressed to one half.
std::vector<double> section_singular_values(const OneParticleOperator& u, Half half) {
  const ModeWindow& w = u.window();
  const int r = u.exact_radius();
  const int c = u.complete_radius();
  if (c < 0) throw InsufficientWindow(w.n_max() - c, "no complete columns for the index section");

  int row_lo, row_hi, col_lo, col_hi;
  if (half == Half::nonnegative) {
    row_lo = 0, row_hi = r, col_lo = 0, col_hi = c;
  } else {
    row_lo = -r, row_hi = -1, col_lo = -c, col_hi = -1;
  }
  const int rows = row_hi - row_lo + 1;
  const int cols = col_hi - col_lo + 1;
  if (cols <= 0) return {};
  const Eigen::MatrixXcd section = u.matrix().block(w.index(row_lo), w.index(col_lo), rows, cols);
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(section);
  std::vector<double> sv(svd.singularValues().data(), svd.singularValues().data() + svd.singularValues().size());
  // A tall section with fewer rows than columns has forced zero singular values.
  for (int k = rows; k < cols; ++k) sv.push_back(0.0);
  std::sort(sv.begin(), sv.end());
  return sv;
}

int count_zero(const std::vector<double>& sv, const Tolerances& tol) {
  int zeros = 0;
  for (double s : sv) {
    if (s <= tol.rank_zero) {
      ++zeros;
    } else if (s < tol.rank_nonzero) {
      throw IndeterminateRank("singular value " + std::to_string(s) +
                              " falls in the gap between zero and nonzero clusters");
    }
  }
  return zeros;
}

}  // namespace

CompressionRank compression_rank(const OneParticleOperator& u, Half half, const Tolerances& tol) {
  CompressionRank r;
  r.kernel_singular_values = section_singular_values(u, half);
  r.cokernel_singular_values = section_singular_values(u.adjoint(), half);
  r.kernel_dim = count_zero(r.kernel_singular_values, tol);
  r.cokernel_dim = count_zero(r.cokernel_singular_values, tol);
  return r;
}

IndexReport charge_index(const OperatorFamily& u, const ModeWindow& w, Half half, const Tolerances& tol) {
  IndexReport rep;
  std::vector<int> qs;
  for (int grow : {0, 4, 8}) {
    const ModeWindow ww = w.enlarged(grow);
    const CompressionRank cr = compression_rank(u(ww), half, tol);
    if (grow == 0) {
      rep.kernel_dim = cr.kernel_dim;
      rep.cokernel_dim = cr.cokernel_dim;
      rep.singular_values = cr.kernel_singular_values;
    }
    qs.push_back(cr.q());
    rep.windows.push_back(ww.n_max());
  }
  rep.q = qs.front();
  rep.stable = std::all_of(qs.begin(), qs.end(), [&](int q) { return q == qs.front(); });
  if (!rep.stable) {
    throw NotStabilized("charge index changes with the window (" + std::to_string(qs[0]) + ", " +
                        std::to_string(qs[1]) + ", " + std::to_string(qs[2]) + "); increase n_max");
  }
  return rep;
}

ModeWindow index_window(int bandwidth) { return ModeWindow(std::max(2 * bandwidth + 6, 8)); }

IndexReport charge_index(const LoopFunction& f, const Tolerances& tol) {
  return charge_index(loop_family(f), index_window(f.bandwidth()), Half::nonnegative, tol);
}

OperatorFamily product_family(OperatorFamily a, OperatorFamily b) {
  return [a = std::move(a), b = std::move(b)](const ModeWindow& w) { return a(w) * b(w); };
}

bool verify_additivity(const LoopFunction& f, const LoopFunction& g, const Tolerances& tol) {
  const ModeWindow w = index_window(f.bandwidth() + g.bandwidth());
  const IndexReport qf = charge_index(loop_family(f), w, Half::nonnegative, tol);
  const IndexReport qg = charge_index(loop_family(g), w, Half::nonnegative, tol);
  const IndexReport qfg = charge_index(product_family(loop_family(f), loop_family(g)), w, Half::nonnegative, tol);
  return qf.stable && qg.stable && qfg.stable && qfg.q == qf.q + qg.q;
}

bool index_winding_agreement(const LoopFunction& f, const Tolerances& tol) {
  return charge_index(f, tol).q == winding_number(f);
}

}  // namespace carlab
