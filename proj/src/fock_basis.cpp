#include "carlab/fock_basis.hpp"

#include <algorithm>

#include "carlab/errors.hpp"

namespace carlab {

FockBasis::FockBasis(int n_max, std::vector<FockState> states) : n_max_(n_max), states_(std::move(states)) {
  if (n_max < 1 || modes() > kMaxFockModes) {
    throw CapExceeded("FockBasis: n_max must lie in [1, " + std::to_string((kMaxFockModes - 1) / 2) + "]");
  }
  std::sort(states_.begin(), states_.end());
  states_.erase(std::unique(states_.begin(), states_.end()), states_.end());
  lookup_.assign(std::size_t{1} << modes(), -1);
  for (std::size_t i = 0; i < states_.size(); ++i) {
    if (states_[i] >> modes()) throw PreconditionError("FockBasis: state has bits outside the window");
    lookup_[states_[i]] = static_cast<std::int32_t>(i);
  }
}

std::shared_ptr<const FockBasis> FockBasis::full(int n_max) {
  if (n_max < 1 || 2 * n_max + 1 > kMaxFockModes) throw CapExceeded("FockBasis::full: n_max too large");
  std::vector<FockState> s(std::size_t{1} << (2 * n_max + 1));
  for (std::size_t i = 0; i < s.size(); ++i) s[i] = static_cast<FockState>(i);
  return std::shared_ptr<const FockBasis>(new FockBasis(n_max, std::move(s)));
}

std::shared_ptr<const FockBasis> FockBasis::charge_sector(int n_max, int charge) {
  if (n_max < 1 || 2 * n_max + 1 > kMaxFockModes) throw CapExceeded("FockBasis::charge_sector: n_max too large");
  const int modes = 2 * n_max + 1;
  const int particles = n_max + charge;
  std::vector<FockState> s;
  if (particles >= 0 && particles <= modes) {
    for (FockState x = 0; x < (FockState{1} << modes); ++x) {
      if (std::popcount(x) == particles) s.push_back(x);
    }
  }
  return std::shared_ptr<const FockBasis>(new FockBasis(n_max, std::move(s)));
}

std::shared_ptr<const FockBasis> FockBasis::from_states(int n_max, std::vector<FockState> states) {
  return std::shared_ptr<const FockBasis>(new FockBasis(n_max, std::move(states)));
}

std::int64_t FockBasis::find(FockState s) const {
  if (s >> modes()) return -1;
  return lookup_[s];
}

long FockBasis::energy(FockState s) const noexcept {
  long e = 0;
  for (int n = -n_max_; n <= n_max_; ++n) {
    const bool occ = (s >> bit(n)) & 1u;
    if (n >= 0 && occ) e += n;
    if (n < 0 && !occ) e += -n;
  }
  return e;
}

}  // namespace carlab
