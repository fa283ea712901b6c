#pragma once

// Occupation-number basis over the window modes [-n_max, n_max].
// Bit j of a state is the occupation of mode j - n_max. A basis state is
// c*_{j1} c*_{j2} ... |empty> with j1 < j2 < ..., so c*_j picks up the sign
// (-1)^{#occupied modes below j}. The Dirac sea (all negative modes filled)
// is the vacuum; charge = #occupied - n_max.

#include <bit>
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

namespace carlab {

using FockState = std::uint32_t;

class FockBasis {
 public:
  static std::shared_ptr<const FockBasis> full(int n_max);
  static std::shared_ptr<const FockBasis> charge_sector(int n_max, int charge);
  static std::shared_ptr<const FockBasis> from_states(int n_max, std::vector<FockState> states);

  int n_max() const noexcept { return n_max_; }
  int modes() const noexcept { return 2 * n_max_ + 1; }
  std::size_t size() const noexcept { return states_.size(); }
  FockState state(std::size_t i) const { return states_[i]; }
  const std::vector<FockState>& states() const noexcept { return states_; }
  // Index of a state, or -1 when it is not in this basis.
  std::int64_t find(FockState s) const;

  int bit(int mode) const noexcept { return mode + n_max_; }
  FockState vacuum() const noexcept { return (FockState{1} << n_max_) - 1; }
  int charge(FockState s) const noexcept { return std::popcount(s) - n_max_; }
  // Sum of particle labels p >= 0 plus hole labels -h, h < 0.
  long energy(FockState s) const noexcept;
  bool same_states(const FockBasis& o) const { return n_max_ == o.n_max_ && states_ == o.states_; }

 private:
  FockBasis(int n_max, std::vector<FockState> states);
  int n_max_;
  std::vector<FockState> states_;
  std::vector<std::int32_t> lookup_;
};

/// (-1)^{number of occupied modes strictly below bit j}
inline int fermion_sign(FockState s, int j) {
  return (std::popcount(s & ((FockState{1} << j) - 1)) & 1) ? -1 : 1;
}

inline constexpr int kMaxFockModes = 23;

}  // namespace carlab
