#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "polyan/modring.hpp"

namespace polyan {

// Sliding window x_n..x_{n+r-1} of the recurrence
//   q_0 x_n + q_1 x_{n+1} + ... + q_r x_{n+r} = 0  mod 2^w.
// q_0 odd makes the sequence reversible and therefore purely periodic.
// Single-owner mutable; copy it to explore without disturbing the caller.
class RecurrenceState {
 public:
  RecurrenceState(const RingCtx& ctx, const std::vector<uint64_t>& init);

  uint64_t step();       // returns x_{n+r}, window advances by one
  uint64_t step_back();  // returns x_{n-1}, window retreats by one

  std::vector<uint64_t> window() const;  // x_n..x_{n+r-1}
  uint64_t front() const { return win_[head_]; }  // x_n
  bool window_equals(const std::vector<uint64_t>& v) const;
  bool window_has_odd() const;
  uint64_t step_count() const { return steps_; }
  const RingCtx& ctx() const { return *ctx_; }

 private:
  const RingCtx* ctx_;
  std::vector<uint64_t> win_;  // ring buffer, win_[head_] = x_n
  size_t head_ = 0;
  uint64_t steps_ = 0;
  // Nonzero recurrence taps, precomputed so stepping a sparse Q costs
  // O(weight) rather than O(r).
  std::vector<std::pair<int, uint64_t>> taps_;
};

// Smallest p >= 1 with the whole window back at its initial value; equals
// the sequence period by pure periodicity. nullopt when max_steps is
// exhausted. Requires an initial window with at least one odd residue
// (the theorems' standing assumption); use brute_period_raw to skip that
// check for raw streams.
std::optional<uint64_t> brute_period(const RecurrenceState& state, uint64_t max_steps);
std::optional<uint64_t> brute_period_raw(const RecurrenceState& state, uint64_t max_steps);

// Period of the bit-k subsequence of (x_n), k = 1 for the least
// significant bit. Needs the full period within max_steps.
std::optional<uint64_t> bit_period(const RecurrenceState& state, int k, uint64_t max_steps);

// x_n by the closed form x_n = sum_j a_{n,j} x_j with a from power_of_t:
// the jump-ahead that must agree with n direct steps.
uint64_t coeffs_reconstruct(const RingCtx& ctx, uint64_t n, const std::vector<uint64_t>& init);

// Numerator P(t) of the generating function G(t) = P(t)/Q~(t) mod 2^w,
// P_k = sum_{j<=k} q_{r+j-k} x_j. Degree < r.
IntPoly numerator_poly(const RingCtx& ctx, const std::vector<uint64_t>& init);

}  // namespace polyan
