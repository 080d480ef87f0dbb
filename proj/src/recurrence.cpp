#include "polyan/recurrence.hpp"

#include <stdexcept>

namespace polyan {

RecurrenceState::RecurrenceState(const RingCtx& ctx, const std::vector<uint64_t>& init)
    : ctx_(&ctx) {
  if (int(init.size()) != ctx.r())
    throw std::invalid_argument("RecurrenceState: init must have exactly r values");
  win_.resize(init.size());
  for (size_t j = 0; j < init.size(); ++j) win_[j] = init[j] & ctx.mask();
  for (int j = 0; j <= ctx.r(); ++j)
    if (ctx.residue(j)) taps_.push_back({j, ctx.residue(j)});
}

uint64_t RecurrenceState::step() {
  const RingCtx& c = *ctx_;
  const size_t r = win_.size();
  uint64_t acc = 0;
  for (auto [j, qj] : taps_) {
    if (j == int(r)) continue;
    acc += qj * win_[(head_ + size_t(j)) % r];
  }
  uint64_t next = (0 - c.qr_inv() * acc) & c.mask();
  win_[head_] = next;  // x_n leaves, x_{n+r} enters
  head_ = (head_ + 1) % r;
  ++steps_;
  return next;
}

uint64_t RecurrenceState::step_back() {
  const RingCtx& c = *ctx_;
  const size_t r = win_.size();
  // q_0 x_{n-1} = -(q_1 x_n + ... + q_r x_{n+r-1})
  uint64_t acc = 0;
  for (auto [j, qj] : taps_) {
    if (j == 0) continue;
    acc += qj * win_[(head_ + size_t(j) - 1) % r];
  }
  uint64_t prev = (0 - c.q0_inv() * acc) & c.mask();
  head_ = (head_ + r - 1) % r;
  win_[head_] = prev;  // x_{n+r-1} leaves, x_{n-1} enters
  --steps_;
  return prev;
}

std::vector<uint64_t> RecurrenceState::window() const {
  std::vector<uint64_t> out(win_.size());
  for (size_t j = 0; j < win_.size(); ++j) out[j] = win_[(head_ + j) % win_.size()];
  return out;
}

bool RecurrenceState::window_equals(const std::vector<uint64_t>& v) const {
  if (v.size() != win_.size()) return false;
  for (size_t j = 0; j < win_.size(); ++j)
    if (win_[(head_ + j) % win_.size()] != v[j]) return false;
  return true;
}

bool RecurrenceState::window_has_odd() const {
  for (uint64_t v : win_)
    if (v & 1) return true;
  return false;
}

std::optional<uint64_t> brute_period_raw(const RecurrenceState& state, uint64_t max_steps) {
  RecurrenceState s = state;
  std::vector<uint64_t> init = s.window();
  for (uint64_t p = 1; p <= max_steps; ++p) {
    s.step();
    if (s.window_equals(init)) return p;
  }
  return std::nullopt;
}

std::optional<uint64_t> brute_period(const RecurrenceState& state, uint64_t max_steps) {
  if (!state.window_has_odd())
    throw std::invalid_argument("brute_period: initial window must contain an odd value");
  return brute_period_raw(state, max_steps);
}

std::optional<uint64_t> bit_period(const RecurrenceState& state, int k, uint64_t max_steps) {
  if (k < 1 || k > state.ctx().w())
    throw std::invalid_argument("bit_period: bit index out of range");
  if (!state.window_has_odd())
    throw std::invalid_argument("bit_period: initial window must contain an odd value");
  // One full period of the value stream, then the minimal cyclic period of
  // the extracted bit (a divisor of p).
  RecurrenceState s = state;
  std::vector<uint64_t> init = s.window();
  std::vector<int> bits;
  uint64_t p = 0;
  for (uint64_t n = 1; n <= max_steps; ++n) {
    bits.push_back(int(s.front() >> (k - 1) & 1));
    s.step();
    if (s.window_equals(init)) {
      p = n;
      break;
    }
  }
  if (p == 0) return std::nullopt;
  for (uint64_t d = 1; d <= p; ++d) {
    if (p % d != 0) continue;
    bool ok = true;
    for (uint64_t i = 0; i < p && ok; ++i) ok = bits[size_t(i)] == bits[size_t((i + d) % p)];
    if (ok) return d;
  }
  return p;  // unreachable: d = p always matches
}

uint64_t coeffs_reconstruct(const RingCtx& ctx, uint64_t n, const std::vector<uint64_t>& init) {
  if (int(init.size()) != ctx.r())
    throw std::invalid_argument("coeffs_reconstruct: init must have exactly r values");
  ModElem a = power_of_t(ctx, n);
  uint64_t x = 0;
  for (size_t j = 0; j < init.size(); ++j) x += a.a[j] * init[j];
  return x & ctx.mask();
}

IntPoly numerator_poly(const RingCtx& ctx, const std::vector<uint64_t>& init) {
  if (int(init.size()) != ctx.r())
    throw std::invalid_argument("numerator_poly: init must have exactly r values");
  const int r = ctx.r();
  std::vector<int64_t> p(static_cast<size_t>(r), 0);
  for (int k = 0; k < r; ++k) {
    uint64_t acc = 0;
    for (int j = 0; j <= k; ++j) acc += ctx.residue(r + j - k) * init[size_t(j)];
    p[size_t(k)] = int64_t(acc & ctx.mask());
  }
  return IntPoly(std::move(p));
}

}  // namespace polyan
