#include "polyan/modring.hpp"

#include <stdexcept>

namespace polyan {

std::string u128_to_string(u128 v) {
  if (v == 0) return "0";
  std::string s;
  while (v) {
    s += char('0' + int(v % 10));
    v /= 10;
  }
  return {s.rbegin(), s.rend()};
}

Gf2Poly IntPoly::mod2() const {
  Gf2Poly p;
  for (int j = 0; j <= degree(); ++j)
    if (c[size_t(j)] & 1) p.set_coeff(j, true);
  return p;
}

IntPoly IntPoly::negate_t() const {
  IntPoly p = *this;
  for (size_t j = 1; j < p.c.size(); j += 2) p.c[j] = -p.c[j];
  return p;
}

IntPoly reverse(const IntPoly& q) {
  if (q.is_zero() || q.c[0] == 0)
    throw std::invalid_argument("reverse: q_0 = 0 would drop the degree");
  std::vector<int64_t> rc(q.c.rbegin(), q.c.rend());
  return IntPoly(std::move(rc));
}

uint64_t odd_inverse(uint64_t a, uint64_t mask) {
  if (!(a & 1)) throw std::invalid_argument("odd_inverse: even argument");
  uint64_t x = a;  // correct mod 8 already for odd a
  for (int i = 0; i < 5; ++i) x *= 2 - a * x;
  return x & mask;
}

RingCtx::RingCtx(IntPoly q, int w) : q_(std::move(q)), w_(w) {
  r_ = q_.degree();
  if (r_ < 1) throw std::invalid_argument("RingCtx: polynomial degree must be >= 1");
  if (w_ < 1 || w_ > 64) throw std::invalid_argument("RingCtx: need 1 <= w <= 64");
  if (!(q_.coeff(0) & 1) || !(q_.coeff(r_) & 1))
    throw std::invalid_argument("RingCtx: q_0 and q_r must be odd");
  mask_ = w_ == 64 ? ~uint64_t(0) : (uint64_t(1) << w_) - 1;
  res_.resize(size_t(r_) + 1);
  for (int j = 0; j <= r_; ++j) res_[size_t(j)] = uint64_t(q_.coeff(j)) & mask_;
  qr_inv_ = odd_inverse(res_[size_t(r_)], mask_);
  q0_inv_ = odd_inverse(res_[0], mask_);
  red_.resize(size_t(r_));
  for (int j = 0; j < r_; ++j) red_[size_t(j)] = (0 - qr_inv_ * res_[size_t(j)]) & mask_;
}

ModElem ModElem::zero(const RingCtx& c) { return {&c, std::vector<uint64_t>(size_t(c.r()), 0)}; }

ModElem ModElem::one(const RingCtx& c) { return constant(c, 1); }

ModElem ModElem::constant(const RingCtx& c, uint64_t v) {
  ModElem e = zero(c);
  e.a[0] = v & c.mask();
  return e;
}

ModElem ModElem::from_coeffs(const RingCtx& c, const std::vector<int64_t>& coeffs) {
  ModElem e = zero(c);
  for (size_t j = 0; j < coeffs.size(); ++j) {
    if (int(j) >= c.r()) throw std::invalid_argument("ModElem: too many coefficients");
    e.a[j] = uint64_t(coeffs[j]) & c.mask();
  }
  return e;
}

bool ModElem::is_one() const {
  if (a.empty() || a[0] != 1) return false;
  for (size_t j = 1; j < a.size(); ++j)
    if (a[j]) return false;
  return true;
}

namespace {

void check_same_ctx(const ModElem& x, const ModElem& y) {
  if (x.ctx != y.ctx) throw std::invalid_argument("ring op: context mismatch");
}

}  // namespace

ModElem ring_add(const ModElem& x, const ModElem& y) {
  check_same_ctx(x, y);
  ModElem z = x;
  for (size_t j = 0; j < z.a.size(); ++j) z.a[j] = (z.a[j] + y.a[j]) & x.ctx->mask();
  return z;
}

ModElem ring_sub(const ModElem& x, const ModElem& y) {
  check_same_ctx(x, y);
  ModElem z = x;
  for (size_t j = 0; j < z.a.size(); ++j) z.a[j] = (z.a[j] - y.a[j]) & x.ctx->mask();
  return z;
}

ModElem ring_mul(const ModElem& x, const ModElem& y) {
  check_same_ctx(x, y);
  const RingCtx& c = *x.ctx;
  const size_t r = size_t(c.r());
  // Full product, then fold degrees 2r-2..r down with t^r = sum red[j] t^j.
  // Plain uint64 wraparound is exact in the low w bits.
  std::vector<uint64_t> prod(2 * r - 1, 0);
  for (size_t i = 0; i < r; ++i) {
    if (!x.a[i]) continue;
    for (size_t j = 0; j < r; ++j) prod[i + j] += x.a[i] * y.a[j];
  }
  const auto& red = c.reduction_row();
  for (size_t d = 2 * r - 2; d >= r; --d) {
    uint64_t v = prod[d] & c.mask();
    if (v)
      for (size_t j = 0; j < r; ++j) prod[d - r + j] += v * red[j];
    if (d == r) break;
  }
  ModElem z = ModElem::zero(c);
  for (size_t j = 0; j < r; ++j) z.a[j] = prod[j] & c.mask();
  return z;
}

ModElem mul_by_t(const ModElem& x) {
  const RingCtx& c = *x.ctx;
  const size_t r = size_t(c.r());
  ModElem z = ModElem::zero(c);
  uint64_t hi = x.a[r - 1];
  for (size_t j = r - 1; j >= 1; --j) z.a[j] = x.a[j - 1];
  z.a[0] = 0;
  if (hi) {
    const auto& red = c.reduction_row();
    for (size_t j = 0; j < r; ++j) z.a[j] = (z.a[j] + hi * red[j]) & c.mask();
  }
  return z;
}

ModElem power_of_t(const RingCtx& ctx, uint64_t n) {
  ModElem res = ModElem::one(ctx);
  if (n == 0) return res;
  int top = 63;
  while (!(n >> top & 1)) --top;
  for (int b = top; b >= 0; --b) {
    res = ring_mul(res, res);
    if (n >> b & 1) res = mul_by_t(res);
  }
  return res;
}

namespace {

// Bezout coefficient u with u*a == gcd(a, q) mod q over GF(2).
std::pair<Gf2Poly, Gf2Poly> gf2_ext_gcd(Gf2Poly a, Gf2Poly q) {
  Gf2Poly u0 = Gf2Poly::one(), u1 = Gf2Poly::zero();
  // Invariant: u0*a_orig == a (mod q_orig), u1*a_orig == q (mod q_orig).
  while (!q.is_zero()) {
    // a = div * q + rem
    Gf2Poly rem = a, div;
    int dq = q.degree();
    while (rem.degree() >= dq && !rem.is_zero()) {
      int k = rem.degree() - dq;
      div.set_coeff(k, true);
      rem ^= q.shifted_left(k);
    }
    Gf2Poly u2 = u0 ^ gf2_mul(div, u1);
    u0 = std::move(u1);
    u1 = std::move(u2);
    a = std::move(q);
    q = std::move(rem);
  }
  return {a, u0};  // gcd, bezout for a_orig
}

}  // namespace

ModElem invert(const ModElem& x) {
  const RingCtx& c = *x.ctx;
  Gf2Poly a2;
  for (int j = 0; j < c.r(); ++j)
    if (x.a[size_t(j)] & 1) a2.set_coeff(j, true);
  Gf2Poly q2 = c.poly().mod2();
  auto [g, u] = gf2_ext_gcd(a2, q2);
  if (g.degree() != 0)
    throw std::domain_error("invert: element not invertible mod (2, Q)");
  ModElem b = ModElem::zero(c);
  for (int j = 0; j < c.r(); ++j) b.a[size_t(j)] = u.coeff(j) ? 1 : 0;
  // Newton: b <- b(2 - xb); precision doubles per step.
  for (int prec = 1; prec < c.w(); prec *= 2) {
    ModElem t = ring_mul(x, b);
    ModElem corr = ring_sub(ModElem::constant(c, 2), t);
    b = ring_mul(b, corr);
  }
  return b;
}

u128 rho_w(const RingCtx& ctx, uint64_t lambda) {
  if (lambda == 0) throw std::invalid_argument("rho_w: lambda must be positive");
  if (!is_irreducible(ctx.poly().mod2()))
    throw std::domain_error("rho_w: Q mod 2 is reducible; the period theory does not apply");
  ModElem u = power_of_t(ctx, lambda);
  int e = 0;
  while (!u.is_one()) {
    if (e >= ctx.w() - 1)
      throw std::domain_error("rho_w: t^lambda did not reach 1 within w-1 squarings (wrong lambda?)");
    u = ring_mul(u, u);
    ++e;
  }
  return u128(lambda) << e;
}

}  // namespace polyan
