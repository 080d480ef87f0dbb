#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "polyan/gf2poly.hpp"

namespace polyan {

using u128 = unsigned __int128;

std::string u128_to_string(u128 v);

// Integer-coefficient polynomial, index = exponent. Normalized so the
// leading coefficient is nonzero; the zero polynomial is an empty vector
// with degree() == -1.
struct IntPoly {
  std::vector<int64_t> c;

  IntPoly() = default;
  explicit IntPoly(std::vector<int64_t> coeffs) : c(std::move(coeffs)) { normalize(); }

  int degree() const { return int(c.size()) - 1; }
  int64_t coeff(int j) const { return j >= 0 && j < int(c.size()) ? c[size_t(j)] : 0; }
  bool is_zero() const { return c.empty(); }

  void normalize() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }

  Gf2Poly mod2() const;
  IntPoly negate_t() const;  // Q(-t): negate odd-index coefficients

  friend bool operator==(const IntPoly& a, const IntPoly& b) = default;
};

// Q~(t) = t^r Q(1/t): the coefficient list reversed. Requires q_0 != 0.
IntPoly reverse(const IntPoly& q);

// Inverse of an odd residue mod 2^w (w encoded in `mask` = 2^w - 1).
uint64_t odd_inverse(uint64_t a, uint64_t mask);

// The quotient ring Z_{2^w}[t]/Q(t), 1 <= w <= 64. Requires q_0 and q_r
// odd. Immutable after construction and safe to share across threads.
class RingCtx {
 public:
  RingCtx(IntPoly q, int w);

  const IntPoly& poly() const { return q_; }
  int r() const { return r_; }
  int w() const { return w_; }
  uint64_t mask() const { return mask_; }
  uint64_t residue(int j) const { return res_[size_t(j)]; }
  uint64_t qr_inv() const { return qr_inv_; }
  uint64_t q0_inv() const { return q0_inv_; }
  // red[j] = (-q_r^{-1} q_j) mod 2^w, so t^r = sum_j red[j] t^j.
  const std::vector<uint64_t>& reduction_row() const { return red_; }

 private:
  IntPoly q_;
  int r_, w_;
  uint64_t mask_;
  std::vector<uint64_t> res_;
  std::vector<uint64_t> red_;
  uint64_t qr_inv_, q0_inv_;
};

// Element of Z_{2^w}[t]/Q(t): r residues a_0..a_{r-1}, each in [0, 2^w).
struct ModElem {
  const RingCtx* ctx = nullptr;
  std::vector<uint64_t> a;

  static ModElem zero(const RingCtx& c);
  static ModElem one(const RingCtx& c);
  static ModElem constant(const RingCtx& c, uint64_t v);
  static ModElem from_coeffs(const RingCtx& c, const std::vector<int64_t>& coeffs);

  bool is_one() const;
  friend bool operator==(const ModElem& x, const ModElem& y) { return x.a == y.a; }
};

ModElem ring_add(const ModElem& x, const ModElem& y);
ModElem ring_sub(const ModElem& x, const ModElem& y);
ModElem ring_mul(const ModElem& x, const ModElem& y);
ModElem mul_by_t(const ModElem& x);

// t^n via square-and-multiply; the coefficient vector a_{n,j}.
ModElem power_of_t(const RingCtx& ctx, uint64_t n);

// Hensel/Newton inverse: extended Euclid mod (2, Q), then b <- b(2 - ab),
// doubling the 2-adic precision each step. Throws std::domain_error when
// a mod 2 is not invertible in Z_2[t]/Q.
ModElem invert(const ModElem& x);

// rho_w = 2^e * lambda where e is the number of squarings taking
// t^lambda to 1 mod (2^w, Q). Requires Q mod 2 irreducible and lambda the
// order of t mod (2, Q); throws std::domain_error otherwise.
u128 rho_w(const RingCtx& ctx, uint64_t lambda);

}  // namespace polyan
