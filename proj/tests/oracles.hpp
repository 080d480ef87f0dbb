// Independent reference implementations the tests check the library
// against. Everything here is deliberately naive: bit loops, long
// division, trial division, repeated multiplication.
#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "polyan/gf2poly.hpp"
#include "polyan/modring.hpp"

namespace oracles {

using BitVec = std::vector<int>;  // one GF(2) coefficient per entry

inline BitVec to_bits(const polyan::Gf2Poly& p) {
  BitVec v(size_t(p.degree() + 1));
  for (int j = 0; j <= p.degree(); ++j) v[size_t(j)] = p.coeff(j);
  return v;
}

inline polyan::Gf2Poly from_bits(const BitVec& v) {
  polyan::Gf2Poly p;
  for (size_t j = 0; j < v.size(); ++j)
    if (v[j] & 1) p.set_coeff(int(j), true);
  return p;
}

inline BitVec trim(BitVec v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
  return v;
}

// O(n^2) schoolbook product.
inline BitVec mul_bits(const BitVec& a, const BitVec& b) {
  if (a.empty() || b.empty()) return {};
  BitVec out(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) out[i + j] ^= a[i] & b[j];
  return trim(out);
}

// Long division remainder.
inline BitVec mod_bits(BitVec a, const BitVec& q) {
  a = trim(a);
  BitVec qq = trim(q);
  while (a.size() >= qq.size() && !a.empty()) {
    size_t shift = a.size() - qq.size();
    for (size_t j = 0; j < qq.size(); ++j) a[j + shift] ^= qq[j];
    a = trim(a);
  }
  return a;
}

// Irreducibility by trial division over every possible divisor degree.
inline bool irreducible_bits(const BitVec& q) {
  BitVec qq = trim(q);
  int r = int(qq.size()) - 1;
  if (r < 1) return false;
  for (int d = 1; d <= r / 2; ++d)
    for (uint64_t low = 0; low < (uint64_t(1) << d); ++low) {
      BitVec div(size_t(d) + 1, 0);
      div[size_t(d)] = 1;
      for (int j = 0; j < d; ++j) div[size_t(j)] = int(low >> j & 1);
      if (mod_bits(qq, div).empty()) return false;
    }
  return true;
}

// Order of t by multiplying by t one step at a time.
inline uint64_t brute_order_of_t(const polyan::Gf2Poly& q, uint64_t bound) {
  polyan::Gf2Poly one = polyan::gf2_mod(polyan::Gf2Poly::one(), q);
  polyan::Gf2Poly u = polyan::gf2_mod(polyan::Gf2Poly::t(), q);
  polyan::Gf2Poly acc = u;
  for (uint64_t k = 1; k <= bound; ++k) {
    if (acc == one) return k;
    acc = polyan::gf2_mod(polyan::gf2_mul(acc, u), q);
  }
  return 0;
}

inline std::vector<std::pair<uint64_t, int>> trial_factor(uint64_t n) {
  std::vector<std::pair<uint64_t, int>> out;
  for (uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      int e = 0;
      while (n % d == 0) {
        n /= d;
        ++e;
      }
      out.push_back({d, e});
    }
  if (n > 1) out.push_back({n, 1});
  return out;
}

inline uint64_t totient_by_gcd_count(uint64_t n) {
  auto gcd = [](uint64_t a, uint64_t b) {
    while (b) {
      uint64_t t = a % b;
      a = b;
      b = t;
    }
    return a;
  };
  uint64_t c = 0;
  for (uint64_t k = 1; k <= n; ++k)
    if (gcd(k, n) == 1) ++c;
  return c;
}

// Product in Z_{2^w}[t]/Q via full convolution then long division by Q,
// a different route from the library's reduction-row fold.
inline std::vector<uint64_t> ring_mul_longdiv(const polyan::RingCtx& c,
                                              const std::vector<uint64_t>& a,
                                              const std::vector<uint64_t>& b) {
  const size_t r = size_t(c.r());
  std::vector<uint64_t> prod(2 * r - 1, 0);
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < r; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) & c.mask();
  for (size_t d = 2 * r - 2; d + 1 > r; --d) {
    uint64_t lead = prod[d];
    if (!lead) continue;
    uint64_t f = (lead * c.qr_inv()) & c.mask();
    for (size_t j = 0; j <= r; ++j)
      prod[d - r + j] = (prod[d - r + j] - f * c.residue(int(j))) & c.mask();
  }
  prod.resize(r);
  return prod;
}

// Order of t in Z_{2^w}[t]/Q by stepwise multiplication.
inline uint64_t brute_rho(const polyan::RingCtx& c, uint64_t bound) {
  polyan::ModElem one = polyan::ModElem::one(c);
  polyan::ModElem u = polyan::mul_by_t(one);
  polyan::ModElem acc = u;
  for (uint64_t k = 1; k <= bound; ++k) {
    if (acc == one) return k;
    acc = polyan::mul_by_t(acc);
  }
  return 0;
}

inline std::mt19937_64 rng(uint64_t seed) { return std::mt19937_64(seed); }

}  // namespace oracles
