#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace polyan {

// Polynomial over GF(2), one bit per coefficient (bit j of words[j/64] is
// the coefficient of t^j). Normalized: no trailing zero words, so the zero
// polynomial is an empty vector and has no degree (degree() == -1).
// Degrees well beyond 24000 are supported; the hot paths (squaring and
// reduction by a sparse modulus) stay word-parallel at that size.
class Gf2Poly {
 public:
  Gf2Poly() = default;

  static Gf2Poly zero() { return {}; }
  static Gf2Poly one() { return from_word(1); }
  static Gf2Poly t() { return from_word(2); }

  // Low-degree convenience: bit j of `bits` is the coefficient of t^j.
  static Gf2Poly from_word(uint64_t bits);
  static Gf2Poly monomial(int e);
  static Gf2Poly from_exponents(const std::vector<int>& exps);

  bool is_zero() const { return words_.empty(); }
  int degree() const;  // -1 for the zero polynomial
  bool coeff(int e) const;
  void set_coeff(int e, bool v);
  int weight() const;  // number of nonzero coefficients

  // Value at t=1 over GF(2), i.e. parity of the weight.
  bool eval_at_one() const { return weight() & 1; }

  const std::vector<uint64_t>& words() const { return words_; }

  Gf2Poly& operator^=(const Gf2Poly& o);
  friend Gf2Poly operator^(Gf2Poly a, const Gf2Poly& b) { return a ^= b; }
  friend bool operator==(const Gf2Poly& a, const Gf2Poly& b) = default;

  Gf2Poly shifted_left(int k) const;   // multiply by t^k
  Gf2Poly shifted_right(int k) const;  // drop coefficients below t^k
  Gf2Poly truncated(int k) const;      // coefficients of t^0..t^{k-1}

  std::string to_string() const;  // e.g. "1+t+t^3"

  void normalize();

  static Gf2Poly take_words(std::vector<uint64_t> w) {
    Gf2Poly p;
    p.words_ = std::move(w);
    p.normalize();
    return p;
  }

 private:
  std::vector<uint64_t> words_;
};

// Prime factorization of an unsigned 64-bit integer. Primes are strictly
// increasing and the product of prime^exponent reproduces n (n = 1 has an
// empty factor list).
struct Factorization {
  uint64_t n = 1;
  std::vector<std::pair<uint64_t, int>> factors;
};

Gf2Poly gf2_mul(const Gf2Poly& a, const Gf2Poly& b);
Gf2Poly gf2_sqr(const Gf2Poly& a);
Gf2Poly gf2_mod(const Gf2Poly& a, const Gf2Poly& q);
Gf2Poly gf2_mulmod(const Gf2Poly& a, const Gf2Poly& b, const Gf2Poly& q);
Gf2Poly gf2_sqrmod(const Gf2Poly& a, const Gf2Poly& q);
Gf2Poly gf2_gcd(Gf2Poly a, Gf2Poly b);

// t^n mod q for a 64-bit exponent, by square-and-multiply.
Gf2Poly gf2_pow_t_mod(uint64_t n, const Gf2Poly& q);

// Rabin's criterion: t^{2^r} == t (mod q) and gcd(t^{2^{r/p}} - t, q) = 1
// for every prime p | r.
bool is_irreducible(const Gf2Poly& q);

// Multiplicative order of t mod (2, q) for irreducible q of degree r;
// `fac` must be the factorization of 2^r - 1. Throws std::domain_error if
// q is reducible (the order need not divide 2^r - 1 then).
uint64_t order_of_t(const Gf2Poly& q, const Factorization& fac);

// True iff q is irreducible with order_of_t == 2^r - 1. When 2^r - 1 is
// prime the single test t^{2^r} == t (mod q) suffices; that shortcut is the
// only path available for r > 64 (known Mersenne exponents only).
bool is_primitive(const Gf2Poly& q);

// Full factorization of 2^r - 1, 1 <= r <= 64. Trial division plus Brent's
// cycle-based rho with a fixed seed; memoized per r and safe to call from
// multiple threads.
Factorization factor_mersenne(int r);

uint64_t euler_phi(const Factorization& fac);

// Deterministic Miller-Rabin, exact for all 64-bit n.
bool is_prime_u64(uint64_t n);

// 2^r - 1 as uint64_t, 1 <= r <= 64.
uint64_t mersenne_value(int r);

// Exponents r > 64 for which 2^r - 1 is known prime; enables the
// primitivity shortcut at degrees where factoring 2^r - 1 is out of reach.
bool is_known_mersenne_exponent(int r);

}  // namespace polyan
