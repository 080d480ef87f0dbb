#include "polyan/gf2poly.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace polyan {

namespace {

// spread8[b] has the bits of b interleaved with zeros: bit k -> bit 2k.
constexpr std::array<uint16_t, 256> make_spread8() {
  std::array<uint16_t, 256> tab{};
  for (int b = 0; b < 256; ++b) {
    uint16_t s = 0;
    for (int k = 0; k < 8; ++k)
      if (b >> k & 1) s |= uint16_t(1) << (2 * k);
    tab[b] = s;
  }
  return tab;
}
constexpr auto kSpread8 = make_spread8();

uint64_t spread32(uint32_t x) {
  return uint64_t(kSpread8[x & 0xff]) | uint64_t(kSpread8[x >> 8 & 0xff]) << 16 |
         uint64_t(kSpread8[x >> 16 & 0xff]) << 32 | uint64_t(kSpread8[x >> 24]) << 48;
}

}  // namespace

Gf2Poly Gf2Poly::from_word(uint64_t bits) {
  Gf2Poly p;
  if (bits) p.words_.push_back(bits);
  return p;
}

Gf2Poly Gf2Poly::monomial(int e) {
  Gf2Poly p;
  p.set_coeff(e, true);
  return p;
}

Gf2Poly Gf2Poly::from_exponents(const std::vector<int>& exps) {
  Gf2Poly p;
  for (int e : exps) p.set_coeff(e, !p.coeff(e));
  return p;
}

int Gf2Poly::degree() const {
  if (words_.empty()) return -1;
  return int(words_.size() - 1) * 64 + 63 - std::countl_zero(words_.back());
}

bool Gf2Poly::coeff(int e) const {
  if (e < 0) return false;
  size_t i = size_t(e) / 64;
  return i < words_.size() && (words_[i] >> (e % 64) & 1);
}

void Gf2Poly::set_coeff(int e, bool v) {
  size_t i = size_t(e) / 64;
  if (i >= words_.size()) {
    if (!v) return;
    words_.resize(i + 1, 0);
  }
  uint64_t bit = uint64_t(1) << (e % 64);
  if (v)
    words_[i] |= bit;
  else
    words_[i] &= ~bit;
  normalize();
}

int Gf2Poly::weight() const {
  int w = 0;
  for (uint64_t x : words_) w += std::popcount(x);
  return w;
}

void Gf2Poly::normalize() {
  while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

Gf2Poly& Gf2Poly::operator^=(const Gf2Poly& o) {
  if (o.words_.size() > words_.size()) words_.resize(o.words_.size(), 0);
  for (size_t i = 0; i < o.words_.size(); ++i) words_[i] ^= o.words_[i];
  normalize();
  return *this;
}

Gf2Poly Gf2Poly::shifted_left(int k) const {
  if (is_zero() || k == 0) return *this;
  int wshift = k / 64, bshift = k % 64;
  Gf2Poly r;
  r.words_.assign(words_.size() + wshift + 1, 0);
  for (size_t i = 0; i < words_.size(); ++i) {
    r.words_[i + wshift] |= words_[i] << bshift;
    if (bshift) r.words_[i + wshift + 1] |= words_[i] >> (64 - bshift);
  }
  r.normalize();
  return r;
}

Gf2Poly Gf2Poly::shifted_right(int k) const {
  int wshift = k / 64, bshift = k % 64;
  if (size_t(wshift) >= words_.size()) return {};
  Gf2Poly r;
  r.words_.assign(words_.size() - wshift, 0);
  for (size_t i = 0; i < r.words_.size(); ++i) {
    r.words_[i] = words_[i + wshift] >> bshift;
    if (bshift && i + wshift + 1 < words_.size())
      r.words_[i] |= words_[i + wshift + 1] << (64 - bshift);
  }
  r.normalize();
  return r;
}

Gf2Poly Gf2Poly::truncated(int k) const {
  if (k <= 0) return {};
  Gf2Poly r;
  size_t nwords = (size_t(k) + 63) / 64;
  r.words_.assign(words_.begin(), words_.begin() + std::min(nwords, words_.size()));
  if (r.words_.size() == nwords && k % 64) r.words_.back() &= (uint64_t(1) << (k % 64)) - 1;
  r.normalize();
  return r;
}

std::string Gf2Poly::to_string() const {
  if (is_zero()) return "0";
  std::string s;
  for (int e = 0; e <= degree(); ++e) {
    if (!coeff(e)) continue;
    if (!s.empty()) s += "+";
    if (e == 0)
      s += "1";
    else if (e == 1)
      s += "t";
    else
      s += "t^" + std::to_string(e);
  }
  return s;
}

Gf2Poly gf2_mul(const Gf2Poly& a, const Gf2Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const auto& aw = a.words();
  const auto& bw = b.words();
  // Iterate over set bits of the lighter operand.
  if (a.weight() > b.weight()) return gf2_mul(b, a);
  std::vector<uint64_t> out(aw.size() + bw.size(), 0);
  for (size_t i = 0; i < aw.size(); ++i) {
    uint64_t w = aw[i];
    while (w) {
      int k = std::countr_zero(w);
      w &= w - 1;
      for (size_t j = 0; j < bw.size(); ++j) {
        out[i + j] ^= bw[j] << k;
        if (k) out[i + j + 1] ^= bw[j] >> (64 - k);
      }
    }
  }
  return Gf2Poly::take_words(std::move(out));
}

Gf2Poly gf2_sqr(const Gf2Poly& a) {
  if (a.is_zero()) return {};
  const auto& aw = a.words();
  std::vector<uint64_t> out(2 * aw.size(), 0);
  for (size_t i = 0; i < aw.size(); ++i) {
    out[2 * i] = spread32(uint32_t(aw[i]));
    out[2 * i + 1] = spread32(uint32_t(aw[i] >> 32));
  }
  return Gf2Poly::take_words(std::move(out));
}

Gf2Poly gf2_mod(const Gf2Poly& a, const Gf2Poly& q) {
  if (q.is_zero()) throw std::invalid_argument("gf2_mod: division by zero polynomial");
  int r = q.degree();
  Gf2Poly rem = a;
  // Fold t^r = q_low repeatedly: with a = l + t^r h, a = l ^ q_low*h.
  // Degree strictly decreases each pass; for sparse q each pass is a few
  // shifted xors, which keeps the big-trinomial squaring chain fast.
  Gf2Poly q_low = q;
  q_low.set_coeff(r, false);
  while (rem.degree() >= r) {
    Gf2Poly high = rem.shifted_right(r);
    rem = rem.truncated(r);
    rem ^= gf2_mul(q_low, high);
  }
  return rem;
}

Gf2Poly gf2_mulmod(const Gf2Poly& a, const Gf2Poly& b, const Gf2Poly& q) {
  return gf2_mod(gf2_mul(a, b), q);
}

Gf2Poly gf2_sqrmod(const Gf2Poly& a, const Gf2Poly& q) {
  return gf2_mod(gf2_sqr(a), q);
}

Gf2Poly gf2_gcd(Gf2Poly a, Gf2Poly b) {
  while (!b.is_zero()) {
    Gf2Poly r = gf2_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

Gf2Poly gf2_pow_t_mod(uint64_t n, const Gf2Poly& q) {
  Gf2Poly res = gf2_mod(Gf2Poly::one(), q);
  if (n == 0) return res;
  Gf2Poly t = gf2_mod(Gf2Poly::t(), q);
  for (int b = 63 - std::countl_zero(n); b >= 0; --b) {
    res = gf2_sqrmod(res, q);
    if (n >> b & 1) res = gf2_mulmod(res, t, q);
  }
  return res;
}

bool is_irreducible(const Gf2Poly& q) {
  int r = q.degree();
  if (r < 1) throw std::invalid_argument("is_irreducible: degree must be >= 1");
  if (r == 1) return true;
  // Prime divisors of r by trial division.
  std::vector<int> rprimes;
  int m = r;
  for (int d = 2; d * d <= m; ++d)
    while (m % d == 0) {
      if (rprimes.empty() || rprimes.back() != d) rprimes.push_back(d);
      m /= d;
    }
  if (m > 1) rprimes.push_back(m);

  Gf2Poly t = gf2_mod(Gf2Poly::t(), q);
  Gf2Poly u = t;
  for (int k = 1; k <= r; ++k) {
    u = gf2_sqrmod(u, q);
    for (int p : rprimes)
      if (k == r / p) {
        Gf2Poly g = gf2_gcd(u ^ t, q);
        if (g.degree() != 0) return false;
      }
  }
  return u == t;
}

uint64_t mersenne_value(int r) {
  if (r < 1 || r > 64) throw std::invalid_argument("mersenne_value: need 1 <= r <= 64");
  return r == 64 ? ~uint64_t(0) : (uint64_t(1) << r) - 1;
}

uint64_t order_of_t(const Gf2Poly& q, const Factorization& fac) {
  int r = q.degree();
  if (r < 1) throw std::invalid_argument("order_of_t: degree must be >= 1");
  if (!q.coeff(0)) throw std::domain_error("order_of_t: t is not invertible when q(0) = 0");
  if (fac.n != mersenne_value(r))
    throw std::invalid_argument("order_of_t: factorization is not of 2^r - 1");
  if (!is_irreducible(q))
    throw std::domain_error("order_of_t: reducible polynomial, order need not divide 2^r - 1");
  Gf2Poly one = gf2_mod(Gf2Poly::one(), q);
  uint64_t lam = fac.n;
  for (auto [p, e] : fac.factors)
    for (int i = 0; i < e; ++i) {
      if (lam % p != 0) break;
      if (gf2_pow_t_mod(lam / p, q) == one)
        lam /= p;
      else
        break;
    }
  return lam;
}

namespace {

// t^{2^r} == t (mod q): when 2^r - 1 is prime (r prime) and q has odd
// constant term and odd weight, this is equivalent to q being irreducible,
// hence primitive.
bool mersenne_prime_shortcut(const Gf2Poly& q) {
  int r = q.degree();
  if (!q.coeff(0) || !q.eval_at_one()) return false;  // t or t+1 would divide
  Gf2Poly t = gf2_mod(Gf2Poly::t(), q);
  Gf2Poly u = t;
  for (int k = 0; k < r; ++k) u = gf2_sqrmod(u, q);
  return u == t;
}

}  // namespace

bool is_known_mersenne_exponent(int r) {
  static constexpr int kExps[] = {89,   107,  127,  521,  607,   1279,  2203,  2281,  3217,
                                  4253, 4423, 9689, 9941, 11213, 19937, 21701, 23209, 44497};
  return std::find(std::begin(kExps), std::end(kExps), r) != std::end(kExps);
}

bool is_primitive(const Gf2Poly& q) {
  int r = q.degree();
  if (r < 1) throw std::invalid_argument("is_primitive: degree must be >= 1");
  if (!q.coeff(0)) return false;  // divisible by t
  if (r > 64) {
    if (!is_known_mersenne_exponent(r))
      throw std::domain_error("is_primitive: degree > 64 supported only for known Mersenne-prime exponents");
    return mersenne_prime_shortcut(q);
  }
  Factorization fac = factor_mersenne(r);
  if (fac.factors.size() == 1 && fac.factors[0].second == 1)
    return mersenne_prime_shortcut(q);
  if (!is_irreducible(q)) return false;
  return order_of_t(q, fac) == fac.n;
}

// ---- integer factoring --------------------------------------------------

namespace {

using u128 = unsigned __int128;

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) { return uint64_t(u128(a) * b % m); }

uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t m) {
  uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod_u64(r, a, m);
    a = mulmod_u64(a, a, m);
    e >>= 1;
  }
  return r;
}

uint64_t gcd_u64(uint64_t a, uint64_t b) {
  while (b) {
    uint64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// Brent's variant of Pollard rho; c varies deterministically across retries.
uint64_t pollard_brent(uint64_t n, uint64_t c) {
  uint64_t x = 2, y = 2, d = 1;
  uint64_t ys = y, q = 1;
  const uint64_t m = 128;
  uint64_t r = 1;
  auto f = [&](uint64_t v) { return (mulmod_u64(v, v, n) + c) % n; };
  while (d == 1) {
    x = y;
    for (uint64_t i = 0; i < r; ++i) y = f(y);
    for (uint64_t k = 0; k < r && d == 1; k += m) {
      ys = y;
      for (uint64_t i = 0; i < std::min(m, r - k); ++i) {
        y = f(y);
        q = mulmod_u64(q, x > y ? x - y : y - x, n);
      }
      d = gcd_u64(q, n);
    }
    r *= 2;
  }
  if (d == n) {
    do {
      ys = f(ys);
      d = gcd_u64(x > ys ? x - ys : ys - x, n);
    } while (d == 1);
  }
  return d;
}

void factor_rec(uint64_t n, std::vector<uint64_t>& out) {
  if (n == 1) return;
  if (is_prime_u64(n)) {
    out.push_back(n);
    return;
  }
  uint64_t d = n;
  for (uint64_t c = 1; d == n; ++c) d = pollard_brent(n, c);
  factor_rec(d, out);
  factor_rec(n / d, out);
}

}  // namespace

bool is_prime_u64(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  uint64_t d = n - 1;
  int s = std::countr_zero(d);
  d >>= s;
  for (uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 0; i < s - 1 && composite; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) composite = false;
    }
    if (composite) return false;
  }
  return true;
}

Factorization factor_mersenne(int r) {
  static std::mutex mu;
  static std::unordered_map<int, Factorization> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(r);
    if (it != cache.end()) return it->second;
  }
  uint64_t n = mersenne_value(r);
  Factorization fac;
  fac.n = n;
  std::vector<uint64_t> primes;
  uint64_t m = n;
  for (uint64_t d = 3; d < 100000 && d * d <= m; d += 2)
    while (m % d == 0) {
      primes.push_back(d);
      m /= d;
    }
  if (m > 1) factor_rec(m, primes);
  std::sort(primes.begin(), primes.end());
  for (uint64_t p : primes) {
    if (!fac.factors.empty() && fac.factors.back().first == p)
      ++fac.factors.back().second;
    else
      fac.factors.push_back({p, 1});
  }
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(r, fac);
  return fac;
}

uint64_t euler_phi(const Factorization& fac) {
  uint64_t phi = 1;
  for (auto [p, e] : fac.factors) {
    phi *= p - 1;
    for (int i = 1; i < e; ++i) phi *= p;
  }
  return phi;
}

}  // namespace polyan
