#include "polyan/enumeration.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace polyan {

namespace {

uint64_t bit_reverse64(uint64_t x) {
  x = __builtin_bswap64(x);
  x = (x & 0x0F0F0F0F0F0F0F0Full) << 4 | ((x >> 4) & 0x0F0F0F0F0F0F0F0Full);
  x = (x & 0x3333333333333333ull) << 2 | ((x >> 2) & 0x3333333333333333ull);
  x = (x & 0x5555555555555555ull) << 1 | ((x >> 1) & 0x5555555555555555ull);
  return x;
}

uint64_t low_mask(int k) { return k >= 64 ? ~uint64_t(0) : (uint64_t(1) << k) - 1; }

// eps_m of an exponent-indexed pattern P (bit j = b_j), i.e. the parity of
// #{j < k, j+k = 2m, b_j = b_k = 1}. For a bit b in position j and its
// partner at 2m-j the reversed word lines the pairs up for one popcount.
// Valid for 2m <= 63.
int eps_of(uint64_t pat, uint64_t rev, int m) {
  return std::popcount(pat & (rev >> (63 - 2 * m)) & low_mask(m)) & 1;
}

// Smallest forbidden position (eps_m = 1, b_m = 0), or 0 if the pattern
// lifts; minus_mask collects the positions with q_m = -1. Pattern bits must
// include b_0 = b_r = 1. Requires r <= 63.
int lift_scan(int r, uint64_t pat, uint64_t* minus_mask) {
  uint64_t rev = bit_reverse64(pat);
  uint64_t pat_r = rev >> (63 - r);         // reversed polynomial's pattern
  uint64_t rev_r = pat << (63 - r);
  uint64_t minus = 0;
  for (int m = 1; m < r; ++m) {
    int eps = 2 * m <= r ? eps_of(pat, rev, m) : eps_of(pat_r, rev_r, r - m);
    if (eps) {
      if (!(pat >> m & 1)) return m;
      minus |= uint64_t(1) << m;
    }
  }
  *minus_mask = minus;
  return 0;
}

uint64_t pattern_of(int r, uint64_t bits) {
  return 1 | (uint64_t(1) << r) | (bit_reverse64(bits) >> (64 - r));
}

IntPoly lifted_poly(int r, uint64_t pat, uint64_t minus) {
  std::vector<int64_t> c(size_t(r) + 1, 0);
  for (int j = 0; j <= r; ++j)
    c[size_t(j)] = (minus >> j & 1) ? -1 : int64_t(pat >> j & 1);
  return IntPoly(std::move(c));
}

// Lex comparison of the lift against its reversal under -1 < 0 < +1;
// <= 0 means the scanned polynomial is the canonical pair member.
int cmp_with_reversal(int r, uint64_t pat, uint64_t minus) {
  auto val = [&](int j) { return (minus >> j & 1) ? -1 : int(pat >> j & 1); };
  for (int j = 0; j <= r; ++j) {
    int d = val(j) - val(r - j);
    if (d) return d;
  }
  return 0;
}

// Device 2: admissible low-order suffixes b_{r-s}..b_{r-1} (b_{r-1} at bit
// 0, matching the low s bits of N). A suffix is excluded when some
// eps_{r-m}, 2m <= s, already forces a coefficient 2 mod 4.
std::vector<uint32_t> build_suffix_table(int s) {
  std::vector<uint32_t> suf;
  if (s == 0) {
    suf.push_back(0);
    return suf;
  }
  for (uint64_t sigma = 0; sigma < (uint64_t(1) << s); ++sigma) {
    // Reversed-polynomial prefix: bit 0 = b_r = 1, bit i = b_{r-i}.
    uint64_t pr = 1 | (sigma << 1);
    uint64_t rev = bit_reverse64(pr);
    bool ok = true;
    for (int m = 1; 2 * m <= s && ok; ++m)
      if (eps_of(pr, rev, m) && !(pr >> m & 1)) ok = false;
    if (ok) suf.push_back(uint32_t(sigma));
  }
  return suf;
}

struct WorkerAcc {
  uint64_t kappa = 0, nu = 0, visited = 0, skips = 0;
  std::vector<IntPoly> reps;
};

void scan_range(int r, const EnumOptions& opts, int s, const std::vector<uint32_t>& suf,
                uint64_t lo, uint64_t hi, WorkerAcc& acc) {
  const uint64_t smask = low_mask(s);
  uint64_t target = lo;
  while (target < hi) {
    uint64_t pbase = target & ~smask;
    if (pbase >= hi) break;
    auto it = std::lower_bound(suf.begin(), suf.end(), uint32_t(target & smask));
    if (it == suf.end()) {
      target = pbase + smask + 1;
      continue;
    }
    uint64_t N = pbase | *it;
    if (N >= hi) break;
    ++acc.visited;
    uint64_t pat = pattern_of(r, N);
    uint64_t minus = 0;
    int fm = lift_scan(r, pat, &minus);
    if (fm == 0) {
      ++acc.kappa;
      if (is_primitive(Gf2Poly::from_word(pat)) && cmp_with_reversal(r, pat, minus) <= 0) {
        ++acc.nu;
        if (opts.collect_representatives) acc.reps.push_back(lifted_poly(r, pat, minus));
      }
      target = N + 1;
    } else if (opts.device1 && 2 * fm < r) {
      uint64_t jump = (N | low_mask(r - 1 - 2 * fm)) + 1;
      if (jump > N + 1) ++acc.skips;
      target = jump;
    } else {
      target = N + 1;
    }
  }
}

}  // namespace

LiftResult lift_bits(int r, uint64_t bits) {
  if (r < 1 || r > 63) throw std::invalid_argument("lift_bits: need 1 <= r <= 63");
  if (r == 1 ? bits != 0 : (bits >> (r - 1)) != 0)
    throw std::invalid_argument("lift_bits: pattern wider than r-1 bits");
  uint64_t pat = pattern_of(r, bits);
  uint64_t minus = 0;
  int fm = lift_scan(r, pat, &minus);
  LiftResult res;
  if (fm) {
    res.forbidden_m = fm;
    return res;
  }
  res.lift = CandidateLift{bits, lifted_poly(r, pat, minus)};
  return res;
}

EnumSummary enumerate_degree(int r, const EnumOptions& opts) {
  if (r < 1 || r > 63) throw std::invalid_argument("enumerate_degree: need 1 <= r <= 63");
  if (opts.device2_s < 0 || opts.device2_s > 22)
    throw std::invalid_argument("enumerate_degree: device2_s above 22 exceeds the table memory budget");
  auto t0 = std::chrono::steady_clock::now();

  EnumSummary sum;
  sum.r = r;
  sum.lambda2 = lambda2(r);
  if (r == 1) {
    // Candidacy is defined for degree > 1; the lone degree-1 pattern is out.
    sum.seconds = 0;
    return sum;
  }
  factor_mersenne(r);  // warm the cache before any threads start

  const int s = std::min(opts.device2_s, r - 1);
  std::vector<uint32_t> suf = build_suffix_table(s);
  sum.suffix_count = suf.size();

  const uint64_t total = uint64_t(1) << (r - 1);
  const uint64_t nprefix = total >> s;
  int workers = std::max(1, opts.workers);
  workers = int(std::min<uint64_t>(uint64_t(workers), nprefix));

  std::vector<WorkerAcc> accs(static_cast<size_t>(workers));
  if (workers == 1) {
    scan_range(r, opts, s, suf, 0, total, accs[0]);
  } else {
    std::vector<std::thread> threads;
    for (int k = 0; k < workers; ++k) {
      uint64_t lo = uint64_t(u128(nprefix) * uint64_t(k) / uint64_t(workers)) << s;
      uint64_t hi = uint64_t(u128(nprefix) * uint64_t(k + 1) / uint64_t(workers)) << s;
      threads.emplace_back(scan_range, r, std::cref(opts), s, std::cref(suf), lo, hi,
                           std::ref(accs[size_t(k)]));
    }
    for (auto& t : threads) t.join();
  }
  for (const auto& a : accs) {
    sum.kappa += a.kappa;
    sum.nu += a.nu;
    sum.visited += a.visited;
    sum.device1_skips += a.skips;
    sum.representatives.insert(sum.representatives.end(), a.reps.begin(), a.reps.end());
  }
  std::sort(sum.representatives.begin(), sum.representatives.end(),
            [](const IntPoly& a, const IntPoly& b) { return a.c < b.c; });
  for (const auto& q : sum.representatives)
    if (!verify_exceptional(q))
      throw std::logic_error("enumerate_degree: representative failed the independent audit");
  if (sum.lambda2) sum.nu_bar = nu_bar(r, sum.nu);
  sum.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return sum;
}

uint64_t lambda2(int r) {
  uint64_t phi = euler_phi(factor_mersenne(r));
  if (phi % uint64_t(r) != 0) throw std::logic_error("lambda2: phi(2^r-1) not divisible by r");
  return phi / uint64_t(r);
}

double nu_bar(int r, uint64_t nu) {
  return double(nu) / (std::pow(0.75, r) * double(lambda2(r)));
}

bool verify_exceptional(const IntPoly& q) {
  const int r = q.degree();
  if (r < 2) return false;
  if (q.coeff(0) != 1 || q.coeff(r) != 1) return false;
  for (int j = 0; j <= r; ++j)
    if (q.coeff(j) < -1 || q.coeff(j) > 1) return false;
  if (!condition_s_def(q)) return false;
  return is_primitive(q.mod2());
}

IntPoly reversal_canonical(const IntPoly& q) {
  IntPoly rev = reverse(q);
  return rev.c < q.c ? rev : q;
}

}  // namespace polyan
