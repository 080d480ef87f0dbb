#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "polyan/conditions.hpp"
#include "polyan/modring.hpp"

namespace polyan {

// The unique sign lift of an (r-1)-bit pattern: q_m = -1 exactly where
// eps_m = 1 (any other odd lift would need the forbidden residue 2 mod 4,
// or +1 where the congruence fails). Satisfies Condition S by construction.
struct CandidateLift {
  uint64_t bits = 0;  // N = b_1..b_{r-1}, b_1 most significant
  IntPoly lifted;     // coefficients in {-1,0,+1}, q_0 = q_r = 1
};

// Forbidden(m) is a result, not an error: the smallest m where eps_m = 1
// but b_m = 0, so q_m would have to be 2 mod 4.
struct LiftResult {
  std::optional<CandidateLift> lift;
  int forbidden_m = 0;
  bool forbidden() const { return !lift.has_value(); }
};

LiftResult lift_bits(int r, uint64_t bits);

struct EnumOptions {
  bool device1 = true;  // block skip on forbidden positions m < r/2
  int device2_s = 0;    // low-order suffix table width (0 disables), <= 22
  int workers = 1;
  bool collect_representatives = true;
};

struct EnumSummary {
  int r = 0;
  uint64_t kappa = 0;  // candidates, one per scanned N
  uint64_t nu = 0;     // exceptional, one per {Q, Q~} pair
  std::optional<uint64_t> lambda2;
  std::optional<double> nu_bar;
  std::vector<IntPoly> representatives;  // canonical member per pair, sorted
  // scan statistics
  uint64_t visited = 0;       // N values actually examined
  uint64_t device1_skips = 0; // block skips taken
  uint64_t suffix_count = 0;  // admissible device-2 suffixes
  double seconds = 0;
};

// Scan N = 0..2^{r-1}-1 for candidate and exceptional polynomials of
// degree r. Results are identical for any device flags and worker count.
EnumSummary enumerate_degree(int r, const EnumOptions& opts = {});

// Number of primitive polynomials of degree r: phi(2^r - 1)/r.
uint64_t lambda2(int r);

// nu normalized by (3/4)^r lambda2(r).
double nu_bar(int r, uint64_t nu);

// Independent audit of conditions 1-3: primitive mod 2, coefficients in
// {0,-1,+1} with q_0 = q_r = 1, Condition S.
bool verify_exceptional(const IntPoly& q);

// Canonical member of the {Q, Q~} reversal pair: lexicographically smaller
// coefficient tuple under -1 < 0 < +1.
IntPoly reversal_canonical(const IntPoly& q);

}  // namespace polyan
