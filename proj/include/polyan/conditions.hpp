#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "polyan/modring.hpp"

namespace polyan {

// Condition S in the Lemma-3 convolution form, for Q and Q(-t).
// epsilon[m] = (q_m(q_m - q_r)/2) mod 2; the division is exact whenever
// q_r is odd.
struct ConditionSReport {
  bool holds_for_q = false;
  bool holds_for_q_neg = false;
  std::vector<int> epsilon;  // eps_0..eps_r for Q itself
};

enum class PeriodKind {
  kMaximal,           // p_w = 2^{w-1} lambda for all w
  kUpperHalfFromQNeg,  // Q(-t) satisfies S; t^lambda = +1 mod (4,Q); p_w <= 2^{w-2} lambda, w >= 2
  kUpperHalfFromQ,     // Q satisfies S; t^lambda = -1 mod (4,Q); p_w <= 2^{w-2} lambda, w >= 3
};

const char* period_kind_name(PeriodKind k);

struct PeriodClassification {
  std::optional<uint64_t> lambda;  // unset on the degree > 64 trinomial fast path
  PeriodKind kind = PeriodKind::kMaximal;
  bool s_for_q = false;
  bool s_for_q_neg = false;
  std::vector<std::pair<int, u128>> rho;  // exact rho_w for each requested w
};

// The defining identity Q(t)^2 + Q(-t)^2 = 2 q_r Q(t^2) mod 8, checked
// coefficient-wise. Valid for any integer polynomial.
bool condition_s_def(const IntPoly& q);

// The convolution form of Lemma 3. Requires q_r odd.
ConditionSReport condition_s_conv(const IntPoly& q);

// Even/odd split form: V(t)^2 + t W(t)^2 - q_r Q(t) = 0 mod 4 where
// Q(t) = V(t^2) + t W(t^2). Requires q_r odd.
bool condition_s_split(const IntPoly& q);

// Theorem 1 classification. Requires Q mod 2 irreducible, q_0 and q_r odd,
// degree <= 64. Exact rho_w is computed for each entry of `ws`.
PeriodClassification classify_period(const IntPoly& q, const std::vector<int>& ws = {});

// Theorem 2/3 fast path for Q = s0 + ss t^s + sr t^r with signs in {-1,+1}:
// primitive with r > 2, or irreducible with r != 2s, is maximal without a
// Condition S check. Anything else irreducible falls back to
// classify_period; reducible trinomials are refused.
PeriodClassification trinomial_verdict(int r, int s, int sign0, int sign_s, int sign_r,
                                       const std::vector<int>& ws = {});

}  // namespace polyan
