#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <map>
#include <set>

#include "oracles.hpp"
#include "polyan/enumeration.hpp"
#include "polyan/polyspec.hpp"
#include "polyan/tables.hpp"

using namespace polyan;

namespace {

// Brute force over every sign assignment in {-1,0,+1}^{r-1} (with
// q_0 = q_r = 1), entirely bypassing the unique-lift construction.
std::set<std::vector<int64_t>> brute_exceptional_set(int r) {
  std::set<std::vector<int64_t>> out;
  uint64_t total = 1;
  for (int i = 0; i < r - 1; ++i) total *= 3;
  for (uint64_t code = 0; code < total; ++code) {
    std::vector<int64_t> c(size_t(r) + 1, 0);
    c[0] = c[size_t(r)] = 1;
    uint64_t x = code;
    for (int j = 1; j < r; ++j) {
      c[size_t(j)] = int64_t(x % 3) - 1;
      x /= 3;
    }
    IntPoly q(std::move(c));
    if (verify_exceptional(q)) out.insert(reversal_canonical(q).c);
  }
  return out;
}

std::set<std::vector<int64_t>> rep_set(const EnumSummary& sum) {
  std::set<std::vector<int64_t>> out;
  for (const auto& p : sum.representatives) out.insert(p.c);
  return out;
}

}  // namespace

TEST_CASE("lift_bits") {
  // r = 2, N = 1: the only candidate pattern lifts to 1 - t + t^2
  LiftResult lr = lift_bits(2, 1);
  REQUIRE(!lr.forbidden());
  CHECK(lr.lift->lifted == parse_poly("1,-1,1"));

  // r = 2, N = 0 (pattern 1 + t^2): eps_1 = 1 with b_1 = 0 is forbidden
  LiftResult f = lift_bits(2, 0);
  CHECK(f.forbidden());
  CHECK(f.forbidden_m == 1);

  // r = 5 pattern of 1+t+t^2+t^4+t^5 lifts with q_1 = q_2 = -1
  // N = b_1 b_2 b_3 b_4 = 1,1,0,1 -> 0b1101
  LiftResult l5 = lift_bits(5, 0b1101);
  REQUIRE(!l5.forbidden());
  CHECK(l5.lift->lifted == parse_poly("1,-1,-1,0,1,1"));

  // every lift satisfies Condition S by construction; every Forbidden is
  // genuinely unliftable (no sign assignment of that pattern satisfies S) --
  // exhaustively cross-checked against the 3^{r-1} scan for r <= 7
  for (int r = 2; r <= 7; ++r) {
    std::set<std::vector<int64_t>> lifted;
    for (uint64_t n = 0; n < (uint64_t(1) << (r - 1)); ++n) {
      LiftResult res = lift_bits(r, n);
      if (res.forbidden()) continue;
      CHECK(condition_s_def(res.lift->lifted));
      lifted.insert(res.lift->lifted.c);
    }
    // brute candidates (condition 2 + 3, no primitivity)
    uint64_t total = 1;
    for (int i = 0; i < r - 1; ++i) total *= 3;
    std::set<std::vector<int64_t>> brute;
    for (uint64_t code = 0; code < total; ++code) {
      std::vector<int64_t> c(size_t(r) + 1, 0);
      c[0] = c[size_t(r)] = 1;
      uint64_t x = code;
      for (int j = 1; j < r; ++j) {
        c[size_t(j)] = int64_t(x % 3) - 1;
        x /= 3;
      }
      IntPoly q(std::move(c));
      if (condition_s_def(q)) brute.insert(q.c);
    }
    CHECK(lifted == brute);  // the lift is unique and exhaustive
  }
}

TEST_CASE("bounds") {
  CHECK_THROWS_AS(enumerate_degree(5, {.device2_s = 23}), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_degree(0), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_degree(64), std::invalid_argument);
  CHECK_THROWS_AS(lift_bits(64, 0), std::invalid_argument);
  CHECK_THROWS_AS(lift_bits(5, 0xffff), std::invalid_argument);
}

TEST_CASE("enumerate small degrees") {
  CHECK(enumerate_degree(1).nu == 0);
  CHECK(enumerate_degree(3).nu == 0);
  EnumSummary s5 = enumerate_degree(5);
  CHECK(s5.nu == 1);
  REQUIRE(s5.representatives.size() == 1);
  CHECK(reversal_canonical(s5.representatives[0]) ==
        reversal_canonical(parse_poly("1,-1,-1,0,1,1")));
  CHECK(enumerate_degree(9).nu == 3);
}

TEST_CASE("exhaustive lift audit r <= 10") {
  for (int r = 2; r <= 10; ++r) {
    EnumSummary sum = enumerate_degree(r);
    std::set<std::vector<int64_t>> mine;
    for (const auto& p : sum.representatives) mine.insert(reversal_canonical(p).c);
    CHECK(mine == brute_exceptional_set(r));
  }
}

TEST_CASE("device and worker invariance") {
  for (int r = 2; r <= 20; ++r) {
    EnumSummary base = enumerate_degree(r, {.device1 = false, .device2_s = 0, .workers = 1});
    for (bool d1 : {false, true})
      for (int s : {0, 4, 8})
        for (int workers : {1, 4}) {
          if (!d1 && s == 0 && workers == 1) continue;
          EnumSummary sum = enumerate_degree(
              r, {.device1 = d1, .device2_s = s, .workers = workers});
          CHECK(sum.kappa == base.kappa);
          CHECK(sum.nu == base.nu);
          CHECK(rep_set(sum) == rep_set(base));
        }
  }
  // device flags change only the amount of work
  EnumSummary slow = enumerate_degree(18, {.device1 = false, .device2_s = 0});
  EnumSummary fast = enumerate_degree(18, {.device1 = true, .device2_s = 8});
  CHECK(fast.visited < slow.visited / 4);
}

TEST_CASE("reversal closure") {
  for (int r : {5, 9, 13, 14}) {
    EnumSummary sum = enumerate_degree(r);
    for (const auto& q : sum.representatives) {
      CHECK(verify_exceptional(q));
      CHECK(verify_exceptional(reverse(q)));
    }
  }
}

TEST_CASE("no all-nonnegative exceptional beyond the trivial one") {
  // Neither Q nor Q(-t) (up to overall sign) with coefficients in {0,1}
  // appears among the exceptional polynomials for r <= 14, except the
  // degree-2 class of 1 - t + t^2.
  auto nonneg = [](const IntPoly& q) {
    for (int64_t v : q.c)
      if (v < 0) return false;
    return true;
  };
  for (int r = 2; r <= 14; ++r) {
    EnumSummary sum = enumerate_degree(r);
    for (const auto& q : sum.representatives)
      for (const IntPoly& member : {q, reverse(q)}) {
        IntPoly neg = member.negate_t();
        IntPoly negflip = neg;
        for (auto& v : negflip.c) v = -v;
        bool trivial_class = r == 2;
        if (!trivial_class) {
          CHECK_FALSE(nonneg(member));
          CHECK_FALSE(nonneg(neg));
          CHECK_FALSE(nonneg(negflip));
        }
      }
  }
}

TEST_CASE("lambda2 and nu_bar") {
  CHECK(lambda2(2) == 1);
  CHECK(lambda2(4) == 2);
  CHECK(lambda2(5) == 6);
  // totient oracle route: lambda2(11) = phi(2047)/11
  CHECK(lambda2(11) == oracles::totient_by_gcd_count(2047) / 11);

  auto printed = [](int r, uint64_t nu) {
    return format_nu_bar(r, nu, nu_bar(r, nu));
  };
  CHECK(printed(2, 1) == "1.78");
  CHECK(printed(5, 1) == "0.70");
  CHECK(printed(20, 34) == "0.45");
  CHECK(printed(1, 0) == "0");
  char buf[16];
  std::snprintf(buf, sizeof buf, "%.4f", nu_bar(20, 34));
  CHECK(std::string(buf) == "0.4467");
}

TEST_CASE("verify_exceptional") {
  for (const auto& q : table1_golden()) CHECK(verify_exceptional(q));
  CHECK_FALSE(verify_exceptional(parse_poly("1,-1,0,1")));  // fails Condition S
  // 1+t+t^2+t^4+t^6 is irreducible but not primitive: no sign assignment
  // of that pattern can be exceptional
  CHECK(is_irreducible(Gf2Poly::from_word(0b1010111)));
  CHECK_FALSE(is_primitive(Gf2Poly::from_word(0b1010111)));
  for (int signs = 0; signs < 8; ++signs) {
    std::vector<int64_t> c = {1, signs & 1 ? 1 : -1, signs & 2 ? 1 : -1, 0,
                              signs & 4 ? 1 : -1, 0, 1};
    CHECK_FALSE(verify_exceptional(IntPoly(std::move(c))));
  }
  CHECK_FALSE(verify_exceptional(parse_poly("1,1")));      // degree 1 is out
  CHECK_FALSE(verify_exceptional(parse_poly("1,-2,1")));   // coefficient outside {0,±1}
}
