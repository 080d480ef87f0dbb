#include "polyan/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <ostream>
#include <set>
#include <stdexcept>

#include "polyan/conditions.hpp"
#include "polyan/enumeration.hpp"
#include "polyan/polyspec.hpp"
#include "polyan/recurrence.hpp"
#include "polyan/tables.hpp"

namespace polyan::cli {

namespace {

const char* yn(bool b) { return b ? "yes" : "no"; }

std::string fmt_double(double v, int prec) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.*f", prec, v);
  return buf;
}

// Detects q = q_0 + q_s t^s + q_r t^r with unit coefficients.
bool trinomial_shape(const IntPoly& q, int* s_out) {
  int r = q.degree();
  if (r < 2) return false;
  if (std::abs(q.coeff(0)) != 1 || std::abs(q.coeff(r)) != 1) return false;
  int s = 0;
  for (int j = 1; j < r; ++j) {
    if (q.coeff(j) == 0) continue;
    if (s || std::abs(q.coeff(j)) != 1) return false;
    s = j;
  }
  if (!s) return false;
  *s_out = s;
  return true;
}

}  // namespace

int default_workers() {
  const char* env = std::getenv("POLYAN_WORKERS");
  if (!env) return 1;
  int v = std::atoi(env);
  return v >= 1 ? v : 1;
}

std::vector<uint64_t> expand_seed(uint64_t seed, int r, uint64_t mask) {
  std::vector<uint64_t> win(static_cast<size_t>(r));
  uint64_t state = seed;
  for (auto& x : win) {
    state += 0x9e3779b97f4a7c15ull;
    uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    x = (z ^ (z >> 31)) & mask;
  }
  win[0] |= 1;  // the theorems need an odd value somewhere in the window
  return win;
}

int cmd_check(const CheckOptions& o, std::ostream& out, std::ostream& err) {
  IntPoly q;
  try {
    q = parse_poly(o.poly);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  const int r = q.degree();
  out << "poly: " << (r > 64 ? poly_pretty(q) : poly_to_string(q)) << "\n";
  out << "pretty: " << poly_pretty(q) << "\n";
  out << "degree: " << r << "\n";
  if (r < 1) {
    err << "error: degree must be >= 1\n";
    return kUsage;
  }
  const bool q0_odd = q.coeff(0) & 1, qr_odd = q.coeff(r) & 1;
  if (!q0_odd || !qr_odd) {
    err << "error: the recurrence theory assumes " << (!q0_odd ? "q_0" : "q_r")
        << " is odd; got " << (!q0_odd ? q.coeff(0) : q.coeff(r)) << "\n";
    return kPrecondition;
  }

  int s = 0;
  const bool is_tri = trinomial_shape(q, &s);

  if (r > 64) {
    // Only the giant-trinomial certification is available up here.
    if (!is_tri || !is_known_mersenne_exponent(r)) {
      err << "error: degree > 64 is supported only for trinomials whose degree is a "
             "known Mersenne-prime exponent\n";
      return kPrecondition;
    }
    bool prim = is_primitive(q.mod2());
    // 2^r - 1 prime makes irreducible and primitive equivalent
    out << "irreducible: " << yn(prim) << "\n";
    out << "primitive: " << yn(prim) << "\n";
    if (prim) {
      out << "lambda: 2^" << r << "-1\n";
      out << "kind: maximal\n";
    }
    return prim ? kOk : kPrecondition;
  }

  Gf2Poly q2 = q.mod2();
  bool irred = is_irreducible(q2);
  bool prim = is_primitive(q2);
  bool s_q = condition_s_def(q);
  bool s_qn = condition_s_def(q.negate_t());
  out << "irreducible: " << yn(irred) << "\n";
  out << "primitive: " << yn(prim) << "\n";
  out << "condition_s_q: " << yn(s_q) << "\n";
  out << "condition_s_qneg: " << yn(s_qn) << "\n";
  if (!irred) {
    err << "error: Q mod 2 is reducible; period classification refused\n";
    return kPrecondition;
  }

  PeriodClassification cls = classify_period(q, o.ws);
  out << "lambda: " << *cls.lambda << "\n";
  out << "kind: " << period_kind_name(cls.kind) << "\n";
  for (auto [w, rho] : cls.rho) out << "rho_" << w << ": " << u128_to_string(rho) << "\n";
  if (is_tri) {
    PeriodClassification fast =
        trinomial_verdict(r, s, int(q.coeff(0)), int(q.coeff(s)), int(q.coeff(r)));
    out << "trinomial_fast_path: " << period_kind_name(fast.kind)
        << (fast.kind == cls.kind ? " (agrees)" : " (DISAGREES)") << "\n";
  }
  if (o.machine) {
    out << "#poly\tdegree\tirreducible\tprimitive\tlambda\ts_q\ts_qneg\tkind\tw\trho\n";
    if (cls.rho.empty())
      out << poly_to_string(q) << "\t" << r << "\t" << irred << "\t" << prim << "\t"
          << *cls.lambda << "\t" << s_q << "\t" << s_qn << "\t" << period_kind_name(cls.kind)
          << "\t-\t-\n";
    for (auto [w, rho] : cls.rho)
      out << poly_to_string(q) << "\t" << r << "\t" << irred << "\t" << prim << "\t"
          << *cls.lambda << "\t" << s_q << "\t" << s_qn << "\t" << period_kind_name(cls.kind)
          << "\t" << w << "\t" << u128_to_string(rho) << "\n";
  }
  return kOk;
}

int cmd_enumerate(const EnumerateOptions& o, std::ostream& out, std::ostream& err) {
  if (o.degree < 1 || o.degree > 63) {
    err << "error: --degree must be in 1..63 (lambda2 needs r <= 64; patterns are "
           "64-bit words)\n";
    return kUsage;
  }
  EnumOptions eo;
  eo.device1 = o.device1;
  eo.device2_s = o.device2_s;
  eo.workers = o.workers;
  EnumSummary sum;
  try {
    sum = enumerate_degree(o.degree, eo);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  out << "degree: " << sum.r << "\n";
  out << "kappa: " << sum.kappa << "\n";
  out << "nu: " << sum.nu << "\n";
  if (sum.lambda2)
    out << "lambda2: " << *sum.lambda2 << "\n";
  else
    out << "lambda2: unavailable\n";
  if (sum.nu_bar)
    out << "nu_bar: " << fmt_double(*sum.nu_bar, 4) << "\n";
  else
    out << "nu_bar: unavailable\n";
  out << "visited: " << sum.visited << "\n";
  out << "device1_skips: " << sum.device1_skips << "\n";
  out << "suffix_table: " << sum.suffix_count << "\n";
  out << "elapsed_s: " << fmt_double(sum.seconds, 3) << "\n";
  if (o.emit_list)
    for (const auto& p : sum.representatives) out << poly_to_string(p) << "\n";
  if (o.machine) {
    out << "#degree\tkappa\tnu\tlambda2\tnu_bar\tvisited\tskips\tsuffixes\tseconds\n";
    out << sum.r << "\t" << sum.kappa << "\t" << sum.nu << "\t"
        << (sum.lambda2 ? std::to_string(*sum.lambda2) : "-") << "\t"
        << (sum.nu_bar ? fmt_double(*sum.nu_bar, 4) : "-") << "\t" << sum.visited << "\t"
        << sum.device1_skips << "\t" << sum.suffix_count << "\t" << fmt_double(sum.seconds, 3)
        << "\n";
  }
  return kOk;
}

int cmd_period(const PeriodOptions& o, std::ostream& out, std::ostream& err) {
  IntPoly q;
  std::vector<uint64_t> init;
  try {
    q = parse_poly(o.poly);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  try {
    size_t start = 0;
    const std::string& s = o.init;
    while (start <= s.size()) {
      size_t p = s.find(',', start);
      std::string tok = s.substr(start, p == std::string::npos ? p : p - start);
      init.push_back(uint64_t(std::stoll(tok)));
      if (p == std::string::npos) break;
      start = p + 1;
    }
  } catch (const std::exception&) {
    err << "error: bad --init list\n";
    return kUsage;
  }
  const int r = q.degree();
  if (int(init.size()) != r) {
    err << "error: --init must supply exactly r = " << r << " values\n";
    return kUsage;
  }
  if (o.w < 1 || o.w > 64) {
    err << "error: --w must be in 1..64\n";
    return kUsage;
  }
  if (!(q.coeff(0) & 1) || !(q.coeff(r) & 1)) {
    err << "error: q_0 and q_r must be odd\n";
    return kPrecondition;
  }
  RingCtx ctx(q, o.w);
  RecurrenceState st(ctx, init);
  out << "poly: " << poly_to_string(q) << "\n";
  out << "w: " << o.w << "\n";
  if (!st.window_has_odd())
    out << "warning: initial window is all even; the period theorems do not apply\n";
  auto p = brute_period_raw(st, o.max_steps);
  if (!p) {
    err << "error: no period found within " << o.max_steps << " steps (budget exhausted)\n";
    return kBudget;
  }
  out << "period: " << *p << "\n";
  bool irred = r <= 64 && is_irreducible(q.mod2());
  out << "irreducible: " << yn(irred) << "\n";
  if (irred) {
    uint64_t lam = order_of_t(q.mod2(), factor_mersenne(r));
    u128 rho = rho_w(ctx, lam);
    out << "lambda: " << lam << "\n";
    out << "rho_w: " << u128_to_string(rho) << "\n";
    if (st.window_has_odd())
      out << "agreement: " << yn(u128(*p) == rho) << "\n";
    else
      out << "agreement: n/a (all-even window)\n";
  } else {
    out << "note: Q mod 2 is reducible, so the period need not equal the order of t\n";
  }
  if (o.machine) {
    out << "#poly\tw\tperiod\tirreducible\n";
    out << poly_to_string(q) << "\t" << o.w << "\t" << *p << "\t" << irred << "\n";
  }
  return kOk;
}

int cmd_rng(const RngOptions& o, std::ostream& out, std::ostream& err) {
  TrinomialSpec tri;
  try {
    auto t = parse_trinomial(o.poly);
    if (!t) {
      err << "error: rng needs a trinomial spec (tri:r,s[,+-+])\n";
      return kUsage;
    }
    tri = *t;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  if (o.w < 1 || o.w > 64) {
    err << "error: --w must be in 1..64\n";
    return kUsage;
  }
  if (!o.unsafe) {
    bool certified = false;
    std::string reason;
    try {
      PeriodClassification cls = trinomial_verdict(tri.r, tri.s, tri.sign0, tri.sign_s, tri.sign_r);
      certified = cls.kind == PeriodKind::kMaximal;
      if (!certified) reason = std::string("period classification is ") + period_kind_name(cls.kind);
    } catch (const std::exception& e) {
      reason = e.what();
    }
    if (!certified) {
      err << "error: maximal-period certification failed (" << reason
          << "); pass --unsafe to generate anyway\n";
      return kPrecondition;
    }
  }
  RingCtx ctx(tri.to_poly(), o.w);
  RecurrenceState st(ctx, expand_seed(o.seed, tri.r, ctx.mask()));
  for (uint64_t i = 0; i < o.count; ++i) out << st.step() << "\n";
  return kOk;
}

int cmd_tables(const TablesOptions& o, std::ostream& out, std::ostream& err) {
  if (o.max_degree < 2) {
    err << "error: --max-degree must be >= 2\n";
    return kUsage;
  }
  if (o.max_degree > 40) {
    err << "error: reference data stops at degree 40\n";
    return kUsage;
  }
  bool mismatch = false;
  std::map<int, EnumSummary> sums;
  for (int r = 2; r <= o.max_degree; ++r) {
    EnumOptions eo;
    eo.device1 = true;
    eo.device2_s = std::min(8, r - 1);
    eo.workers = o.workers;
    sums[r] = enumerate_degree(r, eo);
  }
  out << "# counts (r, nu, nu_bar) vs reference\n";
  for (int r = 2; r <= o.max_degree; ++r) {
    const auto& gold = table2_golden().at(size_t(r - 1));
    const auto& sum = sums[r];
    std::string mine_bar = format_nu_bar(r, sum.nu, sum.nu_bar.value_or(0.0));
    bool ok = sum.nu == gold.nu && mine_bar == gold.nu_bar;
    out << r << "\t" << sum.nu << "\t" << mine_bar;
    if (!ok) {
      out << "\tMISMATCH (expected nu=" << gold.nu << " nu_bar=" << gold.nu_bar << ")";
      mismatch = true;
    }
    out << "\n";
  }
  if (o.max_degree >= 14) {
    out << "# exceptional polynomials of degree <= 14 vs reference\n";
    std::set<std::vector<int64_t>> mine, gold;
    for (int r = 2; r <= 14; ++r)
      for (const auto& p : sums[r].representatives) mine.insert(reversal_canonical(p).c);
    for (const auto& p : table1_golden()) gold.insert(reversal_canonical(p).c);
    for (const auto& c : gold)
      if (!mine.count(c)) {
        out << "missing: " << poly_to_string(IntPoly(std::vector<int64_t>(c))) << "\n";
        mismatch = true;
      }
    for (const auto& c : mine)
      if (!gold.count(c)) {
        out << "extra: " << poly_to_string(IntPoly(std::vector<int64_t>(c))) << "\n";
        mismatch = true;
      }
    out << "entries: " << mine.size() << "\n";
  }
  out << (mismatch ? "result: MISMATCH\n" : "result: all rows match\n");
  if (mismatch) {
    err << "error: generated tables differ from the reference\n";
    return kTableMismatch;
  }
  return kOk;
}

}  // namespace polyan::cli
