#include "polyan/conditions.hpp"

#include <stdexcept>

namespace polyan {

const char* period_kind_name(PeriodKind k) {
  switch (k) {
    case PeriodKind::kMaximal: return "maximal";
    case PeriodKind::kUpperHalfFromQNeg: return "upper_half_from_qneg";
    case PeriodKind::kUpperHalfFromQ: return "upper_half_from_q";
  }
  return "?";
}

namespace {

int mod8(int64_t v) { return int(((v % 8) + 8) % 8); }

}  // namespace

bool condition_s_def(const IntPoly& q) {
  const int r = q.degree();
  if (r < 0) return false;
  std::vector<int> q8(size_t(r) + 1);
  for (int j = 0; j <= r; ++j) q8[size_t(j)] = mod8(q.coeff(j));
  // Q(t)^2 + Q(-t)^2 doubles the even-degree part of Q^2 and kills the
  // odd part, so only even target degrees 2m need checking; the identity
  // demands 2*conv(2m) == 2*q_r*q_m mod 8.
  for (int m = 0; m <= r; ++m) {
    int conv = 0;
    for (int j = std::max(0, 2 * m - r); j <= m; ++j) {
      int k = 2 * m - j;
      conv += (j == k ? 1 : 2) * q8[size_t(j)] * q8[size_t(k)];
    }
    if ((2 * conv - 2 * q8[size_t(r)] * q8[size_t(m)]) % 8 != 0) return false;
  }
  return true;
}

namespace {

// Convolution form for one coefficient list (parities in b, eps from the
// mod-8 residues). Returns true iff all r+1 congruences of Lemma 3 hold.
bool conv_holds(const std::vector<int>& q8, std::vector<int>* eps_out) {
  const int r = int(q8.size()) - 1;
  if (!(q8[size_t(r)] & 1)) throw std::invalid_argument("condition_s_conv: q_r must be odd");
  bool ok = true;
  if (eps_out) eps_out->assign(size_t(r) + 1, 0);
  for (int m = 0; m <= r; ++m) {
    int qm = q8[size_t(m)];
    int eps = ((qm * (qm - q8[size_t(r)])) / 2) & 1;
    int conv = 0;
    for (int j = std::max(0, 2 * m - r); j < m; ++j) conv ^= (q8[size_t(j)] & q8[size_t(2 * m - j)]) & 1;
    if (eps_out) (*eps_out)[size_t(m)] = eps;
    if (conv != eps) {
      ok = false;
      if (!eps_out) return false;
    }
  }
  return ok;
}

std::vector<int> coeffs_mod8(const IntPoly& q) {
  std::vector<int> q8(size_t(q.degree()) + 1);
  for (int j = 0; j <= q.degree(); ++j) q8[size_t(j)] = mod8(q.coeff(j));
  return q8;
}

}  // namespace

ConditionSReport condition_s_conv(const IntPoly& q) {
  if (q.is_zero()) throw std::invalid_argument("condition_s_conv: zero polynomial");
  ConditionSReport rep;
  rep.holds_for_q = conv_holds(coeffs_mod8(q), &rep.epsilon);
  rep.holds_for_q_neg = conv_holds(coeffs_mod8(q.negate_t()), nullptr);
  return rep;
}

bool condition_s_split(const IntPoly& q) {
  const int r = q.degree();
  if (r < 0) return false;
  if (!(q.coeff(r) & 1)) throw std::invalid_argument("condition_s_split: q_r must be odd");
  // V from even-index coefficients, W from odd; check
  // V(t)^2 + t W(t)^2 - q_r Q(t) = 0 mod 4 coefficient-wise.
  std::vector<int64_t> v, w;
  for (int j = 0; j <= r; j += 2) v.push_back(q.coeff(j));
  for (int j = 1; j <= r; j += 2) w.push_back(q.coeff(j));
  std::vector<int64_t> lhs(size_t(r) + 2, 0);
  for (size_t i = 0; i < v.size(); ++i)
    for (size_t j = 0; j < v.size(); ++j) lhs[i + j] += mod8(v[i]) * mod8(v[j]);
  for (size_t i = 0; i < w.size(); ++i)
    for (size_t j = 0; j < w.size(); ++j) lhs[i + j + 1] += mod8(w[i]) * mod8(w[j]);
  for (int j = 0; j <= r; ++j) lhs[size_t(j)] -= int64_t(mod8(q.coeff(r))) * mod8(q.coeff(j));
  for (int64_t x : lhs)
    if (x % 4 != 0) return false;
  return true;
}

PeriodClassification classify_period(const IntPoly& q, const std::vector<int>& ws) {
  const int r = q.degree();
  if (r < 1) throw std::invalid_argument("classify_period: degree must be >= 1");
  if (!(q.coeff(0) & 1)) throw std::invalid_argument("classify_period: q_0 must be odd");
  if (!(q.coeff(r) & 1)) throw std::invalid_argument("classify_period: q_r must be odd");
  if (r > 64) throw std::domain_error("classify_period: degree > 64 not supported (lambda out of range)");
  Gf2Poly q2 = q.mod2();
  if (!is_irreducible(q2))
    throw std::domain_error("classify_period: Q mod 2 is reducible; Theorem 1 does not apply");

  PeriodClassification cls;
  cls.lambda = order_of_t(q2, factor_mersenne(r));
  cls.s_for_q = condition_s_def(q);
  cls.s_for_q_neg = condition_s_def(q.negate_t());
  if (cls.s_for_q && cls.s_for_q_neg)
    throw std::logic_error("classify_period: Condition S holds for both Q(t) and Q(-t)");
  cls.kind = cls.s_for_q       ? PeriodKind::kUpperHalfFromQ
             : cls.s_for_q_neg ? PeriodKind::kUpperHalfFromQNeg
                               : PeriodKind::kMaximal;
  for (int w : ws) {
    RingCtx ctx(q, w);
    cls.rho.push_back({w, rho_w(ctx, *cls.lambda)});
  }
  return cls;
}

PeriodClassification trinomial_verdict(int r, int s, int sign0, int sign_s, int sign_r,
                                       const std::vector<int>& ws) {
  if (!(r > s && s > 0)) throw std::invalid_argument("trinomial_verdict: need r > s > 0");
  auto valid_sign = [](int v) { return v == 1 || v == -1; };
  if (!valid_sign(sign0) || !valid_sign(sign_s) || !valid_sign(sign_r))
    throw std::invalid_argument("trinomial_verdict: signs must be +1 or -1");
  std::vector<int64_t> c(size_t(r) + 1, 0);
  c[0] = sign0;
  c[size_t(s)] = sign_s;
  c[size_t(r)] = sign_r;
  IntPoly q(std::move(c));
  Gf2Poly q2 = q.mod2();

  if (r > 64) {
    // Only the Mersenne-prime shortcut is available at this size.
    if (is_primitive(q2) && r > 2) {
      PeriodClassification cls;
      cls.kind = PeriodKind::kMaximal;
      return cls;
    }
    throw std::domain_error("trinomial_verdict: degree > 64 requires a primitive trinomial");
  }

  if (r > 2 && is_primitive(q2)) {
    PeriodClassification cls;
    cls.lambda = mersenne_value(r);
    cls.kind = PeriodKind::kMaximal;
    for (int w : ws) cls.rho.push_back({w, u128(*cls.lambda) << (w - 1)});
    return cls;
  }
  if (!is_irreducible(q2)) throw std::domain_error("trinomial_verdict: reducible trinomial");
  if (r != 2 * s) {
    PeriodClassification cls;
    cls.lambda = order_of_t(q2, factor_mersenne(r));
    cls.kind = PeriodKind::kMaximal;
    for (int w : ws) cls.rho.push_back({w, u128(*cls.lambda) << (w - 1)});
    return cls;
  }
  return classify_period(q, ws);
}

}  // namespace polyan
