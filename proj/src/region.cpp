#include "zfr/region.hpp"

namespace zfr {

HypothesisAB ford_hypothesis(mpfr_prec_t prec) {
  return {XInterval::from_decimal("76.2", prec), XInterval::from_decimal("4.45", prec)};
}

const std::vector<RegionProfile>& region_profiles(mpfr_prec_t prec) {
  static const std::vector<RegionProfile> table = [prec] {
    std::vector<RegionProfile> v;
    auto dec = [&](const char* s) { return XInterval::from_decimal(s, prec); };
    XInterval zero(prec);
    v.push_back({"smallt", dec("10.5"), zero, dec("61.5"), log(XInterval::exact(10, prec)), 3,
                 true, "main theorem, |t| >= 10"});
    v.push_back({"slightlystronger", dec("10.3"), dec("9.791"), dec("61.306"),
                 log(XInterval::exact(10, prec)), 3, true,
                 "sharper intermediate region, |t| >= 10"});
    {
      HypothesisAB h = ford_hypothesis(prec);
      XInterval lT0 = XInterval::exact(1944, prec);
      XInterval m1 = M1_of(lT0, h, dec("5.61718"), prec);
      XInterval cq = dec("10.082") + dec("1.607") / log(lT0);
      v.push_back({"eq1.3", cq, dec("9.791"), pow23(h.B) / m1, lT0, 3, true,
                   "general theorem instantiated at T0 = e^1944"});
    }
    v.push_back({"larget", dec("10.1"), zero, dec("49.13"), XInterval::exact(1944, prec), 3,
                 false, "asymptotic; validity threshold Y not effective"});
    v.push_back({"weak104", dec("18"), zero, dec("104"), log(XInterval::exact(3, prec)), 3,
                 true, "preliminary region bound, |t| >= 3"});
    v.push_back({"weak86", dec("18"), zero, dec("86"), exp(exp(XInterval::exact(23, prec))), 3,
                 true, "preliminary bound, |t| >= exp(exp(exp(23)))"});
    return v;
  }();
  return table;
}

namespace {

XInterval vk_factor(const XInterval& logt, mpfr_prec_t prec) {
  PrecGuard pg(prec);
  return pow23(logt) * pow13(log(logt));
}

}  // namespace

XInterval width(const RegionProfile& profile, long q, const XInterval& t, mpfr_prec_t prec) {
  PrecGuard pg(prec);
  if (q < profile.q_min) throw DomainError("width: q below profile validity");
  if (!profile.effective)
    throw DomainError("width: profile '" + profile.name + "' has no effective threshold");
  XInterval logt = log(t);
  // reject only when t is certifiably below the threshold; enclosures that
  // reach the boundary count as valid at the boundary
  if (logt.hi() < profile.log_t_min.lo())
    throw DomainError("width: t below profile validity for '" + profile.name + "'");
  XInterval lq = log(XInterval::exact(q, prec));
  XInterval den = profile.coeff_logq * lq + profile.coeff_vk * vk_factor(logt, prec);
  if (profile.coeff_loglogq.hi().sign() > 0) den = den + profile.coeff_loglogq * log(lq);
  return 1 / den;
}

XInterval width_mccurley(long q, const XInterval& t, mpfr_prec_t prec) {
  PrecGuard pg(prec);
  if (q < 3) throw DomainError("width_mccurley: q >= 3 required");
  if (t.lo().sign() < 0) throw DomainError("width_mccurley: t >= 0 required");
  XInterval qi = XInterval::exact(q, prec);
  XInterval m = max(max(qi, qi * t), XInterval::exact(10, prec));
  return 1 / (XInterval::from_decimal("9.64590880", prec) * log(m));
}

XInterval X_of_logtau(const XInterval& logtau, const HypothesisAB& h, mpfr_prec_t prec) {
  PrecGuard pg(prec);
  XInterval llt = log(logtau);
  XInterval r = XInterval::from_decimal("1.16", prec) * log(h.A + 1) +
                XInterval::from_decimal("0.845593", prec) +
                XInterval::from_decimal("0.23531", prec) * log(h.B / llt);
  XInterval shape = XInterval::from_decimal("1.694", prec) / (h.B * pow13(h.B)) -
                    XInterval::from_decimal("2.087", prec) / pow13(h.B);
  return r + shape * pow13(llt / logtau);
}

XInterval X_of_t(const XInterval& t, const HypothesisAB& h, mpfr_prec_t prec) {
  return X_of_logtau(log(4 * t + 1), h, prec);
}

SupXResult sup_X(const HypothesisAB& h, const XInterval& log_t0, mpfr_prec_t prec) {
  PrecGuard pg(prec);
  // logtau ranges over [log(4) + log_t0, infinity); X is eventually
  // decreasing since the -0.23531 logloglog(tau) term dominates.
  XInterval lo = log_t0 + log(XInterval::exact(4, prec));
  XInterval cap = XInterval::exact(2000000L, prec);
  IntervalFn f = [&](const XInterval& L) { return X_of_logtau(L, h, prec); };
  MaxOptions opt;
  opt.tol = 1e-9;
  opt.prec = prec;
  MaxResult inner = maximize_1d(f, lo, cap, opt);
  // Tail bound for logtau >= cap: X <= const-part - 0.23531 loglog(cap),
  // since the shape term is negative for B <= 4.45 and loglog increasing.
  XInterval shape = XInterval::from_decimal("1.694", prec) / (h.B * pow13(h.B)) -
                    XInterval::from_decimal("2.087", prec) / pow13(h.B);
  if (shape.hi().sign() > 0)
    throw DomainError("sup_X tail bound requires the cube-root coefficient to be negative");
  XInterval tail_hi = XInterval::from_decimal("1.16", prec) * log(h.A + 1) +
                      XInterval::from_decimal("0.845593", prec) +
                      XInterval::from_decimal("0.23531", prec) * log(h.B / log(cap));
  SupXResult out;
  XReal sup_hi = inner.value.hi();
  if (tail_hi.hi() > sup_hi) sup_hi = tail_hi.hi();
  out.sup = XInterval(inner.value.lo(), sup_hi);
  out.argmax_logtau = inner.argmax;
  return out;
}

XInterval M1_of(const XInterval& log_T0, const HypothesisAB& h, const XInterval& supX,
                mpfr_prec_t prec) {
  PrecGuard pg(prec);
  if (!(log_T0.lo().cmp_si(1938) >= 0))
    throw DomainError("M1_of: hypothesis T0 >= e^1938 violated");
  XInterval ll = log(log_T0);
  if (!((log_T0 / ll).lo() >= (XInterval::exact(1139, prec) / h.B).hi()))
    throw DomainError("M1_of: hypothesis log T0/loglog T0 >= 1139/B violated");
  XInterval cand = (XInterval::from_decimal("0.16521", prec) -
                    XInterval::from_decimal("0.184833", prec) / log_T0) /
                   (XInterval::from_decimal("2.9997", prec) + supX / ll);
  return min(XInterval::from_decimal("0.055071", prec), cand);
}

ApConversion ab_from_cd(const XInterval& C, const XInterval& D, const XInterval& t,
                        mpfr_prec_t prec) {
  PrecGuard pg(prec);
  if (C.lo().sign() < 0 || D.lo().sign() <= 0)
    throw DomainError("ab_from_cd: C >= 0 and D > 0 required");
  XInterval logt = log(t);
  if (!(logt.lo().cmp_si(230) >= 0))
    throw DomainError("ab_from_cd: requires t >= 10^100");
  ApConversion out;
  out.h.B = 2 * sqrt(3 * D) / 9;
  out.h.A = (C + 1 + XInterval::from_decimal("1e-80", prec)) / pow23(logt) +
            XInterval::from_decimal("1.569", prec) * C * pow13(D);
  out.B_exceeds_theorem_range = !(out.h.B.hi() <= XReal::from_decimal("4.45", MPFR_RNDD, prec));
  return out;
}

XInterval appendixB_c(const HypothesisAB& h, const XInterval& log_T0, mpfr_prec_t prec) {
  PrecGuard pg(prec);
  if (!(log_T0.lo().cmp_si(10650) >= 0))
    throw DomainError("appendixB_c: hypothesis T0 >= e^10650 violated");
  XInterval ll = log(log_T0);
  if (!((log_T0 / ll).lo() >= (XInterval::from_decimal("5110.6", prec) / h.B).hi()))
    throw DomainError("appendixB_c: hypothesis log T0/loglog T0 >= 5110.6/B violated");
  if (!((sqr(h.B) * ll).lo().cmp_si(183) >= 0))
    throw DomainError("appendixB_c: hypothesis loglog T0 >= 183/B^2 violated");
  // numerator decreasing in t, denominator increasing: the positive part of
  // the sup is attained at T0
  XInterval num = XInterval::from_decimal("-2.89", prec) * log(ll) +
                  XInterval::from_decimal("14.44", prec) * log(h.A + 1) +
                  XInterval::from_decimal("3.59", prec);
  XInterval sup = max(num / ll, XInterval(prec));
  return XInterval::from_decimal("31.76", prec) + sup;
}

BestWidth best_width(long q, const XInterval& t, mpfr_prec_t prec) {
  PrecGuard pg(prec);
  if (q < 3) throw DomainError("best_width: q >= 3 required");
  if (t.lo().sign() < 0) throw DomainError("best_width: t >= 0 required");
  BestWidth out;
  out.width = width_mccurley(q, t, prec);
  out.profile = "mccurley";
  out.candidates.emplace_back("mccurley", out.width);
  for (const auto& p : region_profiles(prec)) {
    if (!p.effective || q < p.q_min) continue;
    XInterval logt(prec);
    bool valid = t.lo().sign() > 0;
    if (valid) {
      logt = log(t);
      valid = !(logt.hi() < p.log_t_min.lo());
    }
    if (!valid) continue;
    XInterval w = width(p, q, t, prec);
    out.candidates.emplace_back(p.name, w);
    if (w.lo() > out.width.lo()) {
      out.width = w;
      out.profile = p.name;
    }
  }
  return out;
}

}  // namespace zfr
