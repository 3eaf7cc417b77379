#include "zfr/zero_counts.hpp"

#include "zfr/zeta.hpp"

namespace zfr {

ZeroCountConstants zerocount_constants(const XInterval& eta, mpfr_prec_t prec) {
  if (eta.lo().sign() <= 0 || eta.hi() > XReal::from_decimal("0.5", MPFR_RNDU, prec))
    throw DomainError("zerocount_constants: eta must lie in (0, 1/2]");
  PrecGuard pg(prec);
  XInterval l2 = const_log2(prec);
  ZeroCountConstants out;
  out.C1 = (1 + 2 * eta) / (2 * const_pi(prec) * l2);
  XInterval z1 = zeta_minus_pole(eta, prec) + 1 / eta;
  XInterval z2 = zeta_real(2 + 2 * eta, prec);
  XInterval z32 = zeta_real(XInterval::from_decimal("1.5", prec) + 2 * eta, prec);
  out.C2 = XInterval::from_decimal("0.1529", prec) - XInterval::from_decimal("0.134", prec) * eta +
           2 * log(z1) / l2 - log(z2) / l2 + 2 / const_pi(prec) * log(z32);
  return out;
}

namespace {

void check_t_range(const XInterval& t, const XInterval& q, mpfr_prec_t prec) {
  XInterval e1938 = exp(XInterval::exact(1938, prec));
  if (!(t.lo() >= e1938.hi()))
    throw DomainError("hypothesis violated: t >= e^1938");
  // t >= q^(1/100000)  <=>  log t >= log q / 100000
  XInterval lt = log(t), lq = log(q);
  if (!(lt.lo() >= (lq / 100000L).hi()))
    throw DomainError("hypothesis violated: t >= q^(1/100000)");
}

void check_radius(const XInterval& t, const XInterval& r, bool strict_lower,
                  mpfr_prec_t prec) {
  XInterval lo_lim = XInterval::from_decimal("1.04", prec) /
                     pow23(log(t / 100));
  bool lower_ok = strict_lower ? (r.lo() > lo_lim.hi()) : (r.lo() >= lo_lim.hi());
  if (!lower_ok)
    throw DomainError("hypothesis violated: 1.04 (log(t/100))^{-2/3} <= R");
  XInterval quarter = XInterval::exact(1, prec) / 4;
  if (!(r.hi() <= quarter.lo()))
    throw DomainError("hypothesis violated: R <= 1/4");
}

}  // namespace

XInterval lemma42_bound(const CountBoundInputs& in, mpfr_prec_t prec) {
  PrecGuard pg(prec);
  if (!(in.q.lo().cmp_si(3) >= 0)) throw DomainError("hypothesis violated: q >= 3");
  check_t_range(in.t, in.q, prec);
  check_radius(in.t, in.R_or_v, false, prec);
  const XInterval& R = in.R_or_v;
  XInterval lt = log(in.t), lq = log(in.q), llt = log(lt);
  XInterval main = XInterval::from_decimal("1.3478", prec) * R * sqrt(R) * in.B * lt;
  XInterval frac = (log(in.A + 1) - log(R) + XInterval::from_decimal("1.8579", prec) * R * lq +
                    2 * llt / 3) /
                   XInterval::from_decimal("1.879", prec);
  return main + XInterval::from_decimal("0.49", prec) + frac;
}

XInterval lemma43_bound(const CountBoundInputs& in, const XInterval& N_tv, mpfr_prec_t prec) {
  PrecGuard pg(prec);
  if (!(in.q.lo().cmp_si(3) >= 0)) throw DomainError("hypothesis violated: q >= 3");
  if (N_tv.lo().sign() < 0) throw DomainError("N(t,v) must be >= 0");
  check_t_range(in.t, in.q, prec);
  check_radius(in.t, in.R_or_v, true, prec);
  const XInterval& v = in.R_or_v;
  XInterval lt = log(in.t), lq = log(in.q), llt = log(lt);
  XInterval res = (XInterval::from_decimal("8.14467", prec) +
                   XInterval::from_decimal("5.3912", prec) * in.B * (1 / sqrt(v) - 2)) *
                  lt;
  res = res - XInterval::from_decimal("8.5", prec) * log(in.A + 1);
  res = res + XInterval::from_decimal("518.7", prec);
  res = res + ((log(in.A + 1) - log(v) + 2 * llt / 3) / XInterval::from_decimal("1.879", prec) +
               XInterval::from_decimal("0.224", prec)) /
                  sqr(v);
  res = res - N_tv / sqr(v);
  res = res + lq * (XInterval::from_decimal("1.978", prec) / v +
                    XInterval::from_decimal("0.23267", prec));
  return res;
}

XInterval llprime_line_bound(const XInterval& u, const XInterval& q, mpfr_prec_t prec) {
  PrecGuard pg(prec);
  if (!(q.lo().cmp_si(3) >= 0)) throw DomainError("llprime_line_bound requires q >= 3");
  return XInterval::from_decimal("8.21", prec) + log(q) + log(1 + sqr(u) / 4) / 2;
}

XInterval U_kernel(const XInterval& y, mpfr_prec_t prec) {
  PrecGuard pg(prec);
  XInterval ay = abs(y);
  XInterval s = const_pi(prec) * ay / 2;
  XReal small = XReal::from_decimal("0.25", MPFR_RNDN, prec);
  // near 0: U = 2/(sinh(s)/s) with sinh(s)/s in [1 + s_lo^2/6, cosh(s_hi)]
  auto series = [&](const XInterval& t) {
    XInterval lo_den = 1 + sqr(XInterval::point(t.lo())) / 6;
    XInterval hi_den = cosh(XInterval::point(t.hi()));
    return 2 / XInterval(lo_den.lo(), hi_den.hi());
  };
  // x/sinh(x) decreases on (0, inf) (tanh x < x): endpoint evaluation
  auto direct = [&](const XInterval& t) {
    XInterval at_hi = 2 * XInterval::point(t.hi()) / sinh(XInterval::point(t.hi()));
    XInterval at_lo = 2 * XInterval::point(t.lo()) / sinh(XInterval::point(t.lo()));
    return XInterval(at_hi.lo(), at_lo.hi());
  };
  if (s.hi() <= small) return series(s);
  if (s.lo() >= small) return direct(s);
  XInterval left(s.lo(), small);
  XInterval right(small, s.hi());
  return XInterval::hull(series(left), direct(right));
}

}  // namespace zfr
