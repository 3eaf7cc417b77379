#include "zfr/kernel.hpp"

#include <deque>

namespace zfr {

XInterval solve_theta(const XInterval& ratio, mpfr_prec_t prec) {
  if (ratio.lo().sign() <= 0) throw DomainError("solve_theta: ratio must be positive");
  PrecGuard pg(prec);
  XInterval pi = const_pi(prec);
  auto f = [&](const XInterval& t) {
    return sqr(sin(t)) - ratio * (1 - t * (cos(t) / sin(t)));
  };
  // sin^2 t / (1 - t cot t) decreases from 3 at 0+ to 1 at pi/2, so f runs
  // from + to - exactly when 1 < ratio < 3
  XInterval lo = pi * XInterval::from_decimal("1e-6", prec);
  XInterval hi = pi / 2 - pi * XInterval::from_decimal("1e-8", prec);
  XInterval flo = f(XInterval::point(lo.lo()));
  XInterval fhi = f(XInterval::point(hi.hi()));
  if (flo.certainly_positive() && fhi.certainly_negative())
    return find_root(f, lo, hi, static_cast<long>(prec) - 10, prec);
  if (flo.certainly_positive() && fhi.certainly_positive())
    // ratio <= 1: only the degenerate solution theta = 0, where both sides
    // of the defining equation vanish
    return XInterval(XReal::from_long(0, prec), lo.hi());
  throw DomainError("solve_theta: no root certified in (0, pi/2)");
}

namespace {

// E0(w) = int_0^L e^{w u} du and E1(w) = int_0^L u e^{w u} du by closed
// form, with a series fallback near the removable singularity at w = 0.
struct ExpIntegrals {
  CInterval e0, e1;
};

ExpIntegrals exp_integrals(const CInterval& w, const XInterval& L, mpfr_prec_t prec) {
  XInterval wl2 = w.abs2() * sqr(L);
  ExpIntegrals out{CInterval(prec), CInterval(prec)};
  XReal thresh = XReal::from_decimal("2.25", MPFR_RNDN, prec);  // (|w|L)^2 <= 2.25
  if (wl2.hi() < thresh) {
    // series: E0 = sum_k w^k L^{k+1}/(k+1)!,  E1 = sum_k w^k L^{k+2}/(k! (k+2))
    const size_t K = static_cast<size_t>(prec) / 3 + 12;
    CInterval wpow = CInterval::exact(1, 0, prec);
    XInterval Lpow = L;
    XInterval kfact = XInterval::exact(1, prec);  // k!
    CInterval e0(prec), e1(prec);
    for (size_t k = 0; k < K; ++k) {
      // e0 term: w^k L^{k+1} / (k+1)!
      XInterval f1 = kfact * static_cast<long>(k + 1);
      e0 = e0 + wpow * (Lpow / f1);
      // e1 term: w^k L^{k+2} / (k! (k+2))
      XInterval f2 = kfact * static_cast<long>(k + 2);
      e1 = e1 + wpow * (Lpow * L / f2);
      wpow = wpow * w;
      Lpow = Lpow * L;
      kfact = f1;
    }
    // tails: |w L|^K/(K+1)! * L * e^{|wL|} and the e1 analogue
    XInterval awl = sqrt(wl2);
    XInterval awlK = XInterval::exact(1, prec);
    for (size_t i = 0; i < K; ++i) awlK = awlK * awl;
    XInterval egrow = exp(awl);
    XInterval t0 = awlK / kfact * L * egrow;
    XInterval t1 = awlK / kfact * sqr(L) * egrow;
    XInterval b0(-t0.hi(), t0.hi());
    XInterval b1(-t1.hi(), t1.hi());
    out.e0 = CInterval(e0.re + b0, e0.im + b0);
    out.e1 = CInterval(e1.re + b1, e1.im + b1);
    return out;
  }
  if (!wl2.lo().sign()) throw DomainError("exp_integrals: |w| enclosure straddles 0");
  CInterval ewl = exp(w * L);
  CInterval one = CInterval::exact(1, 0, prec);
  out.e0 = (ewl - one) / w;
  // E1 = (e^{wL}(wL - 1) + 1)/w^2
  out.e1 = (ewl * (w * L - one) + one) / (w * w);
  return out;
}

}  // namespace

KernelSystem build_kernel_system(const CosinePolynomial& poly, long R, mpfr_prec_t prec) {
  PrecGuard pg(prec);
  KernelSystem ks;
  ks.poly = poly;
  XInterval ratio = poly.b(1, prec) / poly.b(0, prec);
  ks.theta = solve_theta(ratio, prec);
  XInterval st = sin(ks.theta), ct = cos(ks.theta);
  ks.tan_theta = st / ct;
  ks.support_g = ks.theta / ks.tan_theta;
  ks.support_w = 2 * ks.support_g;
  ks.sec2 = 1 / sqr(ct);
  ks.w0 = ks.sec2 * (ks.theta * ks.tan_theta + 3 * (ks.theta / ks.tan_theta) - 3);
  ks.W0 = 2 * ks.sec2 * sqr(1 - ks.support_g);
  ks.Wm1 = 2 * sqr(ks.tan_theta) + 3 - 3 * ks.theta * (ks.tan_theta + 1 / ks.tan_theta);
  ks.c0 = 1 / (st * ct * sqr(ct));
  ks.c1 = (ks.theta - st * ct) * sqr(sqr(ks.tan_theta));
  ks.c2 = sqr(ks.tan_theta) * ks.tan_theta * sqr(st);
  ks.c3 = (ks.theta - st * ct) * sqr(ks.tan_theta);
  ks.R = R;
  ks.H_R = kernel_H(ks, R);
  XInterval Ri = XInterval::exact(R, prec);
  ks.c4 = ks.H_R * sqr(Ri + 1) / (pow_si(Ri, 3) * ks.w0) + 1 + 1 / Ri;
  ks.c5 = 4 / sqr(const_pi(prec)) * (ks.c4 - 1 / Ri);
  return ks;
}

XInterval kernel_H(const KernelSystem& ks, long R) {
  const mpfr_prec_t prec = ks.theta.prec();
  XInterval Ri = XInterval::exact(R, prec);
  XInterval e2a = exp(ks.support_w);
  XInterval num = ks.c0 * (ks.c2 * sqr(Ri + 1) / pow_si(Ri, 3) * (e2a + 1) +
                           ks.c1 / sqr(Ri) + ks.c3);
  XInterval den = sqr(1 - sqr(ks.tan_theta) / sqr(Ri));
  return num / den;
}

XInterval g_eval(const KernelSystem& ks, const XInterval& u) {
  const mpfr_prec_t prec = std::max(ks.theta.prec(), u.prec());
  XInterval au = abs(u);
  if (au.lo() >= ks.support_g.hi()) return XInterval(prec);
  XInterval clipped = min(au, ks.support_g);
  XInterval val = (cos(clipped * ks.tan_theta) - cos(ks.theta)) * ks.sec2;
  if (au.hi() > ks.support_g.lo()) val = XInterval::hull(val, XInterval(prec));
  return val;
}

XInterval w_closed(const KernelSystem& ks, const XInterval& u) {
  const mpfr_prec_t prec = std::max(ks.theta.prec(), u.prec());
  XInterval au = abs(u);
  if (au.lo() >= ks.support_w.hi()) return XInterval(prec);
  XInterval x = min(au, ks.support_w);
  const XInterval& T = ks.tan_theta;
  const XInterval& two_a = ks.support_w;
  XInterval ct = cos(ks.theta), st = sin(ks.theta);
  XInterval rest = two_a - x;
  XInterval val = rest * (cos(x * T) / 2 + sqr(ct));
  val = val + sin(rest * T) / (2 * T);
  val = val - (2 * ct / T) * (st - sin((x - ks.support_g) * T));
  val = val * sqr(ks.sec2);
  if (au.hi() > ks.support_w.lo()) val = XInterval::hull(val, XInterval(prec));
  return val;
}

XInterval w_quad(const KernelSystem& ks, const XInterval& u) {
  const mpfr_prec_t prec = std::max(ks.theta.prec(), u.prec());
  XInterval au = abs(u);
  if (au.lo() >= ks.support_w.hi()) return XInterval(prec);
  // integral over t in [u - a, a] of g(u-t) g(t); both arguments stay in
  // the cosine branch on that range
  XInterval a = ks.support_g;
  XInterval lo = au - a, hi = a;
  XInterval ct = cos(ks.theta);
  const XInterval T = ks.tan_theta, sec2 = ks.sec2;
  SeriesFn f = [&](const TSeries& t) {
    TSeries tt = t * T;
    TSeries arg1 = -tt + au * T;  // (u - t) T
    return ((cos(arg1) - ct) * sec2) * ((cos(tt) - ct) * sec2);
  };
  QuadOptions opt;
  opt.prec = prec;
  XInterval val = integrate(f, lo, hi, opt);
  if (au.hi() > ks.support_w.lo()) val = XInterval::hull(val, XInterval(prec));
  return val;
}

XInterval w_eval(const KernelSystem& ks, const XInterval& u) {
  XInterval a = w_closed(ks, u);
  XInterval b = w_quad(ks, u);
  return intersect(a, b);
}

CInterval laplace_W(const KernelSystem& ks, const CInterval& z) {
  const mpfr_prec_t prec = std::max(ks.theta.prec(), z.re.prec());
  const XInterval& T = ks.tan_theta;
  const XInterval& L = ks.support_w;  // 2a
  XInterval ct = cos(ks.theta), st = sin(ks.theta);
  CInterval w0 = -z;
  CInterval wp(w0.re, w0.im + T);
  CInterval wm(w0.re, w0.im - T);
  auto I0 = exp_integrals(w0, L, prec);
  auto Ip = exp_integrals(wp, L, prec);
  auto Im_ = exp_integrals(wm, L, prec);
  XInterval twoa = L;
  // A: (2a - u) cos(uT)/2 -> (1/4)(2a E0(w+-) - E1(w+-)) summed over +-
  CInterval A = (Ip.e0 * twoa - Ip.e1 + Im_.e0 * twoa - Im_.e1) / XInterval::exact(4, prec);
  // B: cos^2 (2a E0(w0) - E1(w0))
  CInterval Bt = (I0.e0 * twoa - I0.e1) * sqr(ct);
  // C: sin((2a-u)T)/(2T) -> (-i/(4T)) (e^{2i theta} E0(w-) - e^{-2i theta} E0(w+))
  XInterval th2 = 2 * ks.theta;
  CInterval e2it(cos(th2), sin(th2));
  CInterval inner = e2it * Im_.e0 - e2it.conj() * Ip.e0;
  CInterval minus_i(XInterval(prec), -XInterval::exact(1, prec));
  CInterval C = minus_i * inner / (4 * T);
  // D: -(2 sin cos / T) E0(w0)
  CInterval D = I0.e0 * (-(2 * st * ct) / T);
  // E: (2 cos/T) sin(uT - theta) -> (-i cos/T)(e^{-i theta} E0(w+) - e^{i theta} E0(w-))
  CInterval eit(ct, st);
  CInterval E = minus_i * (eit.conj() * Ip.e0 - eit * Im_.e0) * (ct / T);
  CInterval total = A + Bt + C + D + E;
  return total * sqr(ks.sec2);
}

XInterval laplace_W(const KernelSystem& ks, const XInterval& z) {
  CInterval r = laplace_W(ks, CInterval(z, XInterval(z.prec())));
  return r.re;
}

XInterval laplace_W_quad(const KernelSystem& ks, const XInterval& z, const QuadOptions& opt0) {
  const mpfr_prec_t prec = std::max(ks.theta.prec(), z.prec());
  const XInterval T = ks.tan_theta;
  XInterval ct = cos(ks.theta), st = sin(ks.theta);
  XInterval twoa = ks.support_w, s4 = sqr(ks.sec2);
  XInterval half = XInterval::exact(1, prec) / 2;
  SeriesFn f = [&](const TSeries& u) {
    TSeries ut = u * T;
    TSeries rest_t = -ut + twoa * T;  // (2a - u) T
    TSeries w = (-u + twoa) * (cos(ut) * half + sqr(ct)) + sin(rest_t) * (1 / (2 * T)) +
                (sin(ut - ks.theta) - st) * (2 * ct / T);
    return exp(-(u * z)) * (w * s4);
  };
  QuadOptions opt = opt0;
  opt.prec = prec;
  XInterval zero(prec);
  return integrate(f, zero, twoa, opt);
}

MaxResult sup_exp_w(const KernelSystem& ks, double tol) {
  const mpfr_prec_t prec = ks.theta.prec();
  const XInterval T = ks.tan_theta;
  XInterval ct = cos(ks.theta), st = sin(ks.theta);
  XInterval twoa = ks.support_w, s4 = sqr(ks.sec2);
  XInterval half = XInterval::exact(1, prec) / 2;
  // second-order model evaluation on interior boxes defeats the dependency
  // blow-up of the plain interval form near the maximizer
  IntervalFn f = [&, half](const XInterval& x) {
    if (x.lo().sign() >= 0 && x.hi() <= twoa.lo()) {
      XReal hw(prec);
      mpfr_sub(hw.get(), x.hi().get(), x.lo().get(), MPFR_RNDU);
      mpfr_div_2ui(hw.get(), hw.get(), 1, MPFR_RNDU);
      TSeries u = TSeries::var(XInterval::point(x.mid()), hw, 3, prec);
      TSeries ut = u * T;
      TSeries rest_t = -ut + twoa * T;
      TSeries w = (-u + twoa) * (cos(ut) * half + sqr(ct)) + sin(rest_t) * (1 / (2 * T)) +
                  (sin(ut - ks.theta) - st) * (2 * ct / T);
      return (exp(u) * (w * s4)).bound();
    }
    return exp(x) * w_closed(ks, x);
  };
  MaxOptions opt;
  opt.tol = tol;
  opt.prec = prec;
  XInterval zero(prec);
  return maximize_1d(f, zero, ks.support_w, opt);
}

WeightedTest make_weighted_test(const KernelSystem& ks, const XInterval& lambda) {
  if (lambda.lo().sign() <= 0) throw DomainError("weighted test requires lambda > 0");
  WeightedTest wt;
  wt.lambda = lambda;
  wt.f0 = lambda * ks.w0;
  wt.D = ks.c4 * lambda * wt.f0;
  return wt;
}

XInterval f_eval(const KernelSystem& ks, const WeightedTest& wt, const XInterval& u) {
  if (u.lo().sign() < 0) throw DomainError("f is defined for u >= 0");
  XInterval lu = wt.lambda * u;
  return wt.lambda * exp(lu) * w_closed(ks, lu);
}

CInterval F_eval(const KernelSystem& ks, const WeightedTest& wt, const CInterval& z) {
  CInterval arg(z.re / wt.lambda - 1, z.im / wt.lambda);
  return laplace_W(ks, arg);
}

CInterval V_c(const KernelSystem& ks, const XInterval& c, const CInterval& z) {
  CInterval one = CInterval::exact(1, 0, z.re.prec());
  CInterval cz = cot(z) - one / z;
  CInterval Wz = laplace_W(ks, CInterval(z.re / c - 1, z.im / c));
  return cz * (c * ks.w0) + Wz;
}

VcCheck check_Vc_lower(const KernelSystem& ks, const XInterval& c, size_t grid,
                       size_t depth_limit, mpfr_prec_t prec) {
  PrecGuard pg(prec);
  VcCheck out;
  out.rhs = -(ks.c5 * sqr(c) * ks.w0);
  XInterval pi2 = const_pi(prec) / 2;

  struct Box {
    XInterval re, im;
    size_t depth;
  };
  std::deque<Box> work;
  XReal lo_re = c.lo();
  XReal hi_re = pi2.hi();
  XReal lo_im = XReal::from_long(0, prec);
  XReal hi_im = pi2.hi();
  // initial grid x grid cover of [c, pi/2] x [0, pi/2]; Im < 0 follows by
  // conjugation symmetry of V_c
  XInterval re_span(lo_re, hi_re), im_span(lo_im, hi_im);
  for (size_t i = 0; i < grid; ++i)
    for (size_t j = 0; j < grid; ++j) {
      auto frac = [&](const XInterval& span, size_t k) {
        XInterval w = span - XInterval::point(span.lo());
        XInterval lo = XInterval::point(span.lo()) + w * static_cast<long>(k) / static_cast<long>(grid);
        XInterval hi = XInterval::point(span.lo()) + w * static_cast<long>(k + 1) / static_cast<long>(grid);
        return XInterval(lo.lo(), hi.hi());
      };
      work.push_back(Box{frac(re_span, i), frac(im_span, j), 0});
    }

  XInterval min_seen(prec);
  bool have_min = false;
  while (!work.empty()) {
    Box b = work.front();
    work.pop_front();
    ++out.boxes_checked;
    out.max_depth_seen = std::max(out.max_depth_seen, b.depth);
    // skip boxes fully outside |z| <= pi/2
    XInterval r2 = sqr(b.re) + sqr(b.im);
    if (r2.lo() >= sqr(pi2).hi()) continue;
    bool ok = false, indeterminate = false;
    XInterval rev(prec);
    try {
      CInterval v = V_c(ks, c, CInterval(b.re, b.im));
      rev = v.re;
      if (!have_min || rev.lo() < min_seen.lo()) {
        min_seen = rev;
        have_min = true;
      }
      ok = rev.certainly_ge(out.rhs);
    } catch (const DomainError&) {
      indeterminate = true;
    }
    if (ok) continue;
    if (b.depth >= depth_limit) {
      out.inconclusive = true;
      out.worst_box = "Re " + b.re.str(8) + " Im " + b.im.str(8) +
                      (indeterminate ? " (indeterminate)" : (" ReV " + rev.str(8)));
      continue;
    }
    // bisect the wider side
    XInterval wre = b.re - XInterval::point(b.re.lo());
    XInterval wim = b.im - XInterval::point(b.im.lo());
    if (wre.hi() >= wim.hi()) {
      auto [l, r] = bisect(b.re);
      work.push_back(Box{l, b.im, b.depth + 1});
      work.push_back(Box{r, b.im, b.depth + 1});
    } else {
      auto [l, r] = bisect(b.im);
      work.push_back(Box{b.re, l, b.depth + 1});
      work.push_back(Box{b.re, r, b.depth + 1});
    }
  }
  out.proved = !out.inconclusive;
  if (have_min) out.min_re = min_seen;
  return out;
}

}  // namespace zfr
