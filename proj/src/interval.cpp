#include "zfr/interval.hpp"

#include <array>

namespace zfr {

namespace {

// Heights like e^(e^(e^23)) need the full exponent range (the default caps
// near 2^30); widen it once at load time.
struct ExponentRangeInit {
  ExponentRangeInit() {
    mpfr_set_emin(mpfr_get_emin_min());
    mpfr_set_emax(mpfr_get_emax_max());
  }
};
const ExponentRangeInit g_exponent_range_init{};

}  // namespace

std::string XReal::str(size_t digits, mpfr_rnd_t rnd) const {
  if (!is_finite()) return is_nan() ? "nan" : (sign() > 0 ? "inf" : "-inf");
  char fmt[32];
  std::snprintf(fmt, sizeof fmt, "%%.%zuR*g", digits);
  char* out = nullptr;
  mpfr_asprintf(&out, fmt, rnd, v_);
  std::string s(out);
  mpfr_free_str(out);
  return s;
}

namespace {

mpfr_prec_t pr(const XInterval& a, const XInterval& b) {
  return std::max(a.prec(), b.prec());
}

}  // namespace

XInterval operator+(const XInterval& a, const XInterval& b) {
  XInterval r(pr(a, b));
  mpfr_add(r.lo_mut().get(), a.lo().get(), b.lo().get(), MPFR_RNDD);
  mpfr_add(r.hi_mut().get(), a.hi().get(), b.hi().get(), MPFR_RNDU);
  return r;
}

XInterval operator-(const XInterval& a, const XInterval& b) {
  XInterval r(pr(a, b));
  mpfr_sub(r.lo_mut().get(), a.lo().get(), b.hi().get(), MPFR_RNDD);
  mpfr_sub(r.hi_mut().get(), a.hi().get(), b.lo().get(), MPFR_RNDU);
  return r;
}

XInterval operator-(const XInterval& a) {
  XInterval r(a.prec());
  mpfr_neg(r.lo_mut().get(), a.hi().get(), MPFR_RNDD);
  mpfr_neg(r.hi_mut().get(), a.lo().get(), MPFR_RNDU);
  return r;
}

XInterval operator*(const XInterval& a, const XInterval& b) {
  const mpfr_prec_t p = pr(a, b);
  XInterval r(p);
  std::array<mpfr_srcptr, 2> as{a.lo().get(), a.hi().get()};
  std::array<mpfr_srcptr, 2> bs{b.lo().get(), b.hi().get()};
  XReal t(p);
  bool first = true;
  for (auto x : as)
    for (auto y : bs) {
      mpfr_mul(t.get(), x, y, MPFR_RNDD);
      if (first || mpfr_cmp(t.get(), r.lo().get()) < 0)
        mpfr_set(r.lo_mut().get(), t.get(), MPFR_RNDD);
      mpfr_mul(t.get(), x, y, MPFR_RNDU);
      if (first || mpfr_cmp(t.get(), r.hi().get()) > 0)
        mpfr_set(r.hi_mut().get(), t.get(), MPFR_RNDU);
      first = false;
    }
  return r;
}

XInterval operator/(const XInterval& a, const XInterval& b) {
  if (b.contains_zero()) throw DomainError("interval division by interval containing 0");
  const mpfr_prec_t p = pr(a, b);
  XInterval r(p);
  std::array<mpfr_srcptr, 2> as{a.lo().get(), a.hi().get()};
  std::array<mpfr_srcptr, 2> bs{b.lo().get(), b.hi().get()};
  XReal t(p);
  bool first = true;
  for (auto x : as)
    for (auto y : bs) {
      mpfr_div(t.get(), x, y, MPFR_RNDD);
      if (first || mpfr_cmp(t.get(), r.lo().get()) < 0)
        mpfr_set(r.lo_mut().get(), t.get(), MPFR_RNDD);
      mpfr_div(t.get(), x, y, MPFR_RNDU);
      if (first || mpfr_cmp(t.get(), r.hi().get()) > 0)
        mpfr_set(r.hi_mut().get(), t.get(), MPFR_RNDU);
      first = false;
    }
  return r;
}

XInterval operator+(const XInterval& a, long b) { return a + XInterval::exact(b, a.prec()); }
XInterval operator+(long a, const XInterval& b) { return XInterval::exact(a, b.prec()) + b; }
XInterval operator-(const XInterval& a, long b) { return a - XInterval::exact(b, a.prec()); }
XInterval operator-(long a, const XInterval& b) { return XInterval::exact(a, b.prec()) - b; }
XInterval operator*(const XInterval& a, long b) { return a * XInterval::exact(b, a.prec()); }
XInterval operator*(long a, const XInterval& b) { return XInterval::exact(a, b.prec()) * b; }
XInterval operator/(const XInterval& a, long b) { return a / XInterval::exact(b, a.prec()); }
XInterval operator/(long a, const XInterval& b) { return XInterval::exact(a, b.prec()) / b; }

XInterval sqr(const XInterval& a) {
  XInterval r(a.prec());
  if (a.lo().sign() >= 0) {
    mpfr_sqr(r.lo_mut().get(), a.lo().get(), MPFR_RNDD);
    mpfr_sqr(r.hi_mut().get(), a.hi().get(), MPFR_RNDU);
  } else if (a.hi().sign() <= 0) {
    mpfr_sqr(r.lo_mut().get(), a.hi().get(), MPFR_RNDD);
    mpfr_sqr(r.hi_mut().get(), a.lo().get(), MPFR_RNDU);
  } else {
    mpfr_set_zero(r.lo_mut().get(), 1);
    XReal t(a.prec());
    mpfr_sqr(t.get(), a.lo().get(), MPFR_RNDU);
    mpfr_sqr(r.hi_mut().get(), a.hi().get(), MPFR_RNDU);
    if (mpfr_cmp(t.get(), r.hi().get()) > 0) mpfr_set(r.hi_mut().get(), t.get(), MPFR_RNDU);
  }
  return r;
}

namespace {

// Monotone increasing single-argument mpfr function applied endpoint-wise.
template <typename F>
XInterval mono_inc(const XInterval& a, F f) {
  XInterval r(a.prec());
  f(r.lo_mut().get(), a.lo().get(), MPFR_RNDD);
  f(r.hi_mut().get(), a.hi().get(), MPFR_RNDU);
  return r;
}

}  // namespace

XInterval sqrt(const XInterval& a) {
  if (a.lo().sign() < 0) throw DomainError("sqrt of interval with negative part");
  return mono_inc(a, [](mpfr_ptr o, mpfr_srcptr x, mpfr_rnd_t r) { mpfr_sqrt(o, x, r); });
}

XInterval cbrt(const XInterval& a) {
  return mono_inc(a, [](mpfr_ptr o, mpfr_srcptr x, mpfr_rnd_t r) { mpfr_cbrt(o, x, r); });
}

XInterval abs(const XInterval& a) {
  if (a.lo().sign() >= 0) return a;
  if (a.hi().sign() <= 0) return -a;
  XInterval r(a.prec());
  mpfr_set_zero(r.lo_mut().get(), 1);
  XReal t(a.prec());
  mpfr_neg(t.get(), a.lo().get(), MPFR_RNDU);
  if (mpfr_cmp(t.get(), a.hi().get()) > 0)
    mpfr_set(r.hi_mut().get(), t.get(), MPFR_RNDU);
  else
    mpfr_set(r.hi_mut().get(), a.hi().get(), MPFR_RNDU);
  return r;
}

XInterval exp(const XInterval& a) {
  return mono_inc(a, [](mpfr_ptr o, mpfr_srcptr x, mpfr_rnd_t r) { mpfr_exp(o, x, r); });
}

XInterval expm1(const XInterval& a) {
  return mono_inc(a, [](mpfr_ptr o, mpfr_srcptr x, mpfr_rnd_t r) { mpfr_expm1(o, x, r); });
}

XInterval log(const XInterval& a) {
  if (a.lo().sign() <= 0) throw DomainError("log of interval touching (-inf,0]");
  return mono_inc(a, [](mpfr_ptr o, mpfr_srcptr x, mpfr_rnd_t r) { mpfr_log(o, x, r); });
}

XInterval pow_si(const XInterval& a, long n) {
  if (n == 0) return XInterval::exact(1, a.prec());
  if (n < 0) return XInterval::exact(1, a.prec()) / pow_si(a, -n);
  if (n % 2 == 0 && a.contains_zero()) {
    XInterval h = sqr(a);
    long half = n / 2;
    return half == 1 ? h : pow_si(h, half);
  }
  // sign-stable or odd power: endpoint evaluation is exact up to rounding
  XInterval r(a.prec());
  bool flip = (n % 2 == 0 && a.hi().sign() <= 0);
  mpfr_pow_si(r.lo_mut().get(), (flip ? a.hi() : a.lo()).get(), n, MPFR_RNDD);
  mpfr_pow_si(r.hi_mut().get(), (flip ? a.lo() : a.hi()).get(), n, MPFR_RNDU);
  return r;
}

XInterval rootn(const XInterval& a, unsigned long n) {
  if (a.lo().sign() < 0) throw DomainError("rootn of interval with negative part");
  return mono_inc(a, [n](mpfr_ptr o, mpfr_srcptr x, mpfr_rnd_t r) { mpfr_rootn_ui(o, x, n, r); });
}

XInterval pow(const XInterval& a, const XInterval& b) {
  if (a.lo().sign() <= 0) throw DomainError("pow requires positive base interval");
  return exp(b * log(a));
}

XInterval pow23(const XInterval& a) { return cbrt(sqr(a)); }
XInterval pow13(const XInterval& a) { return cbrt(a); }

XInterval const_pi(mpfr_prec_t prec) {
  XInterval r(prec);
  mpfr_const_pi(r.lo_mut().get(), MPFR_RNDD);
  mpfr_const_pi(r.hi_mut().get(), MPFR_RNDU);
  return r;
}

XInterval const_euler(mpfr_prec_t prec) {
  XInterval r(prec);
  mpfr_const_euler(r.lo_mut().get(), MPFR_RNDD);
  mpfr_const_euler(r.hi_mut().get(), MPFR_RNDU);
  return r;
}

XInterval const_log2(mpfr_prec_t prec) {
  XInterval r(prec);
  mpfr_const_log2(r.lo_mut().get(), MPFR_RNDD);
  mpfr_const_log2(r.hi_mut().get(), MPFR_RNDU);
  return r;
}

namespace {

XInterval trig_range(const XInterval& a, bool want_sin) {
  const mpfr_prec_t p = a.prec() + 16;
  // Quadrant bracketing: critical points of sin are at (k+1/2)*pi, of cos at k*pi.
  // Work with n such that critical points are offset + n*pi.
  XInterval pi = const_pi(p);
  XInterval half = XInterval::exact(1, p) / XInterval::exact(2, p);
  XInterval shifted_lo = XInterval::point(a.lo()) / pi;
  XInterval shifted_hi = XInterval::point(a.hi()) / pi;
  if (want_sin) {
    shifted_lo = shifted_lo - half;
    shifted_hi = shifted_hi - half;
  }
  // n ranges over integers in [ceil(shifted_lo.lo), floor(shifted_hi.hi)]
  XReal flo(p), fhi(p);
  mpfr_ceil(flo.get(), shifted_lo.lo().get());
  mpfr_floor(fhi.get(), shifted_hi.hi().get());
  if (!mpfr_fits_slong_p(flo.get(), MPFR_RNDN) || !mpfr_fits_slong_p(fhi.get(), MPFR_RNDN)) {
    XInterval r(a.prec());
    mpfr_set_si(r.lo_mut().get(), -1, MPFR_RNDD);
    mpfr_set_si(r.hi_mut().get(), 1, MPFR_RNDU);
    return r;
  }
  long n0 = mpfr_get_si(flo.get(), MPFR_RNDN);
  long n1 = mpfr_get_si(fhi.get(), MPFR_RNDN);
  if (n1 - n0 >= 2) {
    XInterval r(a.prec());
    mpfr_set_si(r.lo_mut().get(), -1, MPFR_RNDD);
    mpfr_set_si(r.hi_mut().get(), 1, MPFR_RNDU);
    return r;
  }
  auto eval = [&](mpfr_srcptr x) {
    XInterval r(p);
    if (want_sin) {
      mpfr_sin(r.lo_mut().get(), x, MPFR_RNDD);
      mpfr_sin(r.hi_mut().get(), x, MPFR_RNDU);
    } else {
      mpfr_cos(r.lo_mut().get(), x, MPFR_RNDD);
      mpfr_cos(r.hi_mut().get(), x, MPFR_RNDU);
    }
    return r;
  };
  XInterval r = XInterval::hull(eval(a.lo().get()), eval(a.hi().get()));
  // Each integer n in [n0, n1] marks a critical point inside: extremum +-1.
  for (long n = n0; n <= n1; ++n) {
    // Critical value is sign-determined: sin at (n+1/2)pi is (-1)^n, cos at n*pi is (-1)^n.
    long sign = (n % 2 == 0) ? 1 : -1;
    r = XInterval::hull(r, XInterval::exact(sign, p));
  }
  // Clamp to [-1, 1] in case shifted bracketing was conservative.
  XInterval one = XInterval::exact(1, p);
  return intersect(r, XInterval((-one).lo(), one.hi()));
}

}  // namespace

XInterval sin(const XInterval& a) { return trig_range(a, true); }
XInterval cos(const XInterval& a) { return trig_range(a, false); }

XInterval tan(const XInterval& a) {
  XInterval c = cos(a);
  if (c.contains_zero()) throw DomainError("tan over interval possibly containing a pole");
  return sin(a) / c;
}

XInterval cot(const XInterval& a) {
  XInterval s = sin(a);
  if (s.contains_zero()) throw DomainError("cot over interval possibly containing a pole");
  return cos(a) / s;
}

XInterval sinh(const XInterval& a) {
  return mono_inc(a, [](mpfr_ptr o, mpfr_srcptr x, mpfr_rnd_t r) { mpfr_sinh(o, x, r); });
}

XInterval cosh(const XInterval& a) {
  XInterval r(a.prec());
  if (a.lo().sign() >= 0) {
    mpfr_cosh(r.lo_mut().get(), a.lo().get(), MPFR_RNDD);
    mpfr_cosh(r.hi_mut().get(), a.hi().get(), MPFR_RNDU);
  } else if (a.hi().sign() <= 0) {
    mpfr_cosh(r.lo_mut().get(), a.hi().get(), MPFR_RNDD);
    mpfr_cosh(r.hi_mut().get(), a.lo().get(), MPFR_RNDU);
  } else {
    mpfr_set_si(r.lo_mut().get(), 1, MPFR_RNDD);
    XReal t(a.prec());
    mpfr_cosh(t.get(), a.lo().get(), MPFR_RNDU);
    mpfr_cosh(r.hi_mut().get(), a.hi().get(), MPFR_RNDU);
    if (mpfr_cmp(t.get(), r.hi().get()) > 0) mpfr_set(r.hi_mut().get(), t.get(), MPFR_RNDU);
  }
  return r;
}

XInterval min(const XInterval& a, const XInterval& b) {
  XInterval r(pr(a, b));
  mpfr_min(r.lo_mut().get(), a.lo().get(), b.lo().get(), MPFR_RNDD);
  mpfr_min(r.hi_mut().get(), a.hi().get(), b.hi().get(), MPFR_RNDU);
  return r;
}

XInterval max(const XInterval& a, const XInterval& b) {
  XInterval r(pr(a, b));
  mpfr_max(r.lo_mut().get(), a.lo().get(), b.lo().get(), MPFR_RNDD);
  mpfr_max(r.hi_mut().get(), a.hi().get(), b.hi().get(), MPFR_RNDU);
  return r;
}

XInterval intersect(const XInterval& a, const XInterval& b) {
  if (!a.overlaps(b)) throw DomainError("intersection of disjoint intervals");
  XInterval r(pr(a, b));
  mpfr_max(r.lo_mut().get(), a.lo().get(), b.lo().get(), MPFR_RNDD);
  mpfr_min(r.hi_mut().get(), a.hi().get(), b.hi().get(), MPFR_RNDU);
  return r;
}

std::pair<XInterval, XInterval> bisect(const XInterval& a) {
  XReal m = a.mid();
  return {XInterval(a.lo(), m), XInterval(m, a.hi())};
}

namespace {
thread_local mpfr_prec_t g_prec = kDefaultPrec;
}

mpfr_prec_t current_prec() noexcept { return g_prec; }
void set_current_prec(mpfr_prec_t p) noexcept { g_prec = p < kMinPrec ? kMinPrec : p; }

}  // namespace zfr
