#pragma once

#include <mpfr.h>

#include <algorithm>
#include <string>
#include <utility>

#include "zfr/xreal.hpp"

namespace zfr {

// Rigorous enclosing interval [lo, hi] with outward rounding: every operation
// returns an interval containing the exact real result.
class XInterval {
 public:
  explicit XInterval(mpfr_prec_t prec = current_prec()) : lo_(prec), hi_(prec) {}

  XInterval(XReal lo, XReal hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
    if (lo_.is_nan() || hi_.is_nan() || lo_.cmp(hi_) > 0)
      throw DomainError("invalid interval bounds");
  }

  static XInterval exact(long x, mpfr_prec_t prec = current_prec()) {
    return XInterval(XReal::from_long(x, prec), XReal::from_long(x, prec));
  }

  static XInterval point(const XReal& x) { return XInterval(x, x); }

  // Outward-rounded enclosure of a decimal literal.
  static XInterval from_decimal(const std::string& s, mpfr_prec_t prec = current_prec()) {
    return XInterval(XReal::from_decimal(s, MPFR_RNDD, prec),
                     XReal::from_decimal(s, MPFR_RNDU, prec));
  }

  static XInterval hull(const XInterval& a, const XInterval& b) {
    XInterval r(std::max(a.prec(), b.prec()));
    mpfr_min(r.lo_.get(), a.lo_.get(), b.lo_.get(), MPFR_RNDD);
    mpfr_max(r.hi_.get(), a.hi_.get(), b.hi_.get(), MPFR_RNDU);
    return r;
  }

  const XReal& lo() const noexcept { return lo_; }
  const XReal& hi() const noexcept { return hi_; }
  XReal& lo_mut() noexcept { return lo_; }
  XReal& hi_mut() noexcept { return hi_; }
  mpfr_prec_t prec() const noexcept { return std::max(lo_.prec(), hi_.prec()); }

  bool is_finite() const noexcept { return lo_.is_finite() && hi_.is_finite(); }

  XReal width() const {
    XReal w(prec());
    mpfr_sub(w.get(), hi_.get(), lo_.get(), MPFR_RNDU);
    return w;
  }

  XReal mid() const {
    XReal m(prec());
    mpfr_add(m.get(), lo_.get(), hi_.get(), MPFR_RNDN);
    mpfr_div_2ui(m.get(), m.get(), 1, MPFR_RNDN);
    return m;
  }

  bool contains(const XReal& x) const noexcept {
    return lo_.cmp(x) <= 0 && hi_.cmp(x) >= 0;
  }
  bool contains(long x) const noexcept { return lo_.cmp_si(x) <= 0 && hi_.cmp_si(x) >= 0; }
  bool contains_zero() const noexcept { return lo_.sign() <= 0 && hi_.sign() >= 0; }
  bool contains(const XInterval& o) const noexcept {
    return lo_.cmp(o.lo_) <= 0 && hi_.cmp(o.hi_) >= 0;
  }
  bool overlaps(const XInterval& o) const noexcept {
    return lo_.cmp(o.hi_) <= 0 && o.lo_.cmp(hi_) <= 0;
  }

  // Certified order relations (true only when provable).
  bool certainly_le(const XInterval& o) const noexcept { return hi_.cmp(o.lo_) <= 0; }
  bool certainly_lt(const XInterval& o) const noexcept { return hi_.cmp(o.lo_) < 0; }
  bool certainly_ge(const XInterval& o) const noexcept { return lo_.cmp(o.hi_) >= 0; }
  bool certainly_gt(const XInterval& o) const noexcept { return lo_.cmp(o.hi_) > 0; }
  bool certainly_positive() const noexcept { return lo_.sign() > 0; }
  bool certainly_negative() const noexcept { return hi_.sign() < 0; }

  std::string str(size_t digits = 20) const {
    return "[" + lo_.str(digits, MPFR_RNDD) + "," + hi_.str(digits, MPFR_RNDU) + "]";
  }

 private:
  XReal lo_, hi_;
};

// -- arithmetic ---------------------------------------------------------

XInterval operator+(const XInterval& a, const XInterval& b);
XInterval operator-(const XInterval& a, const XInterval& b);
XInterval operator*(const XInterval& a, const XInterval& b);
XInterval operator/(const XInterval& a, const XInterval& b);  // throws if 0 in b
XInterval operator-(const XInterval& a);

XInterval operator+(const XInterval& a, long b);
XInterval operator+(long a, const XInterval& b);
XInterval operator-(const XInterval& a, long b);
XInterval operator-(long a, const XInterval& b);
XInterval operator*(const XInterval& a, long b);
XInterval operator*(long a, const XInterval& b);
XInterval operator/(const XInterval& a, long b);
XInterval operator/(long a, const XInterval& b);

XInterval sqr(const XInterval& a);
XInterval sqrt(const XInterval& a);   // requires a.lo >= 0
XInterval cbrt(const XInterval& a);
XInterval abs(const XInterval& a);
XInterval exp(const XInterval& a);
XInterval log(const XInterval& a);    // requires a.lo > 0
XInterval pow_si(const XInterval& a, long n);
XInterval rootn(const XInterval& a, unsigned long n);  // requires a.lo >= 0
XInterval pow(const XInterval& a, const XInterval& b);  // requires a.lo > 0
XInterval pow23(const XInterval& a);  // x^(2/3), a.lo >= 0
XInterval pow13(const XInterval& a);  // x^(1/3)
XInterval sin(const XInterval& a);
XInterval cos(const XInterval& a);
XInterval tan(const XInterval& a);    // throws if a pole may lie inside
XInterval cot(const XInterval& a);
XInterval sinh(const XInterval& a);
XInterval cosh(const XInterval& a);
XInterval expm1(const XInterval& a);
XInterval min(const XInterval& a, const XInterval& b);
XInterval max(const XInterval& a, const XInterval& b);
XInterval intersect(const XInterval& a, const XInterval& b);  // throws if disjoint

XInterval const_pi(mpfr_prec_t prec = current_prec());
XInterval const_euler(mpfr_prec_t prec = current_prec());
XInterval const_log2(mpfr_prec_t prec = current_prec());

// Splits a at its midpoint.
std::pair<XInterval, XInterval> bisect(const XInterval& a);

}  // namespace zfr
