#pragma once

#include <mpfr.h>

#include <cctype>
#include <cstdint>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <utility>

#include "zfr/prec.hpp"

namespace zfr {

class ZfrError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DomainError : public ZfrError {
 public:
  using ZfrError::ZfrError;
};

class BracketError : public ZfrError {
 public:
  using ZfrError::ZfrError;
};

class UnsupportedRangeError : public ZfrError {
 public:
  using ZfrError::ZfrError;
};

// Arbitrary-precision real scalar. Thin RAII wrapper over mpfr_t; every
// rounding decision is made by the caller through explicit mpfr calls or
// through XInterval, which is the carrier of all certified arithmetic.
class XReal {
 public:
  explicit XReal(mpfr_prec_t prec = current_prec()) {
    if (prec < kMinPrec) prec = kMinPrec;
    mpfr_init2(v_, prec);
    mpfr_set_zero(v_, 1);
  }

  XReal(const XReal& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }

  XReal(XReal&& o) noexcept {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
  }

  XReal& operator=(const XReal& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }

  XReal& operator=(XReal&& o) noexcept {
    if (this != &o) mpfr_swap(v_, o.v_);
    return *this;
  }

  ~XReal() { mpfr_clear(v_); }

  static XReal from_long(long x, mpfr_prec_t prec = current_prec()) {
    XReal r(prec);
    mpfr_set_si(r.v_, x, MPFR_RNDN);
    return r;
  }

  // Exact only when the decimal fits the precision; use XInterval::from_decimal
  // for outward-rounded enclosures of decimal literals.
  static XReal from_decimal(const std::string& s, mpfr_rnd_t rnd,
                            mpfr_prec_t prec = current_prec()) {
    XReal r(prec);
    if (mpfr_set_str(r.v_, s.c_str(), 10, rnd) != 0 && !looks_numeric(s))
      throw DomainError("unparseable decimal: " + s);
    return r;
  }

  mpfr_ptr get() noexcept { return v_; }
  mpfr_srcptr get() const noexcept { return v_; }
  mpfr_prec_t prec() const noexcept { return mpfr_get_prec(v_); }

  bool is_finite() const noexcept { return mpfr_number_p(v_) != 0; }
  bool is_nan() const noexcept { return mpfr_nan_p(v_) != 0; }
  int sign() const noexcept { return mpfr_sgn(v_); }
  double to_double() const noexcept { return mpfr_get_d(v_, MPFR_RNDN); }

  XReal operator-() const {
    XReal r(prec());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
  }

  int cmp(const XReal& o) const noexcept { return mpfr_cmp(v_, o.v_); }
  int cmp_si(long x) const noexcept { return mpfr_cmp_si(v_, x); }

  bool operator<(const XReal& o) const noexcept { return cmp(o) < 0; }
  bool operator<=(const XReal& o) const noexcept { return cmp(o) <= 0; }
  bool operator>(const XReal& o) const noexcept { return cmp(o) > 0; }
  bool operator>=(const XReal& o) const noexcept { return cmp(o) >= 0; }
  bool operator==(const XReal& o) const noexcept { return cmp(o) == 0; }

  // Decimal string with `digits` significant digits, rounded in direction rnd.
  std::string str(size_t digits, mpfr_rnd_t rnd = MPFR_RNDN) const;

 private:
  static bool looks_numeric(const std::string& s) {
    for (char c : s)
      if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '+' || c == '-' ||
            c == '.' || c == 'e' || c == 'E' || c == '@'))
        return false;
    return !s.empty();
  }

  mpfr_t v_;
};

}  // namespace zfr
