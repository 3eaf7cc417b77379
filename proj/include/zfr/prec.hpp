#pragma once

#include <mpfr.h>

namespace zfr {

// Working precision in bits. Certified computations require >= 128;
// the default of 256 leaves room for the paper's sub-1e-4 margins.
inline constexpr mpfr_prec_t kMinPrec = 128;
inline constexpr mpfr_prec_t kDefaultPrec = 256;

mpfr_prec_t current_prec() noexcept;
void set_current_prec(mpfr_prec_t p) noexcept;

// Scoped precision override.
class PrecGuard {
 public:
  explicit PrecGuard(mpfr_prec_t p) : saved_(current_prec()) { set_current_prec(p); }
  ~PrecGuard() { set_current_prec(saved_); }
  PrecGuard(const PrecGuard&) = delete;
  PrecGuard& operator=(const PrecGuard&) = delete;

 private:
  mpfr_prec_t saved_;
};

}  // namespace zfr
