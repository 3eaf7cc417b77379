#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zfr/quadrature.hpp"

namespace zfr {

// Hypothesis constants of the Hurwitz-zeta bound |zeta(s,u) - u^{-s}| <=
// A t^{B(1-sigma)^{3/2}} (log t)^{2/3}.
struct HypothesisAB {
  XInterval A;
  XInterval B;
};

HypothesisAB ford_hypothesis(mpfr_prec_t prec = current_prec());  // A=76.2, B=4.45

// A named zero-free-region formula: the region is
//   sigma >= 1 - width,  width = 1 / (coeff_logq log q + coeff_loglogq loglog q
//                                   + coeff_vk (log t)^{2/3} (loglog t)^{1/3}).
// Validity is tracked in log t to accommodate thresholds like e^(e^23)
// whose exponential exceeds any floating-point range.
struct RegionProfile {
  std::string name;
  XInterval coeff_logq;
  XInterval coeff_loglogq;
  XInterval coeff_vk;
  XInterval log_t_min;
  long q_min = 3;
  // false for regions whose validity threshold the paper leaves
  // ineffective (larget); those are excluded from best_width
  bool effective = true;
  std::string note;
};

// The profile table: mccurley is handled by width_mccurley, everything else
// by width().
const std::vector<RegionProfile>& region_profiles(mpfr_prec_t prec = current_prec());

// 1 - sigma threshold of the named region at (q, t).
XInterval width(const RegionProfile& profile, long q, const XInterval& t,
                mpfr_prec_t prec = current_prec());

// McCurley: 1/(9.64590880 log max{q, qt, 10}), any t >= 0.
XInterval width_mccurley(long q, const XInterval& t, mpfr_prec_t prec = current_prec());

// X(t) of the main explicit theorem, tau = 4t + 1.
XInterval X_of_t(const XInterval& t, const HypothesisAB& h, mpfr_prec_t prec = current_prec());
// Same, parameterized by log(tau) directly (needed for t beyond range).
XInterval X_of_logtau(const XInterval& logtau, const HypothesisAB& h,
                      mpfr_prec_t prec = current_prec());

struct SupXResult {
  XInterval sup;         // enclosure of sup_{t >= t0} X(t)
  XInterval argmax_logtau;  // bracket for the maximizing log(tau)
};

// Certified sup of X over t >= exp(log_t0) (interior maximum plus a
// monotone tail bound).
SupXResult sup_X(const HypothesisAB& h, const XInterval& log_t0,
                 mpfr_prec_t prec = current_prec());

// M1 = min(0.055071, (0.16521 - 0.184833/log T0)/(2.9997 + supX/loglog T0)).
// T0 passed as log T0; hypotheses (T0 >= e^1938, log T0/loglog T0 >= 1139/B)
// are enforced.
XInterval M1_of(const XInterval& log_T0, const HypothesisAB& h, const XInterval& supX,
                mpfr_prec_t prec = current_prec());

// (C, D) -> (A, B) conversion: B = (2/9) sqrt(3D),
// A = (C + 1 + 1e-80)/(log t)^{2/3} + 1.569 C D^{1/3}. Flags B > 4.45.
struct ApConversion {
  HypothesisAB h;
  bool B_exceeds_theorem_range = false;
};
ApConversion ab_from_cd(const XInterval& C, const XInterval& D, const XInterval& t,
                        mpfr_prec_t prec = current_prec());

// c = 31.76 + max{ sup_{t >= T0} (-2.89 log3 t + 14.44 log(A+1) + 3.59)/loglog t, 0 }.
// The supremum reduces to the T0 endpoint: the numerator is decreasing and the
// denominator increasing, so positive values are maximal at T0.
XInterval appendixB_c(const HypothesisAB& h, const XInterval& log_T0,
                      mpfr_prec_t prec = current_prec());

struct BestWidth {
  XInterval width;
  std::string profile;
  std::vector<std::pair<std::string, XInterval>> candidates;
};

// Maximal width among all effective profiles valid at (q, t); validity is
// strict, never extrapolated.
BestWidth best_width(long q, const XInterval& t, mpfr_prec_t prec = current_prec());

}  // namespace zfr
