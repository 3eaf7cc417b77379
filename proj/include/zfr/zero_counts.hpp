#pragma once

#include "zfr/interval.hpp"

namespace zfr {

// Inputs shared by the zero-counting bound evaluators. These are formula
// evaluators: preconditions enforce each lemma's hypotheses so a bound is
// never reported outside its validity range.
struct CountBoundInputs {
  XInterval t;       // height
  XInterval R_or_v;  // radius (Lemma 4.2) or cutoff v (Lemma 4.3)
  XInterval q;       // modulus, >= 3
  XInterval A;       // hypothesis constant, > 0
  XInterval B;       // hypothesis constant, in (0, 4.45]
};

// C1 = (1+2 eta)/(2 pi log 2),
// C2 = 0.1529 - 0.134 eta + 2 log zeta(1+eta)/log 2 - log zeta(2+2 eta)/log 2
//      + (2/pi) log zeta(3/2+2 eta).
struct ZeroCountConstants {
  XInterval C1, C2;
};
ZeroCountConstants zerocount_constants(const XInterval& eta,
                                       mpfr_prec_t prec = current_prec());

// 1.3478 R^{3/2} B log t + 0.49
//   + (log(A+1) - log R + 1.8579 R log q + (2/3) loglog t)/1.879
XInterval lemma42_bound(const CountBoundInputs& in, mpfr_prec_t prec = current_prec());

// Full right-hand side of the annulus sum bound, including -N(t,v)/v^2 and
// the (log q)(1.978/v + 0.23267) term.
XInterval lemma43_bound(const CountBoundInputs& in, const XInterval& N_tv,
                        mpfr_prec_t prec = current_prec());

// 8.21 + log q + (1/2) log(1 + u^2/4)
XInterval llprime_line_bound(const XInterval& u, const XInterval& q,
                             mpfr_prec_t prec = current_prec());

// pi y / sinh(pi y / 2), extended by its limit 2 at y = 0; 0 <= U <= 2.
XInterval U_kernel(const XInterval& y, mpfr_prec_t prec = current_prec());

}  // namespace zfr
