#pragma once

#include <string>

#include "zfr/rational.hpp"

namespace zfr {

// Nonnegative cosine polynomial sum_{j=0..4} b_j cos(j theta)
// = 8 (a1 + cos theta)^2 (a2 + cos theta)^2.
// Coefficients are exact rationals derived from decimal inputs, so the
// downstream rational identities (666550/200211 and friends) hold exactly.
struct CosinePolynomial {
  Rat a1, a2;
  Rat b0, b1, b2, b3, b4, b5;

  XInterval b(int j, mpfr_prec_t prec = current_prec()) const;
  Rat b_rat(int j) const;
};

// Closed forms of Eq. coefficients from (a1, a2) given as decimal strings.
CosinePolynomial coefficients_from(const std::string& a1, const std::string& a2);
CosinePolynomial coefficients_from(const Rat& a1, const Rat& a2);

// Enclosure of sum_j b_j cos(j theta).
XInterval eval_poly(const CosinePolynomial& p, const XInterval& theta,
                    mpfr_prec_t prec = current_prec());

// Enclosure of the factored form 8 (a1+cos)^2 (a2+cos)^2.
XInterval eval_factored(const CosinePolynomial& p, const XInterval& theta,
                        mpfr_prec_t prec = current_prec());

// The paper's choice (a1, a2) = (0.225, 0.9).
const CosinePolynomial& paper_poly();

}  // namespace zfr
