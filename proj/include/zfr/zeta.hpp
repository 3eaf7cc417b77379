#pragma once

#include <vector>

#include "zfr/cinterval.hpp"
#include "zfr/rational.hpp"

namespace zfr {

// Bernoulli numbers B_0 .. B_n (exact rationals, B_1 = -1/2), cached.
const std::vector<Rat>& bernoulli_table(size_t n);

// Enclosure of zeta(sigma) for real sigma > 1 via Euler-Maclaurin with a
// rigorous tail. For an exact input the width is <= 2^(4-prec) zeta(sigma);
// input enclosures are amplified by at most the pole factor 1/(sigma-1).
XInterval zeta_real(const XInterval& sigma, mpfr_prec_t prec = current_prec());

// Enclosure of zeta'(sigma), real sigma > 1.
XInterval zeta_prime_real(const XInterval& sigma, mpfr_prec_t prec = current_prec());

// Enclosure of -zeta'(sigma)/zeta(sigma).
XInterval neg_zeta_logderiv(const XInterval& sigma, mpfr_prec_t prec = current_prec());

// Enclosure of zeta(s) - 1/(s-1) for real s = 1 + delta, delta >= 0 allowed
// to touch 0 (the pole is subtracted in a cancellation-free form).
XInterval zeta_minus_pole(const XInterval& delta, mpfr_prec_t prec = current_prec());

// Euler-Maclaurin enclosure of the Hurwitz zeta function zeta(s, u) for
// s = sigma + i t, 0 < u <= 1. Supported range: 1/2 <= sigma <= 2 (wider
// sigma accepted when t is small), 0 <= t <= 1e7.
CInterval hurwitz_zeta(const XInterval& sigma, const XInterval& t, const XInterval& u,
                       mpfr_prec_t prec = current_prec());

}  // namespace zfr
