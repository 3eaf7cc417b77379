#pragma once

#include <functional>

#include "zfr/tseries.hpp"

namespace zfr {

using SeriesFn = std::function<TSeries(const TSeries&)>;
using IntervalFn = std::function<XInterval(const XInterval&)>;

struct QuadOptions {
  size_t order = 12;
  // absolute target width of the result; panels are split until their
  // share of the error budget is met
  double tol_log2 = -70;  // target width ~ 2^tol_log2 * scale
  size_t max_panels = 100000;
  mpfr_prec_t prec = 0;  // 0 -> current
};

// Rigorous enclosure of the integral of f over [a, b] via adaptive
// Taylor-model panels.
XInterval integrate(const SeriesFn& f, const XInterval& a, const XInterval& b,
                    const QuadOptions& opt = {});

struct MaxResult {
  XInterval value;   // encloses sup f on [a, b]
  XInterval argmax;  // interval known to contain a maximizer
};

struct MaxOptions {
  double tol = 1e-12;    // absolute gap between upper and lower bound
  size_t max_boxes = 200000;
  mpfr_prec_t prec = 0;
};

// Branch-and-bound enclosure of sup f over [a, b]; f must be an interval
// extension (inclusion-monotone).
MaxResult maximize_1d(const IntervalFn& f, const XInterval& a, const XInterval& b,
                      const MaxOptions& opt = {});

// Bisection root bracketing for a function with a certified sign change on
// [a, b]. Returns an interval of width <= 2^-tol_bits * max(1,|root|)
// containing the unique root. Throws BracketError when no sign change is
// certifiable at the endpoints.
XInterval find_root(const IntervalFn& f, const XInterval& a, const XInterval& b,
                    long tol_bits = 0, mpfr_prec_t prec = 0);

}  // namespace zfr
