#pragma once

#include <functional>
#include <span>

#include "zfr/certificate.hpp"
#include "zfr/kernel.hpp"
#include "zfr/region.hpp"

namespace zfr {

// -- range verification engine -------------------------------------------

enum class Direction { le_zero, ge_zero };

using BoxFn = std::function<XInterval(std::span<const XInterval>)>;

struct RangeSpec {
  BoxFn f;
  std::vector<XInterval> domain;
  Direction dir = Direction::le_zero;
  // optional partial-derivative evaluators (one per coordinate; empty or
  // null entries fall back to bisection in that coordinate)
  std::vector<BoxFn> partials;
  size_t max_depth = 40;
  size_t max_boxes = 400000;
};

// Proves f <= 0 (or >= 0) over the whole box by monotone-envelope reduction
// where a partial derivative has certified sign, else adaptive bisection.
Certificate certify_range(const std::string& id, const RangeSpec& spec,
                          mpfr_prec_t prec = current_prec());

// -- certificate suites ----------------------------------------------------

std::vector<Certificate> certify_trigpoly(mpfr_prec_t prec = current_prec());
std::vector<Certificate> certify_kernel(mpfr_prec_t prec = current_prec());
std::vector<Certificate> certify_lemma71_coefficients(mpfr_prec_t prec = current_prec());
std::vector<Certificate> certify_section3(mpfr_prec_t prec = current_prec());
std::vector<Certificate> certify_zerocount(mpfr_prec_t prec = current_prec());
Certificate certify_section81(const HypothesisAB& h, const XInterval& log_T0,
                              mpfr_prec_t prec = current_prec());
Certificate certify_section82(const HypothesisAB& h, const XInterval& log_T0,
                              mpfr_prec_t prec = current_prec());
Certificate certify_section83(const HypothesisAB& h, const XInterval& log_T0,
                              mpfr_prec_t prec = current_prec());
std::vector<Certificate> certify_section8(mpfr_prec_t prec = current_prec());
std::vector<Certificate> certify_main_contradiction(mpfr_prec_t prec = current_prec());
std::vector<Certificate> certify_appendixA(mpfr_prec_t prec = current_prec());
std::vector<Certificate> certify_appendixB(const HypothesisAB& h,
                                           mpfr_prec_t prec = current_prec());
// Literal paper prints that fail as stated (typo H(197), the misrounded
// final digit of c1, Lemma A.1 on small primorials, the lastequation edge).
std::vector<Certificate> certify_paper_prints(mpfr_prec_t prec = current_prec());

// Known suite names, excluding the diagnostic paper-prints suite.
std::vector<std::string> default_suites();
std::vector<std::string> all_suite_names();

// Runs the named suites ("all" expands to the defaults); certificates that
// come back inconclusive at the working precision are retried at 1024 bits.
std::vector<Certificate> run_suites(const std::vector<std::string>& names,
                                    mpfr_prec_t prec = kDefaultPrec);

}  // namespace zfr
