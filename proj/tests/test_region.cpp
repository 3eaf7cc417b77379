#include <doctest.h>

#include "zfr/rational.hpp"
#include "zfr/region.hpp"

using namespace zfr;

namespace {

XInterval near(const std::string& digits) {
  Rat p = Rat::from_string(digits);
  auto dot = digits.find('.');
  size_t frac = dot == std::string::npos ? 0 : digits.size() - dot - 1;
  Rat ulp(1);
  for (size_t i = 0; i < frac; ++i) ulp = ulp / Rat(10);
  return XInterval((p - ulp).to_interval().lo(), (p + ulp).to_interval().hi());
}

const RegionProfile& profile(const std::string& name) {
  for (const auto& p : region_profiles())
    if (p.name == name) return p;
  throw DomainError("no profile " + name);
}

XInterval e_pow(long k) { return exp(XInterval::exact(k)); }

}  // namespace

TEST_CASE("smallt width at q=3, t=10") {
  XInterval w = width(profile("smallt"), 3, XInterval::exact(10));
  CHECK(w.overlaps(near("0.0088905259")));
  CHECK(w.lo() >= XReal::from_decimal("0.00888", MPFR_RNDN));
  CHECK(w.hi() <= XReal::from_decimal("0.00890", MPFR_RNDN));
}

TEST_CASE("profile coefficients as stated") {
  CHECK(profile("larget").coeff_logq.contains(XReal::from_decimal("10.1", MPFR_RNDN)));
  CHECK(profile("larget").coeff_vk.contains(XReal::from_decimal("49.13", MPFR_RNDN)));
  CHECK_FALSE(profile("larget").effective);
  CHECK(profile("slightlystronger").coeff_loglogq.contains(XReal::from_decimal("9.791", MPFR_RNDN)));
  CHECK(profile("slightlystronger").coeff_vk.contains(XReal::from_decimal("61.306", MPFR_RNDN)));
}

TEST_CASE("validity is strict") {
  CHECK_THROWS_AS(width(profile("smallt"), 3, XInterval::exact(5)), DomainError);
  CHECK_THROWS_AS(width(profile("smallt"), 2, XInterval::exact(100)), DomainError);
  CHECK_THROWS_AS(width(profile("larget"), 3, e_pow(3000)), DomainError);
}

TEST_CASE("mccurley max clause") {
  XInterval w = width_mccurley(3, XInterval(current_prec()));
  CHECK(w.overlaps(1 / (XInterval::from_decimal("9.64590880") * log(XInterval::exact(10)))));
  XInterval w2 = width_mccurley(1000000L, XInterval::exact(1000000L));
  XInterval expect = 1 / (XInterval::from_decimal("9.64590880") *
                          log(XInterval::exact(1000000L) * XInterval::exact(1000000L)));
  CHECK(w2.overlaps(expect));
}

TEST_CASE("X_of_t and its supremum") {
  HypothesisAB h = ford_hypothesis();
  SupXResult sx = sup_X(h, XInterval::exact(1944));
  CHECK(sx.sup.hi() <= XReal::from_decimal("5.61718", MPFR_RNDN));
  CHECK(sx.sup.overlaps(near("5.61717605734")));
  CHECK(sx.argmax_logtau.overlaps(near("24012.71841")));
  // the 0.23531 log(B/loglog tau) term decreases in t
  XInterval x1 = X_of_logtau(XInterval::exact(3000), h);
  XInterval x2 = X_of_logtau(XInterval::exact(30000), h);
  CHECK(x1.is_finite());
  CHECK(x2.is_finite());
}

TEST_CASE("M1 and the 61.306 coefficient") {
  HypothesisAB h = ford_hypothesis();
  XInterval m1 = M1_of(XInterval::exact(1944), h, XInterval::from_decimal("5.61718"));
  CHECK(m1.overlaps(near("0.0441308351976")));
  XInterval ratio = pow23(h.B) / m1;
  CHECK(ratio.overlaps(near("61.30527721")));
  CHECK(ratio.lo() >= XReal::from_decimal("61.29", MPFR_RNDN));
  CHECK(ratio.hi() <= XReal::from_decimal("61.32", MPFR_RNDN));
  // limit T0 -> infinity: M1 -> 0.055071
  XInterval m1_inf = M1_of(exp(XInterval::exact(20000)), h, XInterval::from_decimal("5.61718"));
  CHECK(m1_inf.overlaps(XInterval::from_decimal("0.055071")));
  // hypothesis checks
  CHECK_THROWS_AS(M1_of(XInterval::exact(1900), h, XInterval::exact(6)), DomainError);
}

TEST_CASE("corollary 3.2 constant 49.13") {
  // (0.05507)^{-1} * 4.45^{2/3} ~ 49.13
  XInterval v = pow23(XInterval::from_decimal("4.45")) / XInterval::from_decimal("0.05507");
  CHECK(v.overlaps(near("49.128")));
}

TEST_CASE("ab_from_cd closed forms") {
  XInterval t = e_pow(300);
  ApConversion c1 = ab_from_cd(XInterval::exact(0), XInterval::from_decimal("133.6"), t);
  CHECK_FALSE(c1.B_exceeds_theorem_range);
  // C = 0: A = (1 + 1e-80)/(log t)^{2/3}
  CHECK(c1.h.A.overlaps((1 + XInterval::from_decimal("1e-80")) / pow23(XInterval::exact(300))));
  ApConversion c2 = ab_from_cd(XInterval::exact(1), XInterval::from_decimal("400.3875"), t);
  CHECK(c2.B_exceeds_theorem_range);
  CHECK(c2.h.B.overlaps(2 * sqrt(3 * XInterval::from_decimal("400.3875")) / 9));
  // invert: B = 4.45 at D = (4.45*9/2)^2/3
  XInterval D = sqr(XInterval::from_decimal("4.45") * 9 / 2) / 3;
  CHECK(D.overlaps(near("133.666875")));
  ApConversion c3 = ab_from_cd(XInterval::exact(1), D, t);
  CHECK(c3.h.B.overlaps(XInterval::from_decimal("4.45")));
}

TEST_CASE("appendix B c and corollary B.2 arithmetic") {
  HypothesisAB h = ford_hypothesis();
  XInterval c = appendixB_c(h, XInterval::exact(11450));
  CHECK(c.certainly_le(XInterval::from_decimal("31.76") +
                       XInterval::from_decimal("59.9") / log(XInterval::exact(11450))));
  CHECK((c * pow23(h.B)).certainly_le(XInterval::exact(104)));
  // log3 t >= 23 kills the numerator: c = 31.76 exactly
  XInterval cfar = appendixB_c(h, exp(exp(XInterval::exact(23))));
  CHECK(cfar.overlaps(XInterval::from_decimal("31.76")));
  CHECK((XInterval::from_decimal("31.76") * pow23(h.B)).certainly_le(XInterval::exact(86)));
  CHECK_THROWS_AS(appendixB_c(h, XInterval::exact(9000)), DomainError);
}

TEST_CASE("best width at t=5: de la Vallee Poussin wins") {
  BestWidth bw = best_width(3, XInterval::exact(5));
  CHECK(bw.profile == "mccurley");
  // the t >= 10 profiles are all excluded; only the preliminary weak104
  // (valid from t >= 3) competes, and it loses by an order of magnitude
  CHECK(bw.candidates.size() == 2);
  for (const auto& [name, w] : bw.candidates)
    if (name != "mccurley") CHECK(w.certainly_lt(bw.width));
}

TEST_CASE("best width at t = e^3000 resolves by evaluation") {
  BestWidth bw = best_width(3, e_pow(3000));
  CHECK(bw.candidates.size() >= 3);
  CHECK(bw.width.certainly_gt(width_mccurley(3, e_pow(3000))));
  // winner must be one of the vk-profiles
  CHECK(bw.profile != "mccurley");
}

TEST_CASE("best width at huge q and t") {
  XInterval t = exp(XInterval::exact(1000000L));
  BestWidth bw = best_width(1000000000L, t);
  CHECK(!bw.candidates.empty());
  CHECK(bw.width.certainly_positive());
}

TEST_CASE("widths decrease along q and t grids") {
  const RegionProfile& p = profile("smallt");
  XInterval prev(current_prec());
  for (int i = 0; i < 10; ++i) {
    XInterval t = e_pow(3 + 40 * i);
    XInterval w = width(p, 3, t);
    if (i > 0) CHECK(w.certainly_lt(prev));
    prev = w;
  }
  long q = 3;
  for (int i = 0; i < 10; ++i) {
    XInterval w = width(p, q, XInterval::exact(100));
    if (i > 0) {
      bool dec = w.certainly_lt(prev);
      CHECK(dec);
    }
    prev = w;
    q *= 4;
  }
}
