#include <doctest.h>

#include "zfr/rational.hpp"
#include "zfr/zero_counts.hpp"

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

XInterval e_pow(long k) { return exp(XInterval::exact(k)); }

}  // namespace

TEST_CASE("zerocount constants at the corollary's eta") {
  ZeroCountConstants zc = zerocount_constants(XInterval::from_decimal("0.00019"));
  CHECK(zc.C1.certainly_le(XInterval::from_decimal("0.2297")));
  CHECK(zc.C2.certainly_le(XInterval::from_decimal("24.77")));
  CHECK(zc.C1.overlaps(near("0.22969929971")));
  CHECK(zc.C2.overlaps(near("24.7698559898029")));
}

TEST_CASE("C1 at eta = 1/2 is 1/(pi log 2)") {
  ZeroCountConstants zc = zerocount_constants(XInterval::from_decimal("0.5"));
  XInterval expect = 1 / (const_pi() * const_log2());
  CHECK(zc.C1.overlaps(expect));
}

TEST_CASE("constants recomputed at 1024 bits nest inside the 256-bit ones") {
  XInterval eta = XInterval::from_decimal("0.001", 1030);
  ZeroCountConstants lo = zerocount_constants(XInterval::from_decimal("0.001", 260), 256);
  ZeroCountConstants hi = zerocount_constants(eta, 1024);
  CHECK(lo.C1.contains(hi.C1));
  CHECK(lo.C2.contains(hi.C2));
}

TEST_CASE("zerocount eta domain") {
  CHECK_THROWS_AS(zerocount_constants(XInterval::exact(0)), DomainError);
  CHECK_THROWS_AS(zerocount_constants(XInterval::exact(1)), DomainError);
}

TEST_CASE("lemma 4.2 bound against hand arithmetic") {
  CountBoundInputs in;
  in.t = e_pow(2000);
  in.R_or_v = XInterval::from_decimal("0.25");
  in.q = XInterval::exact(3);
  in.A = XInterval::from_decimal("76.2");
  in.B = XInterval::from_decimal("4.45");
  XInterval v = lemma42_bound(in);
  // oracle: 1.3478*0.125*4.45*2000 + 0.49
  //         + (log 77.2 + log 4 + 1.8579*0.25*log 3 + (2/3) log 2000)/1.879
  XInterval oracle = XInterval::from_decimal("1.3478") * XInterval::from_decimal("0.125") *
                         XInterval::from_decimal("4.45") * 2000 +
                     XInterval::from_decimal("0.49") +
                     (log(XInterval::from_decimal("77.2")) + log(XInterval::exact(4)) +
                      XInterval::from_decimal("1.8579") / 4 * log(XInterval::exact(3)) +
                      2 * log(XInterval::exact(2000)) / 3) /
                         XInterval::from_decimal("1.879");
  CHECK(v.overlaps(oracle));
  CHECK(v.overlaps(near("1505.94")));
  // doubling q adds exactly 1.8579 R log2 / 1.879
  in.q = XInterval::exact(6);
  XInterval v2 = lemma42_bound(in);
  XInterval delta = XInterval::from_decimal("1.8579") / 4 * const_log2() /
                    XInterval::from_decimal("1.879");
  CHECK((v2 - v).overlaps(delta));
}

TEST_CASE("lemma 4.2 hypothesis enforcement") {
  CountBoundInputs in;
  in.t = e_pow(2000);
  in.R_or_v = XInterval::from_decimal("0.3");  // above 1/4
  in.q = XInterval::exact(3);
  in.A = XInterval::from_decimal("76.2");
  in.B = XInterval::from_decimal("4.45");
  CHECK_THROWS_AS(lemma42_bound(in), DomainError);
  in.R_or_v = XInterval::from_decimal("0.25");
  in.t = e_pow(1000);  // below e^1938
  CHECK_THROWS_AS(lemma42_bound(in), DomainError);
  // R at its lower limit: still finite and positive
  in.t = e_pow(2000);
  in.R_or_v = XInterval::from_decimal("1.04") / pow23(log(e_pow(2000) / 100)) +
              XInterval::from_decimal("1e-9");
  XInterval v = lemma42_bound(in);
  CHECK(v.certainly_positive());
  CHECK(v.is_finite());
}

TEST_CASE("lemma 4.3 bound term-by-term") {
  CountBoundInputs in;
  in.t = e_pow(2000);
  in.R_or_v = XInterval::from_decimal("0.25");
  in.q = XInterval::exact(3);
  in.A = XInterval::from_decimal("76.2");
  in.B = XInterval::from_decimal("4.45");
  XInterval zero(current_prec());
  XInterval v0 = lemma43_bound(in, zero);
  // independent summation of the displayed terms
  XInterval lt = XInterval::exact(2000);
  XInterval oracle =
      (XInterval::from_decimal("8.14467") +
       XInterval::from_decimal("5.3912") * XInterval::from_decimal("4.45") * (2 - 2)) * lt -
      XInterval::from_decimal("8.5") * log(XInterval::from_decimal("77.2")) +
      XInterval::from_decimal("518.7") +
      ((log(XInterval::from_decimal("77.2")) - log(XInterval::from_decimal("0.25")) +
        2 * log(lt) / 3) /
           XInterval::from_decimal("1.879") +
       XInterval::from_decimal("0.224")) *
          16 +
      log(XInterval::exact(3)) *
          (XInterval::from_decimal("1.978") * 4 + XInterval::from_decimal("0.23267"));
  CHECK(v0.overlaps(oracle));
  // N(t,v) > 0 lowers the bound by exactly N/v^2
  XInterval v3 = lemma43_bound(in, XInterval::exact(3));
  CHECK((v0 - v3).overlaps(XInterval::exact(3) * 16));
  // coefficient of log q at v = 1/4 equals 1.978*4 + 0.23267
  in.q = XInterval::exact(6);
  XInterval vq = lemma43_bound(in, zero);
  XInterval coeff = (vq - v0) / (log(XInterval::exact(6)) - log(XInterval::exact(3)));
  CHECK(coeff.overlaps(XInterval::from_decimal("1.978") * 4 + XInterval::from_decimal("0.23267")));
}

TEST_CASE("log-derivative line bound") {
  XInterval v = llprime_line_bound(XInterval(current_prec()), XInterval::exact(3));
  CHECK(v.overlaps(XInterval::from_decimal("8.21") + log(XInterval::exact(3))));
  XInterval v2 = llprime_line_bound(XInterval::exact(2), XInterval::exact(10));
  CHECK(v2.overlaps(XInterval::from_decimal("8.21") + log(XInterval::exact(10)) + const_log2() / 2));
  CHECK_THROWS_AS(llprime_line_bound(XInterval::exact(0), XInterval::exact(2)), DomainError);
}

TEST_CASE("U kernel") {
  XInterval at0 = U_kernel(XInterval(current_prec()));
  CHECK(at0.contains(2));
  XInterval at2 = U_kernel(XInterval::exact(2));
  CHECK(at2.overlaps(2 * const_pi() / sinh(const_pi())));
  CHECK(at2.overlaps(near("0.54405811")));
  // even
  CHECK(U_kernel(-XInterval::exact(2)).overlaps(at2));
  // global bounds on a sign-straddling interval
  XInterval wide = U_kernel(XInterval(XReal::from_long(-1), XReal::from_long(5)));
  CHECK(wide.lo().sign() >= 0);
  CHECK(wide.hi() <= XReal::from_decimal("2.0000001", MPFR_RNDN));
}
