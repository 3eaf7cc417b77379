#include <doctest.h>

#include "zfr/rational.hpp"
#include "zfr/zeta.hpp"

using namespace zfr;

namespace {

// Reference enclosure from a truncated decimal string: the digits are
// correct as printed, so the value lies within one ulp of the print.
XInterval near(const std::string& digits) {
  Rat p = Rat::from_string(digits);
  auto dot = digits.find('.');
  size_t frac = dot == std::string::npos ? 0 : digits.size() - dot - 1;
  Rat ulp(1);
  for (size_t i = 0; i < frac; ++i) ulp = ulp / Rat(10);
  Rat lo = p - ulp, hi = p + ulp;
  return XInterval(lo.to_interval().lo(), hi.to_interval().hi());
}

// Direct-summation oracle with an integral tail: independent of the
// Euler-Maclaurin path.
XInterval zeta_direct_oracle(long num, long den, size_t N, mpfr_prec_t prec) {
  XInterval s = XInterval::exact(num, prec) / XInterval::exact(den, prec);
  XInterval sum(prec);
  for (size_t k = 1; k <= N; ++k)
    sum = sum + exp(-(s * log(XInterval::exact(static_cast<long>(k), prec))));
  // integral bracket: int_{N+1}^inf x^-s <= tail <= int_N^inf x^-s
  XInterval lo_tail = exp(-((s - 1) * log(XInterval::exact(static_cast<long>(N) + 1, prec)))) / (s - 1);
  XInterval hi_tail = exp(-((s - 1) * log(XInterval::exact(static_cast<long>(N), prec)))) / (s - 1);
  return XInterval((sum + lo_tail).lo(), (sum + hi_tail).hi());
}

}  // namespace

TEST_CASE("zeta(2) encloses pi^2/6") {
  XInterval z = zeta_real(XInterval::exact(2));
  XInterval target = sqr(const_pi()) / 6;
  CHECK(z.overlaps(target));
  CHECK(z.width().to_double() < 1e-60);
}

TEST_CASE("zeta near 1 matches the Euler-Maclaurin pole expansion") {
  XInterval z = zeta_real(XInterval::from_decimal("1.00019"));
  // within 0.01 of 1/0.00019 + gamma
  XInterval approx = 1 / XInterval::from_decimal("0.00019") + const_euler();
  CHECK(abs(z - approx).hi().to_double() < 0.01);
  // frozen oracle digits (Stieltjes expansion): 5263.7351242...
  CHECK(z.overlaps(near("5263.73512423658")));
}

TEST_CASE("zeta satisfies the Lemma bound 0.6 + 1/(sigma-1) at 1.05") {
  XInterval z = zeta_real(XInterval::from_decimal("1.05"));
  XInterval bound = XInterval::from_decimal("0.6") + 1 / XInterval::from_decimal("0.05");
  CHECK(z.certainly_le(bound));
}

TEST_CASE("zeta_real agrees with direct summation oracle") {
  // sigma in {1.1, 1.5, 2, 3}
  const long nums[] = {11, 3, 2, 3};
  const long dens[] = {10, 2, 1, 1};
  for (int i = 0; i < 4; ++i) {
    XInterval em = zeta_real(XInterval::exact(nums[i]) / XInterval::exact(dens[i]));
    XInterval oracle = zeta_direct_oracle(nums[i], dens[i], 4000, current_prec());
    CHECK(em.overlaps(oracle));
  }
}

TEST_CASE("zeta_real postcondition width") {
  // binary-exact inputs so the pole does not amplify the input enclosure
  for (long num : {65L, 96L, 128L, 384L}) {  // sigma = num/64
    XInterval v = zeta_real(XInterval::exact(num) / XInterval::exact(64));
    XReal budget(current_prec());
    // width <= 2^(4-prec) * zeta(sigma)
    mpfr_mul_2si(budget.get(), v.hi().get(), 4 - static_cast<long>(current_prec()), MPFR_RNDU);
    CHECK(v.width() <= budget);
  }
  CHECK_THROWS_AS(zeta_real(XInterval::exact(1)), DomainError);
}

TEST_CASE("zeta prime and the log-derivative at 3/2") {
  XInterval ld = neg_zeta_logderiv(XInterval::from_decimal("1.5"));
  CHECK(ld.overlaps(near("1.50523535579")));
  CHECK(ld.certainly_le(XInterval::from_decimal("1.505236")));
}

TEST_CASE("hurwitz zeta: u = 1 equals ordinary zeta on the real line") {
  CInterval z = hurwitz_zeta(XInterval::exact(2), XInterval::exact(0), XInterval::exact(1));
  CHECK(z.re.overlaps(zeta_real(XInterval::exact(2))));
  CHECK(z.im.contains(0));
}

TEST_CASE("hurwitz zeta: zeta(s, 1/2) = (2^s - 1) zeta(s)") {
  CInterval z = hurwitz_zeta(XInterval::exact(2), XInterval::exact(0),
                             XInterval::exact(1) / XInterval::exact(2));
  XInterval target = sqr(const_pi()) / 2;  // (2^2-1) zeta(2) = pi^2/2
  CHECK(z.re.overlaps(target));
  CHECK(z.im.contains(0));
}

TEST_CASE("hurwitz zeta at complex argument matches reference digits") {
  CInterval z = hurwitz_zeta(XInterval::from_decimal("1.5"), XInterval::exact(30),
                             XInterval::exact(1));
  CHECK(z.re.overlaps(near("0.6908557315228128")));
  CHECK(z.im.overlaps(near("-0.3671427473747212")));
}

TEST_CASE("independent code paths overlap: zeta via u=1 and via u=1/2") {
  // 10 sampled (sigma, t)
  for (int i = 0; i < 10; ++i) {
    XInterval sigma = XInterval::exact(11 + i) / XInterval::exact(10);  // 1.1 .. 2.0
    XInterval t = XInterval::exact(3 + 4 * i);
    CInterval direct = hurwitz_zeta(sigma, t, XInterval::exact(1));
    CInterval shifted = hurwitz_zeta(sigma, t, XInterval::exact(1) / XInterval::exact(2));
    // zeta(s) = zeta(s, 1/2) / (2^s - 1)
    CInterval s(sigma, t);
    XInterval l2 = log(XInterval::exact(2));
    XInterval m = exp(sigma * l2);
    CInterval two_s(m * cos(t * l2), m * sin(t * l2));
    CInterval alt = shifted / (two_s - CInterval::exact(1, 0));
    CHECK(direct.re.overlaps(alt.re));
    CHECK(direct.im.overlaps(alt.im));
  }
}

TEST_CASE("hurwitz zeta spot-checks the eq 1.2 hypothesis bound") {
  // sigma = 0.9, t = 1e5, u = 0.3: |zeta - u^{-s}| <= 76.2 t^{4.45 * 0.1^{1.5}} (log t)^{2/3}
  XInterval sigma = XInterval::from_decimal("0.9");
  XInterval t = XInterval::exact(100000L);
  XInterval u = XInterval::from_decimal("0.3");
  CInterval z = hurwitz_zeta(sigma, t, u);
  CHECK(z.re.overlaps(near("1.29753558198243096431954")));
  CHECK(z.im.overlaps(near("-2.44218606159272878583191")));
  CInterval us = pow_negs(u, CInterval(sigma, t));
  XInterval dev2 = (z.re - us.re) * (z.re - us.re) + (z.im - us.im) * (z.im - us.im);
  XInterval bound = XInterval::from_decimal("76.2") *
                        exp(XInterval::from_decimal("4.45") *
                            pow(XInterval::from_decimal("0.1"), XInterval::from_decimal("1.5")) *
                            log(t)) *
                        pow23(log(t));
  CHECK(sqrt(dev2).certainly_le(bound));
}

TEST_CASE("hurwitz zeta range errors") {
  CHECK_THROWS_AS(hurwitz_zeta(XInterval::exact(1) / 2, XInterval::exact(100000000L),
                               XInterval::exact(1)),
                  UnsupportedRangeError);
  CHECK_THROWS_AS(hurwitz_zeta(XInterval::exact(2), XInterval::exact(3), XInterval::exact(2)),
                  DomainError);
}

TEST_CASE("bernoulli table") {
  const auto& B = bernoulli_table(12);
  CHECK(B[0] == Rat(1));
  CHECK(B[1] == Rat(-1, 2));
  CHECK(B[2] == Rat(1, 6));
  CHECK(B[12] == Rat(-691, 2730));
}
