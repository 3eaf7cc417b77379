#include <doctest.h>

#include <cstdio>
#include <random>

#include "zfr/trig_poly.hpp"

using namespace zfr;

TEST_CASE("paper coefficients are the printed exact decimals") {
  const CosinePolynomial& p = paper_poly();
  CHECK(p.b_rat(0) == Rat::from_string("10.01055"));
  CHECK(p.b_rat(1) == Rat::from_string("17.145"));
  CHECK(p.b_rat(2) == Rat::from_string("10.6825"));
  CHECK(p.b_rat(3) == Rat::from_string("4.5"));
  CHECK(p.b_rat(4) == Rat(1));
  CHECK(p.b_rat(5) == Rat::from_string("33.3275"));
  CHECK(p.b5 / p.b0 == Rat(666550) / Rat(200211));
}

TEST_CASE("(1,1) matches the symbolic expansion of 8(1+cos)^4") {
  // 8(1+c)^4 with c^2 = (1+cos 2t)/2, c^3 = (3 cos t + cos 3t)/4,
  // c^4 = (3 + 4 cos 2t + cos 4t)/8 gives b = (35, 56, 28, 8, 1)
  CosinePolynomial p = coefficients_from("1", "1");
  CHECK(p.b_rat(4) == Rat(1));
  CHECK(p.b_rat(3) == Rat(8));
  CHECK(p.b_rat(2) == Rat(28));
  CHECK(p.b_rat(1) == Rat(56));
  CHECK(p.b_rat(0) == Rat(35));
}

TEST_CASE("(0,0) degenerates to 8 cos^4") {
  CosinePolynomial p = coefficients_from("0", "0");
  CHECK(p.b_rat(3) == Rat(0));
  CHECK(p.b_rat(1) == Rat(0));
  CHECK(p.b_rat(2) == Rat(4));
  CHECK(p.b_rat(0) == Rat(3));
  XInterval v = eval_poly(p, XInterval(current_prec()));
  CHECK(v.contains(8));
}

TEST_CASE("coefficient form vanishes where the a2 factor vanishes") {
  const CosinePolynomial& p = paper_poly();
  // bracket theta with cos(theta) = -0.9 on [2, 3]
  XReal lo = XReal::from_long(2), hi = XReal::from_long(3);
  for (int i = 0; i < 300; ++i) {
    XReal mid(current_prec());
    mpfr_add(mid.get(), lo.get(), hi.get(), MPFR_RNDN);
    mpfr_div_2ui(mid.get(), mid.get(), 1, MPFR_RNDN);
    XInterval v = cos(XInterval::point(mid)) + XInterval::from_decimal("0.9");
    if (v.certainly_negative())
      hi = mid;
    else if (v.certainly_positive())
      lo = mid;
    else
      break;
  }
  XInterval theta(lo, hi);
  XInterval v = eval_poly(p, theta);
  CHECK(v.contains(0));
  CHECK(abs(v).hi().to_double() < 1e-10);
}

TEST_CASE("theta = 0 evaluates to the full product") {
  const CosinePolynomial& p = paper_poly();
  XInterval v = eval_poly(p, XInterval(current_prec()));
  XInterval expect = 8 * sqr(XInterval::from_decimal("1.225")) * sqr(XInterval::from_decimal("1.9"));
  CHECK(v.overlaps(expect));
}

TEST_CASE("property: coefficient and factored forms agree and are nonnegative") {
  std::mt19937 rng(20240809);
  std::uniform_real_distribution<double> U(-2.0, 2.0);
  std::uniform_real_distribution<double> T(0.0, 6.30);
  for (int trial = 0; trial < 1000; ++trial) {
    char a1[32], a2[32];
    std::snprintf(a1, sizeof a1, "%.4f", U(rng));
    std::snprintf(a2, sizeof a2, "%.4f", U(rng));
    CosinePolynomial p = coefficients_from(a1, a2);
    int thetas = trial < 10 ? 100 : 3;
    for (int j = 0; j < thetas; ++j) {
      char tb[32];
      std::snprintf(tb, sizeof tb, "%.4f", T(rng));
      XInterval theta = XInterval::from_decimal(tb);
      XInterval a = eval_poly(p, theta);
      XInterval b = eval_factored(p, theta);
      CHECK(a.overlaps(b));
      CHECK(a.hi().to_double() >= -a.width().to_double());
    }
  }
}

TEST_CASE("b5 = b1+b2+b3+b4 always") {
  CosinePolynomial p = coefficients_from("0.3", "-1.7");
  CHECK(p.b5 == p.b1 + p.b2 + p.b3 + p.b4);
}
