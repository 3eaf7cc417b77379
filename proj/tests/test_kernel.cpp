#include <doctest.h>

#include "zfr/kernel.hpp"
#include "zfr/rational.hpp"

using namespace zfr;

namespace {

const KernelSystem& ks() {
  static const KernelSystem k = build_kernel_system(paper_poly(), 197);
  return k;
}

XInterval near(const std::string& digits) {
  Rat p = Rat::from_string(digits);
  auto dot = digits.find('.');
  size_t frac = dot == std::string::npos ? 0 : digits.size() - dot - 1;
  Rat ulp(1);
  for (size_t i = 0; i < frac; ++i) ulp = ulp / Rat(10);
  return XInterval((p - ulp).to_interval().lo(), (p + ulp).to_interval().hi());
}

}  // namespace

TEST_CASE("theta root matches the printed 21 digits") {
  CHECK(ks().theta.overlaps(near("1.152214629976363048877")));
  CHECK(ks().theta.width().to_double() < 1e-30);
  // ratio -> 0+ pushes the root to 0
  XInterval tiny = solve_theta(XInterval::from_decimal("1e-6"));
  CHECK(tiny.hi().to_double() < 0.01);
  // identical inputs reproduce the same enclosure
  XInterval again = solve_theta(paper_poly().b(1) / paper_poly().b(0));
  CHECK(again.overlaps(ks().theta));
}

TEST_CASE("printed kernel constants") {
  CHECK(ks().w0.overlaps(near("6.82602968445295450905")));
  CHECK(ks().c0.overlaps(near("16.2983216223932350562")));
  CHECK(ks().c1.overlaps(near("19.93520059262441078574")));
  CHECK(ks().c2.overlaps(near("9.4813169452950521682")));
  CHECK(ks().c3.overlaps(near("3.945405755634895592")));
  CHECK(ks().H_R.overlaps(near("67.33067")));
  CHECK(ks().c4.certainly_le(XInterval::from_decimal("1.055656")));
  CHECK(ks().c5.overlaps(near("0.42578392")));
}

TEST_CASE("g vanishes at the support boundary and matches u=0 closed form") {
  XInterval at_boundary = g_eval(ks(), ks().support_g);
  CHECK(at_boundary.contains(0));
  CHECK(abs(at_boundary).hi().to_double() < 1e-40);
  XInterval at0 = g_eval(ks(), XInterval(current_prec()));
  XInterval expect = (1 - cos(ks().theta)) * ks().sec2;
  CHECK(at0.overlaps(expect));
  CHECK(g_eval(ks(), 2 * ks().support_g).contains(0));
  // interior point re-evaluated at doubled precision nests
  KernelSystem hi = build_kernel_system(paper_poly(), 197, 512);
  XInterval u = ks().support_g / 2;
  CHECK(g_eval(ks(), u).contains(g_eval(hi, u)));
}

TEST_CASE("w at 0 matches the printed value via both routes") {
  XInterval closed = w_closed(ks(), XInterval(current_prec()));
  CHECK(closed.overlaps(near("6.82602968445295450905")));
  XInterval quad = w_quad(ks(), XInterval(current_prec()));
  CHECK(quad.overlaps(closed));
  CHECK(quad.width().to_double() < 1e-18);
  CHECK(w_eval(ks(), XInterval(current_prec())).width().to_double() < 1e-18);
}

TEST_CASE("w vanishes outside and is symmetric") {
  CHECK(w_eval(ks(), ks().support_w).contains(0));
  CHECK(w_eval(ks(), ks().support_w * 2).contains(0));
  XInterval half = XInterval::from_decimal("0.5");
  CHECK(w_eval(ks(), half).overlaps(w_eval(ks(), -half)));
  CHECK(w_closed(ks(), half).overlaps(near("2.392116722467046")));
}

TEST_CASE("w closed form vs convolution quadrature on 50 points") {
  for (int i = 0; i <= 49; ++i) {
    XInterval u = ks().support_w * i / 49;
    XInterval a = w_closed(ks(), u);
    XInterval b = w_quad(ks(), u);
    CHECK(a.overlaps(b));
  }
}

TEST_CASE("laplace closed forms at 0 and -1") {
  XInterval W0 = laplace_W(ks(), XInterval(current_prec()));
  CHECK(W0.overlaps(ks().W0));
  XInterval Wm1 = laplace_W(ks(), -XInterval::exact(1));
  CHECK(Wm1.overlaps(ks().Wm1));
  CHECK(ks().W0.overlaps(near("2.875908679911811")));
  CHECK(ks().Wm1.overlaps(near("3.797794664584787")));
  // quadrature route agrees
  CHECK(laplace_W_quad(ks(), XInterval(current_prec())).overlaps(ks().W0));
  CHECK(laplace_W_quad(ks(), -XInterval::exact(1)).overlaps(ks().Wm1));
  // generic value against a frozen reference
  CHECK(laplace_W(ks(), XInterval::exact(10)).overlaps(near("0.6352550922165674")));
  CHECK(laplace_W(ks(), XInterval::from_decimal("0.5")).overlaps(near("2.536160643637803")));
  CHECK(laplace_W_quad(ks(), XInterval::exact(10)).overlaps(near("0.6352550922165674")));
}

TEST_CASE("W positive and below W0 at z = 10") {
  XInterval W10 = laplace_W(ks(), XInterval::exact(10));
  CHECK(W10.certainly_positive());
  CHECK(W10.certainly_le(ks().W0));
}

TEST_CASE("complex laplace agrees with the real path on the real axis") {
  CInterval z(XInterval::from_decimal("1.5"), XInterval(current_prec()));
  CInterval W = laplace_W(ks(), z);
  CHECK(W.re.overlaps(laplace_W(ks(), XInterval::from_decimal("1.5"))));
  CHECK(W.im.contains(0));
  // and against quadrature at a complex point via independent assembly
  CInterval zc(XInterval::from_decimal("0.7"), XInterval::from_decimal("2.1"));
  CInterval Wc = laplace_W(ks(), zc);
  // |W(z)| <= W(Re z)
  XInterval mag = sqrt(Wc.abs2());
  CHECK(!mag.certainly_gt(laplace_W(ks(), XInterval::from_decimal("0.7"))));
}

TEST_CASE("sup of e^x w(x)") {
  MaxResult mr = sup_exp_w(ks(), 1e-7);
  CHECK(mr.value.hi() <= XReal::from_decimal("7.23", MPFR_RNDN));
  CHECK(mr.value.lo() >= ks().w0.lo());  // x = 0 is feasible
  // stationary-point oracle: max 7.2273969575163380137 at x = 0.117720699325
  CHECK(mr.value.overlaps(near("7.227396957516338")));
  CHECK(mr.argmax.overlaps(near("0.11772069932501")));
}

TEST_CASE("weighted test and F = W(z/lambda - 1)") {
  XInterval lam = XInterval::from_decimal("0.01");
  WeightedTest wt = make_weighted_test(ks(), lam);
  CHECK(wt.f0.overlaps(near("0.0682602968445295")));
  CHECK(wt.D.overlaps(ks().c4 * lam * wt.f0));
  // F(0) = W(-1)
  CInterval F0 = F_eval(ks(), wt, CInterval(XInterval(current_prec()), XInterval(current_prec())));
  CHECK(F0.re.overlaps(ks().Wm1));
  CHECK(F0.im.contains(0));
  // F(lambda) = W(0)
  CInterval Fl = F_eval(ks(), wt, CInterval(lam, XInterval(current_prec())));
  CHECK(Fl.re.overlaps(ks().W0));
  // f(0) = lambda w(0)
  CHECK(f_eval(ks(), wt, XInterval(current_prec())).overlaps(wt.f0));
}

TEST_CASE("V_c at real z = c is positive for c = 0.005") {
  XInterval c = XInterval::from_decimal("0.005");
  CInterval v = V_c(ks(), c, CInterval(c, XInterval(current_prec())));
  CHECK(v.re.certainly_positive());
  // cot c - 1/c ~ -c/3
  CInterval cz = cot(CInterval(c, XInterval(current_prec()))) -
                 CInterval::exact(1, 0) / CInterval(c, XInterval(current_prec()));
  CHECK(cz.re.overlaps(-c / 3 - pow_si(c, 3) / 45 - XInterval(XReal::from_long(0), XReal::from_decimal("1e-6", MPFR_RNDU))));
}

TEST_CASE("V_c lower bound single point at the boundary") {
  XInterval c = XInterval::from_decimal("0.001");
  CInterval z(XInterval(current_prec()) + c, const_pi() / 2 - XInterval::from_decimal("0.01"));
  CInterval v = V_c(ks(), c, z);
  XInterval rhs = -(ks().c5 * sqr(c) * ks().w0);
  CHECK(v.re.certainly_ge(rhs));
}
