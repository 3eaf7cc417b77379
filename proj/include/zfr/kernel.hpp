#pragma once

#include "zfr/cinterval.hpp"
#include "zfr/quadrature.hpp"
#include "zfr/trig_poly.hpp"

namespace zfr {

// The Heath-Brown weight system: theta solves
//   sin^2(theta) = (b1/b0)(1 - theta cot theta),   0 < theta < pi/2,
// g is the truncated cosine bump, w = g*g its self-convolution, W the
// Laplace transform of w, and c0..c5 / H(R) the derived constants.
struct KernelSystem {
  CosinePolynomial poly;
  XInterval theta;
  XInterval tan_theta;
  XInterval support_g;  // theta / tan(theta)
  XInterval support_w;  // 2 theta / tan(theta)
  XInterval sec2;       // sec^2(theta)
  XInterval w0;         // w(0)
  XInterval W0;         // W(0) closed form
  XInterval Wm1;        // W(-1) closed form
  XInterval c0, c1, c2, c3;
  long R = 197;
  XInterval H_R;
  XInterval c4, c5;
};

// Root of sin^2 t = ratio * (1 - t cot t) in (0, pi/2).
XInterval solve_theta(const XInterval& ratio, mpfr_prec_t prec = current_prec());

KernelSystem build_kernel_system(const CosinePolynomial& poly, long R = 197,
                                 mpfr_prec_t prec = current_prec());

// H(R) and the c4/c5 pair for a non-default R.
XInterval kernel_H(const KernelSystem& ks, long R);

XInterval g_eval(const KernelSystem& ks, const XInterval& u);

// w by piecewise closed form (product-to-sum expansion of the convolution).
XInterval w_closed(const KernelSystem& ks, const XInterval& u);
// w by rigorous convolution quadrature.
XInterval w_quad(const KernelSystem& ks, const XInterval& u);
// Certified w: intersection of the two routes.
XInterval w_eval(const KernelSystem& ks, const XInterval& u);

// W(z) = int_0^{support_w} e^{-zu} w(u) du, by closed-form antiderivatives.
XInterval laplace_W(const KernelSystem& ks, const XInterval& z);
CInterval laplace_W(const KernelSystem& ks, const CInterval& z);
// Same integral by adaptive Taylor-model quadrature (independent route).
XInterval laplace_W_quad(const KernelSystem& ks, const XInterval& z,
                         const QuadOptions& opt = {});

// sup_{x >= 0} e^x w(x).
MaxResult sup_exp_w(const KernelSystem& ks, double tol = 1e-10);

// Test weight f(u) = lambda e^{lambda u} w(lambda u).
struct WeightedTest {
  XInterval lambda;
  XInterval f0;  // lambda * w(0)
  XInterval D;   // c4 * lambda * f0
};

WeightedTest make_weighted_test(const KernelSystem& ks, const XInterval& lambda);

XInterval f_eval(const KernelSystem& ks, const WeightedTest& wt, const XInterval& u);
CInterval F_eval(const KernelSystem& ks, const WeightedTest& wt, const CInterval& z);

// V_c(z) = c w(0) (cot z - 1/z) + W(z/c - 1).
CInterval V_c(const KernelSystem& ks, const XInterval& c, const CInterval& z);

struct VcCheck {
  bool proved = false;
  bool inconclusive = false;
  size_t boxes_checked = 0;
  size_t max_depth_seen = 0;
  std::string worst_box;
  XInterval min_re;  // enclosure of the minimum of Re V_c seen on the cover
  XInterval rhs;     // -c5 c^2 w(0)
};

// Verifies Re(V_c(z)) >= -c5 c^2 w(0) on {Re z >= c, |z| <= pi/2} by an
// adaptive box cover (initial grid x grid, bisection to depth_limit).
VcCheck check_Vc_lower(const KernelSystem& ks, const XInterval& c, size_t grid = 64,
                       size_t depth_limit = 20, mpfr_prec_t prec = current_prec());

}  // namespace zfr
