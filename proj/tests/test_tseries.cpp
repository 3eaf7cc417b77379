#include <doctest.h>

#include <cmath>
#include <cstdio>

#include "zfr/tseries.hpp"

using namespace zfr;

namespace {

TSeries seed(double mid, double half, size_t order = 10) {
  char mb[32], hb[32];
  std::snprintf(mb, sizeof mb, "%.6f", mid);
  std::snprintf(hb, sizeof hb, "%.6f", half);
  return TSeries::var(XInterval::from_decimal(mb), XReal::from_decimal(hb, MPFR_RNDU), order);
}

}  // namespace

TEST_CASE("polynomial algebra on models") {
  TSeries x = seed(0.5, 0.25);
  TSeries y = x * x - x + XInterval::exact(1);
  // x^2 - x + 1 over [0.25, 0.75] has range [0.75, 0.8125]
  XInterval b = y.bound();
  CHECK(b.lo().to_double() <= 0.75);
  CHECK(b.hi().to_double() >= 0.8125);
  CHECK(b.hi().to_double() < 0.85);
}

TEST_CASE("exp model encloses endpoint values tightly") {
  TSeries x = seed(1.0, 0.5, 14);
  TSeries e = exp(x);
  XInterval b = e.bound();
  CHECK(b.lo().to_double() < std::exp(0.5) + 1e-12);
  CHECK(b.hi().to_double() > std::exp(1.5) - 1e-12);
  CHECK(b.hi().to_double() < std::exp(1.5) + 1e-6);
}

TEST_CASE("sin and cos models satisfy the Pythagorean identity") {
  TSeries x = seed(0.9, 0.3, 12);
  TSeries s = sin(x), c = cos(x);
  XInterval unit = (s * s + c * c).bound();
  CHECK(unit.contains(1));
  CHECK(unit.width().to_double() < 1e-6);
}

TEST_CASE("integral of the identity is exact over the panel") {
  TSeries x = seed(2.0, 0.5, 6);
  XInterval v = x.integral();  // integral over [1.5, 2.5] of x dx = 2
  CHECK(v.contains(2));
  CHECK(v.width().to_double() < 1e-30);
}

TEST_CASE("model remainder shrinks with order") {
  double w8, w16;
  {
    TSeries x = seed(0.3, 0.2, 8);
    w8 = exp(sin(x)).bound().width().to_double();
  }
  {
    TSeries x = seed(0.3, 0.2, 16);
    w16 = exp(sin(x)).bound().width().to_double();
  }
  CHECK(w16 <= w8);
}
