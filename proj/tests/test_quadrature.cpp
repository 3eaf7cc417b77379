#include <doctest.h>

#include <cmath>

#include "zfr/quadrature.hpp"

using namespace zfr;

TEST_CASE("integrate x over [0,1] encloses 1/2") {
  SeriesFn f = [](const TSeries& x) { return x; };
  XInterval v = integrate(f, XInterval::exact(0), XInterval::exact(1));
  CHECK(v.contains(XReal::from_decimal("0.5", MPFR_RNDN)));
  CHECK(v.width().to_double() < 1e-18);
}

TEST_CASE("integrate exp over [0,1] encloses e-1") {
  SeriesFn f = [](const TSeries& x) { return exp(x); };
  XInterval v = integrate(f, XInterval::exact(0), XInterval::exact(1));
  XInterval expect = exp(XInterval::exact(1)) - 1;
  CHECK(v.overlaps(expect));
  CHECK(v.width().to_double() < 1e-18);
}

TEST_CASE("sech^2 over R truncated with exponential tail encloses 2") {
  const mpfr_prec_t prec = current_prec();
  XInterval M = XInterval::exact(12);
  XInterval half = XInterval::exact(1, prec) / 2;
  SeriesFn f = [half](const TSeries& u) {
    TSeries ch = (exp(u) + exp(-u)) * half;
    return inv(ch * ch);
  };
  QuadOptions opt;
  opt.order = 12;
  XInterval half_line = integrate(f, XInterval::exact(0), M, opt);
  // tail beyond M: sech^2 u <= 4 e^{-2u}, so int_M^inf <= 2 e^{-2M}
  XInterval tail_hi = 2 * exp(-2 * M);
  XInterval full = 2 * half_line + XInterval(XReal::from_long(0, prec), (2 * tail_hi).hi());
  CHECK(full.contains(2));
  CHECK(full.width().to_double() < 1e-9);
}

TEST_CASE("find_root brackets simple roots") {
  IntervalFn lin = [](const XInterval& x) { return x - 1; };
  XInterval r = find_root(lin, XInterval::exact(0), XInterval::exact(2));
  CHECK(r.contains(1));
  IntervalFn c = [](const XInterval& x) { return cos(x); };
  XInterval half_pi = find_root(c, XInterval::exact(1), XInterval::exact(2));
  CHECK(half_pi.contains((const_pi() / 2).mid()));
  CHECK(half_pi.width().to_double() < 1e-60);
}

TEST_CASE("find_root requires a certified sign change") {
  IntervalFn f = [](const XInterval& x) { return sqr(x) + 1; };
  CHECK_THROWS_AS(find_root(f, XInterval::exact(0), XInterval::exact(2)), BracketError);
}

TEST_CASE("maximize_1d encloses the supremum") {
  IntervalFn f = [](const XInterval& x) { return x * (2 - x); };  // peak 1 at x=1
  MaxOptions opt;
  opt.tol = 1e-10;
  MaxResult r = maximize_1d(f, XInterval::exact(0), XInterval::exact(2), opt);
  CHECK(r.value.contains(1));
  CHECK(r.value.width().to_double() < 1e-8);
  CHECK(r.argmax.contains(1));
}

TEST_CASE("integrate rejects reversed bounds") {
  SeriesFn f = [](const TSeries& x) { return x; };
  CHECK_THROWS_AS(integrate(f, XInterval::exact(2), XInterval::exact(1)), DomainError);
}
