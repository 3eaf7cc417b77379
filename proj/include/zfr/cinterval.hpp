#pragma once

#include "zfr/interval.hpp"

namespace zfr {

// Rectangular complex enclosure re + i*im.
struct CInterval {
  XInterval re, im;

  explicit CInterval(mpfr_prec_t prec = current_prec()) : re(prec), im(prec) {}
  CInterval(XInterval r, XInterval i) : re(std::move(r)), im(std::move(i)) {}

  static CInterval exact(long r, long i = 0, mpfr_prec_t prec = current_prec()) {
    return CInterval(XInterval::exact(r, prec), XInterval::exact(i, prec));
  }

  CInterval conj() const { return CInterval(re, -im); }

  XInterval abs2() const { return sqr(re) + sqr(im); }

  std::string str(size_t digits = 20) const {
    return re.str(digits) + " + i*" + im.str(digits);
  }
};

inline CInterval operator+(const CInterval& a, const CInterval& b) {
  return {a.re + b.re, a.im + b.im};
}
inline CInterval operator-(const CInterval& a, const CInterval& b) {
  return {a.re - b.re, a.im - b.im};
}
inline CInterval operator-(const CInterval& a) { return {-a.re, -a.im}; }
inline CInterval operator*(const CInterval& a, const CInterval& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
inline CInterval operator*(const CInterval& a, const XInterval& c) {
  return {a.re * c, a.im * c};
}
inline CInterval operator*(const XInterval& c, const CInterval& a) { return a * c; }
inline CInterval operator/(const CInterval& a, const CInterval& b) {
  XInterval d = b.abs2();
  if (d.contains_zero()) throw DomainError("complex division by enclosure containing 0");
  return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}
inline CInterval operator/(const CInterval& a, const XInterval& c) {
  return {a.re / c, a.im / c};
}

inline CInterval exp(const CInterval& z) {
  XInterval m = exp(z.re);
  return {m * cos(z.im), m * sin(z.im)};
}

inline CInterval sin(const CInterval& z) {
  return {sin(z.re) * cosh(z.im), cos(z.re) * sinh(z.im)};
}

inline CInterval cos(const CInterval& z) {
  return {cos(z.re) * cosh(z.im), -(sin(z.re) * sinh(z.im))};
}

inline CInterval cot(const CInterval& z) {
  CInterval s = sin(z);
  return cos(z) / s;
}

// z^(-s) = exp(-s * log z) for a positive real z enclosure.
inline CInterval pow_negs(const XInterval& zpos, const CInterval& s) {
  XInterval L = log(zpos);
  XInterval m = exp(-(s.re * L));
  XInterval a = s.im * L;
  return {m * cos(a), -(m * sin(a))};
}

}  // namespace zfr
