#include "zfr/trig_poly.hpp"

namespace zfr {

Rat CosinePolynomial::b_rat(int j) const {
  switch (j) {
    case 0: return b0;
    case 1: return b1;
    case 2: return b2;
    case 3: return b3;
    case 4: return b4;
    case 5: return b5;
    default: throw DomainError("coefficient index out of range");
  }
}

XInterval CosinePolynomial::b(int j, mpfr_prec_t prec) const {
  return b_rat(j).to_interval(prec);
}

CosinePolynomial coefficients_from(const Rat& a1, const Rat& a2) {
  CosinePolynomial p;
  p.a1 = a1;
  p.a2 = a2;
  Rat one(1), four(4), twelve(12), sixteen(16), eight(8);
  Rat a12 = a1 * a2;
  p.b4 = one;
  p.b3 = four * (a1 + a2);
  p.b2 = four * (one + a1 * a1 + a2 * a2 + four * a12);
  p.b1 = (a1 + a2) * (twelve + sixteen * a12);
  p.b0 = p.b2 - one + eight * a12 * a12;
  p.b5 = p.b1 + p.b2 + p.b3 + p.b4;
  return p;
}

CosinePolynomial coefficients_from(const std::string& a1, const std::string& a2) {
  return coefficients_from(Rat::from_string(a1), Rat::from_string(a2));
}

XInterval eval_poly(const CosinePolynomial& p, const XInterval& theta, mpfr_prec_t prec) {
  XInterval acc = p.b(0, prec);
  for (int j = 1; j <= 4; ++j)
    acc = acc + p.b(j, prec) * cos(XInterval::exact(j, prec) * theta);
  return acc;
}

XInterval eval_factored(const CosinePolynomial& p, const XInterval& theta, mpfr_prec_t prec) {
  XInterval c = cos(theta);
  XInterval f1 = p.a1.to_interval(prec) + c;
  XInterval f2 = p.a2.to_interval(prec) + c;
  return 8 * sqr(f1) * sqr(f2);
}

const CosinePolynomial& paper_poly() {
  static const CosinePolynomial p = coefficients_from("0.225", "0.9");
  return p;
}

}  // namespace zfr
