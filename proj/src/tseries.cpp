#include "zfr/tseries.hpp"

namespace zfr {

TSeries::TSeries(size_t order, XReal halfwidth, mpfr_prec_t prec)
    : coeff_(order + 1, XInterval(prec)), rem_(prec), h_(std::move(halfwidth)), prec_(prec) {
  if (h_.sign() < 0) throw DomainError("negative panel halfwidth");
}

TSeries TSeries::var(const XInterval& mid, const XReal& halfwidth, size_t order,
                     mpfr_prec_t prec) {
  if (order < 1) throw DomainError("TSeries order must be >= 1");
  TSeries t(order, halfwidth, prec);
  t.coeff_[0] = mid;
  t.coeff_[1] = XInterval::exact(1, prec);
  return t;
}

TSeries TSeries::constant(const XInterval& c, const XReal& halfwidth, size_t order) {
  TSeries t(order, halfwidth, c.prec());
  t.coeff_[0] = c;
  return t;
}

XInterval TSeries::pow_h(size_t j) const {
  XInterval h = XInterval::point(h_);
  XInterval r = XInterval::exact(1, prec_);
  for (size_t i = 0; i < j; ++i) r = r * h;
  return XInterval(-r.hi(), r.hi());
}

XInterval TSeries::bound() const {
  XInterval b = coeff_[0] + rem_;
  XInterval h = XInterval::point(h_);
  XInterval acc = h;
  for (size_t j = 1; j < coeff_.size(); ++j) {
    b = b + coeff_[j] * XInterval(-acc.hi(), acc.hi());
    acc = acc * h;
  }
  return b;
}

XInterval TSeries::tail_bound() const {
  XInterval b = rem_;
  XInterval h = XInterval::point(h_);
  XInterval acc = h;
  for (size_t j = 1; j < coeff_.size(); ++j) {
    b = b + coeff_[j] * XInterval(-acc.hi(), acc.hi());
    acc = acc * h;
  }
  return b;
}

XInterval TSeries::integral() const {
  // odd powers integrate to zero over [-h, h]
  XInterval h = XInterval::point(h_);
  XInterval two_h = 2 * h;
  XInterval total = rem_ * two_h;
  XInterval hpow = h;  // h^(j+1) built incrementally
  for (size_t j = 0; j < coeff_.size(); ++j) {
    if (j % 2 == 0) total = total + coeff_[j] * (2 * hpow / static_cast<long>(j + 1));
    hpow = hpow * h;
  }
  return total;
}

TSeries& TSeries::operator+=(const TSeries& o) {
  for (size_t j = 0; j < coeff_.size(); ++j) coeff_[j] = coeff_[j] + o.coeff_[j];
  rem_ = rem_ + o.rem_;
  return *this;
}

TSeries& TSeries::operator-=(const TSeries& o) {
  for (size_t j = 0; j < coeff_.size(); ++j) coeff_[j] = coeff_[j] - o.coeff_[j];
  rem_ = rem_ - o.rem_;
  return *this;
}

TSeries operator*(const TSeries& a, const TSeries& b) {
  TSeries r(a.order(), a.h_, a.prec_);
  const size_t K = a.order();
  // |x|^n envelopes for the truncation spill, built once
  std::vector<XInterval> hp(2 * K + 1, XInterval(r.prec_));
  {
    XInterval h = XInterval::point(a.h_);
    XInterval acc = XInterval::exact(1, r.prec_);
    for (size_t n = 0; n <= 2 * K; ++n) {
      hp[n] = XInterval(-acc.hi(), acc.hi());
      acc = acc * h;
    }
  }
  XInterval spill(r.prec_);
  for (size_t i = 0; i <= K; ++i)
    for (size_t j = 0; j <= K; ++j) {
      XInterval p = a.coeff_[i] * b.coeff_[j];
      if (i + j <= K)
        r.coeff_[i + j] = r.coeff_[i + j] + p;
      else
        spill = spill + p * hp[i + j];
    }
  // cross terms with remainders
  XInterval abound = a.bound(), bbound = b.bound();
  r.rem_ = spill + a.rem_ * (bbound - b.rem_) + b.rem_ * abound;
  return r;
}

TSeries operator*(const TSeries& a, const XInterval& c) {
  TSeries r = a;
  for (auto& cj : r.coeff_) cj = cj * c;
  r.rem_ = r.rem_ * c;
  return r;
}

TSeries operator+(TSeries a, const XInterval& c) {
  a.coeff_[0] = a.coeff_[0] + c;
  return a;
}

TSeries operator-(TSeries a, const XInterval& c) {
  a.coeff_[0] = a.coeff_[0] - c;
  return a;
}

TSeries operator-(TSeries a) {
  for (auto& cj : a.coeff_) cj = -cj;
  a.rem_ = -a.rem_;
  return a;
}

namespace {

// Composes a power series sum_k d_k * S^k (k <= K) where S is `a` with its
// constant term removed, adding a Lagrange remainder bound `lagr` valid on
// |S| <= s. Horner over truncated models.
TSeries compose(const TSeries& a, const std::vector<XInterval>& d, const XInterval& lagr) {
  TSeries s = a;
  s = s - a.coeff(0);  // S has zero constant term (remainder kept)
  TSeries acc = TSeries::constant(d.back(), a.halfwidth(), a.order());
  for (size_t k = d.size() - 1; k-- > 0;) acc = acc * s + d[k];
  acc = acc + lagr;
  return acc;
}

XInterval factorial_inv(unsigned k, mpfr_prec_t prec) {
  XInterval f = XInterval::exact(1, prec);
  for (unsigned i = 2; i <= k; ++i) f = f * static_cast<long>(i);
  return XInterval::exact(1, prec) / f;
}

}  // namespace

TSeries exp(const TSeries& a) {
  const mpfr_prec_t p = a.prec();
  const size_t K = a.order();
  XInterval c0 = a.coeff(0);
  TSeries s = a;
  s = s - c0;
  XInterval sb = s.bound();
  XInterval sabs = abs(sb);
  // exp(S) = sum_{k<=K} S^k/k! + R, |R| <= |S|^{K+1}/(K+1)! * exp(|S|)
  std::vector<XInterval> d(K + 1, XInterval(p));
  for (size_t k = 0; k <= K; ++k) d[k] = factorial_inv(static_cast<unsigned>(k), p);
  XInterval rbound = factorial_inv(static_cast<unsigned>(K + 1), p);
  XInterval spow = XInterval::exact(1, p);
  for (size_t i = 0; i <= K; ++i) spow = spow * sabs;
  rbound = rbound * spow * exp(sabs);
  XInterval lagr(-rbound.hi(), rbound.hi());
  TSeries e = compose(a, d, lagr);
  return e * exp(c0);
}

namespace {

// cos(S) and sin(S) truncated series with |R| <= |S|^{n}/n! for the first
// dropped order (alternating-tail style bound via Lagrange with |f^{(n)}| <= 1).
TSeries sincos_reduced(const TSeries& a, bool want_sin) {
  const mpfr_prec_t p = a.prec();
  const size_t K = a.order();
  TSeries s = a;
  s = s - a.coeff(0);
  XInterval sabs = abs(s.bound());
  std::vector<XInterval> d(K + 1, XInterval(p));
  for (size_t k = 0; k <= K; ++k) {
    bool keep = want_sin ? (k % 2 == 1) : (k % 2 == 0);
    if (!keep) continue;
    XInterval c = factorial_inv(static_cast<unsigned>(k), p);
    size_t quarter = (k / 2) % 2;  // sign pattern 1, -1, 1, ...
    d[k] = quarter == 0 ? c : -c;
  }
  XInterval rbound = factorial_inv(static_cast<unsigned>(K + 1), p);
  XInterval spow = XInterval::exact(1, p);
  for (size_t i = 0; i <= K; ++i) spow = spow * sabs;
  rbound = rbound * spow;
  XInterval lagr(-rbound.hi(), rbound.hi());
  return compose(a, d, lagr);
}

}  // namespace

TSeries sin(const TSeries& a) {
  XInterval c0 = a.coeff(0);
  return sincos_reduced(a, true) * cos(c0) + sincos_reduced(a, false) * sin(c0);
}

TSeries cos(const TSeries& a) {
  XInterval c0 = a.coeff(0);
  return sincos_reduced(a, false) * cos(c0) - sincos_reduced(a, true) * sin(c0);
}

TSeries inv(const TSeries& a) {
  const mpfr_prec_t p = a.prec();
  const size_t K = a.order();
  XInterval c0 = a.coeff(0);
  if (c0.contains_zero()) throw DomainError("inv: constant term contains 0");
  TSeries s = a;
  s = s - c0;
  // 1/(c0+S) = sum_k (-S)^k / c0^{k+1} + R, |R| <= r^{K+1}/(|c0|(1-r)), r = |S/c0|
  XInterval r = abs(s.bound() / c0);
  if (!(r.hi() < XReal::from_long(1, p)))
    throw DomainError("inv: panel too wide for the geometric expansion");
  std::vector<XInterval> d(K + 1, XInterval(p));
  XInterval cpow = 1 / c0;
  for (size_t k = 0; k <= K; ++k) {
    d[k] = (k % 2 == 0) ? cpow : -cpow;
    cpow = cpow / c0;
  }
  XInterval rpow = XInterval::exact(1, p);
  for (size_t i = 0; i <= K; ++i) rpow = rpow * r;
  XInterval rb = rpow / (abs(c0) * (1 - r));
  XInterval lagr(-rb.hi(), rb.hi());
  return compose(a, d, lagr);
}

}  // namespace zfr
