#pragma once

#include <vector>

#include "zfr/interval.hpp"

namespace zfr {

// Univariate Taylor model: f(mid + x) is enclosed by
//   sum_j coeff[j] * x^j + rem   for all x in [-h, h].
// Coefficients and remainder are rigorous intervals; h is an exact XReal.
// This is the workhorse behind rigorous quadrature: per-panel models of
// order ~12 give panel errors ~ h^(order+1) instead of the h^2 of plain
// interval evaluation.
class TSeries {
 public:
  TSeries(size_t order, XReal halfwidth, mpfr_prec_t prec = current_prec());

  // The identity function x -> mid + x on [mid-h, mid+h].
  static TSeries var(const XInterval& mid, const XReal& halfwidth, size_t order,
                     mpfr_prec_t prec = current_prec());
  static TSeries constant(const XInterval& c, const XReal& halfwidth, size_t order);

  size_t order() const { return coeff_.size() - 1; }
  const XReal& halfwidth() const { return h_; }
  const XInterval& coeff(size_t j) const { return coeff_[j]; }
  const XInterval& rem() const { return rem_; }
  mpfr_prec_t prec() const { return prec_; }

  // Enclosure of the model over the whole panel.
  XInterval bound() const;

  // Enclosure of the integral over the panel [-h, h].
  XInterval integral() const;

  TSeries& operator+=(const TSeries& o);
  TSeries& operator-=(const TSeries& o);
  friend TSeries operator+(TSeries a, const TSeries& b) { return a += b; }
  friend TSeries operator-(TSeries a, const TSeries& b) { return a -= b; }
  friend TSeries operator*(const TSeries& a, const TSeries& b);
  friend TSeries operator*(const TSeries& a, const XInterval& c);
  friend TSeries operator*(const XInterval& c, const TSeries& a) { return a * c; }
  friend TSeries operator+(TSeries a, const XInterval& c);
  friend TSeries operator-(TSeries a, const XInterval& c);
  friend TSeries operator-(TSeries a);

  friend TSeries exp(const TSeries& a);
  friend TSeries sin(const TSeries& a);
  friend TSeries cos(const TSeries& a);
  // 1/a; requires the range of a to exclude 0
  friend TSeries inv(const TSeries& a);
  friend TSeries operator/(const TSeries& a, const TSeries& b) { return a * inv(b); }

 private:
  // |x|^j bound over the panel: h^j (upper end).
  XInterval pow_h(size_t j) const;
  // Polynomial part with constant term dropped, plus remainder, bounded
  // over the panel; used as the argument bound for composed series.
  XInterval tail_bound() const;

  std::vector<XInterval> coeff_;
  XInterval rem_;
  XReal h_;
  mpfr_prec_t prec_;
};

}  // namespace zfr
