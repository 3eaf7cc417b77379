#include "zfr/zeta.hpp"

#include <mutex>

namespace zfr {

const std::vector<Rat>& bernoulli_table(size_t n) {
  static std::mutex mu;
  static std::vector<Rat> table;
  std::lock_guard<std::mutex> lock(mu);
  if (table.size() > n) return table;
  if (table.empty()) table.push_back(Rat(1));
  // sum_{k=0}^{m-1} C(m+1, k) B_k = -C(m+1,m) B_m
  for (size_t m = table.size(); m <= n; ++m) {
    Rat acc(0);
    for (size_t k = 0; k < m; ++k) {
      mpz_t binc;
      mpz_init(binc);
      mpz_bin_uiui(binc, m + 1, k);
      Rat c;
      mpq_set_z(c.get_mut(), binc);
      mpz_clear(binc);
      acc = acc + c * table[k];
    }
    Rat m1(static_cast<long>(m) + 1);
    table.push_back(Rat(0) - acc / m1);
  }
  return table;
}

namespace {

struct EmParams {
  size_t N;  // terms in the direct sum
  size_t m;  // Bernoulli terms B_2 .. B_{2(m-1)}; remainder at B_{2m}
};

EmParams em_params_real(mpfr_prec_t prec) {
  size_t m = static_cast<size_t>(prec) / 4 + 8;
  return {2 * m, m};
}

XInterval b2j_over_fact(size_t j, mpfr_prec_t prec) {
  const auto& B = bernoulli_table(2 * j);
  XInterval b = B[2 * j].to_interval(prec);
  XInterval f = XInterval::exact(1, prec);
  for (size_t i = 2; i <= 2 * j; ++i) f = f * static_cast<long>(i);
  return b / f;
}

}  // namespace

XInterval zeta_minus_pole(const XInterval& delta, mpfr_prec_t prec) {
  if (delta.lo().sign() < 0) throw DomainError("zeta_minus_pole: delta must be >= 0");
  const auto [N, m] = em_params_real(prec);
  prec += 24;  // guard bits so the accumulated rounding stays under 2^(4-prec)
  PrecGuard pg(prec);
  XInterval s = 1 + delta;
  XInterval sum(prec);
  for (size_t k = 2; k <= N; ++k)
    sum = sum + exp(-(s * log(XInterval::exact(static_cast<long>(k), prec))));
  sum = sum + 1;  // k = 1 term
  XInterval M = XInterval::exact(static_cast<long>(N) + 1, prec);
  XInterval logM = log(M);
  // (M^{-delta} - 1)/delta, removable at delta = 0: g(y) = (e^y - 1)/y at y = -delta*logM
  XInterval y = -(delta * logM);
  XInterval g(prec);
  {
    const size_t K = static_cast<size_t>(prec) / 3 + 8;
    XInterval term = XInterval::exact(1, prec);
    XInterval acc = XInterval(prec);
    XInterval kfact = XInterval::exact(1, prec);
    for (size_t k = 0; k < K; ++k) {
      kfact = kfact * static_cast<long>(k + 1);
      acc = acc + term / kfact;
      term = term * y;
    }
    XInterval ay = abs(y);
    XInterval tail = term;  // |y|^K implied via term when y is a point; bound safely:
    XInterval aypow = XInterval::exact(1, prec);
    for (size_t k = 0; k < K; ++k) aypow = aypow * ay;
    XInterval fct = kfact * static_cast<long>(K + 1);
    XInterval bound = aypow / fct * exp(ay);
    (void)tail;
    g = acc + XInterval(-bound.hi(), bound.hi());
  }
  XInterval Minvs = exp(-(s * logM));  // M^{-s}
  // M^{1-s}/(s-1) - 1/delta = (M^{-delta} - 1)/delta = g(y) * (-logM)
  XInterval res = sum - g * logM + Minvs / 2;
  for (size_t j = 1; j < m; ++j) {
    XInterval poch = XInterval::exact(1, prec);
    XInterval sl = s;
    for (size_t i = 0; i + 1 < 2 * j; ++i) {
      poch = poch * sl;
      sl = sl + 1;
    }
    XInterval Me = exp(-((s + static_cast<long>(2 * j - 1)) * logM));
    res = res + b2j_over_fact(j, prec) * poch * Me;
  }
  // remainder
  {
    XInterval poch = XInterval::exact(1, prec);
    XInterval sl = s;
    for (size_t i = 0; i < 2 * m; ++i) {
      poch = poch * sl;
      sl = sl + 1;
    }
    const auto& B = bernoulli_table(2 * m);
    XInterval babs = abs(B[2 * m].to_interval(prec));
    XInterval f = XInterval::exact(1, prec);
    for (size_t i = 2; i <= 2 * m; ++i) f = f * static_cast<long>(i);
    XInterval Me = exp(-((s + static_cast<long>(2 * m - 1)) * logM));
    XInterval den = s + static_cast<long>(2 * m - 1);
    XInterval rb = babs / f * abs(poch) * Me / den;
    res = res + XInterval(-rb.hi(), rb.hi());
  }
  return res;
}

XInterval zeta_real(const XInterval& sigma, mpfr_prec_t prec) {
  if (!(sigma.lo().cmp_si(1) > 0)) throw DomainError("zeta_real: sigma must exceed 1");
  if (sigma.hi() <= XReal::from_decimal("1.5", MPFR_RNDN, prec)) {
    PrecGuard pg(prec);
    XInterval delta = sigma - 1;
    XInterval pole = 1 / delta;
    return zeta_minus_pole(delta, prec) + pole;
  }
  // away from the pole the boundary term is evaluated directly
  const auto [N, m] = em_params_real(prec);
  prec += 24;
  PrecGuard pg(prec);
  const XInterval& s = sigma;
  XInterval sum = XInterval::exact(1, prec);
  for (size_t k = 2; k <= N; ++k)
    sum = sum + exp(-(s * log(XInterval::exact(static_cast<long>(k), prec))));
  XInterval M = XInterval::exact(static_cast<long>(N) + 1, prec);
  XInterval logM = log(M);
  XInterval res = sum + exp(-((s - 1) * logM)) / (s - 1) + exp(-(s * logM)) / 2;
  for (size_t j = 1; j < m; ++j) {
    XInterval poch = XInterval::exact(1, prec);
    XInterval sl = s;
    for (size_t i = 0; i + 1 < 2 * j; ++i) {
      poch = poch * sl;
      sl = sl + 1;
    }
    XInterval Me = exp(-((s + static_cast<long>(2 * j - 1)) * logM));
    res = res + b2j_over_fact(j, prec) * poch * Me;
  }
  {
    XInterval poch = XInterval::exact(1, prec);
    XInterval sl = s;
    for (size_t i = 0; i < 2 * m; ++i) {
      poch = poch * sl;
      sl = sl + 1;
    }
    const auto& B = bernoulli_table(2 * m);
    XInterval babs = abs(B[2 * m].to_interval(prec));
    XInterval f = XInterval::exact(1, prec);
    for (size_t i = 2; i <= 2 * m; ++i) f = f * static_cast<long>(i);
    XInterval den = s + static_cast<long>(2 * m - 1);
    XInterval rb = babs / f * abs(poch) * exp(-(den * logM)) / den;
    res = res + XInterval(-rb.hi(), rb.hi());
  }
  return res;
}

XInterval zeta_prime_real(const XInterval& sigma, mpfr_prec_t prec) {
  if (!(sigma.lo().cmp_si(1) > 0)) throw DomainError("zeta_prime_real: sigma must exceed 1");
  const auto [N, m] = em_params_real(prec);
  prec += 24;
  PrecGuard pg(prec);
  const XInterval& s = sigma;
  XInterval sum(prec);
  for (size_t k = 2; k <= N; ++k) {
    XInterval lk = log(XInterval::exact(static_cast<long>(k), prec));
    sum = sum - lk * exp(-(s * lk));
  }
  XInterval M = XInterval::exact(static_cast<long>(N) + 1, prec);
  XInterval logM = log(M);
  XInterval sm1 = s - 1;
  XInterval M1s = exp(-(sm1 * logM));  // M^{1-s}
  XInterval Ms = exp(-(s * logM));     // M^{-s}
  XInterval res = sum - logM * M1s / sm1 - M1s / sqr(sm1) - logM * Ms / 2;
  for (size_t j = 1; j < m; ++j) {
    XInterval poch = XInterval::exact(1, prec);
    XInterval harm(prec);
    XInterval sl = s;
    for (size_t i = 0; i + 1 < 2 * j; ++i) {
      poch = poch * sl;
      harm = harm + 1 / sl;
      sl = sl + 1;
    }
    XInterval Me = exp(-((s + static_cast<long>(2 * j - 1)) * logM));
    res = res + b2j_over_fact(j, prec) * poch * (harm - logM) * Me;
  }
  {
    XInterval poch = XInterval::exact(1, prec);
    XInterval harm(prec);
    XInterval sl = s;
    for (size_t i = 0; i < 2 * m; ++i) {
      poch = poch * sl;
      harm = harm + 1 / sl;
      sl = sl + 1;
    }
    const auto& B = bernoulli_table(2 * m);
    XInterval babs = abs(B[2 * m].to_interval(prec));
    XInterval f = XInterval::exact(1, prec);
    for (size_t i = 2; i <= 2 * m; ++i) f = f * static_cast<long>(i);
    // integral bounds: int_M^inf y^{-p} = M^{1-p}/(p-1); int log(y) y^{-p} =
    // M^{1-p}(logM/(p-1) + 1/(p-1)^2), with p = sigma + 2m
    XInterval p1 = s + static_cast<long>(2 * m - 1);  // p - 1
    XInterval Mint = exp(-(p1 * logM));               // M^{1-p}
    XInterval Ilog = Mint * (logM / p1 + 1 / sqr(p1));
    XInterval rb = babs / f * abs(poch) * (abs(harm) * Mint / p1 + Ilog);
    res = res + XInterval(-rb.hi(), rb.hi());
  }
  return res;
}

XInterval neg_zeta_logderiv(const XInterval& sigma, mpfr_prec_t prec) {
  return -(zeta_prime_real(sigma, prec) / zeta_real(sigma, prec));
}

CInterval hurwitz_zeta(const XInterval& sigma, const XInterval& t, const XInterval& u,
                       mpfr_prec_t prec) {
  if (u.lo().sign() <= 0 || u.hi().cmp_si(1) > 0)
    throw DomainError("hurwitz_zeta: u must lie in (0, 1]");
  if (t.lo().sign() < 0 || t.hi().cmp_si(10000000L) > 0)
    throw UnsupportedRangeError("hurwitz_zeta: t outside supported range [0, 1e7]");
  XReal half = XReal::from_decimal("0.4999", MPFR_RNDD, prec);
  if (sigma.lo() < half || sigma.hi().cmp_si(3) > 0)
    throw UnsupportedRangeError("hurwitz_zeta: sigma outside supported strip");
  PrecGuard pg(prec);
  const size_t m = static_cast<size_t>(prec) / 2 + 16;
  double td = t.hi().to_double();
  size_t N = std::max<size_t>(2 * m, static_cast<size_t>(0.42 * td) + 2 * m);

  CInterval s(sigma, t);
  CInterval sum(prec);
  for (size_t k = 0; k < N; ++k) {
    XInterval ku = u + static_cast<long>(k);
    sum = sum + pow_negs(ku, s);
  }
  XInterval M = u + static_cast<long>(N);
  XInterval logM = log(M);
  CInterval sm1 = s - CInterval::exact(1, 0, prec);
  CInterval M1s = pow_negs(M, sm1);  // M^{1-s}
  CInterval Ms = pow_negs(M, s);
  CInterval res = sum + M1s / sm1 + Ms / XInterval::exact(2, prec);
  for (size_t j = 1; j < m; ++j) {
    CInterval poch = CInterval::exact(1, 0, prec);
    CInterval sl = s;
    for (size_t i = 0; i + 1 < 2 * j; ++i) {
      poch = poch * sl;
      sl.re = sl.re + 1;
    }
    CInterval Me = pow_negs(M, CInterval(s.re + static_cast<long>(2 * j - 1), s.im));
    res = res + poch * Me * b2j_over_fact(j, prec);
  }
  {
    // |(s)_2m| upper bound via moduli
    XInterval mod2 = XInterval::exact(1, prec);
    for (size_t i = 0; i < 2 * m; ++i)
      mod2 = mod2 * (sqr(sigma + static_cast<long>(i)) + sqr(t));
    XInterval mod = sqrt(mod2);
    const auto& B = bernoulli_table(2 * m);
    XInterval babs = abs(B[2 * m].to_interval(prec));
    XInterval f = XInterval::exact(1, prec);
    for (size_t i = 2; i <= 2 * m; ++i) f = f * static_cast<long>(i);
    XInterval p1 = sigma + static_cast<long>(2 * m - 1);
    XInterval Mint = exp(-(p1 * logM));  // M^{1-sigma-2m}
    XInterval rb = babs / f * mod * Mint / p1;
    XInterval rbox(-rb.hi(), rb.hi());
    res.re = res.re + rbox;
    res.im = res.im + rbox;
  }
  return res;
}

}  // namespace zfr
