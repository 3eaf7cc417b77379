#include "zfr/arith.hpp"

#include <map>
#include <mutex>

#include "zfr/zeta.hpp"

namespace zfr {

std::vector<uint32_t> sieve_primes(uint32_t limit) {
  std::vector<uint32_t> primes;
  if (limit < 2) return primes;
  std::vector<uint8_t> composite(limit + 1, 0);
  for (uint32_t p = 2; p <= limit; ++p) {
    if (composite[p]) continue;
    primes.push_back(p);
    for (uint64_t m = static_cast<uint64_t>(p) * p; m <= limit; m += p)
      composite[m] = 1;
  }
  return primes;
}

std::vector<uint32_t> sieve_primes_alt(uint32_t limit) {
  // odd-only sieve: index i represents 2i + 3
  std::vector<uint32_t> primes;
  if (limit < 2) return primes;
  primes.push_back(2);
  if (limit < 3) return primes;
  size_t n = (limit - 3) / 2 + 1;
  std::vector<uint8_t> composite(n, 0);
  for (size_t i = 0; i < n; ++i) {
    if (composite[i]) continue;
    uint64_t p = 2 * i + 3;
    primes.push_back(static_cast<uint32_t>(p));
    for (uint64_t m = p * p; m <= limit; m += 2 * p) composite[(m - 3) / 2] = 1;
  }
  return primes;
}

std::vector<uint64_t> prime_factors(uint64_t q) {
  std::vector<uint64_t> fs;
  for (uint64_t p = 2; p * p <= q; p += (p == 2 ? 1 : 2)) {
    if (q % p == 0) {
      fs.push_back(p);
      while (q % p == 0) q /= p;
    }
  }
  if (q > 1) fs.push_back(q);
  return fs;
}

namespace {

int moebius(unsigned v) {
  int mu = 1;
  for (unsigned p = 2; p * p <= v; ++p) {
    if (v % p == 0) {
      v /= p;
      if (v % p == 0) return 0;
      mu = -mu;
    }
  }
  if (v > 1) mu = -mu;
  return mu;
}

}  // namespace

XInterval mertens_E(mpfr_prec_t prec) {
  static std::mutex mu;
  static std::map<mpfr_prec_t, XInterval> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(prec);
    if (it != cache.end()) return it->second;
  }
  PrecGuard pg(prec);
  // sum_{n>=2} sum_p log p/p^n = sum_{v>=2} (-mu(v)) L(v), L = -zeta'/zeta
  const unsigned V = std::max<unsigned>(64, static_cast<unsigned>(prec) / 3);
  XInterval s2(prec);
  for (unsigned v = 2; v <= V; ++v) {
    int m = moebius(v);
    if (m == 0) continue;
    XInterval L = neg_zeta_logderiv(XInterval::exact(v, prec), prec);
    s2 = s2 + (m > 0 ? -L : L);
  }
  // tail: sum_{v > V} L(v) with L(v) <= log2 2^-v + log3 3^-v + int_3^inf log x x^-v dx
  // <= 1.02 log 2 * 2^-v for v >= 12; geometric sum
  XInterval l2 = const_log2(prec);
  XInterval tail = XInterval::from_decimal("2.04", prec) * l2 *
                   exp(-(XInterval::exact(V, prec) * l2));
  s2 = s2 + XInterval(-tail.hi(), tail.hi());
  XInterval E = -const_euler(prec) - s2;
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(prec, E);
  return E;
}

XInterval mertens_sum_sieve(uint32_t limit, mpfr_prec_t prec) {
  PrecGuard pg(prec);
  XInterval s(prec);
  for (uint32_t p : sieve_primes(limit)) {
    XInterval pi = XInterval::exact(p, prec);
    s = s + log(pi) / (pi * (pi - 1));
  }
  // integer tail: sum_{n > limit} log n/(n(n-1)) <= logP/(P-1) + log(P/(P-1))
  XInterval P = XInterval::exact(limit, prec);
  XInterval tail = log(P) / (P - 1) + log(P / (P - 1));
  return XInterval(s.lo(), (s + tail).hi());
}

XInterval lambda_tail_identity(uint64_t q, mpfr_prec_t prec) {
  if (q < 2) throw DomainError("lambda_tail_identity: q >= 2 required");
  PrecGuard pg(prec);
  XInterval s(prec);
  for (uint64_t p : prime_factors(q)) {
    XInterval pi = XInterval::exact(static_cast<long>(p), prec);
    s = s + log(pi) / (pi - 1);
  }
  return s;
}

SweepResult corollary_last_check(uint64_t limit, mpfr_prec_t prec) {
  PrecGuard pg(prec);
  SweepResult out;
  out.all_hold = true;
  XInterval c66 = XInterval::from_decimal("0.66", prec);
  // per-prime log p/(p-1) cache
  std::map<uint64_t, XInterval> lp;
  bool first = true;
  for (uint64_t q = 3; q <= limit; ++q) {
    XInterval s(prec);
    for (uint64_t p : prime_factors(q)) {
      auto it = lp.find(p);
      if (it == lp.end()) {
        XInterval pi = XInterval::exact(static_cast<long>(p), prec);
        it = lp.emplace(p, log(pi) / (pi - 1)).first;
      }
      s = s + it->second;
    }
    XInterval bound = log(log(XInterval::exact(static_cast<long>(q), prec))) + c66;
    XInterval margin = bound - s;
    if (!margin.certainly_positive()) {
      out.all_hold = false;
      if (out.witness_q == 0) out.witness_q = q;
      continue;
    }
    if (first || margin.lo() < out.min_margin.lo()) {
      out.min_margin = margin;
      out.min_margin_q = q;
      first = false;
    }
  }
  return out;
}

LemmaA1Result lemma_a1_check(uint32_t limit_x, mpfr_prec_t prec) {
  if (limit_x < 13) throw DomainError("lemma_a1_check: limit_x >= 13 required");
  PrecGuard pg(prec);
  LemmaA1Result out;
  XInterval E = mertens_E(prec);
  XInterval theta(prec);   // log of the running primorial
  XInterval sum_lp(prec);  // sum log p / p
  XInterval sum_lp1(prec); // sum log p / (p-1)
  XInterval c1313 = XInterval::from_decimal("0.1313", prec);
  XInterval c06456 = XInterval::from_decimal("0.06456", prec);
  XInterval c66 = XInterval::from_decimal("0.66", prec);
  XInterval rs_slope = 1 - 1 / (2 * log(XInterval::exact(2310, prec)));
  bool first_margin = true;
  out.corollary_extension_holds = true;
  for (uint32_t p : sieve_primes(limit_x)) {
    XInterval pi = XInterval::exact(p, prec);
    XInterval lpv = log(pi);
    theta = theta + lpv;
    sum_lp = sum_lp + lpv / pi;
    sum_lp1 = sum_lp1 + lpv / (pi - 1);
    if (p < 11) continue;  // primorials below 2310
    PrimorialCheck chk;
    chk.cutoff_prime = p;
    XInterval loglogq = log(theta);
    chk.printed_lemma_holds = sum_lp.certainly_lt(loglogq + E + c1313);
    chk.rs_theta_step_holds = theta.certainly_gt(pi * rs_slope);
    chk.rs_sum_step_holds = sum_lp.certainly_lt(lpv + E + c06456);
    XInterval margin = loglogq + c66 - sum_lp1;
    chk.corollary_direct_holds = margin.certainly_positive();
    if (!chk.corollary_direct_holds) out.corollary_extension_holds = false;
    if (first_margin || margin.lo() < out.corollary_min_margin.lo()) {
      out.corollary_min_margin = margin;
      out.corollary_min_margin_x = p;
      first_margin = false;
    }
    if (!chk.printed_lemma_holds && out.first_printed_failure == 0)
      out.first_printed_failure = p;
    if (chk.printed_lemma_holds && out.first_printed_success == 0)
      out.first_printed_success = p;
    out.checks.push_back(chk);
  }
  return out;
}

}  // namespace zfr
