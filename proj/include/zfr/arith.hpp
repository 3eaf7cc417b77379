#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "zfr/interval.hpp"

namespace zfr {

// Primes <= limit by Eratosthenes sieve.
std::vector<uint32_t> sieve_primes(uint32_t limit);
// Independent cross-check sieve (odd-only wheel).
std::vector<uint32_t> sieve_primes_alt(uint32_t limit);

// Distinct prime factors by trial division (q fits in 64 bits).
std::vector<uint64_t> prime_factors(uint64_t q);

// E = -gamma - sum_{n>=2} sum_p log p / p^n, computed through the Moebius
// expansion of -zeta'/zeta at integer arguments; width far below 1e-10.
XInterval mertens_E(mpfr_prec_t prec = current_prec());

// Oracle route: the same prime-power sum via a direct sieve to `limit` plus
// an integral tail over all integers (much wider: O(log limit / limit)).
XInterval mertens_sum_sieve(uint32_t limit, mpfr_prec_t prec = current_prec());

// sum_{p | q} log p/(p-1), the closed form of sum_{(n,q)>1} Lambda(n)/n.
XInterval lambda_tail_identity(uint64_t q, mpfr_prec_t prec = current_prec());

struct SweepResult {
  bool all_hold = false;
  uint64_t min_margin_q = 0;
  XInterval min_margin;
  uint64_t witness_q = 0;  // first failing q when !all_hold
};

// Exhaustive check of sum_{p|q} log p/(p-1) < loglog q + 0.66 for
// 3 <= q <= limit (2310 covers the paper's computer-verified range).
SweepResult corollary_last_check(uint64_t limit = 2310, mpfr_prec_t prec = current_prec());

struct PrimorialCheck {
  uint64_t cutoff_prime;  // x with q = P_x
  bool printed_lemma_holds;      // sum log p/p < loglog q + E + 0.1313
  bool rs_theta_step_holds;      // theta(x) > x (1 - 1/(2 log 2310))
  bool rs_sum_step_holds;        // sum log p/p < log x + E + 0.06456
  bool corollary_direct_holds;   // sum log p/(p-1) < loglog q + 0.66
};

struct LemmaA1Result {
  std::vector<PrimorialCheck> checks;
  uint64_t first_printed_failure = 0;  // 0 when none
  uint64_t first_printed_success = 0;
  bool corollary_extension_holds = false;  // direct check at every primorial
  XInterval corollary_min_margin;
  uint64_t corollary_min_margin_x = 0;
};

// Walks primorials P_x for primes x <= limit_x starting at P_11 = 2310 and
// evaluates the Appendix A lemma as printed, the two imported
// Rosser-Schoenfeld steps, and the direct corollary extension.
LemmaA1Result lemma_a1_check(uint32_t limit_x, mpfr_prec_t prec = current_prec());

}  // namespace zfr
