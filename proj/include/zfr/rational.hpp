#pragma once

#include <gmp.h>
#include <mpfr.h>

#include <string>
#include <utility>

#include "zfr/interval.hpp"

namespace zfr {

// Exact rational, used where decimal inputs must stay exact (the cosine
// polynomial coefficients and the section-8 rational identities).
class Rat {
 public:
  Rat() { mpq_init(q_); }

  explicit Rat(long n, unsigned long d = 1) {
    mpq_init(q_);
    mpq_set_si(q_, n, d);
    mpq_canonicalize(q_);
  }

  // Parses "123", "-4/7" or a plain decimal like "0.225" (exactly).
  static Rat from_string(const std::string& s) {
    Rat r;
    auto dot = s.find('.');
    if (dot == std::string::npos) {
      if (mpq_set_str(r.q_, s.c_str(), 10) != 0) throw DomainError("bad rational: " + s);
      mpq_canonicalize(r.q_);
      return r;
    }
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    size_t frac_len = s.size() - dot - 1;
    std::string den = "1" + std::string(frac_len, '0');
    std::string q = digits + "/" + den;
    if (mpq_set_str(r.q_, q.c_str(), 10) != 0) throw DomainError("bad decimal: " + s);
    mpq_canonicalize(r.q_);
    return r;
  }

  Rat(const Rat& o) {
    mpq_init(q_);
    mpq_set(q_, o.q_);
  }
  Rat(Rat&& o) noexcept {
    mpq_init(q_);
    mpq_swap(q_, o.q_);
  }
  Rat& operator=(Rat o) noexcept {
    mpq_swap(q_, o.q_);
    return *this;
  }
  ~Rat() { mpq_clear(q_); }

  friend Rat operator+(const Rat& a, const Rat& b) {
    Rat r;
    mpq_add(r.q_, a.q_, b.q_);
    return r;
  }
  friend Rat operator-(const Rat& a, const Rat& b) {
    Rat r;
    mpq_sub(r.q_, a.q_, b.q_);
    return r;
  }
  friend Rat operator*(const Rat& a, const Rat& b) {
    Rat r;
    mpq_mul(r.q_, a.q_, b.q_);
    return r;
  }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (mpq_sgn(b.q_) == 0) throw DomainError("rational division by zero");
    Rat r;
    mpq_div(r.q_, a.q_, b.q_);
    return r;
  }

  bool operator==(const Rat& o) const { return mpq_equal(q_, o.q_) != 0; }
  bool operator<(const Rat& o) const { return mpq_cmp(q_, o.q_) < 0; }
  bool operator>(const Rat& o) const { return mpq_cmp(q_, o.q_) > 0; }
  int sign() const { return mpq_sgn(q_); }

  std::string str() const {
    char* c = mpq_get_str(nullptr, 10, q_);
    std::string s(c);
    void (*freefn)(void*, size_t);
    mp_get_memory_functions(nullptr, nullptr, &freefn);
    freefn(c, s.size() + 1);
    return s;
  }

  // Tight outward-rounded interval enclosure.
  XInterval to_interval(mpfr_prec_t prec = current_prec()) const {
    XInterval r(prec);
    mpfr_set_q(r.lo_mut().get(), q_, MPFR_RNDD);
    mpfr_set_q(r.hi_mut().get(), q_, MPFR_RNDU);
    return r;
  }

  mpq_srcptr get() const { return q_; }
  mpq_ptr get_mut() { return q_; }

 private:
  mpq_t q_;
};

}  // namespace zfr
