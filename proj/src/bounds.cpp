#include "zonogon/bounds.hpp"

#include <gmpxx.h>
#include <mpfr.h>

#include <cstdio>
#include <stdexcept>
#include <string>
#include <vector>

namespace zonogon {

namespace {

void require_k(int k) {
  if (k < 2) throw std::invalid_argument("edge bounds need k >= 2");
  if (k > 10000) throw std::invalid_argument("k out of supported range");
}

// 2 k^3 (2k-3)^2, exact in an unsigned long for the supported k range.
unsigned long numerator_units(int k) {
  unsigned long kk = static_cast<unsigned long>(k);
  return 2ul * kk * kk * kk * (2ul * kk - 3ul) * (2ul * kk - 3ul);
}

// One directed evaluation of num / ((2 - sqrt 2) pi^2). `up` selects the
// upper interval end; every intermediate is rounded so the error is
// one-sided.
void directed_quotient(mpfr_t out, int k, bool up, mpfr_prec_t prec) {
  mpfr_rnd_t toward = up ? MPFR_RNDU : MPFR_RNDD;
  mpfr_rnd_t away = up ? MPFR_RNDD : MPFR_RNDU;
  mpfr_t s, d, p;
  mpfr_inits2(prec, s, d, p, static_cast<mpfr_ptr>(nullptr));
  // For an upper quotient the denominator must be a lower bound, so sqrt 2
  // rounds up and the subtraction, pi, and products round down.
  mpfr_sqrt_ui(s, 2, toward);
  mpfr_ui_sub(d, 2, s, away);
  mpfr_const_pi(p, away);
  mpfr_sqr(p, p, away);
  mpfr_mul(d, d, p, away);
  mpfr_set_ui(out, numerator_units(k), MPFR_RNDN);
  mpfr_div(out, out, d, toward);
  mpfr_clears(s, d, p, static_cast<mpfr_ptr>(nullptr));
}

long long certified_floor(int k) {
  for (mpfr_prec_t prec = 256; prec <= (1 << 20); prec *= 2) {
    mpfr_t lo, hi;
    mpfr_inits2(prec, lo, hi, static_cast<mpfr_ptr>(nullptr));
    directed_quotient(lo, k, false, prec);
    directed_quotient(hi, k, true, prec);
    mpfr_floor(lo, lo);
    mpfr_floor(hi, hi);
    bool agree = mpfr_cmp(lo, hi) == 0;
    long long n = mpfr_get_si(lo, MPFR_RNDN);
    mpfr_clears(lo, hi, static_cast<mpfr_ptr>(nullptr));
    if (agree) return n;
  }
  throw std::runtime_error("floor certification did not converge");
}

std::string significant_digits(mpfr_t v, int digits) {
  std::vector<char> buf(static_cast<std::size_t>(digits) + 64);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", digits, v);
  return std::string(buf.data());
}

mpz_class map_count_z(long long n) {
  if (n < 0) throw std::invalid_argument("map count index must be >= 0");
  mpz_class num, f1, f2;
  mpz_fac_ui(num.get_mpz_t(), static_cast<unsigned long>(4 * n + 1));
  num *= 6;
  mpz_fac_ui(f1.get_mpz_t(), static_cast<unsigned long>(n));
  mpz_fac_ui(f2.get_mpz_t(), static_cast<unsigned long>(3 * n + 3));
  f1 *= f2;
  if (!mpz_divisible_p(num.get_mpz_t(), f1.get_mpz_t()))
    throw std::logic_error("map count is not an integer");
  mpz_class t;
  mpz_divexact(t.get_mpz_t(), num.get_mpz_t(), f1.get_mpz_t());
  return t;
}

}  // namespace

std::pair<std::string, long long> edge_bounds(int k, int digits) {
  require_k(k);
  if (digits < 1) throw std::invalid_argument("digits must be positive");
  mpfr_prec_t prec = 64 + 4 * static_cast<mpfr_prec_t>(digits);
  if (prec < 256) prec = 256;
  mpfr_t v, p;
  mpfr_inits2(prec, v, p, static_cast<mpfr_ptr>(nullptr));
  mpfr_const_pi(p, MPFR_RNDN);
  mpfr_div_ui(p, p, 2ul * static_cast<unsigned long>(k), MPFR_RNDN);
  mpfr_sin(p, p, MPFR_RNDN);
  mpfr_sqr(p, p, MPFR_RNDN);
  mpfr_mul_ui(p, p, 2, MPFR_RNDN);
  unsigned long kk = static_cast<unsigned long>(k);
  mpfr_set_ui(v, kk * (2 * kk - 3) * (2 * kk - 3), MPFR_RNDN);
  mpfr_div(v, v, p, MPFR_RNDN);
  std::string exact = significant_digits(v, digits);
  mpfr_clears(v, p, static_cast<mpfr_ptr>(nullptr));
  return {exact, certified_floor(k)};
}

std::string loopless_map_count(long long n) {
  return map_count_z(n).get_str();
}

std::string theorem_bound(int k) {
  long long n = edge_bounds(k).second;
  mpz_class total = map_count_z(n) * static_cast<unsigned long>(n);
  return total.get_str();
}

double asymptotic_estimate(long long n) {
  if (n < 1) throw std::invalid_argument("estimate needs n >= 1");
  mpfr_t v, t;
  mpfr_inits2(256, v, t, static_cast<mpfr_ptr>(nullptr));
  // log10((8/27) sqrt(6/pi)) term
  mpfr_const_pi(t, MPFR_RNDN);
  mpfr_ui_div(t, 6, t, MPFR_RNDN);
  mpfr_sqrt(t, t, MPFR_RNDN);
  mpfr_mul_ui(t, t, 8, MPFR_RNDN);
  mpfr_div_ui(t, t, 27, MPFR_RNDN);
  mpfr_log10(v, t, MPFR_RNDN);
  // n log10(256/27)
  mpfr_set_ui(t, 256, MPFR_RNDN);
  mpfr_div_ui(t, t, 27, MPFR_RNDN);
  mpfr_log10(t, t, MPFR_RNDN);
  mpfr_mul_si(t, t, n, MPFR_RNDN);
  mpfr_add(v, v, t, MPFR_RNDN);
  // -(3/2) log10(n)
  mpfr_set_si(t, n, MPFR_RNDN);
  mpfr_log10(t, t, MPFR_RNDN);
  mpfr_mul_d(t, t, -1.5, MPFR_RNDN);
  mpfr_add(v, v, t, MPFR_RNDN);
  double out = mpfr_get_d(v, MPFR_RNDN);
  mpfr_clears(v, t, static_cast<mpfr_ptr>(nullptr));
  return out;
}

double log10_n_times_t(long long n) {
  mpz_class total = map_count_z(n) * static_cast<unsigned long>(n);
  mpfr_t v;
  mpfr_init2(v, 256);
  mpfr_set_z(v, total.get_mpz_t(), MPFR_RNDN);
  mpfr_log10(v, v, MPFR_RNDN);
  double out = mpfr_get_d(v, MPFR_RNDN);
  mpfr_clear(v);
  return out;
}

BoundReport bound_report(int k) {
  BoundReport r;
  r.k = k;
  auto [exact, n] = edge_bounds(k);
  r.exact_edge_bound = exact;
  r.n = n;
  r.t_n = loopless_map_count(n);
  mpz_class total = map_count_z(n) * static_cast<unsigned long>(n);
  r.theorem_bound = total.get_str();
  r.t_n_digits = r.t_n.size();
  r.theorem_bound_digits = r.theorem_bound.size();
  r.log10_asymptotic = asymptotic_estimate(n);
  return r;
}

}  // namespace zonogon
