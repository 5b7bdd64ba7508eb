#include "nfacount/prob.hpp"

#include <mpfr.h>

#include <algorithm>

namespace nfacount {

Prob Prob::ratio(const Prob& a, const Prob& b) {
    if (a.inf_ || b.inf_) fail("prob-inf", "INF in probability ratio");
    if (b.value_ == 0) return a.value_ == 0 ? Prob::zero() : Prob::infinity();
    mpq_class r = a.value_ / b.value_;
    return Prob(r);
}

Prob Prob::inverted() const {
    if (inf_) return Prob::zero();
    if (value_ == 0) return Prob::infinity();
    if (value_ == 1) return Prob::one();
    // The inverse of a sub-unit probability exceeds 1 only transiently; callers
    // clamp with min() before storing, so this path is unreachable by design.
    fail("prob-range", "inverse of probability below 1 is not a probability");
}

std::string Prob::str() const { return inf_ ? "inf" : value_.get_str(); }

mpq_class lower_median(std::vector<mpq_class> values) {
    if (values.empty()) fail("empty-median", "median of an empty list");
    size_t k = (values.size() - 1) / 2;
    std::nth_element(values.begin(), values.begin() + static_cast<ptrdiff_t>(k), values.end());
    return values[k];
}

mpz_class ceil_q(const mpq_class& q) {
    mpz_class r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return r;
}

uint64_t ceil_8ln(const mpq_class& x) {
    if (x < 1) fail("bad-argument", "ceil_8ln requires x >= 1");
    if (x == 1) return 0;
    // 8*ln(x) is irrational for rational x > 1, so bracketing the value with
    // directed rounding eventually pins the ceiling.
    for (mpfr_prec_t prec = 64;; prec *= 2) {
        mpfr_t lo, hi;
        mpfr_init2(lo, prec);
        mpfr_init2(hi, prec);
        mpfr_set_q(lo, x.get_mpq_t(), MPFR_RNDD);
        mpfr_set_q(hi, x.get_mpq_t(), MPFR_RNDU);
        mpfr_log(lo, lo, MPFR_RNDD);
        mpfr_log(hi, hi, MPFR_RNDU);
        mpfr_mul_ui(lo, lo, 8, MPFR_RNDD);
        mpfr_mul_ui(hi, hi, 8, MPFR_RNDU);
        mpfr_ceil(lo, lo);
        mpfr_ceil(hi, hi);
        unsigned long clo = mpfr_get_ui(lo, MPFR_RNDN);
        unsigned long chi = mpfr_get_ui(hi, MPFR_RNDN);
        mpfr_clear(lo);
        mpfr_clear(hi);
        if (clo == chi) return clo;
        if (prec > 1 << 20) fail("precision", "ceil_8ln did not converge");
    }
}

}  // namespace nfacount
