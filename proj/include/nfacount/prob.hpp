#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "nfacount/util.hpp"

namespace nfacount {

/// An exact probability: a reduced non-negative rational in [0,1], or the
/// distinguished value INF (the inverse of a zero estimate).
///
/// Division follows the convention b/0 = INF for b != 0 and 0/0 = 0.
class Prob {
public:
    Prob() : value_(0) {}
    explicit Prob(const mpq_class& v) : value_(v) { check_range(); }
    Prob(long num, long den) : value_(num, den) {
        value_.canonicalize();
        check_range();
    }

    static Prob zero() { return Prob(); }
    static Prob one() { return Prob(1, 1); }
    static Prob infinity() {
        Prob p;
        p.inf_ = true;
        return p;
    }

    bool is_inf() const { return inf_; }
    bool is_zero() const { return !inf_ && value_ == 0; }
    bool is_one() const { return !inf_ && value_ == 1; }

    /// Finite value; must not be called on INF.
    const mpq_class& value() const {
        if (inf_) fail("prob-inf", "INF probability has no rational value");
        return value_;
    }

    /// a/b with the 0-denominator conventions above. Requires a <= b so the
    /// result stays a probability.
    static Prob ratio(const Prob& a, const Prob& b);

    /// 1/p; 0 maps to INF and INF maps to 0.
    Prob inverted() const;

    /// min with INF as the top element.
    static Prob min(const Prob& a, const Prob& b) { return less(a, b) ? a : b; }

    static bool less(const Prob& a, const Prob& b) {
        if (a.inf_) return false;
        if (b.inf_) return true;
        return a.value_ < b.value_;
    }

    friend bool operator==(const Prob& a, const Prob& b) {
        if (a.inf_ || b.inf_) return a.inf_ == b.inf_;
        return a.value_ == b.value_;
    }

    friend Prob operator*(const Prob& a, const Prob& b) {
        if (a.inf_ || b.inf_) fail("prob-inf", "cannot multiply INF probabilities");
        return Prob(mpq_class(a.value_ * b.value_));
    }

    std::string str() const;

private:
    void check_range() const {
        if (value_ < 0 || value_ > 1) fail("prob-range", "probability outside [0,1]: " + value_.get_str());
    }

    mpq_class value_;
    bool inf_ = false;
};

/// Lower median: the element at sorted index floor((len-1)/2).
mpq_class lower_median(std::vector<mpq_class> values);

/// ceil of a non-negative rational.
mpz_class ceil_q(const mpq_class& q);

/// ceil(8 * ln(x)) for a rational x >= 1, with correctly rounded logs.
uint64_t ceil_8ln(const mpq_class& x);

}  // namespace nfacount
