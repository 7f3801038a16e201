#pragma once

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "rootzeta/exact.hpp"

namespace rootzeta {

struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ConvergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ArgumentOutOfRange : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Value-semantic wrapper around mpfr_t. Arithmetic helpers round to an
// explicit target precision; error accounting lives in HPReal.
class BigFloat {
public:
    explicit BigFloat(mpfr_prec_t prec = 128) {
        mpfr_init2(x_, prec);
        mpfr_set_zero(x_, 1);
    }
    BigFloat(const BigFloat& o) {
        mpfr_init2(x_, mpfr_get_prec(o.x_));
        mpfr_set(x_, o.x_, MPFR_RNDN);
    }
    BigFloat(BigFloat&& o) noexcept {
        mpfr_init2(x_, mpfr_get_prec(o.x_));
        mpfr_swap(x_, o.x_);
    }
    BigFloat& operator=(const BigFloat& o) {
        if (this != &o) {
            mpfr_set_prec(x_, mpfr_get_prec(o.x_));
            mpfr_set(x_, o.x_, MPFR_RNDN);
        }
        return *this;
    }
    BigFloat& operator=(BigFloat&& o) noexcept {
        mpfr_swap(x_, o.x_);
        return *this;
    }
    ~BigFloat() { mpfr_clear(x_); }

    static BigFloat of_long(long v, mpfr_prec_t prec) {
        BigFloat r(prec);
        mpfr_set_si(r.x_, v, MPFR_RNDN);
        return r;
    }
    static BigFloat of_rational(const Rational& q, mpfr_prec_t prec) {
        BigFloat r(prec);
        mpfr_set_q(r.x_, q.get_mpq_t(), MPFR_RNDN);
        return r;
    }
    static BigFloat of_double(double v, mpfr_prec_t prec) {
        BigFloat r(prec);
        mpfr_set_d(r.x_, v, MPFR_RNDN);
        return r;
    }

    mpfr_ptr get() { return x_; }
    mpfr_srcptr get() const { return x_; }
    mpfr_prec_t prec() const { return mpfr_get_prec(x_); }
    double to_double() const { return mpfr_get_d(x_, MPFR_RNDN); }
    bool is_zero() const { return mpfr_zero_p(x_); }
    int sign() const { return mpfr_sgn(x_); }

    std::string str(int significant_digits = 25) const;

private:
    mpfr_t x_;
};

namespace errbound {

// Nudge a double bound upward so double rounding cannot understate it.
inline double up(double x) {
    return x * (1.0 + 1e-13) + 1e-290;
}

// Upper bound on |v| as a double.
inline double mag(mpfr_srcptr v) {
    if (mpfr_zero_p(v)) return 0.0;
    double d = std::fabs(mpfr_get_d(v, MPFR_RNDA));
    return d + 1e-290;
}

// Bound on the rounding error of a value stored at its own precision.
inline double ulp(mpfr_srcptr v) {
    if (mpfr_zero_p(v)) return 1e-290;
    long e = mpfr_get_exp(v) - mpfr_get_prec(v) + 1;
    e = std::clamp(e, -1060L, 1020L);
    return std::ldexp(1.0, static_cast<int>(e));
}

}  // namespace errbound

// Arbitrary-precision real with a rigorous absolute error bound:
// the exact quantity lies in [value - error_bound, value + error_bound].
struct HPReal {
    BigFloat value;
    double error_bound = 0.0;

    double to_double() const { return value.to_double(); }
    std::string str(int digits = 25) const { return value.str(digits); }
};

HPReal hp_from_rational(const Rational& q, mpfr_prec_t prec);
HPReal hp_from_long(long v, mpfr_prec_t prec);
HPReal hp_add(const HPReal& a, const HPReal& b, mpfr_prec_t prec);
HPReal hp_sub(const HPReal& a, const HPReal& b, mpfr_prec_t prec);
HPReal hp_mul(const HPReal& a, const HPReal& b, mpfr_prec_t prec);
HPReal hp_neg(const HPReal& a);
HPReal hp_scale(const Rational& q, const HPReal& a, mpfr_prec_t prec);
// upper bound on |a - b|
double hp_abs_diff(const HPReal& a, const HPReal& b);

struct SummationConfig {
    long precision_bits = 128;
    double target_tol = 1e-12;
    long max_outer = 1 << 20;

    mpfr_prec_t work_prec() const { return static_cast<mpfr_prec_t>(precision_bits + 32); }
    void validate() const {
        if (precision_bits < 53) throw std::invalid_argument("precision_bits must be >= 53");
        if (!(target_tol > 0)) throw std::invalid_argument("target_tol must be positive");
        if (target_tol < std::ldexp(1.0, static_cast<int>(-std::min(precision_bits, 1000L) + 8)))
            throw std::invalid_argument("target_tol below 2^(8-precision_bits)");
        if (max_outer < 64) throw std::invalid_argument("max_outer too small");
    }
};

}  // namespace rootzeta
