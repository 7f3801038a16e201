#include "rootzeta/bigfloat.hpp"

#include <memory>

namespace rootzeta {

std::string BigFloat::str(int significant_digits) const {
    char fmt[32];
    std::snprintf(fmt, sizeof fmt, "%%.%dRg", significant_digits);
    char* out = nullptr;
    mpfr_asprintf(&out, fmt, x_);
    std::string s(out);
    mpfr_free_str(out);
    return s;
}

HPReal hp_from_rational(const Rational& q, mpfr_prec_t prec) {
    HPReal r{BigFloat(prec), 0.0};
    int inexact = mpfr_set_q(r.value.get(), q.get_mpq_t(), MPFR_RNDN);
    r.error_bound = inexact == 0 ? 0.0 : errbound::ulp(r.value.get());
    return r;
}

HPReal hp_from_long(long v, mpfr_prec_t prec) {
    return {BigFloat::of_long(v, prec), 0.0};
}

HPReal hp_add(const HPReal& a, const HPReal& b, mpfr_prec_t prec) {
    HPReal r{BigFloat(prec), 0.0};
    mpfr_add(r.value.get(), a.value.get(), b.value.get(), MPFR_RNDN);
    r.error_bound = errbound::up(a.error_bound + b.error_bound + errbound::ulp(r.value.get()));
    return r;
}

HPReal hp_sub(const HPReal& a, const HPReal& b, mpfr_prec_t prec) {
    HPReal r{BigFloat(prec), 0.0};
    mpfr_sub(r.value.get(), a.value.get(), b.value.get(), MPFR_RNDN);
    r.error_bound = errbound::up(a.error_bound + b.error_bound + errbound::ulp(r.value.get()));
    return r;
}

HPReal hp_mul(const HPReal& a, const HPReal& b, mpfr_prec_t prec) {
    HPReal r{BigFloat(prec), 0.0};
    mpfr_mul(r.value.get(), a.value.get(), b.value.get(), MPFR_RNDN);
    double ma = errbound::mag(a.value.get());
    double mb = errbound::mag(b.value.get());
    r.error_bound = errbound::up(ma * b.error_bound + mb * a.error_bound +
                                 a.error_bound * b.error_bound + errbound::ulp(r.value.get()));
    return r;
}

HPReal hp_neg(const HPReal& a) {
    HPReal r = a;
    mpfr_neg(r.value.get(), r.value.get(), MPFR_RNDN);
    return r;
}

HPReal hp_scale(const Rational& q, const HPReal& a, mpfr_prec_t prec) {
    HPReal r{BigFloat(prec), 0.0};
    BigFloat qf = BigFloat::of_rational(q, prec);
    mpfr_mul(r.value.get(), a.value.get(), qf.get(), MPFR_RNDN);
    double mq = std::fabs(q.get_d()) * (1 + 1e-14) + 1e-290;
    r.error_bound = errbound::up(mq * a.error_bound +
                                 errbound::mag(a.value.get()) * errbound::ulp(qf.get()) +
                                 errbound::ulp(r.value.get()));
    return r;
}

double hp_abs_diff(const HPReal& a, const HPReal& b) {
    BigFloat d(std::max(a.value.prec(), b.value.prec()));
    mpfr_sub(d.get(), a.value.get(), b.value.get(), MPFR_RNDN);
    return errbound::up(errbound::mag(d.get()) + errbound::ulp(d.get()));
}

}  // namespace rootzeta
