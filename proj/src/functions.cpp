#include "rootzeta/functions.hpp"

#include <cmath>
#include <map>
#include <mutex>

namespace rootzeta {

namespace {

std::mutex g_const_mu;

double pochhammer_d(double s, int k) {
    double p = 1;
    for (int i = 0; i < k; ++i) p *= (s + i);
    return p;
}

// Euler-Maclaurin remainder after p pairs of correction terms, bounded by
// twice the first omitted term ((n+a)^{-s} is completely monotone for s > 0).
double em_remainder_bound(double s, double a, long M, int p) {
    double b = std::fabs(mpq_class(bernoulli_number(2 * p + 2)).get_d());
    double fact = 1;
    for (int i = 2; i <= 2 * p + 2; ++i) fact *= i;
    return 2.0 * b / fact * pochhammer_d(s, 2 * p + 1) * std::pow(M + a, -s - 2 * p - 1);
}

}  // namespace

HPReal const_pi(const SummationConfig& cfg) {
    static std::map<mpfr_prec_t, HPReal> cache;
    std::lock_guard lock(g_const_mu);
    mpfr_prec_t prec = cfg.work_prec();
    auto it = cache.find(prec);
    if (it == cache.end()) {
        HPReal r{BigFloat(prec), 0.0};
        mpfr_const_pi(r.value.get(), MPFR_RNDN);
        r.error_bound = errbound::ulp(r.value.get());
        it = cache.emplace(prec, r).first;
    }
    return it->second;
}

HPReal sqrt_integer(long k, const SummationConfig& cfg) {
    if (k < 0) throw DomainError("sqrt_integer: negative argument");
    HPReal r{BigFloat(cfg.work_prec()), 0.0};
    mpfr_sqrt_ui(r.value.get(), static_cast<unsigned long>(k), MPFR_RNDN);
    r.error_bound = errbound::ulp(r.value.get());
    return r;
}

HPReal hurwitz_zeta(double s, const Rational& a, const SummationConfig& cfg) {
    cfg.validate();
    if (!(s > 1)) throw DomainError("hurwitz_zeta: requires s > 1");
    if (!(a > 0 && a <= 1)) throw DomainError("hurwitz_zeta: requires 0 < a <= 1");

    const int p = 8;
    const double ad = a.get_d();
    long M = 16;
    while (em_remainder_bound(s, ad, M, p) > cfg.target_tol / 4 && M < (1L << 20)) M *= 2;
    double rem = em_remainder_bound(s, ad, M, p);

    mpfr_prec_t w = cfg.work_prec();
    BigFloat acc(w), term(w), base(w), sexp(w), tmp(w);
    mpfr_set_d(sexp.get(), -s, MPFR_RNDN);  // s is carried exactly as a double
    double absacc = 0;

    // sum_{n<M} (n+a)^{-s}
    for (long n = 0; n < M; ++n) {
        Rational na = Rational(n) + a;
        mpfr_set_q(base.get(), na.get_mpq_t(), MPFR_RNDN);
        mpfr_pow(term.get(), base.get(), sexp.get(), MPFR_RNDN);
        mpfr_add(acc.get(), acc.get(), term.get(), MPFR_RNDN);
        absacc += std::fabs(mpfr_get_d(term.get(), MPFR_RNDN));
    }
    Rational Ma = Rational(M) + a;
    mpfr_set_q(base.get(), Ma.get_mpq_t(), MPFR_RNDN);

    // (M+a)^{1-s}/(s-1)
    mpfr_set_d(tmp.get(), 1 - s, MPFR_RNDN);
    mpfr_pow(term.get(), base.get(), tmp.get(), MPFR_RNDN);
    mpfr_set_d(tmp.get(), s - 1, MPFR_RNDN);
    mpfr_div(term.get(), term.get(), tmp.get(), MPFR_RNDN);
    mpfr_add(acc.get(), acc.get(), term.get(), MPFR_RNDN);
    absacc += std::fabs(mpfr_get_d(term.get(), MPFR_RNDN));

    // (M+a)^{-s}/2
    mpfr_pow(term.get(), base.get(), sexp.get(), MPFR_RNDN);
    mpfr_div_ui(term.get(), term.get(), 2, MPFR_RNDN);
    mpfr_add(acc.get(), acc.get(), term.get(), MPFR_RNDN);
    absacc += std::fabs(mpfr_get_d(term.get(), MPFR_RNDN));

    // sum_j B_{2j}/(2j)! (s)_{2j-1} (M+a)^{-s-2j+1}
    BigFloat powv(w);
    for (int j = 1; j <= p; ++j) {
        Integer fact;
        mpz_fac_ui(fact.get_mpz_t(), 2 * j);
        Rational coef = bernoulli_number(2 * j) / Rational(fact);
        mpfr_set_q(term.get(), coef.get_mpq_t(), MPFR_RNDN);
        for (int i = 0; i < 2 * j - 1; ++i) {
            mpfr_set_d(tmp.get(), s + i, MPFR_RNDN);
            mpfr_mul(term.get(), term.get(), tmp.get(), MPFR_RNDN);
        }
        mpfr_set_d(tmp.get(), -s - 2 * j + 1, MPFR_RNDN);
        mpfr_pow(powv.get(), base.get(), tmp.get(), MPFR_RNDN);
        mpfr_mul(term.get(), term.get(), powv.get(), MPFR_RNDN);
        mpfr_add(acc.get(), acc.get(), term.get(), MPFR_RNDN);
        absacc += std::fabs(mpfr_get_d(term.get(), MPFR_RNDN));
    }

    HPReal out{BigFloat(static_cast<mpfr_prec_t>(cfg.precision_bits)), 0.0};
    mpfr_set(out.value.get(), acc.get(), MPFR_RNDN);
    // rounding: each of ~(M+2p+16) terms contributes O(|term|) * 2^{-w} through
    // the pow/mul/add chain; (|s|+24) covers the relative error amplification
    double rounding = (absacc + 1) * (std::fabs(s) + 24) *
                      std::ldexp(1.0, static_cast<int>(-w + 4)) * (M + 64);
    out.error_bound = errbound::up(rem + rounding + errbound::ulp(out.value.get()));
    return out;
}

HPReal riemann_zeta(double s, const SummationConfig& cfg) {
    cfg.validate();
    if (s == 0.0) return hp_from_rational(make_rational(-1, 2), cfg.precision_bits);
    if (!(s > 1)) throw DomainError("riemann_zeta: requires s > 1 or s = 0");
    return hurwitz_zeta(s, Rational(1), cfg);
}

HPReal phi(double s, const SummationConfig& cfg) {
    cfg.validate();
    if (s == 0.0) return hp_from_rational(make_rational(-1, 2), cfg.precision_bits);
    if (!(s > 1)) throw DomainError("phi: requires s > 1 or s = 0");
    HPReal z = riemann_zeta(s, cfg);
    mpfr_prec_t w = cfg.work_prec();
    if (s == std::floor(s) && s < 1e6) {
        // exact rational 2^{1-s} - 1
        long n = static_cast<long>(s);
        Integer pw;
        mpz_ui_pow_ui(pw.get_mpz_t(), 2, static_cast<unsigned long>(n - 1));
        Rational c = Rational(1) / Rational(pw) - 1;
        return hp_scale(c, z, cfg.precision_bits);
    }
    HPReal c{BigFloat(w), 0.0};
    mpfr_set_d(c.value.get(), 1 - s, MPFR_RNDN);
    mpfr_ui_pow(c.value.get(), 2, c.value.get(), MPFR_RNDN);
    mpfr_sub_ui(c.value.get(), c.value.get(), 1, MPFR_RNDN);
    c.error_bound = 2 * errbound::ulp(c.value.get());
    return hp_mul(c, z, cfg.precision_bits);
}

HPReal dirichlet_L_chi3(double s, const SummationConfig& cfg) {
    cfg.validate();
    if (s == 1.0) {
        // L(1, chi3) = pi / (3 sqrt 3) = pi sqrt(3) / 9
        HPReal p = const_pi(cfg);
        HPReal r3 = sqrt_integer(3, cfg);
        HPReal r = hp_mul(p, r3, cfg.work_prec());
        return hp_scale(make_rational(1, 9), r, cfg.precision_bits);
    }
    if (!(s > 1)) throw DomainError("dirichlet_L_chi3: requires s >= 1");
    HPReal za = hurwitz_zeta(s, make_rational(1, 3), cfg);
    HPReal zb = hurwitz_zeta(s, make_rational(2, 3), cfg);
    HPReal d = hp_sub(za, zb, cfg.work_prec());
    if (s == std::floor(s) && s < 1e6) {
        Integer pw;
        mpz_ui_pow_ui(pw.get_mpz_t(), 3, static_cast<unsigned long>(s));
        return hp_scale(Rational(1) / Rational(pw), d, cfg.precision_bits);
    }
    HPReal c{BigFloat(cfg.work_prec()), 0.0};
    mpfr_set_d(c.value.get(), -s, MPFR_RNDN);
    mpfr_ui_pow(c.value.get(), 3, c.value.get(), MPFR_RNDN);
    c.error_bound = 2 * errbound::ulp(c.value.get());
    return hp_mul(c, d, cfg.precision_bits);
}

namespace {

// cos/sin(2 pi t / q) with propagated bounds; 0 <= t < q.
HPReal trig_of_fraction(ClausenKind kind, long t, long q, const SummationConfig& cfg) {
    mpfr_prec_t w = cfg.work_prec();
    if (t == 0)
        return hp_from_long(kind == ClausenKind::cosine ? 1 : 0, w);
    if (2 * t == q)
        return hp_from_long(kind == ClausenKind::cosine ? -1 : 0, w);
    HPReal pi = const_pi(cfg);
    HPReal angle = hp_scale(make_rational(2 * t, q), pi, w);
    HPReal r{BigFloat(w), 0.0};
    if (kind == ClausenKind::cosine)
        mpfr_cos(r.value.get(), angle.value.get(), MPFR_RNDN);
    else
        mpfr_sin(r.value.get(), angle.value.get(), MPFR_RNDN);
    // |d trig| <= |d angle|
    r.error_bound = errbound::up(angle.error_bound + errbound::ulp(r.value.get()));
    return r;
}

}  // namespace

HPReal clausen(ClausenKind kind, long r, const Rational& x, const SummationConfig& cfg) {
    cfg.validate();
    if (!(x >= 0 && x < 1)) throw DomainError("clausen: x must lie in [0,1)");
    if (r < 1) throw DomainError("clausen: order must be >= 1");
    if (r == 1) {
        if (kind == ClausenKind::cosine) throw DomainError("clausen: C_1 diverges");
        if (x == 0) throw DomainError("clausen: S_1(0) requires x != 0");
        // S_1(x) = pi (1 - 2x) / 2 on (0,1)
        HPReal pi = const_pi(cfg);
        Rational c = (Rational(1) - Rational(2) * x) / 2;
        return hp_scale(c, pi, cfg.precision_bits);
    }
    long q = static_cast<long>(x.get_den().get_si());
    long p = static_cast<long>(x.get_num().get_si());
    mpfr_prec_t w = cfg.work_prec();
    SummationConfig inner = cfg;
    inner.target_tol = cfg.target_tol / (2.0 * q);
    HPReal acc = hp_from_long(0, w);
    for (long j = 1; j <= q; ++j) {
        long t = (j * p) % q;
        HPReal trig = trig_of_fraction(kind, t, q, cfg);
        if (trig.value.is_zero() && trig.error_bound < 1e-200) continue;
        HPReal hz = hurwitz_zeta(r, make_rational(j, q), inner);
        acc = hp_add(acc, hp_mul(trig, hz, w), w);
    }
    Integer qpw;
    mpz_ui_pow_ui(qpw.get_mpz_t(), static_cast<unsigned long>(q), static_cast<unsigned long>(r));
    return hp_scale(Rational(1) / Rational(qpw), acc, cfg.precision_bits);
}

bool lerch_check(long k, const Rational& theta, const SummationConfig& cfg, double* diff_out) {
    cfg.validate();
    if (k < 2) throw DomainError("lerch_check: requires k >= 2");
    Rational frac = theta;
    // reduce to {theta} = theta - [theta]
    {
        Integer fl;
        mpz_fdiv_q(fl.get_mpz_t(), theta.get_num().get_mpz_t(), theta.get_den().get_mpz_t());
        frac = theta - Rational(fl);
    }
    mpfr_prec_t w = cfg.work_prec();

    // paired series: even k -> 2 C_k({theta}), odd k -> 2 S_k({theta})
    ClausenKind kind = (k % 2 == 0) ? ClausenKind::cosine : ClausenKind::sine;
    HPReal lhs;
    if (kind == ClausenKind::sine && frac == 0)
        lhs = hp_from_long(0, w);
    else
        lhs = hp_scale(Rational(2), clausen(kind, k, frac, cfg), w);

    // (-1)^{floor(k/2)} (2 pi)^k / k! * B_k({theta})
    HPReal pi = const_pi(cfg);
    HPReal pw{BigFloat(w), 0.0};
    mpfr_mul_ui(pw.value.get(), pi.value.get(), 2, MPFR_RNDN);
    mpfr_pow_si(pw.value.get(), pw.value.get(), k, MPFR_RNDN);
    pw.error_bound = errbound::up((2 * k + 2) * errbound::ulp(pw.value.get()) +
                                  2 * k * pi.error_bound * errbound::mag(pw.value.get()));
    Integer fact;
    mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(k));
    Rational c = bernoulli_polynomial(k).eval(frac) / Rational(fact);
    if ((k / 2) % 2 != 0) c = -c;
    HPReal rhs = hp_scale(c, pw, w);

    HPReal resid = hp_add(lhs, rhs, w);
    double resid_mag = errbound::mag(resid.value.get());
    if (diff_out) *diff_out = errbound::up(resid_mag);
    return resid_mag <= errbound::up(resid.error_bound);
}

}  // namespace rootzeta
