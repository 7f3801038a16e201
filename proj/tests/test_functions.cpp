#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "rootzeta/functions.hpp"

using namespace rootzeta;

namespace {

SummationConfig cfg_tol(double tol) {
    SummationConfig cfg;
    cfg.target_tol = tol;
    return cfg;
}

double value_of(const HPReal& v) { return v.to_double(); }

// independent oracle for L(s, chi3), s >= 2: paired character sum
// sum_{k>=0} [(3k+1)^{-s} - (3k+2)^{-s}] with bracket tail <= s (3K)^{-s-1} * K
long double l_chi3_oracle(int s, long K) {
    long double acc = 0;
    for (long k = K - 1; k >= 0; --k)
        acc += powl(3.0L * k + 1, -s) - powl(3.0L * k + 2, -s);
    return acc;
}

}  // namespace

TEST_CASE("riemann zeta") {
    auto cfg = cfg_tol(1e-16);
    // zeta(2) = pi^2/6
    HPReal z2 = riemann_zeta(2, cfg);
    HPReal pi = const_pi(cfg);
    double pi2_6 = value_of(pi) * value_of(pi) / 6;
    CHECK(std::fabs(value_of(z2) - pi2_6) < 1e-15);
    CHECK(z2.error_bound < 1e-16);
    // zeta(0) = -1/2 exactly
    HPReal z0 = riemann_zeta(0, cfg);
    CHECK(value_of(z0) == -0.5);
    CHECK(z0.error_bound == 0.0);
    // zeta(7), frozen from the direct series with integral tail bound
    CHECK(std::fabs(value_of(riemann_zeta(7, cfg)) - 1.0083492773819228) < 1e-14);
    // cross-check against the library zeta for several arguments
    for (double s : {2.0, 3.0, 5.0, 7.0, 11.0, 2.5, 3.75}) {
        HPReal z = riemann_zeta(s, cfg);
        mpfr_t ref;
        mpfr_init2(ref, 160);
        mpfr_set_d(ref, s, MPFR_RNDN);
        mpfr_zeta(ref, ref, MPFR_RNDN);
        double diff = std::fabs(value_of(z) - mpfr_get_d(ref, MPFR_RNDN));
        mpfr_clear(ref);
        CHECK(diff < 1e-15);
    }
    CHECK_THROWS_AS(riemann_zeta(1.0, cfg), DomainError);
    CHECK_THROWS_AS(riemann_zeta(0.5, cfg), DomainError);
    CHECK_THROWS_AS(riemann_zeta(-2, cfg), DomainError);
}

TEST_CASE("hurwitz zeta") {
    auto cfg = cfg_tol(1e-18);
    // direct-sum oracle at s = 4, a = 1/3
    long double direct = 0;
    for (long n = 40000; n >= 0; --n) direct += powl(n + 1.0L / 3, -4);
    HPReal h = hurwitz_zeta(4, make_rational(1, 3), cfg);
    CHECK(std::fabs(value_of(h) - (double)direct) < 1e-12);
    // zeta(s,1) = zeta(s)
    CHECK(std::fabs(value_of(hurwitz_zeta(5, Rational(1), cfg)) -
                    value_of(riemann_zeta(5, cfg))) < 1e-18);
    CHECK_THROWS_AS(hurwitz_zeta(1.0, make_rational(1, 2), cfg), DomainError);
}

TEST_CASE("phi") {
    auto cfg = cfg_tol(1e-16);
    // phi(2) = -pi^2/12
    double pi_v = value_of(const_pi(cfg));
    CHECK(std::fabs(value_of(phi(2, cfg)) + pi_v * pi_v / 12) < 1e-14);
    CHECK(value_of(phi(0, cfg)) == -0.5);
    // alternating-series oracle at s = 3
    long double alt = 0;
    for (long m = 200000; m >= 1; --m) alt += (m % 2 ? -1.0L : 1.0L) * powl(m, -3);
    CHECK(std::fabs(value_of(phi(3, cfg)) - (double)alt) < 1e-10);
    CHECK(std::fabs(value_of(phi(3, cfg)) + 0.9015426773696957) < 1e-14);
    CHECK_THROWS_AS(phi(0.7, cfg), DomainError);
}

TEST_CASE("dirichlet L chi3") {
    auto cfg = cfg_tol(1e-16);
    // class-number closed form at s = 1: pi/(3 sqrt 3)
    double ref1 = value_of(const_pi(cfg)) / (3 * std::sqrt(3.0));
    CHECK(std::fabs(value_of(dirichlet_L_chi3(1, cfg)) - ref1) < 1e-14);
    CHECK(std::fabs(value_of(dirichlet_L_chi3(1, cfg)) - 0.6045997880780726) < 1e-14);
    // paired direct sums
    CHECK(std::fabs(value_of(dirichlet_L_chi3(2, cfg)) - (double)l_chi3_oracle(2, 2000000)) <
          1e-10);
    CHECK(std::fabs(value_of(dirichlet_L_chi3(2, cfg)) - 0.7813024128964863) < 1e-13);
    CHECK(std::fabs(value_of(dirichlet_L_chi3(6, cfg)) - (double)l_chi3_oracle(6, 20000)) < 1e-13);
    CHECK(std::fabs(value_of(dirichlet_L_chi3(6, cfg)) - 0.9845603632536777) < 1e-13);
    CHECK_THROWS_AS(dirichlet_L_chi3(0.9, cfg), DomainError);
}

TEST_CASE("clausen values") {
    auto cfg = cfg_tol(1e-16);
    double pi_v = value_of(const_pi(cfg));
    // cosine at x = 0 degenerates to zeta
    CHECK(std::fabs(value_of(clausen(ClausenKind::cosine, 5, Rational(0), cfg)) -
                    value_of(riemann_zeta(5, cfg))) < 1e-15);
    // C_2(1/3) = -pi^2/18
    CHECK(std::fabs(value_of(clausen(ClausenKind::cosine, 2, make_rational(1, 3), cfg)) +
                    pi_v * pi_v / 18) < 1e-14);
    // S_7(1/3) = (sqrt3/2) L(7, chi3)
    CHECK(std::fabs(value_of(clausen(ClausenKind::sine, 7, make_rational(1, 3), cfg)) -
                    std::sqrt(3.0) / 2 * value_of(dirichlet_L_chi3(7, cfg))) < 1e-14);
    // S_1(x) = pi(1-2x)/2 on (0,1)
    CHECK(std::fabs(value_of(clausen(ClausenKind::sine, 1, make_rational(1, 4), cfg)) -
                    pi_v / 4) < 1e-15);
    // direct trigonometric oracle at a denominator outside {1,2,3,6}
    for (auto [kind, r, num, den] : {std::tuple{ClausenKind::sine, 5L, 1L, 12L},
                                     std::tuple{ClausenKind::cosine, 4L, 3L, 8L},
                                     std::tuple{ClausenKind::sine, 3L, 2L, 5L}}) {
        long double acc = 0;
        const long double twopix = 2.0L * 3.14159265358979323846264338327950288L * num / den;
        for (long m = 4000; m >= 1; --m)
            acc += (kind == ClausenKind::sine ? sinl(m * twopix) : cosl(m * twopix)) * powl(m, -r);
        HPReal v = clausen(kind, r, make_rational(num, den), cfg);
        CHECK(std::fabs(value_of(v) - (double)acc) < 1e-7);
    }
    CHECK_THROWS_AS(clausen(ClausenKind::cosine, 1, make_rational(1, 3), cfg), DomainError);
    CHECK_THROWS_AS(clausen(ClausenKind::sine, 1, Rational(0), cfg), DomainError);
    CHECK_THROWS_AS(clausen(ClausenKind::sine, 3, make_rational(5, 4), cfg), DomainError);
}

TEST_CASE("error bounds honest against closed forms") {
    auto cfg = cfg_tol(1e-20);
    // zeta(2k) must match its rational pi-power within the reported bounds
    for (long k = 1; k <= 6; ++k) {
        HPReal z = riemann_zeta(2 * k, cfg);
        HPReal pi = const_pi(cfg);
        BigFloat ref(cfg.work_prec());
        mpfr_pow_si(ref.get(), pi.value.get(), 2 * k, MPFR_RNDN);
        BigFloat coef = BigFloat::of_rational(zeta_even_rational(k), cfg.work_prec());
        mpfr_mul(ref.get(), ref.get(), coef.get(), MPFR_RNDN);
        BigFloat d(cfg.work_prec());
        mpfr_sub(d.get(), z.value.get(), ref.get(), MPFR_RNDN);
        double diff = std::fabs(d.to_double());
        CHECK(diff <= z.error_bound + (4 * k + 4) * pi.error_bound + 1e-30);
    }
}

TEST_CASE("config validation") {
    SummationConfig cfg;
    cfg.precision_bits = 40;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg.precision_bits = 64;
    cfg.target_tol = 1e-19;  // below 2^(8-64)
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg.target_tol = 1e-12;
    CHECK_NOTHROW(cfg.validate());
}

TEST_CASE("symmetric exponential sum identity") {
    auto cfg = cfg_tol(1e-14);
    for (long k : {2L, 3L, 4L})
        for (auto theta : {Rational(0), make_rational(1, 4), make_rational(1, 3),
                           make_rational(1, 2)}) {
            double diff = 1;
            CHECK(lerch_check(k, theta, cfg, &diff));
            CHECK(diff < 1e-10);
        }
    // integer-part reduction: theta = 7/3 behaves like 1/3
    CHECK(lerch_check(3, make_rational(7, 3), cfg));
    CHECK_THROWS_AS(lerch_check(1, make_rational(1, 3), cfg), DomainError);
}
