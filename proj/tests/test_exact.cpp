#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "rootzeta/exact.hpp"

using namespace rootzeta;

namespace {

// independent oracle: falling factorial / k!
Rational falling_binomial(long n, long k) {
    Rational num(1);
    for (long i = 0; i < k; ++i) num *= Rational(n - i);
    Rational den(1);
    for (long i = 2; i <= k; ++i) den *= Rational(i);
    Rational q = num / den;
    q.canonicalize();
    return q;
}

// independent oracle: Akiyama-Tanigawa transform (different algorithm from
// the recurrence used by the implementation); yields B_n with B_1 = +1/2,
// so flip the sign at n = 1 for the generating-function convention.
Rational bernoulli_at(long n) {
    std::vector<Rational> a(n + 1);
    for (long m = 0; m <= n; ++m) {
        a[m] = Rational(1, m + 1);
        a[m].canonicalize();
        for (long j = m; j >= 1; --j) {
            a[j - 1] = Rational(j) * (a[j - 1] - a[j]);
            a[j - 1].canonicalize();
        }
    }
    return n == 1 ? -a[0] : a[0];
}

}  // namespace

TEST_CASE("generalized binomial") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(7, 0) == 1);
    CHECK(binomial(-11, 0) == 1);
    CHECK(binomial(-3, 2) == 6);  // (-3)(-4)/2
    CHECK(binomial(2, 5) == 0);   // 0 <= n < k
    CHECK(binomial(3, -1) == 0);

    for (long n = -30; n <= 30; ++n)
        for (long k = 0; k <= 15; ++k)
            CHECK(Rational(binomial(n, k)) == falling_binomial(n, k));
}

TEST_CASE("bernoulli numbers") {
    CHECK(bernoulli_number(0) == Rational(1));
    CHECK(bernoulli_number(1) == make_rational(-1, 2));
    CHECK(bernoulli_number(4) == make_rational(-1, 30));
    CHECK(bernoulli_number(12) == make_rational(-691, 2730));
    for (long n = 0; n <= 24; ++n) CHECK(bernoulli_number(n) == bernoulli_at(n));
    // sum_k C(n+1,k) B_k = 0 for n >= 1
    for (long n = 1; n <= 20; ++n) {
        Rational acc(0);
        for (long k = 0; k <= n; ++k) acc += Rational(binomial(n + 1, k)) * bernoulli_number(k);
        CHECK(acc == 0);
    }
    // results are reduced with positive denominator
    for (long n : {4L, 10L, 16L, 22L}) {
        Rational b = bernoulli_number(n);
        Integer g;
        mpz_gcd(g.get_mpz_t(), b.get_num().get_mpz_t(), b.get_den().get_mpz_t());
        CHECK(g == 1);
        CHECK(b.get_den() > 0);
    }
}

TEST_CASE("bernoulli polynomials") {
    CHECK(bernoulli_polynomial(0) == RationalPoly::constant(Rational(1)));
    CHECK(bernoulli_polynomial(1) == RationalPoly({make_rational(-1, 2), Rational(1)}));
    // B_4(x) = x^4 - 2x^3 + x^2 - 1/30
    CHECK(bernoulli_polynomial(4) ==
          RationalPoly({make_rational(-1, 30), Rational(0), Rational(1), Rational(-2),
                        Rational(1)}));
    for (long n = 0; n <= 16; ++n) {
        if (n != 1) CHECK(bernoulli_polynomial(n).eval(Rational(0)) == bernoulli_number(n));
        if (n >= 2)
            CHECK(bernoulli_polynomial(n).eval(Rational(1)) ==
                  bernoulli_polynomial(n).eval(Rational(0)));
    }
}

TEST_CASE("even zeta rationals") {
    CHECK(zeta_even_rational(0) == make_rational(-1, 2));
    CHECK(zeta_even_rational(1) == make_rational(1, 6));    // zeta(2) = pi^2/6
    CHECK(zeta_even_rational(2) == make_rational(1, 90));   // zeta(4) = pi^4/90
    CHECK(zeta_even_rational(3) == make_rational(1, 945));  // zeta(6) = pi^6/945
}

TEST_CASE("pi convolution pair") {
    std::vector<PiPolynomial> R{RationalPoly::constant(Rational(1))};
    auto [p0, q0] = pi_convolution_pair(R, 0);
    CHECK(p0 == RationalPoly::constant(Rational(1)));
    CHECK(q0 == RationalPoly::constant(Rational(1)));

    std::vector<PiPolynomial> ones(3, RationalPoly::constant(Rational(1)));
    auto [p2, q2] = pi_convolution_pair(ones, 2);
    // P_2 = 1 - pi^2/2, Q_2 = 1 - pi^2/6
    CHECK(p2 == RationalPoly({Rational(1), make_rational(-1, 2)}));
    CHECK(q2 == RationalPoly({Rational(1), make_rational(-1, 6)}));

    std::vector<PiPolynomial> arb{RationalPoly::constant(make_rational(3, 7)),
                                  RationalPoly({make_rational(2, 5), Rational(1)})};
    auto [p1, q1] = pi_convolution_pair(arb, 1);
    CHECK(p1 == arb[1]);
    CHECK(q1 == arb[1]);
}

TEST_CASE("pi convolution identities") {
    std::vector<PiPolynomial> e0{RationalPoly::constant(Rational(1))};
    CHECK(pi_convolution_identities_check(e0, 0));

    std::mt19937 rng(20240811);
    std::uniform_int_distribution<long> num(-20, 20), den(1, 12);
    for (int trial = 0; trial < 30; ++trial) {
        long h = 1 + static_cast<long>(rng() % 3);
        std::vector<PiPolynomial> R;
        for (long i = 0; i <= 2 * h; ++i)
            R.push_back(RationalPoly::constant(make_rational(num(rng), den(rng))));
        CHECK(pi_convolution_identities_check(R, h));
    }

    // negative control: perturb the derived P sequence
    {
        std::vector<PiPolynomial> R;
        for (int i = 0; i < 5; ++i) R.push_back(RationalPoly::constant(make_rational(i + 1, 3)));
        std::vector<PiPolynomial> P, Q;
        for (long m = 0; m <= 4; ++m) {
            auto [p, q] = pi_convolution_pair(R, m);
            P.push_back(p);
            Q.push_back(q);
        }
        CHECK(pi_convolution_identities_hold(P, Q, 2));
        P[3] = P[3] + RationalPoly::constant(Rational(1));
        CHECK_FALSE(pi_convolution_identities_hold(P, Q, 2));
    }

    CHECK_THROWS_AS((void)pi_convolution_identities_check(e0, 3), std::invalid_argument);
}
