#pragma once

#include <gmpxx.h>

#include <span>
#include <string>
#include <utility>
#include <vector>

// Exact rational building blocks: generalized binomials, Bernoulli numbers
// and polynomials, and sequence transforms in the ring Q[pi^2].

namespace rootzeta {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(long num, long den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q);

// Generalized binomial coefficient: n(n-1)...(n-k+1)/k!. The upper argument
// may be negative or smaller than k; the result is always an integer.
// Returns 0 for k < 0.
Integer binomial(long n, long k);

// B_n with the B_1 = -1/2 convention (generating function t e^{xt}/(e^t - 1)).
Rational bernoulli_number(long n);

// Dense univariate polynomial over Q, trailing zeros trimmed.
class RationalPoly {
public:
    RationalPoly() = default;
    explicit RationalPoly(std::vector<Rational> coeffs);
    static RationalPoly constant(const Rational& c);

    bool is_zero() const { return c_.size() == 0; }
    // degree of the zero polynomial is -1
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    Rational coeff(long i) const;
    const std::vector<Rational>& coeffs() const { return c_; }

    Rational eval(const Rational& x) const;
    // multiply by c * x^shift
    RationalPoly scaled_shift(const Rational& c, long shift) const;
    std::string str(const std::string& var = "x") const;

    friend RationalPoly operator+(const RationalPoly&, const RationalPoly&);
    friend RationalPoly operator-(const RationalPoly&, const RationalPoly&);
    friend RationalPoly operator*(const RationalPoly&, const RationalPoly&);
    friend bool operator==(const RationalPoly&, const RationalPoly&) = default;

private:
    void trim();
    std::vector<Rational> c_;
};

// Exact coefficient list of B_n(x).
RationalPoly bernoulli_polynomial(long n);

// Polynomial in the formal variable pi^2; index k is the coefficient of
// (pi^2)^k. (i*pi)^{2j} is encoded as (-1)^j (pi^2)^j, so everything stays
// in Q[pi^2].
using PiPolynomial = RationalPoly;

// zeta(2k) = zeta_even_rational(k) * pi^{2k}, exact; k = 0 gives -1/2.
Rational zeta_even_rational(long k);

// Forward transform: given R_0..R_m, build
//   P_m = sum_{j<=m/2} R_{m-2j} (-1)^j (pi^2)^j / (2j)!
//   Q_m = sum_{j<=m/2} R_{m-2j} (-1)^j (pi^2)^j / (2j+1)!
std::pair<PiPolynomial, PiPolynomial> pi_convolution_pair(std::span<const PiPolynomial> R, long m);

// Checks, exactly in Q[pi^2], for explicitly supplied P/Q sequences:
//   P_m + 2 sum_{tau<=m/2} zeta(2 tau) Q_{m-2tau} = 0          (m <= 2h)
//   Q_{2g} = (2/pi^2) sum_{tau<=g} (2^{2g-2tau+2}-1) zeta(2g-2tau+2) P_{2tau}   (g <= h)
bool pi_convolution_identities_hold(std::span<const PiPolynomial> P, std::span<const PiPolynomial> Q,
                             long h);

// Builds P/Q from R via pi_convolution_pair and runs the identity check above.
bool pi_convolution_identities_check(std::span<const PiPolynomial> R, long h);

}  // namespace rootzeta
