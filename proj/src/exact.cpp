#include "rootzeta/exact.hpp"

#include <mutex>
#include <stdexcept>

namespace rootzeta {

std::string to_string(const Rational& q) {
    return q.get_str();
}

Integer binomial(long n, long k) {
    if (k < 0) return 0;
    Integer num = 1;
    for (long i = 0; i < k; ++i) num *= Integer(n - i);
    Integer den = 1;
    for (long i = 2; i <= k; ++i) den *= i;
    // falling factorial over k! is always integral
    return num / den;
}

Rational bernoulli_number(long n) {
    if (n < 0) throw std::invalid_argument("bernoulli_number: negative index");
    static std::vector<Rational> cache{Rational(1)};
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    while (static_cast<long>(cache.size()) <= n) {
        long m = static_cast<long>(cache.size());
        // sum_{k<m} C(m+1,k) B_k = -C(m+1,m) B_m
        Rational acc(0);
        for (long k = 0; k < m; ++k) acc += Rational(binomial(m + 1, k)) * cache[k];
        Rational b = -acc / Rational(m + 1);
        b.canonicalize();
        cache.push_back(b);
    }
    return cache[n];
}

RationalPoly::RationalPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
    for (auto& q : c_) q.canonicalize();
    trim();
}

RationalPoly RationalPoly::constant(const Rational& c) {
    return RationalPoly(std::vector<Rational>{c});
}

void RationalPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational RationalPoly::coeff(long i) const {
    if (i < 0 || i >= static_cast<long>(c_.size())) return Rational(0);
    return c_[i];
}

Rational RationalPoly::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    acc.canonicalize();
    return acc;
}

RationalPoly RationalPoly::scaled_shift(const Rational& c, long shift) const {
    if (c == 0 || is_zero()) return {};
    std::vector<Rational> out(c_.size() + shift, Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) out[i + shift] = c_[i] * c;
    return RationalPoly(std::move(out));
}

RationalPoly operator+(const RationalPoly& a, const RationalPoly& b) {
    std::vector<Rational> out(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (size_t i = 0; i < out.size(); ++i) out[i] = a.coeff(i) + b.coeff(i);
    return RationalPoly(std::move(out));
}

RationalPoly operator-(const RationalPoly& a, const RationalPoly& b) {
    std::vector<Rational> out(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (size_t i = 0; i < out.size(); ++i) out[i] = a.coeff(i) - b.coeff(i);
    return RationalPoly(std::move(out));
}

RationalPoly operator*(const RationalPoly& a, const RationalPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> out(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    return RationalPoly(std::move(out));
}

std::string RationalPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string s;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        if (!s.empty()) s += " + ";
        s += c_[i].get_str();
        if (i >= 1) s += "*" + var + (i > 1 ? "^" + std::to_string(i) : "");
    }
    return s;
}

RationalPoly bernoulli_polynomial(long n) {
    if (n < 0) throw std::invalid_argument("bernoulli_polynomial: negative index");
    // B_n(x) = sum_k C(n,k) B_k x^{n-k}
    std::vector<Rational> c(n + 1, Rational(0));
    for (long k = 0; k <= n; ++k) c[n - k] = Rational(binomial(n, k)) * bernoulli_number(k);
    return RationalPoly(std::move(c));
}

Rational zeta_even_rational(long k) {
    if (k < 0) throw std::invalid_argument("zeta_even_rational: negative index");
    // zeta(2k) = (-1)^{k+1} B_{2k} (2 pi)^{2k} / (2 (2k)!)
    Rational num = bernoulli_number(2 * k);
    Integer two_pow;
    mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, static_cast<unsigned long>(2 * k));
    Integer fact;
    mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(2 * k));
    Rational q = num * Rational(two_pow) / (Rational(2) * Rational(fact));
    if (k % 2 == 0) q = -q;
    q.canonicalize();
    return q;
}

static Rational inv_factorial(long n) {
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return Rational(1) / Rational(f);
}

std::pair<PiPolynomial, PiPolynomial> pi_convolution_pair(std::span<const PiPolynomial> R, long m) {
    if (m < 0 || m >= static_cast<long>(R.size()))
        throw std::invalid_argument("pi_convolution_pair: R not defined up to m");
    PiPolynomial P, Q;
    for (long j = 0; 2 * j <= m; ++j) {
        Rational sgn = (j % 2 == 0) ? Rational(1) : Rational(-1);
        P = P + R[m - 2 * j].scaled_shift(sgn * inv_factorial(2 * j), j);
        Q = Q + R[m - 2 * j].scaled_shift(sgn * inv_factorial(2 * j + 1), j);
    }
    return {P, Q};
}

bool pi_convolution_identities_hold(std::span<const PiPolynomial> P, std::span<const PiPolynomial> Q,
                             long h) {
    if (static_cast<long>(P.size()) <= 2 * h || static_cast<long>(Q.size()) <= 2 * h)
        throw std::invalid_argument("pi_convolution_identities_hold: sequences shorter than 2h");
    for (long m = 0; m <= 2 * h; ++m) {
        PiPolynomial rhs;
        for (long tau = 0; 2 * tau <= m; ++tau)
            rhs = rhs + Q[m - 2 * tau].scaled_shift(Rational(-2) * zeta_even_rational(tau), tau);
        if (!(P[m] == rhs)) return false;
    }
    for (long g = 0; g <= h; ++g) {
        // (2/pi^2) (2^{2g-2tau+2}-1) zeta(2g-2tau+2) P_{2tau}
        //   = 2 (2^{2(g-tau+1)}-1) q_{g-tau+1} (pi^2)^{g-tau} P_{2tau}
        PiPolynomial rhs;
        for (long tau = 0; tau <= g; ++tau) {
            long a = g - tau + 1;
            Integer pow2;
            mpz_ui_pow_ui(pow2.get_mpz_t(), 2, static_cast<unsigned long>(2 * a));
            Rational c = Rational(2) * Rational(pow2 - 1) * zeta_even_rational(a);
            rhs = rhs + P[2 * tau].scaled_shift(c, g - tau);
        }
        if (!(Q[2 * g] == rhs)) return false;
    }
    return true;
}

bool pi_convolution_identities_check(std::span<const PiPolynomial> R, long h) {
    if (static_cast<long>(R.size()) <= 2 * h)
        throw std::invalid_argument("pi_convolution_identities_check: R shorter than 2h");
    std::vector<PiPolynomial> P, Q;
    for (long m = 0; m <= 2 * h; ++m) {
        auto [p, q] = pi_convolution_pair(R, m);
        P.push_back(p);
        Q.push_back(q);
    }
    return pi_convolution_identities_hold(P, Q, h);
}

}  // namespace rootzeta
