#pragma once

#include "rootzeta/bigfloat.hpp"
#include "rootzeta/exact.hpp"

// One-dimensional series with rigorous bounds: Riemann and Hurwitz zeta via
// Euler-Maclaurin, the alternating zeta phi, L(s,chi3), Clausen-type sums,
// and the symmetric-limit exponential-sum identity check.

namespace rootzeta {

// pi and sqrt(k) at cfg precision (cached per precision).
HPReal const_pi(const SummationConfig& cfg);
HPReal sqrt_integer(long k, const SummationConfig& cfg);

// zeta(s) for real s > 1; s = 0 returns exactly -1/2.
HPReal riemann_zeta(double s, const SummationConfig& cfg);

// zeta(s, a) for real s > 1 and rational 0 < a <= 1.
HPReal hurwitz_zeta(double s, const Rational& a, const SummationConfig& cfg);

// phi(s) = sum (-1)^m m^{-s} = (2^{1-s} - 1) zeta(s); s > 1 or s = 0.
HPReal phi(double s, const SummationConfig& cfg);

// L(s, chi3) for real s >= 1 (chi3 the odd primitive character mod 3).
// s = 1 returns pi/(3 sqrt 3); s > 1 uses 3^{-s} (zeta(s,1/3) - zeta(s,2/3)).
HPReal dirichlet_L_chi3(double s, const SummationConfig& cfg);

enum class ClausenKind { sine, cosine };

// S_r(x) = sum sin(2 pi m x)/m^r or C_r(x) = sum cos(2 pi m x)/m^r for
// rational x in [0,1). Requires r >= 2, except r = 1 with the sine kind and
// x != 0 (closed form pi(1-2x)/2).
HPReal clausen(ClausenKind kind, long r, const Rational& x, const SummationConfig& cfg);

// Checks lim_M sum_{0<|m|<=M} e^{2 pi i m theta} m^{-k} = -(2 pi i)^k/k! B_k({theta})
// for k >= 2, by comparing the paired cosine/sine series against the exact
// Bernoulli-polynomial side. True iff the difference is within the combined
// error bounds. diff_out (optional) receives an upper bound on the difference.
bool lerch_check(long k, const Rational& theta, const SummationConfig& cfg,
                 double* diff_out = nullptr);

}  // namespace rootzeta
