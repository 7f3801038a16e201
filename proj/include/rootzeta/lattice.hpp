#pragma once

#include <array>
#include <set>
#include <span>
#include <vector>

#include "rootzeta/bigfloat.hpp"
#include "rootzeta/weyl.hpp"

// Rank-2 lattice sums with rigorous truncation bounds. Every sum here is of
// the shape  sum 1 / (m^{sm} n^{sn} prod_i (a_i m + b_i n)^{s_i})  over either
// the positive quadrant (m, n >= 1) or the half plane (m >= 1, n in Z, n != 0,
// every listed composite form != 0). Composite coefficients satisfy
// a_i, b_i >= 1. The box is summed exactly; the tail is bounded by sector and
// wall decompositions with explicit constants.

namespace rootzeta {

// Exponent of one slot: a positive integer, or a real > 1 in the single
// designated free slot.
struct Exponent {
    bool integral = true;
    long i = 1;
    double r = 0.0;

    static Exponent integer(long v) { return {true, v, 0.0}; }
    static Exponent real(double v) { return {false, 0, v}; }
    double as_double() const { return integral ? static_cast<double>(i) : r; }
};

struct CompositeForm {
    int a, b;
    Exponent s;
};

struct SumStats {
    long long terms = 0;
    long outer = 0;  // box edge N actually used
};

// sum over m, n >= 1
HPReal quadrant_sum(Exponent sm, Exponent sn, std::span<const CompositeForm> forms,
                    const SummationConfig& cfg, SumStats* stats = nullptr);

// sum over m >= 1, n in Z \ {0}, all listed composite forms nonzero.
// A non-integral exponent is only allowed on the m slot here.
HPReal half_plane_sum(Exponent sm, Exponent sn, std::span<const CompositeForm> forms,
                      const SummationConfig& cfg, SumStats* stats = nullptr);

// Direct box-summation reference paths. quadrant_sum / half_plane_sum route
// single-composite integer-exponent sums through an analytic-inner evaluator
// (the m direction is summed in closed form row by row, which the slow
// exponent profiles need); these expose the plain box for cross-checks.
HPReal quadrant_sum_box(Exponent sm, Exponent sn, std::span<const CompositeForm> forms,
                        const SummationConfig& cfg, SumStats* stats = nullptr);
HPReal half_plane_sum_box(Exponent sm, Exponent sn, std::span<const CompositeForm> forms,
                          const SummationConfig& cfg, SumStats* stats = nullptr);

// Mordell-Tornheim sum: sum m^{-s1} n^{-s2} (m+n)^{-s3}.
// Requires s1+s3 > 2, s2+s3 > 2, s1+s2+s3 > 3.
HPReal tornheim_A2(Exponent s1, Exponent s2, Exponent s3, const SummationConfig& cfg,
                   SumStats* stats = nullptr);

// sum m^{-s1} n^{-s2} (m+n)^{-s3} (m+2n)^{-s4}; all >= 1, weight >= 5.
HPReal zeta_C2(Exponent s1, Exponent s2, Exponent s3, Exponent s4, const SummationConfig& cfg,
               SumStats* stats = nullptr);

using G2Exponents = std::array<Exponent, 6>;

inline G2Exponents g2_exponents(const ExponentTuple& t) {
    G2Exponents e;
    for (int i = 0; i < 6; ++i) e[i] = Exponent::integer(t[i]);
    return e;
}

// sum over m, n >= 1 of the six-form product m, n, m+n, m+2n, m+3n, 2m+3n.
// All exponents >= 1 and total weight >= 7 (documented sufficient criterion
// for absolute convergence; anything weaker is rejected).
HPReal zeta_G2(const G2Exponents& s, const SummationConfig& cfg, SumStats* stats = nullptr);

// Symmetrized sum over { coordinate i >= 1 for i in I, the other coordinate
// free in Z, all six forms nonzero }. I is a nonempty subset of {1,2};
// I = {1,2} degenerates to zeta_G2. Same convergence criterion as zeta_G2.
HPReal s_sum_G2(const std::set<int>& I, const G2Exponents& s, const SummationConfig& cfg,
                SumStats* stats = nullptr);

}  // namespace rootzeta
