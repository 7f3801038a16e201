#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rootzeta/expr.hpp"
#include "rootzeta/lattice.hpp"
#include "rootzeta/weyl.hpp"

// The explicit functional relations for the six-form double sum: the I_j
// coefficient tables, the symmetric-sum identity they satisfy, the closed
// forms they imply, and the verification harness tying symbolic results to
// the numeric evaluator.

namespace rootzeta {

struct CatalogMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct TableContext {
    long k = 0, sigma = 0, rho = 0, omega = 0;
    long p = 0, q = 0, r = 0, u = 0, v = 0;
};

// a_l(j) for l = 1..12, j = 1..8, and b_l(j) for l in {1,4,5,7,8,11,12}.
long coeff_a(int l, int j, const TableContext& ctx);
long coeff_b(int l, int j, const TableContext& ctx);

// I_j = A_j + B_{1j} + B_{2j} as an exact expression over raw zeta/phi
// symbols, with s instantiated to a concrete integer. Every zeta or phi
// argument must come out >= 2, else ArgumentOutOfRange.
ZetaExpr compute_Ij(int j, long p, long q, long r, long u, long v, long s);

// sum of all eight I_j
ZetaExpr compute_I_sum(long p, long q, long r, long u, long v, long s);

struct Relation {
    std::vector<SignedTerm> lhs;  // signed six-form tuples
    ZetaExpr rhs;                 // normalized; lhs total equals rhs
    int free_slot = 2;            // tuple slot holding the instantiated variable
    long s_value = 0;
    std::string name;
};

// The six-term identity: sum of signed tuples of (p,s,q,r,u,v) under the
// I = {2} symmetrization equals -(I_1 + ... + I_8).
Relation fn_rel(long p, long q, long r, long u, long v, long s);

struct KnownValue {
    ExponentTuple args;
    ZetaExpr expr;  // normalized
    std::string source;
};

// Closed form for the family (2a, b, b, 2c-1, d, d): the relation at s = b
// collapses to twice the value, so the value is -(1/2) sum I_j.
KnownValue closed_form_special(long a, long b, long c, long d);

// Right-hand side of the I = {1} six-term relation with exponent pattern
// (s, 2, 1, 1, 1, 1):
//   zeta(2) zeta(s+4) - (111/8 - 2^{-s-1}) zeta(s+6) + (81/4) L(1,chi3) L(s+5,chi3)
ZetaExpr fr01_rhs(long s);
// The equivalent Clausen-sum form of the same right-hand side (reduces to
// fr01_rhs under normalization).
ZetaExpr fr01_rhs_clausen_form(long s);

struct ChainClosedForms {
    ZetaExpr sigma_sharp;      // sum over m>=1, n!=0, m+2n!=0 of m^{-s-1} n^{-4} (m+2n)^{-1}
    ZetaExpr sigma11;          // same with forms (m+n)(m+2n) and n^{-3}
    ZetaExpr sigma21;          // same with form (m+n) and n^{-4}
    ZetaExpr a2_combination;   // closed form of zeta2(s+1,4,1;A2)+zeta2(4,s+1,1;A2)-zeta2(1,s+1,4;A2)
};
ChainClosedForms partial_fraction_chain(long s);

// The eight catalogued closed-form values. Loaded from the JSON catalog
// (bundled copy when path is empty) and re-derived independently through
// closed_form_special / fr01_rhs; any exact mismatch throws CatalogMismatch.
std::vector<KnownValue> catalog(const std::string& path = "");

struct VerifyReport {
    std::string target;
    HPReal lhs, rhs;
    double diff = 0, tol = 0;
    bool pass = false;
    double wall_ms = 0;
};

VerifyReport verify(const KnownValue& kv, const SummationConfig& cfg, double tol);
VerifyReport verify(const Relation& rel, const SummationConfig& cfg, double tol);

// zeta_G2 with process-wide memoization keyed by (tuple, cfg); the verify
// suites revisit the same tuples many times.
HPReal zeta_G2_cached(const ExponentTuple& t, const SummationConfig& cfg);

}  // namespace rootzeta
