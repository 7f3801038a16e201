#pragma once

#include <json.hpp>

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "rootzeta/functions.hpp"

// Exact Q-linear combinations of products of zeta-type constants. The
// canonical basis after normalize() is { pi^k, zeta(odd), L(n,chi3), sqrt3,
// Clausen values whose argument denominator is not 1, 2, 3 or 6 }.

namespace rootzeta {

struct BasisConst {
    enum class Kind {
        pi_pow,     // pi^n
        sqrt3,      // sqrt(3); squares to 3
        zeta_odd,   // zeta(n), odd n >= 3 (canonical)
        zeta_raw,   // zeta(n), any n >= 0 except 1 (pre-normalization)
        phi_raw,    // phi(n) = (2^{1-n}-1) zeta(n) (pre-normalization)
        l_chi3,     // L(n, chi3), n >= 1
        clausen_c,  // C_r(x)
        clausen_s,  // S_r(x)
    };
    Kind kind;
    long n = 0;
    Rational x;  // clausen argument, in [0,1)

    static BasisConst pi_pow(long k) { return {Kind::pi_pow, k, {}}; }
    static BasisConst sqrt3() { return {Kind::sqrt3, 0, {}}; }
    static BasisConst zeta(long n) { return {Kind::zeta_raw, n, {}}; }
    static BasisConst zeta_odd(long n) { return {Kind::zeta_odd, n, {}}; }
    static BasisConst phi(long n) { return {Kind::phi_raw, n, {}}; }
    static BasisConst l_chi3(long n) { return {Kind::l_chi3, n, {}}; }
    static BasisConst clausen_c(long r, const Rational& x) { return {Kind::clausen_c, r, x}; }
    static BasisConst clausen_s(long r, const Rational& x) { return {Kind::clausen_s, r, x}; }

    std::string str() const;

    friend bool operator==(const BasisConst& a, const BasisConst& b) {
        return a.kind == b.kind && a.n == b.n && mpq_cmp(a.x.get_mpq_t(), b.x.get_mpq_t()) == 0;
    }
    friend bool operator<(const BasisConst& a, const BasisConst& b) {
        if (a.kind != b.kind) return a.kind < b.kind;
        if (a.n != b.n) return a.n < b.n;
        return mpq_cmp(a.x.get_mpq_t(), b.x.get_mpq_t()) < 0;
    }
};

// Sorted multiset of basis constants; at most one pi_pow and one sqrt3 entry.
using Monomial = std::vector<BasisConst>;

class ZetaExpr {
public:
    ZetaExpr() = default;
    static ZetaExpr scalar(const Rational& c);
    static ZetaExpr sym(const BasisConst& b);
    static ZetaExpr term(const Rational& c, Monomial m);

    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const std::map<Monomial, Rational>& terms() const { return terms_; }

    void add_term(const Rational& c, Monomial m);

    friend ZetaExpr operator+(const ZetaExpr& a, const ZetaExpr& b);
    friend ZetaExpr operator-(const ZetaExpr& a, const ZetaExpr& b);
    friend ZetaExpr operator*(const ZetaExpr& a, const ZetaExpr& b);
    ZetaExpr scaled(const Rational& c) const;
    friend ZetaExpr operator-(const ZetaExpr& a);
    friend bool operator==(const ZetaExpr& a, const ZetaExpr& b) { return a.terms_ == b.terms_; }

    std::string str() const;

private:
    std::map<Monomial, Rational> terms_;
};

// Rewrites every raw symbol to the canonical basis: phi(n) -> rational *
// zeta(n); zeta(even) -> rational * pi power; zeta(0) -> -1/2; Clausen values
// at denominators 1, 2, 3, 6 -> zeta / L(chi3) forms. With deep = true,
// L(1,chi3) is additionally rewritten to pi*sqrt3/9 so that mixed styles
// compare equal. Idempotent.
ZetaExpr normalize(const ZetaExpr& e, bool deep = false);

// Exact structural equality of deep-normalized forms.
bool expr_equal(const ZetaExpr& a, const ZetaExpr& b);

HPReal eval_numeric(const ZetaExpr& e, const SummationConfig& cfg);

enum class ExprStyle {
    canonical,  // pi powers as "pi^k"
    zeta_even,  // even pi powers rendered as zeta(2k) with adjusted coefficient
};

nlohmann::json expr_to_json(const ZetaExpr& e, ExprStyle style = ExprStyle::zeta_even);
ZetaExpr expr_from_json(const nlohmann::json& j);

}  // namespace rootzeta
