#include "rootzeta/expr.hpp"

#include <algorithm>
#include <sstream>

namespace rootzeta {

namespace {

Rational pow2_rational(long e) {
    Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e < 0 ? -e : e));
    return e >= 0 ? Rational(p) : Rational(1) / Rational(p);
}

Rational pow3_rational(long e) {
    Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), 3, static_cast<unsigned long>(e < 0 ? -e : e));
    return e >= 0 ? Rational(p) : Rational(1) / Rational(p);
}

// Multiset-merge two monomials, combining pi powers and reducing sqrt3
// squares into the coefficient.
Monomial mul_monomials(const Monomial& a, const Monomial& b, Rational& coeff) {
    Monomial out;
    out.reserve(a.size() + b.size());
    out.insert(out.end(), a.begin(), a.end());
    out.insert(out.end(), b.begin(), b.end());
    std::sort(out.begin(), out.end());
    Monomial merged;
    long pi_exp = 0;
    int sqrt3_count = 0;
    for (auto& s : out) {
        if (s.kind == BasisConst::Kind::pi_pow)
            pi_exp += s.n;
        else if (s.kind == BasisConst::Kind::sqrt3)
            ++sqrt3_count;
        else
            merged.push_back(s);
    }
    coeff *= pow3_rational(sqrt3_count / 2);
    if (sqrt3_count % 2) merged.insert(merged.begin(), BasisConst::sqrt3());
    if (pi_exp != 0) merged.insert(merged.begin(), BasisConst::pi_pow(pi_exp));
    std::sort(merged.begin(), merged.end());
    return merged;
}

}  // namespace

std::string BasisConst::str() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::pi_pow: os << (n == 1 ? "pi" : "pi^" + std::to_string(n)); break;
        case Kind::sqrt3: os << "sqrt3"; break;
        case Kind::zeta_odd:
        case Kind::zeta_raw: os << "zeta(" << n << ")"; break;
        case Kind::phi_raw: os << "phi(" << n << ")"; break;
        case Kind::l_chi3: os << "L(" << n << ",chi3)"; break;
        case Kind::clausen_c: os << "C_" << n << "(" << x.get_str() << ")"; break;
        case Kind::clausen_s: os << "S_" << n << "(" << x.get_str() << ")"; break;
    }
    return os.str();
}

ZetaExpr ZetaExpr::scalar(const Rational& c) {
    ZetaExpr e;
    e.add_term(c, {});
    return e;
}

ZetaExpr ZetaExpr::sym(const BasisConst& b) {
    ZetaExpr e;
    e.add_term(Rational(1), {b});
    return e;
}

ZetaExpr ZetaExpr::term(const Rational& c, Monomial m) {
    ZetaExpr e;
    e.add_term(c, std::move(m));
    return e;
}

void ZetaExpr::add_term(const Rational& c, Monomial m) {
    if (c == 0) return;
    Rational cc = c;
    m = mul_monomials(m, {}, cc);  // canonicalize pi powers / sqrt3 squares
    auto [it, inserted] = terms_.emplace(std::move(m), cc);
    if (!inserted) {
        it->second += cc;
        it->second.canonicalize();
        if (it->second == 0) terms_.erase(it);
    } else {
        it->second.canonicalize();
    }
}

ZetaExpr operator+(const ZetaExpr& a, const ZetaExpr& b) {
    ZetaExpr out = a;
    for (auto& [m, c] : b.terms_) out.add_term(c, m);
    return out;
}

ZetaExpr operator-(const ZetaExpr& a, const ZetaExpr& b) {
    ZetaExpr out = a;
    for (auto& [m, c] : b.terms_) out.add_term(-c, m);
    return out;
}

ZetaExpr ZetaExpr::scaled(const Rational& c) const {
    ZetaExpr out;
    if (c == 0) return out;
    for (auto& [m, q] : terms_) {
        Rational v = q * c;
        v.canonicalize();
        out.terms_.emplace(m, v);
    }
    return out;
}

ZetaExpr operator-(const ZetaExpr& a) {
    return a.scaled(Rational(-1));
}

ZetaExpr operator*(const ZetaExpr& a, const ZetaExpr& b) {
    ZetaExpr out;
    for (auto& [ma, ca] : a.terms_)
        for (auto& [mb, cb] : b.terms_) {
            Rational c = ca * cb;
            Monomial m = mul_monomials(ma, mb, c);
            out.add_term(c, std::move(m));
        }
    return out;
}

std::string ZetaExpr::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c.get_str();
        for (auto& s : m) os << "*" << s.str();
    }
    return os.str();
}

namespace {

// canonical replacement of a single symbol
ZetaExpr rewrite_symbol(const BasisConst& b, bool deep) {
    using K = BasisConst::Kind;
    switch (b.kind) {
        case K::pi_pow:
        case K::sqrt3:
            return ZetaExpr::sym(b);
        case K::zeta_odd:
            return ZetaExpr::sym(BasisConst::zeta_odd(b.n));
        case K::zeta_raw: {
            if (b.n == 0) return ZetaExpr::scalar(make_rational(-1, 2));
            if (b.n == 1) throw DomainError("normalize: zeta(1) is singular");
            if (b.n % 2 == 1) return ZetaExpr::sym(BasisConst::zeta_odd(b.n));
            return ZetaExpr::term(zeta_even_rational(b.n / 2), {BasisConst::pi_pow(b.n)});
        }
        case K::phi_raw: {
            if (b.n == 0) return ZetaExpr::scalar(make_rational(-1, 2));
            if (b.n == 1) throw DomainError("normalize: phi(1) is not in the basis");
            Rational c = pow2_rational(1 - b.n) - 1;
            return rewrite_symbol(BasisConst::zeta(b.n), deep).scaled(c);
        }
        case K::l_chi3: {
            if (deep && b.n == 1) {
                // L(1,chi3) = pi sqrt3 / 9
                return ZetaExpr::term(make_rational(1, 9),
                                      {BasisConst::pi_pow(1), BasisConst::sqrt3()});
            }
            return ZetaExpr::sym(b);
        }
        case K::clausen_c: {
            long r = b.n;
            if (r < 2) throw DomainError("normalize: C_1 diverges");
            long den = b.x.get_den().get_si();
            if (den == 1)  // x = 0
                return rewrite_symbol(BasisConst::zeta(r), deep);
            if (den == 2)  // x = 1/2
                return rewrite_symbol(BasisConst::zeta(r), deep).scaled(pow2_rational(1 - r) - 1);
            if (den == 3)  // (3^{1-r} - 1)/2 zeta(r)
                return rewrite_symbol(BasisConst::zeta(r), deep)
                    .scaled((pow3_rational(1 - r) - 1) / 2);
            if (den == 6)  // (1 - 2^{1-r})(1 - 3^{1-r})/2 zeta(r)
                return rewrite_symbol(BasisConst::zeta(r), deep)
                    .scaled((Rational(1) - pow2_rational(1 - r)) *
                            (Rational(1) - pow3_rational(1 - r)) / 2);
            return ZetaExpr::sym(b);
        }
        case K::clausen_s: {
            long r = b.n;
            long den = b.x.get_den().get_si();
            long num = b.x.get_num().get_si();
            if (den == 1 || den == 2) return {};  // S_r(0) = S_r(1/2) = 0
            if (den == 3) {
                Rational c = make_rational(num == 1 ? 1 : -1, 2);
                return rewrite_symbol(BasisConst::l_chi3(r), deep)
                    .scaled(c) * ZetaExpr::sym(BasisConst::sqrt3());
            }
            if (den == 6) {
                Rational c = (Rational(1) + pow2_rational(1 - r)) / 2;
                if (num == 5) c = -c;
                return rewrite_symbol(BasisConst::l_chi3(r), deep)
                    .scaled(c) * ZetaExpr::sym(BasisConst::sqrt3());
            }
            return ZetaExpr::sym(b);
        }
    }
    throw std::logic_error("rewrite_symbol: unreachable");
}

}  // namespace

ZetaExpr normalize(const ZetaExpr& e, bool deep) {
    ZetaExpr out;
    for (auto& [m, c] : e.terms()) {
        ZetaExpr prod = ZetaExpr::scalar(c);
        for (auto& s : m) prod = prod * rewrite_symbol(s, deep);
        out = out + prod;
    }
    return out;
}

bool expr_equal(const ZetaExpr& a, const ZetaExpr& b) {
    return normalize(a, true) == normalize(b, true);
}

HPReal eval_numeric(const ZetaExpr& e, const SummationConfig& cfg) {
    cfg.validate();
    mpfr_prec_t w = cfg.work_prec();
    std::map<BasisConst, HPReal> cache;
    auto value_of = [&](const BasisConst& b) -> HPReal {
        auto it = cache.find(b);
        if (it != cache.end()) return it->second;
        HPReal v;
        using K = BasisConst::Kind;
        switch (b.kind) {
            case K::pi_pow: {
                HPReal pi = const_pi(cfg);
                v = hp_from_long(1, w);
                for (long i = 0; i < b.n; ++i) v = hp_mul(v, pi, w);
                break;
            }
            case K::sqrt3: v = sqrt_integer(3, cfg); break;
            case K::zeta_odd:
            case K::zeta_raw:
                v = (b.n == 0) ? hp_from_rational(make_rational(-1, 2), w)
                               : riemann_zeta(static_cast<double>(b.n), cfg);
                break;
            case K::phi_raw: v = phi(static_cast<double>(b.n), cfg); break;
            case K::l_chi3: v = dirichlet_L_chi3(static_cast<double>(b.n), cfg); break;
            case K::clausen_c: v = clausen(ClausenKind::cosine, b.n, b.x, cfg); break;
            case K::clausen_s: v = clausen(ClausenKind::sine, b.n, b.x, cfg); break;
        }
        cache.emplace(b, v);
        return v;
    };
    HPReal acc = hp_from_long(0, w);
    for (auto& [m, c] : e.terms()) {
        HPReal prod = hp_from_rational(c, w);
        for (auto& s : m) prod = hp_mul(prod, value_of(s), w);
        acc = hp_add(acc, prod, w);
    }
    HPReal out{BigFloat(static_cast<mpfr_prec_t>(cfg.precision_bits)), 0.0};
    mpfr_set(out.value.get(), acc.value.get(), MPFR_RNDN);
    out.error_bound = errbound::up(acc.error_bound + errbound::ulp(out.value.get()));
    return out;
}

namespace {

BasisConst parse_symbol(const std::string& s) {
    auto parse_rat = [](const std::string& t) {
        Rational q(t);
        q.canonicalize();
        return q;
    };
    if (s == "pi") return BasisConst::pi_pow(1);
    if (s.rfind("pi^", 0) == 0) return BasisConst::pi_pow(std::stol(s.substr(3)));
    if (s == "sqrt3") return BasisConst::sqrt3();
    if (s.rfind("zeta(", 0) == 0) return BasisConst::zeta(std::stol(s.substr(5)));
    if (s.rfind("phi(", 0) == 0) return BasisConst::phi(std::stol(s.substr(4)));
    if (s.rfind("L(", 0) == 0) {
        auto comma = s.find(',');
        return BasisConst::l_chi3(std::stol(s.substr(2, comma - 2)));
    }
    if (s.rfind("C_", 0) == 0 || s.rfind("S_", 0) == 0) {
        auto open = s.find('(');
        long r = std::stol(s.substr(2, open - 2));
        Rational x = parse_rat(s.substr(open + 1, s.size() - open - 2));
        return s[0] == 'C' ? BasisConst::clausen_c(r, x) : BasisConst::clausen_s(r, x);
    }
    throw std::invalid_argument("parse_symbol: unrecognized symbol " + s);
}

std::vector<std::string> monomial_symbols(const Monomial& m, Rational& coeff, ExprStyle style) {
    std::vector<std::string> out;
    for (auto& s : m) {
        if (style == ExprStyle::zeta_even && s.kind == BasisConst::Kind::pi_pow && s.n >= 2 &&
            s.n % 2 == 0) {
            // pi^{2k} = zeta(2k) / q_k
            coeff /= zeta_even_rational(s.n / 2);
            coeff.canonicalize();
            out.push_back("zeta(" + std::to_string(s.n) + ")");
        } else {
            out.push_back(s.str());
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

nlohmann::json expr_to_json(const ZetaExpr& e, ExprStyle style) {
    // coefficient string -> flat symbol list, or a list of symbol lists when
    // several monomials share the same coefficient
    std::map<std::string, std::vector<std::vector<std::string>>> grouped;
    for (auto& [m, c] : e.terms()) {
        Rational coeff = c;
        auto syms = monomial_symbols(m, coeff, style);
        grouped[coeff.get_str()].push_back(std::move(syms));
    }
    nlohmann::json j = nlohmann::json::object();
    for (auto& [coeff, monos] : grouped) {
        std::sort(monos.begin(), monos.end());
        if (monos.size() == 1)
            j[coeff] = monos[0];
        else
            j[coeff] = monos;
    }
    return j;
}

ZetaExpr expr_from_json(const nlohmann::json& j) {
    ZetaExpr e;
    auto add_mono = [&](const Rational& c, const nlohmann::json& symbols) {
        Monomial m;
        Rational coeff = c;
        for (auto& s : symbols) {
            BasisConst b = parse_symbol(s.get<std::string>());
            m.push_back(b);
        }
        e.add_term(coeff, std::move(m));
    };
    for (auto it = j.begin(); it != j.end(); ++it) {
        Rational c(it.key());
        c.canonicalize();
        const auto& v = it.value();
        if (!v.empty() && v.is_array() && v[0].is_array())
            for (auto& mono : v) add_mono(c, mono);
        else
            add_mono(c, v);
    }
    return e;
}

}  // namespace rootzeta
