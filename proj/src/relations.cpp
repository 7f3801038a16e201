#include "rootzeta/relations.hpp"

#include <chrono>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>

namespace rootzeta {

namespace {

Rational pow_rational(long base, long e) {
    Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(base),
                  static_cast<unsigned long>(e < 0 ? -e : e));
    return e >= 0 ? Rational(p) : Rational(1) / Rational(p);
}

std::string tuple_str(const ExponentTuple& t) {
    std::ostringstream os;
    for (int i = 0; i < 6; ++i) os << (i ? "," : "") << t[i];
    return os.str();
}

}  // namespace

long coeff_a(int l, int j, const TableContext& c) {
    if (j < 1 || j > 8) throw std::invalid_argument("coeff_a: j in 1..8");
    const long k = c.k, sg = c.sigma, rho = c.rho, om = c.omega;
    const long p = c.p, q = c.q, r = c.r, u = c.u, v = c.v;
    const int i = j - 1;
    switch (l) {
        case 1: {
            const long t[8] = {1, v + 1, 1, v, v + 1, v, v, v + 1};
            return t[i];
        }
        case 2: {
            const long t[8] = {p, u, q, u, r, u, r, u};
            return t[i];
        }
        case 3: {
            const long t[8] = {p, p, q, q, r, r, r, r};
            return t[i];
        }
        case 4: {
            const long t[8] = {2 * k + sg, 1, 2 * k + sg, 1, 2 * k + sg, 1, 2 * k + sg, 1};
            return t[i];
        }
        case 5: {
            const long t[8] = {1, 2 * k + sg, 1, 2 * k + sg, 1, 2 * k + sg, 1, 2 * k + sg};
            return t[i];
        }
        case 6: {
            const long t[8] = {p, p, q, q, p, p, q, q};
            return t[i];
        }
        case 7: {
            const long t[8] = {2 * k + sg + rho, 1 + rho, 2 * k + sg + rho, 1 + rho, 1, 1, 1, 1};
            return t[i];
        }
        case 8: {
            const long t[8] = {1, 1, 1, 1, 2 * k + sg + rho, 1 + rho, 2 * k + sg + rho, 1 + rho};
            return t[i];
        }
        case 9: {
            const long t[8] = {q, q, p, p, q, q, p, p};
            return t[i];
        }
        case 10: {
            const long t[8] = {0, 0, sg + rho + om, rho + om, rho, rho, rho + om, rho + om};
            return t[i];
        }
        case 11: {
            const long t[8] = {sg - r - om,
                               sg - r - om,
                               sg - u - rho,
                               -u + 2 * k + 2 * sg - rho - 1,
                               -r + 2 * k + 2 * sg + rho - om - 1,
                               -r + sg + rho - om,
                               sg,
                               sg};
            return t[i];
        }
        case 12: {
            const long t[8] = {-u - v - sg - rho, -u - v + 2 * k - rho - 1, 0, -v - sg,
                               0,                 -v - sg,                  0, -v - sg};
            return t[i];
        }
    }
    throw std::invalid_argument("coeff_a: l in 1..12");
}

long coeff_b(int l, int j, const TableContext& c) {
    if (j < 1 || j > 8) throw std::invalid_argument("coeff_b: j in 1..8");
    const long k = c.k, sg = c.sigma, rho = c.rho, om = c.omega;
    const long r = c.r, u = c.u, v = c.v;
    const int i = j - 1;
    switch (l) {
        case 1: {
            const long t[8] = {1, v + 1, 0, v, v + 1, v, v, v + 1};
            return t[i];
        }
        // b4, b5, b7, b8: as a4, a5, a7, a8 with every 2k+sigma replaced by 1+sigma
        case 4: {
            const long t[8] = {1 + sg, 1, 1 + sg, 1, 1 + sg, 1, 1 + sg, 1};
            return t[i];
        }
        case 5: {
            const long t[8] = {1, 1 + sg, 1, 1 + sg, 1, 1 + sg, 1, 1 + sg};
            return t[i];
        }
        case 7: {
            const long t[8] = {1 + sg + rho, 1 + rho, 1 + sg + rho, 1 + rho, 1, 1, 1, 1};
            return t[i];
        }
        case 8: {
            const long t[8] = {1, 1, 1, 1, 1 + sg + rho, 1 + rho, 1 + sg + rho, 1 + rho};
            return t[i];
        }
        case 11: {
            const long t[8] = {sg - r - om,       sg - r - om,
                               sg - u - rho,      -u + 2 * sg - rho,
                               -r + 2 * sg + rho - om, -r + sg + rho - om,
                               sg,                sg};
            return t[i];
        }
        case 12: {
            const long t[8] = {-u - v + 2 * k - sg - rho - 1,
                               -u - v + 2 * k - rho - 1,
                               0,
                               -v + 2 * k - sg - 1,
                               0,
                               -v + 2 * k - sg - 1,
                               0,
                               -v + 2 * k - sg - 1};
            return t[i];
        }
    }
    throw std::invalid_argument("coeff_b: l in {1,4,5,7,8,11,12}");
}

ZetaExpr compute_Ij(int j, long p, long q, long r, long u, long v, long s) {
    if (p < 1 || q < 1 || r < 1 || u < 1 || v < 1)
        throw std::invalid_argument("compute_Ij: p,q,r,u,v must be positive");
    const long N = s + p + q + r + u + v;
    TableContext ctx;
    ctx.p = p;
    ctx.q = q;
    ctx.r = r;
    ctx.u = u;
    ctx.v = v;

    ZetaExpr out;
    auto zeta_argument = [&](long k) {
        long arg = N - 2 * k;
        if (arg < 2)
            throw ArgumentOutOfRange("compute_Ij: zeta argument " + std::to_string(arg) +
                                     " below 2");
        return arg;
    };

    // A_j
    {
        const long a2 = coeff_a(2, j, ctx);
        for (long k = 0; 2 * k <= a2; ++k) {
            ctx.k = k;
            const long arg = zeta_argument(k);
            for (long sg = 0; sg <= a2 - 2 * k; ++sg) {
                ctx.sigma = sg;
                const long a3 = coeff_a(3, j, ctx), a4 = coeff_a(4, j, ctx);
                for (long rho = 0; rho <= a3 - a4; ++rho) {
                    ctx.rho = rho;
                    const long a5 = coeff_a(5, j, ctx);
                    const long a6 = coeff_a(6, j, ctx), a7 = coeff_a(7, j, ctx);
                    for (long om = 0; om <= a6 - a7; ++om) {
                        ctx.omega = om;
                        const long a8 = coeff_a(8, j, ctx), a9 = coeff_a(9, j, ctx);
                        Rational coef =
                            Rational(2) * Rational(binomial(sg + v - 1, sg)) *
                            Rational(binomial(rho + u - a5, rho)) *
                            Rational(binomial(om + r - a8, om)) *
                            Rational(binomial(p + q - 1 - om - a7, a9 - 1)) *
                            pow_rational(2, coeff_a(11, j, ctx)) *
                            pow_rational(3, coeff_a(12, j, ctx));
                        if ((p + coeff_a(1, j, ctx) + coeff_a(10, j, ctx)) % 2 != 0) coef = -coef;
                        out.add_term(coef, {BasisConst::zeta(2 * k), BasisConst::zeta(arg)});
                    }
                }
            }
        }
    }

    // B_{1j} and B_{2j}: identical summand shapes, different k range and
    // zeta(2k) weighting, and a zeta+phi vs zeta-phi combination.
    auto b_part = [&](bool second) {
        const long kmax = second ? (v + 1) / 2 : v / 2;
        const long a2 = coeff_a(2, j, ctx);
        for (long k = 0; k <= kmax; ++k) {
            if (second && k == 0) continue;  // factor 1 - 2^0 vanishes
            ctx.k = k;
            const long arg = zeta_argument(k);
            Rational kfac = second ? (Rational(1) - pow_rational(2, -2 * k))
                                   : pow_rational(2, -2 * k);
            for (long sg = 0; sg <= a2 - 1; ++sg) {
                ctx.sigma = sg;
                const long a3 = coeff_a(3, j, ctx), b4 = coeff_b(4, j, ctx);
                for (long rho = 0; rho <= a3 - b4; ++rho) {
                    ctx.rho = rho;
                    const long b5 = coeff_b(5, j, ctx);
                    const long a6 = coeff_a(6, j, ctx), b7 = coeff_b(7, j, ctx);
                    for (long om = 0; om <= a6 - b7; ++om) {
                        ctx.omega = om;
                        const long b8 = coeff_b(8, j, ctx), a9 = coeff_a(9, j, ctx);
                        Rational coef =
                            Rational(2) * kfac * Rational(binomial(sg + v - 2 * k, sg)) *
                            Rational(binomial(rho + u - b5, rho)) *
                            Rational(binomial(om + r - b8, om)) *
                            Rational(binomial(p + q - 1 - om - b7, a9 - 1)) *
                            pow_rational(2, coeff_b(11, j, ctx)) *
                            pow_rational(3, coeff_b(12, j, ctx));
                        if ((p + coeff_b(1, j, ctx) + coeff_a(10, j, ctx)) % 2 != 0) coef = -coef;
                        Rational phi_coef = second ? -coef : coef;
                        out.add_term(coef, {BasisConst::zeta(2 * k), BasisConst::zeta(arg)});
                        out.add_term(phi_coef, {BasisConst::zeta(2 * k), BasisConst::phi(arg)});
                    }
                }
            }
        }
    };
    b_part(false);
    b_part(true);
    return out;
}

ZetaExpr compute_I_sum(long p, long q, long r, long u, long v, long s) {
    ZetaExpr total;
    for (int j = 1; j <= 8; ++j) total = total + compute_Ij(j, p, q, r, u, v, s);
    return total;
}

Relation fn_rel(long p, long q, long r, long u, long v, long s) {
    Relation rel;
    rel.lhs = functional_sum_terms({2}, ExponentTuple{p, s, q, r, u, v});
    rel.rhs = normalize(-compute_I_sum(p, q, r, u, v, s));
    rel.free_slot = 2;
    rel.s_value = s;
    std::ostringstream os;
    os << "fnrel(" << p << "," << q << "," << r << "," << u << "," << v << ";s=" << s << ")";
    rel.name = os.str();
    return rel;
}

KnownValue closed_form_special(long a, long b, long c, long d) {
    if (a < 1 || b < 1 || c < 1 || d < 1)
        throw std::invalid_argument("closed_form_special: a,b,c,d must be positive");
    ZetaExpr sum = compute_I_sum(2 * a, b, 2 * c - 1, d, d, b);
    KnownValue kv;
    kv.args = {2 * a, b, b, 2 * c - 1, d, d};
    kv.expr = normalize(sum.scaled(make_rational(-1, 2)));
    std::ostringstream os;
    os << "functional-relation specialization (a,b,c,d)=(" << a << "," << b << "," << c << ","
       << d << ")";
    kv.source = os.str();
    return kv;
}

ZetaExpr fr01_rhs(long s) {
    if (s < 1) throw std::invalid_argument("fr01_rhs: s >= 1");
    ZetaExpr e;
    e.add_term(Rational(1), {BasisConst::zeta(2), BasisConst::zeta(s + 4)});
    e.add_term(make_rational(-111, 8) + pow_rational(2, -s - 1), {BasisConst::zeta(s + 6)});
    e.add_term(make_rational(81, 4), {BasisConst::l_chi3(1), BasisConst::l_chi3(s + 5)});
    return normalize(e);
}

ZetaExpr fr01_rhs_clausen_form(long s) {
    if (s < 1) throw std::invalid_argument("fr01_rhs_clausen_form: s >= 1");
    ZetaExpr e;
    e.add_term(Rational(1), {BasisConst::zeta(2), BasisConst::zeta(s + 4)});
    e.add_term(make_rational(-651, 8) + pow_rational(2, -s - 1) +
                   make_rational(5, 2) * pow_rational(3, -s - 2),
               {BasisConst::zeta(s + 6)});
    e.add_term(make_rational(9, 2),
               {BasisConst::pi_pow(1), BasisConst::clausen_s(s + 5, make_rational(1, 3))});
    e.add_term(Rational(-135), {BasisConst::clausen_c(s + 6, make_rational(1, 3))});
    return e;
}

ChainClosedForms partial_fraction_chain(long s) {
    if (s < 1) throw std::invalid_argument("partial_fraction_chain: s >= 1");
    ChainClosedForms out;
    {
        ZetaExpr e;
        e.add_term(make_rational(1, 45), {BasisConst::pi_pow(4), BasisConst::zeta(s + 2)});
        e.add_term(make_rational(4, 3), {BasisConst::pi_pow(2), BasisConst::zeta(s + 4)});
        e.add_term(Rational(-16) - pow_rational(2, -s), {BasisConst::zeta(s + 6)});
        out.sigma_sharp = normalize(e);
    }
    {
        ZetaExpr e;
        e.add_term(Rational(-1), {BasisConst::pi_pow(2), BasisConst::zeta(s + 4)});
        e.add_term(Rational(10) + pow_rational(2, -s - 1), {BasisConst::zeta(s + 6)});
        out.sigma11 = normalize(e);
    }
    {
        ZetaExpr e;
        e.add_term(Rational(-5), {BasisConst::zeta(s + 6)});
        e.add_term(Rational(2), {BasisConst::zeta(2), BasisConst::zeta(s + 4)});
        e.add_term(Rational(2), {BasisConst::zeta(4), BasisConst::zeta(s + 2)});
        out.sigma21 = normalize(e);
    }
    out.a2_combination = out.sigma21;
    return out;
}

extern const char* const kBundledCatalogJson;

std::vector<KnownValue> catalog(const std::string& path) {
    nlohmann::json j;
    if (path.empty()) {
        j = nlohmann::json::parse(kBundledCatalogJson);
    } else {
        std::ifstream in(path);
        if (!in) throw std::runtime_error("catalog: cannot open " + path);
        in >> j;
    }
    std::vector<KnownValue> out;
    for (auto& entry : j.at("entries")) {
        KnownValue kv;
        auto args = entry.at("args");
        if (args.size() != 6) throw std::runtime_error("catalog: args must have 6 entries");
        for (int i = 0; i < 6; ++i) kv.args[i] = args[i].get<long>();
        kv.source = entry.value("source", "");
        ZetaExpr stored = normalize(expr_from_json(entry.at("expr")));

        ZetaExpr derived;
        if (kv.args == ExponentTuple{1, 2, 1, 1, 1, 1}) {
            derived = fr01_rhs(1).scaled(make_rational(1, 2));
        } else {
            if (kv.args[0] % 2 != 0 || kv.args[1] != kv.args[2] || kv.args[3] % 2 != 1 ||
                kv.args[4] != kv.args[5])
                throw CatalogMismatch("catalog: args (" + tuple_str(kv.args) +
                                      ") not in the closed-form family");
            derived = closed_form_special(kv.args[0] / 2, kv.args[1], (kv.args[3] + 1) / 2,
                                          kv.args[4])
                          .expr;
        }
        if (!(stored == derived))
            throw CatalogMismatch("catalog: stored expression for (" + tuple_str(kv.args) +
                                  ") does not match the re-derivation");
        kv.expr = derived;
        out.push_back(std::move(kv));
    }
    return out;
}

HPReal zeta_G2_cached(const ExponentTuple& t, const SummationConfig& cfg) {
    using Key = std::tuple<ExponentTuple, long, double, long>;
    static std::map<Key, HPReal> cache;
    static std::mutex mu;
    Key key{t, cfg.precision_bits, cfg.target_tol, cfg.max_outer};
    {
        std::lock_guard lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    HPReal v = zeta_G2(g2_exponents(t), cfg);
    std::lock_guard lock(mu);
    cache.emplace(std::move(key), v);
    return v;
}

namespace {

VerifyReport make_report(std::string target, const HPReal& lhs, const HPReal& rhs,
                         const SummationConfig&, double tol,
                         std::chrono::steady_clock::time_point t0) {
    VerifyReport rep;
    rep.target = std::move(target);
    rep.lhs = lhs;
    rep.rhs = rhs;
    rep.diff = hp_abs_diff(lhs, rhs);
    rep.tol = tol;
    rep.pass = rep.diff <= tol + lhs.error_bound + rhs.error_bound;
    rep.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                      .count();
    return rep;
}

}  // namespace

VerifyReport verify(const KnownValue& kv, const SummationConfig& cfg, double tol) {
    auto t0 = std::chrono::steady_clock::now();
    HPReal lhs = zeta_G2_cached(kv.args, cfg);
    HPReal rhs = eval_numeric(kv.expr, cfg);
    return make_report("zeta2(" + tuple_str(kv.args) + ")", lhs, rhs, cfg, tol, t0);
}

VerifyReport verify(const Relation& rel, const SummationConfig& cfg, double tol) {
    auto t0 = std::chrono::steady_clock::now();
    mpfr_prec_t w = cfg.work_prec();
    HPReal lhs = hp_from_long(0, w);
    for (const auto& term : rel.lhs) {
        HPReal z = zeta_G2_cached(term.exps, cfg);
        lhs = (term.sign > 0) ? hp_add(lhs, z, w) : hp_sub(lhs, z, w);
    }
    HPReal rhs = eval_numeric(rel.rhs, cfg);
    return make_report(rel.name, lhs, rhs, cfg, tol, t0);
}

}  // namespace rootzeta
