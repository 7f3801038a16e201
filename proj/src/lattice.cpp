#include "rootzeta/lattice.hpp"

#include "rootzeta/functions.hpp"

#include <cmath>
#include <array>
#include <memory>
#include <optional>

namespace rootzeta {

namespace {

void check_exponent(const Exponent& e) {
    if (e.integral) {
        if (e.i < 1) throw ConvergenceError("exponent must be >= 1");
    } else {
        if (!(e.r > 1)) throw ConvergenceError("real exponent must be > 1");
        if (!std::isfinite(e.r)) throw ConvergenceError("real exponent must be finite");
    }
}

// sum_{m>N} m^{-a} <= N^{1-a}/(a-1)
double tail1d(double a, double N) {
    if (!(a > 1 + 1e-9)) throw ConvergenceError("tail exponent not > 1");
    return std::pow(N, 1 - a) / (a - 1);
}

// sum_{m>N} m^{-a} (1+ln m) <= N^{1-a} ((1+ln N)/(a-1) + 1/(a-1)^2)
double tail1d_log(double a, double N) {
    if (!(a > 1 + 1e-9)) throw ConvergenceError("tail exponent not > 1");
    double am1 = a - 1;
    return std::pow(N, 1 - a) * ((1 + std::log(N)) / am1 + 1 / (am1 * am1));
}

double harmonic_bound(double N) { return 1 + std::log(N); }

struct Kernel {
    Exponent sm, sn;
    std::vector<CompositeForm> forms;
    double s_comp = 0;   // total composite weight
    int real_slot = -1;  // -1 none, 0 = m, 1 = n, 2+i = composite i

    void init() {
        check_exponent(sm);
        check_exponent(sn);
        int reals = 0;
        if (!sm.integral) { real_slot = 0; ++reals; }
        if (!sn.integral) { real_slot = 1; ++reals; }
        for (size_t i = 0; i < forms.size(); ++i) {
            check_exponent(forms[i].s);
            if (forms[i].a < 1 || forms[i].b < 1)
                throw std::invalid_argument("composite form coefficients must be >= 1");
            s_comp += forms[i].s.as_double();
            if (!forms[i].s.integral) { real_slot = 2 + static_cast<int>(i); ++reals; }
        }
        if (reals > 1) throw DomainError("at most one exponent slot may be non-integral");
    }

    double quadrant_tail(double N) const {
        double a = sm.as_double(), b = sn.as_double();
        double t2 = harmonic_bound(N) * tail1d(a + s_comp, N);
        double t1 = harmonic_bound(N) * tail1d(b + s_comp, N);
        double t3 = tail1d(a + s_comp / 2, N) * tail1d(b + s_comp / 2, N);
        return errbound::up(t1 + t2 + t3);
    }

    // half-plane sector constants: K1 bounds the far sector, K2 the near
    // sector, C0 the "at most one small composite form" threshold divisor.
    long K1() const {
        double r = 0;
        for (auto& f : forms) r = std::max(r, double(f.a) / f.b);
        return std::max(1L, static_cast<long>(std::ceil(2 * r)));
    }
    long K2() const {
        double r = 0;
        for (auto& f : forms) r = std::max(r, double(f.b) / f.a);
        return std::max(1L, static_cast<long>(std::ceil(2 * r)));
    }
    long C0() const {
        long c = 2;
        for (size_t i = 0; i < forms.size(); ++i)
            for (size_t j = i + 1; j < forms.size(); ++j) {
                long det = std::labs(long(forms[i].a) * forms[j].b - long(forms[j].a) * forms[i].b);
                if (det == 0) throw std::invalid_argument("proportional composite forms");
                long num = forms[i].b + forms[j].b;
                c = std::max(c, (num + det - 1) / det + 1);
            }
        return c;
    }

    // bound on sum_{m>N} sum_{n in Z, n != 0} |term|: positive-n rows plus the
    // near/far/wall/generic sectors of the negative-n side
    double tc_tail(double N) const {
        double a = sm.as_double(), b = sn.as_double();
        double w = a + b + s_comp;
        double k1 = static_cast<double>(K1()), k2 = static_cast<double>(K2());
        double c0 = static_cast<double>(C0());
        double p2c = std::pow(2.0, s_comp);

        double pos = tail1d_log(a + s_comp, N) + tail1d(w - 1, N) / (b + s_comp - 1);
        double near = p2c * tail1d_log(a + s_comp, N);
        double far = p2c * std::pow(k1, 1 - b - s_comp) * tail1d(w - 1, N) / (b + s_comp - 1);
        double walls = 0;
        for (auto& f : forms) {
            double si = f.s.as_double();
            double coef = 2 * std::pow(k2, b) * std::pow(c0, s_comp - si);
            walls += (si >= 2) ? coef * 1.645 * tail1d(w - si, N) : coef * tail1d_log(w - si, N);
        }
        double generic = 2 * k1 * std::pow(k2, b) * std::pow(c0, s_comp) * tail1d(w - 1, N);
        return pos + near + far + walls + generic;
    }

    double half_tail(double N) const {
        double b = sn.as_double();
        double k1 = static_cast<double>(K1());
        double p2c = std::pow(2.0, s_comp);
        double TA = p2c * harmonic_bound(N) * tail1d(b + s_comp, k1 * N);
        double TB = harmonic_bound(N) * tail1d(b + s_comp, N);
        return errbound::up(TA + TB + tc_tail(N));
    }
};

// Per-point denominator accumulator; reuses mpz buffers across points.
struct TermEval {
    mpz_t den, pw;
    mpfr_t term, invden, acc;
    double absacc = 0;
    long long count = 0;

    explicit TermEval(mpfr_prec_t w) {
        mpz_init(den);
        mpz_init(pw);
        mpfr_init2(term, w);
        mpfr_init2(invden, w);
        mpfr_init2(acc, w);
        mpfr_set_zero(acc, 1);
    }
    TermEval(const TermEval&) = delete;
    ~TermEval() {
        mpz_clear(den);
        mpz_clear(pw);
        mpfr_clear(term);
        mpfr_clear(invden);
        mpfr_clear(acc);
    }

    // multiply den by |f|^e, returns sign parity contribution
    int mul_power(long f, long e) {
        unsigned long uf = static_cast<unsigned long>(f < 0 ? -f : f);
        mpz_ui_pow_ui(pw, uf, static_cast<unsigned long>(e));
        mpz_mul(den, den, pw);
        return (f < 0 && (e & 1)) ? 1 : 0;
    }

    // add sign / den [* realfac] to the accumulator
    void add(int neg_parity, mpfr_srcptr realfac) {
        mpfr_set_z(invden, den, MPFR_RNDN);
        if (realfac)
            mpfr_div(term, realfac, invden, MPFR_RNDN);
        else
            mpfr_ui_div(term, 1, invden, MPFR_RNDN);
        if (neg_parity & 1) mpfr_neg(term, term, MPFR_RNDN);
        mpfr_add(acc, acc, term, MPFR_RNDN);
        absacc += std::fabs(mpfr_get_d(term, MPFR_RNDN));
        ++count;
    }
};

// x^{-sigma} for positive integer x, cached by x.
struct RealPowCache {
    double sigma;
    mpfr_prec_t w;
    std::vector<std::optional<BigFloat>> cache;
    mpfr_t sexp;

    RealPowCache(double sigma_, mpfr_prec_t w_, size_t max_value) : sigma(sigma_), w(w_) {
        cache.resize(max_value + 1);
        mpfr_init2(sexp, w);
        mpfr_set_d(sexp, -sigma, MPFR_RNDN);
    }
    RealPowCache(const RealPowCache&) = delete;
    ~RealPowCache() { mpfr_clear(sexp); }

    mpfr_srcptr get(long x) {
        auto& slot = cache[static_cast<size_t>(x)];
        if (!slot) {
            BigFloat v(w);
            mpfr_set_si(v.get(), x, MPFR_RNDN);
            mpfr_pow(v.get(), v.get(), sexp, MPFR_RNDN);
            slot = std::move(v);
        }
        return slot->get();
    }
};

HPReal finish(const Kernel& k, TermEval& ev, double tail, const SummationConfig& cfg,
              SumStats* stats, long N) {
    mpfr_prec_t w = cfg.work_prec();
    double sref = k.sm.as_double() + k.sn.as_double() + k.s_comp;
    double rounding = (ev.absacc + 1) * (sref + 8) * (static_cast<double>(ev.count) + 64) *
                      std::ldexp(1.0, static_cast<int>(-w + 2));
    HPReal out{BigFloat(static_cast<mpfr_prec_t>(cfg.precision_bits)), 0.0};
    mpfr_set(out.value.get(), ev.acc, MPFR_RNDN);
    out.error_bound = errbound::up(tail + rounding + errbound::ulp(out.value.get()));
    if (stats) {
        stats->terms = ev.count;
        stats->outer = N;
    }
    return out;
}

long choose_box(const Kernel& k, bool half, const SummationConfig& cfg) {
    for (long N = 32; N <= cfg.max_outer; N *= 2) {
        double tail =
            half ? k.half_tail(static_cast<double>(N)) : k.quadrant_tail(static_cast<double>(N));
        if (tail <= cfg.target_tol / 2) return N;
    }
    throw ConvergenceError("truncation cap max_outer reached before tail bound met");
}

// ---------------------------------------------------------------------------
// Analytic-inner evaluator. For integer exponents and composite forms
// a_j m + b_j n with a_j in {1,2} and pairwise distinct ratios b_j/a_j, the
// m series at fixed n is summed in closed form through the exact partial
// fraction of F(m) = m^{-A} prod_j (m + c_j)^{-e_j}, c_j = b_j n / a_j:
//
//   F(m) = sum_{i<=A} alpha_i m^{-i} + sum_j sum_{k<=e_j} beta^j_k (m+c_j)^{-k}
//
// with all coefficients exact rationals obtained from truncated binomial
// series. Summing over m >= 1 turns the i,k >= 2 pieces into zeta(i) and
// shifted prefix sums over an integer or half-odd grid, while the k = 1
// pieces pair into the absolutely convergent Psi_1(c) = sum_m (1/m - 1/(m+c))
// (the first-order coefficients add to zero). Excluded lattice points (a
// composite form hitting zero at m0) contribute their finite partial-fraction
// parts, which are subtracted exactly per row.
// ---------------------------------------------------------------------------

using Series = std::vector<Rational>;  // truncated power series, coeff of x^t

// (x + c)^{-e} around x = 0, c != 0, up to x^{L-1}
Series geom_series(const Rational& c, long e, long L) {
    Series s(L);
    Rational ce;  // c^{-e}
    {
        Integer pn, pd;
        mpz_pow_ui(pn.get_mpz_t(), c.get_num().get_mpz_t(), static_cast<unsigned long>(e));
        mpz_pow_ui(pd.get_mpz_t(), c.get_den().get_mpz_t(), static_cast<unsigned long>(e));
        ce = Rational(pd) / Rational(pn);
        ce.canonicalize();
    }
    s[0] = ce;
    for (long t = 1; t < L; ++t) {
        s[t] = -s[t - 1] * Rational(e + t - 1) / (Rational(t) * c);
        s[t].canonicalize();
    }
    return s;
}

Series mul_trunc(const Series& a, const Series& b, long L) {
    Series out(L, Rational(0));
    for (long i = 0; i < static_cast<long>(a.size()) && i < L; ++i) {
        if (a[i] == 0) continue;
        for (long j = 0; j + i < L && j < static_cast<long>(b.size()); ++j)
            out[i + j] += a[i] * b[j];
    }
    for (auto& q : out) q.canonicalize();
    return out;
}

// prefix sums sum_{k<=K} l_k^{-j} over the grid l_k = k (integer) or k - 1/2
struct GridSums {
    mpfr_prec_t w;
    bool half;
    int jmax;
    long upto = 0;
    std::vector<BigFloat> P;
    double err = 0;

    GridSums(mpfr_prec_t w_, bool half_, int jmax_) : w(w_), half(half_), jmax(jmax_) {
        P.assign(jmax + 1, BigFloat(w));
    }
    void advance_to(long K) {
        if (K <= upto) return;
        BigFloat inv(w), pw(w);
        for (long k = upto + 1; k <= K; ++k) {
            if (half) {
                mpfr_set_si(inv.get(), 2, MPFR_RNDN);
                mpfr_div_si(inv.get(), inv.get(), 2 * k - 1, MPFR_RNDN);
            } else {
                mpfr_set_si(inv.get(), 1, MPFR_RNDN);
                mpfr_div_si(inv.get(), inv.get(), k, MPFR_RNDN);
            }
            mpfr_set(pw.get(), inv.get(), MPFR_RNDN);
            for (int j = 1; j <= jmax; ++j) {
                mpfr_add(P[j].get(), P[j].get(), pw.get(), MPFR_RNDN);
                if (j < jmax) mpfr_mul(pw.get(), pw.get(), inv.get(), MPFR_RNDN);
            }
        }
        err += static_cast<double>(K - upto) * (jmax + 2) * 64 *
               std::ldexp(1.0, static_cast<int>(-w));
        upto = K;
    }
};

struct PoleSpec {
    int a, b;
    long e;
};

struct AnalyticParams {
    long s1, s2;
    std::vector<PoleSpec> poles;
    bool half_domain;
};

double analytic_tail(const AnalyticParams& p, double N) {
    double s_c = 0;
    for (auto& q : p.poles) s_c += static_cast<double>(q.e);
    double s1 = static_cast<double>(p.s1), s2 = static_cast<double>(p.s2);
    double t = tail1d_log(s2 + s_c, N) + tail1d(s1 + s2 + s_c - 1, N) / (s1 + s_c - 1);
    if (p.half_domain) {
        Kernel kT;
        kT.sm = Exponent::integer(p.s2);
        kT.sn = Exponent::integer(p.s1);
        for (auto& q : p.poles) kT.forms.push_back({q.b, q.a, Exponent::integer(q.e)});
        kT.init();
        t += kT.tc_tail(N);
    }
    return errbound::up(t);
}

HPReal analytic_sum(const AnalyticParams& p, const SummationConfig& cfg, SumStats* stats) {
    cfg.validate();
    const mpfr_prec_t w = cfg.work_prec();
    const long A = p.s1;
    long N = 32;
    while (analytic_tail(p, static_cast<double>(N)) > cfg.target_tol / 2 && N <= cfg.max_outer)
        N *= 2;
    if (N > cfg.max_outer)
        throw ConvergenceError("truncation cap max_outer reached before tail bound met");
    const double tail = analytic_tail(p, static_cast<double>(N));

    long emax = 0, etot = 0;
    for (auto& q : p.poles) {
        emax = std::max(emax, q.e);
        etot += q.e;
    }
    const int jmax = static_cast<int>(std::max(A, emax));

    std::vector<HPReal> zeta_v(jmax + 1, hp_from_long(0, w));
    for (int i = 2; i <= jmax; ++i) zeta_v[i] = riemann_zeta(i, cfg);
    double zerr = 0;
    for (int i = 2; i <= jmax; ++i) zerr = std::max(zerr, zeta_v[i].error_bound);
    HPReal log2{BigFloat(w), 0.0};
    mpfr_const_log2(log2.value.get(), MPFR_RNDN);
    log2.error_bound = errbound::ulp(log2.value.get());

    // grids[pole][side 0/1][half 0/1], lazily created
    const size_t np = p.poles.size();
    std::vector<std::array<std::array<std::unique_ptr<GridSums>, 2>, 2>> grids(np);
    auto grid_for = [&](size_t j, int side, bool half) -> GridSums& {
        auto& slot = grids[j][side][half ? 1 : 0];
        if (!slot) slot = std::make_unique<GridSums>(w, half, jmax);
        return *slot;
    };

    // prefactor prod a_j^{-e_j}
    Rational apow(1);
    for (auto& q : p.poles) {
        Integer ap;
        mpz_ui_pow_ui(ap.get_mpz_t(), static_cast<unsigned long>(q.a),
                      static_cast<unsigned long>(q.e));
        apow /= Rational(ap);
    }
    apow.canonicalize();

    BigFloat acc(w), row(w), tmp(w), zval(w);
    double errsum = 0, absacc = 0;
    long long count = 0;
    double row_err = 0;

    auto add_row = [&](long n, int side /*0: n>0, 1: n<0*/) {
        row_err = 0;
        std::vector<Rational> c(np);
        std::vector<bool> halfgrid(np);
        for (size_t j = 0; j < np; ++j) {
            c[j] = Rational(Integer(p.poles[j].b) * n, Integer(p.poles[j].a));
            c[j].canonicalize();
            if (side) c[j] = -c[j];
            halfgrid[j] = (c[j].get_den() == 2);
        }
        // partial fraction coefficients
        Series alpha;  // alpha_i = S0[A-i]
        {
            Series s0(1, Rational(1));
            for (size_t j = 0; j < np; ++j)
                s0 = mul_trunc(s0, geom_series(c[j], p.poles[j].e, A), A);
            alpha = std::move(s0);
        }
        std::vector<Series> beta(np);  // beta[j][t], beta^j_k = beta[j][e_j-k]
        for (size_t j = 0; j < np; ++j) {
            long ej = p.poles[j].e;
            Series t0 = geom_series(-c[j], A, ej);  // (x - c_j)^{-A}
            for (size_t l = 0; l < np; ++l) {
                if (l == j) continue;
                Rational d = c[l] - c[j];
                t0 = mul_trunc(t0, geom_series(d, p.poles[l].e, ej), ej);
            }
            beta[j] = std::move(t0);
        }
        // first-order coefficients must cancel
        {
            Rational s = alpha.size() >= static_cast<size_t>(A) ? alpha[A - 1] : Rational(0);
            for (size_t j = 0; j < np; ++j) s += beta[j][p.poles[j].e - 1];
            s.canonicalize();
            if (s != 0) throw std::logic_error("analytic_sum: partial fraction check failed");
        }
        mpfr_set_zero(row.get(), 1);
        double coefmass = 0;
        auto add_piece = [&](const Rational& coef, mpfr_srcptr val, double valerr) {
            if (coef == 0) return;
            mpfr_set_q(tmp.get(), coef.get_mpq_t(), MPFR_RNDN);
            mpfr_mul(tmp.get(), tmp.get(), val, MPFR_RNDN);
            mpfr_add(row.get(), row.get(), tmp.get(), MPFR_RNDN);
            double cm = std::fabs(coef.get_d());
            row_err += cm * valerr;
            coefmass += cm * (std::fabs(mpfr_get_d(val, MPFR_RNDN)) + 1);
        };

        // alpha_i zeta(i), i >= 2
        for (long i = 2; i <= A; ++i)
            add_piece(alpha[A - i], zeta_v[i].value.get(), zeta_v[i].error_bound);

        for (size_t j = 0; j < np; ++j) {
            const long ej = p.poles[j].e;
            const bool hg = halfgrid[j];
            GridSums& grid = grid_for(j, side, hg);
            long K;
            long cnum = std::labs(static_cast<long>(mpz_get_si(c[j].get_num().get_mpz_t())));
            if (hg)
                K = (cnum + 1) / 2 - (side ? 1 : 0);
            else
                K = side ? cnum - 1 : cnum;
            grid.advance_to(K);

            // beta^j_k Z_k(c_j), k >= 2
            for (long k = 2; k <= ej; ++k) {
                const Rational& bk = beta[j][ej - k];
                if (bk == 0) continue;
                if (hg) {
                    Integer tw;
                    mpz_ui_pow_ui(tw.get_mpz_t(), 2, static_cast<unsigned long>(k));
                    Rational zc = Rational(tw - 1);
                    mpfr_set_q(zval.get(), zc.get_mpq_t(), MPFR_RNDN);
                    mpfr_mul(zval.get(), zval.get(), zeta_v[k].value.get(), MPFR_RNDN);
                } else {
                    mpfr_set(zval.get(), zeta_v[k].value.get(), MPFR_RNDN);
                }
                if (!side)
                    mpfr_sub(zval.get(), zval.get(), grid.P[k].get(), MPFR_RNDN);
                else if (k % 2 == 0)
                    mpfr_add(zval.get(), zval.get(), grid.P[k].get(), MPFR_RNDN);
                else
                    mpfr_sub(zval.get(), zval.get(), grid.P[k].get(), MPFR_RNDN);
                add_piece(bk, zval.get(), (1 << k) * zerr + grid.err);
            }
            // -beta^j_1 Psi_1(c_j)
            {
                Rational b1 = -beta[j][ej - 1];
                if (!(b1 == 0)) {
                    if (hg) {
                        mpfr_mul_si(zval.get(), log2.value.get(), -2, MPFR_RNDN);
                        mpfr_add(zval.get(), zval.get(), grid.P[1].get(), MPFR_RNDN);
                    } else {
                        mpfr_set(zval.get(), grid.P[1].get(), MPFR_RNDN);
                    }
                    add_piece(b1, zval.get(), 2 * log2.error_bound + grid.err);
                }
            }
        }

        // wall corrections: c_j a negative integer means the lattice point
        // m0 = -c_j is excluded from the whole row
        if (side) {
            for (size_t j = 0; j < np; ++j) {
                if (halfgrid[j]) continue;
                Rational m0q = -c[j];
                Integer m0 = m0q.get_num();
                Rational corr(0);
                // alpha part at m0
                Rational minv = Rational(1) / Rational(m0);
                Rational mp = minv;
                for (long i = 1; i <= A; ++i) {
                    corr += alpha[A - i] * mp;
                    mp *= minv;
                }
                // other poles' parts at m0
                for (size_t l = 0; l < np; ++l) {
                    if (l == j) continue;
                    Rational base = Rational(m0) + c[l];
                    Rational binv = Rational(1) / base;
                    Rational bp = binv;
                    for (long k = 1; k <= p.poles[l].e; ++k) {
                        corr += beta[l][p.poles[l].e - k] * bp;
                        bp *= binv;
                    }
                }
                corr.canonicalize();
                mpfr_set_q(tmp.get(), corr.get_mpq_t(), MPFR_RNDN);
                mpfr_sub(row.get(), row.get(), tmp.get(), MPFR_RNDN);
                row_err += std::fabs(corr.get_d()) * std::ldexp(1.0, static_cast<int>(-w + 2));
            }
        }

        // times prod a^{-e} and n^{-s2} (with the sign of (-n)^{-s2})
        Rational outer = apow;
        {
            Integer npow;
            mpz_ui_pow_ui(npow.get_mpz_t(), static_cast<unsigned long>(n),
                          static_cast<unsigned long>(p.s2));
            outer /= Rational(npow);
            if (side && p.s2 % 2 != 0) outer = -outer;
            outer.canonicalize();
        }
        mpfr_set_q(tmp.get(), outer.get_mpq_t(), MPFR_RNDN);
        mpfr_mul(row.get(), row.get(), tmp.get(), MPFR_RNDN);
        mpfr_add(acc.get(), acc.get(), row.get(), MPFR_RNDN);
        double om = std::fabs(outer.get_d());
        errsum = errbound::up(errsum + row_err * om +
                              (coefmass * om + 1) * std::ldexp(1.0, static_cast<int>(-w + 6)));
        absacc += std::fabs(mpfr_get_d(row.get(), MPFR_RNDN));
        ++count;
    };

    for (long n = 1; n <= N; ++n) {
        add_row(n, 0);
        if (p.half_domain) add_row(n, 1);
    }

    HPReal out{BigFloat(static_cast<mpfr_prec_t>(cfg.precision_bits)), 0.0};
    mpfr_set(out.value.get(), acc.get(), MPFR_RNDN);
    double rounding = (absacc + 1) * (static_cast<double>(count) + 64) *
                      std::ldexp(1.0, static_cast<int>(-w + 2));
    out.error_bound = errbound::up(tail + errsum + rounding + errbound::ulp(out.value.get()));
    if (stats) {
        stats->terms = count;
        stats->outer = N;
    }
    return out;
}

bool analytic_eligible(Exponent sm, Exponent sn, std::span<const CompositeForm> forms) {
    if (forms.empty() || forms.size() > 2) return false;
    if (!sm.integral || !sn.integral) return false;
    for (auto& f : forms) {
        if (!f.s.integral) return false;
        if (f.a != 1 && f.a != 2) return false;
    }
    if (forms.size() == 2 &&
        forms[0].b * forms[1].a == forms[1].b * forms[0].a)
        return false;
    return true;
}

AnalyticParams make_params(Exponent sm, Exponent sn, std::span<const CompositeForm> forms,
                           bool half) {
    AnalyticParams p;
    p.s1 = sm.i;
    p.s2 = sn.i;
    for (auto& f : forms) p.poles.push_back({f.a, f.b, f.s.i});
    p.half_domain = half;
    return p;
}

}  // namespace

HPReal quadrant_sum(Exponent sm, Exponent sn, std::span<const CompositeForm> forms,
                    const SummationConfig& cfg, SumStats* stats) {
    if (analytic_eligible(sm, sn, forms)) {
        // the slow axis belongs inside: transpose when the m exponent is the
        // larger one and the transposed coefficients stay in range
        bool transposable = true;
        for (auto& f : forms)
            if (f.b != 1 && f.b != 2) transposable = false;
        if (transposable && sm.i > sn.i) {
            std::vector<CompositeForm> tf;
            for (auto& f : forms) tf.push_back({f.b, f.a, f.s});
            return analytic_sum(make_params(sn, sm, tf, false), cfg, stats);
        }
        return analytic_sum(make_params(sm, sn, forms, false), cfg, stats);
    }
    return quadrant_sum_box(sm, sn, forms, cfg, stats);
}

HPReal half_plane_sum(Exponent sm, Exponent sn, std::span<const CompositeForm> forms,
                      const SummationConfig& cfg, SumStats* stats) {
    if (analytic_eligible(sm, sn, forms))
        return analytic_sum(make_params(sm, sn, forms, true), cfg, stats);
    return half_plane_sum_box(sm, sn, forms, cfg, stats);
}

HPReal quadrant_sum_box(Exponent sm, Exponent sn, std::span<const CompositeForm> forms,
                        const SummationConfig& cfg, SumStats* stats) {
    cfg.validate();
    Kernel k{sm, sn, {forms.begin(), forms.end()}};
    k.init();
    long N = choose_box(k, false, cfg);
    double tail = k.quadrant_tail(static_cast<double>(N));

    mpfr_prec_t w = cfg.work_prec();
    TermEval ev(w);
    long maxform = 0;
    for (auto& f : k.forms) maxform = std::max(maxform, (long(f.a) + f.b) * N);
    std::optional<RealPowCache> rp;
    if (k.real_slot >= 0) {
        double sigma = (k.real_slot == 0)   ? sm.r
                       : (k.real_slot == 1) ? sn.r
                                            : k.forms[k.real_slot - 2].s.r;
        rp.emplace(sigma, w, static_cast<size_t>(std::max(maxform, N)));
    }

    for (long m = 1; m <= N; ++m) {
        for (long n = 1; n <= N; ++n) {
            mpz_set_ui(ev.den, 1);
            mpfr_srcptr realfac = nullptr;
            if (k.real_slot == 0)
                realfac = rp->get(m);
            else
                ev.mul_power(m, sm.i);
            if (k.real_slot == 1)
                realfac = rp->get(n);
            else
                ev.mul_power(n, sn.i);
            for (size_t i = 0; i < k.forms.size(); ++i) {
                long f = k.forms[i].a * m + k.forms[i].b * n;
                if (k.real_slot == 2 + static_cast<int>(i))
                    realfac = rp->get(f);
                else
                    ev.mul_power(f, k.forms[i].s.i);
            }
            ev.add(0, realfac);
        }
    }
    return finish(k, ev, tail, cfg, stats, N);
}

HPReal half_plane_sum_box(Exponent sm, Exponent sn, std::span<const CompositeForm> forms,
                          const SummationConfig& cfg, SumStats* stats) {
    cfg.validate();
    Kernel k{sm, sn, {forms.begin(), forms.end()}};
    k.init();
    if (k.real_slot > 0)
        throw DomainError("half_plane_sum: non-integral exponent only allowed on the m slot");
    long N = choose_box(k, true, cfg);
    double tail = k.half_tail(static_cast<double>(N));
    long K1 = k.K1();

    mpfr_prec_t w = cfg.work_prec();
    TermEval ev(w);
    std::optional<RealPowCache> rp;
    if (k.real_slot == 0) rp.emplace(sm.r, w, static_cast<size_t>(N));

    long tmax = K1 * N;
    for (long m = 1; m <= N; ++m) {
        mpfr_srcptr realfac = nullptr;
        if (rp) realfac = rp->get(m);
        // grouped by |n| ascending: +t (while t <= N), then -t
        for (long t = 1; t <= tmax; ++t) {
            if (t <= N) {
                mpz_set_ui(ev.den, 1);
                int par = 0;
                if (!rp) par += ev.mul_power(m, sm.i);
                par += ev.mul_power(t, sn.i);
                for (auto& f : k.forms) par += ev.mul_power(f.a * m + f.b * t, f.s.i);
                ev.add(par, realfac);
            }
            // n = -t; skip wall points
            bool wall = false;
            for (auto& f : k.forms)
                if (f.a * m - f.b * t == 0) {
                    wall = true;
                    break;
                }
            if (wall) continue;
            mpz_set_ui(ev.den, 1);
            int par = 0;
            if (!rp) par += ev.mul_power(m, sm.i);
            par += ev.mul_power(-t, sn.i);
            for (auto& f : k.forms) par += ev.mul_power(f.a * m - f.b * t, f.s.i);
            ev.add(par, realfac);
        }
    }
    return finish(k, ev, tail, cfg, stats, N);
}

HPReal tornheim_A2(Exponent s1, Exponent s2, Exponent s3, const SummationConfig& cfg,
                   SumStats* stats) {
    double a = s1.as_double(), b = s2.as_double(), c = s3.as_double();
    if (!(a + c > 2 && b + c > 2 && a + b + c > 3))
        throw ConvergenceError("tornheim_A2: need pairwise sums with s3 > 2 and weight > 3");
    CompositeForm f[]{{1, 1, s3}};
    return quadrant_sum(s1, s2, f, cfg, stats);
}

HPReal zeta_C2(Exponent s1, Exponent s2, Exponent s3, Exponent s4, const SummationConfig& cfg,
               SumStats* stats) {
    double wsum = s1.as_double() + s2.as_double() + s3.as_double() + s4.as_double();
    if (wsum < 5) throw ConvergenceError("zeta_C2: weight must be >= 5");
    CompositeForm f[]{{1, 1, s3}, {1, 2, s4}};
    return quadrant_sum(s1, s2, f, cfg, stats);
}

namespace {
double g2_weight(const G2Exponents& s) {
    double wsum = 0;
    for (auto& e : s) wsum += e.as_double();
    return wsum;
}
}  // namespace

HPReal zeta_G2(const G2Exponents& s, const SummationConfig& cfg, SumStats* stats) {
    if (g2_weight(s) < 7) throw ConvergenceError("zeta_G2: weight must be >= 7");
    CompositeForm f[]{{1, 1, s[2]}, {1, 2, s[3]}, {1, 3, s[4]}, {2, 3, s[5]}};
    return quadrant_sum_box(s[0], s[1], f, cfg, stats);
}

HPReal s_sum_G2(const std::set<int>& I, const G2Exponents& s, const SummationConfig& cfg,
                SumStats* stats) {
    if (I.empty()) throw std::invalid_argument("s_sum_G2: I must be nonempty");
    for (int i : I)
        if (i != 1 && i != 2) throw std::invalid_argument("s_sum_G2: I subset of {1,2}");
    if (g2_weight(s) < 7) throw ConvergenceError("s_sum_G2: weight must be >= 7");
    if (I.size() == 2) return zeta_G2(s, cfg, stats);
    if (I.count(1)) {
        CompositeForm f[]{{1, 1, s[2]}, {1, 2, s[3]}, {1, 3, s[4]}, {2, 3, s[5]}};
        return half_plane_sum_box(s[0], s[1], f, cfg, stats);
    }
    // I = {2}: relabel (m,n) -> (n,m); the forms transpose
    CompositeForm f[]{{1, 1, s[2]}, {2, 1, s[3]}, {3, 1, s[4]}, {3, 2, s[5]}};
    return half_plane_sum_box(s[1], s[0], f, cfg, stats);
}

}  // namespace rootzeta
