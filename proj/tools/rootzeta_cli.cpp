// Command-line front end: evaluate the rank-2 lattice sums, derive closed
// forms, run the verification suites, and inspect the Weyl combinatorics.
// JSON goes to stdout, diagnostics to stderr. Exit codes: 0 success,
// 1 verification failure, 2 invalid input / domain error.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>

#include "rootzeta/relations.hpp"

using nlohmann::json;
using namespace rootzeta;

namespace {

struct RunConfig {
    long precision_bits = 128;
    double tolerance = 1e-10;
    long max_outer = 1 << 20;
    std::string output = "json";
    std::string catalog_path;

    SummationConfig summation() const {
        SummationConfig cfg;
        cfg.precision_bits = precision_bits;
        cfg.target_tol = std::max(tolerance / 8, std::ldexp(1.0, int(-precision_bits + 9)));
        cfg.max_outer = max_outer;
        return cfg;
    }
};

json report_json(const VerifyReport& r) {
    return json{{"target", r.target},
                {"lhs", r.lhs.str(25)},
                {"rhs", r.rhs.str(25)},
                {"diff", r.diff},
                {"tol", r.tol},
                {"pass", r.pass},
                {"wall_time", r.wall_ms}};
}

void emit(const RunConfig& rc, const json& j) {
    if (rc.output == "json") {
        std::cout << j.dump(2) << "\n";
        return;
    }
    if (j.contains("reports")) {
        for (auto& r : j["reports"])
            std::cout << (r["pass"].get<bool>() ? "pass " : "FAIL ")
                      << r["target"].get<std::string>() << "  lhs=" << r["lhs"].get<std::string>()
                      << "  rhs=" << r["rhs"].get<std::string>()
                      << "  diff=" << r["diff"].get<double>() << "\n";
        return;
    }
    for (auto it = j.begin(); it != j.end(); ++it)
        std::cout << it.key() << " = " << it.value().dump() << "\n";
}

ExponentTuple parse_tuple(const std::vector<long>& v) {
    if (v.size() != 6) throw std::invalid_argument("expected 6 exponents");
    ExponentTuple t;
    for (int i = 0; i < 6; ++i) t[i] = v[i];
    return t;
}

json signed_terms_json(const std::vector<SignedTerm>& terms) {
    json arr = json::array();
    for (auto& t : terms) arr.push_back(json{{"sign", t.sign}, {"exps", t.exps}});
    return arr;
}

int cmd_eval(const RunConfig& rc, const std::vector<std::string>& args, int ssum,
             const std::string& var) {
    SummationConfig cfg = rc.summation();
    G2Exponents exps;
    size_t slot_from_var = 0;
    double var_value = 0;
    if (!var.empty()) {
        auto eq = var.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("--var expects slot=value");
        slot_from_var = std::stoul(var.substr(0, eq));
        var_value = std::stod(var.substr(eq + 1));
        if (slot_from_var < 1 || slot_from_var > 6)
            throw std::invalid_argument("--var slot must be 1..6");
        if (args.size() != 5) throw std::invalid_argument("--var requires 5 positional exponents");
    } else if (args.size() != 6) {
        throw std::invalid_argument("expected 6 exponents (or 5 with --var)");
    }
    size_t ai = 0;
    for (size_t slot = 1; slot <= 6; ++slot) {
        if (slot == slot_from_var) {
            double v = var_value;
            exps[slot - 1] = (v == std::floor(v)) ? Exponent::integer(static_cast<long>(v))
                                                  : Exponent::real(v);
        } else {
            exps[slot - 1] = Exponent::integer(std::stol(args[ai++]));
        }
    }
    SumStats st;
    auto t0 = std::chrono::steady_clock::now();
    HPReal v = (ssum == 0) ? zeta_G2(exps, cfg, &st)
                           : s_sum_G2(std::set<int>{ssum}, exps, cfg, &st);
    double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    emit(rc, json{{"schema", 1},
                  {"command", ssum == 0 ? "eval" : "eval-ssum"},
                  {"value", v.str(30)},
                  {"error_bound", v.error_bound},
                  {"terms_summed", st.terms},
                  {"wall_ms", ms}});
    return 0;
}

int cmd_closed_form(const RunConfig& rc, long a, long b, long c, long d) {
    SummationConfig cfg = rc.summation();
    KnownValue kv = closed_form_special(a, b, c, d);
    VerifyReport rep = verify(kv, cfg, rc.tolerance);
    emit(rc, json{{"schema", 1},
                  {"args", kv.args},
                  {"expr", expr_to_json(kv.expr)},
                  {"numeric", rep.rhs.str(25)},
                  {"lattice", rep.lhs.str(25)},
                  {"diff", rep.diff},
                  {"pass", rep.pass}});
    return rep.pass ? 0 : 1;
}

int cmd_verify(const RunConfig& rc, const std::string& suite, std::vector<long> svals) {
    SummationConfig cfg = rc.summation();
    double tol = rc.tolerance;
    std::vector<VerifyReport> reports;

    if (suite == "catalog") {
        for (const auto& kv : catalog(rc.catalog_path)) reports.push_back(verify(kv, cfg, tol));
    } else if (suite == "fr01") {
        if (svals.empty()) svals = {1, 2, 3, 4};
        for (long s : svals) {
            auto t0 = std::chrono::steady_clock::now();
            G2Exponents g = g2_exponents({s, 2, 1, 1, 1, 1});
            HPReal lhs = s_sum_G2({1}, g, cfg);
            HPReal rhs = eval_numeric(fr01_rhs(s), cfg);
            VerifyReport rep;
            rep.target = "ssum{1}(s,2,1,1,1,1) s=" + std::to_string(s);
            rep.lhs = lhs;
            rep.rhs = rhs;
            rep.diff = hp_abs_diff(lhs, rhs);
            rep.tol = tol;
            rep.pass = rep.diff <= tol + lhs.error_bound + rhs.error_bound;
            rep.wall_ms =
                std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                    .count();
            reports.push_back(rep);
        }
    } else if (suite == "funcrel-grid") {
        if (svals.empty()) svals = {1, 2, 3};
        for (long p = 1; p <= 2; ++p)
            for (long q = 1; q <= 2; ++q)
                for (long r = 1; r <= 2; ++r)
                    for (long u = 1; u <= 2; ++u)
                        for (long v = 1; v <= 2; ++v)
                            for (long s : svals) {
                                if (s + p + q + r + u + v < 7) continue;
                                reports.push_back(verify(fn_rel(p, q, r, u, v, s), cfg, tol));
                            }
    } else if (suite == "weyl") {
        const std::vector<ExponentTuple> grid{{1, 2, 1, 1, 1, 1},
                                              {2, 2, 2, 2, 2, 2},
                                              {2, 2, 2, 3, 2, 2},
                                              {3, 2, 2, 2, 2, 3}};
        for (int I : {1, 2}) {
            for (const auto& t : grid) {
                auto t0 = std::chrono::steady_clock::now();
                HPReal lhs = s_sum_G2({I}, g2_exponents(t), cfg);
                HPReal rhs = hp_from_long(0, cfg.work_prec());
                for (const auto& term : functional_sum_terms({I}, t)) {
                    HPReal z = zeta_G2_cached(term.exps, cfg);
                    rhs = term.sign > 0 ? hp_add(rhs, z, cfg.work_prec())
                                        : hp_sub(rhs, z, cfg.work_prec());
                }
                VerifyReport rep;
                std::string ts;
                for (int i = 0; i < 6; ++i) ts += (i ? "," : "") + std::to_string(t[i]);
                rep.target = "ssum{" + std::to_string(I) + "}(" + ts + ")";
                rep.lhs = lhs;
                rep.rhs = rhs;
                rep.diff = hp_abs_diff(lhs, rhs);
                rep.tol = tol;
                rep.pass = rep.diff <= tol + lhs.error_bound + rhs.error_bound;
                rep.wall_ms = std::chrono::duration<double, std::milli>(
                                  std::chrono::steady_clock::now() - t0)
                                  .count();
                reports.push_back(rep);
            }
        }
    } else {
        throw std::invalid_argument("unknown suite: " + suite);
    }

    bool all = true;
    json arr = json::array();
    for (auto& r : reports) {
        all = all && r.pass;
        arr.push_back(report_json(r));
    }
    emit(rc, json{{"schema", 1}, {"suite", suite}, {"pass", all}, {"reports", arr}});
    return all ? 0 : 1;
}

int cmd_weyl(const RunConfig& rc, int I, const std::string& reduction,
             const std::vector<long>& svec) {
    std::set<int> Iset{I};
    json out{{"schema", 1}, {"I", I}};
    json words = json::array();
    for (const auto& w : parabolic_transversal(Iset))
        words.push_back(w.word.empty() ? "e" : w.word);
    out["transversal"] = words;
    if (!svec.empty()) {
        ExponentTuple s = parse_tuple(svec);
        out["signed_terms"] = signed_terms_json(functional_sum_terms(Iset, s));
        if (!reduction.empty()) {
            WeylElement w1;
            if (reduction == "w0s1")
                w1 = longest_element() * simple_reflection(1);
            else if (reduction == "w0s2")
                w1 = longest_element() * simple_reflection(2);
            else
                throw std::invalid_argument("--reduction must be w0s1 or w0s2");
            out["reduction_terms"] = signed_terms_json(reduction_terms(Iset, w1, s));
        }
    } else if (!reduction.empty()) {
        throw std::invalid_argument("--reduction requires --s");
    }
    emit(rc, out);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "zeta functions of rank-2 root systems: exact closed forms and rigorous numerics"};
    app.require_subcommand(1);

    RunConfig rc;
    app.add_option("--precision", rc.precision_bits, "working precision in bits")
        ->envname("ROOTZETA_PRECISION")
        ->capture_default_str();
    app.add_option("--tolerance", rc.tolerance, "verification tolerance")
        ->envname("ROOTZETA_TOLERANCE")
        ->capture_default_str();
    app.add_option("--max-outer", rc.max_outer, "cap on the truncation box edge")
        ->envname("ROOTZETA_MAX_OUTER")
        ->capture_default_str();
    app.add_option("--output", rc.output, "json or text")
        ->envname("ROOTZETA_OUTPUT")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();
    app.add_option("--catalog", rc.catalog_path, "catalog JSON path (default: bundled)")
        ->envname("ROOTZETA_CATALOG");

    auto* eval = app.add_subcommand("eval", "evaluate the six-form double sum");
    std::vector<std::string> eval_args;
    int ssum = 0;
    std::string var;
    eval->add_option("exponents", eval_args, "six exponents (five with --var)")->expected(-1);
    eval->add_option("--ssum", ssum, "evaluate the symmetrized sum for I = 1 or 2")
        ->check(CLI::IsMember({1, 2}));
    eval->add_option("--var", var, "slot=value for one real exponent, e.g. 1=2.5");

    auto* cf = app.add_subcommand("closed-form", "closed form of the (2a,b,b,2c-1,d,d) family");
    std::vector<long> cf_args;
    cf->add_option("abcd", cf_args, "a b c d")->expected(4);

    auto* ver = app.add_subcommand("verify", "run a verification suite");
    std::string suite;
    std::vector<long> svals;
    ver->add_option("--suite", suite, "catalog | fr01 | funcrel-grid | weyl")->required();
    ver->add_option("--s", svals, "values of the free variable (fr01 / funcrel-grid)");

    auto* weyl = app.add_subcommand("weyl", "inspect transversals and signed terms");
    int I = 1;
    std::string reduction;
    std::vector<long> wsvec;
    weyl->add_option("--I", I, "parabolic index set, 1 or 2")
        ->required()
        ->check(CLI::IsMember({1, 2}));
    weyl->add_option("--reduction", reduction, "reduce by w0s1 or w0s2");
    weyl->add_option("--s", wsvec, "exponent tuple (6 integers)")->expected(6);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;  // help/version exit clean, bad input exits 2
    }

    try {
        if (eval->parsed()) return cmd_eval(rc, eval_args, ssum, var);
        if (cf->parsed())
            return cmd_closed_form(rc, cf_args[0], cf_args[1], cf_args[2], cf_args[3]);
        if (ver->parsed()) return cmd_verify(rc, suite, svals);
        if (weyl->parsed()) return cmd_weyl(rc, I, reduction, wsvec);
    } catch (const HypothesisViolated& e) {
        std::cerr << "hypothesis violated: " << e.what() << "\n";
        return 2;
    } catch (const CosetMismatch& e) {
        std::cerr << "coset mismatch: " << e.what() << "\n";
        return 2;
    } catch (const ConvergenceError& e) {
        std::cerr << "convergence error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 2;
    } catch (const ArgumentOutOfRange& e) {
        std::cerr << "argument out of range: " << e.what() << "\n";
        return 2;
    } catch (const CatalogMismatch& e) {
        std::cerr << "catalog mismatch: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
