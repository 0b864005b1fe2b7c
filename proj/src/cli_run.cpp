#include "wm/cli_run.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "wm/chain_family.hpp"
#include "wm/correlation.hpp"
#include "wm/errors.hpp"
#include "wm/generators.hpp"
#include "wm/integer_set.hpp"
#include "wm/interval_removal.hpp"
#include "wm/liouville.hpp"
#include "wm/ll_property.hpp"
#include "wm/patterns.hpp"
#include "wm/rado.hpp"
#include "wm/ratlin.hpp"
#include "wm/report.hpp"
#include "wm/rng.hpp"
#include "wm/wm_decision.hpp"

namespace wm {

namespace {

using nlohmann::json;

constexpr const char* kVersion = "0.1.0";

json rat_json(const Rat& q) { return rat_str(q); }

json int_json(const Int& v) {
    if (v.fits_slong_p()) return (long long)v.get_si();
    return v.get_str();
}

json set_summary(const IntegerSet& a) {
    return json{{"horizon", a.horizon()}, {"count", a.count()}, {"density", rat_json(density(a))}};
}

json witness_json(const std::optional<PatternWitness>& w) {
    if (!w) return nullptr;
    return json{{"kind", kind_str(w->kind)},
                {"elements", w->elements},
                {"auxiliary", w->auxiliary}};
}

json certificate_json(const SolvabilityCertificate& c) {
    json x1 = json::array(), x2 = json::array(), f = json::array();
    for (const auto& v : c.x1) x1.push_back(int_json(v));
    for (const auto& v : c.x2) x2.push_back(int_json(v));
    for (const auto& v : c.f) f.push_back(int_json(v));
    json e = json::array();
    for (size_t idx : c.e) e.push_back(idx + 1);  // 1-based coordinates
    json groups = json::array();
    for (const auto& g : c.groups) {
        json grp = json::array();
        for (size_t idx : g) grp.push_back(idx + 1);
        groups.push_back(grp);
    }
    return json{{"x1", x1}, {"x2", x2}, {"f", f}, {"E", e}, {"groups", groups}};
}

std::vector<uint64_t> parse_u64_list(const std::string& text) {
    std::vector<uint64_t> out;
    if (text.empty()) return out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            size_t used = 0;
            unsigned long long v = std::stoull(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            out.push_back(v);
        } catch (const std::exception&) {
            throw format_error("bad integer list entry: '" + tok + "'");
        }
    }
    return out;
}

// "a,b,c" with c possibly negative
EquationABC parse_abc(const std::string& text) {
    std::stringstream ss(text);
    std::string sa, sb, sc;
    if (!std::getline(ss, sa, ',') || !std::getline(ss, sb, ',') || !std::getline(ss, sc))
        throw format_error("--abc wants a,b,c");
    try {
        return EquationABC::make(std::stoull(sa), std::stoull(sb), std::stoll(sc));
    } catch (const std::invalid_argument&) {
        throw format_error("bad --abc entry in '" + text + "'");
    } catch (const std::out_of_range&) {
        throw format_error("--abc entry out of range in '" + text + "'");
    }
}

// "2/5..3/5"
std::pair<Rat, Rat> parse_interval(const std::string& text) {
    size_t dots = text.find("..");
    if (dots == std::string::npos) throw format_error("interval must look like u/v..u'/v'");
    return {parse_rat(text.substr(0, dots)), parse_rat(text.substr(dots + 2))};
}

std::pair<uint64_t, uint64_t> parse_alpha_hex(const std::string& hex) {
    if (hex.size() != 32) throw format_error("--alpha-bits wants exactly 32 hex digits");
    try {
        uint64_t hi = std::stoull(hex.substr(0, 16), nullptr, 16);
        uint64_t lo = std::stoull(hex.substr(16), nullptr, 16);
        return {hi, lo};
    } catch (const std::exception&) {
        throw format_error("bad hex in --alpha-bits");
    }
}

struct InputTracker {
    json inputs = json::object();
    void touch(const std::string& path) { inputs[path] = file_digest(path); }
};

RatMatrix load_matrix(const std::string& path, InputTracker& rb) {
    rb.touch(path);
    std::ifstream is(path);
    if (!is) throw format_error("cannot open: " + path);
    return parse_matrix(is);
}

RatVector load_vector(const std::string& path, InputTracker& rb) {
    rb.touch(path);
    std::ifstream is(path);
    if (!is) throw format_error("cannot open: " + path);
    return parse_vector(is);
}

IntegerSet load_set_tracked(const std::string& path, InputTracker& rb) {
    rb.touch(path);
    return load_set(path);
}

}  // namespace

CliResult run_cli(const std::vector<std::string>& args, std::ostream& out) {
    auto started = std::chrono::steady_clock::now();

    CLI::App app{"workbench for pattern solvability inside positive-density random-like sets"};
    app.require_subcommand(1);

    uint64_t seed_value = 0, seed_stream = 0;
    bool expect_witness = false;
    bool json_flag = true;  // reports are always JSON; the flag is accepted for symmetry

    // generate ----------------------------------------------------------------
    auto* gen = app.add_subcommand("generate", "construct a set and write it to a file");
    gen->require_subcommand(1);
    uint64_t gen_n = 0;
    std::string gen_out, gen_p = "1/2", gen_alpha, gen_interval = "2/5..3/5", gen_residues;
    uint64_t gen_mod = 0;
    bool gen_binary = false;

    auto* gen_normal = gen->add_subcommand("normal", "independent coin flips per integer");
    gen_normal->add_option("--n", gen_n)->required();
    gen_normal->add_option("--seed", seed_value);
    gen_normal->add_option("--stream", seed_stream);
    gen_normal->add_option("--p", gen_p, "inclusion probability p/q");
    gen_normal->add_option("--out", gen_out)->required();
    gen_normal->add_flag("--binary", gen_binary);

    auto* gen_sturm = gen->add_subcommand("sturmian", "irrational rotation window set");
    gen_sturm->add_option("--n", gen_n)->required();
    gen_sturm->add_option("--alpha-bits", gen_alpha, "128-bit fraction, 32 hex digits");
    gen_sturm->add_option("--interval", gen_interval, "u/v..u'/v'");
    gen_sturm->add_option("--out", gen_out)->required();
    gen_sturm->add_flag("--binary", gen_binary);

    auto* gen_per = gen->add_subcommand("periodic", "residue classes modulo m");
    gen_per->add_option("--n", gen_n)->required();
    gen_per->add_option("--mod", gen_mod)->required();
    gen_per->add_option("--residues", gen_residues)->required();
    gen_per->add_option("--out", gen_out)->required();
    gen_per->add_flag("--binary", gen_binary);

    // construct ----------------------------------------------------------------
    auto* con = app.add_subcommand("construct", "counterexample machines");
    con->require_subcommand(1);
    std::string con_abc, con_q, con_in, con_out, con_p1, con_p2;
    uint64_t con_n = 0;
    bool con_binary = false;

    auto* con_chain = con->add_subcommand("as-chain", "chain-parity set killing a x = b y + c");
    con_chain->add_option("--abc", con_abc, "a,b,c")->required();
    con_chain->add_option("--seed", seed_value);
    con_chain->add_option("--stream", seed_stream);
    con_chain->add_option("--n", con_n)->required();
    con_chain->add_option("--in", con_in, "base set file (default: coin flips from the seed)");
    con_chain->add_option("--out", con_out)->required();
    con_chain->add_flag("--binary", con_binary);

    auto* con_lq = con->add_subcommand("lambda-q", "negative set of multiplicative signs");
    con_lq->add_option("--n", con_n)->required();
    con_lq->add_option("--seed", seed_value);
    con_lq->add_option("--stream", seed_stream);
    con_lq->add_option("--q", con_q, "explicit primes carrying sign -1");
    con_lq->add_option("--out", con_out)->required();
    con_lq->add_flag("--binary", con_binary);

    auto* con_rm = con->add_subcommand("remove-intervals", "trim polynomial gap intervals");
    con_rm->add_option("--in", con_in)->required();
    con_rm->add_option("--p1", con_p1, "coefficients, ascending degree")->required();
    con_rm->add_option("--p2", con_p2, "coefficients, ascending degree")->required();
    con_rm->add_option("--out", con_out)->required();
    con_rm->add_flag("--binary", con_binary);

    // test -----------------------------------------------------------------------
    auto* tst = app.add_subcommand("test", "statistical verdicts");
    tst->require_subcommand(1);
    std::string tst_in, tst_tau;
    unsigned tst_kmax = 3;
    uint64_t tst_imax = 8, tst_n = 0, tst_l = 1;
    auto* tst_norm = tst->add_subcommand("normality", "shifted correlation gate");
    tst_norm->add_option("--in", tst_in)->required();
    tst_norm->add_option("--kmax", tst_kmax);
    tst_norm->add_option("--imax", tst_imax);
    tst_norm->add_option("--nn", tst_n, "number of start positions (default horizon - imax)");
    tst_norm->add_option("--tau", tst_tau, "explicit gate p/q (default 10/sqrt(N))");
    tst_norm->add_flag("--expect-witness", expect_witness, "exit 1 on a FAIL verdict");

    auto* tst_ll = tst->add_subcommand("ll-window", "least window forcing l consecutive gaps");
    tst_ll->add_option("--in", tst_in)->required();
    tst_ll->add_option("--l", tst_l)->required();

    // decide ------------------------------------------------------------------------
    auto* dec = app.add_subcommand("decide", "exact linear solvability verdicts");
    dec->require_subcommand(1);
    std::string dec_matrix, dec_rhs;
    auto* dec_lin = dec->add_subcommand("linear", "solvable inside every WM-style set?");
    dec_lin->add_option("--matrix", dec_matrix)->required();
    dec_lin->add_option("--rhs", dec_rhs, "right-hand side file (default all zero)");
    dec_lin->add_flag("--json", json_flag);
    dec_lin->add_flag("--expect-witness", expect_witness);
    auto* dec_rado = dec->add_subcommand("rado", "columns condition");
    dec_rado->add_option("--matrix", dec_matrix)->required();
    dec_rado->add_flag("--json", json_flag);
    dec_rado->add_flag("--expect-witness", expect_witness);

    // find ---------------------------------------------------------------------------
    auto* fnd = app.add_subcommand("find", "pattern witness searches");
    fnd->require_subcommand(1);
    std::string fnd_in, fnd_s, fnd_e;
    unsigned fnd_k = 3, fnd_m = 2;
    uint64_t fnd_zmax = 100;
    bool fnd_z_in_set = false, fnd_allow_one = false;
    for (const char* kind : {"schur", "mult-schur", "mult-square", "sum-square", "diff-square"}) {
        auto* sc = fnd->add_subcommand(kind);
        sc->add_option("--in", fnd_in)->required();
        sc->add_flag("--json", json_flag);
        sc->add_flag("--expect-witness", expect_witness);
        if (std::string(kind) == "mult-schur") sc->add_flag("--allow-one", fnd_allow_one);
    }
    auto* fnd_ap = fnd->add_subcommand("ap");
    fnd_ap->add_option("--in", fnd_in)->required();
    fnd_ap->add_option("--k", fnd_k)->required();
    fnd_ap->add_flag("--expect-witness", expect_witness);
    auto* fnd_ip = fnd->add_subcommand("ip");
    fnd_ip->add_option("--in", fnd_in)->required();
    fnd_ip->add_option("--m", fnd_m)->required();
    fnd_ip->add_flag("--expect-witness", expect_witness);
    auto* fnd_poly = fnd->add_subcommand("poly-system");
    std::vector<std::string> fnd_polys;
    fnd_poly->add_option("--in", fnd_in)->required();
    fnd_poly->add_option("--poly", fnd_polys, "coefficients, ascending degree; repeatable")
        ->required();
    fnd_poly->add_option("--zmax", fnd_zmax);
    fnd_poly->add_flag("--z-in-set", fnd_z_in_set);
    fnd_poly->add_flag("--expect-witness", expect_witness);
    auto* fnd_rec = fnd->add_subcommand("recurrence");
    fnd_rec->add_option("--s", fnd_s)->required();
    fnd_rec->add_option("--e", fnd_e)->required();
    fnd_rec->add_flag("--expect-witness", expect_witness);

    // montecarlo ------------------------------------------------------------------------
    auto* mc = app.add_subcommand("montecarlo", "second moment of shifted sign correlations");
    std::string mc_shifts;
    uint64_t mc_n = 0, mc_trials = 100;
    mc->add_option("--shifts", mc_shifts, "comma-separated shift tuple (may be empty)");
    mc->add_option("--n", mc_n)->required();
    mc->add_option("--trials", mc_trials);
    mc->add_option("--seed", seed_value);
    mc->add_option("--stream", seed_stream);

    // convert --------------------------------------------------------------------------
    auto* cvt = app.add_subcommand("convert", "re-encode a set file");
    std::string cvt_in, cvt_out, cvt_to = "binary";
    cvt->add_option("--in", cvt_in)->required();
    cvt->add_option("--out", cvt_out)->required();
    cvt->add_option("--to", cvt_to)->check(CLI::IsMember({"text", "binary"}));

    json report;
    report["schema"] = "wm/1";
    report["version"] = kVersion;
    report["command"] = args;

    int exit_code = 0;
    InputTracker rb;
    json payload;

    try {
        std::vector<std::string> argv_copy = args;
        std::vector<char*> argv;
        std::string prog = "wm";
        argv.push_back(prog.data());
        for (auto& a : argv_copy) argv.push_back(a.data());
        app.parse(int(argv.size()), argv.data());

        Seed seed{seed_value, seed_stream};
        (void)json_flag;

        auto save_and_summarize = [&](const IntegerSet& s, const std::string& path, bool binary) {
            save_set(path, s, binary);
            payload = set_summary(s);
            payload["out"] = path;
            payload["format"] = binary ? "binary" : "text";
        };

        if (gen_normal->parsed()) {
            IntegerSet s = random_normal(gen_n, seed, parse_rat(gen_p));
            save_and_summarize(s, gen_out, gen_binary);
        } else if (gen_sturm->parsed()) {
            auto [lo, hi] = parse_interval(gen_interval);
            SturmianParams params = SturmianParams::sqrt2_interval(lo, hi);
            if (!gen_alpha.empty()) {
                auto [ahi, alo] = parse_alpha_hex(gen_alpha);
                params.alpha_hi = ahi;
                params.alpha_lo = alo;
            }
            IntegerSet s = sturmian(gen_n, params);
            save_and_summarize(s, gen_out, gen_binary);
        } else if (gen_per->parsed()) {
            IntegerSet s = periodic_set(gen_n, gen_mod, parse_u64_list(gen_residues));
            save_and_summarize(s, gen_out, gen_binary);
        } else if (con_chain->parsed()) {
            EquationABC eq = parse_abc(con_abc);
            IntegerSet base =
                con_in.empty() ? random_normal(con_n, seed) : load_set_tracked(con_in, rb);
            ChainSetResult r = build_chain_set(base, eq);
            save_and_summarize(r.set, con_out, con_binary);
            payload["vacuously_unsolvable"] = r.vacuously_unsolvable;
            payload["equation"] = {{"a", eq.a}, {"b", eq.b}, {"c", eq.c}};
        } else if (con_lq->parsed()) {
            QSignAssignment q = con_q.empty() ? QSignAssignment::from_seed(seed)
                                              : QSignAssignment::from_primes(parse_u64_list(con_q));
            MultSignResult r = mult_liouville(con_n, q);
            save_and_summarize(r.negatives, con_out, con_binary);
        } else if (con_rm->parsed()) {
            IntegerSet base = load_set_tracked(con_in, rb);
            IntegerSet r = remove_poly_intervals(base, IntPolynomial::parse(con_p1),
                                                 IntPolynomial::parse(con_p2));
            save_and_summarize(r, con_out, con_binary);
        } else if (tst_norm->parsed()) {
            IntegerSet s = load_set_tracked(tst_in, rb);
            NormalityOptions opt;
            opt.max_order = tst_kmax;
            opt.max_shift = tst_imax;
            opt.n = tst_n;
            if (!tst_tau.empty()) opt.tau = parse_rat(tst_tau);
            NormalityReport rep = normality_test(s, opt);
            payload = {{"pass", rep.pass},
                       {"worst_shifts", rep.worst_shifts},
                       {"worst_value", rat_json(rep.worst_value)},
                       {"tuples_checked", rep.tuples_checked},
                       {"n", rep.n},
                       {"tau", rat_json(rep.tau)},
                       {"tau_note", rep.tau_note}};
            if (expect_witness && !rep.pass) exit_code = 1;
        } else if (tst_ll->parsed()) {
            IntegerSet s = load_set_tracked(tst_in, rb);
            auto l = ll_window(s, tst_l);
            payload = {{"l", tst_l},
                       {"satisfied", l.has_value()},
                       {"window", l ? json(*l) : json(nullptr)}};
        } else if (dec_lin->parsed()) {
            RatMatrix b = load_matrix(dec_matrix, rb);
            RatVector d(b.rows(), Rat(0));
            if (!dec_rhs.empty()) d = load_vector(dec_rhs, rb);
            if (d.size() != b.rows()) throw format_error("rhs length must match matrix rows");
            Verdict v = decide_wm_solvable(b, d);
            payload = {{"verdict", v.solvable ? "solvable" : "not-solvable"},
                       {"reason", v.reason ? json(reason_str(*v.reason)) : json(nullptr)},
                       {"certificate",
                        v.certificate ? certificate_json(*v.certificate) : json(nullptr)}};
            if (v.certificate) payload["verified"] = verify_certificate(b, d, *v.certificate).ok;
            if (expect_witness && !v.solvable) exit_code = 1;
        } else if (dec_rado->parsed()) {
            RatMatrix a = load_matrix(dec_matrix, rb);
            RadoResult r = rado_regular(a);
            json blocks = json::array();
            for (const auto& blk : r.blocks) {
                json jb = json::array();
                for (size_t c : blk) jb.push_back(c + 1);
                blocks.push_back(jb);
            }
            json coeffs = json::array();
            for (size_t i = 0; i < r.coeffs.size(); ++i) {
                json entry = json::object();
                for (size_t j = 0; j < r.span_columns[i].size(); ++j)
                    entry[std::to_string(r.span_columns[i][j] + 1)] = rat_json(r.coeffs[i][j]);
                coeffs.push_back(entry);
            }
            payload = {{"regular", r.regular},
                       {"level", r.blocks.size()},
                       {"blocks", blocks},
                       {"coefficients", coeffs}};
            if (expect_witness && !r.regular) exit_code = 1;
        } else if (fnd->parsed()) {
            std::optional<PatternWitness> w;
            if (fnd_rec->parsed()) {
                IntegerSet s = load_set_tracked(fnd_s, rb);
                IntegerSet e = load_set_tracked(fnd_e, rb);
                w = recurrence_witness(s, e);
            } else {
                IntegerSet a = load_set_tracked(fnd_in, rb);
                const std::string kind = fnd->get_subcommands().front()->get_name();
                if (kind == "schur") w = find_schur(a);
                else if (kind == "mult-schur") w = find_mult_schur(a, fnd_allow_one);
                else if (kind == "mult-square") w = find_mult_square(a);
                else if (kind == "sum-square") w = find_sum_square(a);
                else if (kind == "diff-square") w = find_diff_square(a);
                else if (kind == "ap") w = find_ap(a, fnd_k);
                else if (kind == "ip") w = ip_prefix(a, fnd_m);
                else if (kind == "poly-system") {
                    std::vector<IntPolynomial> polys;
                    for (const auto& p : fnd_polys) polys.push_back(IntPolynomial::parse(p));
                    w = additive_poly_witness(a, polys, fnd_zmax, fnd_z_in_set);
                }
            }
            payload = {{"found", w.has_value()}, {"witness", witness_json(w)}};
            if (expect_witness && !w) exit_code = 1;
        } else if (mc->parsed()) {
            auto shifts = parse_u64_list(mc_shifts);
            SecondMomentReport rep = second_moment_mc(shifts, mc_n, mc_trials, seed);
            json per = json::array();
            for (const Rat& t : rep.per_trial) per.push_back(rat_json(t));
            payload = {{"shifts", rep.shifts},
                       {"n", rep.n},
                       {"trials", rep.trials},
                       {"mean_square", rat_json(rep.mean_square)},
                       {"per_trial", per}};
        } else if (cvt->parsed()) {
            IntegerSet s = load_set_tracked(cvt_in, rb);
            bool binary = cvt_to == "binary";
            save_set(cvt_out, s, binary);
            payload = set_summary(s);
            payload["out"] = cvt_out;
            payload["format"] = cvt_to;
        }

        report["seed"] = {{"value", seed_value}, {"stream", seed_stream}};
    } catch (const CLI::CallForHelp&) {
        out << app.help() << std::endl;
        return CliResult{0, json{{"help", true}}};
    } catch (const CLI::ParseError& e) {
        report["error"] = std::string("usage: ") + e.what();
        exit_code = 2;
    } catch (const format_error& e) {
        report["error"] = std::string("format: ") + e.what();
        exit_code = 2;
    } catch (const precondition_error& e) {
        report["error"] = std::string("precondition: ") + e.what();
        exit_code = 2;
    } catch (const budget_error& e) {
        report["error"] = std::string("budget: ") + e.what();
        exit_code = 3;
    } catch (const horizon_error& e) {
        report["error"] = std::string("horizon: ") + e.what();
        exit_code = 3;
    } catch (const error& e) {
        report["error"] = e.what();
        exit_code = 3;
    }

    report["inputs"] = rb.inputs;
    report["payload"] = payload;
    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - started)
                       .count();
    report["elapsed_ms"] = elapsed;
    out << report.dump(2) << std::endl;
    return CliResult{exit_code, report};
}

}  // namespace wm
