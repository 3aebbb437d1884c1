// seqexp: command-line front end for series generation, guessing,
// asymptotic analysis and constant identification.

#include <cctype>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "seqexp/asympt/amplitude.hpp"
#include "seqexp/asympt/analysis.hpp"
#include "seqexp/asympt/bst.hpp"
#include "seqexp/asympt/roots.hpp"
#include "seqexp/error.hpp"
#include "seqexp/guess/guess.hpp"
#include "seqexp/identify/identify.hpp"
#include "seqexp/io/bfile.hpp"
#include "seqexp/io/csv.hpp"
#include "seqexp/io/oeis.hpp"
#include "seqexp/io/report.hpp"
#include "seqexp/seqgen/enumerate.hpp"
#include "seqexp/seqgen/expand.hpp"
#include "seqexp/seqgen/generators.hpp"

namespace fs = std::filesystem;
using namespace seqexp;
using asympt::HpContext;
using asympt::HpReal;
using asympt::HpSeq;
using exact::BigInt;
using exact::BigRat;
using exact::Poly;
using io::Json;
using seqgen::RatSequence;
using seqgen::Sequence;

namespace {

// Exit codes besides 0 and CLI11's usage errors.
constexpr int kLibraryError = 1;
constexpr int kNotFound = 3;

struct Globals {
    int precision = 100;
    bool offline = false;
    std::string cache_dir;
    std::string report;
    std::string csv_dir;
    HpContext ctx() const { return HpContext{precision}; }
};

Globals G;

struct Input {
    std::string file;
    std::string oeis;
    std::string terms;
    long offset = 0;
    long take = 0;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::IoError, "cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const fs::path& path, const std::string& text) {
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text)) throw Error(ErrorCode::IoError, "cannot write " + path.string());
}

io::OeisClient oeis_client() {
    const fs::path dir = G.cache_dir.empty() ? io::default_cache_dir() : fs::path(G.cache_dir);
    return io::OeisClient(dir, G.offline);
}

void add_input_options(CLI::App* cmd, Input& in) {
    auto* f = cmd->add_option("-i,--input", in.file, "b-file holding the sequence");
    auto* o = cmd->add_option("--oeis", in.oeis, "A-number, read through the local cache");
    auto* t = cmd->add_option("--terms", in.terms, "comma-separated terms, integers or fractions");
    f->excludes(o)->excludes(t);
    o->excludes(t);
    cmd->add_option("--offset", in.offset, "index of the first --terms value");
    cmd->add_option("--take", in.take, "use only the first N terms");
}

RatSequence load_input(const Input& in, io::AnalysisReport& report) {
    RatSequence out;
    if (!in.file.empty()) {
        const std::string bytes = read_file(in.file);
        report.set_input("b-file " + fs::path(in.file).filename().string(), bytes);
        out = seqgen::to_rational(io::parse_bfile(bytes));
    } else if (!in.oeis.empty()) {
        auto client = oeis_client();
        const std::string bytes = client.fetch(in.oeis);
        report.set_input("oeis " + io::normalize_id(in.oeis), bytes);
        out = seqgen::to_rational(io::parse_bfile(bytes));
    } else if (!in.terms.empty()) {
        report.set_input("terms", in.terms);
        out.offset = in.offset;
        std::stringstream ss(in.terms);
        for (std::string item; std::getline(ss, item, ',');) out.terms.push_back(exact::parse_bigrat(item));
    } else {
        throw Error(ErrorCode::InvalidArgument, "no input: give --input, --oeis or --terms");
    }
    if (in.take > 0) out = out.prefix(out.offset + in.take);
    report.parameters()["terms_used"] = out.size();
    report.parameters()["first_index"] = out.offset;
    return out;
}

Sequence load_integers(const Input& in, io::AnalysisReport& report) { return seqgen::to_integer(load_input(in, report)); }

// Points (x_n, y_n) for every index of s.
template <typename XFn>
std::vector<std::pair<HpReal, HpReal>> series_points(const HpSeq& s, XFn x_of) {
    std::vector<std::pair<HpReal, HpReal>> pts;
    for (long n = s.offset; n < s.end_index(); ++n) pts.emplace_back(x_of(n), s.at(n));
    return pts;
}

HpReal inv_pow(long n, const BigRat& p) {
    const HpContext ctx = G.ctx();
    return ctx.make(1L) / asympt::pow(ctx.make(n), p);
}

void write_csv(io::AnalysisReport& report, const std::string& key, const std::vector<std::pair<HpReal, HpReal>>& pts,
               const std::string& header = "x,y") {
    if (G.csv_dir.empty()) return;
    const std::string name = key + ".csv";
    const std::string text = io::emit_csv(io::to_points(pts), header);
    write_file(fs::path(G.csv_dir) / name, text);
    report.add_file(key, name, text);
}

Json poly_family(const std::vector<Poly>& family, const std::string& var) {
    Json arr = Json::array();
    for (const auto& p : family) {
        Json coeffs = Json::array();
        for (const auto& c : p.coeffs()) coeffs.push_back(exact::to_string(c));
        arr.push_back({{"text", p.to_string(var)}, {"coefficients", coeffs}});
    }
    return arr;
}

std::vector<Poly> parse_family(const std::string& text, const std::string& var) {
    std::vector<Poly> out;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ';');) out.push_back(exact::parse_poly(item, var));
    if (out.size() < 2) throw Error(ErrorCode::InvalidArgument, "need at least two ';'-separated coefficients");
    return out;
}

std::string quoted_digits(int d) { return std::to_string(d) + " digits"; }

// ---- gen / oracle ----------------------------------------------------------

struct GenArgs {
    std::string kind;
    std::size_t n = 20;
    std::string pattern;
    std::string out;
};

Sequence generate(const GenArgs& a) {
    if (a.kind == "lconvex-area") return seqgen::gen_lconvex_area(a.n);
    if (a.kind == "lconvex-perimeter") return seqgen::gen_lconvex_perimeter(a.n);
    if (a.kind == "stack") return seqgen::gen_stack_area(a.n);
    if (a.pattern.empty()) throw Error(ErrorCode::InvalidArgument, "ascent needs --pattern");
    return seqgen::enum_ascent_avoiding(seqgen::Pattern::parse(a.pattern), a.n);
}

int run_gen(const GenArgs& a, io::AnalysisReport& report) {
    report.parameters()["kind"] = a.kind;
    report.parameters()["n"] = a.n;
    if (!a.pattern.empty()) report.parameters()["pattern"] = a.pattern;
    const Sequence s = generate(a);
    report.add_sequence(a.kind, s);
    if (!a.out.empty()) write_file(a.out, io::render_bfile(s));
    return 0;
}

// Closed forms for the three patterns with known counts, n >= 1.
std::optional<BigInt> ascent_closed_form(const std::string& pattern, long n, const BigInt& catalan) {
    BigInt p;
    if (pattern == "012") {
        mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(n - 1));
        return p;
    }
    if (pattern == "102") {
        mpz_ui_pow_ui(p.get_mpz_t(), 3, static_cast<unsigned long>(n - 1));
        return (p + 1) / 2;
    }
    if (pattern == "101") return catalan;
    return std::nullopt;
}

int run_oracle(const GenArgs& a, io::AnalysisReport& report) {
    report.parameters()["kind"] = a.kind;
    report.parameters()["n"] = a.n;
    Sequence brute, reference;
    std::string against;
    if (a.kind == "lconvex") {
        brute = seqgen::enum_lconvex_bruteforce(a.n);
        reference = seqgen::gen_lconvex_area(a.n + 1);
        against = "area generating function";
    } else if (a.kind == "stack") {
        brute = seqgen::enum_stack_bruteforce(a.n);
        reference = seqgen::gen_stack_area(a.n);
        against = "area generating function";
    } else {
        if (a.pattern.empty()) throw Error(ErrorCode::InvalidArgument, "ascent needs --pattern");
        report.parameters()["pattern"] = a.pattern;
        brute = seqgen::enum_ascent_avoiding(seqgen::Pattern::parse(a.pattern), a.n);
        reference = brute;
        BigInt catalan = 1;
        bool known = false;
        for (long n = 1; n < brute.end_index(); ++n) {
            catalan = catalan * 2 * (2 * n - 1) / (n + 1);
            if (auto v = ascent_closed_form(a.pattern, n, catalan)) {
                reference.terms[static_cast<std::size_t>(n - reference.offset)] = *v;
                known = true;
            }
        }
        against = known ? "closed form" : "nothing (no closed form known for this pattern)";
    }
    report.add_sequence("enumerated", brute);
    long mismatch = -1;
    for (long n = brute.offset; n < brute.end_index() && mismatch < 0; ++n) {
        if (n == 0 && a.kind == "ascent") continue;
        if (reference.has(n) && reference.at(n) != brute.at(n)) mismatch = n;
    }
    report.add_text("compared_against", against);
    report.add_text("agree", mismatch < 0 ? "true" : "false");
    if (mismatch >= 0) {
        report.add_note("first mismatch at index " + std::to_string(mismatch));
        return kNotFound;
    }
    return 0;
}

// ---- guess / expand --------------------------------------------------------

struct GuessArgs {
    std::string kind;
    Input in;
    int rmax = 5, dmax = 2, dxmax = 12, dymax = 3;
    std::size_t margin = 4;
    bool ode = false;
    std::size_t predict = 0;
};

int run_guess(const GuessArgs& a, io::AnalysisReport& report) {
    guess::GuessOptions opts;
    opts.margin = a.margin;
    report.parameters()["margin"] = a.margin;
    if (a.kind == "rec") {
        report.parameters()["rmax"] = a.rmax;
        report.parameters()["dmax"] = a.dmax;
        const Sequence s = load_integers(a.in, report);
        const auto rec = guess::guess_prec(s, a.rmax, a.dmax, opts);
        if (!rec) {
            report.add_text("recurrence", "none");
            return kNotFound;
        }
        report.add_text("recurrence", rec->to_string());
        report.add_structure("recurrence", {{"order", rec->order()}, {"degree", rec->degree()}, {"coefficients", poly_family(rec->coeffs, "n")}});
        report.add_text("residual_zero_through", std::to_string(guess::prec_residual(*rec, s)));
        if (a.predict > 0) {
            report.parameters()["predict"] = a.predict;
            const Sequence longer = seqgen::expand_prec(*rec, s, s.size() + a.predict);
            Sequence next{s.end_index(), {longer.terms.begin() + static_cast<long>(s.size()), longer.terms.end()}};
            report.add_sequence("predicted", next);
        }
        if (a.ode) {
            if (s.offset != 0) throw Error(ErrorCode::InvalidArgument, "--ode needs a sequence starting at index 0");
            const guess::LinODE ode = guess::prec_to_ode(*rec, s);
            report.add_text("ode", ode.to_string());
            report.add_structure("ode", {{"order", ode.order()}, {"coefficients", poly_family(ode.coeffs, "x")}});
            const auto res = guess::ode_residual(ode, s);
            report.add_text("ode_residual", res ? "nonzero at x^" + std::to_string(*res) : "zero");
        }
        return 0;
    }
    report.parameters()["dxmax"] = a.dxmax;
    report.parameters()["dymax"] = a.dymax;
    const RatSequence s = load_input(a.in, report);
    const auto P = guess::guess_algeq(s, a.dxmax, a.dymax, opts);
    if (!P) {
        report.add_text("equation", "none");
        return kNotFound;
    }
    report.add_text("equation", P->to_string());
    report.add_structure("equation", {{"y_degree", P->y_degree()}, {"x_degree", P->x_degree()}, {"coefficients", poly_family(P->coeffs, "x")}});
    const auto res = guess::algeq_residual(*P, s);
    report.add_text("residual", res ? "nonzero at x^" + std::to_string(*res) : "zero");
    return 0;
}

struct ExpandArgs {
    std::string kind;
    Input in;
    std::string rec, eq, seed, num, den;
    std::size_t n = 100;
    std::string out;
};

int run_expand(const ExpandArgs& a, io::AnalysisReport& report) {
    report.parameters()["n"] = a.n;
    if (a.kind == "rec") {
        report.parameters()["recurrence"] = a.rec;
        const guess::PRecurrence rec{parse_family(a.rec, "n")};
        const Sequence init = load_integers(a.in, report);
        const Sequence s = seqgen::expand_prec(rec, init, a.n);
        report.add_sequence("expanded", s);
        if (!a.out.empty()) write_file(a.out, io::render_bfile(s));
        return 0;
    }
    RatSequence s;
    if (a.kind == "algeq") {
        report.parameters()["equation"] = a.eq;
        report.parameters()["seed"] = a.seed;
        const guess::AlgEq P{parse_family(a.eq, "x")};
        RatSequence seed{0, {}};
        std::stringstream ss(a.seed);
        for (std::string item; std::getline(ss, item, ',');) seed.terms.push_back(exact::parse_bigrat(item));
        s = seqgen::expand_algebraic(P, seed, a.n);
    } else {
        report.parameters()["numerator"] = a.num;
        report.parameters()["denominator"] = a.den;
        s = seqgen::expand_rational(exact::parse_poly(a.num), exact::parse_poly(a.den), a.n);
    }
    report.add_sequence("expanded", s);
    if (!a.out.empty()) {
        bool integral = true;
        for (const auto& t : s.terms) integral = integral && exact::is_integral(t);
        if (!integral) throw Error(ErrorCode::NonIntegral, "b-file output needs integer terms");
        write_file(a.out, io::render_bfile(seqgen::to_integer(s)));
    }
    return 0;
}

// ---- analyze ---------------------------------------------------------------

struct AnalyzeArgs {
    std::string kind;
    Input in;
    std::string mu;
    std::string mu_from_poly;
    bool square = false;
    std::size_t window = 10;
};

std::optional<HpReal> growth_constant(const std::string& mu, const std::string& mu_poly, io::AnalysisReport& report) {
    const HpContext ctx = G.ctx();
    if (!mu.empty()) {
        report.parameters()["mu"] = mu;
        return asympt::hp_eval(mu, ctx);
    }
    if (!mu_poly.empty()) {
        report.parameters()["mu_from_poly"] = mu_poly;
        const auto root = asympt::poly_smallest_positive_root(exact::parse_poly(mu_poly), G.precision);
        report.add_scalar("rho", root.value, G.precision);
        return ctx.make(1L) / root.value;
    }
    return std::nullopt;
}

void add_estimate(io::AnalysisReport& report, const std::string& name, const asympt::Estimate& e) {
    report.add_scalar(name, e.value, e.spread, G.precision);
}

void powerlaw_section(const HpSeq& s, const HpReal& mu, std::size_t window, io::AnalysisReport& report) {
    const auto pl = asympt::powerlaw_pipeline(s, mu);
    report.add_scalar("mu_used", mu, G.precision);
    add_estimate(report, "g", pl.g_estimate);
    add_estimate(report, "g2", asympt::tail_estimate(pl.g2, window));
    report.add_sequence("g_n", pl.g, 30);
    report.add_sequence("g2_n", pl.g2, 30);
    const BigRat one(1), two(2);
    write_csv(report, "fig11", series_points(pl.g, [&](long n) { return inv_pow(n, one); }));
    write_csv(report, "fig12", series_points(pl.g2, [&](long n) { return inv_pow(n, two); }));
}

int run_analyze(const AnalyzeArgs& a, io::AnalysisReport& report) {
    const HpContext ctx = G.ctx();
    report.parameters()["window"] = a.window;
    const Sequence raw = load_integers(a.in, report);
    const BigRat one(1), half(1, 2), two(2), three(3);

    if (a.kind == "ratios") {
        const HpSeq r = asympt::ratios(asympt::to_hpseq(raw, ctx));
        add_estimate(report, "ratio", asympt::tail_estimate(r, a.window));
        report.add_sequence("r_n", r, 30);
        write_csv(report, "fig2", series_points(r, [&](long n) { return inv_pow(n, one); }));
        write_csv(report, "fig3", series_points(r, [&](long n) { return inv_pow(n, half); }));
        // log(r_n - 1) against log n and its local gradient
        HpSeq rm1{r.offset, {}};
        for (const auto& v : r.values) rm1.values.push_back(v - ctx.make(1L));
        long first = rm1.offset;
        while (first < rm1.end_index() && rm1.at(first).sign() <= 0) ++first;
        HpSeq pos{first, {rm1.values.begin() + (first - rm1.offset), rm1.values.end()}};
        if (pos.size() >= 3) {
            std::vector<std::pair<HpReal, HpReal>> ll;
            for (long n = pos.offset; n < pos.end_index(); ++n) {
                if (pos.at(n).sign() > 0) ll.emplace_back(asympt::log(ctx.make(n)), asympt::log(pos.at(n)));
            }
            write_csv(report, "fig4", ll);
            const HpSeq grad = asympt::loglog_gradient(pos);
            const auto ge = asympt::tail_estimate(grad, a.window);
            add_estimate(report, "loglog_gradient", ge);
            report.add_scalar("beta", ge.value + ctx.make(1L), ge.spread, G.precision);
            report.add_sequence("gradient_n", grad, 30);
            write_csv(report, "fig5", series_points(grad, [&](long n) { return inv_pow(n, half); }));
        } else {
            report.add_note("r_n - 1 is not positive on enough terms for the log-log gradient");
        }
        return 0;
    }

    if (a.kind == "stretched") {
        const HpSeq lam = asympt::stretched_lambda(raw, ctx);
        const auto fit = asympt::stretched_triple_fit(lam);
        const auto e1 = asympt::tail_estimate(fit.e1, a.window);
        add_estimate(report, "e1", e1);
        report.add_scalar("e1_squared", e1.value * e1.value, G.precision);
        add_estimate(report, "e2", asympt::tail_estimate(fit.e2, a.window));
        add_estimate(report, "e3", asympt::tail_estimate(fit.e3, a.window));
        report.add_sequence("e1_n", fit.e1, 30);
        report.add_sequence("e2_n", fit.e2, 30);
        report.add_sequence("e3_n", fit.e3, 30);
        write_csv(report, "fig6", series_points(fit.e1, [&](long n) { return inv_pow(n, half); }));
        write_csv(report, "fig7", series_points(fit.e2, [&](long n) { return inv_pow(n, half); }));
        return 0;
    }

    HpSeq s = asympt::to_hpseq(raw, ctx);
    if (a.kind == "square" || a.square) {
        s = asympt::square_subsample(s);
        report.parameters()["square"] = true;
        report.add_text("square_terms", std::to_string(s.size()));
    }
    if (a.kind == "square") {
        const HpSeq r = asympt::ratios(s);
        const HpSeq lin = asympt::elim_power(r, 1);
        const HpSeq t = asympt::elim_power(lin, 2);
        add_estimate(report, "ratio_sq", asympt::tail_estimate(r, a.window));
        add_estimate(report, "intercept", asympt::tail_estimate(lin, a.window));
        const auto te = asympt::tail_estimate(t, a.window);
        add_estimate(report, "mu_estimate", te);
        // mu = exp(pi sqrt(a))
        const HpReal la = asympt::log(te.value) / ctx.pi();
        report.add_scalar("a_estimate", la * la, G.precision);
        report.add_sequence("r_sq_n", r, 30);
        report.add_sequence("intercept_n", lin, 30);
        report.add_sequence("t_n", t, 30);
        write_csv(report, "fig8", series_points(r, [&](long n) { return inv_pow(n, one); }));
        write_csv(report, "fig9", series_points(lin, [&](long n) { return inv_pow(n, two); }));
        write_csv(report, "fig10", series_points(t, [&](long n) { return inv_pow(n, three); }));
        const auto mu = growth_constant(a.mu, a.mu_from_poly, report);
        powerlaw_section(s, mu ? *mu : te.value, a.window, report);
        if (!mu) report.add_note("exponent estimates use the extrapolated mu; pass --mu to supply an exact value");
        return 0;
    }

    // powerlaw
    auto mu = growth_constant(a.mu, a.mu_from_poly, report);
    if (!mu) {
        const HpSeq t = asympt::elim_power(asympt::ratios(s), 1);
        mu = asympt::tail_estimate(t, a.window).value;
        report.add_note("mu taken from the linear intercepts of the ratios");
    }
    const HpSeq r = asympt::ratios(s);
    add_estimate(report, "ratio", asympt::tail_estimate(r, a.window));
    powerlaw_section(s, *mu, a.window, report);
    return 0;
}

// ---- extrapolate / fit / identify -------------------------------------------

struct IdentifyOpts {
    std::string maxden = "100000";
    int digits = 0;
    bool enabled = false;
};

void identify_constant(const std::string& name, const HpReal& x, const IdentifyOpts& o, io::AnalysisReport& report) {
    const HpContext ctx = G.ctx();
    std::optional<int> digits;
    if (o.digits > 0) digits = o.digits;
    const auto id = identify::identify_with_multipliers(x, identify::default_dictionary(ctx), exact::parse_bigint(o.maxden), digits);
    if (id) {
        report.add_identification(name, *id);
    } else {
        report.add_note(name + ": no rational multiple of a dictionary constant found");
    }
}

struct BstArgs {
    Input in;
    std::string w = "1/2";
    bool square = false;
    std::string stretched_a;
    std::string stretched_delta;
    IdentifyOpts ident;
};

int run_bst(const BstArgs& a, io::AnalysisReport& report) {
    const HpContext ctx = G.ctx();
    const BigRat w = exact::parse_bigrat(a.w);
    report.parameters()["w"] = exact::to_string(w);
    const Sequence raw = load_integers(a.in, report);
    const bool normalize = !a.stretched_a.empty();
    const HpReal sa = normalize ? asympt::hp_eval(a.stretched_a, ctx) : ctx.make(0L);
    const HpReal sd = normalize ? asympt::hp_eval(a.stretched_delta.empty() ? "0" : a.stretched_delta, ctx) : ctx.make(0L);
    if (normalize) {
        report.parameters()["stretched_a"] = a.stretched_a;
        report.parameters()["stretched_delta"] = a.stretched_delta;
        report.add_note("normalized values are l_n n^delta / exp(pi sqrt(a n)); their limit c satisfies l_n ~ c exp(pi sqrt(a n)) / n^delta, "
                        "the reciprocal of the c_n = exp(pi sqrt(a n)) / (l_n n^delta) orientation");
    }
    report.parameters()["square"] = a.square;

    HpSeq values{0, {}};
    std::vector<HpReal> xs;
    bool first = true;
    const long step_limit = raw.end_index();
    for (long k = std::max<long>(raw.offset, 1); ; ++k) {
        const long n = a.square ? k * k : k;
        if (n >= step_limit) break;
        const HpReal nn = ctx.make(n);
        HpReal v = ctx.make(raw.at(n));
        if (normalize) v = v * asympt::pow(nn, sd) / asympt::exp(ctx.pi() * asympt::sqrt(sa * nn));
        if (first) values.offset = k;
        first = false;
        values.values.push_back(v);
        xs.push_back(ctx.make(1L) / nn);
    }
    const auto res = asympt::bst_extrapolate(values, w, xs);
    report.add_scalar("limit", res.value, res.spread, G.precision);
    report.add_text("depth", std::to_string(res.depth));
    report.add_text("values_used", std::to_string(values.size()));
    if (a.ident.enabled) identify_constant("limit", res.value, a.ident, report);
    return 0;
}

struct FitArgs {
    Input in;
    std::string mu;
    std::string mu_from_poly;
    std::string g = "0";
    int K = 10;
    std::vector<long> shifts{10};
    IdentifyOpts ident;
};

int run_fit(const FitArgs& a, io::AnalysisReport& report) {
    const HpContext ctx = G.ctx();
    const BigRat divisor = exact::parse_bigrat(a.g);
    report.parameters()["g"] = exact::to_string(divisor);
    report.parameters()["K"] = a.K;
    report.parameters()["shifts"] = a.shifts;
    const auto mu = growth_constant(a.mu, a.mu_from_poly, report);
    if (!mu) throw Error(ErrorCode::InvalidArgument, "fit amplitude needs --mu or --mu-from-poly");
    const Sequence s = load_integers(a.in, report);
    asympt::AmplitudeOptions opts;
    opts.shifts = a.shifts;
    const auto m = asympt::amplitude_fit(s, *mu, divisor, a.K, ctx, opts);
    report.add_scalar("mu", m.mu, G.precision);
    report.add_scalar("model_g", m.g, G.precision);
    report.add_scalar("C", m.C, m.spread, G.precision);
    report.add_scalar("condition", m.condition, 6);
    report.add_text("last_index", std::to_string(m.last_index));
    HpSeq corr{1, m.a};
    report.add_sequence("corrections", corr, 30);
    if (!m.spread.is_zero()) {
        const double stable = -asympt::log(abs(m.spread / m.C)).to_double() / std::log(10.0);
        report.add_text("window_stable", quoted_digits(static_cast<int>(stable)));
    }
    if (a.ident.enabled) identify_constant("C", m.C, a.ident, report);
    return 0;
}

// Significant digits of a plain decimal literal such as "0.0239385"; nullopt
// for expressions, whose digits are those of the working precision.
std::optional<int> literal_digits(const std::string& text) {
    int digits = 0;
    bool leading = true;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (c == '-' && i == 0) continue;
        if (c == '.') continue;
        if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
        if (c != '0') leading = false;
        if (!leading) ++digits;
    }
    if (digits == 0) return std::nullopt;
    return digits;
}

struct IdentifyArgs {
    std::string kind;
    std::string value;
    std::string maxden = "100000";
    int digits = 0;
    int maxdeg = 4;
};

int run_identify(const IdentifyArgs& a, io::AnalysisReport& report) {
    const HpContext ctx = G.ctx();
    report.parameters()["value"] = a.value;
    const HpReal x = asympt::hp_eval(a.value, ctx);
    report.add_scalar("value", x, G.precision);
    std::optional<int> digits = literal_digits(a.value);
    if (a.digits > 0) digits = a.digits;
    if (digits) report.parameters()["digits"] = *digits;
    if (a.kind == "rational" || a.kind == "mult") {
        report.parameters()["maxden"] = a.maxden;
        const BigInt maxden = exact::parse_bigint(a.maxden);
        std::optional<identify::Identification> id;
        if (a.kind == "rational") {
            if (auto q = identify::identify_rational(x, maxden, digits)) {
                id = identify::Identification{identify::IdentKind::Rational, "1", *q, {}, digits.value_or(identify::carried_digits(x))};
            }
        } else {
            id = identify::identify_with_multipliers(x, identify::default_dictionary(ctx), maxden, digits);
        }
        if (!id) {
            report.add_note("no identification found");
            return kNotFound;
        }
        report.add_identification("value", *id);
        return 0;
    }
    report.parameters()["maxdeg"] = a.maxdeg;
    const int d = digits.value_or(std::min(G.precision, identify::carried_digits(x)));
    const auto p = identify::min_poly(x, a.maxdeg, d);
    if (!p) {
        report.add_note("no polynomial of degree <= " + std::to_string(a.maxdeg) + " verified");
        return kNotFound;
    }
    identify::Identification id;
    id.kind = identify::IdentKind::Algebraic;
    id.poly = *p;
    id.certified_digits = d;
    report.add_identification("value", id);
    return 0;
}

int run_fetch(const std::string& id, const std::string& out, io::AnalysisReport& report) {
    auto client = oeis_client();
    const std::string bytes = client.fetch(id);
    report.set_input("oeis " + io::normalize_id(id), bytes);
    const Sequence s = io::parse_bfile(bytes);
    report.add_sequence(io::normalize_id(id), s);
    std::cerr << (client.last_from_cache() ? "served from cache " : "fetched and cached at ") << client.cache_path(id).string() << "\n";
    if (!out.empty()) write_file(out, bytes);
    return 0;
}

// Output destinations do not change results, so they stay out of the echo.
std::vector<std::string> command_echo(int argc, char** argv) {
    static const std::vector<std::string> drop{"--report", "--csv-dir", "--out", "-o", "--cache-dir"};
    std::vector<std::string> out;
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        bool skip = false;
        for (const auto& d : drop) {
            if (arg == d) {
                skip = true;
                ++i;
            } else if (arg.rfind(d + "=", 0) == 0) {
                skip = true;
            }
        }
        if (!skip) out.push_back(arg);
    }
    return out;
}

void print_summary(const Json& doc) {
    for (const auto& [name, v] : doc["scalars"].items()) {
        std::cout << name << " = " << v["value"].get<std::string>();
        if (v.contains("spread")) std::cout << "  (spread " << v["spread"].get<std::string>() << ")";
        std::cout << "\n";
    }
    for (const auto& [name, v] : doc["identifications"].items()) {
        std::cout << name << " identified as " << v["form"].get<std::string>() << "\n";
    }
    for (const auto& [name, v] : doc["sequences"].items()) {
        const auto& values = v["values"];
        std::cout << name << ": " << values.size() << " terms from index " << v["offset"];
        if (values.size() <= 12) {
            std::cout << ":";
            for (const auto& t : values) std::cout << " " << t.get<std::string>();
        }
        std::cout << "\n";
    }
    for (const auto& note : doc["notes"]) std::cout << "note: " << note.get<std::string>() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact series generation, recurrence guessing and asymptotic analysis"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--precision", G.precision, "working precision in decimal digits")->check(CLI::Range(10, 100000));
    app.add_flag("--offline", G.offline, "never touch the network; OEIS reads use the cache only");
    app.add_option("--cache-dir", G.cache_dir, "OEIS cache directory")->envname("SEQEXP_CACHE_DIR");
    app.add_option("--report", G.report, "write the JSON report here instead of stdout");
    app.add_option("--csv-dir", G.csv_dir, "directory for plot CSV files, named by figure key");

    std::function<int(io::AnalysisReport&)> action;

    GenArgs gen;
    auto* gen_cmd = app.add_subcommand("gen", "generate a counting sequence");
    gen_cmd->add_option("kind", gen.kind)->required()->check(CLI::IsMember({"lconvex-area", "lconvex-perimeter", "stack", "ascent"}));
    gen_cmd->add_option("--n", gen.n, "number of terms (ascent: maximum length)")->required();
    gen_cmd->add_option("--pattern", gen.pattern, "pattern for ascent, e.g. 201");
    gen_cmd->add_option("-o,--out", gen.out, "also write a b-file");
    gen_cmd->callback([&] { action = [&](io::AnalysisReport& r) { return run_gen(gen, r); }; });

    GenArgs orc;
    auto* orc_cmd = app.add_subcommand("oracle", "check a generator against brute-force enumeration");
    orc_cmd->add_option("kind", orc.kind)->required()->check(CLI::IsMember({"lconvex", "stack", "ascent"}));
    orc_cmd->add_option("--n", orc.n, "largest area or length")->required();
    orc_cmd->add_option("--pattern", orc.pattern, "pattern for ascent");
    orc_cmd->callback([&] { action = [&](io::AnalysisReport& r) { return run_oracle(orc, r); }; });

    GuessArgs gs;
    auto* guess_cmd = app.add_subcommand("guess", "guess a recurrence or algebraic equation");
    guess_cmd->add_option("kind", gs.kind)->required()->check(CLI::IsMember({"rec", "algeq"}));
    add_input_options(guess_cmd, gs.in);
    guess_cmd->add_option("--rmax", gs.rmax, "largest recurrence order");
    guess_cmd->add_option("--dmax", gs.dmax, "largest coefficient degree in n");
    guess_cmd->add_option("--dxmax", gs.dxmax, "largest degree in x");
    guess_cmd->add_option("--dymax", gs.dymax, "largest degree in y");
    guess_cmd->add_option("--margin", gs.margin, "equations beyond the unknown count");
    guess_cmd->add_flag("--ode", gs.ode, "also derive the differential equation (rec)");
    guess_cmd->add_option("--predict", gs.predict, "predict this many further terms (rec)");
    guess_cmd->callback([&] { action = [&](io::AnalysisReport& r) { return run_guess(gs, r); }; });

    ExpandArgs ex;
    auto* expand_cmd = app.add_subcommand("expand", "expand a recurrence, algebraic equation or rational function");
    expand_cmd->add_option("kind", ex.kind)->required()->check(CLI::IsMember({"rec", "algeq", "rational"}));
    add_input_options(expand_cmd, ex.in);
    expand_cmd->add_option("--rec", ex.rec, "p_0; p_1; ...; p_r in n, for sum p_j(n) u(n+j) = 0");
    expand_cmd->add_option("--eq", ex.eq, "c_0; c_1; ... in x, for sum c_j(x) y^j = 0");
    expand_cmd->add_option("--seed", ex.seed, "leading coefficients fixing the branch");
    expand_cmd->add_option("--num", ex.num, "numerator polynomial in x");
    expand_cmd->add_option("--den", ex.den, "denominator polynomial in x");
    expand_cmd->add_option("--n", ex.n, "number of terms")->required();
    expand_cmd->add_option("-o,--out", ex.out, "also write a b-file");
    expand_cmd->callback([&] { action = [&](io::AnalysisReport& r) { return run_expand(ex, r); }; });

    AnalyzeArgs an;
    auto* analyze_cmd = app.add_subcommand("analyze", "ratio, stretched-exponential and power-law diagnostics");
    analyze_cmd->add_option("kind", an.kind)->required()->check(CLI::IsMember({"ratios", "stretched", "powerlaw", "square"}));
    add_input_options(analyze_cmd, an.in);
    analyze_cmd->add_option("--mu", an.mu, "growth constant expression, e.g. exp(pi*sqrt(13/6))");
    analyze_cmd->add_option("--mu-from-poly", an.mu_from_poly, "mu = 1/smallest positive root of this polynomial in x");
    analyze_cmd->add_flag("--square", an.square, "powerlaw: use the subsequence at square indices");
    analyze_cmd->add_option("--window", an.window, "tail window for estimates and spreads");
    analyze_cmd->callback([&] { action = [&](io::AnalysisReport& r) { return run_analyze(an, r); }; });

    BstArgs bst;
    auto* ext_cmd = app.add_subcommand("extrapolate", "sequence extrapolation");
    std::string ext_kind;
    ext_cmd->add_option("method", ext_kind)->required()->check(CLI::IsMember({"bst"}));
    add_input_options(ext_cmd, bst.in);
    ext_cmd->add_option("--w", bst.w, "correction exponent, corrections in powers of (1/n)^w");
    ext_cmd->add_flag("--square", bst.square, "use indices n = k^2 only");
    ext_cmd->add_option("--stretched-a", bst.stretched_a, "normalize by exp(pi sqrt(a n)) / n^delta before extrapolating");
    ext_cmd->add_option("--stretched-delta", bst.stretched_delta, "delta for --stretched-a");
    ext_cmd->add_flag("--identify", bst.ident.enabled, "identify the limit against the multiplier dictionary");
    ext_cmd->add_option("--maxden", bst.ident.maxden, "largest denominator for identification");
    ext_cmd->add_option("--id-digits", bst.ident.digits, "digits trusted for identification");
    ext_cmd->callback([&] { action = [&](io::AnalysisReport& r) { return run_bst(bst, r); }; });

    FitArgs fit;
    auto* fit_cmd = app.add_subcommand("fit", "amplitude fit for u(n) ~ C mu^n / n^g");
    std::string fit_kind;
    fit_cmd->add_option("model", fit_kind)->required()->check(CLI::IsMember({"amplitude"}));
    add_input_options(fit_cmd, fit.in);
    fit_cmd->add_option("--mu", fit.mu, "growth constant expression");
    fit_cmd->add_option("--mu-from-poly", fit.mu_from_poly, "mu = 1/smallest positive root of this polynomial in x");
    fit_cmd->add_option("--g", fit.g, "power in the denominator, e.g. 9/2");
    fit_cmd->add_option("--K", fit.K, "number of 1/n^k corrections");
    fit_cmd->add_option("--shifts", fit.shifts, "window shifts for the stability estimate");
    fit_cmd->add_flag("--identify", fit.ident.enabled, "identify C against the multiplier dictionary");
    fit_cmd->add_option("--maxden", fit.ident.maxden, "largest denominator for identification");
    fit_cmd->add_option("--id-digits", fit.ident.digits, "digits trusted for identification");
    fit_cmd->callback([&] { action = [&](io::AnalysisReport& r) { return run_fit(fit, r); }; });

    IdentifyArgs id;
    auto* id_cmd = app.add_subcommand("identify", "recognize a numerical constant");
    id_cmd->add_option("kind", id.kind)->required()->check(CLI::IsMember({"rational", "mult", "minpoly"}));
    id_cmd->add_option("--value", id.value, "decimal value or expression")->required();
    id_cmd->add_option("--maxden", id.maxden, "largest denominator");
    id_cmd->add_option("--digits", id.digits, "digits trusted");
    id_cmd->add_option("--maxdeg", id.maxdeg, "largest degree for minpoly");
    id_cmd->callback([&] { action = [&](io::AnalysisReport& r) { return run_identify(id, r); }; });

    std::string fetch_id, fetch_out;
    auto* fetch_cmd = app.add_subcommand("fetch", "download an OEIS b-file into the cache");
    fetch_cmd->add_option("id", fetch_id, "A-number")->required();
    fetch_cmd->add_option("-o,--out", fetch_out, "also copy the b-file here");
    fetch_cmd->callback([&] { action = [&](io::AnalysisReport& r) { return run_fetch(fetch_id, fetch_out, r); }; });

    CLI11_PARSE(app, argc, argv);

    io::AnalysisReport report(command_echo(argc, argv));
    report.parameters()["precision"] = G.precision;
    int code = 0;
    try {
        code = action(report);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kLibraryError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kLibraryError;
    }
    try {
        const std::string text = report.to_string();
        if (G.report.empty()) {
            std::cout << text;
        } else {
            write_file(G.report, text);
            print_summary(report.document());
            std::cout << "digest " << report.digest() << "\n";
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kLibraryError;
    }
    return code;
}
