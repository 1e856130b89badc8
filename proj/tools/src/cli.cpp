#include "tca_cli/cli.hpp"

#include "builtin_series.hpp"
#include "oracle_suites.hpp"
#include "tca/dfinite.hpp"
#include "tca/grassmann.hpp"
#include "tca/json_io.hpp"
#include "tca/series_forms.hpp"
#include "tca/torus.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

namespace tca::cli {

namespace {

// Raised for a "not recognized" / "not found" verdict after its report has
// been written.
struct NotFound {};

struct Options {
    int d = -1;
    int r = -1;
    std::optional<int> truncate;
    std::string form = "sigma";
    std::string method = "kostka";
    bool text = false;
    int max_order = kDefaultMaxOrder;
    int max_degree = kDefaultMaxDegree;
    std::optional<int> length;
    std::string group;
    std::string rep;
    int nmax = -1;
    std::string series;
    std::string alpha = "[]";
    std::string partition;
    std::string input;
    std::string suite;
    int threads = 1;
};

class Emitter {
public:
    Emitter(std::string command, bool text, std::ostream& out) : text_(text), out_(out) {
        doc_["command"] = std::move(command);
        doc_["params"] = Json::object();
        doc_["truncation"] = nullptr;
        doc_["result"] = Json::object();
    }
    void param(const std::string& key, Json value) { doc_["params"][key] = std::move(value); }
    void truncation(std::optional<int> n) { doc_["truncation"] = n ? Json(*n) : Json(nullptr); }
    void field(const std::string& key, Json value, const std::string& text_value) {
        doc_["result"][key] = std::move(value);
        lines_.push_back(key + ": " + text_value);
    }
    void finish() {
        if (text_) {
            for (const auto& l : lines_) out_ << l << '\n';
            if (!doc_["truncation"].is_null())
                out_ << "truncation: " << doc_["truncation"].get<int>() << '\n';
        } else {
            out_ << doc_.dump(2) << '\n';
        }
    }

private:
    bool text_;
    std::ostream& out_;
    Json doc_;
    std::vector<std::string> lines_;
};

void require(bool ok, const std::string& message) {
    if (!ok) throw CLI::ValidationError(message);
}

void require_dr(const Options& o) {
    require(o.d >= 0, "--d is required and must be non-negative");
    require(o.r >= 0, "--r is required and must be non-negative");
    require(o.r <= o.d, "--r must not exceed --d");
}

std::string join(const std::vector<std::string>& xs) {
    std::string out;
    for (const auto& x : xs) out += (out.empty() ? "" : ", ") + x;
    return out;
}

std::string coeffs_text(const CoeffSeries& c) {
    std::vector<std::string> xs;
    for (const auto& x : c) xs.push_back(to_string(x));
    return "[" + join(xs) + "]";
}

std::string ints_text(const std::vector<Integer>& c) {
    std::vector<std::string> xs;
    for (const auto& x : c) xs.push_back(to_string(x));
    return "[" + join(xs) + "]";
}

Json read_json_input(const std::string& input) {
    std::string text = input;
    if (!input.empty() && input.front() == '@') {
        std::ifstream f(input.substr(1));
        if (!f) throw CLI::ValidationError("cannot read " + input.substr(1));
        std::stringstream ss;
        ss << f.rdbuf();
        text = ss.str();
    }
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseError(std::string("input is not valid JSON: ") + e.what());
    }
}

Partition parse_partition_flag(const std::string& text, const char* flag) {
    try {
        return Partition::parse(text);
    } catch (const std::invalid_argument& e) {
        throw CLI::ValidationError(std::string(flag) + ": " + e.what());
    }
}

// ---------------------------------------------------------------------------

void emit_sigma_forms(Emitter& em, const SigmaExpr& e, const Options& o) {
    const int N = o.truncate.value_or(8);
    if (o.form == "sigma") {
        em.field("sigma", to_json(e), e.to_string());
    } else if (o.form == "s") {
        em.truncation(N);
        const SymFunc f = sigma_expand(e, N);
        em.field("character", to_json(f), to_string(f));
    } else if (o.form == "enhanced") {
        em.truncation(N);
        const EnhancedExpr closed = phi_sigma(e);
        em.field("closed_form", to_json(closed), closed.to_string());
        const TSeries s = enhanced_expand(closed, N);
        em.field("expansion", to_json(s), s.to_string());
    } else {
        em.truncation(N);
        const ExpPoly h = ex_sigma(e);
        em.field("hilbert", to_json(h), h.to_string());
        const CoeffSeries c = h.taylor(N);
        std::vector<Integer> dims;
        for (int n = 0; n <= N; ++n) dims.push_back(Rational(c[n] * Rational(factorial(n))).get_num());
        em.field("dimensions", to_json(dims), ints_text(dims));
    }
}

void cmd_detring(Emitter& em, const Options& o) {
    require_dr(o);
    em.param("d", o.d);
    em.param("r", o.r);
    em.param("form", o.form);
    em.param("method", o.method);
    SigmaExpr e;
    if (o.method == "kostka") {
        e = detring_formal_character(o.d, o.r);
    } else if (o.method == "theta") {
        e = theta_r(LambdaGrClass::trivial(GrClass::structure_sheaf(o.d, o.r)));
    } else {
        RecognizeBounds b{o.r, 0, o.r * (o.d - o.r)};
        const int N = o.truncate.value_or(b.r_max + b.s_deg_max + b.sigma_wt_max + 5);
        const auto res = sigma_recognize(pushforward_module_character(o.d, o.r, Partition{}, N), b);
        em.param("recognize_truncation", N);
        if (!res.recognized()) {
            em.field("verdict", "not recognized", "not recognized");
            em.field("reason", res.reason, res.reason);
            em.finish();
            throw NotFound{};
        }
        e = *res.expr;
    }
    emit_sigma_forms(em, e, o);
}

LambdaGrClass theta_input(const Options& o) {
    if (!o.input.empty()) return lambda_grclass_from_json(read_json_input(o.input));
    require_dr(o);
    const Partition alpha = parse_partition_flag(o.alpha, "--alpha");
    return LambdaGrClass::trivial(GrClass::schur_class(o.d, o.r, alpha));
}

void cmd_theta(Emitter& em, const Options& o) {
    const LambdaGrClass c = theta_input(o);
    em.param("d", c.d());
    em.param("r", c.r());
    if (o.input.empty()) em.param("alpha", o.alpha);
    em.param("form", o.form);
    emit_sigma_forms(em, theta_r(c), o);
}

void cmd_hilbert(Emitter& em, const Options& o) {
    const LambdaGrClass c = theta_input(o);
    em.param("d", c.d());
    em.param("r", c.r());
    if (o.input.empty()) em.param("alpha", o.alpha);
    const int N = o.truncate.value_or(10);
    em.truncation(N);
    const ExpPoly h = mu_r(c);
    em.field("hilbert", to_json(h), h.to_string());
    const CoeffSeries coeffs = h.taylor(N);
    em.field("egf", to_json(coeffs), coeffs_text(coeffs));
    const auto roots = annihilator(h);
    em.field("annihilator", roots, [&] {
        std::vector<std::string> xs;
        for (int x : roots) xs.push_back(std::to_string(x));
        return "[" + join(xs) + "]";
    }());
}

void cmd_enhanced(Emitter& em, const Options& o) {
    require_dr(o);
    em.param("d", o.d);
    em.param("r", o.r);
    const int N = o.truncate.value_or(6);
    em.truncation(N);
    const EnhancedExpr closed = o.r == 1 ? rank1_enhanced_closed(o.d) : phi_sigma(detring_formal_character(o.d, o.r));
    em.field("closed_form", to_json(closed), closed.to_string());
    const TSeries s = enhanced_expand(closed, N);
    em.field("expansion", to_json(s), s.to_string());
    const CoeffSeries h = s.specialize_t1();
    em.field("egf", to_json(h), coeffs_text(h));
}

void cmd_gessel(Emitter& em, const Options& o) {
    require_dr(o);
    require(o.r >= 1, "--r must be positive for the Gessel determinant");
    em.param("d", o.d);
    em.param("r", o.r);
    const int N = o.truncate.value_or(6);
    em.truncation(N);
    const TSeries s = gessel_enhanced(o.d, o.r, N);
    em.field("expansion", to_json(s), s.to_string());
}

std::pair<std::vector<GroupFactor>, LaurentPoly> group_and_rep(const Options& o) {
    require(!o.group.empty(), "--group is required");
    require(!o.rep.empty(), "--rep is required");
    std::vector<GroupFactor> group;
    try {
        group = parse_group(o.group);
    } catch (const ParseError& e) {
        throw CLI::ValidationError(std::string("--group: ") + e.what());
    }
    const auto rep = builtin::representation(group, o.rep);
    if (!rep) throw CLI::ValidationError("--rep: unknown representation '" + o.rep + "'");
    return {group, *rep};
}

void cmd_invariants(Emitter& em, const Options& o) {
    require(o.nmax >= 0, "--nmax is required and must be non-negative");
    const auto [group, rep] = group_and_rep(o);
    em.param("group", o.group);
    em.param("rep", o.rep);
    em.param("nmax", o.nmax);
    const auto dims = invariant_dimensions(group, rep, o.nmax);
    em.field("dimensions", to_json(dims), ints_text(dims));
}

void cmd_dfinite(Emitter& em, const Options& o) {
    require(o.series.empty() != o.input.empty(), "exactly one of --series and --input is required");
    require(o.max_order >= 0 && o.max_degree >= 0, "search bounds must be non-negative");
    const long need = static_cast<long>(o.max_order + 1) * (o.max_degree + 1) + o.max_order + kGuessMargin;
    CoeffSeries f;
    if (!o.series.empty()) {
        const int length = o.length.value_or(static_cast<int>(need) + 20);
        require(length >= 0, "--length must be non-negative");
        const auto s = builtin::named_series(o.series, length);
        if (!s) throw CLI::ValidationError("--series: unknown series '" + o.series + "'");
        f = *s;
        em.param("series", o.series);
    } else {
        f = coeffs_from_json(read_json_input(o.input));
        em.param("input", o.input);
    }
    em.param("max_order", o.max_order);
    em.param("max_degree", o.max_degree);
    em.param("length", static_cast<long>(f.size()));
    const GuessResult res = guess_ode(f, o.max_order, o.max_degree);
    if (!res.found()) {
        em.field("verdict", "not found", "not found");
        em.field("note", res.note, res.note);
        em.finish();
        throw NotFound{};
    }
    em.field("operator", to_json(*res.op), res.op->to_string());
    em.field("order", res.op->order(), std::to_string(res.op->order()));
    const CoeffSeries residual = apply_ode(*res.op, f);
    em.field("verified_coefficients", static_cast<long>(residual.size()), std::to_string(residual.size()));
}

void cmd_fourier(Emitter& em, const Options& o) {
    require(o.d >= 0, "--d is required and must be non-negative");
    em.param("d", o.d);
    ExpPoly h;
    if (!o.input.empty()) {
        h = exppoly_from_json(read_json_input(o.input));
        em.param("input", o.input);
    } else {
        require(o.r >= 0 && o.r <= o.d, "either --input or a valid --r is required");
        em.param("r", o.r);
        h = ex_sigma(detring_formal_character(o.d, o.r));
    }
    em.field("hilbert", to_json(h), h.to_string());
    const ExpPoly dual = fourier_dual_hilbert(h, o.d);
    em.field("dual", to_json(dual), dual.to_string());
}

void cmd_charpoly(Emitter& em, const Options& o) {
    require_dr(o);
    em.param("d", o.d);
    em.param("r", o.r);
    const CharPolyForm form = detring_char_poly_form(o.d, o.r);
    std::vector<std::string> text;
    for (const auto& [i, p] : form.entries) text.push_back("p" + std::to_string(i) + " = " + p.to_string());
    em.field("form", to_json(form), join(text) + " (threshold " + std::to_string(form.threshold) + ")");
    em.field("degree_bound", form.satisfies_degree_bound(), form.satisfies_degree_bound() ? "holds" : "violated");
    if (!o.partition.empty()) {
        const Partition lambda = parse_partition_flag(o.partition, "--partition");
        em.param("partition", o.partition);
        const Integer v = character_at(form, lambda, std::max(lambda.largest(), 1));
        em.field("trace", integer_to_json(v), to_string(v));
    }
}

void cmd_hilbschur(Emitter& em, const Options& o) {
    require(!o.rep.empty(), "--rep is required");
    const auto v = builtin::object_character(o.rep);
    if (!v) throw CLI::ValidationError("--rep: unknown object '" + o.rep + "'");
    const int N = o.truncate.value_or(6);
    em.param("rep", o.rep);
    em.truncation(N);
    const int weight = v->max_degree();
    const TSeries hv = phi_enhanced(*v, N);
    em.field("object", to_json(hv), hv.to_string());
    const TSeries s = tca_enhanced_exp(phi_enhanced(*v, std::max(N, weight)), weight, N);
    em.field("expansion", to_json(s), s.to_string());
    const CoeffSeries h = s.specialize_t1();
    em.field("egf", to_json(h), coeffs_text(h));
}

int cmd_oracle(const Options& o, std::ostream& out) {
    const auto cases = suites::suite_cases(o.suite);
    if (!cases) throw CLI::ValidationError("--suite: unknown suite '" + o.suite + "'");
    const auto results = suites::run_cases(*cases, std::max(o.threads, 1));
    const auto failed = static_cast<std::size_t>(
        std::count_if(results.begin(), results.end(), [](const suites::CaseResult& r) { return !r.pass; }));
    if (o.text) {
        for (const auto& r : results) {
            out << (r.pass ? "PASS " : "FAIL ") << r.name << '\n';
            if (!r.pass) out << "  " << r.diff << '\n';
        }
        out << "suite " << o.suite << ": " << results.size() - failed << "/" << results.size() << " passed\n";
    } else {
        Json list = Json::array();
        for (const auto& r : results) {
            Json c = {{"name", r.name}, {"pass", r.pass}};
            if (!r.pass) c["diff"] = r.diff;
            list.push_back(std::move(c));
        }
        Emitter em("oracle-check", false, out);
        em.param("suite", o.suite);
        em.field("cases", std::move(list), "");
        em.field("passed", results.size() - failed, "");
        em.field("total", results.size(), "");
        em.finish();
    }
    return failed ? kExitOracleFailure : kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact characters and Hilbert series of modules over twisted commutative algebras", "tca"};
    app.require_subcommand(1);
    Options o;

    const auto add_output = [&](CLI::App* sub) {
        auto* json = sub->add_flag("--json", "JSON output (default)");
        auto* text = sub->add_flag("--text", o.text, "Human-readable output");
        json->excludes(text);
    };
    const auto add_dr = [&](CLI::App* sub) {
        sub->add_option("--d", o.d, "Rank of the bundle E");
        sub->add_option("--r", o.r, "Rank of the quotient / determinantal rank");
    };
    const auto add_truncate = [&](CLI::App* sub) {
        sub->add_option("--truncate", o.truncate, "Degree bound N")->check(CLI::NonNegativeNumber);
    };
    const auto add_threads = [&](CLI::App* sub) {
        sub->add_option("--threads", o.threads, "Cap on worker threads")->check(CLI::PositiveNumber);
    };
    const auto forms = CLI::IsMember({"sigma", "s", "enhanced", "hilbert"});

    auto* detring = app.add_subcommand("detring", "Formal character of the determinantal ring A/a_r");
    add_dr(detring);
    add_truncate(detring);
    detring->add_option("--form", o.form, "Output form")->check(forms);
    detring->add_option("--method", o.method, "Route")->check(CLI::IsMember({"kostka", "theta", "recognize"}));

    auto* theta = app.add_subcommand("theta", "theta_r of 1 (x) [S_alpha(Q)] or of a JSON class");
    add_dr(theta);
    add_truncate(theta);
    theta->add_option("--alpha", o.alpha, "Partition alpha");
    theta->add_option("--input", o.input, "LambdaGrClass JSON (or @file)");
    theta->add_option("--form", o.form, "Output form")->check(forms);

    auto* hilbert = app.add_subcommand("hilbert", "mu_r Hilbert series");
    add_dr(hilbert);
    add_truncate(hilbert);
    hilbert->add_option("--alpha", o.alpha, "Partition alpha");
    hilbert->add_option("--input", o.input, "LambdaGrClass JSON (or @file)");

    auto* enhanced = app.add_subcommand("enhanced", "Enhanced Hilbert series of A/a_r in closed form");
    add_dr(enhanced);
    add_truncate(enhanced);

    auto* gessel = app.add_subcommand("gessel", "Gessel determinant for A/a_r");
    add_dr(gessel);
    add_truncate(gessel);

    auto* invariants = app.add_subcommand("invariants", "dim (E^{tensor n})^G by torus integration");
    invariants->add_option("--group", o.group, "e.g. sl2, gl3, sl2xsl2, trivial");
    invariants->add_option("--rep", o.rep, "standard, dual, sym2, wedge2, standard+dual, or a dimension for trivial");
    invariants->add_option("--nmax", o.nmax, "Largest tensor power");
    add_threads(invariants);

    auto* dfinite = app.add_subcommand("dfinite", "Guess a linear ODE for a series");
    dfinite->add_option("--series", o.series, "catalan-egf, bell-egf, catalan-sq-ogf");
    dfinite->add_option("--input", o.input, "CoeffSeries JSON (or @file)");
    dfinite->add_option("--max-order", o.max_order, "Largest order R");
    dfinite->add_option("--max-degree", o.max_degree, "Largest coefficient degree D");
    dfinite->add_option("--length", o.length, "Number of coefficients of a named series");
    add_threads(dfinite);

    auto* fourier = app.add_subcommand("fourier", "Fourier shadow p_r(t) -> p_{d-r}(-t)");
    fourier->add_option("--d", o.d, "Rank of E");
    fourier->add_option("--r", o.r, "Use the determinantal ring A/a_r as input");
    fourier->add_option("--input", o.input, "ExpPoly JSON (or @file)");

    auto* charpoly = app.add_subcommand("charpoly", "Character polynomial of A/a_r");
    add_dr(charpoly);
    charpoly->add_option("--partition", o.partition, "Evaluate the trace at this cycle type");

    auto* hilbschur = app.add_subcommand("hilbschur", "Enhanced Hilbert series of Sym(V)");
    hilbschur->add_option("--rep", o.rep, "sym2, wedge2, tensorK, or a partition for S_lambda");
    add_truncate(hilbschur);

    auto* oracle = app.add_subcommand("oracle-check", "Run a named oracle suite");
    oracle->add_option("--suite", o.suite, "Suite name")->required();
    add_threads(oracle);

    for (auto* sub : {detring, theta, hilbert, enhanced, gessel, invariants, dfinite, fourier, charpoly, hilbschur, oracle})
        add_output(sub);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitBadFlags;
    }

    CLI::App* sub = app.get_subcommands().front();
    const std::string name = sub->get_name();
    try {
        if (sub == oracle) return cmd_oracle(o, out);
        Emitter em(name, o.text, out);
        if (sub == detring) cmd_detring(em, o);
        else if (sub == theta) cmd_theta(em, o);
        else if (sub == hilbert) cmd_hilbert(em, o);
        else if (sub == enhanced) cmd_enhanced(em, o);
        else if (sub == gessel) cmd_gessel(em, o);
        else if (sub == invariants) cmd_invariants(em, o);
        else if (sub == dfinite) cmd_dfinite(em, o);
        else if (sub == fourier) cmd_fourier(em, o);
        else if (sub == charpoly) cmd_charpoly(em, o);
        else cmd_hilbschur(em, o);
        em.finish();
        return kExitOk;
    } catch (const NotFound&) {
        return kExitNotFound;
    } catch (const CLI::ValidationError& e) {
        err << "error: " << e.what() << '\n';
        return kExitBadFlags;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitBadFlags;
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << '\n';
        return kExitPrecondition;
    }
}

}  // namespace tca::cli
