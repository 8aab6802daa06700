// cutspec: exact cut-monoid arithmetic, quasi-valuations, and prime-spectrum
// verification over lexicographic value groups.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "cutspec/fixtures.hpp"
#include "cutspec/json_io.hpp"
#include "cutspec/quasival.hpp"
#include "cutspec/verify.hpp"
#include "cutspec/version.hpp"

namespace {

using namespace cutspec;

// ---------------------------------------------------------------------------
// Cut expression parser: literals, +, n*, - gamma, Hplus(j), embed/principal.

struct CutParser {
    const std::string& s;
    size_t pos = 0;
    int rank;

    CutParser(const std::string& text, int r) : s(text), rank(r) {}

    [[noreturn]] void fail(const std::string& msg) {
        throw std::invalid_argument("parse error at position " + std::to_string(pos) + ": " +
                                    msg);
    }
    void skip_ws() {
        while (pos < s.size() && isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!eat(c)) fail(std::string("expected '") + c + "'");
    }
    bool peek_word(const std::string& w) {
        skip_ws();
        return s.compare(pos, w.size(), w) == 0;
    }
    bool eat_word(const std::string& w) {
        if (peek_word(w)) {
            pos += w.size();
            return true;
        }
        return false;
    }
    long long integer() {
        skip_ws();
        size_t start = pos;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
        while (pos < s.size() && isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) fail("expected an integer");
        return std::stoll(s.substr(start, pos - start));
    }
    std::vector<Coord> int_list(char open, char close) {
        expect(open);
        std::vector<Coord> v;
        if (!eat(close)) {
            v.push_back(integer());
            while (eat(',')) v.push_back(integer());
            expect(close);
        }
        return v;
    }
    GroupElem group() {
        skip_ws();
        std::vector<Coord> v;
        if (pos < s.size() && s[pos] == '(')
            v = int_list('(', ')');
        else if (pos < s.size() && s[pos] == '[')
            v = int_list('[', ']');
        else
            v.push_back(integer());
        if (static_cast<int>(v.size()) == 1 && rank > 1) fail("group element needs rank coordinates");
        if (static_cast<int>(v.size()) != rank) fail("group element needs rank coordinates");
        return GroupElem(v);
    }
    CutOrInfty atom() {
        skip_ws();
        if (eat('(')) {
            CutOrInfty inner = expr();
            expect(')');
            return inner;
        }
        if (eat_word("embed") || eat_word("principal")) {
            expect('(');
            GroupElem g = group();
            expect(')');
            return CutOrInfty::fin(embed(g));
        }
        if (eat_word("prefix")) {
            expect('(');
            std::vector<Coord> v = int_list('[', ']');
            expect(')');
            if (v.empty() || static_cast<int>(v.size()) > rank)
                fail("prefix length must be in [1, rank]");
            return CutOrInfty::fin(Cut::prefix(v));
        }
        if (eat_word("Hplus")) {
            expect('(');
            long long jdx = integer();
            expect(')');
            if (jdx < 0 || jdx > rank) fail("isolated-subgroup index out of [0, rank]");
            return CutOrInfty::fin(
                isolated_plus(IsolatedSubgroup(static_cast<int>(jdx), rank), rank));
        }
        if (eat_word("bottom")) return CutOrInfty::fin(Cut::bottom());
        if (eat_word("top")) return CutOrInfty::fin(Cut::top());
        if (eat_word("infty")) return CutOrInfty::inf();
        // A bare integer scale: n * atom
        skip_ws();
        if (pos < s.size() && (isdigit(static_cast<unsigned char>(s[pos])))) {
            long long n = integer();
            expect('*');
            CutOrInfty a = atom();
            if (a.infty) return a;
            return CutOrInfty::fin(scale_cut(n, a.cut));
        }
        fail("expected a cut atom");
    }
    CutOrInfty expr() {
        CutOrInfty acc = atom();
        for (;;) {
            skip_ws();
            if (eat('+')) {
                acc = add_cut_inf(acc, atom());
            } else if (eat('-')) {
                GroupElem g = group();
                acc = sub_group(acc, g);
            } else {
                break;
            }
        }
        return acc;
    }
    CutOrInfty parse() {
        CutOrInfty v = expr();
        skip_ws();
        if (pos != s.size()) fail("trailing input");
        return v;
    }
};

std::string read_arg_or_file(const std::string& arg) {
    if (!arg.empty() && arg[0] == '@') {
        std::ifstream in(arg.substr(1));
        if (!in) throw std::invalid_argument("cannot read " + arg.substr(1));
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }
    return arg;
}

Instance load_target(const std::string& target, std::optional<int> rank,
                     const std::vector<std::string>& dirs) {
    if (target.size() > 5 && target.substr(target.size() - 5) == ".json") {
        std::ifstream in(target);
        if (!in) throw std::invalid_argument("cannot read " + target);
        Json j = Json::parse(in);
        return resolve_instance(j, rank, dirs);
    }
    return load_fixture(target, rank, dirs);
}

int run_cut(int rank, const std::string& expr) {
    CutParser p(expr, rank);
    CutOrInfty v = p.parse();
    std::cout << cutinf_to_json(v).dump() << "\n";
    return 0;
}

int run_qv(const std::string& target, std::optional<int> rank, const std::string& element,
           const std::string& which, const std::vector<std::string>& dirs) {
    Instance inst = load_target(target, rank, dirs);
    AlgebraElem x = algebra_elem_from_json(Json::parse(read_arg_or_file(element)), inst.rank());
    Json out;
    out["element"] = algebra_elem_to_json(x);
    auto eval_into = [&](const std::string& name) {
        if (name == "filter") {
            out["values"]["filter"] = cutinf_to_json(filter_qv_of(inst.alg).eval(x));
        } else if (name == "min_formula") {
            MinimalBasis b = inst.generators ? minimal_generators(inst.alg, *inst.generators)
                                             : minimal_generators(inst.alg);
            out["values"]["min_formula"] = cutinf_to_json(min_formula_qv(inst.alg, b).eval(x));
        } else if (name == "entry_min") {
            out["values"]["entry_min"] = cutinf_to_json(entry_min_qv(inst.alg).eval(x));
        } else {
            throw std::invalid_argument("unknown quasi-valuation '" + name + "'");
        }
    };
    if (which == "both") {
        eval_into("filter");
        try {
            eval_into("min_formula");
        } catch (const NotFinitelyGenerated& e) {
            out["values"]["min_formula"] = Json{{"unavailable", e.what()}};
        }
    } else {
        eval_into(which);
    }
    std::cout << out.dump(2) << "\n";
    return 0;
}

int run_spec(const std::string& target, std::optional<int> rank, long long bound,
             const std::vector<std::string>& dirs) {
    if (target.empty()) {
        int r = rank.value_or(1);
        Json out;
        Json base = Json::array();
        for (const auto& [h, p] : spec_base(r))
            base.push_back(Json{{"isolated_index", h.index},
                                {"boundary", cut_to_json(p.boundary)}});
        out["base"] = std::move(base);
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    Instance inst = load_target(target, rank, dirs);
    ContractionMap m = enumerate_spec(inst.alg, bound);
    std::cout << contraction_map_to_json(m).dump(2) << "\n";
    return 0;
}

int run_verify(const std::string& target, const VerifyOptions& opts, const std::string& report,
               const std::vector<std::string>& dirs) {
    auto start = std::chrono::steady_clock::now();
    Json out;
    bool ok = true;
    if (target == "all") {
        RunReport run = verify_all(opts, dirs);
        out = std::move(run.json);
        ok = run.ok;
        for (const auto& r : out["reports"])
            std::cout << (r["ok"].get<bool>() ? "PASS " : "FAIL ")
                      << r["fixture"].get<std::string>() << "\n";
    } else {
        Instance inst = load_target(target, std::nullopt, dirs);
        InstanceReport rep = verify_instance(inst, opts);
        out = rep.json;
        ok = rep.ok();
        std::cout << (ok ? "PASS " : "FAIL ") << rep.name << "\n";
        for (const auto& f : rep.failures) std::cout << "  " << f << "\n";
    }
    if (!report.empty()) {
        std::ofstream f(report);
        if (!f) throw std::invalid_argument("cannot write " + report);
        f << out.dump(2) << "\n";
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    std::cerr << "verify finished in " << ms << " ms\n";
    return ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"cutspec: exact quasi-valuation and prime-spectrum machinery"};
    app.set_version_flag("--version", std::string("cutspec ") + cutspec::kVersion);
    app.require_subcommand(1);
    app.fallthrough();

    std::vector<std::string> fixture_dirs;
    app.add_option("--fixture-dir", fixture_dirs, "extra fixture search directories")
        ->take_all();

    int rank = 0;
    std::string expr, target, instance_flag, element, which = "both", report;
    long long samples = 0, bound = 2'000'000;
    unsigned long long seed = 0;
    bool have_seed = false, have_samples = false;

    auto* cut = app.add_subcommand("cut", "evaluate a cut expression");
    cut->add_option("--rank", rank, "value-group rank")->required();
    cut->add_option("expr", expr, "expression over embed/prefix/Hplus/bottom/top/infty, +, n*, -gamma")
        ->required();

    auto* qv = app.add_subcommand("qv", "evaluate quasi-valuations at an element");
    qv->add_option("target", target, "fixture name or instance .json path");
    qv->add_option("--instance", instance_flag, "instance .json path or fixture name");
    qv->add_option("--element", element, "element JSON (or @file)")->required();
    qv->add_option("--which", which, "filter | min_formula | entry_min | both");
    qv->add_option("--rank", rank, "rank override for symbolic fixtures");

    auto* spec = app.add_subcommand("spec", "enumerate the prime spectrum");
    spec->add_option("target", target, "fixture name or instance .json path (omit for the base chain)");
    spec->add_option("--instance", instance_flag, "instance .json path or fixture name");
    spec->add_option("--rank", rank, "rank (or override)");
    spec->add_option("--bound", bound, "candidate bound");

    auto* verify = app.add_subcommand("verify", "run the verification suites");
    verify->add_option("target", target, "fixture name, instance .json path, or 'all'");
    verify->add_option("--instance", instance_flag, "instance .json path or fixture name");
    verify->add_option("--samples", samples, "sample count override")
        ->check(CLI::PositiveNumber);
    verify->add_option("--seed", seed, "seed override");
    verify->add_option("--bound", bound, "enumeration candidate bound");
    verify->add_option("--report", report, "write the JSON report here");

    CLI11_PARSE(app, argc, argv);
    have_samples = verify->count("--samples") > 0;
    have_seed = verify->count("--seed") > 0;
    if (target.empty()) target = instance_flag;
    if ((qv->parsed() || verify->parsed()) && target.empty()) {
        std::cerr << "error: no instance given (positional target or --instance)\n";
        return 2;
    }

    try {
        if (cut->parsed()) return run_cut(rank, expr);
        if (qv->parsed())
            return run_qv(target, rank > 0 ? std::optional<int>(rank) : std::nullopt, element,
                          which, fixture_dirs);
        if (spec->parsed())
            return run_spec(target, rank > 0 ? std::optional<int>(rank) : std::nullopt, bound,
                            fixture_dirs);
        if (verify->parsed()) {
            cutspec::VerifyOptions opts;
            if (have_samples) opts.samples = samples;
            if (have_seed) opts.seed = seed;
            opts.bound = bound;
            return run_verify(target, opts, report, fixture_dirs);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
