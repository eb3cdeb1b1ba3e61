// weilk3: analysis of Weil polynomials of K3 type and Tate-class bookkeeping.

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "weilk3/fixtures.hpp"
#include "weilk3/invariants.hpp"
#include "weilk3/json_io.hpp"
#include "weilk3/kunneth.hpp"
#include "weilk3/spanmodel.hpp"
#include "weilk3/weil.hpp"

namespace {

using namespace weilk3;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitHypotheses = 3;
constexpr int kExitGuard = 4;

json read_input(const std::string& path) {
    std::string text;
    if (path == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
        std::ifstream in(path);
        if (!in) throw SchemaError("", "cannot open " + path);
        text.assign(std::istreambuf_iterator<char>(in), {});
    }
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw SchemaError("", std::string("invalid JSON: ") + e.what());
    }
}

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

int exit_code(ErrorKind k) {
    switch (k) {
    case ErrorKind::HypothesesNotMet: return kExitHypotheses;
    case ErrorKind::ModelTooLarge:
    case ErrorKind::TooLarge:
    case ErrorKind::BoundTooLarge:
    case ErrorKind::OrderTooLarge: return kExitGuard;
    default: return kExitInput;
    }
}

struct Gate {
    bool assume_irreducible = false;
    bool use_base_change = false;
};

const WeilReport& gated_report(const WeilReport& rep, const Gate& gate) {
    if (rep.semistable) return rep;
    if (!gate.use_base_change || !rep.base_change)
        fail(ErrorKind::HypothesesNotMet,
             "report is not semistable; rerun with --use-base-change to work over the degree-" +
                 std::to_string(rep.semistable_exponent) + " extension");
    return *rep.base_change;
}

/// Accepts {"a", "k"}, a report, or a polynomial payload (analyzed first).
EigenStructure structure_from_input(const json& in, const Gate& gate) {
    if (!in.is_object()) throw SchemaError("", "expected an object");
    if (in.contains("p2m")) return from_report(gated_report(report_from_json(in), gate), gate.assume_irreducible);
    if (in.contains("coeffs")) {
        const PolynomialInput p = polynomial_input_from_json(in);
        const WeilReport rep = analyze(p.poly, p.ctx);
        return from_report(gated_report(rep, gate), gate.assume_irreducible);
    }
    return structure_from_json(in);
}

json cmd_analyze(const std::string& path, std::optional<int> bound, bool no_base_change) {
    const json in = read_input(path);
    const PolynomialInput p = polynomial_input_from_json(in);
    AnalyzeOptions opts;
    opts.independence_bound = bound;
    opts.base_change = !no_base_change;
    return to_json(analyze(p.poly, p.ctx, opts));
}

json cmd_tate_dim(const std::string& path, int r, int m, const Gate& gate) {
    const EigenStructure st = structure_from_input(read_input(path), gate);
    json out = to_json(tate_dim_power(st, r, m), r, m);
    out["structure"] = to_json(st);
    return out;
}

json cmd_verify_span(unsigned a, unsigned k, std::optional<int> J) {
    const DiagonalModel model({a, k});
    const int j = J.value_or(static_cast<int>(2 * k + 1));
    const GenerationResult g = generation_rank_vv(model, j);
    return {{"a", a}, {"k", k}, {"J", j}, {"rank", g.rank}, {"dimension", g.dimension}, {"spans", g.spans()}};
}

json cmd_decompose(const std::string& path, int r, int m, const Gate& gate) {
    const EigenStructure st = structure_from_input(read_input(path), gate);
    json out = to_json(decomposable_check(st, r, m), r, m);
    out["structure"] = to_json(st);
    return out;
}

json cmd_gen_fixtures(const FixtureSpec& spec) {
    json out = json::array();
    for (const auto& f : gen_fixtures(spec)) out.push_back(to_json(f));
    return out;
}

/// Largest n <= 4 with a feasible brute-force enumeration.
unsigned pair_check_length(const EigenStructure& st) {
    unsigned n = 0;
    double tuples = 1;
    while (n < 4) {
        tuples *= static_cast<double>(st.dimension());
        if (tuples > kMaxBruteforceTuples) break;
        ++n;
    }
    return n;
}

json cmd_verify(const std::string& path, std::optional<int> J, int r, const Gate& gate) {
    const json in = read_input(path);
    WeilReport rep;
    if (in.is_object() && in.contains("coeffs")) {
        const PolynomialInput p = polynomial_input_from_json(in);
        rep = analyze(p.poly, p.ctx);
    } else {
        rep = report_from_json(in);
    }
    const WeilReport& used = gated_report(rep, gate);
    const EigenStructure st = from_report(used, gate.assume_irreducible);
    json checks = json::object();
    bool all = true;

    {
        const unsigned n_max = pair_check_length(st);
        json per_n = json::array();
        bool ok = true;
        for (unsigned n = 0; n <= n_max; ++n) {
            const bool v = pair_decomposition_check(st, n);
            ok = ok && v;
            per_n.push_back({{"n", n}, {"inv_dim", inv_dim(st, n).get_str()}, {"ok", v}});
        }
        checks["pair_decomposition"] = {{"ok", ok}, {"per_n", per_n}};
        all = all && ok;
    }
    {
        const int j = J.value_or(static_cast<int>(2 * st.k + 1));
        const GenerationResult g = generation_rank_vv(DiagonalModel(st), j);
        checks["generation_vv"] = {{"ok", g.spans()}, {"J", j}, {"rank", g.rank}, {"dimension", g.dimension}};
        all = all && g.spans();
    }
    {
        const Int sq = square_tate_dim(st);
        const Int pw = tate_dim_power(st, 2, 4).total;
        checks["square_tate_dim"] = {{"ok", sq == pw}, {"dim", sq.get_str()}, {"kunneth_dim", pw.get_str()}};
        all = all && sq == pw;
    }
    {
        json per_m = json::array();
        bool ok = true;
        bool skipped = false;
        std::string reason;
        for (int m = 0; m <= 4 * r; ++m) {
            try {
                const DecompositionResult d = decomposable_check(st, r, m);
                ok = ok && d.ok;
                per_m.push_back(to_json(d, r, m));
            } catch (const Error& e) {
                if (e.kind() != ErrorKind::ModelTooLarge) throw;
                skipped = true;
                reason = e.what();
                break;
            }
        }
        json entry{{"ok", ok}, {"r", r}};
        if (skipped) {
            entry["skipped"] = reason;
        } else {
            entry["per_m"] = per_m;
        }
        checks["decomposable"] = entry;
        all = all && ok;
    }
    return {{"structure", to_json(st)},
            {"base_changed", &used != &rep},
            {"semisimplicity_assumed", used.semisimplicity_assumed},
            {"checks", checks},
            {"all_passed", all}};
}

void report_error(const std::string& kind, const std::string& message, const std::string& pointer,
                  const std::string& stage) {
    json e{{"error", kind}, {"message", message}};
    if (!pointer.empty()) e["pointer"] = pointer;
    if (!stage.empty()) e["stage"] = stage;
    std::cerr << e.dump() << '\n';
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Weil polynomial analysis and Tate-class dimension checks"};
    app.require_subcommand(1);

    std::string input = "-";
    std::optional<int> bound;
    bool no_base_change = false;
    auto* analyze_cmd = app.add_subcommand("analyze", "Run the full analysis on a polynomial payload");
    analyze_cmd->add_option("input", input, "Polynomial JSON file, - for stdin");
    analyze_cmd->add_option("--independence-bound", bound, "Exponent bound for the relation search (0..4)");
    analyze_cmd->add_flag("--no-base-change", no_base_change, "Do not attach the extension-field report");

    int r = 2;
    int m = 4;
    Gate gate;
    auto add_gate = [&](CLI::App* c) {
        c->add_flag("--assume-irreducible", gate.assume_irreducible, "Accept an Inconclusive irreducibility certificate");
        c->add_flag("--use-base-change", gate.use_base_change, "Use the extension-field report when not semistable");
    };
    auto* tate_cmd = app.add_subcommand("tate-dim", "Tate-class dimension of H^2m(Y^r)(m)");
    tate_cmd->add_option("input", input, "Structure, report or polynomial JSON, - for stdin");
    tate_cmd->add_option("--r", r, "Number of factors")->required();
    tate_cmd->add_option("--m", m, "Half degree")->required();
    add_gate(tate_cmd);

    unsigned a = 0;
    unsigned k = 0;
    std::optional<int> J;
    auto* span_cmd = app.add_subcommand("verify-span", "Check generation of (V x V)^G by graph classes");
    span_cmd->add_option("--a", a, "Multiplicity of eigenvalue 1")->required();
    span_cmd->add_option("--k", k, "Number of eigenvalue pairs")->required();
    span_cmd->add_option("--J", J, "Largest graph power (default 2k+1)");

    auto* dec_cmd = app.add_subcommand("decompose-check", "Decomposability of Tate classes on Y^r");
    dec_cmd->add_option("input", input, "Structure, report or polynomial JSON, - for stdin");
    dec_cmd->add_option("--r", r, "Number of factors")->required();
    dec_cmd->add_option("--m", m, "Half degree")->required();
    add_gate(dec_cmd);

    FixtureSpec spec;
    long p = 2;
    auto* gen_cmd = app.add_subcommand("gen-fixtures", "Search for fourfold fixtures of K3 type");
    gen_cmd->add_option("--p", p, "Prime")->default_val(2);
    gen_cmd->add_option("--m", spec.m, "Half degree (only 2)")->default_val(2);
    gen_cmd->add_option("--middle-degrees", spec.middle_factor_degrees, "Degrees of the slope-2 factors");
    gen_cmd->add_option("--bound", spec.coefficient_bound, "Coefficient search bound")->default_val(64);
    gen_cmd->add_option("--count", spec.count, "Number of fixtures")->default_val(1);
    gen_cmd->add_option("--k3-degree", spec.k3_factor_degree, "Degree of the slope-{1,3} factor (2 or 4)")
        ->default_val(2);
    gen_cmd->add_flag("--allow-inconclusive", spec.allow_inconclusive, "Emit fixtures without a proved certificate");

    int verify_r = 3;
    auto* verify_cmd = app.add_subcommand("verify", "Run every theorem check on a report");
    verify_cmd->add_option("input", input, "Report or polynomial JSON, - for stdin");
    verify_cmd->add_option("--J", J, "Largest graph power (default 2k+1)");
    verify_cmd->add_option("--r", verify_r, "Power for the decomposability check")->default_val(3);
    add_gate(verify_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        if (*analyze_cmd) emit(cmd_analyze(input, bound, no_base_change));
        else if (*tate_cmd) emit(cmd_tate_dim(input, r, m, gate));
        else if (*span_cmd) emit(cmd_verify_span(a, k, J));
        else if (*dec_cmd) emit(cmd_decompose(input, r, m, gate));
        else if (*gen_cmd) {
            spec.p = Int(p);
            emit(cmd_gen_fixtures(spec));
        } else if (*verify_cmd) emit(cmd_verify(input, J, verify_r, gate));
        return kExitOk;
    } catch (const SchemaError& e) {
        report_error("SchemaError", e.what(), e.pointer().empty() ? "/" : e.pointer(), "");
        return kExitInput;
    } catch (const Error& e) {
        report_error(std::string(to_string(e.kind())), e.what(), "", e.stage());
        return exit_code(e.kind());
    }
}
