// Command-line front end: claim verification, curve-file utilities, and the
// quotient-surface scenario sweep.
#include <fstream>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "kleinpencil/claims.hpp"
#include "kleinpencil/mori.hpp"
#include "kleinpencil/wire.hpp"

namespace {

using namespace kleinpencil;

long parse_long(const std::string& s) {
    size_t pos = 0;
    long v = std::stol(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("bad integer: " + s);
    return v;
}

// "a..b" or a single value.
std::pair<long, long> parse_range(const std::string& s) {
    size_t dots = s.find("..");
    if (dots == std::string::npos) {
        long v = parse_long(s);
        return {v, v};
    }
    return {parse_long(s.substr(0, dots)), parse_long(s.substr(dots + 2))};
}

std::vector<long> parse_list(const std::string& s) {
    std::vector<long> out;
    size_t start = 0;
    while (start <= s.size()) {
        size_t comma = s.find(',', start);
        if (comma == std::string::npos) comma = s.size();
        out.push_back(parse_long(s.substr(start, comma - start)));
        start = comma + 1;
    }
    return out;
}

void write_json(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << j.dump(2) << "\n";
}

int cmd_verify(bool all, const std::string& claim, const std::string& tag,
               const std::string& json_path, const ClaimOptions& opts) {
    if (all == !claim.empty()) {
        std::cerr << "kleinpencil: pass exactly one of --all or --claim <id>\n";
        return 1;
    }
    if (!claim.empty() && !tag.empty()) {
        std::cerr << "kleinpencil: --tag only applies with --all\n";
        return 1;
    }
    std::vector<ClaimResult> results;
    if (all)
        results = run_all(tag, opts);
    else
        results.push_back(run_claim(claim, opts));

    std::cout << report_text(results);
    if (!json_path.empty()) write_json(json_path, report_json(results));

    int rc = 0;
    for (const ClaimResult& r : results) {
        if (r.status == ClaimStatus::pass) continue;
        std::cerr << "failing: " << r.id << "\n";
        rc = 1;
    }
    return rc;
}

int cmd_curve_show(const std::string& path) {
    FieldCtxPtr ctx = FieldCtx::create(84);
    TernaryForm f = load_curve(path, ctx);
    Json j = curve_to_json(f);
    if (j.contains("label")) std::cout << "label:  " << j["label"].get<std::string>() << "\n";
    std::cout << "degree: " << f.degree() << "\n"
              << "terms:  " << f.terms().size() << "\n"
              << "form:   " << f.to_string() << "\n";
    return 0;
}

int cmd_curve_check(const std::string& path) {
    FieldCtxPtr ctx = FieldCtx::create(84);
    TernaryForm f = load_curve(path, ctx);
    // Canonical round-trip: serializing the parsed form and loading it back
    // must reproduce the form exactly.
    TernaryForm back = curve_from_json(ctx, curve_to_json(f));
    if (!(back == f)) {
        std::cerr << path << ": round-trip mismatch\n";
        return 1;
    }
    if (f.is_zero()) std::cout << path << ": warning: terms cancel to the zero form\n";
    std::cout << path << ": ok (degree " << f.degree() << ", " << f.terms().size()
              << " terms, round-trip exact)\n";
    return 0;
}

int cmd_mori_sweep(const std::string& g_range, const std::string& n_list,
                   const std::string& e_range, const std::string& json_path) {
    SweepRanges r;
    if (!g_range.empty()) std::tie(r.g_lo, r.g_hi) = parse_range(g_range);
    if (!e_range.empty()) std::tie(r.e_lo, r.e_hi) = parse_range(e_range);
    if (!n_list.empty()) r.n_values = parse_list(n_list);

    std::vector<ScenarioRow> rows = enumerate_scenarios(r);
    std::cout << format_scenario_table(rows);

    if (!json_path.empty()) write_json(json_path, sweep_to_json(rows));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic checks for the Klein-quartic sextic pencil"};
    app.require_subcommand(1);

    bool all = false;
    std::string claim, tag, verify_json;
    ClaimOptions opts;
    CLI::App* verify = app.add_subcommand("verify", "run registered claims");
    verify->add_flag("--all", all, "run every registered claim");
    verify->add_option("--claim", claim, "run a single claim by id");
    verify->add_option("--tag", tag, "with --all: restrict to claims carrying this tag");
    verify->add_option("--json", verify_json, "write the JSON report to this path");
    verify->add_option("--prime", opts.prime, "first prime for mod-p certificates");
    verify->add_option("--field-order", opts.field_order,
                       "cyclotomic field order (multiple of 84)");
    verify->add_option("--max-closure", opts.max_closure, "group closure size bound");

    CLI::App* curve = app.add_subcommand("curve", "curve-file utilities");
    curve->require_subcommand(1);
    std::string show_path, check_path;
    CLI::App* show = curve->add_subcommand("show", "print a parsed curve file");
    show->add_option("path", show_path, "curve file")->required();
    CLI::App* check = curve->add_subcommand("check", "validate a curve file");
    check->add_option("path", check_path, "curve file")->required();

    CLI::App* mori = app.add_subcommand("mori", "quotient-surface audit");
    mori->require_subcommand(1);
    std::string g_range, n_list, e_range, mori_json;
    CLI::App* sweep = mori->add_subcommand("sweep", "enumerate reduction scenarios");
    sweep->add_option("--g", g_range, "genus range a..b (default 3..10)");
    sweep->add_option("--n", n_list, "branch-curve counts, comma separated (default 0,7,14)");
    sweep->add_option("--emin", e_range, "minimal Euler number range a..b (default 3..11)");
    sweep->add_option("--json", mori_json, "write the sweep rows to this path");

    CLI11_PARSE(app, argc, argv);

    try {
        if (verify->parsed()) return cmd_verify(all, claim, tag, verify_json, opts);
        if (show->parsed()) return cmd_curve_show(show_path);
        if (check->parsed()) return cmd_curve_check(check_path);
        if (sweep->parsed()) return cmd_mori_sweep(g_range, n_list, e_range, mori_json);
    } catch (const std::exception& ex) {
        std::cerr << "kleinpencil: error: " << ex.what() << "\n";
        return 1;
    }
    return 0;
}
