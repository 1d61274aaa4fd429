// cvtelefi: teleportation-fidelity and non-Gaussianity calculator for
// photon-subtracted two-mode squeezed vacuum resources.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cvtele/closed_form.hpp"
#include "cvtele/errors.hpp"
#include "cvtele/report.hpp"

namespace {

using cvtele::report::EvalOptions;
using cvtele::report::SweepRecord;

struct CommonOpts {
    std::string out;
    std::string format;  // "" = subcommand default
    double tail_eps = 1e-16;
    int radial_nodes = 48;
    int angular_nodes = 0;
    int jobs = 0;
    bool gnuplot = false;
};

int default_jobs() {
    if (const char* env = std::getenv("CVTELEFI_JOBS")) {
        try {
            return std::max(1, std::stoi(env));
        } catch (const std::exception&) {
        }
    }
    return 1;
}

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--out", opts.out, "Output file (default stdout)");
    cmd->add_option("--format", opts.format, "csv|json")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--tail-eps", opts.tail_eps, "Fock truncation tail bound");
    cmd->add_option("--radial-nodes", opts.radial_nodes, "Gauss-Laguerre radial order");
    cmd->add_option("--angular-nodes", opts.angular_nodes, "Uniform phase-grid size (0 = auto)");
    cmd->add_option("--jobs", opts.jobs, "Worker threads (default $CVTELEFI_JOBS or 1)");
}

EvalOptions eval_options(const CommonOpts& opts) {
    EvalOptions eval;
    eval.tail_eps = opts.tail_eps;
    eval.scheme.radial_nodes = opts.radial_nodes;
    eval.scheme.angular_nodes = opts.angular_nodes;
    return eval;
}

void emit(const CommonOpts& opts, const std::string& text) {
    if (opts.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream file(opts.out, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open output file '" + opts.out + "'");
    file << text;
}

void maybe_emit_gnuplot(const CommonOpts& opts) {
    if (!opts.gnuplot || opts.out.empty()) return;
    std::ofstream gp(opts.out + ".gp");
    gp << "set datafile separator ','\n"
       << "set key autotitle columnhead\n"
       << "plot '" << opts.out << "' using 3:5 with linespoints\n";
}

std::string records_text(const std::vector<SweepRecord>& records, const std::string& format) {
    std::string text;
    if (format == "json") {
        text = "[";
        for (std::size_t i = 0; i < records.size(); ++i) {
            if (i) text += ",";
            text += cvtele::report::json_record(records[i]);
        }
        text += "]\n";
    } else {
        text = cvtele::report::csv_header() + "\n";
        for (const auto& rec : records) text += cvtele::report::csv_row(rec) + "\n";
    }
    return text;
}

std::vector<std::pair<int, int>> parse_pairs(const std::vector<std::string>& raw) {
    std::vector<std::pair<int, int>> pairs;
    for (const auto& item : raw) {
        const auto comma = item.find(',');
        if (comma == std::string::npos) throw std::invalid_argument("pair must look like m,n");
        pairs.emplace_back(std::stoi(item.substr(0, comma)), std::stoi(item.substr(comma + 1)));
    }
    if (pairs.empty()) throw std::invalid_argument("at least one --pairs m,n required");
    return pairs;
}

int fail_usage(const std::string& kind, const std::string& message) {
    nlohmann::json err = {{"error", {{"kind", kind}, {"message", message}}}};
    std::cout << err.dump() << "\n";
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Teleportation fidelity for photon-subtracted two-mode squeezed resources"};
    app.require_subcommand(1);

    // fidelity / ng -------------------------------------------------------
    int m = 0, n = 0;
    double lam = 0.0;
    std::string path_str = "auto";
    CommonOpts point_opts;
    auto* fid = app.add_subcommand("fidelity", "Single-point fidelity query");
    fid->add_option("--m", m, "Photons subtracted from mode 1")->required();
    fid->add_option("--n", n, "Photons subtracted from mode 2")->required();
    fid->add_option("--lam", lam, "Squeezing parameter tanh(r)")->required();
    fid->add_option("--path", path_str, "closed|engine|oracle|auto");
    add_common(fid, point_opts);

    auto* ng = app.add_subcommand("ng", "Single-point non-Gaussianity query");
    ng->add_option("--m", m)->required();
    ng->add_option("--n", n)->required();
    ng->add_option("--lam", lam)->required();
    ng->add_option("--path", path_str, "closed|engine|oracle|auto");
    add_common(ng, point_opts);

    // sweep ---------------------------------------------------------------
    std::vector<std::string> pairs_raw;
    std::string grid_str;
    bool with_ng = false;
    CommonOpts sweep_opts;
    auto* sweep = app.add_subcommand("sweep", "Fidelity sweep over a lam grid");
    sweep->add_option("--pairs", pairs_raw, "Subtraction pairs m,n (repeatable)")->required();
    sweep->add_option("--lam", grid_str, "Grid start:stop:count")->required();
    sweep->add_flag("--with-ng", with_ng, "Also compute non-Gaussianity");
    sweep->add_flag("--gnuplot", sweep_opts.gnuplot, "Emit a gnuplot stub next to --out");
    add_common(sweep, sweep_opts);

    // compare -------------------------------------------------------------
    int total_c = 0;
    CommonOpts compare_opts;
    auto* compare = app.add_subcommand("compare", "Constant-budget arrangement comparison");
    compare->add_option("--c", total_c, "Total photon-subtraction budget")->required();
    compare->add_option("--lam", grid_str, "Grid start:stop:count")->required();
    add_common(compare, compare_opts);

    // figure --------------------------------------------------------------
    std::string which;
    CommonOpts figure_opts;
    auto* figure = app.add_subcommand("figure", "Reproduce one figure panel's data");
    figure->add_option("--which", which, "Panel id")
        ->required()
        ->check(CLI::IsMember(cvtele::report::figure_panels()));
    figure->add_flag("--gnuplot", figure_opts.gnuplot, "Emit a gnuplot stub next to --out");
    add_common(figure, figure_opts);

    // selfcheck -----------------------------------------------------------
    CommonOpts selfcheck_opts;
    auto* selfcheck = app.add_subcommand("selfcheck", "Triple-path agreement and invariant suite");
    add_common(selfcheck, selfcheck_opts);

    // coefficient table export
    CommonOpts table_opts;
    auto* table = app.add_subcommand("coefficients", "Export the closed-form coefficient table");
    add_common(table, table_opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
        return fail_usage("usage", e.what());
    }

    try {
        if (fid->parsed() || ng->parsed()) {
            EvalOptions opts = eval_options(point_opts);
            opts.path = cvtele::report::parse_path(path_str);
            opts.with_ng = ng->parsed();
            const SweepRecord rec = cvtele::report::evaluate(m, n, lam, opts);
            emit(point_opts, cvtele::report::json_record(rec) + "\n");
            return 0;
        }
        if (sweep->parsed()) {
            EvalOptions opts = eval_options(sweep_opts);
            opts.with_ng = with_ng;
            const auto records =
                cvtele::report::run_sweep(parse_pairs(pairs_raw), cvtele::report::parse_grid(grid_str),
                                          opts, sweep_opts.jobs > 0 ? sweep_opts.jobs : default_jobs());
            emit(sweep_opts, records_text(records, sweep_opts.format.empty() ? "csv" : sweep_opts.format));
            maybe_emit_gnuplot(sweep_opts);
            return 0;
        }
        if (compare->parsed()) {
            const auto grid = cvtele::report::parse_grid(grid_str);
            const auto result = cvtele::report::run_compare(
                total_c, grid, eval_options(compare_opts),
                compare_opts.jobs > 0 ? compare_opts.jobs : default_jobs());
            if (compare_opts.format == "json") {
                emit(compare_opts, records_text(result.records, "json"));
            } else {
                emit(compare_opts, cvtele::report::compare_csv(result, grid));
            }
            return 0;
        }
        if (figure->parsed()) {
            const auto records = cvtele::report::run_figure(
                which, figure_opts.jobs > 0 ? figure_opts.jobs : default_jobs());
            emit(figure_opts, records_text(records, figure_opts.format.empty() ? "csv" : figure_opts.format));
            maybe_emit_gnuplot(figure_opts);
            return 0;
        }
        if (selfcheck->parsed()) {
            double perturb = 0.0;  // test-harness hook
            if (const char* env = std::getenv("CVTELEFI_SELFCHECK_PERTURB")) {
                perturb = std::atof(env);
            }
            const auto result = cvtele::report::run_selfcheck(
                perturb, selfcheck_opts.jobs > 0 ? selfcheck_opts.jobs : default_jobs());
            std::string text;
            for (const auto& line : result.lines) text += line + "\n";
            text += result.ok ? "selfcheck: all checks passed\n" : "selfcheck: FAILURES present\n";
            emit(selfcheck_opts, text);
            return result.ok ? 0 : 1;
        }
        if (table->parsed()) {
            emit(table_opts, cvtele::coefficient_table_json() + "\n");
            return 0;
        }
    } catch (const cvtele::degenerate_state_error& e) {
        return fail_usage("degenerate_state", e.what());
    } catch (const cvtele::unsupported_order_error& e) {
        return fail_usage("unsupported_order", e.what());
    } catch (const std::domain_error& e) {
        return fail_usage("domain", e.what());
    } catch (const std::invalid_argument& e) {
        return fail_usage("usage", e.what());
    } catch (const std::exception& e) {
        return fail_usage("runtime", e.what());
    }
    return 0;
}
