#include "cvtele/report.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <functional>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "cvtele/closed_form.hpp"
#include "cvtele/errors.hpp"
#include "cvtele/gaussian_calculus.hpp"
#include "cvtele/non_gaussianity.hpp"
#include "cvtele/special_functions.hpp"

namespace cvtele::report {

namespace {

std::string fmt(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", value);
    return buf;
}

double ng_limit_lam0(int m, int n) {
    // lam -> 0 the state degenerates toward ||n-m|, 0>; h picks up only the
    // occupied mode
    const int d = std::abs(n - m);
    return sf::h_entropy(d + 0.5);
}

void run_parallel(std::size_t count, int jobs, const std::function<void(std::size_t)>& work);

}  // namespace

Path parse_path(const std::string& s) {
    if (s == "closed") return Path::kClosed;
    if (s == "engine") return Path::kEngine;
    if (s == "oracle") return Path::kOracle;
    if (s == "auto") return Path::kAuto;
    throw std::invalid_argument("unknown path '" + s + "'");
}

std::string path_name(Path p) {
    switch (p) {
        case Path::kClosed: return "closed";
        case Path::kEngine: return "engine";
        case Path::kOracle: return "oracle";
        case Path::kAuto: return "auto";
    }
    return "?";
}

SweepRecord evaluate(int m, int n, double lam, const EvalOptions& opts) {
    SweepRecord rec;
    rec.m = m;
    rec.n = n;
    rec.lam = lam;

    if (lam == 0.0 && m + n > 0) {
        // the state itself is degenerate here; report the one-sided limit
        rec.r = 0.0;
        rec.fidelity = fidelity_limit_lam0(m, n);
        rec.path = Path::kClosed;
        rec.limit_flag = true;
        if (opts.with_ng) rec.ng = ng_limit_lam0(m, n);
        return rec;
    }

    SubtractionSpec spec{m, n, lam};
    spec.validate();
    rec.r = spec.r();

    Path path = opts.path;
    if (path == Path::kAuto) path = std::min(m, n) <= 5 ? Path::kClosed : Path::kEngine;
    rec.path = path;
    switch (path) {
        case Path::kClosed:
            rec.fidelity = fidelity_closed_value(m, n, lam);
            break;
        case Path::kEngine:
            rec.fidelity = fidelity_general(spec);
            break;
        case Path::kOracle: {
            const FockState state = fock_coefficients(spec, opts.tail_eps);
            rec.fidelity = oracle::fidelity_numeric(state, 0.0, opts.scheme);
            break;
        }
        case Path::kAuto: break;  // unreachable
    }
    if (opts.with_ng) {
        if (path == Path::kOracle) {
            rec.ng = non_gaussianity_from_cm(
                oracle::cm_numeric(fock_coefficients(spec, opts.tail_eps)));
        } else {
            rec.ng = non_gaussianity(spec);
        }
    }
    return rec;
}

std::string csv_header() { return "m,n,lam,r,fidelity,ng,path,limit_flag"; }

std::string csv_row(const SweepRecord& rec) {
    std::ostringstream out;
    out << rec.m << ',' << rec.n << ',' << fmt(rec.lam) << ',' << fmt(rec.r) << ','
        << fmt(rec.fidelity) << ',' << (rec.ng ? fmt(*rec.ng) : "") << ','
        << path_name(rec.path) << ',' << (rec.limit_flag ? "true" : "false");
    return out.str();
}

std::string json_record(const SweepRecord& rec) {
    std::ostringstream out;
    out << "{\"m\":" << rec.m << ",\"n\":" << rec.n << ",\"lam\":" << fmt(rec.lam)
        << ",\"r\":" << fmt(rec.r) << ",\"fidelity\":" << fmt(rec.fidelity) << ",\"ng\":"
        << (rec.ng ? fmt(*rec.ng) : "null") << ",\"path\":\"" << path_name(rec.path)
        << "\",\"limit_flag\":" << (rec.limit_flag ? "true" : "false") << "}";
    return out.str();
}

std::vector<double> linear_grid(double start, double stop, int count) {
    if (count < 1) throw std::invalid_argument("grid: count must be >= 1");
    if (count == 1) {
        if (start != stop) throw std::invalid_argument("grid: count 1 needs start == stop");
        return {start};
    }
    std::vector<double> grid(count);
    const double step = (stop - start) / (count - 1);
    for (int i = 0; i < count; ++i) grid[i] = start + i * step;
    grid.back() = stop;
    return grid;
}

std::vector<double> parse_grid(const std::string& text) {
    const auto p1 = text.find(':');
    const auto p2 = text.find(':', p1 == std::string::npos ? p1 : p1 + 1);
    if (p1 == std::string::npos || p2 == std::string::npos) {
        throw std::invalid_argument("grid: expected start:stop:count");
    }
    double start, stop;
    int count;
    try {
        start = std::stod(text.substr(0, p1));
        stop = std::stod(text.substr(p1 + 1, p2 - p1 - 1));
        count = std::stoi(text.substr(p2 + 1));
    } catch (const std::exception&) {
        throw std::invalid_argument("grid: malformed start:stop:count");
    }
    if (!(start > 0.0) || !(stop < 1.0) || stop < start) {
        throw std::invalid_argument("grid: values must be strictly increasing inside (0,1)");
    }
    return linear_grid(start, stop, count);
}

namespace {

void run_parallel(std::size_t count, int jobs, const std::function<void(std::size_t)>& work) {
    jobs = std::max(1, jobs);
    if (jobs == 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) work(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> workers;
    std::exception_ptr error;
    std::mutex error_mutex;
    const int spawn = std::min<std::size_t>(jobs, count);
    for (int w = 0; w < spawn; ++w) {
        workers.emplace_back([&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= count) return;
                try {
                    work(i);
                } catch (...) {
                    std::lock_guard lock(error_mutex);
                    if (!error) error = std::current_exception();
                    return;
                }
            }
        });
    }
    for (auto& t : workers) t.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace

std::vector<SweepRecord> run_sweep(const std::vector<std::pair<int, int>>& pairs,
                                   const std::vector<double>& grid, const EvalOptions& opts,
                                   int jobs) {
    // canonical order: pair-major (as given), then lam ascending; workers
    // fill preallocated slots so output order never depends on jobs
    std::vector<SweepRecord> records(pairs.size() * grid.size());
    run_parallel(records.size(), jobs, [&](std::size_t i) {
        const auto& [m, n] = pairs[i / grid.size()];
        records[i] = evaluate(m, n, grid[i % grid.size()], opts);
    });
    return records;
}

CompareResult run_compare(int total_c, const std::vector<double>& grid, const EvalOptions& opts,
                          int jobs) {
    if (total_c < 1) throw std::invalid_argument("compare: total photon budget must be >= 1");
    CompareResult result;
    for (int m = 0; m <= total_c / 2; ++m) result.splits.emplace_back(m, total_c - m);
    result.records = run_sweep(result.splits, grid, opts, jobs);
    result.argmax_split.resize(grid.size());
    for (std::size_t g = 0; g < grid.size(); ++g) {
        int best = 0;
        double best_f = -1.0;
        for (std::size_t s = 0; s < result.splits.size(); ++s) {
            const double f = result.records[s * grid.size() + g].fidelity;
            if (f > best_f) {
                best_f = f;
                best = static_cast<int>(s);
            }
        }
        result.argmax_split[g] = best;
    }
    return result;
}

std::string compare_csv(const CompareResult& result, const std::vector<double>& grid) {
    std::ostringstream out;
    out << csv_header() << ",argmax\n";
    for (std::size_t i = 0; i < result.records.size(); ++i) {
        const auto& [bm, bn] = result.splits[result.argmax_split[i % grid.size()]];
        out << csv_row(result.records[i]) << ',' << bm << ':' << bn << '\n';
    }
    return out.str();
}

const std::vector<std::string>& figure_panels() {
    static const std::vector<std::string> panels = {"1a", "1b", "1c", "1d", "2a", "2b", "2c",
                                                    "2d", "3",  "4a", "4b", "4c", "4d"};
    return panels;
}

std::vector<SweepRecord> run_figure(const std::string& panel, int jobs) {
    const std::vector<double> lam_grid = linear_grid(0.05, 0.9, 18);
    // the nG family plots run over r; store both axes in every row anyway
    std::vector<double> r_lam_grid;
    for (double r : linear_grid(0.05, 1.5, 15)) r_lam_grid.push_back(std::tanh(r));

    EvalOptions opts;
    std::vector<std::pair<int, int>> pairs;
    if (panel == "1a" || panel == "1b" || panel == "1c" || panel == "1d") {
        const int m = panel == "1a" ? 0 : panel == "1b" ? 1 : panel == "1c" ? 2 : 5;
        for (int n = m; n <= m + 5; ++n) pairs.emplace_back(m, n);
        return run_sweep(pairs, lam_grid, opts, jobs);
    }
    if (panel == "2a" || panel == "2b" || panel == "2c" || panel == "2d") {
        const int c = panel == "2a" ? 2 : panel == "2b" ? 3 : panel == "2c" ? 4 : 10;
        return run_compare(c, lam_grid, opts, jobs).records;
    }
    if (panel == "3") {
        for (int k = 0; k <= 5; ++k) pairs.emplace_back(k, k);
        return run_sweep(pairs, lam_grid, opts, jobs);
    }
    opts.with_ng = true;
    if (panel == "4a") {
        for (int diff = 0; diff <= 2; ++diff)
            for (int m = 1; m <= 3; ++m) pairs.emplace_back(m, m + diff);
    } else if (panel == "4b") {
        for (int m = 0; m <= 5; ++m) pairs.emplace_back(m, 10 - m);
    } else if (panel == "4c" || panel == "4d") {
        for (int k = 1; k <= 5; ++k) pairs.emplace_back(k, k);
    } else {
        throw std::invalid_argument("unknown figure panel '" + panel + "'");
    }
    return run_sweep(pairs, r_lam_grid, opts, jobs);
}

SelfcheckResult run_selfcheck(double perturb, int jobs) {
    (void)jobs;
    SelfcheckResult result;
    auto check = [&result](bool ok, const std::string& what) {
        result.lines.push_back((ok ? "PASS " : "FAIL ") + what);
        result.ok = result.ok && ok;
    };

    const std::vector<std::pair<int, int>> cells = {{0, 0}, {0, 1}, {1, 1},
                                                    {2, 1}, {2, 2}, {3, 3}};
    for (const auto& [m, n] : cells) {
        for (double lam : {0.3, 0.6}) {
            const SubtractionSpec spec{m, n, lam};
            const double engine = fidelity_general(spec) + perturb;
            const double closed = fidelity_closed_value(m, n, lam);
            const double numeric =
                oracle::fidelity_numeric(fock_coefficients(spec, 1e-16), 0.0);
            std::ostringstream tag;
            tag << "(" << m << "," << n << ",lam=" << lam << ")";
            check(std::abs(closed - engine) < 1e-10, "closed-vs-engine " + tag.str());
            check(std::abs(engine - numeric) < 1e-8, "engine-vs-oracle " + tag.str());
        }
    }

    for (const auto& [m, n] : {std::pair{1, 2}, {0, 3}, {2, 3}}) {
        const double f1 = fidelity_general({m, n, 0.5}) + perturb;
        const double f2 = fidelity_general({n, m, 0.5}) + perturb;
        check(std::abs(f1 - f2) < 1e-10,
              "mode-swap symmetry (" + std::to_string(m) + "," + std::to_string(n) + ")");
    }

    check(std::abs(non_gaussianity({0, 0, 0.5})) < 1e-12, "nG vanishes for the Gaussian resource");
    check(std::abs(non_gaussianity({0, 2, 0.3}) - (3.0 * std::log(3.0) - 2.0 * std::log(2.0))) <
              1e-6,
          "nG single-mode-arrangement closed value (0,2)");
    {
        const SubtractionSpec spec{1, 1, 0.5};
        const double closed_path = non_gaussianity(spec);
        const double oracle_path =
            non_gaussianity_from_cm(oracle::cm_numeric(fock_coefficients(spec, 1e-16)));
        check(std::abs(closed_path - oracle_path) < 1e-6, "nG closed-CM vs moment-CM (1,1)");
    }

    for (const auto& [m, n] : {std::pair{1, 1}, {2, 3}}) {
        const SubtractionSpec spec{m, n, 0.5};
        const TwoModeCM a = covariance_matrix(spec);
        const TwoModeCM b = oracle::cm_numeric(fock_coefficients(spec, 1e-16));
        const double gap = std::max({std::abs(a.a_diag - b.a_diag), std::abs(a.b_diag - b.b_diag),
                                     std::abs(a.c_diag - b.c_diag)});
        check(gap < 1e-8,
              "covariance closed-vs-moment (" + std::to_string(m) + "," + std::to_string(n) + ")");
    }

    const ClosedFormReport order3 = fidelity_closed(3, 3, 0.5);
    if (order3.printed_formula_deviation && *order3.printed_formula_deviation > 0.0) {
        result.lines.push_back("KNOWN-DEVIATION order-3 literal tabulation off by " +
                               fmt(*order3.printed_formula_deviation) +
                               " at (3,3,lam=0.5); corrected coefficients in use");
    } else {
        check(false, "order-3 literal tabulation expected to deviate");
    }
    return result;
}

}  // namespace cvtele::report
