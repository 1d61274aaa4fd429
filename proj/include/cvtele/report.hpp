#ifndef CVTELE_REPORT_HPP
#define CVTELE_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include "cvtele/fock_oracle.hpp"

namespace cvtele::report {

enum class Path { kClosed, kEngine, kOracle, kAuto };

Path parse_path(const std::string& s);
std::string path_name(Path p);

/// One output row. CSV schema (fixed): m,n,lam,r,fidelity,ng,path,limit_flag.
/// A missing ng prints as an empty field.
struct SweepRecord {
    int m = 0;
    int n = 0;
    double lam = 0.0;
    double r = 0.0;
    double fidelity = 0.0;
    std::optional<double> ng;
    Path path = Path::kEngine;
    bool limit_flag = false;
};

struct EvalOptions {
    Path path = Path::kAuto;
    bool with_ng = false;
    double tail_eps = 1e-16;
    oracle::QuadratureScheme scheme;
};

/// Evaluates one record. lam = 0 with m + n > 0 reports the closed-form
/// one-sided limit with limit_flag set.
SweepRecord evaluate(int m, int n, double lam, const EvalOptions& opts = {});

std::string csv_header();
std::string csv_row(const SweepRecord& rec);
std::string json_record(const SweepRecord& rec);

/// Strictly increasing grid inside (0,1), parsed from "start:stop:count".
std::vector<double> parse_grid(const std::string& text);
std::vector<double> linear_grid(double start, double stop, int count);

/// Deterministic-order sweep over (m,n) pairs x grid; grid points are
/// evaluated by `jobs` workers and emitted in canonical order.
std::vector<SweepRecord> run_sweep(const std::vector<std::pair<int, int>>& pairs,
                                   const std::vector<double>& grid, const EvalOptions& opts,
                                   int jobs = 1);

/// Constant-budget comparison: all splits (m, c - m) with m <= c/2. For
/// each grid point the index of the best split is recorded.
struct CompareResult {
    std::vector<SweepRecord> records;  // ordered split-major, then lam
    std::vector<std::pair<int, int>> splits;
    std::vector<int> argmax_split;  // per grid point, index into splits
};
CompareResult run_compare(int total_c, const std::vector<double>& grid,
                          const EvalOptions& opts, int jobs = 1);
std::string compare_csv(const CompareResult& result, const std::vector<double>& grid);

/// Named figure panels ("1a".."1d", "2a".."2d", "3", "4a".."4d").
const std::vector<std::string>& figure_panels();
std::vector<SweepRecord> run_figure(const std::string& panel, int jobs = 1);

/// Triple-path agreement matrix plus the invariant suite. Lines are
/// human-readable, one per check. The literal order-3 tabulation is
/// reported as KNOWN-DEVIATION, which does not fail the run. `perturb`
/// is a test hook added to every engine fidelity.
struct SelfcheckResult {
    std::vector<std::string> lines;
    bool ok = true;
};
SelfcheckResult run_selfcheck(double perturb = 0.0, int jobs = 1);

}  // namespace cvtele::report

#endif
