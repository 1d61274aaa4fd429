#include <doctest.h>

#include <cstdio>
#include <string>
#include <sys/wait.h>

#include "cvtele/report.hpp"

using namespace cvtele::report;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(CVTELE_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult res;
    char buf[4096];
    while (std::size_t got = fread(buf, 1, sizeof(buf), pipe)) res.out.append(buf, got);
    const int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

}  // namespace

TEST_CASE("grid parsing") {
    const auto grid = parse_grid("0.1:0.7:4");
    REQUIRE(grid.size() == 4);
    CHECK(grid.front() == doctest::Approx(0.1));
    CHECK(grid.back() == doctest::Approx(0.7));
    CHECK_THROWS(parse_grid("0:0.5:3"));    // 0 is outside the open interval
    CHECK_THROWS(parse_grid("0.2:1.0:3"));  // so is 1
    CHECK_THROWS(parse_grid("0.5:0.2:3"));  // not increasing
    CHECK_THROWS(parse_grid("nonsense"));
}

TEST_CASE("evaluate handles the lam = 0 boundary") {
    // ab S(r)|00> is dominated by its k = 1 term as lam -> 0, so the
    // normalized state tends to vacuum and the limit fidelity is 1/2
    const SweepRecord rec = evaluate(1, 1, 0.0);
    CHECK(rec.limit_flag);
    CHECK(rec.fidelity == doctest::Approx(0.5).epsilon(1e-13));
    const SweepRecord lop = evaluate(2, 1, 0.0);
    CHECK(lop.limit_flag);
    CHECK(lop.fidelity == doctest::Approx(0.25).epsilon(1e-13));
    const SweepRecord vac = evaluate(0, 0, 0.0);
    CHECK(!vac.limit_flag);
    CHECK(vac.fidelity == 0.5);
}

TEST_CASE("csv output is byte-identical across worker counts") {
    const std::vector<std::pair<int, int>> pairs = {{0, 1}, {1, 1}, {2, 2}};
    EvalOptions opts;
    opts.with_ng = true;
    const auto grid = parse_grid("0.1:0.8:6");
    auto to_text = [](const std::vector<SweepRecord>& recs) {
        std::string text = csv_header() + "\n";
        for (const auto& rec : recs) text += csv_row(rec) + "\n";
        return text;
    };
    const auto serial = to_text(run_sweep(pairs, grid, opts, 1));
    const auto parallel = to_text(run_sweep(pairs, grid, opts, 4));
    CHECK(serial == parallel);
}

TEST_CASE("selfcheck catches an injected fault") {
    const auto clean = run_selfcheck(0.0, 2);
    CHECK(clean.ok);
    const auto broken = run_selfcheck(1e-3, 2);
    CHECK(!broken.ok);
}

#ifdef CVTELE_CLI_PATH

TEST_CASE("cli point query emits json") {
    const RunResult res = run_cli("fidelity --m 1 --n 1 --lam 0.5");
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("\"fidelity\":0.84375") != std::string::npos);
    CHECK(res.out.find("\"path\":\"closed\"") != std::string::npos);
}

TEST_CASE("cli boundary and error paths") {
    const RunResult limit = run_cli("fidelity --m 2 --n 1 --lam 0");
    CHECK(limit.exit_code == 0);
    CHECK(limit.out.find("\"limit_flag\":true") != std::string::npos);

    const RunResult domain = run_cli("fidelity --m 1 --n 1 --lam 1.5");
    CHECK(domain.exit_code == 2);
    CHECK(domain.out.find("\"error\"") != std::string::npos);

    const RunResult usage = run_cli("fidelity --m 1");
    CHECK(usage.exit_code == 2);
    CHECK(usage.out.find("\"error\"") != std::string::npos);
}

TEST_CASE("cli sweep and compare") {
    const RunResult sweep = run_cli("sweep --pairs 1,1 --lam 0.2:0.6:3 --with-ng");
    CHECK(sweep.exit_code == 0);
    CHECK(sweep.out.rfind("m,n,lam,r,fidelity,ng,path,limit_flag\n", 0) == 0);

    const RunResult compare = run_cli("compare --c 2 --lam 0.3:0.6:2");
    CHECK(compare.exit_code == 0);
    CHECK(compare.out.find(",argmax") != std::string::npos);
    CHECK(compare.out.find("1:1") != std::string::npos);
}

TEST_CASE("cli selfcheck exit codes and perturbation hook") {
    const RunResult ok = run_cli("selfcheck");
    CHECK(ok.exit_code == 0);
    CHECK(ok.out.find("KNOWN-DEVIATION") != std::string::npos);

    const RunResult bad = run_cli("");
    CHECK(bad.exit_code == 2);

    const std::string cmd = "CVTELEFI_SELFCHECK_PERTURB=1e-3 " + std::string(CVTELE_CLI_PATH);
    FILE* pipe = popen((cmd + " selfcheck >/dev/null 2>&1; echo $?").c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[16] = {};
    REQUIRE(fgets(buf, sizeof(buf), pipe) != nullptr);
    pclose(pipe);
    CHECK(std::stoi(buf) == 1);
}

#endif
