#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "tallcol/cli.hpp"
#include "tallcol/io.hpp"

using namespace tallcol;
namespace fs = std::filesystem;

namespace {

fs::path test_dir() {
    const fs::path p = fs::temp_directory_path() / "tallcol_tests";
    fs::create_directories(p);
    return p;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

cli::RunConfig solve_config(BoundaryKind bc, const std::string& base) {
    cli::RunConfig cfg;
    cfg.bc = bc;
    cfg.bc_given = true;
    cfg.out = (test_dir() / base).string();
    return cfg;
}

}  // namespace

TEST_CASE("boundary kind names") {
    CHECK(io::bc_name(BoundaryKind::Clamped) == "clamped");
    CHECK(io::bc_name(BoundaryKind::Hinged) == "hinged");
    CHECK(io::bc_from_name("clamped") == BoundaryKind::Clamped);
    CHECK(io::bc_from_name("hinged") == BoundaryKind::Hinged);
    CHECK_THROWS_AS(io::bc_from_name("free"), std::invalid_argument);
}

TEST_CASE("solve outputs are byte-stable across runs") {
    const auto cfg1 = solve_config(BoundaryKind::Clamped, "stable_a");
    const auto cfg2 = solve_config(BoundaryKind::Clamped, "stable_b");
    REQUIRE(cli::run_solve(cfg1) == cli::kExitOk);
    REQUIRE(cli::run_solve(cfg2) == cli::kExitOk);
    for (const char* suffix : {".profile.csv", ".trajectory.csv", ".summary.json"})
        CHECK(slurp(cfg1.out + suffix) == slurp(cfg2.out + suffix));
}

TEST_CASE("summary json round trip") {
    io::Summary s;
    s.bc = "hinged";
    s.lambda = 222.73619;
    s.delta = -1e-4;
    s.t_stop = -1.94704;
    s.volume = 0.99992;
    s.rel_tol = 1e-8;
    s.abs_tol = 1e-10;
    s.n_points = 400;
    s.s_floor = 1e-3;
    s.format = "csv";
    const auto path = (test_dir() / "roundtrip.summary.json").string();
    io::write_summary_json(s, path);
    const io::Summary r = io::read_summary_json(path);
    CHECK(r.bc == s.bc);
    CHECK(r.lambda == s.lambda);
    CHECK(r.delta == s.delta);
    CHECK(r.t_stop == s.t_stop);
    CHECK(r.volume == s.volume);
    CHECK(r.rel_tol == s.rel_tol);
    CHECK(r.abs_tol == s.abs_tol);
    CHECK(r.n_points == s.n_points);
    CHECK(r.s_floor == s.s_floor);
    CHECK(r.format == s.format);
}

TEST_CASE("profile files round trip exactly") {
    const Solution sol = integrate_backward(BoundaryKind::Clamped);
    const ColumnProfile p = profile(sol, 97);

    const auto csv = (test_dir() / "rt.profile.csv").string();
    io::write_profile_csv(p, csv);
    const ColumnProfile rc = io::read_profile(csv, "csv", p.bc, p.lambda);
    REQUIRE(rc.samples.size() == p.samples.size());
    for (std::size_t i = 0; i < p.samples.size(); ++i) {
        CHECK(rc.samples[i].s == p.samples[i].s);  // to_chars round-trips exactly
        CHECK(rc.samples[i].a == p.samples[i].a);
        CHECK(rc.samples[i].b == p.samples[i].b);
        CHECK(rc.samples[i].theta == p.samples[i].theta);
        CHECK(rc.samples[i].extended == p.samples[i].extended);
    }

    const auto js = (test_dir() / "rt.profile.json").string();
    io::write_profile_json(p, js);
    const ColumnProfile rj = io::read_profile(js, "json", p.bc, p.lambda);
    REQUIRE(rj.samples.size() == p.samples.size());
    CHECK(rj.s_min == p.s_min);
    for (std::size_t i = 0; i < p.samples.size(); ++i)
        CHECK(rj.samples[i].a == p.samples[i].a);
}

TEST_CASE("verify consumes what solve emits") {
    const auto cfg = solve_config(BoundaryKind::Clamped, "verify_me");
    REQUIRE(cli::run_solve(cfg) == cli::kExitOk);

    cli::RunConfig vcfg;
    vcfg.in = cfg.out;
    CHECK(cli::run_verify(vcfg) == cli::kExitOk);
}

TEST_CASE("verify fails on a corrupted profile") {
    const auto cfg = solve_config(BoundaryKind::Clamped, "corrupt_me");
    REQUIRE(cli::run_solve(cfg) == cli::kExitOk);

    // scale the a column by 2, keep everything else
    const std::string path = cfg.out + ".profile.csv";
    std::ifstream in(path);
    std::string line, out;
    REQUIRE(std::getline(in, line));
    out = line + "\n";
    while (std::getline(in, line)) {
        std::istringstream row(line);
        std::string s, a, rest;
        std::getline(row, s, ',');
        std::getline(row, a, ',');
        std::getline(row, rest);
        out += s + "," + io::format_double(2.0 * std::stod(a)) + "," + rest + "\n";
    }
    in.close();
    std::ofstream(path, std::ios::binary) << out;

    cli::RunConfig vcfg;
    vcfg.in = cfg.out;
    CHECK(cli::run_verify(vcfg) == cli::kExitNumerical);
}

TEST_CASE("verify rejects mismatched boundary kind") {
    const auto cfg = solve_config(BoundaryKind::Clamped, "mismatch");
    REQUIRE(cli::run_solve(cfg) == cli::kExitOk);

    cli::RunConfig vcfg;
    vcfg.in = cfg.out;
    vcfg.bc = BoundaryKind::Hinged;
    vcfg.bc_given = true;
    CHECK(cli::run_verify(vcfg) == cli::kExitUsage);
}

TEST_CASE("verify without inputs is a usage error handled by the front end") {
    cli::RunConfig vcfg;
    vcfg.in = (test_dir() / "does_not_exist").string();
    CHECK(cli::run_verify(vcfg) == cli::kExitUsage);
}

TEST_CASE("solve maps the wrong branch to a numerical failure") {
    auto cfg = solve_config(BoundaryKind::Clamped, "wrong_branch");
    cfg.opts.delta = 1e-4;
    CHECK(cli::run_solve(cfg) == cli::kExitNumerical);
}

TEST_CASE("sweep usage and error mapping") {
    cli::RunConfig cfg;
    cfg.bc = BoundaryKind::Clamped;
    CHECK(cli::run_sweep(cfg) == cli::kExitUsage);  // empty list

    cfg.deltas = {-1e-3, 1e-3};
    CHECK(cli::run_sweep(cfg) == cli::kExitUsage);  // mixed signs

    cfg.deltas = {1e-4};
    CHECK(cli::run_sweep(cfg) == cli::kExitNumerical);  // wrong branch

    cfg.deltas = {-1e-3, -1e-4};
    cfg.out = (test_dir() / "sweep_out").string();
    CHECK(cli::run_sweep(cfg) == cli::kExitOk);
    CHECK(fs::exists(cfg.out + ".sweep.csv"));
}
