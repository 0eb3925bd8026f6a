// tallcol: tallest self-supporting column design by stable-manifold shooting.
//
//   tallcol solve  --bc clamped [--delta -1e-4] [--out base] [--format csv]
//   tallcol verify [--in base | --bc clamped]
//   tallcol sweep  --bc clamped --deltas -1e-3,-1e-4,-1e-5
//
// Exit codes: 0 ok, 1 numerical/check failure, 2 usage or I/O error.

#include <string>

#include "CLI11.hpp"
#include "tallcol/cli.hpp"
#include "tallcol/io.hpp"

namespace {

void add_common(CLI::App* cmd, tallcol::cli::RunConfig& cfg, std::string& bc_str) {
    cmd->add_option("--bc", bc_str, "boundary condition at the base: clamped | hinged")
        ->check(CLI::IsMember({"clamped", "hinged"}));
    cmd->add_option("--delta", cfg.opts.delta,
                    "signed offset along the stable mode (default -1e-4)");
    cmd->add_option("--rel-tol", cfg.opts.rel_tol, "integration relative tolerance");
    cmd->add_option("--abs-tol", cfg.opts.abs_tol, "integration absolute tolerance");
    cmd->add_option("--points", cfg.n_points, "profile sample count (default 400)");
    cmd->add_option("--s-floor", cfg.s_floor, "smallest emitted s (default 1e-3)");
    cmd->add_option("--out", cfg.out, "output base path");
    cmd->add_option("--format", cfg.format, "profile file format: csv | json")
        ->check(CLI::IsMember({"csv", "json"}));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"tallest self-supporting column: solve, verify, sweep"};
    app.require_subcommand(1);

    tallcol::cli::RunConfig cfg;
    std::string bc_str;

    CLI::App* solve = app.add_subcommand("solve", "compute the optimal column");
    add_common(solve, cfg, bc_str);

    CLI::App* verify = app.add_subcommand("verify", "independently check a run");
    add_common(verify, cfg, bc_str);
    verify->add_option("--in", cfg.in, "base path of an existing solve output");

    CLI::App* sweep = app.add_subcommand("sweep", "lambda(delta) sensitivity table");
    add_common(sweep, cfg, bc_str);
    sweep->add_option("--deltas", cfg.deltas, "comma-separated offsets")->delimiter(',');

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : tallcol::cli::kExitUsage;
    }

    if (!bc_str.empty()) {
        cfg.bc = tallcol::io::bc_from_name(bc_str);
        cfg.bc_given = true;
    }
    if (verify->parsed() && cfg.in.empty() && !cfg.bc_given) {
        std::fprintf(stderr, "usage error: verify needs --in or --bc\n");
        return tallcol::cli::kExitUsage;
    }

    if (solve->parsed()) return tallcol::cli::run_solve(cfg);
    if (verify->parsed()) return tallcol::cli::run_verify(cfg);
    return tallcol::cli::run_sweep(cfg);
}
