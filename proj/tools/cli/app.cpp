#include "cli/commands.hpp"

#include "hyperoep/errors.hpp"

#include <CLI11.hpp>

namespace hyperoep::cli {

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Solvers and verifiers for overdetermined elliptic problems in hyperbolic space", "hyperoep"};
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig rc;
    std::string config;
    std::string out_dir;
    double tol = 0.0;
    app.add_option("--config", config, "JSON configuration file");
    app.add_option("--out", out_dir, "Output directory (created if missing)");
    auto* tol_opt = app.add_option("--tol", tol, "Tolerance override");
    app.add_option("--seed", rc.seed, "Seed for randomized property runs");
    app.add_flag("--strict-hypotheses", rc.strict_hypotheses, "Reject f that violates the declared hypotheses");

    auto* solve = app.add_subcommand("solve-radial", "Shoot the 1D profile and report alpha");
    solve->add_option("--tol-halvings", rc.tol_halvings, "Repeat at tol/2, tol/4, ... and report the alpha changes");
    auto* verify = app.add_subcommand("verify", "Solve or load a 2D solution and run the boundary and symmetry checks");
    auto* sweep = app.add_subcommand("sweep", "Shoot over a grid of radial problems");
    sweep->add_option("--threads", rc.threads, "Worker threads (0: hardware concurrency)");
    auto* self = app.add_subcommand("selftest", "Randomized geometry invariant suite");
    self->add_option("--cases", rc.cases, "Random cases per property");
    self->add_option("--inject-fault", rc.inject_fault, "Deliberate fault for testing the suite");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kInvalid;
    }

    rc.config = config;
    if (!out_dir.empty()) {
        rc.out = out_dir;
        rc.out_explicit = true;
    }
    if (tol_opt->count() > 0) rc.tol = tol;

    try {
        rc.validate();
        if (*self) {
            rc.command = "selftest";
            return cmd_selftest(rc, out, err);
        }
        if (config.empty()) throw ConfigError("--config is required");
        if (*solve) {
            rc.command = "solve-radial";
            return cmd_solve_radial(rc, out, err);
        }
        if (*verify) {
            rc.command = "verify";
            return cmd_verify(rc, out, err);
        }
        rc.command = "sweep";
        return cmd_sweep(rc, out, err);
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << '\n';
        return kInvalid;
    } catch (const InvalidInput& e) {
        err << "error: invalid input: " << e.what() << '\n';
        return kInvalid;
    } catch (const std::exception& e) {
        // Numerical failures the commands do not report in-band.
        err << "error: " << e.what() << '\n';
        return kFailed;
    }
}

}  // namespace hyperoep::cli
