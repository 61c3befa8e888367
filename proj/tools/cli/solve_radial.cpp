#include "cli/commands.hpp"
#include "cli/output.hpp"

#include <cmath>

namespace hyperoep::cli {

namespace {

struct Level {
    double tol;
    radial::RadialSolution sol;
};

}  // namespace

int cmd_solve_radial(const RunConfig& rc, std::ostream& out, std::ostream&) {
    const Json doc = load_json(rc.config);
    check_schema(doc, rc.config.string());
    const radial::RadialProblem problem = parse_radial_problem(doc);
    check_hypotheses(problem.f, problem.C, rc.strict_hypotheses);
    const double tol = rc.tol.value_or(number_or(doc, "tol", 1e-10));
    if (!(tol > 0.0)) throw ConfigError("field 'tol': must be positive");

    std::vector<Level> levels;
    for (int k = 0; k <= rc.tol_halvings; ++k) {
        const double t = tol / std::ldexp(1.0, k);
        levels.push_back({t, radial::shoot(problem, t)});
    }

    auto report_for = [&](const Level& lv) {
        Json r{{"schema_version", kSchemaVersion},
               {"command", "solve-radial"},
               {"problem", problem_json(problem)},
               {"tol", lv.tol}};
        r.update(radial_result_json(lv.sol, lv.tol));
        return r;
    };

    Json report = report_for(levels.back());
    if (rc.tol_halvings > 0) {
        Json refinement = Json::array();
        for (std::size_t k = 0; k < levels.size(); ++k) {
            Json row{{"tol", levels[k].tol}, {"alpha", levels[k].sol.alpha}, {"converged", levels[k].sol.converged}};
            if (k > 0) row["alpha_change"] = std::abs(levels[k].sol.alpha - levels[k - 1].sol.alpha);
            refinement.push_back(row);
            write_json(rc.out / ("report_level" + std::to_string(k) + ".json"), report_for(levels[k]));
        }
        report["refinement"] = refinement;
    }
    report["files"] = {{"profile.csv", file_entry({"s", "u", "du"})}};
    write_json(rc.out / "report.json", report);
    write_profile_csv(rc.out / "profile.csv", levels.back().sol);

    const auto& sol = levels.back().sol;
    out << "alpha = " << fmt(sol.alpha) << "  status = " << radial::to_string(sol.status) << "  residual = "
        << fmt(sol.residual) << '\n';
    bool all_converged = true;
    for (const Level& lv : levels) all_converged = all_converged && lv.sol.converged;
    if (!all_converged) {
        out << "not converged: " << sol.message << '\n';
        return kFailed;
    }
    return kOk;
}

}  // namespace hyperoep::cli
