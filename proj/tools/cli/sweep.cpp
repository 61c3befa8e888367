#include "cli/commands.hpp"
#include "cli/output.hpp"
#include "hyperoep/errors.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <optional>
#include <thread>

namespace hyperoep::cli {

namespace {

struct Row {
    radial::RadialProblem problem;
    std::optional<radial::RadialSolution> sol;
    std::string error;
};

// A grid axis given as a scalar or an array.
std::vector<Json> axis_values(const Json& grid, const std::string& key, Json fallback) {
    if (!grid.contains(key)) return {std::move(fallback)};
    const Json& v = grid.at(key);
    if (v.is_array()) return std::vector<Json>(v.begin(), v.end());
    return {v};
}

}  // namespace

int cmd_sweep(const RunConfig& rc, std::ostream& out, std::ostream&) {
    const Json doc = load_json(rc.config);
    check_schema(doc, rc.config.string());
    const std::string family_name = string_or(doc, "family", "");
    radial::Family family;
    try {
        family = radial::family_from_string(family_name);
    } catch (const InvalidInput&) {
        throw ConfigError("field 'family': expected ball_exterior, horoball_exterior or equidistant_half_space");
    }
    const double tol = rc.tol.value_or(number_or(doc, "tol", 1e-10));
    if (!(tol > 0.0)) throw ConfigError("field 'tol': must be positive");
    const Json grid = doc.value("grid", Json::object());
    if (!grid.is_object()) throw ConfigError("field 'grid': expected an object");
    if (!grid.contains("f")) throw ConfigError("missing field 'grid.f'");

    const auto ns = axis_values(grid, "n", 2);
    const auto params = axis_values(grid, "domain_param", 0.0);
    const auto Cs = axis_values(grid, "C", nullptr);
    const auto fs = axis_values(grid, "f", nullptr);

    // Rows in lexicographic order of (n, domain_param, C, f).
    std::vector<Row> rows;
    for (const Json& n : ns) {
        for (const Json& p : params) {
            for (const Json& c : Cs) {
                for (const Json& f : fs) {
                    Json point{{"family", family_name}, {"n", n}, {"domain_param", p}, {"f", f}};
                    if (!c.is_null()) point["C"] = c;
                    Row row;
                    row.problem.family = family;
                    try {
                        row.problem = parse_radial_problem(point);
                        check_hypotheses(row.problem.f, row.problem.C, rc.strict_hypotheses);
                    } catch (const std::exception& e) {
                        row.error = e.what();
                        row.problem.n = n.is_number_integer() ? n.get<int>() : 0;
                        row.problem.domain_param = p.is_number() ? p.get<double>() : 0.0;
                        row.problem.C = c.is_number() ? c.get<double>() : 0.0;
                    }
                    rows.push_back(std::move(row));
                }
            }
        }
    }

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t k = next++; k < rows.size(); k = next++) {
            Row& row = rows[k];
            if (!row.error.empty()) continue;
            try {
                row.sol = radial::shoot(row.problem, tol);
            } catch (const std::exception& e) {
                row.error = e.what();
            }
        }
    };
    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    const std::size_t n_threads =
        std::min<std::size_t>(rows.size(), rc.threads > 0 ? static_cast<std::size_t>(rc.threads) : hw);
    {
        std::vector<std::jthread> pool;
        for (std::size_t t = 0; t < n_threads; ++t) pool.emplace_back(worker);
    }

    const std::vector<std::string> columns{"index",  "family",    "n",      "domain_param", "C", "f",
                                           "alpha", "converged", "status", "residual",     "message"};
    std::ofstream csv(rc.out / "sweep.csv");
    if (!csv) throw ConfigError("cannot write sweep.csv");
    for (std::size_t i = 0; i < columns.size(); ++i) csv << (i ? "," : "") << columns[i];
    csv << '\n';
    int failed = 0;
    for (std::size_t k = 0; k < rows.size(); ++k) {
        const Row& row = rows[k];
        const bool ok = row.error.empty() && row.sol && row.sol->converged;
        failed += ok ? 0 : 1;
        csv << k << ',' << family_name << ',' << row.problem.n << ',' << fmt(row.problem.domain_param) << ','
            << fmt(row.problem.C) << ',' << csv_field(row.error.empty() ? row.problem.f.description() : "") << ',';
        if (row.sol) {
            csv << fmt(row.sol->alpha) << ',' << (row.sol->converged ? 1 : 0) << ','
                << radial::to_string(row.sol->status) << ',' << fmt(row.sol->residual) << ','
                << csv_field(row.sol->message) << '\n';
        } else {
            csv << ",0,error,," << csv_field(row.error) << '\n';
        }
    }

    write_json(rc.out / "sweep.json", Json{{"schema_version", kSchemaVersion},
                                           {"command", "sweep"},
                                           {"family", family_name},
                                           {"tol", tol},
                                           {"rows", rows.size()},
                                           {"failed_rows", failed},
                                           {"files", {{"sweep.csv", file_entry(columns)}}}});
    out << rows.size() << " rows, " << failed << " failed\n";
    return kOk;
}

}  // namespace hyperoep::cli
