#include "cli/output.hpp"

#include <charconv>
#include <fstream>

namespace hyperoep::cli {

namespace fs = std::filesystem;

std::string fmt(double x) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

void write_json(const fs::path& path, const Json& doc) {
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot write '" + path.string() + "'");
    out << doc.dump(2) << '\n';
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') q += '"';
        q += c;
    }
    return q + '"';
}

namespace {

std::ofstream open_csv(const fs::path& path) {
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot write '" + path.string() + "'");
    return out;
}

}  // namespace

void write_profile_csv(const fs::path& path, const radial::RadialSolution& sol) {
    auto out = open_csv(path);
    out << "s,u,du\n";
    for (std::size_t i = 0; i < sol.s.size(); ++i) {
        out << fmt(sol.s[i]) << ',' << fmt(sol.u[i]) << ',' << fmt(sol.du[i]) << '\n';
    }
}

void write_solution_csv(const fs::path& path, const pde::Grid2DSolution& sol) {
    auto out = open_csv(path);
    out << "x,y,u,mask\n";
    const pde::Grid2D& g = sol.grid;
    for (int j = 0; j < g.ny; ++j) {
        for (int i = 0; i < g.nx; ++i) {
            const auto k = static_cast<std::size_t>(g.index(i, j));
            out << fmt(g.x(i)) << ',' << fmt(g.y(j)) << ',' << fmt(sol.u[k]) << ','
                << static_cast<int>(sol.mask[k]) << '\n';
        }
    }
}

void write_trace_csv(const fs::path& path, const verify::NeumannTrace& trace) {
    auto out = open_csv(path);
    out << "arclength,u,dnu\n";
    for (const auto& s : trace.samples) out << fmt(s.arclength) << ',' << fmt(s.u) << ',' << fmt(s.dnu) << '\n';
}

Json file_entry(const std::vector<std::string>& columns) {
    return Json{{"schema_version", kSchemaVersion}, {"columns", columns}};
}

Json problem_json(const radial::RadialProblem& p) {
    return Json{{"family", std::string(radial::to_string(p.family))},
                {"n", p.n},
                {"domain_param", p.domain_param},
                {"C", p.C},
                {"f", p.f.description()}};
}

Json radial_result_json(const radial::RadialSolution& sol, double tol) {
    const double tail = sol.u.empty() ? 0.0 : std::abs(sol.u.back() - sol.limit);
    return Json{{"alpha", sol.alpha},
                {"C", sol.limit},
                {"converged", sol.converged},
                {"status", std::string(radial::to_string(sol.status))},
                {"residual", sol.residual},
                {"message", sol.message},
                {"decay_rate", sol.decay_rate},
                {"stitch_s", sol.stitch_s},
                {"tolerance_audit",
                 {{"requested_tol", tol},
                  {"match_tolerance", radial::kMatchTolerance},
                  {"residual_within_match_tolerance", sol.residual <= radial::kMatchTolerance},
                  {"tail_tolerance", radial::kTailTolerance},
                  {"tail_deviation", tail},
                  {"tail_within_tolerance", tail <= radial::kTailTolerance}}}};
}

}  // namespace hyperoep::cli
