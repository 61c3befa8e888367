#pragma once

#include "cli/config.hpp"
#include "hyperoep/grid2d.hpp"
#include "hyperoep/radial.hpp"
#include "hyperoep/verifier.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace hyperoep::cli {

/// Shortest round-trip decimal form, so outputs are byte-stable.
std::string fmt(double x);

void write_json(const std::filesystem::path& path, const Json& doc);

/// Quotes a CSV field when it contains a separator, quote or newline.
std::string csv_field(const std::string& s);

/// Columns s,u,du.
void write_profile_csv(const std::filesystem::path& path, const radial::RadialSolution& sol);
/// Columns x,y,u,mask.
void write_solution_csv(const std::filesystem::path& path, const pde::Grid2DSolution& sol);
/// Columns arclength,u,dnu.
void write_trace_csv(const std::filesystem::path& path, const verify::NeumannTrace& trace);

/// Entry for the "files" section of a report.
Json file_entry(const std::vector<std::string>& columns);

Json problem_json(const radial::RadialProblem& p);
Json radial_result_json(const radial::RadialSolution& sol, double tol);

}  // namespace hyperoep::cli
