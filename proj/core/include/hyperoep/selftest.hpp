#pragma once

// Randomized property suite over the geometry kernel.

#include <cstdint>
#include <string>
#include <vector>

namespace hyperoep::selftest {

struct Options {
    std::uint64_t seed = 1;
    int cases = 1000;
    /// Name of a deliberate fault (see fault_names()); empty for none.
    std::string inject_fault;
};

struct PropertyResult {
    std::string name;
    int cases = 0;
    int failures = 0;
    double worst = 0.0;
    double tolerance = 0.0;
    /// Description of the first failing case, empty if none.
    std::string first_failure;

    bool passed() const { return failures == 0; }
};

/// Runs every property `cases` times with dimensions cycling through 2..4.
/// Throws InvalidInput for an unknown fault name or cases < 1.
std::vector<PropertyResult> run_geometry_suite(const Options& options);

/// Faults accepted by Options::inject_fault.
std::vector<std::string> fault_names();

/// Fixed-width table, one line per property.
std::string format_table(const std::vector<PropertyResult>& results);

bool all_passed(const std::vector<PropertyResult>& results);

}  // namespace hyperoep::selftest
