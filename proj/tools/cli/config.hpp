#pragma once

// Run configuration shared by the subcommands and the JSON config readers.

#include "hyperoep/nonlinearity.hpp"
#include "hyperoep/radial.hpp"

#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>

namespace hyperoep::cli {

using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

enum ExitCode : int { kOk = 0, kInvalid = 1, kFailed = 2 };

/// Malformed or inconsistent configuration; the message names the file
/// position or the offending field.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::string command;
    std::filesystem::path config;
    std::filesystem::path out = ".";
    bool out_explicit = false;
    std::optional<double> tol;
    std::uint64_t seed = 1;
    bool strict_hypotheses = false;
    /// solve-radial: extra runs at tol/2, tol/4, ...
    int tol_halvings = 0;
    /// selftest only.
    int cases = 1000;
    std::string inject_fault;
    /// sweep: worker threads, 0 for hardware concurrency.
    int threads = 0;

    /// Throws ConfigError unless tol > 0 and the output directory can be
    /// created and written.
    void validate() const;
};

/// Parses a JSON file. Syntax errors report "path:line:column".
Json load_json(const std::filesystem::path& path);

/// Checks schema_version (absent is accepted as the current version).
void check_schema(const Json& doc, const std::string& what);

double number(const Json& obj, const std::string& field);
double number_or(const Json& obj, const std::string& field, double fallback);
int integer(const Json& obj, const std::string& field);
int integer_or(const Json& obj, const std::string& field, int fallback);
std::string string_or(const Json& obj, const std::string& field, const std::string& fallback);

/// {"kind": "linear", "slope": k, "root": r} | {"kind": "named", "name": "zero" | "cubic"}
/// | {"kind": "table", "u": [...], "f": [...]}; a bare string is a named kind.
/// A linear root defaults to `default_root`.
Nonlinearity parse_nonlinearity(const Json& spec, const std::string& field, std::optional<double> default_root);

/// Explicit C, else the smallest positive declared root of f.
double resolve_C(const Json& obj, const Nonlinearity& f);

/// In strict mode, rejects f whose sampled slopes on [-C/2, 2C] are positive.
void check_hypotheses(const Nonlinearity& f, double C, bool strict);

radial::RadialProblem parse_radial_problem(const Json& obj);

}  // namespace hyperoep::cli
