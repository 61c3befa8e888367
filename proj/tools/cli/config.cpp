#include "cli/config.hpp"

#include "hyperoep/errors.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

namespace hyperoep::cli {

namespace {

namespace fs = std::filesystem;

const Json& field_of(const Json& obj, const std::string& field) {
    if (!obj.is_object()) throw ConfigError("expected an object around field '" + field + "'");
    auto it = obj.find(field);
    if (it == obj.end()) throw ConfigError("missing field '" + field + "'");
    return *it;
}

std::vector<double> number_array(const Json& obj, const std::string& field) {
    const Json& a = field_of(obj, field);
    if (!a.is_array()) throw ConfigError("field '" + field + "': expected an array of numbers");
    std::vector<double> out;
    for (const Json& v : a) {
        if (!v.is_number()) throw ConfigError("field '" + field + "': expected an array of numbers");
        out.push_back(v.get<double>());
    }
    return out;
}

}  // namespace

void RunConfig::validate() const {
    if (tol && !(*tol > 0.0)) throw ConfigError("--tol must be positive");
    if (tol_halvings < 0) throw ConfigError("--tol-halvings must be >= 0");
    std::error_code ec;
    fs::create_directories(out, ec);
    if (ec || !fs::is_directory(out)) throw ConfigError("output directory '" + out.string() + "' cannot be created");
    const fs::path probe = out / ".hyperoep_write_probe";
    {
        std::ofstream f(probe);
        if (!f) throw ConfigError("output directory '" + out.string() + "' is not writable");
    }
    fs::remove(probe, ec);
}

Json load_json(const fs::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open '" + path.string() + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        // Convert the byte offset to a line and column.
        const std::size_t end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
        std::size_t line = 1;
        std::size_t col = 1;
        for (std::size_t i = 0; i < end; ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        std::ostringstream os;
        os << path.string() << ':' << line << ':' << col << ": malformed JSON";
        throw ConfigError(os.str());
    }
}

void check_schema(const Json& doc, const std::string& what) {
    if (!doc.is_object()) throw ConfigError(what + ": top level must be an object");
    auto it = doc.find("schema_version");
    if (it == doc.end()) return;
    if (!it->is_number_integer() || it->get<int>() != kSchemaVersion) {
        throw ConfigError(what + ": field 'schema_version': unsupported (expected " + std::to_string(kSchemaVersion) +
                          ")");
    }
}

double number(const Json& obj, const std::string& field) {
    const Json& v = field_of(obj, field);
    if (!v.is_number()) throw ConfigError("field '" + field + "': expected a number");
    const double x = v.get<double>();
    if (!std::isfinite(x)) throw ConfigError("field '" + field + "': must be finite");
    return x;
}

double number_or(const Json& obj, const std::string& field, double fallback) {
    return obj.contains(field) ? number(obj, field) : fallback;
}

int integer(const Json& obj, const std::string& field) {
    const Json& v = field_of(obj, field);
    if (!v.is_number_integer()) throw ConfigError("field '" + field + "': expected an integer");
    return v.get<int>();
}

int integer_or(const Json& obj, const std::string& field, int fallback) {
    return obj.contains(field) ? integer(obj, field) : fallback;
}

std::string string_or(const Json& obj, const std::string& field, const std::string& fallback) {
    if (!obj.contains(field)) return fallback;
    const Json& v = obj.at(field);
    if (!v.is_string()) throw ConfigError("field '" + field + "': expected a string");
    return v.get<std::string>();
}

Nonlinearity parse_nonlinearity(const Json& spec, const std::string& field, std::optional<double> default_root) {
    auto named = [&](const std::string& name) {
        if (name == "zero") return Nonlinearity::zero();
        if (name == "cubic") return Nonlinearity::cubic();
        throw ConfigError("field '" + field + "': unknown nonlinearity '" + name + "' (zero, cubic)");
    };
    if (spec.is_string()) return named(spec.get<std::string>());
    if (!spec.is_object()) throw ConfigError("field '" + field + "': expected an object or a name");

    const std::string kind = string_or(spec, "kind", "");
    try {
        if (kind == "linear") {
            const double slope = number(spec, "slope");
            std::optional<double> root = spec.contains("root") ? std::optional(number(spec, "root")) : default_root;
            if (!root) throw ConfigError("field '" + field + ".root': required when C is not given");
            return Nonlinearity::linear(slope, *root);
        }
        if (kind == "named") return named(string_or(spec, "name", ""));
        if (kind == "table") return Nonlinearity::table(number_array(spec, "u"), number_array(spec, "f"));
    } catch (const ConfigError& e) {
        throw ConfigError("in '" + field + "': " + e.what());
    } catch (const InvalidInput& e) {
        throw ConfigError("field '" + field + "': " + e.what());
    }
    throw ConfigError("field '" + field + ".kind': expected linear, named or table");
}

double resolve_C(const Json& obj, const Nonlinearity& f) {
    if (obj.contains("C")) return number(obj, "C");
    double best = 0.0;
    for (double r : f.roots_hint()) {
        if (r > 0.0 && (best == 0.0 || r < best)) best = r;
    }
    if (best == 0.0) throw ConfigError("field 'C': required because f declares no positive root");
    return best;
}

void check_hypotheses(const Nonlinearity& f, double C, bool strict) {
    if (!strict) return;
    const double scale = std::max(std::abs(C), 1.0);
    const double lo = -0.5 * scale;
    const double hi = 2.0 * scale;
    const auto slopes = f.sample_slopes(lo, hi);
    if (slopes.max_slope > 1e-12) {
        std::ostringstream os;
        os << "hypothesis violated: f is non-increasing (sampled slope " << slopes.max_slope << " > 0 on [" << lo
           << ", " << hi << "])";
        throw ConfigError(os.str());
    }
}

radial::RadialProblem parse_radial_problem(const Json& obj) {
    radial::RadialProblem p;
    const std::string family = string_or(obj, "family", "");
    try {
        p.family = radial::family_from_string(family);
    } catch (const InvalidInput&) {
        throw ConfigError("field 'family': expected ball_exterior, horoball_exterior or equidistant_half_space");
    }
    p.n = integer_or(obj, "n", 2);
    p.domain_param = number_or(obj, "domain_param", 0.0);
    const std::optional<double> C = obj.contains("C") ? std::optional(number(obj, "C")) : std::nullopt;
    p.f = parse_nonlinearity(field_of(obj, "f"), "f", C);
    p.C = resolve_C(obj, p.f);
    try {
        p.validate();
    } catch (const InvalidInput& e) {
        throw ConfigError(std::string("invalid problem: ") + e.what());
    }
    return p;
}

}  // namespace hyperoep::cli
