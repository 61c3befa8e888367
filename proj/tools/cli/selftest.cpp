#include "cli/commands.hpp"
#include "cli/output.hpp"
#include "hyperoep/errors.hpp"
#include "hyperoep/selftest.hpp"

namespace hyperoep::cli {

int cmd_selftest(const RunConfig& rc, std::ostream& out, std::ostream&) {
    selftest::Options opt;
    opt.seed = rc.seed;
    opt.cases = rc.cases;
    opt.inject_fault = rc.inject_fault;
    std::vector<selftest::PropertyResult> results;
    try {
        results = selftest::run_geometry_suite(opt);
    } catch (const InvalidInput& e) {
        throw ConfigError(e.what());
    }
    out << selftest::format_table(results);
    const bool ok = selftest::all_passed(results);
    out << (ok ? "all invariants passed\n" : "invariant failures detected\n");

    if (rc.out_explicit) {
        Json props = Json::array();
        for (const auto& r : results) {
            props.push_back({{"name", r.name},
                             {"cases", r.cases},
                             {"failures", r.failures},
                             {"worst", r.worst},
                             {"tolerance", r.tolerance},
                             {"passed", r.passed()},
                             {"first_failure", r.first_failure}});
        }
        write_json(rc.out / "selftest.json", Json{{"schema_version", kSchemaVersion},
                                                  {"command", "selftest"},
                                                  {"seed", rc.seed},
                                                  {"cases", rc.cases},
                                                  {"inject_fault", rc.inject_fault},
                                                  {"passed", ok},
                                                  {"properties", props}});
    }
    return ok ? kOk : kFailed;
}

}  // namespace hyperoep::cli
