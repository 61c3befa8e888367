#include "hyperoep/errors.hpp"
#include "hyperoep/selftest.hpp"

#include <doctest.h>

using namespace hyperoep;

TEST_CASE("geometry suite passes on a clean kernel and is deterministic") {
    selftest::Options opt;
    opt.cases = 200;
    const auto a = selftest::run_geometry_suite(opt);
    const auto b = selftest::run_geometry_suite(opt);
    CHECK(selftest::all_passed(a));
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].cases == 200);
        CHECK(a[i].worst == b[i].worst);
    }
    MESSAGE(selftest::format_table(a));
}

TEST_CASE("corrupted reflection matrix is caught by the involution property") {
    selftest::Options opt;
    opt.cases = 50;
    opt.inject_fault = "reflection-matrix";
    const auto res = selftest::run_geometry_suite(opt);
    CHECK_FALSE(selftest::all_passed(res));
    for (const auto& r : res) {
        if (r.name == "reflection_involution") {
            CHECK(r.failures > 0);
            CHECK(r.worst > 1e-6);
        } else {
            CHECK(r.passed());
        }
    }
    CHECK(selftest::format_table(res).find("FAIL") != std::string::npos);
}

TEST_CASE("selftest options are validated") {
    selftest::Options opt;
    opt.inject_fault = "no-such-fault";
    CHECK_THROWS_AS(selftest::run_geometry_suite(opt), InvalidInput);
    opt.inject_fault.clear();
    opt.cases = 0;
    CHECK_THROWS_AS(selftest::run_geometry_suite(opt), InvalidInput);
}
