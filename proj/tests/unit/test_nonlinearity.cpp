#include "hyperoep/errors.hpp"
#include "hyperoep/nonlinearity.hpp"

#include <doctest.h>

#include <cmath>

using hyperoep::InvalidInput;
using hyperoep::Nonlinearity;

TEST_CASE("linear nonlinearity") {
    const Nonlinearity f = Nonlinearity::linear(2.0, 1.5);
    CHECK(f(1.5) == 0.0);
    CHECK(f(0.0) == 3.0);
    CHECK(f.derivative(0.3) == -2.0);
    CHECK(f.lipschitz_bound() == 2.0);
    CHECK(f.nonincreasing());
    CHECK(f.roots_hint() == std::vector<double>{1.5});
    CHECK_NOTHROW(f.validate(-3.0, 5.0));
    CHECK_FALSE(Nonlinearity::linear(-1.0, 1.0).nonincreasing());
}

TEST_CASE("table nonlinearity interpolates and extrapolates linearly") {
    const Nonlinearity t = Nonlinearity::table({0.0, 1.0, 2.0}, {1.0, 0.0, -3.0});
    CHECK(t(0.5) == doctest::Approx(0.5));
    CHECK(t(1.5) == doctest::Approx(-1.5));
    CHECK(t(-1.0) == doctest::Approx(2.0));
    CHECK(t(3.0) == doctest::Approx(-6.0));
    CHECK(t.lipschitz_bound() == 3.0);
    CHECK(t.nonincreasing());
    CHECK(t.roots_hint() == std::vector<double>{1.0});
    CHECK_NOTHROW(t.validate(-2.0, 4.0));
    CHECK_THROWS_AS(Nonlinearity::table({0.0, 0.0}, {1.0, 2.0}), InvalidInput);
    CHECK_THROWS_AS(Nonlinearity::table({0.0}, {1.0}), InvalidInput);
}

TEST_CASE("declared hypotheses are checked against sampled slopes") {
    const Nonlinearity liar([](double u) { return u; }, 0.5, true);
    const auto r = liar.sample_slopes(-1.0, 1.0);
    CHECK_FALSE(r.lipschitz_ok);
    CHECK_FALSE(r.monotone_ok);
    CHECK_THROWS_AS(liar.validate(-1.0, 1.0), InvalidInput);

    const Nonlinearity c = Nonlinearity::cubic();
    CHECK_NOTHROW(c.validate(-1.0, 2.0));
    CHECK_FALSE(c.nonincreasing());

    const Nonlinearity numeric([](double u) { return std::sin(u); }, 1.0, false);
    CHECK(numeric.derivative(0.4) == doctest::Approx(std::cos(0.4)).epsilon(1e-8));
    CHECK_THROWS_AS(Nonlinearity([](double) { return 0.0; }, -1.0, true), InvalidInput);
}
