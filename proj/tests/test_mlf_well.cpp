// Mittag-Leffler well branch: the four eigenfunction forms, their trig
// reduction at alpha = 2, zero scanning, and the zero-to-energy map.

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <vector>

#include <fracwell/mlf_well.hpp>

using namespace fracwell;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {
const WellGeometry q1(1.0);
MlfEigenfunction make(MlfDefinition d, TrigMode::Parity p, double a) {
    return MlfEigenfunction{d, p, FractionalOrder(a)};
}
} // namespace

TEST_CASE("well form fixtures at alpha = 1.5, x = 0.7", "[mlf]") {
    CHECK_THAT(mlf_eigenfunction_eval(make(MlfDefinition::riemann, TrigMode::even, 1.5), 0.7),
               WithinRel(0.40585692645427654064, 1e-12));
    CHECK_THAT(mlf_eigenfunction_eval(make(MlfDefinition::riemann, TrigMode::odd, 1.5), 0.7),
               WithinRel(0.72239205166225169705, 1e-12));
    CHECK_THAT(mlf_eigenfunction_eval(make(MlfDefinition::caputo, TrigMode::even, 1.5), 0.7),
               WithinRel(0.61292156894177996524, 1e-12));
    CHECK_THAT(mlf_eigenfunction_eval(make(MlfDefinition::caputo, TrigMode::odd, 1.5), 0.7),
               WithinRel(0.6718882875509540958, 1e-12));
}

TEST_CASE("all four forms reduce to trig at alpha = 2", "[mlf]") {
    for (double x : {0.3, 1.0, 2.2}) {
        CHECK_THAT(mlf_eigenfunction_eval(make(MlfDefinition::caputo, TrigMode::even, 2.0), x),
                   WithinAbs(std::cos(x), 1e-10));
        CHECK_THAT(mlf_eigenfunction_eval(make(MlfDefinition::caputo, TrigMode::odd, 2.0), x),
                   WithinAbs(std::sin(x), 1e-10));
        CHECK_THAT(mlf_eigenfunction_eval(make(MlfDefinition::riemann, TrigMode::even, 2.0), x),
                   WithinAbs(std::cos(x), 1e-10));
        CHECK_THAT(mlf_eigenfunction_eval(make(MlfDefinition::riemann, TrigMode::odd, 2.0), x),
                   WithinAbs(std::sin(x), 1e-10));
    }
}

TEST_CASE("singular origin of the Riemann forms", "[mlf]") {
    // x^{a/2 - 1} diverges at 0 for a < 2; x^{a - 1} for a < 1
    CHECK_THROWS_AS(
        mlf_eigenfunction_eval(make(MlfDefinition::riemann, TrigMode::even, 1.5), 0.0),
        SingularOrigin);
    CHECK_THROWS_AS(
        mlf_eigenfunction_eval(make(MlfDefinition::riemann, TrigMode::odd, 0.7), 0.0),
        SingularOrigin);
    CHECK_NOTHROW(
        mlf_eigenfunction_eval(make(MlfDefinition::riemann, TrigMode::odd, 1.5), 0.0));
    CHECK_THAT(mlf_eigenfunction_eval(make(MlfDefinition::caputo, TrigMode::even, 1.5), 0.0),
               WithinRel(1.0, 1e-14));
    CHECK_THROWS_AS(
        mlf_eigenfunction_eval(make(MlfDefinition::caputo, TrigMode::even, 1.5), -0.1),
        DomainError);
}

TEST_CASE("first zeros at alpha = 1.5 match frozen references", "[mlf]") {
    CHECK_THAT(mlf_first_zeros(make(MlfDefinition::caputo, TrigMode::even, 1.5), 1)[0],
               WithinAbs(1.64522887065177969, 1e-9));
    CHECK_THAT(mlf_first_zeros(make(MlfDefinition::riemann, TrigMode::odd, 1.5), 1)[0],
               WithinAbs(2.95335212112180678, 1e-9));
    CHECK_THAT(mlf_first_zeros(make(MlfDefinition::caputo, TrigMode::odd, 1.5), 1)[0],
               WithinAbs(4.2567854137797264, 1e-9));
    CHECK_THAT(mlf_first_zeros(make(MlfDefinition::riemann, TrigMode::even, 1.5), 1)[0],
               WithinAbs(1.1828022307450205, 1e-9));
}

TEST_CASE("zeros recover the trig lattice at alpha = 2", "[mlf]") {
    // the validated window at alpha = 2 ends at x = 5, holding two cos zeros
    // (pi/2, 3pi/2) and one sin zero (pi)
    const auto cz = mlf_first_zeros(make(MlfDefinition::caputo, TrigMode::even, 2.0), 2);
    CHECK_THAT(cz[0], WithinAbs(0.5 * std::numbers::pi, 1e-8));
    CHECK_THAT(cz[1], WithinAbs(1.5 * std::numbers::pi, 1e-8));
    const auto sz = mlf_first_zeros(make(MlfDefinition::caputo, TrigMode::odd, 2.0), 1);
    CHECK_THAT(sz[0], WithinAbs(std::numbers::pi, 1e-8));
}

TEST_CASE("zeros are ordered and the families interlace plausibly", "[mlf]") {
    const auto z = mlf_first_zeros(make(MlfDefinition::riemann, TrigMode::odd, 1.5), 2);
    for (std::size_t i = 1; i < z.size(); ++i)
        CHECK(z[i] > z[i - 1]);
    // even-form first zero precedes the odd-form first zero, per definition
    const double e1 = mlf_first_zeros(make(MlfDefinition::caputo, TrigMode::even, 1.5), 1)[0];
    const double o1 = mlf_first_zeros(make(MlfDefinition::caputo, TrigMode::odd, 1.5), 1)[0];
    CHECK(e1 < o1);
}

TEST_CASE("window exhaustion on completely monotone forms", "[mlf]") {
    // at small alpha the Caputo even form E_{a,1}(-x^a) has no real zeros
    CHECK_THROWS_AS(mlf_first_zeros(make(MlfDefinition::caputo, TrigMode::even, 0.5), 1),
                    WindowExhausted);
    // and asking for too many zeros of a healthy family also exhausts
    CHECK_THROWS_AS(mlf_first_zeros(make(MlfDefinition::caputo, TrigMode::even, 1.5), 50),
                    WindowExhausted);
    CHECK_THROWS_AS(mlf_first_zeros(make(MlfDefinition::caputo, TrigMode::even, 1.5), 0),
                    DomainError);
}

TEST_CASE("zero-to-energy map", "[mlf]") {
    CHECK_THAT(mlf_zero_energy(1.64522887065177969, FractionalOrder(1.5), q1),
               WithinRel(2.1102770843262493, 1e-10));
    // explicit q^{-alpha}-style rescaling through z/q
    CHECK_THAT(mlf_zero_energy(3.0, FractionalOrder(1.5), WellGeometry(2.0)),
               WithinRel(std::pow(1.5, 1.5), 1e-14));
    CHECK_THROWS_AS(mlf_zero_energy(0.0, FractionalOrder(1.5), q1), DomainError);
    // classical check: first cos zero at the wall gives the ground energy
    CHECK_THAT(mlf_zero_energy(std::numbers::pi / 2.0, FractionalOrder(2.0), q1),
               WithinRel(std::numbers::pi * std::numbers::pi / 4.0, 1e-14));
}
