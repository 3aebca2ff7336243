#include "support.hpp"

#include "hypela/closed_curves.hpp"
#include "hypela/oracle.hpp"

#include <doctest.h>

using namespace hypela;
using testing::pi;

namespace {

const CurveState origin{0.0, 1.0, 0.0, 0.0, 0.0};
const IntegrationConfig tight{1e-12, 1e-13, 0.0};

double phase_gap(double a, double b)
{
    return std::abs(std::polar(1.0, a) - std::polar(1.0, b));
}

} // namespace

TEST_CASE("frame ODE with constant curvature sqrt2 traces the Clifford circle")
{
    auto grid = uniform_grid(2 * pi, 101);
    auto path = integrate_frame([](double) { return std::sqrt(2.0); }, origin, grid, tight);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        double s = grid[i];
        double den = std::sqrt(2.0) + std::cos(s);
        const CurveState& st = path[i].state;
        CHECK(std::abs(st.gamma1 - (1 + std::sqrt(2.0)) * std::sin(s) / den) < 1e-9);
        CHECK(std::abs(st.gamma2 - (1 + std::sqrt(2.0)) / den) < 1e-9);
        CHECK(phase_gap(st.phi, std::atan2(std::sin(s), 1 + std::sqrt(2.0) * std::cos(s))) < 1e-9);
    }
}

TEST_CASE("frame ODE with zero curvature traces the halfcircle geodesic")
{
    auto grid = uniform_grid(4.0, 81);
    auto path = integrate_frame([](double) { return 0.0; }, origin, grid, tight);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        double s = grid[i];
        CHECK(std::abs(path[i].state.gamma1 - std::tanh(s)) < 1e-9);
        CHECK(std::abs(path[i].state.gamma2 - 1 / std::cosh(s)) < 1e-9);
    }
}

TEST_CASE("frame ODE with kappa = 2 sech s traces the graph of cosh")
{
    auto grid = uniform_grid(3.0, 61);
    auto path = integrate_frame([](double s) { return 2 / std::cosh(s); }, origin, grid, tight);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        double s = grid[i];
        CHECK(std::abs(path[i].state.gamma1 - s) < 1e-9);
        CHECK(std::abs(path[i].state.gamma2 - std::cosh(s)) < 1e-9 * std::cosh(s));
        CurveState closed = evaluate_special(SpecialCurve::catenoid, s);
        CHECK(phase_gap(path[i].state.phi, closed.phi) < 1e-9);
    }
}

TEST_CASE("curvature ODE reproduces the elliptic curvature functions")
{
    SUBCASE("orbitlike")
    {
        double k = 0.8;
        double r = std::sqrt(2 - k * k);
        auto grid = uniform_grid(20.0, 201);
        auto got = integrate_curvature(2 / r, 0.0, grid, tight);
        for (std::size_t i = 0; i < grid.size(); ++i) {
            CHECK(std::abs(got[i].kappa - 2 / r * jacobi_sn_cn_dn(grid[i] / r, k).dn) < 1e-9);
        }
    }
    SUBCASE("wavelike")
    {
        double k = 0.85;
        double r = std::sqrt(2 * k * k - 1);
        auto grid = uniform_grid(20.0, 201);
        auto got = integrate_curvature(2 * k / r, 0.0, grid, tight);
        for (std::size_t i = 0; i < grid.size(); ++i) {
            CHECK(std::abs(got[i].kappa - 2 * k / r * jacobi_sn_cn_dn(grid[i] / r, k).cn) < 1e-9);
        }
    }
    SUBCASE("equilibrium")
    {
        auto got = integrate_curvature(std::sqrt(2.0), 0.0, uniform_grid(30.0, 31), tight);
        for (const auto& g : got) {
            CHECK(std::abs(g.kappa - std::sqrt(2.0)) < 1e-12);
        }
    }
}

TEST_CASE("first integral is conserved along the curvature ODE")
{
    double k = 0.6;
    double r = std::sqrt(2 - k * k);
    double mu = OrbitlikeParams(k, 0.0).mu();
    auto got = integrate_curvature(2 / r, 0.0, uniform_grid(60.0, 301), tight);
    for (const auto& g : got) {
        double m = -g.kappap * g.kappap + g.kappa * g.kappa - std::pow(g.kappa, 4) / 4;
        CHECK(std::abs(m - mu) < 1e-9);
    }
}

TEST_CASE("Willmore energy by quadrature")
{
    SUBCASE("table anchors")
    {
        Elastica c23 = canonical_closed_curve(2, 3);
        CHECK(std::abs(willmore_energy_numeric(c23, 3 * c23.period()) - 39.96) < 0.01);
        Elastica c710 = canonical_closed_curve(7, 10);
        CHECK(std::abs(willmore_energy_numeric(c710, 10 * c710.period()) - 138.23) < 0.01);
    }
    SUBCASE("Clifford circle: one loop has length 2 pi")
    {
        double L = 2 * pi;
        CurveState end = integrate_frame([](double) { return std::sqrt(2.0); }, origin, {0.0, L}, tight)[1].state;
        CHECK(hyperbolic_distance({end.gamma1, end.gamma2}, {0, 1}) < 1e-9);
        CHECK(willmore_energy_numeric([](double) { return std::sqrt(2.0); }, L) == doctest::Approx(pi * L));
    }
    SUBCASE("closed form for every table row")
    {
        for (const auto& [m, n] : published_table_rows()) {
            double k = solve_k_mn(m, n);
            double closed = 4 * n * pi * complete_E(k) / std::sqrt(2 - k * k);
            Elastica c = canonical_closed_curve(m, n, k);
            CHECK(std::abs(willmore_energy_numeric(c, n * c.period()) / closed - 1) < 1e-8);
        }
    }
}
