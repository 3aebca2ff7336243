#include "support.hpp"

#include "hypela/closed_curves.hpp"
#include "hypela/errors.hpp"
#include "hypela/oracle.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

using namespace hypela;
using testing::pi;

TEST_CASE("valid (m,n) pairs")
{
    CHECK(is_valid_mn(2, 3));
    CHECK_FALSE(is_valid_mn(3, 3));
    CHECK_FALSE(is_valid_mn(4, 6));
    CHECK_FALSE(is_valid_mn(5, 7)); // 10/7 > sqrt2
    CHECK_THROWS_AS(require_valid_mn(1, 2), domain_error);
    CHECK(valid_mn_pairs(20).size() == 27);
    CHECK(published_table_rows().size() == 26);
    auto all = valid_mn_pairs(20);
    CHECK(std::find(all.begin(), all.end(), std::pair{13, 20}) != all.end());
}

TEST_CASE("k_{m,n} from the table")
{
    CHECK(std::abs(solve_k_mn(2, 3) - 0.9362) < 1e-4);
    CHECK(std::abs(solve_k_mn(7, 10) - 0.7463) < 1e-4);
    CHECK(std::abs(solve_k_mn(12, 17) - 0.5327) < 1e-4);
    CHECK(std::abs(rotation_delta_theta(solve_k_mn(3, 5)) - 6 * pi / 5) < 1e-12);
}

TEST_CASE("closed curve records")
{
    ClosedCurveRecord r23 = closed_curve_record(2, 3);
    CHECK(std::abs(r23.willmore_W - 39.96) < 0.01);
    CHECK(std::abs(r23.length_L - 15.77) < 0.01);
    CHECK(r23.selfint_S == 3);

    ClosedCurveRecord r58 = closed_curve_record(5, 8);
    CHECK(std::abs(r58.willmore_W - 103.35) < 0.01);
    CHECK(std::abs(r58.length_L - 49.96) < 0.01);
    CHECK(r58.selfint_S == 32);

    // The printed length for this row repeats the energy; L = 2n sqrt(2-k^2) K(k) gives 179.73.
    ClosedCurveRecord r1120 = closed_curve_record(11, 20);
    CHECK(std::abs(r1120.willmore_W - 252.08) < 0.01);
    double k = r1120.k_mn;
    CHECK(r1120.length_L == doctest::Approx(40 * std::sqrt(2 - k * k) * complete_K(k)).epsilon(1e-13));
    CHECK(r1120.selfint_S == 200);
}

TEST_CASE("closed curves close up")
{
    for (const auto& [m, n] : published_table_rows()) {
        Elastica c = canonical_closed_curve(m, n);
        double L = n * c.period();
        CurveState a = c.at(0.0);
        CurveState b = c.at(L);
        CHECK(hyperbolic_distance({a.gamma1, a.gamma2}, {b.gamma1, b.gamma2}) < 1e-8);
        CHECK(std::abs(std::polar(1.0, a.phi) - std::polar(1.0, b.phi)) < 1e-8);
    }
}

TEST_CASE("self-intersections")
{
    SUBCASE("(2,3)")
    {
        CHECK(self_intersections(2, 3).size() == 3);
        auto index = intersection_index_set(2, 3);
        std::set<std::pair<int, int>> expected;
        for (int l = 1; l <= 5; ++l) {
            int top = static_cast<int>(std::ceil(std::min(l, 6 - l) * 2.0 / 3.0)) - 1;
            for (int p = 1; p <= top; ++p) {
                expected.insert({l, p});
            }
        }
        CHECK(std::set(index.begin(), index.end()) == expected);
    }
    SUBCASE("(3,5) intersections are simple")
    {
        auto pts = self_intersections(3, 5);
        REQUIRE(pts.size() == 10);
        std::map<long, int> partners;
        double L = closed_curve_record(3, 5).length_L;
        for (const auto& p : pts) {
            partners[std::lround(p.s / L * 1e6)]++;
            partners[std::lround(p.partner_s / L * 1e6)]++;
        }
        CHECK(partners.size() == 20);
        for (const auto& [key, count] : partners) {
            CHECK(count == 1);
        }
    }
    SUBCASE("counts, separation and distinct parameters for every table row")
    {
        for (const auto& [m, n] : published_table_rows()) {
            auto pts = self_intersections(m, n);
            CHECK(static_cast<long>(pts.size()) == static_cast<long>(n) * (m - 1));
            for (std::size_t i = 0; i < pts.size(); ++i) {
                CHECK(pts[i].separation <= 1e-8);
                if (i > 0) {
                    CHECK(pts[i].s - pts[i - 1].s >= 1e-6);
                }
            }
        }
    }
    SUBCASE("brute-force crossings agree for n <= 8")
    {
        for (const auto& [m, n] : valid_mn_pairs(8)) {
            Elastica c = canonical_closed_curve(m, n);
            auto crossings = brute_force_self_intersections(c, n * c.period());
            CHECK(static_cast<long>(crossings.size()) == static_cast<long>(n) * (m - 1));
        }
    }
}

TEST_CASE("winding numbers")
{
    for (auto [m, n] : {std::pair{2, 3}, {3, 5}, {4, 7}, {5, 8}}) {
        CHECK(winding_number(m, n) == m);
    }
}

TEST_CASE("instability criterion")
{
    InstabilityReport unstable = instability_report(12, 17);
    CHECK(unstable.provably_unstable);
    CHECK(unstable.I_value < 0);
    InstabilityReport r23 = instability_report(2, 3);
    CHECK_FALSE(r23.provably_unstable);
    CHECK(r23.C_k == 0.0);

    double cutoff = instability_cutoff();
    CHECK(std::abs(cutoff - 0.6869145) < 1e-4);
    CHECK(instability_discriminant(cutoff - 1e-3) * instability_discriminant(cutoff + 1e-3) < 0);
    CHECK(instability_C(0.5) > 0);
    CHECK(instability_C(0.8) == 0.0);
}

TEST_CASE("second variation")
{
    SUBCASE("constant function gives beta0 L")
    {
        int m = 12, n = 17;
        double k = solve_k_mn(m, n);
        double K = complete_K(k), E = complete_E(k), k2 = k * k;
        double beta0 = (28 * (2 - k2) * E + 2 * (3 * k2 - 2) * (k2 + 2) * K) / (3 * (2 - k2) * (2 - k2) * K);
        double L = closed_curve_record(m, n).length_L;
        SecondVariation sv = second_variation(m, n, sample_periodic([](double) { return 1.0; }, L, 4096));
        CHECK(sv.resolved);
        CHECK(sv.value == doctest::Approx(beta0 * L).epsilon(1e-9));
        CHECK(mean_coefficient_beta0(k) == doctest::Approx(beta0).epsilon(1e-12));
    }
    SUBCASE("monochromatic mode: quadrature against closed form")
    {
        int m = 12, n = 17;
        InstabilityReport rep = instability_report(m, n);
        REQUIRE(rep.test_mode_j > 0);
        int j = rep.test_mode_j;
        double k = solve_k_mn(m, n);
        double L = closed_curve_record(m, n).length_L;
        auto samples = sample_periodic([&](double s) { return std::cos(2 * pi * j * s / L); }, L, 8192);
        SecondVariation sv = second_variation(m, n, samples);
        double closed = monochromatic_second_variation(k, n, j);
        CHECK(closed < 0);
        CHECK(std::abs(sv.value / closed - 1) < 1e-6);
    }
}

TEST_CASE("enclosure gap shrinks towards the Clifford torus")
{
    std::vector<std::pair<int, int>> approach{{2, 3}, {7, 10}, {12, 17}, {41, 58}, {70, 99}};
    double prev = std::numeric_limits<double>::infinity();
    for (auto [m, n] : approach) {
        TorusGap g = torus_convergence_gap(m, n);
        CHECK(g.annulus_width < prev);
        prev = g.annulus_width;
    }
    double k = 0.9362;
    CHECK(torus_convergence_gap_for_k(k).mu == doctest::Approx(4 * (1 - k * k) / ((2 - k * k) * (2 - k * k))));

    double last_mu = 0.0;
    for (double eps : {1e-1, 1e-2, 1e-3, 1e-4}) {
        double mu = torus_convergence_gap_for_k(solve_k_for_rotation(std::sqrt(2.0) * pi - eps)).mu;
        CHECK(mu > last_mu);
        last_mu = mu;
    }
    CHECK(last_mu > 0.999);
}

TEST_CASE("table enumeration is ordered and parallel-safe")
{
    auto one = enumerate_table(20, 1);
    auto many = enumerate_table(20, 4);
    REQUIRE(one.size() == many.size());
    for (std::size_t i = 0; i < one.size(); ++i) {
        CHECK(one[i].k_mn == many[i].k_mn);
        CHECK(one[i].willmore_W == many[i].willmore_W);
        if (i > 0) {
            CHECK(std::pair(one[i - 1].n, one[i - 1].m) < std::pair(one[i].n, one[i].m));
        }
    }
}
