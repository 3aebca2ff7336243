// Acceptance criteria, one PASS/FAIL line each. Exit status is nonzero if any criterion fails.

#include "hypela/closed_curves.hpp"
#include "hypela/dirichlet.hpp"
#include "hypela/oracle.hpp"
#include "hypela/verification.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

using namespace hypela;

namespace {

constexpr double pi = std::numbers::pi;

struct Outcome {
    bool pass = true;
    std::string detail;
};

std::string format(const char* fmt, double a = 0, double b = 0, double c = 0)
{
    char buf[256];
    std::snprintf(buf, sizeof buf, fmt, a, b, c);
    return buf;
}

// Published table: n, m, k, W, L, S.
struct Row {
    int n, m;
    double k, W, L;
    long S;
};

const std::vector<Row> published{
    {3, 2, 0.9362, 39.96, 15.77, 3},      {5, 3, 0.9918, 63.83, 34.80, 10},     {7, 4, 0.9972, 88.58, 55.81, 21},
    {8, 5, 0.9819, 103.35, 49.96, 32},    {9, 5, 0.9986, 113.54, 78.23, 36},    {10, 7, 0.7463, 138.23, 45.78, 60},
    {11, 6, 0.9992, 138.57, 101.73, 55},  {11, 7, 0.9745, 143.08, 65.50, 66},   {12, 7, 0.9954, 152.33, 90.20, 72},
    {13, 7, 0.9995, 163.63, 126.12, 78},  {13, 8, 0.9865, 167.09, 84.57, 91},   {13, 9, 0.8349, 177.95, 61.46, 104},
    {14, 9, 0.9691, 182.90, 81.15, 112},  {15, 8, 0.9997, 188.72, 151.24, 105}, {16, 9, 0.9981, 202.09, 133.74, 128},
    {16, 11, 0.8664, 217.77, 77.18, 160}, {17, 9, 0.9998, 213.82, 177.00, 136}, {17, 10, 0.9945, 216.13, 124.86, 153},
    {17, 11, 0.9650, 222.77, 96.85, 170}, {17, 12, 0.5327, 236.87, 75.92, 187}, {18, 11, 0.9881, 230.89, 119.28, 180},
    {19, 10, 0.9998, 238.93, 203.32, 171}, {19, 11, 0.9961, 240.90, 145.89, 190}, {19, 12, 0.9779, 246.39, 115.42, 209},
    {19, 13, 0.8829, 257.64, 92.90, 228}, {20, 11, 0.9990, 252.08, 252.09, 200},
};

Outcome table_reproduction()
{
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    std::vector<std::pair<int, int>> rows;
    for (const auto& r : published) {
        rows.emplace_back(r.m, r.n);
    }
    auto records = enumerate_table(rows, 0);
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    int bad = 0;
    std::string cells;
    for (std::size_t i = 0; i < published.size(); ++i) {
        const Row& p = published[i];
        const ClosedCurveRecord& r = records[i];
        auto flag = [&](const char* what, double got, double want) {
            ++bad;
            cells += format(" (%g,%g)", p.m, p.n) + what + format(": computed %.4f, printed %.4f;", got, want);
        };
        if (std::abs(r.k_mn - p.k) > 5e-5) {
            flag(" k", r.k_mn, p.k);
        }
        if (std::abs(r.willmore_W - p.W) > 0.01) {
            flag(" W", r.willmore_W, p.W);
        }
        if (std::abs(r.length_L - p.L) > 0.01) {
            flag(" L", r.length_L, p.L);
        }
        if (r.selfint_S != p.S) {
            flag(" S", static_cast<double>(r.selfint_S), static_cast<double>(p.S));
        }
    }
    o.pass = bad == 0 && seconds < 5.0;
    o.detail = format("26 rows, %g mismatched cells, %.3f s;", bad, seconds) + cells;
    return o;
}

Outcome rotation_limits()
{
    Outcome o;
    double low = std::abs(rotation_delta_theta(1e-6) - std::sqrt(2.0) * pi);
    double high = std::abs(rotation_delta_theta(1 - 1e-6) - pi);
    bool monotone = true;
    double prev = rotation_delta_theta(1e-6);
    for (int i = 1; i < 200; ++i) {
        double k = 1e-6 + (1 - 2e-6) * i / 199.0;
        double cur = rotation_delta_theta(k);
        monotone = monotone && cur < prev;
        prev = cur;
    }
    o.pass = low <= 1e-3 && high <= 1e-3 && monotone;
    o.detail = format("|dtheta(1e-6) - sqrt2 pi| = %.3e, |dtheta(1-1e-6) - pi| = %.3e, ", low, high) +
               (monotone ? "strictly decreasing on 200 points" : "NOT monotone");
    return o;
}

double deviation_over_periods(const Elastica& curve, int periods)
{
    auto grid = uniform_grid(periods * curve.period(), 100 * periods + 1);
    IntegrationConfig cfg{1e-13, 1e-14, 0.0};
    auto ode = integrate_elastica(curve.at(0.0), grid, cfg);
    double worst = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        CurveState c = curve.at(grid[i]);
        double d = hyperbolic_distance({c.gamma1, c.gamma2}, {ode[i].state.gamma1, ode[i].state.gamma2});
        worst = std::max(worst, std::isfinite(d) ? d : INFINITY);
    }
    return worst;
}

Outcome oracle_equivalence()
{
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    std::mt19937_64 gen(4242);
    auto U = [&](double a, double b) { return std::uniform_real_distribution<double>(a, b)(gen); };
    double worst_orbit = 0.0, worst_wave = 0.0;
    for (int i = 0; i < 10; ++i) {
        OrbitlikeParams p(U(0.05, 0.95), U(-2, 2));
        Elastica c = Elastica::orbitlike(p, make_orbitlike_coefficients(U(0.5, 2.0), U(-pi, pi), U(-1, 1), p.mu()));
        worst_orbit = std::max(worst_orbit, deviation_over_periods(c, 5));
    }
    for (int i = 0; i < 10; ++i) {
        WavelikeParams p(U(0.72, 0.95), U(-2, 2));
        Elastica c = Elastica::wavelike(p, make_wavelike_coefficients(U(-1, 1), U(0.5, 2.0), U(-1, 1), p.mu()));
        worst_wave = std::max(worst_wave, deviation_over_periods(c, 5));
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    o.pass = worst_orbit <= 1e-8 && worst_wave <= 1e-8 && seconds < 10.0;
    o.detail = format("max d_H orbitlike %.3e, wavelike %.3e over 5 periods, %.2f s", worst_orbit, worst_wave,
                      seconds);
    return o;
}

Outcome identity_suites()
{
    Outcome o;
    int failed = 0, total = 0;
    std::string names;
    for (const SuiteReport& r : {verify_special_functions(20240611), verify_fundamental_system(20240611)}) {
        for (const Check& c : r.checks) {
            ++total;
            if (!c.passed()) {
                ++failed;
                names += " [" + c.name + "]";
            }
        }
    }
    o.pass = failed == 0;
    o.detail = format("%g of %g identity checks within tolerance", total - failed, total) + names;
    return o;
}

Outcome self_intersection_counts()
{
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    int bad = 0;
    double worst_sep = 0.0;
    for (const auto& r : published) {
        auto pts = self_intersections(r.m, r.n);
        if (static_cast<long>(pts.size()) != static_cast<long>(r.n) * (r.m - 1)) {
            ++bad;
        }
        for (const auto& p : pts) {
            worst_sep = std::max(worst_sep, p.separation);
        }
        if (r.n <= 8) {
            Elastica c = canonical_closed_curve(r.m, r.n);
            auto brute = brute_force_self_intersections(c, r.n * c.period());
            if (brute.size() != pts.size()) {
                ++bad;
            }
        }
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    o.pass = bad == 0 && worst_sep <= 1e-8 && seconds < 30.0;
    o.detail = format("%g count mismatches, max d_H between paired parameters %.3e, %.2f s", bad, worst_sep,
                      seconds);
    return o;
}

Outcome winding_numbers()
{
    Outcome o;
    std::string got;
    for (auto [m, n] : {std::pair{2, 3}, {3, 5}, {4, 7}, {5, 8}}) {
        int w = winding_number(m, n);
        o.pass = o.pass && w == m;
        got += format(" (%g,%g)->", m, n) + std::to_string(w);
    }
    o.detail = "winding numbers" + got;
    return o;
}

Outcome instability()
{
    Outcome o;
    InstabilityReport u = instability_report(12, 17);
    InstabilityReport s = instability_report(2, 3);
    double cutoff = instability_cutoff();
    bool bracket = instability_discriminant(cutoff - 1e-4) * instability_discriminant(cutoff + 1e-4) < 0;
    o.pass = u.provably_unstable && u.I_value < 0 && !s.provably_unstable && std::abs(cutoff - 0.6869145) <= 1e-4 &&
             bracket;
    o.detail = format("(12,17) mode %g gives I = %.4g; (2,3) not provable; cutoff %.7f", u.test_mode_j, u.I_value, cutoff);
    o.detail += u.provably_unstable ? "" : " [(12,17) NOT reported unstable]";
    o.detail += s.provably_unstable ? " [(2,3) wrongly reported unstable]" : "";
    return o;
}

Outcome dirichlet_closed_family()
{
    Outcome o;
    DirichletProblem closed{0.0, 1.0, 0.0, 1.0, 0.0, 0.0};
    SolveConfig cfg;
    cfg.l_max = 8;
    cfg.grid = 16;
    auto sols = solve(closed, cfg);
    std::vector<ClosedCurveRecord> families;
    for (const auto& [m, n] : valid_mn_pairs(20)) {
        families.push_back(closed_curve_record(m, n));
    }
    int off_family = 0;
    for (const auto& s : sols) {
        bool hit = false;
        for (const auto& f : families) {
            double turns = s.length_L / f.length_L;
            if (std::abs(s.k - f.k_mn) <= 1e-6 && std::abs(turns - std::round(turns)) <= 1e-6 && turns > 0.5) {
                hit = true;
            }
        }
        off_family += hit ? 0 : 1;
    }

    // Symmetric exactly on s* in sqrt(2-k^2) K Z.
    int flip_errors = 0;
    for (auto [m, n] : {std::pair{2, 3}, {3, 5}}) {
        double k = solve_k_mn(m, n);
        double lattice = std::sqrt(2 - k * k) * complete_K(k);
        for (int j = -2; j <= 2; ++j) {
            if (!classify_symmetry(symmetry_breaking_family(m, n, j * lattice, 1.0))) {
                ++flip_errors;
            }
            for (double frac : {0.05, 0.3, 0.5, 0.8}) {
                if (classify_symmetry(symmetry_breaking_family(m, n, (j + frac) * lattice, 1.0))) {
                    ++flip_errors;
                }
            }
        }
    }

    DirichletSolution a = symmetry_breaking_family(2, 3, 0.2, 1.0);
    DirichletSolution b = symmetry_breaking_family(3, 5, -0.5, 1.0);
    double res = std::max({std::abs(a.residual_r1), a.residual_r2, std::abs(b.residual_r1), b.residual_r2});
    bool figure_cases = !classify_symmetry(a) && !classify_symmetry(b) && res <= 1e-10;

    o.pass = sols.size() >= 3 && off_family == 0 && flip_errors == 0 && figure_cases;
    o.detail = format("%g roots, %g off the closed families; %g classification errors around the lattice; ",
                      static_cast<double>(sols.size()), off_family, flip_errors) +
               format("figure cases nonsymmetric with residual %.2e", res);
    return o;
}

Outcome symmetry_property()
{
    Outcome o;
    std::mt19937_64 gen(8020);
    auto U = [&](double a, double b) { return std::uniform_real_distribution<double>(a, b)(gen); };
    const double angles[] = {0.0, pi / 6, -pi / 4};
    SolveConfig cfg;
    cfg.l_max = 10;
    cfg.grid = 20;
    int sets = 0, tries = 0, solutions = 0, violations = 0;
    while (sets < 50 && tries < 1000) {
        ++tries;
        double alpha = U(0.5, 2.0);
        double phiA = angles[std::uniform_int_distribution<int>(0, 2)(gen)];
        double A1 = U(0, 1) < 0.5 ? -1.0 : 1.0;
        DirichletProblem d{A1, alpha, -A1, alpha, phiA, -phiA};
        if (!symmetry_hypothesis_check(d).positive_covered) {
            continue;
        }
        ++sets;
        for (const auto& s : solve(d, cfg)) {
            ++solutions;
            if (s.orientation == 1 && !s.symmetric) {
                ++violations;
            }
        }
    }
    o.pass = sets == 50 && violations == 0;
    o.detail = format("%g qualifying data sets, %g positively oriented solutions, %g nonsymmetric", sets, solutions,
                      violations);
    return o;
}

Outcome energy_lower_bound()
{
    Outcome o;
    auto records = enumerate_table(20, 0);
    int below = 0;
    double worst = 0.0;
    std::string first;
    for (const auto& r : records) {
        double bound = std::sqrt(2.0) * r.n * pi * pi;
        if (r.willmore_W < bound) {
            ++below;
            worst = std::max(worst, bound - r.willmore_W);
            if (first.empty()) {
                first = format(" e.g. (%g,%g): W = %.2f", r.m, r.n, r.willmore_W) + format(" < %.2f", bound);
            }
        }
    }
    o.pass = below == 0;
    o.detail = format("%g of %g records below sqrt2 n pi^2, max shortfall %.2f;", below,
                      static_cast<double>(records.size()), worst) +
               first;
    return o;
}

} // namespace

int main()
{
    std::setvbuf(stdout, nullptr, _IONBF, 0);
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
        {"table reproduction", table_reproduction},
        {"rotation limits", rotation_limits},
        {"oracle equivalence", oracle_equivalence},
        {"identity suites", identity_suites},
        {"self-intersections", self_intersection_counts},
        {"winding numbers", winding_numbers},
        {"instability", instability},
        {"Dirichlet closed family", dirichlet_closed_family},
        {"symmetry property", symmetry_property},
        {"energy lower bound", energy_lower_bound},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        failed += o.pass ? 0 : 1;
        std::printf("%s %2zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail.c_str());
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
