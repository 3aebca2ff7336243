#include "hypela/closed_curves.hpp"

#include "hypela/errors.hpp"
#include "hypela/parallel.hpp"

#include <algorithm>
#include <boost/math/tools/roots.hpp>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <string>
#include <unordered_map>
#include <unsupported/Eigen/FFT>

namespace hypela {

namespace {

constexpr double pi = std::numbers::pi;

// Root of a strictly monotone f on [lo, hi] with a sign change, to full double precision.
template <typename F>
double bracketed_root(F f, double lo, double hi)
{
    double flo = f(lo);
    double fhi = f(hi);
    if (flo == 0.0) {
        return lo;
    }
    if (fhi == 0.0) {
        return hi;
    }
    if ((flo > 0.0) == (fhi > 0.0)) {
        throw numeric_failure("bracketed_root: no sign change");
    }
    std::uintmax_t iters = 200;
    auto r = boost::math::tools::toms748_solve(f, lo, hi, flo, fhi, boost::math::tools::eps_tolerance<double>(52),
                                               iters);
    return 0.5 * (r.first + r.second);
}

double full_length(double k, int n)
{
    EllipticModulus m(k);
    return 2.0 * n * std::sqrt(2.0 - k * k) * m.quarter_period_K;
}

} // namespace

bool is_valid_mn(int m, int n)
{
    if (m <= 0 || n <= 0 || std::gcd(m, n) != 1) {
        return false;
    }
    // 1 < 2m/n < sqrt2 with integers: n < 2m and 4m^2 < 2n^2.
    long mm = m;
    long nn = n;
    return nn < 2 * mm && 4 * mm * mm < 2 * nn * nn;
}

void require_valid_mn(int m, int n)
{
    if (!is_valid_mn(m, n)) {
        throw domain_error("(m,n) = (" + std::to_string(m) + "," + std::to_string(n)
                           + ") needs gcd(m,n) = 1 and 1 < 2m/n < sqrt2");
    }
}

double solve_k_mn(int m, int n)
{
    require_valid_mn(m, n);
    return solve_k_for_rotation(2.0 * pi * m / n);
}

ClosedCurveRecord closed_curve_record(int m, int n, double k)
{
    require_valid_mn(m, n);
    EllipticModulus mod(k);
    double r = std::sqrt(2.0 - k * k);
    ClosedCurveRecord rec;
    rec.m = m;
    rec.n = n;
    rec.k_mn = k;
    rec.length_L = 2.0 * n * r * mod.quarter_period_K;
    rec.willmore_W = 4.0 * n * pi * mod.complete_E / r;
    rec.selfint_S = static_cast<long>(n) * (m - 1);
    return rec;
}

ClosedCurveRecord closed_curve_record(int m, int n)
{
    return closed_curve_record(m, n, solve_k_mn(m, n));
}

std::vector<std::pair<int, int>> valid_mn_pairs(int max_n)
{
    std::vector<std::pair<int, int>> out;
    for (int n = 1; n <= max_n; ++n) {
        for (int m = 1; m < n; ++m) {
            if (is_valid_mn(m, n)) {
                out.emplace_back(m, n);
            }
        }
    }
    return out;
}

const std::vector<std::pair<int, int>>& published_table_rows()
{
    static const std::vector<std::pair<int, int>> rows{
        {2, 3},   {3, 5},   {4, 7},   {5, 8},   {5, 9},   {7, 10},  {6, 11},  {7, 11},  {7, 12},
        {7, 13},  {8, 13},  {9, 13},  {9, 14},  {8, 15},  {9, 16},  {11, 16}, {9, 17},  {10, 17},
        {11, 17}, {12, 17}, {11, 18}, {10, 19}, {11, 19}, {12, 19}, {13, 19}, {11, 20},
    };
    return rows;
}

std::vector<ClosedCurveRecord> enumerate_table(const std::vector<std::pair<int, int>>& rows, unsigned threads)
{
    std::vector<ClosedCurveRecord> out(rows.size());
    parallel_for(rows.size(), threads, [&](std::size_t i) { out[i] = closed_curve_record(rows[i].first, rows[i].second); });
    return out;
}

std::vector<ClosedCurveRecord> enumerate_table(int max_n, unsigned threads)
{
    return enumerate_table(valid_mn_pairs(max_n), threads);
}

Elastica canonical_closed_curve(int m, int n, double k)
{
    require_valid_mn(m, n);
    OrbitlikeParams params(k, 0.0);
    CurveState start{0.0, 1.0, 0.0, 0.0, 0.0};
    return Elastica::orbitlike_through(params, start);
}

Elastica canonical_closed_curve(int m, int n)
{
    return canonical_closed_curve(m, n, solve_k_mn(m, n));
}

std::vector<std::pair<int, int>> intersection_index_set(int m, int n)
{
    require_valid_mn(m, n);
    std::vector<std::pair<int, int>> out;
    for (int l = 1; l <= 2 * n - 1; ++l) {
        long top = std::min(l, 2 * n - l) * static_cast<long>(m);
        long ceil_div = (top + n - 1) / n;
        for (long p = 1; p <= ceil_div - 1; ++p) {
            out.emplace_back(l, static_cast<int>(p));
        }
    }
    return out;
}

std::vector<SelfIntersection> self_intersections(int m, int n)
{
    double k = solve_k_mn(m, n);
    Elastica curve = canonical_closed_curve(m, n, k);
    const OrbitlikeParams& params = curve.orbit();
    double L = full_length(k, n);
    double h = params.half_period();

    std::vector<SelfIntersection> out;
    for (auto [l, p] : intersection_index_set(m, n)) {
        double target = pi * (static_cast<double>(l - 1) * m / n - p);
        auto f = [&](double s) { return frame_orbitlike(s, params).theta - target; };
        SelfIntersection x;
        x.l = l;
        x.p = p;
        x.s = bracketed_root(f, 0.0, L);
        double partner = -x.s + 2.0 * l * h;
        partner = std::fmod(partner, L);
        if (partner < 0.0) {
            partner += L;
        }
        x.partner_s = partner;
        CurveState a = curve.at(x.s);
        CurveState b = curve.at(x.partner_s);
        x.point = {a.gamma1, a.gamma2};
        x.separation = hyperbolic_distance(x.point, {b.gamma1, b.gamma2});
        if (!(x.separation <= 1e-8)) {
            throw numeric_failure("self_intersections: partner points differ by " + std::to_string(x.separation));
        }
        out.push_back(x);
    }
    std::sort(out.begin(), out.end(), [](const SelfIntersection& a, const SelfIntersection& b) { return a.s < b.s; });
    return out;
}

namespace {

struct Vec2 {
    double x;
    double y;
};

double cross(Vec2 a, Vec2 b, Vec2 c)
{
    return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

// Proper crossing of segments [p0,p1] and [q0,q1]; returns the parameters along each.
bool segment_crossing(Vec2 p0, Vec2 p1, Vec2 q0, Vec2 q1, double& u, double& v)
{
    double d1 = cross(q0, q1, p0);
    double d2 = cross(q0, q1, p1);
    double d3 = cross(p0, p1, q0);
    double d4 = cross(p0, p1, q1);
    if (((d1 > 0.0) == (d2 > 0.0)) || ((d3 > 0.0) == (d4 > 0.0)) || d1 == d2 || d3 == d4) {
        return false;
    }
    u = d1 / (d1 - d2);
    v = d3 / (d3 - d4);
    return true;
}

} // namespace

std::vector<CrossingPair> brute_force_self_intersections(const Elastica& curve, double L, int samples)
{
    if (samples < 16) {
        throw domain_error("brute_force_self_intersections: need at least 16 samples");
    }
    const int N = samples;
    const double ds = L / N;
    std::vector<Vec2> pts(N + 1);
    for (int i = 0; i <= N; ++i) {
        CurveState st = curve.at(i * ds);
        pts[i] = {st.gamma1, st.gamma2};
    }
    double cell = 0.0;
    double xmin = pts[0].x;
    double ymin = pts[0].y;
    for (int i = 0; i < N; ++i) {
        cell = std::max(cell, std::hypot(pts[i + 1].x - pts[i].x, pts[i + 1].y - pts[i].y));
        xmin = std::min(xmin, pts[i].x);
        ymin = std::min(ymin, pts[i].y);
    }
    cell *= 2.0;
    auto key = [](long ix, long iy) { return (static_cast<std::int64_t>(ix) << 32) ^ static_cast<std::uint32_t>(iy); };
    std::unordered_map<std::int64_t, std::vector<int>> grid;
    for (int i = 0; i < N; ++i) {
        long x0 = static_cast<long>(std::floor((std::min(pts[i].x, pts[i + 1].x) - xmin) / cell));
        long x1 = static_cast<long>(std::floor((std::max(pts[i].x, pts[i + 1].x) - xmin) / cell));
        long y0 = static_cast<long>(std::floor((std::min(pts[i].y, pts[i + 1].y) - ymin) / cell));
        long y1 = static_cast<long>(std::floor((std::max(pts[i].y, pts[i + 1].y) - ymin) / cell));
        for (long ix = x0; ix <= x1; ++ix) {
            for (long iy = y0; iy <= y1; ++iy) {
                grid[key(ix, iy)].push_back(i);
            }
        }
    }

    auto wrap = [L](double s) {
        double r = std::fmod(s, L);
        return r < 0.0 ? r + L : r;
    };
    std::vector<CrossingPair> found;
    auto add = [&](double s, double t) {
        // Newton on gamma(s) - gamma(t) = 0 (Euclidean), gamma' = g2 (cos phi, sin phi).
        for (int it = 0; it < 40; ++it) {
            CurveState a = curve.at(s);
            CurveState b = curve.at(t);
            double f1 = a.gamma1 - b.gamma1;
            double f2 = a.gamma2 - b.gamma2;
            double j11 = a.gamma2 * std::cos(a.phi);
            double j21 = a.gamma2 * std::sin(a.phi);
            double j12 = -b.gamma2 * std::cos(b.phi);
            double j22 = -b.gamma2 * std::sin(b.phi);
            double det = j11 * j22 - j12 * j21;
            if (det == 0.0) {
                break;
            }
            double dsn = (f1 * j22 - f2 * j12) / det;
            double dtn = (j11 * f2 - j21 * f1) / det;
            s -= dsn;
            t -= dtn;
            if (std::abs(dsn) + std::abs(dtn) < 1e-14 * (1.0 + L)) {
                break;
            }
        }
        s = wrap(s);
        t = wrap(t);
        if (s > t) {
            std::swap(s, t);
        }
        double tol = 1e-7 * (1.0 + L);
        for (const CrossingPair& c : found) {
            auto near = [&](double x, double y) { return std::abs(x - y) < tol || L - std::abs(x - y) < tol; };
            if (near(c.s, s) && near(c.t, t)) {
                return;
            }
        }
        CurveState a = curve.at(s);
        found.push_back({s, t, {a.gamma1, a.gamma2}});
    };

    for (const auto& [cell_key, segs] : grid) {
        (void)cell_key;
        for (std::size_t a = 0; a < segs.size(); ++a) {
            for (std::size_t b = a + 1; b < segs.size(); ++b) {
                int i = std::min(segs[a], segs[b]);
                int j = std::max(segs[a], segs[b]);
                int gap = j - i;
                if (gap <= 1 || gap >= N - 1) {
                    continue;
                }
                double u = 0.0;
                double v = 0.0;
                if (segment_crossing(pts[i], pts[i + 1], pts[j], pts[j + 1], u, v)) {
                    add((i + u) * ds, (j + v) * ds);
                }
            }
        }
    }
    std::sort(found.begin(), found.end(), [](const CrossingPair& a, const CrossingPair& b) { return a.s < b.s; });
    return found;
}

WindingReport winding_report(int m, int n)
{
    double k = solve_k_mn(m, n);
    Elastica curve = canonical_closed_curve(m, n, k);
    const CurveCoefficients& c = curve.coefficients();
    double smu = std::sqrt(curve.mu());
    double L = full_length(k, n);
    double P1 = c.b3 / c.a3;
    double P2 = 1.0 / (smu * c.a3);

    WindingReport rep;
    for (int per_period = 10000; per_period <= 160000; per_period *= 2) {
        int N = per_period * n;
        double total = 0.0;
        double total_aux = 0.0;
        complex prev;
        complex prev_aux;
        for (int i = 0; i <= N; ++i) {
            CurveState st = curve.at(L * i / N);
            complex z(st.gamma1 - P1, st.gamma2 - P2);
            complex e(st.gamma1 - P1, st.gamma2 * st.kappa / smu - P2);
            if (i > 0) {
                total += std::arg(z / prev);
                total_aux += std::arg(e / prev_aux);
            }
            prev = z;
            prev_aux = e;
        }
        rep.raw = total / (2.0 * pi);
        rep.auxiliary_raw = total_aux / (2.0 * pi);
        rep.samples_per_period = per_period;
        if (std::abs(rep.raw - std::round(rep.raw)) <= 1e-3
            && std::abs(rep.auxiliary_raw - std::round(rep.auxiliary_raw)) <= 1e-3) {
            rep.winding = static_cast<int>(std::lround(rep.raw));
            rep.auxiliary_winding = static_cast<int>(std::lround(rep.auxiliary_raw));
            return rep;
        }
    }
    throw numeric_failure("winding_number: accumulated angle does not settle on an integer");
}

int winding_number(int m, int n)
{
    return winding_report(m, n).winding;
}

double instability_A(double k)
{
    EllipticModulus mod(k);
    double K = mod.quarter_period_K;
    double E = mod.complete_E;
    double q = 2.0 - k * k;
    // The radicand is 4 alpha0-proportional and turns negative for large k, where C vanishes anyway.
    return pi * std::sqrt(std::max(0.0, 5.0 * E - q * K)) / (q * std::pow(K, 1.5));
}

double instability_B(double k)
{
    EllipticModulus mod(k);
    double K = mod.quarter_period_K;
    return pi * pi / ((2.0 - k * k) * K * K);
}

double instability_discriminant(double k)
{
    EllipticModulus mod(k);
    double K = mod.quarter_period_K;
    double E = mod.complete_E;
    return 16.0 * (1.0 - k * k) * K * K - 44.0 * (2.0 - k * k) * E * K + 75.0 * E * E;
}

double instability_C(double k)
{
    EllipticModulus mod(k);
    double K = mod.quarter_period_K;
    return std::sqrt(std::max(0.0, instability_discriminant(k))) / (std::sqrt(3.0) * (2.0 - k * k) * K);
}

double instability_cutoff()
{
    return bracketed_root([](double k) { return instability_discriminant(k); }, 0.3, 0.95);
}

double mean_coefficient_alpha0(double k)
{
    EllipticModulus mod(k);
    return 20.0 * mod.complete_E / ((2.0 - k * k) * mod.quarter_period_K) - 4.0;
}

double mean_coefficient_beta0(double k)
{
    EllipticModulus mod(k);
    double K = mod.quarter_period_K;
    double E = mod.complete_E;
    double k2 = k * k;
    double q = 2.0 - k2;
    return (28.0 * q * E + 2.0 * (3.0 * k2 - 2.0) * (k2 + 2.0) * K) / (3.0 * q * q * K);
}

double monochromatic_second_variation(double k, int n, int j)
{
    if (n <= 0 || j < 0) {
        throw domain_error("monochromatic_second_variation: need n > 0, j >= 0");
    }
    EllipticModulus mod(k);
    double half = std::sqrt(2.0 - k * k) * n * mod.quarter_period_K; // L/2
    double beta0 = mean_coefficient_beta0(k);
    if (j == 0) {
        return beta0 * 2.0 * half;
    }
    if ((2 * j) % n == 0) {
        throw domain_error("monochromatic_second_variation: 2j must not be a multiple of n");
    }
    double alpha0 = mean_coefficient_alpha0(k);
    double x = pi * j / half;
    double d = x * x - 0.25 * alpha0;
    return 2.0 * half * (d * d + (8.0 * beta0 - alpha0 * alpha0) / 16.0);
}

InstabilityReport instability_report(int m, int n)
{
    double k = solve_k_mn(m, n);
    InstabilityReport rep;
    rep.A_k = instability_A(k);
    rep.B_k = instability_B(k);
    rep.C_k = instability_C(k);
    if (rep.C_k > 0.0) {
        rep.n_threshold = (rep.A_k + std::sqrt(rep.A_k * rep.A_k + 4.0 * rep.B_k * rep.C_k)) / (2.0 * rep.C_k);
    }
    rep.provably_unstable = rep.C_k > 0.0 && n > rep.n_threshold;
    if (rep.provably_unstable) {
        EllipticModulus mod(k);
        double alpha0 = std::max(0.0, mean_coefficient_alpha0(k));
        double x = std::sqrt(alpha0) * std::sqrt(2.0 - k * k) * n * mod.quarter_period_K / (2.0 * pi);
        for (int j : {static_cast<int>(std::floor(x)), static_cast<int>(std::ceil(x))}) {
            if (j <= 0 || (2 * j) % n == 0) {
                continue;
            }
            double I = monochromatic_second_variation(k, n, j);
            if (rep.test_mode_j < 0 || I < rep.I_value) {
                rep.test_mode_j = j;
                rep.I_value = I;
            }
        }
        if (rep.test_mode_j < 0 || !(rep.I_value < 0.0)) {
            throw numeric_failure("instability_report: criterion holds but no negative monochromatic mode found");
        }
    }
    return rep;
}

namespace {

double second_variation_integral(const std::vector<double>& kappa, const std::vector<double>& kappap,
                                 const std::vector<double>& phi, double L, int stride)
{
    const int N = static_cast<int>(phi.size()) / stride;
    std::vector<double> f(N);
    for (int i = 0; i < N; ++i) {
        f[i] = phi[static_cast<std::size_t>(i) * stride];
    }
    Eigen::FFT<double> fft;
    std::vector<std::complex<double>> spec;
    fft.fwd(spec, f);
    std::vector<std::complex<double>> d1(N);
    std::vector<std::complex<double>> d2(N);
    for (int j = 0; j < N; ++j) {
        int wave = j <= N / 2 ? j : j - N;
        double omega = 2.0 * pi * wave / L;
        d1[j] = (2 * j == N) ? 0.0 : std::complex<double>(0.0, omega) * spec[j];
        d2[j] = -omega * omega * spec[j];
    }
    std::vector<double> fp;
    std::vector<double> fpp;
    fft.inv(fp, d1);
    fft.inv(fpp, d2);
    double sum = 0.0;
    for (int i = 0; i < N; ++i) {
        double ka = kappa[static_cast<std::size_t>(i) * stride];
        double kp = kappap[static_cast<std::size_t>(i) * stride];
        double k2 = ka * ka;
        sum += 2.0 * fpp[i] * fpp[i] - (5.0 * k2 - 4.0) * fp[i] * fp[i]
            + (6.0 * kp * kp - k2 * k2 + 3.0 * k2 + 2.0) * f[i] * f[i];
    }
    return sum * L / N;
}

} // namespace

SecondVariation second_variation(int m, int n, const std::vector<double>& phi_samples)
{
    const std::size_t N = phi_samples.size();
    if (N < 2048 || N % 2 != 0) {
        throw domain_error("second_variation: need an even sample count >= 2048");
    }
    double k = solve_k_mn(m, n);
    OrbitlikeParams params(k, 0.0);
    double L = full_length(k, n);
    std::vector<double> kappa(N);
    std::vector<double> kappap(N);
    for (std::size_t i = 0; i < N; ++i) {
        Curvature c = curvature(L * static_cast<double>(i) / N, params);
        kappa[i] = c.kappa;
        kappap[i] = c.kappap;
    }
    SecondVariation out;
    out.value = second_variation_integral(kappa, kappap, phi_samples, L, 1);
    out.half_resolution_value = second_variation_integral(kappa, kappap, phi_samples, L, 2);
    out.resolved = std::abs(out.value - out.half_resolution_value) <= 1e-6 * std::max(1.0, std::abs(out.value));
    return out;
}

std::vector<double> sample_periodic(const std::function<double(double)>& phi, double L, int count)
{
    std::vector<double> out(count);
    for (int i = 0; i < count; ++i) {
        out[i] = phi(L * i / count);
    }
    return out;
}

TorusGap torus_convergence_gap_for_k(double k)
{
    OrbitlikeParams params(k, 0.0);
    Elastica curve = Elastica::orbitlike(params, make_orbitlike_coefficients(1.0, 0.0, 0.0, params.mu()));
    Enclosure e = enclosure(curve);
    TorusGap gap;
    gap.annulus_width = e.R1 - e.R2;
    gap.center_separation = std::hypot(e.Q1.x1 - e.Q2.x1, e.Q1.x2 - e.Q2.x2);
    gap.mu = params.mu();
    return gap;
}

TorusGap torus_convergence_gap(int m, int n)
{
    return torus_convergence_gap_for_k(solve_k_mn(m, n));
}

} // namespace hypela
