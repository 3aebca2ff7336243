#include "hypela/verification.hpp"

#include "hypela/closed_curves.hpp"
#include "hypela/dirichlet.hpp"
#include "hypela/errors.hpp"
#include "hypela/oracle.hpp"

#include <algorithm>
#include <boost/math/special_functions/ellint_1.hpp>
#include <boost/math/special_functions/ellint_2.hpp>
#include <boost/math/special_functions/heuman_lambda.hpp>
#include <boost/math/special_functions/jacobi_zeta.hpp>
#include <chrono>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

namespace hypela {

namespace {

constexpr double pi = std::numbers::pi;
constexpr double sqrt2 = std::numbers::sqrt2;

class Tally {
public:
    Tally(std::string name, double tolerance)
    {
        check_.name = std::move(name);
        check_.tolerance = tolerance;
    }

    void add(double error)
    {
        ++check_.samples;
        if (std::isnan(error)) {
            check_.max_error = std::numeric_limits<double>::infinity();
        } else {
            check_.max_error = std::max(check_.max_error, std::abs(error));
        }
    }

    Check done() const { return check_; }

private:
    Check check_;
};

class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}
    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

private:
    std::mt19937_64 rng_;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start)
{
    return std::chrono::duration<double>(Clock::now() - start).count();
}

// Amplitude am(u) from sn, cn, continued across branches.
double amplitude(double u, double k)
{
    JacobiTriple t = jacobi_sn_cn_dn(u, k);
    double K = complete_K(k);
    double turns = std::round(u / (2.0 * K));
    double base = std::atan2(t.sn, t.cn);
    double target = turns * pi;
    return base + 2.0 * pi * std::round((target - base) / (2.0 * pi));
}

double second_difference(double (*f)(double, double), double u, double k, double h)
{
    return (f(u + h, k) - 2.0 * f(u, k) + f(u - h, k)) / (h * h);
}

double sn_of(double u, double k) { return jacobi_sn_cn_dn(u, k).sn; }
double cn_of(double u, double k) { return jacobi_sn_cn_dn(u, k).cn; }
double dn_of(double u, double k) { return jacobi_sn_cn_dn(u, k).dn; }

double max_abs(std::initializer_list<double> values)
{
    double m = 0.0;
    for (double v : values) {
        if (std::isnan(v)) {
            return v;
        }
        m = std::max(m, std::abs(v));
    }
    return m;
}

double path_deviation(const Elastica& curve, const std::vector<PathSample>& path)
{
    double m = 0.0;
    for (const PathSample& p : path) {
        CurveState st = curve.at(p.s);
        m = std::max(m, hyperbolic_distance({st.gamma1, st.gamma2}, {p.state.gamma1, p.state.gamma2}));
    }
    return m;
}

CurveState random_state(Sampler& rng)
{
    CurveState st;
    st.gamma1 = rng.uniform(-1.0, 1.0);
    st.gamma2 = rng.uniform(0.5, 2.0);
    st.phi = rng.uniform(-pi, pi);
    return st;
}

} // namespace

bool SuiteReport::passed() const
{
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed(); });
}

const std::vector<std::string>& verification_suite_names()
{
    static const std::vector<std::string> names = {"special-functions", "fundamental-system", "oracle",
                                                   "closed-curves", "dirichlet"};
    return names;
}

SuiteReport verify_special_functions(std::uint64_t seed)
{
    auto start = Clock::now();
    Sampler rng(seed);
    SuiteReport report;
    report.suite = "special-functions";

    Tally pyth_sn("sn^2 + cn^2 = 1", 1e-13);
    Tally pyth_dn("dn^2 + k^2 sn^2 = 1", 1e-13);
    Tally period("cn, sn antiperiodic and dn periodic under u -> u + 2K", 1e-12);
    Tally shift("shift by -K: cn, sn, dn in terms of sn/dn, cn/dn, k'/dn", 1e-12);
    Tally second("second-order ODEs of sn, cn, dn by central differences (h = 1e-4)", 1e-5);
    Tally ode("sn, cn, dn vs. integrated first-order system", 1e-10);
    for (int i = 0; i < 200; ++i) {
        double k = rng.uniform(0.01, 0.999);
        double u = rng.uniform(-50.0, 50.0);
        JacobiTriple t = jacobi_sn_cn_dn(u, k);
        pyth_sn.add(t.sn * t.sn + t.cn * t.cn - 1.0);
        pyth_dn.add(t.dn * t.dn + k * k * t.sn * t.sn - 1.0);
    }
    for (int i = 0; i < 100; ++i) {
        double k = rng.uniform(0.01, 0.99);
        double u = rng.uniform(-10.0, 10.0);
        double K = complete_K(k);
        double kp = std::sqrt((1.0 - k) * (1.0 + k));
        JacobiTriple t = jacobi_sn_cn_dn(u, k);
        JacobiTriple p = jacobi_sn_cn_dn(u + 2.0 * K, k);
        period.add(max_abs({p.sn + t.sn, p.cn + t.cn, p.dn - t.dn}));
        JacobiTriple m = jacobi_sn_cn_dn(u - K, k);
        shift.add(max_abs({m.cn - kp * t.sn / t.dn, m.sn + t.cn / t.dn, m.dn - kp / t.dn}));
        double h = 1e-4;
        second.add(max_abs({second_difference(sn_of, u, k, h) - (-(1.0 + k * k) * t.sn + 2.0 * k * k * std::pow(t.sn, 3)),
                            second_difference(cn_of, u, k, h) - ((2.0 * k * k - 1.0) * t.cn - 2.0 * k * k * std::pow(t.cn, 3)),
                            second_difference(dn_of, u, k, h) - ((2.0 - k * k) * t.dn - 2.0 * std::pow(t.dn, 3))}));
    }
    for (int i = 0; i < 20; ++i) {
        double k = rng.uniform(0.05, 0.95);
        double u = rng.uniform(-6.0, 6.0);
        JacobiTriple t = jacobi_sn_cn_dn(u, k);
        IntegrationConfig cfg;
        cfg.rel_tol = 1e-13;
        cfg.abs_tol = 1e-14;
        JacobiTriple o = jacobi_by_integration(u, k, cfg);
        ode.add(max_abs({t.sn - o.sn, t.cn - o.cn, t.dn - o.dn}));
    }

    Tally complete("K(k), E(k) vs. Boost.Math (relative)", 1e-13);
    Tally derivs("dK/dk, dE/dk vs. central differences", 1e-6);
    for (int i = 0; i < 200; ++i) {
        double k = rng.uniform(0.0, 0.999);
        double Kb = boost::math::ellint_1(k);
        double Eb = boost::math::ellint_2(k);
        complete.add(max_abs({(complete_K(k) - Kb) / Kb, (complete_E(k) - Eb) / Eb}));
    }
    for (int i = 0; i < 100; ++i) {
        double k = rng.uniform(0.05, 0.95);
        double h = 1e-6;
        double dK = (complete_K(k + h) - complete_K(k - h)) / (2.0 * h);
        double dE = (complete_E(k + h) - complete_E(k - h)) / (2.0 * h);
        derivs.add(max_abs({(complete_K_derivative(k) - dK) / std::max(1.0, std::abs(dK)),
                            (complete_E_derivative(k) - dE) / std::max(1.0, std::abs(dE))}));
    }

    Tally quad("F, E vs. adaptive quadrature of the defining integrals (20 x 20 grid)", 1e-11);
    Tally boost_inc("F, E vs. Boost.Math incomplete integrals", 1e-13);
    for (int i = 1; i <= 20; ++i) {
        double l = i / 20.5;
        for (int j = 0; j < 20; ++j) {
            double k = 0.98 * j / 19.0;
            double F = incomplete_F(l, k);
            double E = incomplete_E(l, k);
            quad.add(max_abs({F - quadrature_F(l, k), E - quadrature_E(l, k)}));
            double phi = std::asin(l);
            boost_inc.add(max_abs({F - boost::math::ellint_1(k, phi), E - boost::math::ellint_2(k, phi)}));
        }
    }

    Tally inverses("sn, cn, dn of their principal inverses", 1e-11);
    for (int i = 0; i < 200; ++i) {
        double k = rng.uniform(0.01, 0.99);
        double kp = std::sqrt((1.0 - k) * (1.0 + k));
        double zs = rng.uniform(-1.0, 1.0);
        double zc = rng.uniform(0.0, 1.0);
        double zd = rng.uniform(kp, 1.0);
        inverses.add(max_abs({jacobi_sn_cn_dn(inverse_sn(zs, k), k).sn - zs,
                              jacobi_sn_cn_dn(inverse_cn(zc, k), k).cn - zc,
                              jacobi_sn_cn_dn(inverse_dn(zd, k), k).dn - zd}));
    }

    Tally theta_shift("Theta(z + K) = Theta1(z)", 1e-13);
    Tally zeta("Jacobi zeta vs. Boost.Math Z(am u, k)", 1e-12);
    Tally heuman("Heuman Lambda vs. Boost.Math", 1e-12);
    Tally heuman_d("Heuman Lambda partials vs. central differences", 1e-6);
    for (int i = 0; i < 200; ++i) {
        double k = rng.uniform(0.05, 0.99);
        double z = rng.uniform(-5.0, 5.0);
        double K = complete_K(k);
        theta_shift.add(theta_Theta(z + K, k) - theta_Theta1(z, k));
        zeta.add(jacobi_zeta(z, k) - boost::math::jacobi_zeta(k, amplitude(z, k)));
        double l = rng.uniform(0.01, 0.99);
        heuman.add(heuman_lambda0(l, k) - boost::math::heuman_lambda(k, std::asin(l)));
    }
    for (int i = 0; i < 100; ++i) {
        double k = rng.uniform(0.1, 0.9);
        double l = rng.uniform(0.1, 0.9);
        double h = 1e-6;
        HeumanPartials d = heuman_lambda0_partials(l, k);
        double dl = (heuman_lambda0(l + h, k) - heuman_lambda0(l - h, k)) / (2.0 * h);
        double dk = (heuman_lambda0(l, k + h) - heuman_lambda0(l, k - h)) / (2.0 * h);
        heuman_d.add(max_abs({d.d_l - dl, d.d_k - dk}));
    }

    for (const Tally* t : {&pyth_sn, &pyth_dn, &period, &shift, &second, &ode, &complete, &derivs, &quad, &boost_inc,
                           &inverses, &theta_shift, &zeta, &heuman, &heuman_d}) {
        report.checks.push_back(t->done());
    }
    report.seconds = seconds_since(start);
    return report;
}

SuiteReport verify_fundamental_system(std::uint64_t seed)
{
    auto start = Clock::now();
    Sampler rng(seed);
    SuiteReport report;
    report.suite = "fundamental-system";
    constexpr double tol = 1e-10;

    // Orbitlike pair w1, w2 of w'' + 2 dn^2 w = 0.
    Tally w_parity("w1 odd, w2 even", tol);
    Tally w_init("w1(0) = 0, w2(0) = k', w1'(0) = -sqrt(2-k^2), w2'(0) = 0", tol);
    Tally w_sq("w1^2 + w2^2 = 2 - k^2 - dn^2", tol);
    Tally w_dot("w1 w1' + w2 w2' = k^2 sn cn dn", tol);
    Tally w_wr("w1 w2' - w2 w1' = k' sqrt(2-k^2)", tol);
    Tally w_qp("(w1 + i w2)(z + 2lK) = (w1 + i w2)(z) e^{i l dtheta}", tol);
    Tally w_anchor("(w1 + i w2)(-K) = e^{i(pi - dtheta)/2}", tol);
    Tally w_lame("Lame residual w'' + 2 dn^2 w by central differences", 1e-5);
    Tally w_ode("w1, w2 vs. integrated Lame equation", 1e-9);
    for (int i = 0; i < 200; ++i) {
        double k = rng.uniform(0.02, 0.98);
        double z = rng.uniform(-10.0, 10.0);
        OrbitlikeParams p(k, 0.0);
        double kp = p.modulus().k_prime;
        double K = p.modulus().quarter_period_K;
        double r = p.scale();
        LamePair w = halphen_hermite_orbitlike(z, p);
        LamePair wm = halphen_hermite_orbitlike(-z, p);
        w_parity.add(max_abs({w.w1 + wm.w1, w.w2 - wm.w2}));
        LamePair w0 = halphen_hermite_orbitlike(0.0, p);
        w_init.add(max_abs({w0.w1, w0.w2 - kp, w0.w1p + r, w0.w2p}));
        JacobiTriple t = jacobi_sn_cn_dn(z, k);
        w_sq.add(w.w1 * w.w1 + w.w2 * w.w2 - (2.0 - k * k - t.dn * t.dn));
        w_dot.add(w.w1 * w.w1p + w.w2 * w.w2p - k * k * t.sn * t.cn * t.dn);
        w_wr.add(w.w1 * w.w2p - w.w2 * w.w1p - kp * r);
        for (int l : {-2, -1, 1, 2}) {
            LamePair ws = halphen_hermite_orbitlike(z + 2.0 * l * K, p);
            complex lhs(ws.w1, ws.w2);
            complex rhs = complex(w.w1, w.w2) * std::polar(1.0, l * p.delta_theta());
            w_qp.add(std::abs(lhs - rhs));
        }
        LamePair wk = halphen_hermite_orbitlike(-K, p);
        w_anchor.add(std::abs(complex(wk.w1, wk.w2) - std::polar(1.0, 0.5 * (pi - p.delta_theta()))));
        if (i < 100) {
            double h = 1e-4;
            LamePair a = halphen_hermite_orbitlike(z + h, p);
            LamePair b = halphen_hermite_orbitlike(z - h, p);
            double d1 = (a.w1 - 2.0 * w.w1 + b.w1) / (h * h) + 2.0 * t.dn * t.dn * w.w1;
            double d2 = (a.w2 - 2.0 * w.w2 + b.w2) / (h * h) + 2.0 * t.dn * t.dn * w.w2;
            w_lame.add(max_abs({d1, d2}));
        }
        if (i < 20) {
            IntegrationConfig cfg;
            cfg.rel_tol = 1e-13;
            cfg.abs_tol = 1e-14;
            double zz = std::clamp(z, -4.0, 4.0);
            std::vector<double> times = {0.0, zz};
            auto s1 = integrate_lame(k, 0.0, -r, times, cfg);
            auto s2 = integrate_lame(k, kp, 0.0, times, cfg);
            LamePair e = halphen_hermite_orbitlike(zz, p);
            w_ode.add(max_abs({s1.back().w - e.w1, s2.back().w - e.w2, s1.back().wp - e.w1p, s2.back().wp - e.w2p}));
        }
    }

    // Orbitlike frame W1, W2 and angle theta.
    Tally W_sq("W1^2 + W2^2 = (kappa^2 - mu)/kappa^2", tol);
    Tally W_der("W1', W2' in terms of W1, W2, kappa, kappa'", tol);
    Tally W_wr("W1 W2' - W2 W1' = sqrt(mu)/2", tol);
    Tally W_qp("(W1 + i W2)(s + l P) = (W1 + i W2)(s) e^{i l dtheta}", tol);
    Tally W_refl("(W1 + i W2)(s) = (-W1 + i W2)(-s - 2s* + l P) e^{i(l-1) dtheta}", tol);
    Tally th_fact("(W, W') = M(kappa) R(theta) factorization", tol);
    Tally th_der("theta' = sqrt(mu) kappa^2 / (2(kappa^2 - mu)) by central differences", 1e-6);
    Tally th_anchor("theta(-s* + l P/2) = (l-1) dtheta / 2", tol);
    Tally th_shift("theta(s + l P) - theta(s) = l dtheta", tol);
    Tally th_refl("theta(-s* + s) + theta(-s* - s) = -dtheta", tol);
    for (int i = 0; i < 200; ++i) {
        double k = rng.uniform(0.02, 0.98);
        double s_star = rng.uniform(-3.0, 3.0);
        double s = rng.uniform(-10.0, 10.0);
        OrbitlikeParams p(k, s_star);
        double mu = p.mu();
        double smu = std::sqrt(mu);
        double P = p.period();
        FrameValues f = frame_orbitlike(s, p);
        double kap = f.kappa;
        double g = kap * kap - mu;
        W_sq.add(f.W1 * f.W1 + f.W2 * f.W2 - g / (kap * kap));
        double c1 = mu * f.kappap / (kap * g);
        double c2 = smu * kap * kap / (2.0 * g);
        W_der.add(max_abs({f.W1p - (c1 * f.W1 - c2 * f.W2), f.W2p - (c2 * f.W1 + c1 * f.W2)}));
        W_wr.add(f.W1 * f.W2p - f.W2 * f.W1p - 0.5 * smu);
        int l = static_cast<int>(std::floor(rng.uniform(-3.0, 4.0)));
        FrameValues fs = frame_orbitlike(s + l * P, p);
        W_qp.add(std::abs(complex(fs.W1, fs.W2) - complex(f.W1, f.W2) * std::polar(1.0, l * p.delta_theta())));
        FrameValues fr = frame_orbitlike(-s - 2.0 * s_star + l * P, p);
        W_refl.add(std::abs(complex(f.W1, f.W2) - complex(-fr.W1, fr.W2) * std::polar(1.0, (l - 1) * p.delta_theta())));
        double sq = std::sqrt(g);
        double m11 = sq / kap;
        double m21 = -smu * kap / (2.0 * sq);
        double m22 = mu * f.kappap / (kap * kap * sq);
        double ct = std::cos(f.theta);
        double st = std::sin(f.theta);
        th_fact.add(max_abs({f.W1 - m11 * (-st), f.W2 - m11 * ct, f.W1p - (m21 * ct + m22 * (-st)),
                             f.W2p - (m21 * st + m22 * ct)}));
        double h = 1e-5;
        double dth = (frame_orbitlike(s + h, p).theta - frame_orbitlike(s - h, p).theta) / (2.0 * h);
        th_der.add(dth - c2);
        int la = static_cast<int>(std::floor(rng.uniform(-3.0, 4.0)));
        th_anchor.add(frame_orbitlike(-s_star + 0.5 * la * P, p).theta - 0.5 * (la - 1) * p.delta_theta());
        th_shift.add(fs.theta - f.theta - l * p.delta_theta());
        double u = rng.uniform(-10.0, 10.0);
        th_refl.add(frame_orbitlike(-s_star + u, p).theta + frame_orbitlike(-s_star - u, p).theta + p.delta_theta());
    }

    // Wavelike pair w^_j = cn w_j and frame.
    Tally v_parity("w^1 odd, w^2 even", tol);
    Tally v_sq("cn^2 (w2^2 - w1^2) = 1 - k^2 + (2k^2 - 1) cn^2", tol);
    Tally v_dot("cn^3 (w2 w2' - w1 w1') = (1 - k^2) sn dn", tol);
    Tally v_wr("w2 w1' - w1 w2' = -k sqrt((1 - k^2)(2k^2 - 1))", tol);
    Tally V_sq("W2^2 - W1^2 = (kappa^2 - mu)/kappa^2", tol);
    Tally V_der("wavelike W1', W2' in terms of W1, W2, kappa, kappa'", tol);
    Tally V_wr("W2 W1' - W1 W2' = -sqrt|mu|/2", tol);
    Tally V_fact("(W, W') = M(kappa) H(theta) hyperbolic factorization", tol);
    Tally V_der_th("wavelike theta' = sqrt|mu| kappa^2 / (2(kappa^2 - mu)) by central differences", 1e-6);
    Tally V_pos("W^2 > 0 on [-20, 20] (reported: max of -W^2)", 0.0);
    Tally V_lim("W^1/W^2 -> -+1 at s = +-30 (k = 0.8)", 1e-6);
    {
        WavelikeParams p(0.8, 0.0);
        FrameValues fp = frame_wavelike(30.0, p);
        FrameValues fm = frame_wavelike(-30.0, p);
        V_lim.add(max_abs({fp.Wh1 / fp.Wh2 + 1.0, fm.Wh1 / fm.Wh2 - 1.0}));
    }
    for (int i = 0; i < 200; ++i) {
        double k = rng.uniform(0.72, 0.98);
        double s_star = rng.uniform(-2.0, 2.0);
        WavelikeParams p(k, s_star);
        double K = p.modulus().quarter_period_K;
        double u = rng.uniform(-0.95, 0.95) * K;
        LamePair a = halphen_hermite_wavelike(u, p);
        LamePair b = halphen_hermite_wavelike(-u, p);
        v_parity.add(max_abs({a.w1 + b.w1, a.w2 - b.w2}));
        JacobiTriple t = jacobi_sn_cn_dn(u, k);
        v_sq.add(a.w2 * a.w2 - a.w1 * a.w1 - (1.0 - k * k + (2.0 * k * k - 1.0) * t.cn * t.cn));
        // w = w^/cn, w' = (w^' cn + w^ sn dn)/cn^2
        double w1 = a.w1 / t.cn;
        double w2 = a.w2 / t.cn;
        double w1p = (a.w1p * t.cn + a.w1 * t.sn * t.dn) / (t.cn * t.cn);
        double w2p = (a.w2p * t.cn + a.w2 * t.sn * t.dn) / (t.cn * t.cn);
        double scale = std::max(1.0, w1 * w1 + w2 * w2);
        v_dot.add((std::pow(t.cn, 3) * (w2 * w2p - w1 * w1p) - (1.0 - k * k) * t.sn * t.dn) / scale);
        v_wr.add((w2 * w1p - w1 * w2p + k * std::sqrt((1.0 - k * k) * (2.0 * k * k - 1.0))) / scale);

        double s = rng.uniform(-10.0, 10.0);
        FrameValues f = frame_wavelike(s, p);
        if (!f.curvature_zero && std::abs(f.kappa) > 0.05) {
            double mu = p.mu();
            double smu = std::sqrt(std::abs(mu));
            double kap = f.kappa;
            double g = kap * kap - mu;
            double wscale = std::max(1.0, f.W1 * f.W1 + f.W2 * f.W2);
            V_sq.add((f.W2 * f.W2 - f.W1 * f.W1 - g / (kap * kap)) / wscale);
            double c1 = mu * f.kappap / (kap * g);
            double c2 = smu * kap * kap / (2.0 * g);
            V_der.add(max_abs({f.W1p - (c1 * f.W1 - c2 * f.W2), f.W2p - (-c2 * f.W1 + c1 * f.W2)}) / wscale);
            V_wr.add((f.W2 * f.W1p - f.W1 * f.W2p + 0.5 * smu) / wscale);
            double sq = std::sqrt(g);
            double m11 = sq / kap;
            double m21 = -smu * kap / (2.0 * sq);
            double m22 = mu * f.kappap / (kap * kap * sq);
            double ch = std::cosh(f.theta);
            double sh = std::sinh(f.theta);
            V_fact.add(max_abs({f.W1 - m11 * (-sh), f.W2 - m11 * ch, f.W1p - (m21 * ch + m22 * (-sh)),
                                f.W2p - (-m21 * sh + m22 * ch)}) / wscale);
            double h = 1e-5;
            double dth = (frame_wavelike(s + h, p).theta - frame_wavelike(s - h, p).theta) / (2.0 * h);
            V_der_th.add(dth - c2);
        }
        if (i < 20) {
            double worst = -std::numeric_limits<double>::infinity();
            for (int j = 0; j <= 400; ++j) {
                worst = std::max(worst, -frame_wavelike(-20.0 + 0.1 * j, p).Wh2);
            }
            V_pos.add(std::max(0.0, worst));
        }
    }

    for (const Tally* t : {&w_parity, &w_init, &w_sq, &w_dot, &w_wr, &w_qp, &w_anchor, &w_lame, &w_ode, &W_sq, &W_der,
                           &W_wr, &W_qp, &W_refl, &th_fact, &th_der, &th_anchor, &th_shift, &th_refl, &v_parity,
                           &v_sq, &v_dot, &v_wr, &V_sq, &V_der, &V_wr, &V_fact, &V_der_th, &V_pos, &V_lim}) {
        report.checks.push_back(t->done());
    }
    report.seconds = seconds_since(start);
    return report;
}

SuiteReport verify_oracle(std::uint64_t seed)
{
    auto start = Clock::now();
    Sampler rng(seed);
    SuiteReport report;
    report.suite = "oracle";
    IntegrationConfig tight;
    tight.rel_tol = 1e-13;
    tight.abs_tol = 1e-14;

    Tally orb("orbitlike closed form vs. ODE over 5 periods (d_H)", 1e-8);
    Tally wav("wavelike closed form vs. ODE over 5 periods (d_H)", 1e-8);
    for (int i = 0; i < 10; ++i) {
        OrbitlikeParams p(rng.uniform(0.05, 0.95), rng.uniform(-2.0, 2.0));
        Elastica c = Elastica::orbitlike_through(p, random_state(rng));
        orb.add(path_deviation(c, integrate_elastica(c.at(0.0), uniform_grid(5.0 * c.period(), 500), tight)));
    }
    for (int i = 0; i < 10; ++i) {
        WavelikeParams p(rng.uniform(0.72, 0.95), rng.uniform(-2.0, 2.0));
        Elastica c = Elastica::wavelike_through(p, random_state(rng));
        wav.add(path_deviation(c, integrate_elastica(c.at(0.0), uniform_grid(5.0 * c.period(), 500), tight)));
    }

    Tally mu_drift("mu = -kappa'^2 + kappa^2 - kappa^4/4 drift over 10 periods", 1e-9);
    Tally kappa_orb("integrated curvature vs. dn formula (k = 0.8)", 1e-9);
    Tally kappa_wav("integrated curvature vs. cn formula (k = 0.85)", 1e-9);
    Tally kappa_eq("kappa = sqrt2 equilibrium", 1e-12);
    {
        OrbitlikeParams p(0.8, 0.0);
        auto samples = integrate_curvature(2.0 / p.scale(), 0.0, uniform_grid(10.0 * p.period(), 400), tight);
        double mu0 = p.mu();
        for (const CurvatureSample& c : samples) {
            double kap2 = c.kappa * c.kappa;
            mu_drift.add(-c.kappap * c.kappap + kap2 - 0.25 * kap2 * kap2 - mu0);
            kappa_orb.add(c.kappa - curvature(c.s, p).kappa);
        }
        WavelikeParams w(0.85, 0.0);
        for (const CurvatureSample& c : integrate_curvature(2.0 * 0.85 / w.scale(), 0.0,
                                                            uniform_grid(5.0 * w.period(), 400), tight)) {
            kappa_wav.add(c.kappa - curvature(c.s, w).kappa);
        }
        for (const CurvatureSample& c : integrate_curvature(sqrt2, 0.0, uniform_grid(50.0, 100), tight)) {
            kappa_eq.add(c.kappa - sqrt2);
        }
    }

    Tally special("circle, geodesic halfcircle and catenoid from the frame ODE", 1e-9);
    for (SpecialCurve kind : {SpecialCurve::circular, SpecialCurve::geodesic_halfcircle, SpecialCurve::catenoid}) {
        auto kappa_fn = [kind](double s) { return evaluate_special(kind, s).kappa; };
        double s_end = kind == SpecialCurve::circular ? 4.0 * pi : 4.0;
        for (const PathSample& ps : integrate_frame(kappa_fn, evaluate_special(kind, 0.0), uniform_grid(s_end, 200), tight)) {
            CurveState e = evaluate_special(kind, ps.s);
            special.add(hyperbolic_distance({e.gamma1, e.gamma2}, {ps.state.gamma1, ps.state.gamma2}));
        }
    }

    Tally zode("Z-ODE residual along the integrated curve (k = 0.8, P = (0.3, 0.7))", 1e-7);
    Tally zprime("Z' closed formula vs. differenced integrated Z", 1e-7);
    {
        OrbitlikeParams p(0.8, 0.0);
        Elastica c = Elastica::orbitlike_through(p, CurveState{});
        ZOdeCheck z = check_Z_ode(c, {0.3, 0.7}, 2.0 * c.period());
        zode.add(z.max_residual);
        zprime.add(z.max_z_prime_mismatch);
    }

    Tally energy("Willmore energy quadrature vs. closed form (relative, n <= 20)", 1e-8);
    for (auto [m, n] : valid_mn_pairs(20)) {
        ClosedCurveRecord rec = closed_curve_record(m, n);
        Elastica c = canonical_closed_curve(m, n, rec.k_mn);
        energy.add((willmore_energy_numeric(c, rec.length_L) - rec.willmore_W) / rec.willmore_W);
    }

    for (const Tally* t : {&orb, &wav, &mu_drift, &kappa_orb, &kappa_wav, &kappa_eq, &special, &zode, &zprime, &energy}) {
        report.checks.push_back(t->done());
    }
    report.seconds = seconds_since(start);
    return report;
}

SuiteReport verify_closed_curves(unsigned threads)
{
    auto start = Clock::now();
    SuiteReport report;
    report.suite = "closed-curves";
    std::vector<ClosedCurveRecord> rows = enumerate_table(20, threads);

    Tally rotation("dtheta(k_mn) = 2 pi m / n", 1e-12);
    // 4 pi n E/sqrt(2-k^2) > 4 pi n because E(k)^2 > 2 - k^2 on (0,1).
    Tally bound("W_mn > 4 pi n (reported: max shortfall)", 0.0);
    // E/sqrt(2-k^2) < pi/(2 sqrt2) on (0,1), so the energy also stays below sqrt2 n pi^2.
    Tally upper("W_mn < sqrt2 n pi^2 (reported: max excess)", 0.0);
    Tally count("self-intersections found = n(m-1)", 0.0);
    Tally closure("gamma(L_mn) = gamma(0), phi(L_mn) = phi(0)", 1e-9);
    for (const ClosedCurveRecord& r : rows) {
        rotation.add(rotation_delta_theta(r.k_mn) - 2.0 * pi * r.m / r.n);
        bound.add(std::max(0.0, 4.0 * pi * r.n - r.willmore_W));
        upper.add(std::max(0.0, r.willmore_W - std::sqrt(2.0) * r.n * pi * pi));
        count.add(static_cast<double>(self_intersections(r.m, r.n).size()) - static_cast<double>(r.selfint_S));
        Elastica c = canonical_closed_curve(r.m, r.n, r.k_mn);
        CurveState a = c.at(0.0);
        CurveState b = c.at(r.length_L);
        closure.add(max_abs({hyperbolic_distance({a.gamma1, a.gamma2}, {b.gamma1, b.gamma2}),
                             std::abs(std::polar(1.0, a.phi) - std::polar(1.0, b.phi))}));
    }

    Tally brute("rotation-angle intersections vs. brute-force crossings (n <= 8)", 0.0);
    Tally winding("winding number = m for (2,3), (3,5), (4,7), (5,8)", 0.0);
    for (auto [m, n] : valid_mn_pairs(8)) {
        Elastica c = canonical_closed_curve(m, n);
        double L = closed_curve_record(m, n).length_L;
        brute.add(static_cast<double>(brute_force_self_intersections(c, L).size())
                  - static_cast<double>(self_intersections(m, n).size()));
    }
    for (auto [m, n] : std::vector<std::pair<int, int>>{{2, 3}, {3, 5}, {4, 7}, {5, 8}}) {
        winding.add(winding_number(m, n) - m);
    }

    Tally cutoff("root of C(k) near 0.6869145", 1e-4);
    cutoff.add(instability_cutoff() - 0.6869145);
    Tally unstable("(12,17) provably unstable with I < 0 (reported: I if nonnegative)", 0.0);
    InstabilityReport ir = instability_report(12, 17);
    unstable.add(ir.provably_unstable ? std::max(0.0, ir.I_value) : std::numeric_limits<double>::infinity());

    for (const Tally* t : {&rotation, &bound, &upper, &count, &closure, &brute, &winding, &cutoff, &unstable}) {
        report.checks.push_back(t->done());
    }
    report.seconds = seconds_since(start);
    return report;
}

SuiteReport verify_dirichlet(unsigned threads)
{
    auto start = Clock::now();
    SuiteReport report;
    report.suite = "dirichlet";

    Tally family("symmetry-breaking family residuals (2,3) s* = 0.2, (3,5) s* = -0.5", 1e-10);
    Tally nonsym("those family members classify nonsymmetric", 0.0);
    for (auto [m, n, s] : std::vector<std::tuple<int, int, double>>{{2, 3, 0.2}, {3, 5, -0.5}}) {
        DirichletSolution sol = symmetry_breaking_family(m, n, s, 1.0);
        family.add(max_abs({sol.residual_r1, sol.residual_r2}));
        nonsym.add(sol.symmetric ? 1.0 : 0.0);
    }
    Tally lattice("family member at s* = 0 classifies symmetric", 0.0);
    lattice.add(symmetry_breaking_family(2, 3, 0.0, 1.0).symmetric ? 0.0 : 1.0);

    Tally closed("closed data A = B = (0,1): every root has k = k_{m,n} (|dk|)", 1e-6);
    SolveConfig cfg;
    cfg.l_max = 8;
    cfg.grid = 16;
    cfg.threads = threads;
    DirichletResult res = solve_dirichlet(DirichletProblem{}, cfg);
    if (res.solutions.size() < 3) {
        closed.add(std::numeric_limits<double>::infinity());
    }
    for (const DirichletSolution& sol : res.solutions) {
        OrbitlikeParams p(sol.k, sol.s_star);
        double periods = std::round(sol.length_L / p.period());
        double turns = std::round(periods * p.delta_theta() / (2.0 * pi));
        double target = 2.0 * pi * turns / periods;
        if (!(periods >= 1.0) || !(target > pi && target < sqrt2 * pi)) {
            closed.add(std::numeric_limits<double>::infinity());
            continue;
        }
        closed.add(sol.k - solve_k_for_rotation(target));
    }

    for (const Tally* t : {&family, &nonsym, &lattice, &closed}) {
        report.checks.push_back(t->done());
    }
    report.seconds = seconds_since(start);
    return report;
}

std::vector<SuiteReport> run_verification(const std::string& suite, std::uint64_t seed, unsigned threads)
{
    const auto& names = verification_suite_names();
    std::vector<std::string> selected;
    if (suite == "all") {
        selected = names;
    } else if (std::find(names.begin(), names.end(), suite) != names.end()) {
        selected = {suite};
    } else {
        throw domain_error("unknown verification suite '" + suite + "'");
    }
    std::vector<SuiteReport> out;
    for (const std::string& name : selected) {
        if (name == "special-functions") {
            out.push_back(verify_special_functions(seed));
        } else if (name == "fundamental-system") {
            out.push_back(verify_fundamental_system(seed));
        } else if (name == "oracle") {
            out.push_back(verify_oracle(seed));
        } else if (name == "closed-curves") {
            out.push_back(verify_closed_curves(threads));
        } else {
            out.push_back(verify_dirichlet(threads));
        }
    }
    return out;
}

} // namespace hypela
