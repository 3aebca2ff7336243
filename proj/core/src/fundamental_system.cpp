#include "hypela/fundamental_system.hpp"

#include "hypela/errors.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace hypela {

namespace {

constexpr double pi = std::numbers::pi;

// (w1 + i w2) and its derivative from H(z - i alpha)/Theta(z) e^{z zeta(i alpha)},
// for z already reduced to [-K, K).
struct ComplexPair {
    complex w;
    complex wp;
};

ComplexPair orbit_raw(double z, const EllipticModulus& m, double alpha, complex zeta)
{
    ThetaValue h = theta_H(complex(z, -alpha), m);
    ThetaValue t = theta_Theta(complex(z, 0.0), m);
    complex ex = std::exp(z * zeta);
    complex ratio = h.value / t.value;
    complex w = ratio * ex;
    complex wp = (h.derivative / t.value - h.value * t.derivative / (t.value * t.value)) * ex
        + zeta * w;
    return {w, wp};
}

struct RealPair {
    double w;
    double wp;
};

RealPair wave_raw(double u, const EllipticModulus& m, double alpha, double zeta, double sign)
{
    ThetaValue h = theta_Theta1(complex(u + sign * alpha, 0.0), m);
    ThetaValue t = theta_Theta(complex(u, 0.0), m);
    double ex = std::exp(-sign * u * zeta);
    double hv = h.value.real();
    double tv = t.value.real();
    double w = hv / tv * ex;
    double wp = (h.derivative.real() / tv - hv * t.derivative.real() / (tv * tv)) * ex
        - sign * zeta * w;
    return {w, wp};
}

} // namespace

OrbitlikeParams::OrbitlikeParams(double k, double s_star)
    : modulus_(k)
    , s_star_(s_star)
{
    if (!std::isfinite(s_star)) {
        throw domain_error("OrbitlikeParams: s* must be finite");
    }
    double k2 = k * k;
    mu_ = 4.0 * (1.0 - k2) / ((2.0 - k2) * (2.0 - k2));
    scale_ = std::sqrt(2.0 - k2);
    delta_theta_ = rotation_delta_theta(k);
    // alpha = F(k', k') with 1 - k'^2 = k^2 supplied exactly.
    double kp = modulus_.k_prime;
    alpha_ = incomplete_F_c(kp, k2, kp);
    zeta_alpha_ = jacobi_zeta(complex(0.0, alpha_), modulus_);
    ComplexPair at_zero = orbit_raw(0.0, modulus_, alpha_, zeta_alpha_);
    norm_ = kp / at_zero.w.imag();
}

WavelikeParams::WavelikeParams(double k, double s_star)
    : modulus_(k)
    , s_star_(s_star)
{
    if (!(k > std::numbers::sqrt2 / 2.0 && k < 1.0)) {
        throw domain_error("WavelikeParams: k must lie in (1/sqrt2, 1)");
    }
    if (!std::isfinite(s_star)) {
        throw domain_error("WavelikeParams: s* must be finite");
    }
    double k2 = k * k;
    double q = 2.0 * k2 - 1.0;
    mu_ = -4.0 * k2 * (1.0 - k2) / (q * q);
    scale_ = std::sqrt(q);
    double kp = modulus_.k_prime;
    // alpha = F(k'/k, k); 1 - (k'/k)^2 = (2k^2 - 1)/k^2.
    alpha_ = incomplete_F_c(kp / k, q / k2, k);
    zeta_alpha_ = jacobi_zeta(complex(alpha_, 0.0), modulus_).real();
    RealPair plus = wave_raw(0.0, modulus_, alpha_, zeta_alpha_, 1.0);
    RealPair minus = wave_raw(0.0, modulus_, alpha_, zeta_alpha_, -1.0);
    norm_ = k / (plus.w + minus.w);
}

double rotation_delta_theta(double k)
{
    if (!(k > 0.0 && k < 1.0)) {
        throw domain_error("rotation_delta_theta: k must lie in (0,1)");
    }
    double kp = std::sqrt((1.0 - k) * (1.0 + k));
    double lambda = heuman_lambda0_c(kp, k * k, k);
    double K = complete_K_from_complement(kp);
    return pi - pi * lambda + 2.0 * kp * std::sqrt(2.0 - k * k) * K;
}

double solve_k_for_rotation(double target)
{
    if (!(target > pi && target < std::numbers::sqrt2 * pi)) {
        throw domain_error("solve_k_for_rotation: target must lie in (pi, sqrt2 pi)");
    }
    double lo = 0.0;
    double hi = 1.0;
    // Delta theta decreases; keep f(lo) > 0 > f(hi) with f = Delta theta - target.
    for (int i = 0; i < 200; ++i) {
        double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) {
            break;
        }
        double f = rotation_delta_theta(mid) - target;
        if (f > 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    double k = 0.5 * (lo + hi);
    if (std::abs(rotation_delta_theta(k) - target) > 1e-12) {
        // Fall back to the endpoint closer in value; bisection to full precision already ran.
        double flo = std::abs(rotation_delta_theta(lo) - target);
        double fhi = std::abs(rotation_delta_theta(hi) - target);
        k = flo < fhi ? lo : hi;
        if (std::min(flo, fhi) > 1e-12) {
            throw numeric_failure("solve_k_for_rotation: no convergence");
        }
    }
    return k;
}

LamePair halphen_hermite_orbitlike(double z, const OrbitlikeParams& params)
{
    const EllipticModulus& m = params.modulus();
    double K = m.quarter_period_K;
    double shift = std::floor((z + K) / (2.0 * K));
    double z0 = z - 2.0 * K * shift;
    ComplexPair raw = orbit_raw(z0, m, params.alpha(), params.zeta_at_alpha());
    // One step of 2K multiplies by -e^{2K zeta(i alpha)} = e^{i Delta theta}.
    double step_phase = pi + 2.0 * K * params.zeta_at_alpha().imag();
    complex rot = std::polar(params.normalization(), shift * step_phase);
    complex w = rot * raw.w;
    complex wp = rot * raw.wp;
    return {w.real(), w.imag(), wp.real(), wp.imag()};
}

LamePair halphen_hermite_orbitlike(double z, double k)
{
    return halphen_hermite_orbitlike(z, OrbitlikeParams(k, 0.0));
}

LamePair halphen_hermite_wavelike(double u, const WavelikeParams& params)
{
    const EllipticModulus& m = params.modulus();
    double K = m.quarter_period_K;
    double shift = std::floor((u + K) / (2.0 * K));
    double u0 = u - 2.0 * K * shift;
    double zeta = params.zeta_at_alpha();
    RealPair plus = wave_raw(u0, m, params.alpha_k(), zeta, 1.0);
    RealPair minus = wave_raw(u0, m, params.alpha_k(), zeta, -1.0);
    // Theta, Theta1 are 2K periodic, so w+- pick up e^{-+2K zeta} per step.
    double grow = std::exp(-2.0 * K * zeta * shift);
    double shrink = std::exp(2.0 * K * zeta * shift);
    double c = params.normalization();
    double p = plus.w * grow;
    double pp = plus.wp * grow;
    double n = minus.w * shrink;
    double np = minus.wp * shrink;
    return {c * (p - n), c * (p + n), c * (pp - np), c * (pp + np)};
}

FrameValues frame_orbitlike(double s, const OrbitlikeParams& params)
{
    double k = params.k();
    double r = params.scale();
    double K = params.modulus().quarter_period_K;
    double u = (s + params.s_star()) / r;
    JacobiTriple j = jacobi_sn_cn_dn(u, k);
    LamePair w = halphen_hermite_orbitlike(u - K, params);

    FrameValues f;
    f.kappa = 2.0 / r * j.dn;
    f.kappap = -2.0 / (r * r) * k * k * j.sn * j.cn;
    f.W1 = w.w1 / r;
    f.W2 = w.w2 / r;
    f.W1p = w.w1p / (r * r);
    f.W2p = w.w2p / (r * r);

    // Principal angle of W2 - i W1, moved onto the branch fixed by the anchors
    // theta(-s* + l h) = (l-1) Delta theta / 2.
    double h = params.half_period();
    double l = std::round((s + params.s_star()) / h);
    double anchor = 0.5 * (l - 1.0) * params.delta_theta();
    double principal = std::atan2(-f.W1, f.W2);
    f.theta = principal + 2.0 * pi * std::round((anchor - principal) / (2.0 * pi));
    return f;
}

FrameValues frame_wavelike(double s, const WavelikeParams& params)
{
    double k = params.k();
    double r = params.scale();
    double r2 = r * r;
    double u = (s + params.s_star()) / r;
    JacobiTriple j = jacobi_sn_cn_dn(u, k);
    LamePair w = halphen_hermite_wavelike(u, params);

    FrameValues f;
    f.kappa = 2.0 * k / r * j.cn;
    f.kappap = -2.0 * k / r2 * j.sn * j.dn;
    double c = 2.0 * k / r2;
    f.Wh1 = c * w.w1;
    f.Wh2 = c * w.w2;
    f.Wh1p = c * w.w1p / r;
    f.Wh2p = c * w.w2p / r;
    f.theta = std::asinh(-f.Wh1 / std::sqrt(f.kappa * f.kappa - params.mu()));
    if (std::abs(j.cn) < 1e-12) {
        f.curvature_zero = true;
        double nan = std::numeric_limits<double>::quiet_NaN();
        f.W1 = f.W2 = f.W1p = f.W2p = nan;
    } else {
        f.W1 = f.Wh1 / f.kappa;
        f.W2 = f.Wh2 / f.kappa;
        double k2 = f.kappa * f.kappa;
        f.W1p = (f.Wh1p * f.kappa - f.Wh1 * f.kappap) / k2;
        f.W2p = (f.Wh2p * f.kappa - f.Wh2 * f.kappap) / k2;
    }
    return f;
}

} // namespace hypela
