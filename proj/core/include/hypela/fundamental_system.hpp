#pragma once

#include "hypela/special_functions.hpp"

namespace hypela {

// Orbitlike family: kappa(s) = 2/sqrt(2-k^2) dn((s+s*)/sqrt(2-k^2), k), mu = 4(1-k^2)/(2-k^2)^2.
// Construction caches everything the Halphen-Hermite pair needs.
class OrbitlikeParams {
public:
    OrbitlikeParams(double k, double s_star);

    double k() const { return modulus_.k; }
    double s_star() const { return s_star_; }
    double mu() const { return mu_; }
    const EllipticModulus& modulus() const { return modulus_; }
    // sqrt(2-k^2): scale between s and the elliptic argument.
    double scale() const { return scale_; }
    // Half period of kappa: sqrt(2-k^2) K(k).
    double half_period() const { return scale_ * modulus_.quarter_period_K; }
    double period() const { return 2.0 * half_period(); }
    double delta_theta() const { return delta_theta_; }
    double alpha() const { return alpha_; }
    complex zeta_at_alpha() const { return zeta_alpha_; }
    double normalization() const { return norm_; }

private:
    EllipticModulus modulus_;
    double s_star_;
    double mu_;
    double scale_;
    double delta_theta_;
    double alpha_;
    complex zeta_alpha_;
    double norm_;
};

// Wavelike family: kappa(s) = 2k/sqrt(2k^2-1) cn((s+s*)/sqrt(2k^2-1), k) with 1/sqrt2 < k < 1.
class WavelikeParams {
public:
    WavelikeParams(double k, double s_star);

    double k() const { return modulus_.k; }
    double s_star() const { return s_star_; }
    double mu() const { return mu_; }
    const EllipticModulus& modulus() const { return modulus_; }
    double scale() const { return scale_; }
    double half_period() const { return scale_ * modulus_.quarter_period_K; }
    double period() const { return 4.0 * half_period(); }
    double alpha_k() const { return alpha_; }
    double zeta_at_alpha() const { return zeta_alpha_; }
    double normalization() const { return norm_; }

private:
    EllipticModulus modulus_;
    double s_star_;
    double mu_;
    double scale_;
    double alpha_;
    double zeta_alpha_;
    double norm_;
};

struct FrameValues {
    double W1 = 0.0;
    double W2 = 0.0;
    double W1p = 0.0;
    double W2p = 0.0;
    double kappa = 0.0;
    double kappap = 0.0;
    double theta = 0.0;
    // Wavelike only: kappa * W, finite everywhere.
    double Wh1 = 0.0;
    double Wh2 = 0.0;
    double Wh1p = 0.0;
    double Wh2p = 0.0;
    // Wavelike only: |cn| < 1e-12 at the reduced argument, W fields are NaN.
    bool curvature_zero = false;
};

struct LamePair {
    double w1;
    double w2;
    double w1p;
    double w2p;
};

double rotation_delta_theta(double k);

// Solves Delta theta_k = target by bisection (Delta theta is strictly decreasing).
double solve_k_for_rotation(double target);

// Normalized pair solving w'' + 2 dn^2 w = 0 with w1 odd, w2 even, w2(0) = k', w1'(0) = -sqrt(2-k^2).
LamePair halphen_hermite_orbitlike(double z, const OrbitlikeParams& params);
LamePair halphen_hermite_orbitlike(double z, double k);

// The smooth pair w^_1, w^_2 of the wavelike family (w_j = w^_j / cn).
LamePair halphen_hermite_wavelike(double u, const WavelikeParams& params);

FrameValues frame_orbitlike(double s, const OrbitlikeParams& params);
FrameValues frame_wavelike(double s, const WavelikeParams& params);

} // namespace hypela
