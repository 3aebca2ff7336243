#pragma once

#include "hypela/elastica.hpp"

#include <functional>
#include <vector>

namespace hypela {

struct IntegrationConfig {
    double rel_tol = 1e-11;
    double abs_tol = 1e-12;
    // 0 means no cap on the step size.
    double max_step = 0.0;
};

struct PathSample {
    double s;
    CurveState state;
};

struct CurvatureSample {
    double s;
    double kappa;
    double kappap;
};

// Uniform grid of `count` points on [0, s_end] (count >= 2), or {0} for count == 1.
std::vector<double> uniform_grid(double s_end, int count);

// Frame ODE g1' = g2 cos(phi), g2' = g2 sin(phi), phi' = kappa - cos(phi) with prescribed kappa.
// Values at `times` come from the dense-output interpolant (times ascending from 0 or
// descending from 0).
std::vector<PathSample> integrate_frame(const std::function<double(double)>& kappa_fn, const CurveState& initial,
                                        const std::vector<double>& times, const IntegrationConfig& config = {});

// Frame ODE coupled with -kappa'' + kappa = kappa^3/2; kappa, kappa' are taken from `initial`.
// Independent of every closed-form evaluator.
std::vector<PathSample> integrate_elastica(const CurveState& initial, const std::vector<double>& times,
                                           const IntegrationConfig& config = {});

std::vector<CurvatureSample> integrate_curvature(double kappa0, double kappap0, const std::vector<double>& times,
                                                 const IntegrationConfig& config = {});

// w'' + 2 dn^2(z,k) w = 0 integrated together with Jacobi's first-order system for sn, cn, dn.
struct LameSample {
    double z;
    double w;
    double wp;
};
std::vector<LameSample> integrate_lame(double k, double w0, double wp0, const std::vector<double>& times,
                                       const IntegrationConfig& config = {});

// Jacobi functions by integrating sn' = cn dn, cn' = -sn dn, dn' = -k^2 sn cn from (0,1,1).
JacobiTriple jacobi_by_integration(double u, double k, const IntegrationConfig& config = {});

// Defining integrals by adaptive Gauss-Kronrod quadrature in the amplitude variable.
double quadrature_F(double l, double k);
double quadrature_E(double l, double k);

// max over samples of |kappa Z'' - 2 kappa' Z' + kappa (Z+1) - 2 mu C| along the integrated curve;
// Z', Z'' from the frame ODE right-hand side at each integrated state.
struct ZOdeCheck {
    double max_residual;
    double max_z_prime_mismatch; // closed formula for Z' vs. centered differences of integrated Z
};
ZOdeCheck check_Z_ode(const Elastica& curve, const HyperbolicPoint& P, double s_end, int samples = 200,
                      const IntegrationConfig& config = {});

// (pi/2) int_0^L kappa^2 ds by adaptive quadrature.
double willmore_energy_numeric(const std::function<double(double)>& kappa_fn, double L);
double willmore_energy_numeric(const Elastica& curve, double L);

} // namespace hypela
