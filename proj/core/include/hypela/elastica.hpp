#pragma once

#include "hypela/fundamental_system.hpp"

#include <variant>
#include <vector>

namespace hypela {

enum class CoefficientKind { orbitlike, wavelike_a3_nonzero, wavelike_a3_zero };

// The six constants of the explicit formulas. Orbitlike:
//   gamma1 = (b.W + b3)/(a.W + a3), gamma2 = 1/(kappa (a.W + a3)).
// Wavelike (in W^ = kappa W):
//   gamma1 = (b.W^ + b3 kappa)/(a.W^ + a3 kappa), gamma2 = 1/(a.W^ + a3 kappa).
struct CurveCoefficients {
    double a1 = 0.0;
    double a2 = 0.0;
    double a3 = 0.0;
    double b1 = 0.0;
    double b2 = 0.0;
    double b3 = 0.0;
    CoefficientKind kind = CoefficientKind::orbitlike;
};

struct CurveState {
    double gamma1 = 0.0;
    double gamma2 = 1.0;
    double phi = 0.0;
    double kappa = 0.0;
    double kappap = 0.0;
};

struct HyperbolicPoint {
    double x1 = 0.0;
    double x2 = 1.0;
};

struct Curvature {
    double kappa;
    double kappap;
};

// Throws domain_error unless the constraints of the coefficient kind hold to tol (relative).
void validate_coefficients(const CurveCoefficients& c, double mu, double tol = 1e-12);

// a = a3 (cos angle, sin angle), b from the constraint.
CurveCoefficients make_orbitlike_coefficients(double a3, double angle, double b3, double mu);
// a2 = sqrt(a1^2 + a3^2), b from the constraint.
CurveCoefficients make_wavelike_coefficients(double a1, double a3, double b3, double mu);
// a3 = 0: a2 = |a1|, b1 = sign(a1) b2, b3 = sign(a1)/sqrt|mu|.
CurveCoefficients make_wavelike_coefficients_a3_zero(double a1, double b2, double mu);

Curvature curvature(double s, const OrbitlikeParams& params);
Curvature curvature(double s, const WavelikeParams& params);

CurveState evaluate_orbitlike(double s, const OrbitlikeParams& params, const CurveCoefficients& c);
CurveState evaluate_wavelike(double s, const WavelikeParams& params, const CurveCoefficients& c);

// Coefficients of the elastica through `initial` at parameter s0.
CurveCoefficients fit_coefficients(const OrbitlikeParams& params, const CurveState& initial, double s0 = 0.0);
CurveCoefficients fit_coefficients(const WavelikeParams& params, const CurveState& initial, double s0 = 0.0);

enum class SpecialCurve { circular, geodesic_vertical, geodesic_halfcircle, catenoid };
CurveState evaluate_special(SpecialCurve kind, double s);

enum class Family { orbitlike, wavelike };

// A concrete elastica: family parameters plus coefficients.
class Elastica {
public:
    static Elastica orbitlike(const OrbitlikeParams& params, const CurveCoefficients& coeffs);
    static Elastica wavelike(const WavelikeParams& params, const CurveCoefficients& coeffs);
    // Elastica through the given state at s = 0.
    static Elastica orbitlike_through(const OrbitlikeParams& params, const CurveState& initial);
    static Elastica wavelike_through(const WavelikeParams& params, const CurveState& initial);

    Family family() const;
    double k() const;
    double s_star() const;
    double mu() const;
    const CurveCoefficients& coefficients() const { return coeffs_; }
    const OrbitlikeParams& orbit() const;
    const WavelikeParams& wave() const;

    CurveState at(double s) const;
    FrameValues frame(double s) const;
    Curvature curvature_at(double s) const;
    // Period of kappa.
    double period() const;

private:
    Elastica(std::variant<OrbitlikeParams, WavelikeParams> params, const CurveCoefficients& coeffs);

    std::variant<OrbitlikeParams, WavelikeParams> params_;
    CurveCoefficients coeffs_;
};

// Shifts phi by multiples of 2 pi so consecutive states differ by less than pi.
void unwrap_phi(std::vector<CurveState>& states);
// States at the given parameters (in order) with continuous phi.
std::vector<CurveState> sample_curve(const Elastica& curve, const std::vector<double>& s_values);

double hyperbolic_distance(const HyperbolicPoint& p, const HyperbolicPoint& q);

// Z(s;P) = ((g1-P1)^2 + (g2-P2)^2) / (2 P2 g2) and its derivative along the curve.
double distance_Z(const CurveState& state, const HyperbolicPoint& P);
double distance_Z(double s, const HyperbolicPoint& P, const Elastica& curve);
double distance_Z_prime(const CurveState& state, const HyperbolicPoint& P);
// Complex probes P2 in C (used for the wavelike points (b3/a3, +-i/(sqrt|mu| a3))).
complex distance_Z(const CurveState& state, complex P1, complex P2);

// The constant C of the Z-ODE kappa Z'' - 2 kappa' Z' + kappa (Z+1) = 2 mu C.
double z_ode_constant(const CurveState& state, const HyperbolicPoint& P, double mu);

struct ZExpansion {
    double A;
    double B;
    double C;
};

// Z(s;P) = -1 + kappa (A W1 + B W2 + C) (equivalently -1 + A W^1 + B W^2 + C kappa).
// Throws domain_error for a wavelike s0 at a zero of kappa.
ZExpansion z_expansion_coefficients(const Elastica& curve, const HyperbolicPoint& P, double s0);

enum class EnclosureKind { annulus, halfcircle_annulus, cone };

// gamma lies in closure(B_R1(Q1)) minus B_R2(Q2), or in the cone |x - apex|/y <= slope.
struct Enclosure {
    EnclosureKind kind;
    HyperbolicPoint Q1;
    HyperbolicPoint Q2;
    double R1 = 0.0;
    double R2 = 0.0;
    double apex_x = 0.0;
    double slope = 0.0;

    // Signed violation: <= 0 inside.
    double violation(const HyperbolicPoint& p) const;
    bool contains(const HyperbolicPoint& p, double slack = 1e-9) const { return violation(p) <= slack; }
};

Enclosure enclosure(const Elastica& curve);

enum class MobiusKind { translate, dilate, rotate, reflect_h, invert };

struct MobiusMap {
    MobiusKind kind;
    double param = 0.0; // shift a, factor b > 0, or rotation angle theta
};

HyperbolicPoint mobius_apply(const MobiusMap& map, const HyperbolicPoint& p);
CurveState mobius_apply(const MobiusMap& map, const CurveState& state);

} // namespace hypela
