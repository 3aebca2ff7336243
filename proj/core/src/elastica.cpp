#include "hypela/elastica.hpp"

#include "hypela/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace hypela {

namespace {

constexpr double sqrt2 = std::numbers::sqrt2;

bool close_rel(double x, double y, double tol)
{
    return std::abs(x - y) <= tol * std::max({1.0, std::abs(x), std::abs(y)});
}

// Angle from the identities
//   a3 g1 = b3 + (k^2 sin + 2k' cos)/(2mu),  a3 g2 = k/mu + (2k' sin - k^2 cos)/(2mu),
// inverted with M^2 = 4(k^2 - mu) I.
double angle_from_position(double g1, double g2, double kappa, double kappap, const CurveCoefficients& c,
                           double mu)
{
    double x = c.a3 * g1 - c.b3;
    double y = c.a3 * g2 - kappa / mu;
    double k2 = kappa * kappa;
    double f = mu / (2.0 * (k2 - mu));
    double sin_phi = f * (k2 * x + 2.0 * kappap * y);
    double cos_phi = f * (2.0 * kappap * x - k2 * y);
    return std::atan2(sin_phi, cos_phi);
}

// a3 and b3 from a state (both families share these identities).
void fit_a3_b3(const CurveState& st, double kappa, double kappap, double mu, double& a3, double& b3)
{
    double sp = std::sin(st.phi);
    double cp = std::cos(st.phi);
    double k2 = kappa * kappa;
    a3 = (2.0 * kappa + 2.0 * kappap * sp - k2 * cp) / (2.0 * mu * st.gamma2);
    b3 = a3 * st.gamma1 - (k2 * sp + 2.0 * kappap * cp) / (2.0 * mu);
}

} // namespace

void validate_coefficients(const CurveCoefficients& c, double mu, double tol)
{
    auto fail = [](const char* what) { throw domain_error(std::string("coefficient constraint violated: ") + what); };
    for (double v : {c.a1, c.a2, c.a3, c.b1, c.b2, c.b3}) {
        if (!std::isfinite(v)) {
            fail("non-finite coefficient");
        }
    }
    switch (c.kind) {
    case CoefficientKind::orbitlike: {
        if (!(mu > 0.0)) {
            fail("orbitlike coefficients need mu > 0");
        }
        if (!(c.a3 > 0.0)) {
            fail("a3 > 0");
        }
        if (!close_rel(c.a3, std::hypot(c.a1, c.a2), tol)) {
            fail("a3 = |(a1,a2)|");
        }
        double r = 1.0 / (std::sqrt(mu) * c.a3);
        if (!close_rel(c.b1, c.b3 / c.a3 * c.a1 - r * c.a2, tol)
            || !close_rel(c.b2, c.b3 / c.a3 * c.a2 + r * c.a1, tol)) {
            fail("(b1,b2) = (b3/a3) a + (1/(sqrt(mu) a3)) (-a2,a1)");
        }
        break;
    }
    case CoefficientKind::wavelike_a3_nonzero: {
        if (!(mu < 0.0)) {
            fail("wavelike coefficients need mu < 0");
        }
        if (c.a3 == 0.0) {
            fail("a3 != 0");
        }
        if (!close_rel(c.a2, std::hypot(c.a1, c.a3), tol)) {
            fail("a2 = sqrt(a1^2 + a3^2)");
        }
        double r = 1.0 / (std::sqrt(-mu) * c.a3);
        if (!close_rel(c.b1, c.b3 / c.a3 * c.a1 - r * c.a2, tol)
            || !close_rel(c.b2, c.b3 / c.a3 * c.a2 - r * c.a1, tol)) {
            fail("(b1,b2) = (b3/a3) a - (1/(sqrt|mu| a3)) (a2,a1)");
        }
        break;
    }
    case CoefficientKind::wavelike_a3_zero: {
        if (!(mu < 0.0)) {
            fail("wavelike coefficients need mu < 0");
        }
        if (c.a3 != 0.0 || c.a1 == 0.0) {
            fail("a3 = 0 and a1 != 0");
        }
        double sg = c.a1 > 0.0 ? 1.0 : -1.0;
        if (!close_rel(c.a2, std::abs(c.a1), tol) || !close_rel(c.b1, sg * c.b2, tol)) {
            fail("a2 = |a1| and b1 = sign(a1) b2");
        }
        if (!close_rel(c.b3, sg / std::sqrt(-mu), tol)) {
            fail("b3 = sign(a1)/sqrt|mu|");
        }
        break;
    }
    }
}

CurveCoefficients make_orbitlike_coefficients(double a3, double angle, double b3, double mu)
{
    if (!(a3 > 0.0) || !(mu > 0.0)) {
        throw domain_error("make_orbitlike_coefficients: need a3 > 0 and mu > 0");
    }
    CurveCoefficients c;
    c.kind = CoefficientKind::orbitlike;
    c.a1 = a3 * std::cos(angle);
    c.a2 = a3 * std::sin(angle);
    c.a3 = a3;
    c.b3 = b3;
    double r = 1.0 / (std::sqrt(mu) * a3);
    c.b1 = b3 / a3 * c.a1 - r * c.a2;
    c.b2 = b3 / a3 * c.a2 + r * c.a1;
    return c;
}

CurveCoefficients make_wavelike_coefficients(double a1, double a3, double b3, double mu)
{
    if (a3 == 0.0 || !(mu < 0.0)) {
        throw domain_error("make_wavelike_coefficients: need a3 != 0 and mu < 0");
    }
    CurveCoefficients c;
    c.kind = CoefficientKind::wavelike_a3_nonzero;
    c.a1 = a1;
    c.a2 = std::hypot(a1, a3);
    c.a3 = a3;
    c.b3 = b3;
    double r = 1.0 / (std::sqrt(-mu) * a3);
    c.b1 = b3 / a3 * c.a1 - r * c.a2;
    c.b2 = b3 / a3 * c.a2 - r * c.a1;
    return c;
}

CurveCoefficients make_wavelike_coefficients_a3_zero(double a1, double b2, double mu)
{
    if (a1 == 0.0 || !(mu < 0.0)) {
        throw domain_error("make_wavelike_coefficients_a3_zero: need a1 != 0 and mu < 0");
    }
    double sg = a1 > 0.0 ? 1.0 : -1.0;
    CurveCoefficients c;
    c.kind = CoefficientKind::wavelike_a3_zero;
    c.a1 = a1;
    c.a2 = std::abs(a1);
    c.a3 = 0.0;
    c.b1 = sg * b2;
    c.b2 = b2;
    c.b3 = sg / std::sqrt(-mu);
    return c;
}

Curvature curvature(double s, const OrbitlikeParams& params)
{
    double r = params.scale();
    double k = params.k();
    JacobiTriple j = jacobi_sn_cn_dn((s + params.s_star()) / r, k);
    return {2.0 / r * j.dn, -2.0 / (r * r) * k * k * j.sn * j.cn};
}

Curvature curvature(double s, const WavelikeParams& params)
{
    double r = params.scale();
    double k = params.k();
    JacobiTriple j = jacobi_sn_cn_dn((s + params.s_star()) / r, k);
    return {2.0 * k / r * j.cn, -2.0 * k / (r * r) * j.sn * j.dn};
}

namespace {

CurveState orbit_state(const FrameValues& f, const CurveCoefficients& c, double mu)
{
    double den = c.a1 * f.W1 + c.a2 * f.W2 + c.a3;
    CurveState st;
    st.gamma1 = (c.b1 * f.W1 + c.b2 * f.W2 + c.b3) / den;
    st.gamma2 = 1.0 / (f.kappa * den);
    st.kappa = f.kappa;
    st.kappap = f.kappap;
    st.phi = angle_from_position(st.gamma1, st.gamma2, f.kappa, f.kappap, c, mu);
    return st;
}

CurveState wave_state(const FrameValues& f, const CurveCoefficients& c, double mu)
{
    double den = c.a1 * f.Wh1 + c.a2 * f.Wh2 + c.a3 * f.kappa;
    CurveState st;
    st.gamma1 = (c.b1 * f.Wh1 + c.b2 * f.Wh2 + c.b3 * f.kappa) / den;
    st.gamma2 = 1.0 / den;
    st.kappa = f.kappa;
    st.kappap = f.kappap;
    st.phi = angle_from_position(st.gamma1, st.gamma2, f.kappa, f.kappap, c, mu);
    return st;
}

} // namespace

CurveState evaluate_orbitlike(double s, const OrbitlikeParams& params, const CurveCoefficients& c)
{
    if (c.kind != CoefficientKind::orbitlike) {
        throw domain_error("evaluate_orbitlike: wavelike coefficients given");
    }
    validate_coefficients(c, params.mu(), 1e-9);
    return orbit_state(frame_orbitlike(s, params), c, params.mu());
}

CurveState evaluate_wavelike(double s, const WavelikeParams& params, const CurveCoefficients& c)
{
    if (c.kind == CoefficientKind::orbitlike) {
        throw domain_error("evaluate_wavelike: orbitlike coefficients given");
    }
    validate_coefficients(c, params.mu(), 1e-9);
    return wave_state(frame_wavelike(s, params), c, params.mu());
}

CurveCoefficients fit_coefficients(const OrbitlikeParams& params, const CurveState& initial, double s0)
{
    if (!(initial.gamma2 > 0.0)) {
        throw domain_error("fit_coefficients: initial point must lie in the upper half-plane");
    }
    double mu = params.mu();
    FrameValues f = frame_orbitlike(s0, params);
    CurveCoefficients c;
    c.kind = CoefficientKind::orbitlike;
    fit_a3_b3(initial, f.kappa, f.kappap, mu, c.a3, c.b3);
    // a.W = 1/(kappa g2) - a3 and a1 W2 - a2 W1 = sqrt(mu)(a3 g1 - b3)/(kappa g2).
    double r1 = 1.0 / (f.kappa * initial.gamma2) - c.a3;
    double r2 = std::sqrt(mu) * (c.a3 * initial.gamma1 - c.b3) / (f.kappa * initial.gamma2);
    double det = -(f.W1 * f.W1 + f.W2 * f.W2);
    c.a1 = (-f.W1 * r1 - f.W2 * r2) / det;
    c.a2 = (f.W1 * r2 - f.W2 * r1) / det;
    double r = 1.0 / (std::sqrt(mu) * c.a3);
    c.b1 = c.b3 / c.a3 * c.a1 - r * c.a2;
    c.b2 = c.b3 / c.a3 * c.a2 + r * c.a1;
    return c;
}

CurveCoefficients fit_coefficients(const WavelikeParams& params, const CurveState& initial, double s0)
{
    if (!(initial.gamma2 > 0.0)) {
        throw domain_error("fit_coefficients: initial point must lie in the upper half-plane");
    }
    double mu = params.mu();
    double smu = std::sqrt(-mu);
    FrameValues f = frame_wavelike(s0, params);
    double a3 = 0.0;
    double b3 = 0.0;
    fit_a3_b3(initial, f.kappa, f.kappap, mu, a3, b3);
    // a.W^ = 1/g2 - a3 kappa and a1 W^2 + a2 W^1 = sqrt|mu| (b3 - a3 g1)/g2;
    // the determinant W^1^2 - W^2^2 = -(kappa^2 - mu) never vanishes.
    double r1 = 1.0 / initial.gamma2 - a3 * f.kappa;
    double r2 = smu * (b3 - a3 * initial.gamma1) / initial.gamma2;
    double det = f.Wh1 * f.Wh1 - f.Wh2 * f.Wh2;
    double a1 = (f.Wh1 * r1 - f.Wh2 * r2) / det;
    double a2 = (f.Wh1 * r2 - f.Wh2 * r1) / det;
    if (std::abs(a3) <= 1e-12 * std::max(1.0, std::abs(a1))) {
        double sg = a1 > 0.0 ? 1.0 : -1.0;
        CurveCoefficients c = make_wavelike_coefficients_a3_zero(a1, 0.0, mu);
        c.b2 = std::abs(a1) * (initial.gamma1 - c.b3 * f.kappa * initial.gamma2);
        c.b1 = sg * c.b2;
        return c;
    }
    CurveCoefficients c;
    c.kind = CoefficientKind::wavelike_a3_nonzero;
    c.a1 = a1;
    c.a2 = a2;
    c.a3 = a3;
    c.b3 = b3;
    double r = 1.0 / (smu * a3);
    c.b1 = b3 / a3 * a1 - r * a2;
    c.b2 = b3 / a3 * a2 - r * a1;
    return c;
}

CurveState evaluate_special(SpecialCurve kind, double s)
{
    CurveState st;
    switch (kind) {
    case SpecialCurve::circular: {
        double den = sqrt2 + std::cos(s);
        st.gamma1 = (1.0 + sqrt2) * std::sin(s) / den;
        st.gamma2 = (1.0 + sqrt2) / den;
        st.phi = std::atan2(std::sin(s) / den, (1.0 + sqrt2 * std::cos(s)) / den);
        st.kappa = sqrt2;
        st.kappap = 0.0;
        break;
    }
    case SpecialCurve::geodesic_vertical:
        st.gamma1 = 0.0;
        st.gamma2 = std::exp(s);
        st.phi = std::numbers::pi / 2.0;
        st.kappa = 0.0;
        st.kappap = 0.0;
        break;
    case SpecialCurve::geodesic_halfcircle:
        st.gamma1 = std::tanh(s);
        st.gamma2 = 1.0 / std::cosh(s);
        st.phi = std::atan2(-std::tanh(s), 1.0 / std::cosh(s));
        st.kappa = 0.0;
        st.kappap = 0.0;
        break;
    case SpecialCurve::catenoid: {
        double sech = 1.0 / std::cosh(s);
        st.gamma1 = s;
        st.gamma2 = std::cosh(s);
        st.phi = std::atan2(std::tanh(s), sech);
        st.kappa = 2.0 * sech;
        st.kappap = -2.0 * sech * std::tanh(s);
        break;
    }
    }
    return st;
}

Elastica::Elastica(std::variant<OrbitlikeParams, WavelikeParams> params, const CurveCoefficients& coeffs)
    : params_(std::move(params))
    , coeffs_(coeffs)
{
}

Elastica Elastica::orbitlike(const OrbitlikeParams& params, const CurveCoefficients& coeffs)
{
    if (coeffs.kind != CoefficientKind::orbitlike) {
        throw domain_error("Elastica::orbitlike: wavelike coefficients given");
    }
    validate_coefficients(coeffs, params.mu(), 1e-9);
    return Elastica(params, coeffs);
}

Elastica Elastica::wavelike(const WavelikeParams& params, const CurveCoefficients& coeffs)
{
    if (coeffs.kind == CoefficientKind::orbitlike) {
        throw domain_error("Elastica::wavelike: orbitlike coefficients given");
    }
    validate_coefficients(coeffs, params.mu(), 1e-9);
    return Elastica(params, coeffs);
}

Elastica Elastica::orbitlike_through(const OrbitlikeParams& params, const CurveState& initial)
{
    return Elastica(params, fit_coefficients(params, initial, 0.0));
}

Elastica Elastica::wavelike_through(const WavelikeParams& params, const CurveState& initial)
{
    return Elastica(params, fit_coefficients(params, initial, 0.0));
}

Family Elastica::family() const
{
    return std::holds_alternative<OrbitlikeParams>(params_) ? Family::orbitlike : Family::wavelike;
}

double Elastica::k() const
{
    return std::visit([](const auto& p) { return p.k(); }, params_);
}

double Elastica::s_star() const
{
    return std::visit([](const auto& p) { return p.s_star(); }, params_);
}

double Elastica::mu() const
{
    return std::visit([](const auto& p) { return p.mu(); }, params_);
}

double Elastica::period() const
{
    return std::visit([](const auto& p) { return p.period(); }, params_);
}

const OrbitlikeParams& Elastica::orbit() const
{
    if (const auto* p = std::get_if<OrbitlikeParams>(&params_)) {
        return *p;
    }
    throw domain_error("Elastica: not orbitlike");
}

const WavelikeParams& Elastica::wave() const
{
    if (const auto* p = std::get_if<WavelikeParams>(&params_)) {
        return *p;
    }
    throw domain_error("Elastica: not wavelike");
}

FrameValues Elastica::frame(double s) const
{
    if (const auto* p = std::get_if<OrbitlikeParams>(&params_)) {
        return frame_orbitlike(s, *p);
    }
    return frame_wavelike(s, std::get<WavelikeParams>(params_));
}

CurveState Elastica::at(double s) const
{
    if (const auto* p = std::get_if<OrbitlikeParams>(&params_)) {
        return orbit_state(frame_orbitlike(s, *p), coeffs_, p->mu());
    }
    const auto& w = std::get<WavelikeParams>(params_);
    return wave_state(frame_wavelike(s, w), coeffs_, w.mu());
}

Curvature Elastica::curvature_at(double s) const
{
    return std::visit([s](const auto& p) { return curvature(s, p); }, params_);
}

void unwrap_phi(std::vector<CurveState>& states)
{
    constexpr double two_pi = 2.0 * std::numbers::pi;
    for (std::size_t i = 1; i < states.size(); ++i) {
        double step = std::remainder(states[i].phi - states[i - 1].phi, two_pi);
        states[i].phi = states[i - 1].phi + step;
    }
}

std::vector<CurveState> sample_curve(const Elastica& curve, const std::vector<double>& s_values)
{
    std::vector<CurveState> out;
    out.reserve(s_values.size());
    for (double s : s_values) {
        out.push_back(curve.at(s));
    }
    unwrap_phi(out);
    return out;
}

double hyperbolic_distance(const HyperbolicPoint& p, const HyperbolicPoint& q)
{
    if (!(p.x2 > 0.0) || !(q.x2 > 0.0)) {
        throw domain_error("hyperbolic_distance: points must lie in the upper half-plane");
    }
    // Arcosh(1 + r^2/(2 x2 y2)) written as 2 asinh for accuracy at small distances.
    double r = std::hypot(p.x1 - q.x1, p.x2 - q.x2);
    return 2.0 * std::asinh(r / (2.0 * std::sqrt(p.x2 * q.x2)));
}

double distance_Z(const CurveState& st, const HyperbolicPoint& P)
{
    if (P.x2 == 0.0) {
        throw domain_error("distance_Z: P2 must be nonzero");
    }
    double d1 = st.gamma1 - P.x1;
    double d2 = st.gamma2 - P.x2;
    return (d1 * d1 + d2 * d2) / (2.0 * P.x2 * st.gamma2);
}

double distance_Z(double s, const HyperbolicPoint& P, const Elastica& curve)
{
    return distance_Z(curve.at(s), P);
}

complex distance_Z(const CurveState& st, complex P1, complex P2)
{
    if (P2 == 0.0) {
        throw domain_error("distance_Z: P2 must be nonzero");
    }
    complex d1 = st.gamma1 - P1;
    complex d2 = st.gamma2 - P2;
    return (d1 * d1 + d2 * d2) / (2.0 * P2 * st.gamma2);
}

double distance_Z_prime(const CurveState& st, const HyperbolicPoint& P)
{
    if (P.x2 == 0.0) {
        throw domain_error("distance_Z_prime: P2 must be nonzero");
    }
    double u = st.gamma1 - P.x1;
    double v = st.gamma2;
    return u / P.x2 * std::cos(st.phi)
        + (v * v - P.x2 * P.x2 - u * u) / (2.0 * P.x2 * v) * std::sin(st.phi);
}

double z_ode_constant(const CurveState& st, const HyperbolicPoint& P, double mu)
{
    double u = st.gamma1 - P.x1;
    double P2 = P.x2;
    double g2 = st.gamma2;
    double kap = st.kappa;
    double kp = st.kappap;
    double sp = std::sin(st.phi);
    double cp = std::cos(st.phi);
    double k2 = kap * kap;
    double t1 = (P2 * P2 + u * u) / (2.0 * P2 * g2) * (kap / mu + kp / mu * sp - k2 / (2.0 * mu) * cp);
    double t2 = g2 / (2.0 * P2) * (kap / mu - kp / mu * sp + k2 / (2.0 * mu) * cp);
    double t3 = u / P2 * (-k2 / (2.0 * mu) * sp - kp / mu * cp);
    return t1 + t2 + t3;
}

ZExpansion z_expansion_coefficients(const Elastica& curve, const HyperbolicPoint& P, double s0)
{
    if (P.x2 == 0.0) {
        throw domain_error("z_expansion_coefficients: P2 must be nonzero");
    }
    FrameValues f = curve.frame(s0);
    if (curve.family() == Family::wavelike && (f.curvature_zero || std::abs(f.kappa) < 1e-10)) {
        throw domain_error("z_expansion_coefficients: s0 at a zero of kappa");
    }
    CurveState st = curve.at(s0);
    double mu = curve.mu();
    double kap = f.kappa;
    double kp = f.kappap;
    double sp = std::sin(st.phi);
    double cp = std::cos(st.phi);
    double k2 = kap * kap;

    // Inverse of [[W1, W2], [W1', W2']] applied to the three xi right-hand sides.
    double det = f.W1 * f.W2p - f.W2 * f.W1p;
    auto solve = [&](double x, double y, double& A, double& B) {
        A = (f.W2p * x - f.W2 * y) / det;
        B = (-f.W1p * x + f.W1 * y) / det;
    };
    double xi1a;
    double xi1b;
    double xi2a;
    double xi2b;
    double xi3a;
    double xi3b;
    solve(1.0 / kap - kap / mu - kp / mu * sp + k2 / (2.0 * mu) * cp, -sp / kap - kp / k2, xi1a, xi1b);
    solve(1.0 / kap - kap / mu + kp / mu * sp - k2 / (2.0 * mu) * cp, sp / kap - kp / k2, xi2a, xi2b);
    solve(k2 / (2.0 * mu) * sp + kp / mu * cp, cp / kap, xi3a, xi3b);

    double u = st.gamma1 - P.x1;
    double c1 = (u * u + P.x2 * P.x2) / (2.0 * st.gamma2 * P.x2);
    double c2 = st.gamma2 / (2.0 * P.x2);
    double c3 = u / P.x2;
    ZExpansion z;
    z.A = c1 * xi1a + c2 * xi2a + c3 * xi3a;
    z.B = c1 * xi1b + c2 * xi2b + c3 * xi3b;
    z.C = z_ode_constant(st, P, mu);
    return z;
}

double Enclosure::violation(const HyperbolicPoint& p) const
{
    if (kind == EnclosureKind::cone) {
        return std::abs(p.x1 - apex_x) - slope * p.x2;
    }
    double outer = std::hypot(p.x1 - Q1.x1, p.x2 - Q1.x2) - R1;
    double inner = R2 - std::hypot(p.x1 - Q2.x1, p.x2 - Q2.x2);
    return std::max(outer, inner);
}

Enclosure enclosure(const Elastica& curve)
{
    const CurveCoefficients& c = curve.coefficients();
    double mu = curve.mu();
    double root = std::sqrt(1.0 - mu);
    Enclosure e{};
    switch (c.kind) {
    case CoefficientKind::orbitlike: {
        double P1 = c.b3 / c.a3;
        double d = mu * c.a3;
        e.kind = EnclosureKind::annulus;
        e.Q1 = {P1, std::sqrt(2.0 + 2.0 * root) / d};
        e.R1 = std::sqrt(2.0 - mu + 2.0 * root) / d;
        e.Q2 = {P1, std::sqrt(std::max(0.0, 2.0 - 2.0 * root)) / d};
        e.R2 = std::sqrt(std::max(0.0, 2.0 - mu - 2.0 * root)) / d;
        break;
    }
    case CoefficientKind::wavelike_a3_nonzero: {
        double P1 = c.b3 / c.a3;
        double d = std::abs(mu) * std::abs(c.a3);
        double h = std::sqrt(2.0 + 2.0 * root) / d;
        e.kind = EnclosureKind::halfcircle_annulus;
        e.Q1 = {P1, h};
        e.Q2 = {P1, -h};
        e.R1 = e.R2 = std::sqrt(2.0 - mu + 2.0 * root) / d;
        break;
    }
    case CoefficientKind::wavelike_a3_zero:
        e.kind = EnclosureKind::cone;
        e.apex_x = c.b1 / c.a1;
        e.slope = std::sqrt(2.0 + 2.0 * root) / std::sqrt(-mu);
        break;
    }
    return e;
}

HyperbolicPoint mobius_apply(const MobiusMap& map, const HyperbolicPoint& p)
{
    complex z(p.x1, p.x2);
    complex w;
    switch (map.kind) {
    case MobiusKind::translate:
        w = z + map.param;
        break;
    case MobiusKind::dilate:
        if (!(map.param > 0.0)) {
            throw domain_error("mobius_apply: dilation factor must be positive");
        }
        w = map.param * z;
        break;
    case MobiusKind::rotate: {
        double c = std::cos(0.5 * map.param);
        double s = std::sin(0.5 * map.param);
        complex den = -s * z + c;
        if (std::abs(den) == 0.0) {
            throw domain_error("mobius_apply: rotation pole");
        }
        w = (c * z + s) / den;
        break;
    }
    case MobiusKind::reflect_h:
        w = complex(-p.x1, p.x2);
        break;
    case MobiusKind::invert:
        if (std::abs(z) == 0.0) {
            throw domain_error("mobius_apply: inversion pole");
        }
        w = 1.0 / std::conj(z);
        break;
    }
    return {w.real(), w.imag()};
}

CurveState mobius_apply(const MobiusMap& map, const CurveState& st)
{
    HyperbolicPoint q = mobius_apply(map, HyperbolicPoint{st.gamma1, st.gamma2});
    CurveState out = st;
    out.gamma1 = q.x1;
    out.gamma2 = q.x2;
    switch (map.kind) {
    case MobiusKind::translate:
    case MobiusKind::dilate:
        break;
    case MobiusKind::rotate: {
        // arg f'(z) = -2 arg(-s z + c).
        double c = std::cos(0.5 * map.param);
        double s = std::sin(0.5 * map.param);
        complex den = -s * complex(st.gamma1, st.gamma2) + c;
        out.phi = st.phi - 2.0 * std::arg(den);
        break;
    }
    case MobiusKind::reflect_h:
        out.phi = std::numbers::pi - st.phi;
        out.kappa = -st.kappa;
        out.kappap = -st.kappap;
        break;
    case MobiusKind::invert:
        out.phi = 2.0 * std::arg(complex(st.gamma1, st.gamma2)) - st.phi - std::numbers::pi;
        out.kappa = -st.kappa;
        out.kappap = -st.kappap;
        break;
    }
    out.phi = std::remainder(out.phi, 2.0 * std::numbers::pi);
    return out;
}

} // namespace hypela
