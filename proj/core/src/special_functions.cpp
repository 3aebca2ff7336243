#include "hypela/special_functions.hpp"

#include "hypela/errors.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>

namespace hypela {

namespace {

constexpr double pi = std::numbers::pi;
constexpr double eps = std::numeric_limits<double>::epsilon();

void check_modulus(double k, const char* where)
{
    if (!(k >= 0.0 && k < 1.0)) {
        throw domain_error(std::string(where) + ": modulus must lie in [0,1)");
    }
}

double complement(double k)
{
    return std::sqrt((1.0 - k) * (1.0 + k));
}

// Arithmetic-geometric mean of 1 and b, also returning sum 2^(n-1) c_n^2 with c_0 = c0.
struct AgmResult {
    double mean;
    double weighted_c2;
};

AgmResult agm(double b, double c0)
{
    double a = 1.0;
    double sum = 0.5 * c0 * c0;
    double power = 0.5;
    for (int i = 0; i < 64; ++i) {
        double c = 0.5 * (a - b);
        if (std::abs(c) <= eps * a) {
            break;
        }
        double next_a = 0.5 * (a + b);
        b = std::sqrt(a * b);
        a = next_a;
        power *= 2.0;
        sum += power * c * c;
    }
    return {a, sum};
}

} // namespace

EllipticModulus::EllipticModulus(double modulus)
{
    if (!(modulus > 0.0 && modulus < 1.0)) {
        throw domain_error("EllipticModulus: k must lie in (0,1)");
    }
    k = modulus;
    k_prime = complement(modulus);
    quarter_period_K = complete_K_from_complement(k_prime);
    complete_E = complete_E_from_complement(k, k_prime);
    double K_complement = complete_K_from_complement(k);
    nome_q = std::exp(-pi * K_complement / quarter_period_K);
    precision_warning = modulus > 0.999;
}

double complete_K_from_complement(double k_prime)
{
    if (!(k_prime > 0.0 && k_prime <= 1.0)) {
        throw domain_error("complete_K: complementary modulus must lie in (0,1]");
    }
    return pi / (2.0 * agm(k_prime, 0.0).mean);
}

double complete_E_from_complement(double k, double k_prime)
{
    AgmResult r = agm(k_prime, k);
    double K = pi / (2.0 * r.mean);
    return K * (1.0 - r.weighted_c2);
}

double complete_K(double k)
{
    check_modulus(k, "complete_K");
    return complete_K_from_complement(complement(k));
}

double complete_E(double k)
{
    check_modulus(k, "complete_E");
    return complete_E_from_complement(k, complement(k));
}

double complete_K_derivative(double k)
{
    check_modulus(k, "complete_K_derivative");
    if (k == 0.0) {
        return 0.0;
    }
    double kp2 = (1.0 - k) * (1.0 + k);
    return (complete_E(k) - kp2 * complete_K(k)) / (k * kp2);
}

double complete_E_derivative(double k)
{
    check_modulus(k, "complete_E_derivative");
    if (k == 0.0) {
        return 0.0;
    }
    return (complete_E(k) - complete_K(k)) / k;
}

// Duplication algorithm with the fifth order Taylor tail (Carlson 1995).
double carlson_RF(double x, double y, double z)
{
    if (x < 0.0 || y < 0.0 || z < 0.0 || (x + y == 0.0) || (x + z == 0.0) || (y + z == 0.0)) {
        throw domain_error("carlson_RF: arguments must be nonnegative, at most one zero");
    }
    double A0 = (x + y + z) / 3.0;
    double Q = std::pow(3.0 * eps, -1.0 / 6.0)
        * std::max({std::abs(A0 - x), std::abs(A0 - y), std::abs(A0 - z)});
    double A = A0;
    double scale = 1.0;
    for (int i = 0; i < 100 && scale * Q >= std::abs(A); ++i) {
        double sx = std::sqrt(x);
        double sy = std::sqrt(y);
        double sz = std::sqrt(z);
        double lambda = sx * sy + sx * sz + sy * sz;
        x = 0.25 * (x + lambda);
        y = 0.25 * (y + lambda);
        z = 0.25 * (z + lambda);
        A = 0.25 * (A + lambda);
        scale *= 0.25;
    }
    // Duplication shrinks A - x by exactly the factor 4 per step, so the
    // deviations can be read off the final iterate.
    double X = 1.0 - x / A;
    double Y = 1.0 - y / A;
    double Z = -(X + Y);
    double E2 = X * Y - Z * Z;
    double E3 = X * Y * Z;
    return (1.0 - E2 / 10.0 + E3 / 14.0 + E2 * E2 / 24.0 - 3.0 * E2 * E3 / 44.0) / std::sqrt(A);
}

double carlson_RD(double x, double y, double z)
{
    if (x < 0.0 || y < 0.0 || z <= 0.0 || (x + y == 0.0)) {
        throw domain_error("carlson_RD: need x,y >= 0 with x+y > 0 and z > 0");
    }
    double A0 = (x + y + 3.0 * z) / 5.0;
    double Q = std::pow(0.25 * eps, -1.0 / 6.0)
        * std::max({std::abs(A0 - x), std::abs(A0 - y), std::abs(A0 - z)});
    double A = A0;
    double scale = 1.0;
    double sum = 0.0;
    for (int i = 0; i < 100 && scale * Q >= std::abs(A); ++i) {
        double sx = std::sqrt(x);
        double sy = std::sqrt(y);
        double sz = std::sqrt(z);
        double lambda = sx * sy + sx * sz + sy * sz;
        sum += scale / (sz * (z + lambda));
        x = 0.25 * (x + lambda);
        y = 0.25 * (y + lambda);
        z = 0.25 * (z + lambda);
        A = 0.25 * (A + lambda);
        scale *= 0.25;
    }
    double X = 1.0 - x / A;
    double Y = 1.0 - y / A;
    double Z = -(X + Y) / 3.0;
    double E2 = X * Y - 6.0 * Z * Z;
    double E3 = (3.0 * X * Y - 8.0 * Z * Z) * Z;
    double E4 = 3.0 * (X * Y - Z * Z) * Z * Z;
    double E5 = X * Y * Z * Z * Z;
    double tail = 1.0 - 3.0 * E2 / 14.0 + E3 / 6.0 + 9.0 * E2 * E2 / 88.0 - 3.0 * E4 / 22.0
        - 9.0 * E2 * E3 / 52.0 + 3.0 * E5 / 26.0;
    return scale * tail / (A * std::sqrt(A)) + 3.0 * sum;
}

double incomplete_F_c(double l, double one_minus_l2, double k)
{
    if (l == 0.0) {
        return 0.0;
    }
    double sign = l < 0.0 ? -1.0 : 1.0;
    double a = std::abs(l);
    double one_minus_k2l2 = (1.0 - k * a) * (1.0 + k * a);
    if (one_minus_l2 == 0.0 && one_minus_k2l2 == 0.0) {
        throw domain_error("incomplete_F: singular at l = 1, k = 1");
    }
    return sign * a * carlson_RF(one_minus_l2, one_minus_k2l2, 1.0);
}

double incomplete_E_c(double l, double one_minus_l2, double k)
{
    if (l == 0.0) {
        return 0.0;
    }
    double sign = l < 0.0 ? -1.0 : 1.0;
    double a = std::abs(l);
    double one_minus_k2l2 = (1.0 - k * a) * (1.0 + k * a);
    if (one_minus_k2l2 == 0.0 && one_minus_l2 == 0.0) {
        return sign; // E(1,1) = 1
    }
    double rf = carlson_RF(one_minus_l2, one_minus_k2l2, 1.0);
    double rd = carlson_RD(one_minus_l2, one_minus_k2l2, 1.0);
    return sign * (a * rf - k * k * a * a * a * rd / 3.0);
}

double incomplete_F(double l, double k)
{
    if (!(std::abs(l) <= 1.0) || !(k >= 0.0 && k <= 1.0)) {
        throw domain_error("incomplete_F: need |l| <= 1 and 0 <= k <= 1");
    }
    double a = std::abs(l);
    return incomplete_F_c(l, (1.0 - a) * (1.0 + a), k);
}

double incomplete_E(double l, double k)
{
    if (!(std::abs(l) <= 1.0) || !(k >= 0.0 && k <= 1.0)) {
        throw domain_error("incomplete_E: need |l| <= 1 and 0 <= k <= 1");
    }
    double a = std::abs(l);
    return incomplete_E_c(l, (1.0 - a) * (1.0 + a), k);
}

// Descending Landen transformation (AGM scale) for the amplitude.
JacobiTriple jacobi_sn_cn_dn(double u, double k)
{
    check_modulus(k, "jacobi_sn_cn_dn");
    if (!std::isfinite(u)) {
        throw domain_error("jacobi_sn_cn_dn: argument must be finite");
    }
    double kp = complement(k);
    if (k == 0.0) {
        return {std::sin(u), std::cos(u), 1.0};
    }
    double K = complete_K_from_complement(kp);
    double period = 4.0 * K;
    u -= period * std::round(u / period);

    std::array<double, 64> a_seq{};
    std::array<double, 64> c_seq{};
    double a = 1.0;
    double b = kp;
    double c = k;
    int n = 0;
    a_seq[0] = a;
    c_seq[0] = c;
    while (std::abs(c) > eps * a && n < 62) {
        double next_a = 0.5 * (a + b);
        c = 0.5 * (a - b);
        b = std::sqrt(a * b);
        a = next_a;
        ++n;
        a_seq[n] = a;
        c_seq[n] = c;
    }
    double phi = std::ldexp(a * u, n);
    for (int i = n; i >= 1; --i) {
        phi = 0.5 * (phi + std::asin(c_seq[i] / a_seq[i] * std::sin(phi)));
    }
    double sn = std::sin(phi);
    double cn = std::cos(phi);
    double dn = std::sqrt(cn * cn + kp * kp * sn * sn);
    return {sn, cn, dn};
}

double inverse_sn(double z, double k)
{
    check_modulus(k, "inverse_sn");
    if (!(std::abs(z) <= 1.0)) {
        throw domain_error("inverse_sn: argument must lie in [-1,1]");
    }
    return incomplete_F(z, k);
}

double inverse_cn(double z, double k)
{
    check_modulus(k, "inverse_cn");
    if (!(z >= 0.0 && z <= 1.0)) {
        throw domain_error("inverse_cn: argument must lie in [0,1]");
    }
    double l = std::sqrt((1.0 - z) * (1.0 + z));
    return incomplete_F_c(l, z * z, k);
}

double inverse_dn(double z, double k)
{
    check_modulus(k, "inverse_dn");
    double kp = complement(k);
    double slack = 8.0 * eps;
    if (!(z >= kp - slack && z <= 1.0 + slack)) {
        throw domain_error("inverse_dn: argument must lie in [sqrt(1-k^2), 1]");
    }
    z = std::clamp(z, kp, 1.0);
    if (k == 0.0) {
        return 0.0;
    }
    // sn^2 = (1 - z^2)/k^2 and cn^2 = (z^2 - k'^2)/k^2, both formed without cancellation.
    double sn2 = (1.0 - z) * (1.0 + z) / (k * k);
    double cn2 = (z - kp) * (z + kp) / (k * k);
    double sn = std::sqrt(std::min(sn2, 1.0));
    return incomplete_F_c(sn, std::max(cn2, 0.0), k);
}

double heuman_lambda0_c(double l, double one_minus_l2, double k)
{
    if (!(l >= 0.0 && l <= 1.0) || !(k >= 0.0 && k <= 1.0)) {
        throw domain_error("heuman_lambda0: need 0 <= l <= 1 and 0 <= k <= 1");
    }
    if (k == 0.0) {
        return l; // Lambda_0(beta, 0) = sin(beta)
    }
    if (k == 1.0) {
        return 2.0 / pi * std::asin(l);
    }
    double kp = complement(k);
    double K = complete_K_from_complement(kp);
    double E = complete_E_from_complement(k, kp);
    if (l == 1.0 || one_minus_l2 == 0.0) {
        return 1.0;
    }
    double F1 = incomplete_F_c(l, one_minus_l2, kp);
    double E1 = incomplete_E_c(l, one_minus_l2, kp);
    return 2.0 / pi * (E * F1 + K * E1 - K * F1);
}

double heuman_lambda0(double l, double k)
{
    if (!(l >= 0.0 && l <= 1.0)) {
        throw domain_error("heuman_lambda0: need 0 <= l <= 1");
    }
    return heuman_lambda0_c(l, (1.0 - l) * (1.0 + l), k);
}

HeumanPartials heuman_lambda0_partials(double l, double k)
{
    if (!(l >= 0.0 && l < 1.0) || !(k > 0.0 && k < 1.0)) {
        throw domain_error("heuman_lambda0_partials: need 0 <= l < 1 and 0 < k < 1");
    }
    double kp2 = (1.0 - k) * (1.0 + k);
    double lp = std::sqrt((1.0 - l) * (1.0 + l));
    double root = std::sqrt(1.0 - kp2 * l * l);
    double K = complete_K(k);
    double E = complete_E(k);
    return {2.0 * (E - kp2 * l * l * K) / (pi * lp * root),
            2.0 * (E - K) * l * lp / (pi * k * root)};
}

namespace {

enum class ThetaKind { Theta, H, Theta1 };

// Sums the q-series in v = pi z / (2K); derivatives are taken term-wise and
// converted to d/dz at the end.
ThetaValue theta_series(complex z, const EllipticModulus& m, ThetaKind kind)
{
    double K = m.quarter_period_K;
    double q = m.nome_q;
    double scale = pi / (2.0 * K);
    complex v = scale * z;
    double log_q = std::log(q);

    complex value = 0.0;
    complex dvalue = 0.0;
    constexpr double tol = 1e-17;
    constexpr int max_terms = 2000;

    if (kind == ThetaKind::H) {
        for (int n = 0; n < max_terms; ++n) {
            double e = (n + 0.5) * (n + 0.5) * log_q;
            double sign = (n % 2 == 0) ? 2.0 : -2.0;
            double weight = sign * std::exp(e);
            double freq = 2.0 * n + 1.0;
            complex t = weight * std::sin(freq * v);
            complex dt = weight * freq * std::cos(freq * v);
            value += t;
            dvalue += dt;
            double growth = std::exp(e + freq * std::abs(v.imag()));
            if (n > 0 && growth * freq < tol * (1.0 + std::abs(value))) {
                break;
            }
        }
    } else {
        value = 1.0;
        for (int n = 1; n < max_terms; ++n) {
            double e = double(n) * n * log_q;
            double sign = (kind == ThetaKind::Theta && n % 2 == 1) ? -2.0 : 2.0;
            double weight = sign * std::exp(e);
            double freq = 2.0 * n;
            complex t = weight * std::cos(freq * v);
            complex dt = -weight * freq * std::sin(freq * v);
            value += t;
            dvalue += dt;
            double growth = std::exp(e + freq * std::abs(v.imag()));
            if (growth * freq < tol * (1.0 + std::abs(value))) {
                break;
            }
        }
    }
    return {value, dvalue * scale};
}

} // namespace

ThetaValue theta_Theta(complex z, const EllipticModulus& m)
{
    return theta_series(z, m, ThetaKind::Theta);
}

ThetaValue theta_H(complex z, const EllipticModulus& m)
{
    return theta_series(z, m, ThetaKind::H);
}

ThetaValue theta_Theta1(complex z, const EllipticModulus& m)
{
    return theta_series(z, m, ThetaKind::Theta1);
}

double theta_Theta(double z, double k)
{
    return theta_Theta(complex(z, 0.0), EllipticModulus(k)).value.real();
}

double theta_H(double z, double k)
{
    return theta_H(complex(z, 0.0), EllipticModulus(k)).value.real();
}

double theta_Theta1(double z, double k)
{
    return theta_Theta1(complex(z, 0.0), EllipticModulus(k)).value.real();
}

complex jacobi_zeta(complex z, const EllipticModulus& m)
{
    ThetaValue t = theta_Theta(z, m);
    return t.derivative / t.value;
}

double jacobi_zeta(double z, double k)
{
    return jacobi_zeta(complex(z, 0.0), EllipticModulus(k)).real();
}

} // namespace hypela
