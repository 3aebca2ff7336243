#pragma once

#include <complex>

namespace hypela {

using complex = std::complex<double>;

// Modulus k in (0,1) together with the quantities every consumer needs.
// Immutable once built; cheap to copy.
struct EllipticModulus {
    double k = 0.0;
    double k_prime = 1.0;
    double quarter_period_K = 0.0;
    double complete_E = 0.0;
    double nome_q = 0.0;
    // Set for k > 0.999 where q is close to 1 and theta sums need many terms.
    bool precision_warning = false;

    EllipticModulus() = default;
    explicit EllipticModulus(double modulus);
};

// Complete integrals of the first and second kind (AGM). k = 0 returns pi/2.
double complete_K(double k);
double complete_E(double k);

// K and E with the complementary modulus supplied directly, for accuracy when k is near 1.
double complete_K_from_complement(double k_prime);
double complete_E_from_complement(double k, double k_prime);

// dK/dk and dE/dk.
double complete_K_derivative(double k);
double complete_E_derivative(double k);

// Carlson symmetric forms.
double carlson_RF(double x, double y, double z);
double carlson_RD(double x, double y, double z);

// Incomplete integrals in Jacobi form: upper limit l = sin(amplitude), l in [0,1]
// (negative l is accepted by oddness).
double incomplete_F(double l, double k);
double incomplete_E(double l, double k);

// Same with 1 - l^2 supplied, so that l close to 1 keeps full relative accuracy.
double incomplete_F_c(double l, double one_minus_l2, double k);
double incomplete_E_c(double l, double one_minus_l2, double k);

struct JacobiTriple {
    double sn;
    double cn;
    double dn;
};

JacobiTriple jacobi_sn_cn_dn(double u, double k);

// Principal inverses on the fundamental interval.
double inverse_sn(double z, double k);
double inverse_cn(double z, double k);
double inverse_dn(double z, double k);

// Heuman's Lambda function Lambda_0(arcsin l, k).
double heuman_lambda0(double l, double k);
// Variant with 1 - l^2 given explicitly (used at l = k').
double heuman_lambda0_c(double l, double one_minus_l2, double k);

struct HeumanPartials {
    double d_l;
    double d_k;
};
HeumanPartials heuman_lambda0_partials(double l, double k);

// Theta functions of Jacobi in the argument z (period 2K in z), with the
// z-derivative from the term-wise differentiated series.
struct ThetaValue {
    complex value;
    complex derivative;
};

ThetaValue theta_Theta(complex z, const EllipticModulus& m);
ThetaValue theta_H(complex z, const EllipticModulus& m);
ThetaValue theta_Theta1(complex z, const EllipticModulus& m);

double theta_Theta(double z, double k);
double theta_H(double z, double k);
double theta_Theta1(double z, double k);

// Jacobi zeta Theta'(z)/Theta(z).
complex jacobi_zeta(complex z, const EllipticModulus& m);
double jacobi_zeta(double z, double k);

} // namespace hypela
