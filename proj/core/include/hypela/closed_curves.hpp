#pragma once

#include "hypela/elastica.hpp"

#include <functional>
#include <limits>
#include <utility>
#include <vector>

namespace hypela {

// gcd(m,n) = 1 and 1 < 2m/n < sqrt2.
bool is_valid_mn(int m, int n);
void require_valid_mn(int m, int n);

struct ClosedCurveRecord {
    int m = 0;
    int n = 0;
    double k_mn = 0.0;
    double length_L = 0.0;
    double willmore_W = 0.0;
    long selfint_S = 0;
};

// Delta theta_k = 2 pi m / n.
double solve_k_mn(int m, int n);
ClosedCurveRecord closed_curve_record(int m, int n);
ClosedCurveRecord closed_curve_record(int m, int n, double k_mn);

// All valid (m,n) with n <= max_n, ordered by n then m.
std::vector<std::pair<int, int>> valid_mn_pairs(int max_n);
// The 26 rows of the published table (n <= 20); it lacks (13,20).
const std::vector<std::pair<int, int>>& published_table_rows();
std::vector<ClosedCurveRecord> enumerate_table(const std::vector<std::pair<int, int>>& rows, unsigned threads = 0);
std::vector<ClosedCurveRecord> enumerate_table(int max_n, unsigned threads = 0);

// s* = 0, gamma(0) = (0,1), phi(0) = 0.
Elastica canonical_closed_curve(int m, int n);
Elastica canonical_closed_curve(int m, int n, double k_mn);

struct SelfIntersection {
    int l = 0;
    int p = 0;
    double s = 0.0;
    HyperbolicPoint point;
    double partner_s = 0.0;
    double separation = 0.0; // d_H(gamma(s), gamma(partner_s))
};

// Admissible (l,p): l in 1..2n-1, p in 1..ceil(min(l,2n-l) m/n) - 1.
std::vector<std::pair<int, int>> intersection_index_set(int m, int n);

// Sorted by s. Throws numeric_failure if any pair misses d_H <= 1e-8.
std::vector<SelfIntersection> self_intersections(int m, int n);

struct CrossingPair {
    double s;
    double t;
    HyperbolicPoint point;
};

// Geometric oracle: polyline crossings over [0, L) from spatial hashing, refined by Newton on
// gamma(s) = gamma(t). Deduplicated; needs no rotation-angle machinery.
std::vector<CrossingPair> brute_force_self_intersections(const Elastica& curve, double L, int samples = 20000);

struct WindingReport {
    int winding = 0;
    double raw = 0.0;
    int auxiliary_winding = 0; // eta = g1 - b3/a3 + i (g2 kappa/sqrt(mu) - 1/(sqrt(mu) a3))
    double auxiliary_raw = 0.0;
    int samples_per_period = 0;
};

WindingReport winding_report(int m, int n);
int winding_number(int m, int n);

struct InstabilityReport {
    double A_k = 0.0;
    double B_k = 0.0;
    double C_k = 0.0;
    double n_threshold = std::numeric_limits<double>::infinity();
    bool provably_unstable = false;
    int test_mode_j = -1;
    double I_value = std::numeric_limits<double>::quiet_NaN();
};

double instability_A(double k);
double instability_B(double k);
double instability_C(double k);
// 16(1-k^2)K^2 - 44(2-k^2)EK + 75E^2, whose positive part enters C.
double instability_discriminant(double k);
// Root of the discriminant, where C switches from positive to zero (near 0.6869).
double instability_cutoff();

// Mean values of 5 kappa^2 - 4 and 6 kappa'^2 - kappa^4 + 3 kappa^2 + 2 over a period.
double mean_coefficient_alpha0(double k);
double mean_coefficient_beta0(double k);
// I_{m,n}(cos(2 pi j s / L)) in closed form; j = 0 gives beta0 L, otherwise requires 2j not in n N.
double monochromatic_second_variation(double k, int n, int j);

InstabilityReport instability_report(int m, int n);

struct SecondVariation {
    double value = 0.0;
    double half_resolution_value = 0.0;
    bool resolved = true; // false if halving the samples moves the value by > 1e-6 (relative)
};

// I_{m,n} for an L-periodic function given by uniform samples on [0, L) (count >= 2048, even),
// spectral derivatives and the periodic trapezoid rule.
SecondVariation second_variation(int m, int n, const std::vector<double>& phi_samples);
std::vector<double> sample_periodic(const std::function<double(double)>& phi, double L, int count);

struct TorusGap {
    double annulus_width = 0.0;     // R1 - R2
    double center_separation = 0.0; // |Q1 - Q2|
    double mu = 0.0;
};

// Enclosure geometry for a3 = 1, b3 = 0.
TorusGap torus_convergence_gap(int m, int n);
TorusGap torus_convergence_gap_for_k(double k);

} // namespace hypela
