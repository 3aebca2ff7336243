#pragma once

#include "hypela/elastica.hpp"

#include <string>
#include <vector>

namespace hypela {

// gamma(0) = A, gamma(L) = B, e^{i phi(0)} = e^{i phiA}, e^{i phi(L)} = e^{i phiB}.
struct DirichletProblem {
    double A1 = 0.0;
    double A2 = 1.0;
    double B1 = 0.0;
    double B2 = 1.0;
    double phiA = 0.0;
    double phiB = 0.0;
};

void validate_problem(const DirichletProblem& problem);

// (A1, A2, phiA) -> (-A1, A2, pi - phiA), same for B: negatively oriented solutions of the
// original data are mirror images of positively oriented solutions of the reflected data.
DirichletProblem reflected(const DirichletProblem& problem);

struct SigmaQuad {
    double sigma1 = 0.0;
    double sigma2 = 0.0;
    double sigma3 = 0.0;
    double sigma4 = 0.0;
};

struct Assembly {
    bool feasible = false;
    std::string reason; // set when infeasible
    CurveCoefficients coeffs;
    SigmaQuad sigma;
    double length_L = 0.0;
    double kappa_end = 0.0; // kappa(L) from the endpoint data
    double r1 = 0.0;
    double r2_re = 0.0; // e^{i(theta(L)-theta(0))} / rhs - 1
    double r2_im = 0.0;
    int sigma_sign = 1;
    bool sigma_degenerate = false;
    double r2_norm() const;
};

// Coefficients, length and residuals for given (s*, k, l). `sigma_override` forces the sign
// (used when its argument vanishes).
Assembly assemble(const DirichletProblem& problem, double s_star, double k, int l, int sigma_override = 0);

struct DirichletSolution {
    double k = 0.0;
    double s_star = 0.0;
    int branch_l = 0;
    double length_L = 0.0;
    CurveCoefficients coeffs; // of the positively oriented curve (mirror image if orientation = -1)
    double residual_r1 = 0.0;
    double residual_r2 = 0.0;
    bool symmetric = false;
    int orientation = 1;
    int sigma_sign = 1;
    double endpoint_error = 0.0; // max of d_H at both ends and |e^{i phi} - e^{i phi_data}|
};

Elastica solution_curve(const DirichletSolution& solution);
// Point on the solution in the original data's frame (mirrored back for orientation -1).
CurveState evaluate_solution(const DirichletSolution& solution, double s);

enum class OrientationSearch { positive, negative, both };

struct SolveConfig {
    double k_min = 0.02;
    double k_max = 0.998;
    int l_max = 40;
    int grid = 48; // starts per axis over (k, s* in one curvature period)
    double tol = 1e-10;
    double endpoint_tol = 1e-8;
    double dedup_tol = 1e-6;
    unsigned threads = 0;
    OrientationSearch orientation = OrientationSearch::positive;
};

struct SolveDiagnostics {
    int starts = 0;
    int converged = 0;
    int rejected = 0;
    std::vector<std::string> messages;
};

enum class DirichletFamily { orbitlike, wavelike };

struct DirichletResult {
    bool supported = true;
    std::string reason;
    std::vector<DirichletSolution> solutions;
    SolveDiagnostics diagnostics;
};

// Wavelike requests come back with supported = false.
DirichletResult solve_dirichlet(const DirichletProblem& problem, const SolveConfig& config = {},
                                DirichletFamily family = DirichletFamily::orbitlike);
std::vector<DirichletSolution> solve(const DirichletProblem& problem, const SolveConfig& config = {});

// gamma1(L/2+s) = -gamma1(L/2-s), gamma2(L/2+s) = gamma2(L/2-s) on 64 samples within 1e-7.
bool classify_symmetry(const DirichletSolution& solution);
// Largest deviation from the reflection identities.
double symmetry_defect(const DirichletSolution& solution);
// s* in sqrt(2-k^2) K(k) Z within tol.
bool s_star_on_symmetry_lattice(double s_star, double k, double tol = 1e-7);

struct SymmetryHypothesis {
    bool antisymmetric_abscissae = false; // A1 = -B1 != 0
    bool equal_heights = false;           // A2 = B2 > 0
    bool angle_sum_in_2piZ = false;       // phiA + phiB in 2 pi Z
    double indicator = 0.0;               // A2/A1 sin(phiA) + cos(phiA)
    bool positive_covered = false;        // +indicator not in (0,2)
    bool negative_covered = false;        // -indicator not in (0,2)
};

SymmetryHypothesis symmetry_hypothesis_check(const DirichletProblem& problem);

// Closed curve gamma_{m,n} through A = B = (0, A2) with phiA = phiB = 0 and the given s*.
DirichletSolution symmetry_breaking_family(int m, int n, double s_star, double A2);

} // namespace hypela
