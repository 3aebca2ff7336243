#include "hypela/dirichlet.hpp"

#include "hypela/closed_curves.hpp"
#include "hypela/errors.hpp"
#include "hypela/parallel.hpp"

#include <Eigen/Core>
#include <algorithm>
#include <cmath>
#include <mutex>
#include <numbers>
#include <optional>
#include <unsupported/Eigen/NonLinearOptimization>
#include <unsupported/Eigen/NumericalDiff>

namespace hypela {

namespace {

constexpr double pi = std::numbers::pi;

complex unit_phase(const FrameValues& f)
{
    // W2 - i W1 = sqrt(kappa^2 - mu)/kappa e^{i theta}
    complex z(f.W2, -f.W1);
    return z / std::abs(z);
}

double logistic(double y)
{
    return 1.0 / (1.0 + std::exp(-y));
}

double logit(double k)
{
    return std::log(k / (1.0 - k));
}

struct Core {
    Assembly a;
    complex ratio; // e^{i(theta(L)-theta(0))} / rhs, valid when a.feasible
};

// Full assembly except the L > 0 check when `require_positive_length` is false.
Core assemble_core(const DirichletProblem& d, const OrbitlikeParams& p, int l, int sigma_override,
                   bool require_positive_length)
{
    Core out;
    Assembly& a = out.a;
    double k = p.k();
    double mu = p.mu();
    double smu = std::sqrt(mu);
    double r = p.scale();
    double K = p.modulus().quarter_period_K;

    FrameValues f0 = frame_orbitlike(0.0, p);
    double k0 = f0.kappa;
    double k0p = f0.kappap;
    double sA = std::sin(d.phiA);
    double cA = std::cos(d.phiA);
    double sB = std::sin(d.phiB);
    double cB = std::cos(d.phiB);

    double a3 = (2.0 * k0 + 2.0 * k0p * sA - k0 * k0 * cA) / (2.0 * mu * d.A2);
    if (!(a3 > 0.0)) {
        a.reason = "a3 <= 0";
        return out;
    }
    double b3 = a3 * d.A1 - (k0 * k0 * sA + 2.0 * k0p * cA) / (2.0 * mu);
    double dA = a3 * d.A1 - b3;
    double dB = a3 * d.B1 - b3;
    a.sigma.sigma1 = 0.5 * (1.0 - mu * (a3 * a3 * d.A2 * d.A2 + dA * dA));
    a.sigma.sigma2 = smu * dA;
    a.sigma.sigma3 = 0.5 * (1.0 - mu * (a3 * a3 * d.B2 * d.B2 + dB * dB));
    a.sigma.sigma4 = smu * dB;

    double kappaL = (1.0 + mu * (d.B2 * d.B2 * a3 * a3 + dB * dB)) / (2.0 * d.B2 * a3);
    double mixed = (1.0 + mu * (-d.B2 * d.B2 * a3 * a3 + dB * dB)) / (d.B2 * a3);
    a.kappa_end = kappaL;
    a.r1 = kappaL * kappaL - (2.0 * mu * dB * sB + mixed * cB);

    // The sign argument is kappa'(L) from the endpoint data.
    double sign_arg = mu * dB * cB - 0.5 * mixed * sB;
    a.sigma_degenerate = std::abs(sign_arg) < 1e-12;
    if (sigma_override != 0) {
        a.sigma_sign = sigma_override > 0 ? 1 : -1;
    } else {
        a.sigma_sign = sign_arg >= 0.0 ? 1 : -1;
    }

    double v = 0.5 * r * kappaL;
    double kp = p.modulus().k_prime;
    double slack = 1e-12;
    if (v < kp - slack || v > 1.0 + slack) {
        a.reason = "kappa(L) outside the curvature range";
        return out;
    }
    v = std::clamp(v, kp, 1.0);
    // dn^{-1} loses half the digits near the curvature extrema (dn is quadratic there). kappa'(L)
    // fixes sn(x) cn(x) = r^2 |kappa'(L)| / (2 k^2) linearly, so use it on those stretches.
    double x = 0.0;
    double s2_from_dn = std::clamp((1.0 - v) * (1.0 + v) / (k * k), 0.0, 1.0);
    if (s2_from_dn < 0.1 || s2_from_dn > 0.9) {
        double prod = r * r * std::abs(sign_arg) / (2.0 * k * k);
        double disc = std::sqrt(std::max(0.0, 1.0 - 4.0 * prod * prod));
        double near_end = std::min(0.5, 2.0 * prod * prod / (1.0 + disc));
        bool near_max = s2_from_dn < 0.5;
        double s2 = near_max ? near_end : 1.0 - near_end;
        x = incomplete_F_c(std::sqrt(s2), near_max ? 1.0 - s2 : near_end, k);
    } else {
        x = inverse_dn(v, k);
    }
    a.length_L = -p.s_star() + r * (2.0 * l * K - a.sigma_sign * x);
    if (require_positive_length && !(a.length_L > 0.0)) {
        a.reason = "L <= 0";
        return out;
    }

    complex e0 = unit_phase(f0);
    complex a12 = a3 * complex(a.sigma.sigma2, a.sigma.sigma1)
        / std::hypot(a.sigma.sigma1, a.sigma.sigma2) * e0;
    complex b12 = complex(b3 / a3, 1.0 / (smu * a3)) * a12;
    a.coeffs.kind = CoefficientKind::orbitlike;
    a.coeffs.a1 = a12.real();
    a.coeffs.a2 = a12.imag();
    a.coeffs.a3 = a3;
    a.coeffs.b1 = b12.real();
    a.coeffs.b2 = b12.imag();
    a.coeffs.b3 = b3;

    complex rhs = complex(a.sigma.sigma1, -a.sigma.sigma2) * complex(a.sigma.sigma3, a.sigma.sigma4);
    rhs /= std::abs(rhs);
    FrameValues fL = frame_orbitlike(a.length_L, p);
    out.ratio = unit_phase(fL) * std::conj(e0) * std::conj(rhs);
    a.r2_re = out.ratio.real() - 1.0;
    a.r2_im = out.ratio.imag();
    a.feasible = true;
    return out;
}

// Residual functor for Eigen's Levenberg-Marquardt: x = (s*, logit k).
struct ResidualFunctor {
    using Scalar = double;
    enum { InputsAtCompileTime = Eigen::Dynamic, ValuesAtCompileTime = Eigen::Dynamic };
    using InputType = Eigen::VectorXd;
    using ValueType = Eigen::VectorXd;
    using JacobianType = Eigen::MatrixXd;

    const DirichletProblem* problem = nullptr;
    int l = 0;
    int sigma_override = 0;

    int inputs() const { return 2; }
    int values() const { return 3; }

    int operator()(const Eigen::VectorXd& x, Eigen::VectorXd& fvec) const
    {
        double k = logistic(x[1]);
        fvec.resize(3);
        if (!(k > 1e-9 && k < 1.0 - 1e-12) || !std::isfinite(x[0])) {
            fvec.setConstant(1e3);
            return 0;
        }
        Core c = assemble_core(*problem, OrbitlikeParams(k, x[0]), l, sigma_override, true);
        if (!c.a.feasible) {
            fvec.setConstant(1e3);
            return 0;
        }
        fvec << c.a.r1, c.a.r2_re, c.a.r2_im;
        return 0;
    }
};

constexpr double min_length = 1e-8;

struct Start {
    double s_star;
    double k;
    int l;
    int sigma_override;
};

double endpoint_error(const DirichletProblem& d, const Elastica& curve, double L)
{
    CurveState s0 = curve.at(0.0);
    CurveState s1 = curve.at(L);
    double e = 0.0;
    e = std::max(e, hyperbolic_distance({s0.gamma1, s0.gamma2}, {d.A1, d.A2}));
    e = std::max(e, hyperbolic_distance({s1.gamma1, s1.gamma2}, {d.B1, d.B2}));
    e = std::max(e, std::abs(std::polar(1.0, s0.phi) - std::polar(1.0, d.phiA)));
    e = std::max(e, std::abs(std::polar(1.0, s1.phi) - std::polar(1.0, d.phiB)));
    return e;
}

std::optional<DirichletSolution> polish(const DirichletProblem& d, const Start& st, const SolveConfig& cfg,
                                        std::string& why)
{
    ResidualFunctor fn;
    fn.problem = &d;
    fn.l = st.l;
    fn.sigma_override = st.sigma_override;
    Eigen::NumericalDiff<ResidualFunctor, Eigen::Central> numdiff(fn, 1e-7);
    Eigen::LevenbergMarquardt<Eigen::NumericalDiff<ResidualFunctor, Eigen::Central>> lm(numdiff);
    lm.parameters.ftol = 1e-16;
    lm.parameters.xtol = 1e-15;
    lm.parameters.maxfev = 400;
    // For A = B the residuals do not depend on s* along a family; automatic column scaling then
    // divides by a noise-sized norm and throws s* out by 1e11. Unit scaling keeps steps sane.
    lm.parameters.factor = 1.0;
    lm.useExternalScaling = true;
    lm.diag.setOnes(2);
    Eigen::VectorXd x(2);
    x << st.s_star, logit(st.k);
    if (lm.minimizeInit(x) == Eigen::LevenbergMarquardtSpace::NotStarted) {
        while (lm.minimizeOneStep(x) == Eigen::LevenbergMarquardtSpace::Running) {
            if (lm.fvec.norm() <= 1e-3 * cfg.tol) {
                break;
            }
        }
    }

    double k = logistic(x[1]);
    if (!(k >= cfg.k_min && k <= cfg.k_max)) {
        why = "modulus left the search range";
        return std::nullopt;
    }
    // Same curve with s* in [0, P): L = -s* + l P - r sigma x is kept by l -> l - q.
    double period = OrbitlikeParams(k, 0.0).period();
    double q = std::floor(x[0] / period);
    double s_star = x[0] - q * period;
    int l = st.l - static_cast<int>(q);
    OrbitlikeParams p(k, s_star);
    Core c = assemble_core(d, p, l, st.sigma_override, true);
    if (c.a.feasible && st.sigma_override != 0 && !c.a.sigma_degenerate) {
        c = assemble_core(d, p, l, 0, true);
    }
    if (!c.a.feasible) {
        why = c.a.reason;
        return std::nullopt;
    }
    // L -> 0 solves the closed data trivially.
    if (!(c.a.length_L > min_length)) {
        why = "zero length";
        return std::nullopt;
    }
    double r2 = c.a.r2_norm();
    if (!(std::abs(c.a.r1) <= cfg.tol && r2 <= cfg.tol)) {
        why = "no convergence";
        return std::nullopt;
    }
    DirichletSolution sol;
    sol.k = k;
    sol.s_star = s_star;
    sol.branch_l = l;
    sol.length_L = c.a.length_L;
    sol.coeffs = c.a.coeffs;
    sol.residual_r1 = c.a.r1;
    sol.residual_r2 = r2;
    sol.sigma_sign = c.a.sigma_sign;
    Elastica curve = Elastica::orbitlike(p, c.a.coeffs);
    sol.endpoint_error = endpoint_error(d, curve, sol.length_L);
    if (!(sol.endpoint_error <= cfg.endpoint_tol)) {
        why = "endpoint mismatch " + std::to_string(sol.endpoint_error);
        return std::nullopt;
    }
    sol.symmetric = classify_symmetry(sol);
    return sol;
}

struct GridNode {
    bool ok = false;
    double s_star = 0.0;
    double k = 0.0;
    double r1 = 0.0;
    double L0 = 0.0;
    double step = 0.0;   // 2 r K
    complex ratio0;      // at l = 0
    double delta_theta = 0.0;
    bool degenerate = false;
};

std::vector<Start> screen(const DirichletProblem& d, const SolveConfig& cfg, unsigned threads)
{
    const int G = cfg.grid;
    const int rows = G + 1;
    std::vector<GridNode> nodes(static_cast<std::size_t>(rows) * rows);
    // node (i, j): k index i, s* fraction j/G of one curvature period.
    parallel_for(nodes.size(), threads, [&](std::size_t idx) {
        int i = static_cast<int>(idx) / rows;
        int j = static_cast<int>(idx) % rows;
        double k = cfg.k_min + (cfg.k_max - cfg.k_min) * i / G;
        EllipticModulus mod(k);
        double period = 2.0 * std::sqrt(2.0 - k * k) * mod.quarter_period_K;
        double s_star = period * j / G;
        GridNode& n = nodes[idx];
        n.k = k;
        n.s_star = s_star;
        n.step = period;
        OrbitlikeParams p(k, s_star);
        Core c = assemble_core(d, p, 0, 0, false);
        if (!c.a.feasible) {
            return;
        }
        n.ok = true;
        n.r1 = c.a.r1;
        n.L0 = c.a.length_L;
        n.ratio0 = c.ratio;
        n.delta_theta = p.delta_theta();
        n.degenerate = c.a.sigma_degenerate;
    });

    std::vector<Start> starts;
    for (int i = 0; i < G; ++i) {
        for (int j = 0; j < G; ++j) {
            const GridNode* corner[4] = {&nodes[i * rows + j], &nodes[i * rows + j + 1], &nodes[(i + 1) * rows + j],
                                         &nodes[(i + 1) * rows + j + 1]};
            bool ok = true;
            double r1_min = 1e300;
            double r1_max = -1e300;
            double r1_abs = 1e300;
            bool degenerate = false;
            for (const GridNode* c : corner) {
                ok = ok && c->ok;
                if (c->ok) {
                    r1_min = std::min(r1_min, c->r1);
                    r1_max = std::max(r1_max, c->r1);
                    r1_abs = std::min(r1_abs, std::abs(c->r1));
                    degenerate = degenerate || c->degenerate;
                }
            }
            if (!ok) {
                continue;
            }
            bool r1_hit = (r1_min <= 0.0 && r1_max >= 0.0) || r1_abs <= 1e-9;
            if (!r1_hit) {
                continue;
            }
            for (int l = -cfg.l_max; l <= cfg.l_max; ++l) {
                double psi_min = 1e300;
                double psi_max = -1e300;
                bool positive = true;
                for (const GridNode* c : corner) {
                    if (!(c->L0 + l * c->step > 0.0)) {
                        positive = false;
                        break;
                    }
                    double psi = std::arg(c->ratio0 * std::polar(1.0, l * c->delta_theta));
                    psi_min = std::min(psi_min, psi);
                    psi_max = std::max(psi_max, psi);
                }
                if (!positive) {
                    continue;
                }
                if (psi_min <= 0.0 && psi_max >= 0.0 && psi_max - psi_min < pi) {
                    double k = 0.5 * (corner[0]->k + corner[3]->k);
                    double s = 0.25 * (corner[0]->s_star + corner[1]->s_star + corner[2]->s_star + corner[3]->s_star);
                    starts.push_back({s, k, l, 0});
                    if (degenerate) {
                        starts.push_back({s, k, l, 1});
                        starts.push_back({s, k, l, -1});
                    }
                }
            }
        }
    }
    return starts;
}

bool same_root(const DirichletSolution& a, const DirichletSolution& b, double tol)
{
    if (a.orientation != b.orientation || std::abs(a.k - b.k) > tol) {
        return false;
    }
    EllipticModulus mod(a.k);
    double period = 2.0 * std::sqrt(2.0 - a.k * a.k) * mod.quarter_period_K;
    double ds = std::remainder(a.s_star - b.s_star, period);
    return std::abs(ds) <= tol && std::abs(a.length_L - b.length_L) <= tol * std::max(1.0, a.length_L);
}

void solve_oriented(const DirichletProblem& data, int orientation, const SolveConfig& cfg, DirichletResult& result)
{
    DirichletProblem d = orientation > 0 ? data : reflected(data);
    unsigned threads = resolve_thread_count(cfg.threads);
    std::vector<Start> starts = screen(d, cfg, threads);
    std::vector<std::optional<DirichletSolution>> found(starts.size());
    std::vector<std::string> why(starts.size());
    parallel_for(starts.size(), threads, [&](std::size_t i) {
        try {
            found[i] = polish(d, starts[i], cfg, why[i]);
        } catch (const std::exception& e) {
            why[i] = e.what();
        }
    });
    result.diagnostics.starts += static_cast<int>(starts.size());
    for (std::size_t i = 0; i < starts.size(); ++i) {
        if (!found[i]) {
            ++result.diagnostics.rejected;
            if (result.diagnostics.messages.size() < 200 && why[i] != "no convergence") {
                result.diagnostics.messages.push_back("start l=" + std::to_string(starts[i].l) + ": " + why[i]);
            }
            continue;
        }
        ++result.diagnostics.converged;
        DirichletSolution sol = *found[i];
        sol.orientation = orientation;
        bool duplicate = false;
        for (const DirichletSolution& s : result.solutions) {
            if (same_root(s, sol, cfg.dedup_tol)) {
                duplicate = true;
                break;
            }
        }
        if (!duplicate) {
            result.solutions.push_back(sol);
        }
    }
}

} // namespace

double Assembly::r2_norm() const
{
    return std::hypot(r2_re, r2_im);
}

void validate_problem(const DirichletProblem& d)
{
    for (double v : {d.A1, d.A2, d.B1, d.B2, d.phiA, d.phiB}) {
        if (!std::isfinite(v)) {
            throw domain_error("DirichletProblem: non-finite entry");
        }
    }
    if (!(d.A2 > 0.0) || !(d.B2 > 0.0)) {
        throw domain_error("DirichletProblem: endpoints must lie in the upper half-plane");
    }
}

DirichletProblem reflected(const DirichletProblem& d)
{
    return {-d.A1, d.A2, -d.B1, d.B2, pi - d.phiA, pi - d.phiB};
}

Assembly assemble(const DirichletProblem& problem, double s_star, double k, int l, int sigma_override)
{
    validate_problem(problem);
    if (!(k > 0.0 && k < 1.0)) {
        throw domain_error("assemble: k must lie in (0,1)");
    }
    return assemble_core(problem, OrbitlikeParams(k, s_star), l, sigma_override, true).a;
}

Elastica solution_curve(const DirichletSolution& solution)
{
    return Elastica::orbitlike(OrbitlikeParams(solution.k, solution.s_star), solution.coeffs);
}

CurveState evaluate_solution(const DirichletSolution& solution, double s)
{
    CurveState st = solution_curve(solution).at(s);
    if (solution.orientation < 0) {
        st = mobius_apply(MobiusMap{MobiusKind::reflect_h, 0.0}, st);
    }
    return st;
}

DirichletResult solve_dirichlet(const DirichletProblem& problem, const SolveConfig& cfg, DirichletFamily family)
{
    DirichletResult result;
    if (family == DirichletFamily::wavelike) {
        result.supported = false;
        result.reason = "unsupported-family: the Dirichlet reduction is available for orbitlike elasticae only";
        return result;
    }
    validate_problem(problem);
    if (!(cfg.k_min > 0.0 && cfg.k_max < 1.0 && cfg.k_min < cfg.k_max)) {
        throw domain_error("SolveConfig: need 0 < k_min < k_max < 1");
    }
    if (cfg.grid < 1 || cfg.l_max < 0 || !(cfg.tol > 0.0)) {
        throw domain_error("SolveConfig: grid >= 1, l_max >= 0, tol > 0 required");
    }
    if (cfg.orientation != OrientationSearch::negative) {
        solve_oriented(problem, 1, cfg, result);
    }
    if (cfg.orientation != OrientationSearch::positive) {
        solve_oriented(problem, -1, cfg, result);
    }
    std::stable_sort(result.solutions.begin(), result.solutions.end(),
                     [](const DirichletSolution& a, const DirichletSolution& b) {
                         if (a.orientation != b.orientation) {
                             return a.orientation > b.orientation;
                         }
                         if (a.k != b.k) {
                             return a.k < b.k;
                         }
                         return a.length_L < b.length_L;
                     });
    return result;
}

std::vector<DirichletSolution> solve(const DirichletProblem& problem, const SolveConfig& config)
{
    return solve_dirichlet(problem, config).solutions;
}

double symmetry_defect(const DirichletSolution& solution)
{
    Elastica curve = solution_curve(solution);
    double half = 0.5 * solution.length_L;
    double defect = 0.0;
    for (int i = 1; i <= 64; ++i) {
        double s = half * i / 64.0;
        CurveState plus = curve.at(half + s);
        CurveState minus = curve.at(half - s);
        defect = std::max({defect, std::abs(plus.gamma1 + minus.gamma1), std::abs(plus.gamma2 - minus.gamma2)});
    }
    return defect;
}

bool classify_symmetry(const DirichletSolution& solution)
{
    return symmetry_defect(solution) <= 1e-7;
}

bool s_star_on_symmetry_lattice(double s_star, double k, double tol)
{
    EllipticModulus mod(k);
    double h = std::sqrt(2.0 - k * k) * mod.quarter_period_K;
    return std::abs(std::remainder(s_star, h)) <= tol;
}

SymmetryHypothesis symmetry_hypothesis_check(const DirichletProblem& d)
{
    SymmetryHypothesis h;
    double scale = std::max({1.0, std::abs(d.A1), std::abs(d.B1)});
    h.antisymmetric_abscissae = std::abs(d.A1) > 1e-12 * scale && std::abs(d.A1 + d.B1) <= 1e-12 * scale;
    h.equal_heights = d.A2 > 0.0 && std::abs(d.A2 - d.B2) <= 1e-12 * std::max(1.0, d.A2);
    h.angle_sum_in_2piZ = std::abs(std::remainder(d.phiA + d.phiB, 2.0 * pi)) <= 1e-12;
    bool base = h.antisymmetric_abscissae && h.equal_heights && h.angle_sum_in_2piZ;
    if (std::abs(d.A1) > 0.0) {
        h.indicator = d.A2 / d.A1 * std::sin(d.phiA) + std::cos(d.phiA);
    } else {
        h.indicator = std::numeric_limits<double>::quiet_NaN();
    }
    auto outside = [](double v) { return !(v > 0.0 && v < 2.0); };
    h.positive_covered = base && outside(h.indicator);
    h.negative_covered = base && outside(-h.indicator);
    return h;
}

DirichletSolution symmetry_breaking_family(int m, int n, double s_star, double A2)
{
    if (!(A2 > 0.0)) {
        throw domain_error("symmetry_breaking_family: A2 must be positive");
    }
    ClosedCurveRecord rec = closed_curve_record(m, n);
    DirichletProblem d{0.0, A2, 0.0, A2, 0.0, 0.0};
    OrbitlikeParams p(rec.k_mn, s_star);
    double step = p.period();
    int l0 = static_cast<int>(std::lround((rec.length_L + s_star) / step));

    std::optional<Core> best;
    int best_l = 0;
    for (int l = l0 - 2; l <= l0 + 2; ++l) {
        for (int so : {0, 1, -1}) {
            Core c = assemble_core(d, p, l, so, true);
            if (!c.a.feasible) {
                continue;
            }
            if (so != 0 && !c.a.sigma_degenerate) {
                continue;
            }
            if (!best || std::abs(c.a.length_L - rec.length_L) < std::abs(best->a.length_L - rec.length_L)) {
                best = c;
                best_l = l;
            }
        }
    }
    if (!best || std::abs(best->a.length_L - rec.length_L) > 1e-8 * rec.length_L) {
        throw numeric_failure("symmetry_breaking_family: no branch reproduces the closed length");
    }
    const Assembly& a = best->a;
    if (!(std::abs(a.r1) <= 1e-10 && a.r2_norm() <= 1e-10)) {
        throw numeric_failure("symmetry_breaking_family: residuals exceed 1e-10");
    }
    DirichletSolution sol;
    sol.k = rec.k_mn;
    sol.s_star = s_star;
    sol.branch_l = best_l;
    sol.length_L = a.length_L;
    sol.coeffs = a.coeffs;
    sol.residual_r1 = a.r1;
    sol.residual_r2 = a.r2_norm();
    sol.sigma_sign = a.sigma_sign;
    sol.endpoint_error = endpoint_error(d, Elastica::orbitlike(p, a.coeffs), a.length_L);
    sol.symmetric = classify_symmetry(sol);
    return sol;
}

} // namespace hypela
