#include "hypela/oracle.hpp"

#include "hypela/errors.hpp"

#include <array>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/numeric/odeint.hpp>
#include <cmath>
#include <numbers>

namespace hypela {

namespace odeint = boost::numeric::odeint;

namespace {

template <typename State, typename System, typename Observer>
void run_dense(System system, State x0, const std::vector<double>& times, const IntegrationConfig& config,
               Observer observer)
{
    if (times.empty()) {
        return;
    }
    if (!(config.rel_tol > 0.0) || !(config.abs_tol > 0.0)) {
        throw domain_error("IntegrationConfig: tolerances must be positive");
    }
    bool backward = times.size() > 1 && times.back() < times.front();
    double dt = backward ? -1e-3 : 1e-3;
    using stepper_t = odeint::runge_kutta_dopri5<State>;
    try {
        if (config.max_step > 0.0) {
            auto stepper = odeint::make_dense_output(config.abs_tol, config.rel_tol, config.max_step, stepper_t());
            odeint::integrate_times(stepper, system, x0, times.begin(), times.end(), dt, observer);
        } else {
            auto stepper = odeint::make_dense_output(config.abs_tol, config.rel_tol, stepper_t());
            odeint::integrate_times(stepper, system, x0, times.begin(), times.end(), dt, observer);
        }
    } catch (const odeint::step_adjustment_error& e) {
        throw numeric_failure(std::string("integrator step underflow: ") + e.what());
    } catch (const odeint::no_progress_error& e) {
        throw numeric_failure(std::string("integrator made no progress: ") + e.what());
    }
}

std::vector<double> shifted_from_zero(const std::vector<double>& times)
{
    // integrate_times starts at times.front(); the initial state belongs to s = 0.
    std::vector<double> out;
    out.reserve(times.size() + 1);
    if (times.empty() || times.front() != 0.0) {
        out.push_back(0.0);
    }
    out.insert(out.end(), times.begin(), times.end());
    return out;
}

} // namespace

std::vector<double> uniform_grid(double s_end, int count)
{
    std::vector<double> g;
    if (count <= 0) {
        return g;
    }
    if (count == 1) {
        g.push_back(0.0);
        return g;
    }
    g.reserve(count);
    for (int i = 0; i < count; ++i) {
        g.push_back(s_end * i / (count - 1));
    }
    return g;
}

std::vector<PathSample> integrate_frame(const std::function<double(double)>& kappa_fn, const CurveState& initial,
                                        const std::vector<double>& times, const IntegrationConfig& config)
{
    using State = std::array<double, 3>;
    auto system = [&kappa_fn](const State& x, State& dx, double s) {
        double c = std::cos(x[2]);
        dx[0] = x[1] * c;
        dx[1] = x[1] * std::sin(x[2]);
        dx[2] = kappa_fn(s) - c;
    };
    std::vector<double> grid = shifted_from_zero(times);
    bool skip_first = grid.size() != times.size();
    std::vector<PathSample> out;
    out.reserve(times.size());
    auto observer = [&](const State& x, double s) {
        if (skip_first) {
            skip_first = false;
            return;
        }
        CurveState st;
        st.gamma1 = x[0];
        st.gamma2 = x[1];
        st.phi = x[2];
        st.kappa = kappa_fn(s);
        st.kappap = std::numeric_limits<double>::quiet_NaN();
        out.push_back({s, st});
    };
    run_dense(system, State{initial.gamma1, initial.gamma2, initial.phi}, grid, config, observer);
    return out;
}

std::vector<PathSample> integrate_elastica(const CurveState& initial, const std::vector<double>& times,
                                           const IntegrationConfig& config)
{
    using State = std::array<double, 5>;
    auto system = [](const State& x, State& dx, double) {
        double c = std::cos(x[2]);
        dx[0] = x[1] * c;
        dx[1] = x[1] * std::sin(x[2]);
        dx[2] = x[3] - c;
        dx[3] = x[4];
        dx[4] = x[3] - 0.5 * x[3] * x[3] * x[3];
    };
    std::vector<double> grid = shifted_from_zero(times);
    bool skip_first = grid.size() != times.size();
    std::vector<PathSample> out;
    out.reserve(times.size());
    auto observer = [&](const State& x, double s) {
        if (skip_first) {
            skip_first = false;
            return;
        }
        out.push_back({s, CurveState{x[0], x[1], x[2], x[3], x[4]}});
    };
    run_dense(system, State{initial.gamma1, initial.gamma2, initial.phi, initial.kappa, initial.kappap}, grid,
              config, observer);
    return out;
}

std::vector<CurvatureSample> integrate_curvature(double kappa0, double kappap0, const std::vector<double>& times,
                                                 const IntegrationConfig& config)
{
    using State = std::array<double, 2>;
    auto system = [](const State& x, State& dx, double) {
        dx[0] = x[1];
        dx[1] = x[0] - 0.5 * x[0] * x[0] * x[0];
    };
    std::vector<double> grid = shifted_from_zero(times);
    bool skip_first = grid.size() != times.size();
    std::vector<CurvatureSample> out;
    out.reserve(times.size());
    auto observer = [&](const State& x, double s) {
        if (skip_first) {
            skip_first = false;
            return;
        }
        out.push_back({s, x[0], x[1]});
    };
    run_dense(system, State{kappa0, kappap0}, grid, config, observer);
    return out;
}

std::vector<LameSample> integrate_lame(double k, double w0, double wp0, const std::vector<double>& times,
                                       const IntegrationConfig& config)
{
    using State = std::array<double, 5>;
    double k2 = k * k;
    auto system = [k2](const State& x, State& dx, double) {
        // x = (w, w', sn, cn, dn)
        dx[0] = x[1];
        dx[1] = -2.0 * x[4] * x[4] * x[0];
        dx[2] = x[3] * x[4];
        dx[3] = -x[2] * x[4];
        dx[4] = -k2 * x[2] * x[3];
    };
    std::vector<double> grid = shifted_from_zero(times);
    bool skip_first = grid.size() != times.size();
    std::vector<LameSample> out;
    auto observer = [&](const State& x, double z) {
        if (skip_first) {
            skip_first = false;
            return;
        }
        out.push_back({z, x[0], x[1]});
    };
    run_dense(system, State{w0, wp0, 0.0, 1.0, 1.0}, grid, config, observer);
    return out;
}

JacobiTriple jacobi_by_integration(double u, double k, const IntegrationConfig& config)
{
    using State = std::array<double, 3>;
    double k2 = k * k;
    auto system = [k2](const State& x, State& dx, double) {
        dx[0] = x[1] * x[2];
        dx[1] = -x[0] * x[2];
        dx[2] = -k2 * x[0] * x[1];
    };
    JacobiTriple result{0.0, 1.0, 1.0};
    if (u == 0.0) {
        return result;
    }
    std::vector<double> grid{0.0, u};
    auto observer = [&](const State& x, double) { result = {x[0], x[1], x[2]}; };
    run_dense(system, State{0.0, 1.0, 1.0}, grid, config, observer);
    return result;
}

double quadrature_F(double l, double k)
{
    double top = std::asin(l);
    auto f = [k](double t) {
        double s = std::sin(t);
        return 1.0 / std::sqrt(1.0 - k * k * s * s);
    };
    return boost::math::quadrature::gauss_kronrod<double, 31>::integrate(f, 0.0, top, 12, 1e-14);
}

double quadrature_E(double l, double k)
{
    double top = std::asin(l);
    auto f = [k](double t) {
        double s = std::sin(t);
        return std::sqrt(1.0 - k * k * s * s);
    };
    return boost::math::quadrature::gauss_kronrod<double, 31>::integrate(f, 0.0, top, 12, 1e-14);
}

ZOdeCheck check_Z_ode(const Elastica& curve, const HyperbolicPoint& P, double s_end, int samples,
                      const IntegrationConfig& config)
{
    if (P.x2 == 0.0) {
        throw domain_error("check_Z_ode: P2 must be nonzero");
    }
    if (samples < 3) {
        throw domain_error("check_Z_ode: need at least 3 samples");
    }
    CurveState initial = curve.at(0.0);
    double mu = -initial.kappap * initial.kappap + initial.kappa * initial.kappa
        - 0.25 * std::pow(initial.kappa, 4);
    double C = z_ode_constant(initial, P, mu);
    std::vector<PathSample> path = integrate_elastica(initial, uniform_grid(s_end, samples), config);

    ZOdeCheck out{0.0, 0.0};
    double P2 = P.x2;
    std::vector<double> z_values;
    z_values.reserve(path.size());
    for (const PathSample& ps : path) {
        const CurveState& st = ps.state;
        double u = st.gamma1 - P.x1;
        double v = st.gamma2;
        double sp = std::sin(st.phi);
        double cp = std::cos(st.phi);
        double phi_p = st.kappa - cp;
        double Z = distance_Z(st, P);
        double G = (v * v - P2 * P2 - u * u) / (2.0 * P2 * v);
        double Zp = u / P2 * cp + G * sp;
        double Gp = ((v * v + P2 * P2 + u * u) * sp - 2.0 * u * v * cp) / (2.0 * P2 * v);
        double Zpp = v * cp * cp / P2 - u / P2 * sp * phi_p + Gp * sp + G * cp * phi_p;
        double res = st.kappa * Zpp - 2.0 * st.kappap * Zp + st.kappa * (Z + 1.0) - 2.0 * mu * C;
        out.max_residual = std::max(out.max_residual, std::abs(res));
        z_values.push_back(Z);
    }
    // Z' formula against the integrated Z: fourth order centered differences on a fine local grid.
    double h = 1e-3;
    for (int i = 0; i < 5; ++i) {
        double s0 = s_end * (i + 0.5) / 5.0;
        std::vector<double> t{s0 - 2 * h, s0 - h, s0, s0 + h, s0 + 2 * h};
        std::vector<double> grid{0.0};
        grid.insert(grid.end(), t.begin(), t.end());
        std::vector<PathSample> local = integrate_elastica(initial, grid, config);
        double d = (distance_Z(local[1].state, P) - 8.0 * distance_Z(local[2].state, P)
                    + 8.0 * distance_Z(local[4].state, P) - distance_Z(local[5].state, P))
            / (12.0 * h);
        double formula = distance_Z_prime(local[3].state, P);
        out.max_z_prime_mismatch = std::max(out.max_z_prime_mismatch, std::abs(d - formula));
    }
    return out;
}

double willmore_energy_numeric(const std::function<double(double)>& kappa_fn, double L)
{
    if (!(L > 0.0)) {
        throw domain_error("willmore_energy_numeric: L must be positive");
    }
    auto f = [&kappa_fn](double s) {
        double k = kappa_fn(s);
        return k * k;
    };
    double err = 0.0;
    double val = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, 0.0, L, 15, 1e-13, &err);
    return 0.5 * std::numbers::pi * val;
}

double willmore_energy_numeric(const Elastica& curve, double L)
{
    return willmore_energy_numeric([&curve](double s) { return curve.curvature_at(s).kappa; }, L);
}

} // namespace hypela
