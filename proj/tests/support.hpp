#pragma once

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <cstdint>
#include <functional>
#include <numbers>
#include <random>

namespace testing {

inline constexpr double pi = std::numbers::pi;

// Reproducible uniform draws.
class Draw {
public:
    explicit Draw(std::uint64_t seed = 7) : gen_(seed) {}
    double operator()(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(gen_); }

private:
    std::mt19937_64 gen_;
};

// K(k) = pi / (2 AGM(1, k')) in long double.
inline long double agm_K(long double k)
{
    long double a = 1.0L;
    long double b = std::sqrt(1.0L - k * k);
    for (int i = 0; i < 40 && std::fabs(a - b) > 1e-19L * a; ++i) {
        long double next = 0.5L * (a + b);
        b = std::sqrt(a * b);
        a = next;
    }
    return std::numbers::pi_v<long double> / (2.0L * a);
}

inline double integrate(const std::function<double(double)>& f, double a, double b)
{
    double err = 0.0;
    return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, a, b, 15, 1e-14, &err);
}

// Central differences with step h: first and second derivative O(h^4).
inline double d1(const std::function<double(double)>& f, double x, double h)
{
    return (f(x - 2 * h) - 8 * f(x - h) + 8 * f(x + h) - f(x + 2 * h)) / (12 * h);
}

inline double d2(const std::function<double(double)>& f, double x, double h)
{
    return (-f(x - 2 * h) + 16 * f(x - h) - 30 * f(x) + 16 * f(x + h) - f(x + 2 * h)) / (12 * h * h);
}

inline double d4(const std::function<double(double)>& f, double x, double h)
{
    // Seven-point stencil, O(h^4).
    return (-f(x - 3 * h) + 12 * f(x - 2 * h) - 39 * f(x - h) + 56 * f(x) - 39 * f(x + h) + 12 * f(x + 2 * h) -
            f(x + 3 * h)) /
           (6 * h * h * h * h);
}

} // namespace testing
