#include "support.hpp"

#include "hypela/oracle.hpp"
#include "hypela/errors.hpp"
#include "hypela/special_functions.hpp"

#include <boost/math/special_functions/ellint_1.hpp>
#include <boost/math/special_functions/ellint_2.hpp>
#include <boost/math/special_functions/heuman_lambda.hpp>
#include <boost/math/special_functions/jacobi_elliptic.hpp>
#include <doctest.h>

using namespace hypela;
using testing::pi;

TEST_CASE("complete integrals at k = 0")
{
    CHECK(complete_K(0.0) == doctest::Approx(pi / 2).epsilon(1e-15));
    CHECK(complete_E(0.0) == doctest::Approx(pi / 2).epsilon(1e-15));
}

TEST_CASE("complete_K(0.8) against an extended-precision AGM")
{
    long double ref = testing::agm_K(0.8L);
    CHECK(std::abs(complete_K(0.8) - static_cast<double>(ref)) < 4e-16 * static_cast<double>(ref));
}

TEST_CASE("K exceeds pi/2 and E stays below it on (0,1)")
{
    for (int i = 1; i < 100; ++i) {
        double k = i / 100.0;
        CHECK(complete_K(k) > pi / 2);
        CHECK(complete_E(k) < pi / 2);
    }
    CHECK(complete_K(1e-5) - pi / 2 < 1e-9);
    CHECK(pi / 2 - complete_E(1e-5) < 1e-9);
}

TEST_CASE("complete integrals against Boost.Math")
{
    for (double k : {0.05, 0.3, 0.7, 0.9362, 0.999, 0.9999}) {
        CHECK(complete_K(k) == doctest::Approx(boost::math::ellint_1(k)).epsilon(1e-14));
        CHECK(complete_E(k) == doctest::Approx(boost::math::ellint_2(k)).epsilon(1e-14));
    }
}

TEST_CASE("incomplete integrals")
{
    CHECK(incomplete_F(1.0, 0.3) == doctest::Approx(complete_K(0.3)).epsilon(1e-14));
    CHECK(incomplete_F(0.0, 0.7) == 0.0);
    double k = 0.9;
    double oracle = testing::integrate(
        [k](double t) { return std::sqrt(1 - k * k * t * t) / std::sqrt(1 - t * t); }, 0.0, 0.5);
    CHECK(std::abs(incomplete_E(0.5, 0.9) - oracle) < 1e-13);
}

TEST_CASE("Jacobi functions at the anchors")
{
    JacobiTriple z = jacobi_sn_cn_dn(0.0, 0.8);
    CHECK(z.sn == 0.0);
    CHECK(z.cn == 1.0);
    CHECK(z.dn == 1.0);

    JacobiTriple q = jacobi_sn_cn_dn(complete_K(0.6), 0.6);
    CHECK(q.sn == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(std::abs(q.cn) < 1e-14);
    CHECK(q.dn == doctest::Approx(0.8).epsilon(1e-14));
}

TEST_CASE("Jacobi functions against integration of the first-order system")
{
    IntegrationConfig cfg{1e-13, 1e-14, 0.0};
    JacobiTriple ref = jacobi_by_integration(0.37, 0.85, cfg);
    JacobiTriple got = jacobi_sn_cn_dn(0.37, 0.85);
    CHECK(std::abs(got.sn - ref.sn) < 1e-12);
    CHECK(std::abs(got.cn - ref.cn) < 1e-12);
    CHECK(std::abs(got.dn - ref.dn) < 1e-12);

    double cn = 0, dn = 0;
    double sn = boost::math::jacobi_elliptic(0.85, 0.37, &cn, &dn);
    CHECK(std::abs(got.sn - sn) < 1e-15);
    CHECK(std::abs(got.cn - cn) < 1e-15);
    CHECK(std::abs(got.dn - dn) < 1e-15);
}

TEST_CASE("Jacobi identities on random arguments")
{
    testing::Draw draw(11);
    for (int i = 0; i < 200; ++i) {
        double k = draw(0.01, 0.999);
        double u = draw(-20, 20);
        JacobiTriple t = jacobi_sn_cn_dn(u, k);
        CHECK(std::abs(t.sn * t.sn + t.cn * t.cn - 1) < 1e-13);
        CHECK(std::abs(t.dn * t.dn + k * k * t.sn * t.sn - 1) < 1e-13);
    }
}

TEST_CASE("inverse Jacobi functions")
{
    CHECK(std::abs(inverse_dn(1.0, 0.5)) < 1e-15);
    CHECK(inverse_dn(std::sqrt(1 - 0.49), 0.7) == doctest::Approx(complete_K(0.7)).epsilon(1e-8));
    CHECK(inverse_sn(0.4, 0.6) == doctest::Approx(incomplete_F(0.4, 0.6)).epsilon(1e-14));
    CHECK(std::abs(jacobi_sn_cn_dn(inverse_sn(0.4, 0.6), 0.6).sn - 0.4) < 1e-14);
    CHECK(std::abs(jacobi_sn_cn_dn(inverse_cn(0.3, 0.6), 0.6).cn - 0.3) < 1e-14);
}

TEST_CASE("Heuman Lambda")
{
    for (double k : {0.2, 0.5, 0.9}) {
        CHECK(std::abs(heuman_lambda0(0.0, k)) < 1e-15);
    }
    CHECK(heuman_lambda0(1.0, 1e-8) == doctest::Approx(1.0).epsilon(1e-12));

    // Composition of tested pieces: (2/pi)(E F(l,k') + K E(l,k') - K F(l,k')).
    double l = 0.6, k = 0.8;
    double kc = std::sqrt(1 - k * k);
    double K = complete_K(k), E = complete_E(k);
    double composed = 2 / pi * (E * incomplete_F(l, kc) + K * incomplete_E(l, kc) - K * incomplete_F(l, kc));
    CHECK(std::abs(heuman_lambda0(l, k) - composed) < 1e-14);
    CHECK(std::abs(heuman_lambda0(l, k) - boost::math::heuman_lambda(k, std::asin(l))) < 1e-14);
}

TEST_CASE("theta functions")
{
    CHECK(std::abs(theta_H(0.0, 0.9)) < 1e-16);
    CHECK(std::abs(jacobi_zeta(0.0, 0.4)) < 1e-16);

    // Theta(z) = 1 + 2 sum (-1)^n q^{n^2} cos(n pi z / K), summed far past convergence.
    EllipticModulus m(0.75);
    long double sum = 1.0L;
    for (int n = 1; n < 60; ++n) {
        sum += 2.0L * ((n % 2) ? -1.0L : 1.0L) * std::pow(static_cast<long double>(m.nome_q), n * n) *
               std::cos(n * pi * 0.8L / m.quarter_period_K);
    }
    CHECK(std::abs(theta_Theta(0.8, 0.75) - static_cast<double>(sum)) < 1e-15);
}

TEST_CASE("precision warning close to k = 1")
{
    CHECK_FALSE(EllipticModulus(0.99).precision_warning);
    CHECK(EllipticModulus(0.9995).precision_warning);
}

TEST_CASE("derivatives of K and E")
{
    for (double k : {0.2, 0.6, 0.95}) {
        double h = 1e-5;
        CHECK(complete_K_derivative(k) ==
              doctest::Approx(testing::d1([](double x) { return complete_K(x); }, k, h)).epsilon(1e-8));
        CHECK(complete_E_derivative(k) ==
              doctest::Approx(testing::d1([](double x) { return complete_E(x); }, k, h)).epsilon(1e-8));
    }
}

TEST_CASE("domain errors")
{
    CHECK_THROWS(EllipticModulus(1.0));
    CHECK_THROWS(EllipticModulus(-0.1));
}
