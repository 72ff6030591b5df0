#include <cmath>

#include <doctest.h>

#include "steinlab/quadrature.hpp"

using namespace steinlab;

TEST_CASE("polynomials are integrated to machine precision") {
    auto sq = [](double x) { return x * x; };
    CHECK(integrate(sq, 0.0, 1.0) == doctest::Approx(1.0 / 3.0).epsilon(1e-14));

    auto cubic = [](double x) { return 4.0 * x * x * x - 2.0 * x + 1.0; };
    CHECK(integrate(cubic, -1.0, 3.0) == doctest::Approx(80.0 - 8.0 + 4.0).epsilon(1e-14));
}

TEST_CASE("oscillatory integrand") {
    auto f = [](double x) { return std::sin(x); };
    // int_0^pi sin = 2
    CHECK(integrate(f, 0.0, M_PI) == doctest::Approx(2.0).epsilon(1e-12));
    // full period cancels
    CHECK(std::fabs(integrate(f, 0.0, 2.0 * M_PI)) < 1e-10);
}

TEST_CASE("integrable endpoint singularity 1/sqrt(x)") {
    auto f = [](double x) { return 1.0 / std::sqrt(x); };
    // graded breakpoints near 0 seed the refinement
    std::vector<double> bp{0.0, 1e-12, 1e-9, 1e-6, 1e-3, 1.0};
    CHECK(integrate_segments(f, bp) == doctest::Approx(2.0).epsilon(1e-8));
}

TEST_CASE("log singularity") {
    auto f = [](double x) { return std::log(x); };
    std::vector<double> bp{0.0, 1e-12, 1e-9, 1e-6, 1e-3, 1.0};
    CHECK(integrate_segments(f, bp) == doctest::Approx(-1.0).epsilon(1e-10));
}

TEST_CASE("narrow peak found by adaptive refinement") {
    // Gaussian of width 1e-3 centered at 0.37; mass ~ sqrt(2 pi) * 1e-3
    const double mu = 0.37, s = 1e-3;
    auto f = [&](double x) {
        const double z = (x - mu) / s;
        return std::exp(-0.5 * z * z);
    };
    const double exact = std::sqrt(2.0 * M_PI) * s;
    QuadratureConfig cfg;
    cfg.abs_tol = 1e-16;
    // seed breakpoints bracketing the peak, as the library's graded meshes do;
    // a bare 15-point rule on [0,1] would step right over it
    std::vector<double> bp{0.0, 0.25, 0.5, 0.75, 1.0};
    CHECK(integrate_segments(f, bp, cfg) == doctest::Approx(exact).epsilon(1e-9));
}

TEST_CASE("budget exhaustion raises QuadratureError") {
    auto f = [](double x) { return 1.0 / std::sqrt(x); };
    QuadratureConfig cfg;
    cfg.max_subdivisions = 3;
    cfg.rel_tol = 1e-13;
    cfg.abs_tol = 1e-300;
    CHECK_THROWS_AS(integrate(f, 0.0, 1.0, cfg), QuadratureError);
}

TEST_CASE("config validation") {
    QuadratureConfig cfg;
    cfg.rel_tol = 0.0;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg = {};
    cfg.abs_tol = -1.0;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg = {};
    cfg.max_subdivisions = 0;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    auto f = [](double x) { return x; };
    CHECK_THROWS_AS(integrate_segments(f, {1.0}), std::invalid_argument);
}

TEST_CASE("tightening the tolerance does not move a converged result") {
    auto f = [](double x) { return std::exp(-x) * std::cos(3.0 * x); };
    QuadratureConfig loose, tight;
    loose.rel_tol = 1e-6;
    tight.rel_tol = 1e-12;
    const double a = integrate(f, 0.0, 10.0, loose);
    const double b = integrate(f, 0.0, 10.0, tight);
    // exact: antiderivative of e^{-x} cos 3x is e^{-x}(3 sin 3x - cos 3x)/10
    const double exact = std::exp(-10.0) * (3.0 * std::sin(30.0) - std::cos(30.0)) / 10.0 + 0.1;
    CHECK(b == doctest::Approx(exact).epsilon(1e-11));
    CHECK(std::fabs(a - b) < 1e-6 * std::fabs(b));
}
