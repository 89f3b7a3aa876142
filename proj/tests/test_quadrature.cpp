#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "grushin/errors.hpp"
#include "grushin/quadrature.hpp"

using namespace grushin;

namespace {

constexpr double kPi = 3.14159265358979312;

// Exact polynomial integral, the oracle for the linearity/additivity suites.
double poly_eval(const std::vector<double>& c, double x) {
    double v = 0.0;
    for (std::size_t i = c.size(); i-- > 0;) v = v * x + c[i];
    return v;
}

double poly_integral(const std::vector<double>& c, double a, double b) {
    double va = 0.0, vb = 0.0;
    for (std::size_t i = c.size(); i-- > 0;) {
        va = va * a + c[i] / static_cast<double>(i + 1);
        vb = vb * b + c[i] / static_cast<double>(i + 1);
    }
    return vb * b - va * a;
}

}  // namespace

TEST_CASE("integrate reproduces elementary antiderivatives") {
    CHECK(integrate([](double t) { return std::sin(t); }, 0.0, kPi) ==
          doctest::Approx(2.0).epsilon(1e-12));
    CHECK(integrate([](double t) { return std::sin(t) * std::sin(t); }, 0.0,
                    kPi / 2.0) == doctest::Approx(kPi / 4.0).epsilon(1e-12));
    // antiderivative (t - sin t cos t)/2 evaluated at both endpoints
    auto F = [](double t) { return 0.5 * (t - std::sin(t) * std::cos(t)); };
    const double expected = F(kPi / 2.0) - F(std::asin(std::sqrt(3.0) / 2.0));
    CHECK(expected == doctest::Approx(0.47830573874525910).epsilon(1e-14));
    CHECK(integrate([](double t) { return std::sin(t) * std::sin(t); },
                    std::asin(std::sqrt(3.0) / 2.0), kPi / 2.0) ==
          doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("integrate degenerate and invalid ranges") {
    CHECK(integrate([](double t) { return t; }, 2.0, 2.0) == 0.0);
    CHECK_THROWS_AS(integrate([](double t) { return t; }, 1.0, 0.0), DomainError);
}

TEST_CASE("integrate rejects non-finite integrands") {
    CHECK_THROWS_AS(integrate([](double) { return std::nan(""); }, 0.0, 1.0),
                    NonFiniteIntegrand);
}

TEST_CASE("integrate reports non-convergence within the budget") {
    QuadratureSpec tight;
    tight.max_subdivisions = 8;
    auto nasty = [](double t) { return 1.0 / std::sqrt(1.0 - t); };
    CHECK_THROWS_AS(integrate(nasty, 0.0, 1.0, tight), NonConvergence);
}

TEST_CASE("quadrature spec validation") {
    QuadratureSpec bad;
    bad.abs_tol = 0.0;
    CHECK_THROWS_AS(integrate([](double t) { return t; }, 0.0, 1.0, bad),
                    DomainError);
    bad = QuadratureSpec{};
    bad.max_subdivisions = 0;
    CHECK_THROWS_AS(integrate([](double t) { return t; }, 0.0, 1.0, bad),
                    DomainError);
}

TEST_CASE("integrate_singular handles inverse-square-root endpoints") {
    QuadratureSpec spec;
    spec.singular_left = true;
    spec.singular_right = true;
    CHECK(integrate_singular([](double t) { return 1.0 / std::sqrt(1.0 - t * t); },
                             -1.0, 1.0, spec) ==
          doctest::Approx(kPi).epsilon(1e-12));

    // right endpoint regular here, so the plain rule agrees
    auto f = [](double t) { return t * t * t / std::sqrt(1.0 - t * t); };
    const double upper = std::sqrt(3.0) / 2.0;
    CHECK(integrate_singular(f, 0.0, upper) ==
          doctest::Approx(5.0 / 24.0).epsilon(1e-12));
    CHECK(integrate(f, 0.0, upper) == doctest::Approx(5.0 / 24.0).epsilon(1e-12));

    spec = QuadratureSpec{};
    spec.singular_left = true;
    CHECK(integrate_singular([](double t) { return t / std::sqrt(1.0 - t * t); },
                             -1.0, 0.5, spec) ==
          doctest::Approx(-std::sqrt(3.0) / 2.0).epsilon(1e-12));
}

TEST_CASE("linearity on random polynomials") {
    std::mt19937_64 rng(20240811);
    std::uniform_real_distribution<double> coeff(-3.0, 3.0);
    std::uniform_real_distribution<double> scale(-10.0, 10.0);
    const QuadratureSpec spec;
    for (int trial = 0; trial < 25; ++trial) {
        std::vector<double> f(9), g(9);
        for (auto& c : f) c = coeff(rng);
        for (auto& c : g) c = coeff(rng);
        const double c = scale(rng);
        const double a = -1.0, b = 1.5;
        auto combined = [&](double x) {
            return c * poly_eval(f, x) + poly_eval(g, x);
        };
        const double lhs = integrate(combined, a, b, spec);
        const double rhs = c * integrate([&](double x) { return poly_eval(f, x); },
                                         a, b, spec) +
                           integrate([&](double x) { return poly_eval(g, x); }, a,
                                     b, spec);
        CHECK(std::abs(lhs - rhs) <= 10.0 * spec.abs_tol * (1.0 + std::abs(c)));
        // both agree with the closed-form antiderivative
        const double exact = c * poly_integral(f, a, b) + poly_integral(g, a, b);
        CHECK(std::abs(lhs - exact) <= 1e-10 * (1.0 + std::abs(exact)));
    }
}

TEST_CASE("interval additivity") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> mid(0.05, 0.95);
    const QuadratureSpec spec;
    auto f = [](double t) { return std::exp(-t) * std::cos(5.0 * t); };
    const double whole = integrate(f, 0.0, 1.0, spec);
    for (int trial = 0; trial < 10; ++trial) {
        const double m = mid(rng);
        const double split = integrate(f, 0.0, m, spec) + integrate(f, m, 1.0, spec);
        CHECK(std::abs(whole - split) <= 10.0 * spec.abs_tol);
    }
}

TEST_CASE("singular rule is consistent on smooth integrands") {
    const QuadratureSpec spec;
    auto f = [](double t) { return std::cos(t) + t * t; };
    const double plain = integrate(f, -0.5, 2.0, spec);
    const double substituted = integrate_singular(f, -0.5, 2.0, spec);
    CHECK(std::abs(plain - substituted) <= 10.0 * spec.abs_tol);
}
