#include "grushin/isoperimetric.hpp"

#include <cmath>

#include "grushin/errors.hpp"

namespace grushin {
namespace {

constexpr double kPi = 3.14159265358979312;
constexpr double kHalfPi = 1.57079632679489662;
constexpr double kInverseTol = 1e-12;

}  // namespace

IsoperimetricProfile::IsoperimetricProfile(Alpha alpha, QuadratureSpec spec)
    : alpha_(alpha), spec_(spec) {
    spec_.validate();
    r_alpha_ = phi(0.0);
}

double IsoperimetricProfile::phi(double x) const {
    if (!(x >= 0.0 && x <= 1.0)) {
        throw DomainError("phi requires x in [0, 1]");
    }
    if (x == 1.0) return 0.0;
    const double a = alpha_.value;
    auto integrand = [a](double t) { return std::pow(std::sin(t), a + 1.0); };
    return integrate(integrand, std::asin(x), kHalfPi, spec_);
}

double IsoperimetricProfile::phi_prime(double x) const {
    if (!(x >= 0.0 && x < 1.0)) {
        throw DomainError("phi_prime requires x in [0, 1)");
    }
    return -std::pow(x, alpha_.value + 1.0) / std::sqrt(1.0 - x * x);
}

double IsoperimetricProfile::phi_inverse(double h) const {
    if (!(h >= 0.0 && h <= r_alpha_)) {
        throw DomainError("phi_inverse requires h in [0, r_alpha]");
    }
    if (h == 0.0) return 1.0;
    if (h == r_alpha_) return 0.0;
    // phi is strictly decreasing, so plain bisection is unconditionally safe.
    // phi' is unbounded near x = 1; bisect until the bracket is tight in x
    // and in phi, so the round trip phi(phi_inverse(h)) stays within 1e-10.
    double lo = 0.0, hi = 1.0;
    double phi_lo = r_alpha_, phi_hi = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
        if (hi - lo <= kInverseTol && phi_lo - phi_hi <= 2e-11) break;
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;  // bracket at machine resolution
        const double value = phi(mid);
        if (value > h) {
            lo = mid;
            phi_lo = value;
        } else {
            hi = mid;
            phi_hi = value;
        }
    }
    return 0.5 * (lo + hi);
}

double isoperimetric_set_perimeter(Alpha alpha, const QuadratureSpec& spec) {
    const double a = alpha.value;
    auto integrand = [a](double t) { return std::pow(std::sin(t), a); };
    return 2.0 * integrate(integrand, 0.0, kPi, spec);
}

double isoperimetric_set_area(Alpha alpha, const QuadratureSpec& spec) {
    const double a = alpha.value;
    return (a + 1.0) / (a + 2.0) * isoperimetric_set_perimeter(alpha, spec);
}

double isoperimetric_constant(Alpha alpha, const QuadratureSpec& spec) {
    const double a = alpha.value;
    const double perimeter = isoperimetric_set_perimeter(alpha, spec);
    const double area = (a + 1.0) / (a + 2.0) * perimeter;
    return area / std::pow(perimeter, (a + 2.0) / (a + 1.0));
}

}  // namespace grushin
