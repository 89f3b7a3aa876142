#include "grushin/bubble_vertical.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include <json.hpp>

#include "grushin/errors.hpp"

namespace grushin {
namespace {

// Relative slack for domain checks at x = 0 and x = r.
constexpr double kEdgeSlack = 1e-9;

// arccos(-1/2): the angle sweeping the full profile range t in [-1, 1/2].
constexpr double kPsiFull = 2.0943951023931953;

double clamp_to_domain(double x, double r, const char* what) {
    if (x < 0.0) {
        if (x > -kEdgeSlack * r) return 0.0;
        throw DomainError(std::string(what) + ": x below 0");
    }
    if (x > r) {
        if (x < r * (1.0 + kEdgeSlack)) return r;
        throw DomainError(std::string(what) + ": x beyond the support radius");
    }
    return x;
}

}  // namespace

VerticalBubble::VerticalBubble(Alpha alpha, double volume, double k, QuadratureSpec spec)
    : alpha_(alpha), volume_(volume), k_(k), r_(-3.0 / (2.0 * k)), spec_(spec) {
    if (!(volume > 0.0)) throw DomainError("bubble volume must be positive");
    if (!(k < 0.0)) throw DomainError("vertical bubble requires k < 0");
}

double VerticalBubble::profile(double x) const {
    x = clamp_to_domain(x, r_, "vertical profile");
    const double a = alpha_.value;
    // f(x) = -|k|^{-(a+1)} * integral of t (1/2 - t)^a / sqrt(1 - t^2) over
    // [-1, kx + 1/2]. The substitution t = -cos(psi) removes the endpoint
    // singularity exactly, so the quadrature never sees a cancellation.
    double upper = k_ * x + 0.5;
    if (upper < -1.0) upper = -1.0;
    if (upper <= -1.0) return 0.0;
    const double psi_max = std::acos(std::clamp(-upper, -1.0, 1.0));
    auto integrand = [a](double psi) {
        const double c = std::cos(psi);
        return -c * std::pow(0.5 + c, a);
    };
    const double integral = integrate(integrand, 0.0, psi_max, spec_);
    return -integral / std::pow(-k_, a + 1.0);
}

double VerticalBubble::profile_derivative(double x) const {
    x = clamp_to_domain(x, r_, "vertical profile derivative");
    const double u = k_ * x + 0.5;
    const double denom = std::sqrt(std::max(0.0, 1.0 - u * u));
    if (denom == 0.0) {
        return u > 0.0 ? std::numeric_limits<double>::infinity()
                       : -std::numeric_limits<double>::infinity();
    }
    return std::pow(x, alpha_.value) * u / denom;
}

double VerticalBubble::profile_derivative_at_zero() const {
    // From the curvature relation at x = 0: f'(0)/sqrt(f'(0)^2 + 0^{2a}) = 1/2.
    if (alpha_.value == 0.0) return 0.5 / std::sqrt(0.75);
    return 0.0;
}

double VerticalBubble::transformed_slope_at_zero() const {
    // lim f'(x)/x^a = (1/2)/sqrt(1 - 1/4), independently of alpha.
    return 0.5 / std::sqrt(0.75);
}

SampledProfile VerticalBubble::sampled_profile(std::size_t n) const {
    if (n < 2) throw DomainError("sampled_profile needs at least two samples");
    std::vector<double> xs(n), ys(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double x = r_ * static_cast<double>(i) / static_cast<double>(n - 1);
        xs[i] = x;
        double y = profile(x);
        if (y < 0.0) y = 0.0;  // quadrature noise at the tip
        ys[i] = y;
    }
    ys[n - 1] = 0.0;
    return SampledProfile(std::move(xs), std::move(ys));
}

std::string VerticalBubble::to_json(std::size_t profile_samples) const {
    nlohmann::json j;
    j["alpha"] = alpha_.value;
    j["v"] = volume_;
    j["k"] = k_;
    j["r"] = r_;
    j["perimeter"] = vertical_min_perimeter(*this, spec_);
    const InterfaceAngles angles = vertical_interface_angles(*this);
    j["theta"] = angles.theta;
    j["theta_transformed"] = angles.theta_transformed;
    if (profile_samples > 0) {
        const SampledProfile p = sampled_profile(profile_samples);
        j["profile"]["xs"] = p.xs();
        j["profile"]["ys"] = p.ys();
    }
    return j.dump();
}

VerticalBubble solve_vertical(Alpha alpha, double v, const QuadratureSpec& spec) {
    if (!(v > 0.0)) throw DomainError("solve_vertical requires v > 0");
    const double a = alpha.value;
    // integral of t (1/2 - t)^{a+1} / sqrt(1 - t^2) over [-1, 1/2], in the
    // angle variable t = -cos(psi)
    auto integrand = [a](double psi) {
        const double c = std::cos(psi);
        return -c * std::pow(0.5 + c, a + 1.0);
    };
    const double integral = integrate(integrand, 0.0, kPsiFull, spec);
    const double k = -std::pow(-2.0 * integral / v, 1.0 / (a + 2.0));
    return VerticalBubble(alpha, v, k, spec);
}

double vertical_min_perimeter(const VerticalBubble& b, const QuadratureSpec& spec) {
    const double a = b.alpha().value;
    // integral of (2 - t)(1/2 - t)^a / sqrt(1 - t^2) over [-1, 1/2], angle form
    auto integrand = [a](double psi) {
        const double c = std::cos(psi);
        return (2.0 + c) * std::pow(0.5 + c, a);
    };
    const double integral = integrate(integrand, 0.0, kPsiFull, spec);
    return 2.0 * integral / std::pow(-b.k(), a + 1.0);
}

double vertical_assembled_perimeter(const VerticalBubble& b,
                                    const QuadratureSpec& spec) {
    const double a = b.alpha().value;
    auto length_element = [&](double x) {
        return std::hypot(std::pow(x, a), b.profile_derivative(x));
    };
    // f' diverges like an inverse square root at the tip; the last 0.1% of
    // the arc is integrated in the angle parametrization where the length
    // element is smooth, the rest directly in x.
    const double x_cut = b.r() * (1.0 - 1e-3);
    const double body = integrate(length_element, 0.0, x_cut, spec);
    const double u_cut = b.k() * x_cut + 0.5;
    const double psi_cut = std::acos(std::clamp(-u_cut, -1.0, 1.0));
    auto tail_element = [a](double psi) {
        return std::pow(0.5 + std::cos(psi), a);
    };
    const double tail =
        integrate(tail_element, 0.0, psi_cut, spec) / std::pow(-b.k(), a + 1.0);
    return 2.0 * b.profile(0.0) + 4.0 * b.profile(b.r()) + 4.0 * (body + tail);
}

InterfaceAngles vertical_interface_angles(const VerticalBubble& b) {
    return {std::atan(b.profile_derivative_at_zero()),
            std::atan(b.transformed_slope_at_zero())};
}

}  // namespace grushin
