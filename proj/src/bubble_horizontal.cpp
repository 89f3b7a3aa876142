#include "grushin/bubble_horizontal.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include <json.hpp>

#include "grushin/bubble_vertical.hpp"
#include "grushin/errors.hpp"

namespace grushin {
namespace {

const double kTau = std::sqrt(3.0) / 2.0;
constexpr double kEdgeSlack = 1e-9;
constexpr double kPi = 3.14159265358979312;

}  // namespace

HorizontalBubble::HorizontalBubble(Alpha alpha, double volume, double h,
                                   QuadratureSpec spec)
    : iso_(alpha, spec), volume_(volume), h_(h), spec_(spec) {
    if (!(volume > 0.0)) throw DomainError("bubble volume must be positive");
    if (!(h > 0.0)) throw DomainError("horizontal bubble requires h > 0");
    shift_ = iso_.phi(kTau);
    r_ = (iso_.r_alpha() + shift_) / std::pow(h_, alpha.value + 1.0);
}

double HorizontalBubble::tau() const { return kTau; }

double HorizontalBubble::profile(double y) const {
    if (y < 0.0) {
        if (y > -kEdgeSlack * r_) {
            y = 0.0;
        } else {
            throw DomainError("horizontal profile: y below 0");
        }
    }
    if (y > r_) {
        if (y < r_ * (1.0 + kEdgeSlack)) {
            y = r_;
        } else {
            throw DomainError("horizontal profile: y beyond the support radius");
        }
    }
    const double a = iso_.alpha().value;
    double arg = std::abs(std::pow(h_, a + 1.0) * y - shift_);
    // rounding can push the argument a hair past phi(0)
    if (arg > iso_.r_alpha()) arg = iso_.r_alpha();
    return iso_.phi_inverse(arg) / h_;
}

double HorizontalBubble::peak_y() const {
    return shift_ / std::pow(h_, iso_.alpha().value + 1.0);
}

double HorizontalBubble::g0() const { return kTau / h_; }

double HorizontalBubble::g_prime0() const {
    const double a = iso_.alpha().value;
    return std::sqrt(1.0 - kTau * kTau) * std::pow(h_, a) / std::pow(kTau, a + 1.0);
}

SampledProfile HorizontalBubble::sampled_profile(std::size_t n) const {
    if (n < 2) throw DomainError("sampled_profile needs at least two samples");
    std::vector<double> ys_grid(n), g(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double y = r_ * static_cast<double>(i) / static_cast<double>(n - 1);
        ys_grid[i] = y;
        g[i] = profile(y);
    }
    g[n - 1] = 0.0;
    return SampledProfile(std::move(ys_grid), std::move(g));
}

std::string HorizontalBubble::to_json(std::size_t profile_samples) const {
    nlohmann::json j;
    j["alpha"] = iso_.alpha().value;
    j["v"] = volume_;
    j["h"] = h_;
    j["r"] = r_;
    j["perimeter"] = horizontal_min_perimeter(*this, spec_);
    j["g0"] = g0();
    j["g_prime0"] = g_prime0();
    j["theta"] = std::atan(g_prime0());
    j["theta_transformed"] = std::atan(std::pow(g0(), iso_.alpha().value) * g_prime0());
    if (profile_samples > 0) {
        const SampledProfile p = sampled_profile(profile_samples);
        j["profile"]["xs"] = p.xs();
        j["profile"]["ys"] = p.ys();
    }
    return j.dump();
}

HorizontalBubble solve_horizontal(Alpha alpha, double v, const QuadratureSpec& spec) {
    if (!(v > 0.0)) throw DomainError("solve_horizontal requires v > 0");
    const double a = alpha.value;
    // integral of t^{a+2}/sqrt(1-t^2) over [0, tau] in the angle variable
    auto integrand = [a](double theta) {
        return std::pow(std::sin(theta), a + 2.0);
    };
    const double correction = integrate(integrand, 0.0, std::asin(kTau), spec);
    const double area = isoperimetric_set_area(alpha, spec);
    const double h = std::pow((area - 2.0 * correction) / v, 1.0 / (a + 2.0));
    return HorizontalBubble(alpha, v, h, spec);
}

double horizontal_min_perimeter(const HorizontalBubble& b, const QuadratureSpec& spec) {
    const double a = b.alpha().value;
    // integral of t^a (1 - 2/sqrt(1-t^2)) over [0, tau] in the angle variable
    auto integrand = [a](double theta) {
        return std::pow(std::sin(theta), a) * (std::cos(theta) - 2.0);
    };
    const double correction = integrate(integrand, 0.0, std::asin(b.tau()), spec);
    const double perimeter = isoperimetric_set_perimeter(b.alpha(), spec);
    return 2.0 * (perimeter + correction) / std::pow(b.h(), a + 1.0);
}

double horizontal_assembled_perimeter(const HorizontalBubble& b,
                                      const QuadratureSpec& spec) {
    const double a = b.alpha().value;
    const double h = b.h();
    // Both boundary arcs are graphs over x once pulled apart at the peak:
    // y = (shift +/- phi_a(h x)) / h^{a+1}. Their common Grushin length
    // element is sqrt(x^{2a} + (phi_a'(h x)/h^a)^2), which diverges like an
    // inverse square root at the peak abscissa x = 1/h. The last 0.1% of
    // each arc is integrated in the angle parametrization, the rest in x.
    auto length_element = [&](double x) {
        const double u = std::min(h * x, 1.0 - 1e-15);
        const double slope = b.iso().phi_prime(u) / std::pow(h, a);
        return std::hypot(std::pow(x, a), slope);
    };
    const double u_cut = 1.0 - 1e-3;
    const double x_cut = u_cut / h;
    const double upper_body = integrate(length_element, 0.0, x_cut, spec);
    const double lower_body = integrate(length_element, b.tau() / h, x_cut, spec);
    auto tail_element = [a](double theta) {
        return std::pow(std::sin(theta), a);
    };
    const double tail = integrate(tail_element, std::asin(u_cut), 0.5 * kPi, spec) /
                        std::pow(h, a + 1.0);
    const double g0 = b.profile(0.0);
    const double interface = 2.0 * std::pow(g0, a + 1.0) / (a + 1.0);
    return interface + 4.0 * (upper_body + lower_body + 2.0 * tail);
}

double angle_constraint_residual(const HorizontalBubble& b) {
    const double tau = b.tau();
    return std::sqrt(1.0 - tau * tau) / tau - 1.0 / std::sqrt(3.0);
}

ComparisonResult compare_alpha1(double v, const QuadratureSpec& spec) {
    const Alpha one(1.0);
    const VerticalBubble vertical = solve_vertical(one, v, spec);
    const HorizontalBubble horizontal = solve_horizontal(one, v, spec);
    ComparisonResult result;
    result.p_vertical = vertical_min_perimeter(vertical, spec);
    result.p_horizontal = horizontal_min_perimeter(horizontal, spec);
    result.winner = result.p_horizontal < result.p_vertical
                        ? BubbleWinner::horizontal
                        : BubbleWinner::vertical;
    return result;
}

}  // namespace grushin
