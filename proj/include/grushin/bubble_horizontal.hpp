#pragma once

#include <cstddef>
#include <string>

#include "grushin/geometry.hpp"
#include "grushin/isoperimetric.hpp"
#include "grushin/quadrature.hpp"

namespace grushin {

/// Closed-form minimizer of the equal-area double-bubble problem with the
/// contact interface on the horizontal axis: two copies of the Grushin
/// isoperimetric set, cut at the level where the interface condition holds,
/// glued along the axis and rescaled by the anisotropic dilation 1/h.
///
/// The cut parameter is tau = sqrt(3)/2 in isoperimetric coordinates; the
/// y-profile is
///
///   g(y) = (1/h) phi_a^{-1}( |h^{a+1} y - phi_a(tau)| ),   y in [0, r],
///
/// with r = h^{-(a+1)} (r_a + phi_a(tau)).
class HorizontalBubble {
public:
    HorizontalBubble(Alpha alpha, double volume, double h, QuadratureSpec spec);

    Alpha alpha() const { return iso_.alpha(); }
    double volume() const { return volume_; }
    double h() const { return h_; }
    double r() const { return r_; }
    /// Interface half-width in isoperimetric coordinates; sqrt(3)/2 always.
    double tau() const;
    /// Vertical offset of the glued isoperimetric sets: phi_a(tau).
    double shift() const { return shift_; }
    const IsoperimetricProfile& iso() const { return iso_; }

    /// Profile value g(y); DomainError outside [0, r].
    double profile(double y) const;

    /// Height of the strict maximum of g: y_hat = phi_a(tau) / h^{a+1};
    /// g(y_hat) = 1/h and g'(y_hat) = 0.
    double peak_y() const;

    /// g(0) = tau / h.
    double g0() const;

    /// g'(0) in closed form, sqrt(1 - tau^2) h^a / tau^{a+1}, obtained by
    /// differentiating the dilated isoperimetric profile at the cut level.
    double g_prime0() const;

    /// Profile sampled on a uniform n-point grid over [0, r].
    SampledProfile sampled_profile(std::size_t n) const;

    /// Descriptor {"alpha","v","h","r","perimeter"}; optional embedded profile.
    std::string to_json(std::size_t profile_samples = 0) const;

private:
    IsoperimetricProfile iso_;
    double volume_;
    double h_;
    double shift_;
    double r_;
    QuadratureSpec spec_;
};

/// Solves for the bubble of half-area v > 0:
///   h = [ (area(E_a) - 2 * integral of t^{a+2}/sqrt(1-t^2) over [0, tau]) / v ]^{1/(a+2)}.
HorizontalBubble solve_horizontal(Alpha alpha, double v, const QuadratureSpec& spec = {});

/// Minimum value of the constrained problem, in closed form:
///   (2/h^{a+1}) [ P_a(E_a) + integral of t^a (1 - 2/sqrt(1-t^2)) over [0, tau] ].
double horizontal_min_perimeter(const HorizontalBubble& b,
                                const QuadratureSpec& spec = {});

/// The same perimeter assembled from the profile:
/// 2 * g(0)^{a+1}/(a+1) + 4 * (Grushin arc length of the profile curve).
/// The two arcs are integrated in the x-parametrization, where the slope
/// divergence of g at y = 0 and y = r disappears.
double horizontal_assembled_perimeter(const HorizontalBubble& b,
                                      const QuadratureSpec& spec = {});

/// g(0)^a g'(0) - 1/sqrt(3). Zero for every (alpha, v): the interface
/// condition that fixes tau = sqrt(3)/2. Evaluated from the symbolic
/// simplification g(0)^a g'(0) = sqrt(1 - tau^2)/tau, immune to cancellation.
double angle_constraint_residual(const HorizontalBubble& b);

enum class BubbleWinner { vertical, horizontal };

struct ComparisonResult {
    double p_vertical;
    double p_horizontal;
    BubbleWinner winner;
};

/// Both closed-form perimeters at alpha = 1 and the smaller one (always the
/// horizontal bubble; the ratio is (9 sqrt 3 + 8 pi)^{1/3} / 3 for every v).
ComparisonResult compare_alpha1(double v, const QuadratureSpec& spec = {});

}  // namespace grushin
