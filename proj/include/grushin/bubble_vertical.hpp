#pragma once

#include <cstddef>
#include <string>

#include "grushin/geometry.hpp"
#include "grushin/quadrature.hpp"

namespace grushin {

/// Closed-form minimizer of the equal-area double-bubble problem with the
/// contact interface on the vertical axis. The minimizer is
/// {|y| <= f(|x|), |x| <= r} where f solves the Euler-Lagrange relation
///
///   f'(x) / sqrt(f'(x)^2 + x^{2a}) = k x + 1/2,     k < 0,  r = -3/(2k).
///
/// Immutable after construction; all operations are pure.
class VerticalBubble {
public:
    VerticalBubble(Alpha alpha, double volume, double k, QuadratureSpec spec);

    Alpha alpha() const { return alpha_; }
    double volume() const { return volume_; }
    double k() const { return k_; }
    double r() const { return r_; }
    /// Affine intercept of the curvature relation; 1/2 for every bubble.
    double d() const { return 0.5; }

    /// Profile value f(x); DomainError outside [0, r].
    double profile(double x) const;

    /// Closed-form derivative x^a (kx + 1/2) / sqrt(1 - (kx + 1/2)^2) on (0, r).
    double profile_derivative(double x) const;

    /// f'(0): 1/sqrt(3) in the Euclidean case, 0 for a > 0.
    double profile_derivative_at_zero() const;

    /// Limit of f'(x)/x^a at 0, evaluated in closed form; equals 1/sqrt(3).
    double transformed_slope_at_zero() const;

    /// Profile sampled on a uniform n-point grid over [0, r].
    SampledProfile sampled_profile(std::size_t n) const;

    /// Descriptor {"alpha","v","k","r","perimeter"}; optionally embeds a
    /// sampled profile under "profile".
    std::string to_json(std::size_t profile_samples = 0) const;

private:
    Alpha alpha_;
    double volume_;
    double k_;
    double r_;
    QuadratureSpec spec_;
};

/// Solves for the bubble of half-area v > 0:
///   k = -( -(2/v) * I )^{1/(a+2)},
///   I = integral of t (1/2 - t)^{a+1} / sqrt(1 - t^2) over [-1, 1/2].
VerticalBubble solve_vertical(Alpha alpha, double v, const QuadratureSpec& spec = {});

/// Minimum value of the constrained problem, in closed form:
///   2 |k|^{-(a+1)} * integral of (2 - t)(1/2 - t)^a / sqrt(1 - t^2) over [-1, 1/2].
double vertical_min_perimeter(const VerticalBubble& b, const QuadratureSpec& spec = {});

/// The same perimeter assembled directly from the profile,
/// 2 f(0) + 4 f(r) + 4 * integral of sqrt(x^{2a} + f'(x)^2); an independent
/// route used to cross-check the closed form.
double vertical_assembled_perimeter(const VerticalBubble& b,
                                    const QuadratureSpec& spec = {});

struct InterfaceAngles {
    double theta;              ///< arctan f'(0) in the Grushin plane
    double theta_transformed;  ///< arctan of lim f'(x)/x^a; pi/6 for every alpha
};

/// Angle diagnostics at the interface. In the transformed plane the three
/// boundary curves always meet the interface so that the full opening is
/// 2 pi / 3 (the 120-degree rule).
InterfaceAngles vertical_interface_angles(const VerticalBubble& b);

}  // namespace grushin
