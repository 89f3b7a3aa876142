#pragma once

#include "grushin/geometry.hpp"
#include "grushin/quadrature.hpp"

namespace grushin {

/// The Grushin isoperimetric profile: the strictly decreasing function on
/// [0, 1] whose symmetrized subgraph is the unique perimeter minimizer among
/// sets of its area (up to dilations and vertical translations).
///
///   phi(x) = integral of sin^{a+1}(t) over [arcsin x, pi/2]
///
/// Evaluated by quadrature of the defining integral so non-integer exponents
/// get uniform accuracy. The boundary of the minimizer is only finitely
/// differentiable across the vertical axis; that has no consequence for any
/// of the integrals here.
class IsoperimetricProfile {
public:
    explicit IsoperimetricProfile(Alpha alpha, QuadratureSpec spec = {});

    Alpha alpha() const { return alpha_; }

    /// Half-height of the minimizer: r_alpha = phi(0).
    double r_alpha() const { return r_alpha_; }

    double phi(double x) const;        // DomainError outside [0, 1]
    double phi_prime(double x) const;  // -x^{a+1}/sqrt(1-x^2), x in (0, 1)

    /// Unique x in [0, 1] with phi(x) = h, by bisection to 1e-12.
    /// DomainError outside [0, r_alpha].
    double phi_inverse(double h) const;

private:
    Alpha alpha_;
    QuadratureSpec spec_;
    double r_alpha_ = 0.0;
};

/// Perimeter of the isoperimetric set: 2 * integral of sin^a over [0, pi].
double isoperimetric_set_perimeter(Alpha alpha, const QuadratureSpec& spec = {});

/// Its area, (a+1)/(a+2) times the perimeter.
double isoperimetric_set_area(Alpha alpha, const QuadratureSpec& spec = {});

/// Sharp constant c(a) in  area <= c(a) * perimeter^{(a+2)/(a+1)};
/// equality holds on the isoperimetric set.
double isoperimetric_constant(Alpha alpha, const QuadratureSpec& spec = {});

}  // namespace grushin
