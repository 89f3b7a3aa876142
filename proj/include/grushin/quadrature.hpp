#pragma once

#include <functional>

namespace grushin {

/// Tolerances and singularity flags shared by every definite integral in the
/// library. Defaults are two orders tighter than the tightest downstream
/// tolerance so quadrature error stays negligible.
struct QuadratureSpec {
    double abs_tol = 1e-12;       ///< absolute error target
    double rel_tol = 1e-10;       ///< relative error target
    int max_subdivisions = 10000; ///< adaptive bisection budget
    bool singular_left = false;   ///< 1/sqrt(t - a) endpoint singularity
    bool singular_right = false;  ///< 1/sqrt(b - t) endpoint singularity

    /// Throws DomainError unless abs_tol > 0, rel_tol > 0, max_subdivisions >= 1.
    void validate() const;
};

using Integrand = std::function<double(double)>;

/// Adaptive Gauss-Kronrod integration of f over [a, b].
///
/// Returns I with |I - integral| <= max(abs_tol, rel_tol*|I|); returns 0 when
/// a == b. Throws DomainError if a > b, NonConvergence if the target is not
/// met within max_subdivisions, NonFiniteIntegrand if f evaluates to a
/// non-finite value at an interior node.
double integrate(const Integrand& f, double a, double b,
                 const QuadratureSpec& spec = {});

/// Improper integral of f over [a, b] where f may carry inverse-square-root
/// singularities at either endpoint. Substitutes t = a cos^2(theta)
/// + b sin^2(theta); the Jacobian cancels 1/sqrt((t-a)(b-t)) factors exactly,
/// so the transformed integrand is smooth and is handed to integrate().
double integrate_singular(const Integrand& f, double a, double b,
                          const QuadratureSpec& spec = {});

}  // namespace grushin
