#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "grushin/geometry.hpp"

namespace grushin {

enum class Orientation { vertical, horizontal };

/// Direct discretized minimization of the double-bubble perimeter functional
/// under the area constraint: the independent check that recovers the
/// closed-form minimizers without using them.
struct DiscreteProblem {
    Alpha alpha;
    double volume = 1.0;
    Orientation orientation = Orientation::vertical;
    std::size_t n_grid = 400;
    /// Right end of the fixed grid; must exceed the support of the minimizer
    /// (1.5x the closed-form radius when validating).
    double domain_cap = 2.0;
    double penalty_weight = 1e4;
    std::size_t max_iters = 200000;
    /// Convergence once the remaining preconditioned Newton displacement of
    /// every movable grid value is below this.
    double step_tol = 1e-7;

    void validate() const;  // throws DomainError
};

struct SolverReport {
    SampledProfile profile;
    double perimeter = 0.0;
    double area = 0.0;
    double support_radius = 0.0;
    double euler_lagrange_residual = 0.0;
    std::size_t iterations = 0;
    bool converged = false;

    std::string to_json() const;
};

/// Projected-gradient descent with backtracking line search on the penalized
/// functional; the free boundary is handled by nonnegativity projection on
/// the oversized grid and the support radius is read off afterwards. A final
/// multiplier refinement pass pushes the area error below 1e-6 * volume.
///
/// Reports converged = false (never throws) when step_tol is not reached;
/// the CLI turns that into a nonzero exit status.
SolverReport minimize(const DiscreteProblem& problem);

/// Same, recording the penalized objective after every accepted step
/// (monotone within each multiplier pass).
SolverReport minimize_with_trace(const DiscreteProblem& problem,
                                 std::vector<double>* objective_trace);

/// Value and analytic gradient of the discretized penalized objective at the
/// given grid values. Exposed for gradient verification.
double discrete_objective(const DiscreteProblem& problem,
                          const std::vector<double>& values,
                          double multiplier,
                          std::vector<double>* gradient);

struct EulerLagrangeFit {
    double k_hat = 0.0;
    double d_hat = 0.0;
    double residual = 0.0;  ///< max pointwise deviation from the affine fit
};

/// Least-squares affine fit of x -> f'(x)/sqrt(f'(x)^2 + x^{2a}) over the
/// interior of a vertical profile, with f' by central differences. The
/// minimizer satisfies this relation with slope k < 0 and intercept 1/2.
/// Throws DegenerateProfile when fewer than 8 interior points are usable.
EulerLagrangeFit euler_lagrange_fit(const SampledProfile& profile, Alpha alpha);

/// Extrapolates the transformed-plane interface slope to the axis:
/// lim f'(x)/x^a for vertical profiles, g(0)^a g'(0) for horizontal ones.
/// Both limits equal 1/sqrt(3) on the minimizers.
double transformed_angle_estimate(const SampledProfile& profile, Alpha alpha,
                                  Orientation orientation);

}  // namespace grushin
