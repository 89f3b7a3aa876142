#include "grushin/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

#include "grushin/errors.hpp"

namespace grushin {
namespace {

// 7-point Gauss / 15-point Kronrod pair on [-1, 1].
constexpr int kKronrodPoints = 8;  // nonnegative abscissae
constexpr double kXgk[kKronrodPoints] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769,
    0.741531185599394, 0.586087235467691, 0.405845151377397,
    0.207784955007898, 0.000000000000000};
constexpr double kWgk[kKronrodPoints] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728};
// Gauss weights (abscissae kXgk[1], kXgk[3], kXgk[5], kXgk[7]).
constexpr double kWg[4] = {0.129484966168870, 0.279705391489277,
                           0.381830050505119, 0.417959183673469};

struct Panel {
    double a, b;
    double value;
    double error;
    bool operator<(const Panel& other) const { return error < other.error; }
};

Panel evaluate_panel(const Integrand& f, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double resk = 0.0;
    double resg = 0.0;
    for (int j = 0; j < kKronrodPoints; ++j) {
        double fsum;
        if (j == kKronrodPoints - 1) {
            fsum = f(center);
        } else {
            fsum = f(center - half * kXgk[j]) + f(center + half * kXgk[j]);
        }
        if (!std::isfinite(fsum)) {
            throw NonFiniteIntegrand("integrand non-finite inside [" +
                                     std::to_string(a) + ", " + std::to_string(b) + "]");
        }
        resk += kWgk[j] * fsum;
        if (j % 2 == 1) resg += kWg[j / 2] * fsum;
    }
    Panel p;
    p.a = a;
    p.b = b;
    p.value = resk * half;
    p.error = std::abs(resk - resg) * half;
    return p;
}

}  // namespace

void QuadratureSpec::validate() const {
    if (!(abs_tol > 0.0) || !(rel_tol > 0.0)) {
        throw DomainError("quadrature tolerances must be positive");
    }
    if (max_subdivisions < 1) {
        throw DomainError("max_subdivisions must be >= 1");
    }
}

double integrate(const Integrand& f, double a, double b, const QuadratureSpec& spec) {
    spec.validate();
    if (!(std::isfinite(a) && std::isfinite(b))) {
        throw DomainError("integration endpoints must be finite");
    }
    if (a > b) throw DomainError("integrate requires a <= b");
    if (a == b) return 0.0;

    std::priority_queue<Panel> queue;
    queue.push(evaluate_panel(f, a, b));
    double total = queue.top().value;
    double err = queue.top().error;
    int subdivisions = 0;
    while (err > std::max(spec.abs_tol, spec.rel_tol * std::abs(total))) {
        if (subdivisions >= spec.max_subdivisions) {
            throw NonConvergence("integrate: error target not met after " +
                                 std::to_string(subdivisions) + " subdivisions");
        }
        Panel worst = queue.top();
        const double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b) {
            // interval at machine resolution; nothing left to refine
            throw NonConvergence("integrate: interval exhausted at machine precision");
        }
        queue.pop();
        Panel left = evaluate_panel(f, worst.a, mid);
        Panel right = evaluate_panel(f, mid, worst.b);
        total += left.value + right.value - worst.value;
        err += left.error + right.error - worst.error;
        queue.push(left);
        queue.push(right);
        ++subdivisions;
    }
    return total;
}

double integrate_singular(const Integrand& f, double a, double b,
                          const QuadratureSpec& spec) {
    spec.validate();
    if (a > b) throw DomainError("integrate_singular requires a <= b");
    if (a == b) return 0.0;
    const double width = b - a;
    auto transformed = [&](double theta) {
        const double s = std::sin(theta);
        const double c = std::cos(theta);
        const double t = a * c * c + b * s * s;
        // Rounding can park t on a singular endpoint; the Jacobian vanishes
        // there, so the contribution is zero.
        if (t <= a || t >= b) return 0.0;
        return f(t) * width * 2.0 * s * c;
    };
    constexpr double kHalfPi = 1.57079632679489662;
    return integrate(transformed, 0.0, kHalfPi, spec);
}

}  // namespace grushin
