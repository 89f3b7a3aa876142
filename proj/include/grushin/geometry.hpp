#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "grushin/quadrature.hpp"

namespace grushin {

/// Grushin exponent. Weights vertical boundary normals by |x|^alpha; alpha = 0
/// recovers the Euclidean plane.
struct Alpha {
    double value = 0.0;

    Alpha() = default;
    explicit Alpha(double v);  // throws DomainError unless v >= 0 and finite
};

struct Point {
    double x = 0.0;
    double y = 0.0;
};

/// Nonnegative function on an interval given by samples on a strictly
/// increasing grid, interpolated piecewise-linearly.
class SampledProfile {
public:
    SampledProfile(std::vector<double> xs, std::vector<double> ys);

    const std::vector<double>& xs() const { return xs_; }
    const std::vector<double>& ys() const { return ys_; }
    std::size_t size() const { return xs_.size(); }
    double x_min() const { return xs_.front(); }
    double x_max() const { return xs_.back(); }

    /// Piecewise-linear evaluation; throws DomainError outside [x_min, x_max].
    double operator()(double x) const;

private:
    std::vector<double> xs_;
    std::vector<double> ys_;
};

/// Grushin length of the graph {(x, p(x))}: integral of
/// sqrt(|x|^{2a} + p'(x)^2) over the domain, segment by segment.
double alpha_length_of_graph_over_x(const SampledProfile& profile, Alpha alpha,
                                    const QuadratureSpec& spec = {});

/// Same with the axes exchanged: the profile samples x = psi(y) and the
/// result is the integral of sqrt(1 + |psi(y)|^{2a} psi'(y)^2) dy.
double alpha_length_of_graph_over_y(const SampledProfile& profile, Alpha alpha,
                                    const QuadratureSpec& spec = {});

/// Lebesgue area below the profile (trapezoid rule, exact for the
/// piecewise-linear data).
double area_under_profile(const SampledProfile& profile);

/// Anisotropic dilation (x, y) -> (lambda x, lambda^{a+1} y). Area scales by
/// lambda^{a+2}, Grushin length by lambda^{a+1}. Throws DomainError for
/// lambda <= 0.
Point dilate(Point p, double lambda, Alpha alpha);

/// Coordinate change to the transformed plane,
/// (x, y) -> (sgn(x)|x|^{a+1}/(a+1), y), and its inverse. Grushin length
/// becomes Euclidean length there; Lebesgue area becomes the weighted area
/// with density |(a+1)xi|^{-a/(a+1)}.
Point to_transformed(Point p, Alpha alpha);
Point from_transformed(Point p, Alpha alpha);

/// Antiderivative of the transformed-plane weight |(a+1)xi|^{-a/(a+1)};
/// coincides with the first component of the inverse coordinate change.
double transform_weight_antiderivative(double xi, Alpha alpha);

/// Weighted area of {0 <= eta <= profile(xi), xi >= 0} in the transformed
/// plane. The xi = 0 weight singularity is integrated by the closed-form
/// antiderivative, so the result is exact for piecewise-linear profiles.
double weighted_area_of_transformed_profile(const SampledProfile& profile,
                                            Alpha alpha);

// Serialization. JSON: {"xs":[...],"ys":[...]}; CSV: two columns with an
// "x,y" header. Doubles print with 17 significant digits and round-trip
// exactly.
std::string profile_to_json(const SampledProfile& profile);
SampledProfile profile_from_json(const std::string& text);  // throws ParseError
std::string profile_to_csv(const SampledProfile& profile);
SampledProfile profile_from_csv(const std::string& text);  // throws ParseError

}  // namespace grushin
