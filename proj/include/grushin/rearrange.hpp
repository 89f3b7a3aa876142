#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "grushin/geometry.hpp"

namespace grushin {

/// One interval (u(y), v(y)) of a slab section. Endpoints are affine in y and
/// stored by their values at the slab's bottom and top.
struct SlabInterval {
    double u_lo = 0.0, u_hi = 0.0;
    double v_lo = 0.0, v_hi = 0.0;

    double u_at(double t) const { return u_lo + t * (u_hi - u_lo); }
    double v_at(double t) const { return v_lo + t * (v_hi - v_lo); }
};

struct Slab {
    double y_lo = 0.0, y_hi = 0.0;
    std::vector<SlabInterval> intervals;

    double height() const { return y_hi - y_lo; }
};

/// Polyhedral set in the closed right half-plane, described slab-by-slab as a
/// finite union of intervals with affine endpoints. Only the upper half
/// (y >= 0) is stored; the set is understood as mirrored across the x-axis,
/// every measure and length is reported doubled, and a slab resting on y = 0
/// contributes no interface there.
///
/// Invariants enforced at construction: 0 <= y_lo < y_hi per slab; slabs
/// sorted and non-overlapping; within a slab 0 <= u_1 <= v_1 <= u_2 <= ...
/// pointwise, with each u non-decreasing and each v non-increasing in y.
class SlabSet {
public:
    explicit SlabSet(std::vector<Slab> slabs);

    const std::vector<Slab>& slabs() const { return slabs_; }
    bool empty() const { return slabs_.empty(); }

private:
    std::vector<Slab> slabs_;
};

/// Piecewise-affine function on the slab grid of a SlabSet.
struct SlabFunction {
    struct Piece {
        double y_lo, y_hi;
        double v_lo, v_hi;
    };
    std::vector<Piece> pieces;

    /// Value at y within some piece; DomainError if y is uncovered.
    double operator()(double y) const;
};

struct SliceFunctions {
    SlabFunction lambda;  ///< section length per level
    SlabFunction phi;     ///< essential infimum per level
};

/// Per-slab section length and left edge, both exactly piecewise-affine.
SliceFunctions slice_functions(const SlabSet& s);

/// Non-decreasing step function of |y|, left-continuous on the slab grid.
struct StepFunction {
    std::vector<double> thresholds;  ///< jump locations d_k
    std::vector<double> jumps;       ///< jump sizes j_k >= 0

    /// Value at y: sum of jumps with threshold < |y|.
    double operator()(double y) const;
};

/// Accumulated translation correcting the jumps of phi that exceed the
/// simultaneous drop of lambda at each slab junction.
StepFunction translation_function(const SlabSet& s);

/// Horizontal rearrangement: per slab, the section becomes the single
/// interval (phi - tau, phi - tau + lambda). Preserves area exactly, never
/// increases perimeter (open or closed), and is the identity on x-convex
/// inputs. Throws NotSchwarzSymmetric when the input fails the monotone
/// slice validation.
SlabSet rearrange(const SlabSet& s);

/// Euclidean perimeter of the mirrored set: graph segments plus the
/// horizontal closures contributed by mismatched interval families at slab
/// junctions and by the caps at the ends of the slab stack.
double perimeter(const SlabSet& s);

/// Perimeter inside the open half-plane {x > 0}.
double perimeter_open(const SlabSet& s);

/// Length of the boundary on the axis {x = 0}: slabs whose first left edge
/// vanishes identically.
double trace(const SlabSet& s);

/// Lebesgue area of the mirrored set (exact piecewise-affine arithmetic).
double area(const SlabSet& s);

/// Area against the transformed-plane weight |(a+1)xi|^{-a/(a+1)}, evaluated
/// interval-by-interval through the closed-form antiderivative.
double weighted_area(const SlabSet& s, Alpha alpha);

struct GapCheck {
    double lhs;   ///< (P(E) - P(E*)) * P(E)
    double rhs;   ///< L1(D)^2, D = levels whose section is not an interval
    bool holds;
};

/// Quantitative form of the rearrangement inequality.
GapCheck quantitative_gap_check(const SlabSet& before, const SlabSet& after);

struct ElementaryInequality {
    double lhs;   ///< sum sqrt(1+|a_k|^2) - sqrt(1+|sum a_k|^2)
    double rhs1;  ///< (N-1) / (sum sqrt(1+|a_k|^2) + sqrt(1+|sum a_k|^2))
    double rhs2;  ///< (N-1) / (2 sum sqrt(1+|a_k|^2))
};

/// The two elementary lower bounds behind the rearrangement proof;
/// lhs >= rhs1 >= rhs2 >= 0 for any list of vectors.
ElementaryInequality elementary_inequality_check(
    const std::vector<std::array<double, 2>>& a);

/// Steiner symmetrization in the y-direction: every vertical section of the
/// mirrored set is replaced by the centered interval of the same length.
/// Preserves area; never increases Euclidean perimeter; the output sections
/// are nested.
SlabSet steiner_symmetrize_vertical(const SlabSet& s);

/// Symmetrization in the x-direction against the axis: per slab the section
/// becomes the single interval (0, lambda); equivalently, Steiner
/// symmetrization of the x-mirrored double restricted back to the
/// half-plane. Preserves area exactly; never increases the open-half-plane
/// perimeter (the axis edge it creates is interior to the mirrored double);
/// never decreases the weighted area.
SlabSet x_symmetrize(const SlabSet& s);

struct RearrangementReport {
    double original_perimeter = 0.0;
    double rearranged_perimeter = 0.0;
    double original_open_perimeter = 0.0;
    double rearranged_open_perimeter = 0.0;
    double noninterval_measure = 0.0;  ///< L1(D)
    double area = 0.0;
    double weighted_area_original = 0.0;
    double weighted_area_rearranged = 0.0;
};

RearrangementReport rearrangement_report(const SlabSet& before, Alpha alpha);

// JSON schema:
// {"slabs":[{"y_lo":..,"y_hi":..,"intervals":[{"u_lo":..,"u_hi":..,
//   "v_lo":..,"v_hi":..},..]},..]}
std::string slabset_to_json(const SlabSet& s);
SlabSet slabset_from_json(const std::string& text);  // throws ParseError

}  // namespace grushin
