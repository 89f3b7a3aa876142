#include "grushin/rearrange.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

#include <json.hpp>

#include "grushin/errors.hpp"

namespace grushin {
namespace {

using Interval1D = std::pair<double, double>;

bool identically_equal(double a_lo, double a_hi, double b_lo, double b_hi) {
    return a_lo == b_lo && a_hi == b_hi;
}

// Drops degenerate intervals (u == v identically: null slivers carry no
// essential boundary) and merges neighbours that touch identically
// (v_k == u_{k+1} on the whole slab: the shared graph is interior).
std::vector<SlabInterval> canonical_intervals(const Slab& slab) {
    std::vector<SlabInterval> out;
    for (const SlabInterval& iv : slab.intervals) {
        if (identically_equal(iv.u_lo, iv.u_hi, iv.v_lo, iv.v_hi)) continue;
        if (!out.empty() &&
            identically_equal(out.back().v_lo, out.back().v_hi, iv.u_lo, iv.u_hi)) {
            out.back().v_lo = iv.v_lo;
            out.back().v_hi = iv.v_hi;
        } else {
            out.push_back(iv);
        }
    }
    return out;
}

// Section of the slab at parameter t in [0, 1] (t = 0 bottom, 1 top), as a
// sorted list of nondegenerate disjoint intervals.
std::vector<Interval1D> section_at(const std::vector<SlabInterval>& intervals,
                                   double t) {
    std::vector<Interval1D> out;
    for (const SlabInterval& iv : intervals) {
        const double u = iv.u_at(t);
        const double v = iv.v_at(t);
        if (v > u) {
            if (!out.empty() && out.back().second >= u) {
                out.back().second = std::max(out.back().second, v);
            } else {
                out.emplace_back(u, v);
            }
        }
    }
    return out;
}

double total_length(const std::vector<Interval1D>& a) {
    double sum = 0.0;
    for (const auto& iv : a) sum += iv.second - iv.first;
    return sum;
}

double intersection_length(const std::vector<Interval1D>& a,
                           const std::vector<Interval1D>& b) {
    double sum = 0.0;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        const double lo = std::max(a[i].first, b[j].first);
        const double hi = std::min(a[i].second, b[j].second);
        if (hi > lo) sum += hi - lo;
        if (a[i].second < b[j].second) {
            ++i;
        } else {
            ++j;
        }
    }
    return sum;
}

double symmetric_difference_length(const std::vector<Interval1D>& a,
                                   const std::vector<Interval1D>& b) {
    return total_length(a) + total_length(b) - 2.0 * intersection_length(a, b);
}

double lambda_at(const Slab& slab, double t) {
    double sum = 0.0;
    for (const SlabInterval& iv : slab.intervals) sum += iv.v_at(t) - iv.u_at(t);
    return sum;
}

// phi at a slab endpoint: left edge of the first nondegenerate interval.
double phi_at(const std::vector<SlabInterval>& canon, double t) {
    if (canon.empty()) return std::numeric_limits<double>::infinity();
    return canon.front().u_at(t);
}

struct PerimeterParts {
    double total = 0.0;
    double trace = 0.0;
};

PerimeterParts perimeter_parts(const SlabSet& s) {
    PerimeterParts parts;
    const auto& slabs = s.slabs();
    std::vector<std::vector<SlabInterval>> canon(slabs.size());
    for (std::size_t i = 0; i < slabs.size(); ++i) {
        canon[i] = canonical_intervals(slabs[i]);
    }
    double upper = 0.0;  // everything in {y > 0}; doubled at the end
    double upper_trace = 0.0;
    for (std::size_t i = 0; i < slabs.size(); ++i) {
        const double h = slabs[i].height();
        for (const SlabInterval& iv : canon[i]) {
            upper += std::hypot(h, iv.u_hi - iv.u_lo);
            upper += std::hypot(h, iv.v_hi - iv.v_lo);
        }
        if (!canon[i].empty() && canon[i].front().u_lo == 0.0 &&
            canon[i].front().u_hi == 0.0) {
            upper_trace += h;
        }
        // horizontal closures below this slab
        if (i == 0) {
            if (slabs[i].y_lo > 0.0) {
                upper += total_length(section_at(canon[i], 0.0));
            }
        } else if (slabs[i - 1].y_hi == slabs[i].y_lo) {
            upper += symmetric_difference_length(section_at(canon[i - 1], 1.0),
                                                 section_at(canon[i], 0.0));
        } else {
            upper += total_length(section_at(canon[i - 1], 1.0));
            upper += total_length(section_at(canon[i], 0.0));
        }
    }
    if (!slabs.empty()) {
        upper += total_length(section_at(canon.back(), 1.0));
    }
    parts.total = 2.0 * upper;
    parts.trace = 2.0 * upper_trace;
    return parts;
}

// Monotone-slice validation behind rearrange(): slabs contiguous from y = 0,
// lambda non-increasing and phi non-decreasing across junctions. (Inside each
// slab both are monotone by the type invariants.)
void validate_schwarz(const SlabSet& s) {
    const auto& slabs = s.slabs();
    if (slabs.empty()) throw NotSchwarzSymmetric("empty slab set");
    if (slabs.front().y_lo != 0.0) {
        throw NotSchwarzSymmetric("set must rest on the x-axis (first y_lo == 0)");
    }
    constexpr double kSlack = 1e-12;
    for (std::size_t i = 1; i < slabs.size(); ++i) {
        if (slabs[i - 1].y_hi != slabs[i].y_lo) {
            throw NotSchwarzSymmetric("slabs must be contiguous");
        }
        const double lam_below = lambda_at(slabs[i - 1], 1.0);
        const double lam_above = lambda_at(slabs[i], 0.0);
        if (lam_above > lam_below + kSlack) {
            throw NotSchwarzSymmetric("section length increases with |y|");
        }
        const double phi_below = phi_at(canonical_intervals(slabs[i - 1]), 1.0);
        const double phi_above = phi_at(canonical_intervals(slabs[i]), 0.0);
        if (phi_above < phi_below - kSlack) {
            throw NotSchwarzSymmetric("left edge decreases with |y|");
        }
    }
}

// Half-height profile of the mirrored set: m(x) is the measure of
// {y > 0 : x in section(y)}. m is affine on the open pieces between the
// collected corner abscissae but can jump at them (vertical edges), so each
// piece stores its one-sided limits.
struct HalfHeight {
    struct Piece {
        double x_lo, x_hi;
        double m_lo, m_hi;  // one-sided limits at the piece ends
    };
    std::vector<Piece> pieces;
};

HalfHeight half_height_profile(const SlabSet& s) {
    std::vector<double> xs;
    for (const Slab& slab : s.slabs()) {
        for (const SlabInterval& iv : slab.intervals) {
            xs.push_back(iv.u_lo);
            xs.push_back(iv.u_hi);
            xs.push_back(iv.v_lo);
            xs.push_back(iv.v_hi);
        }
    }
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

    auto height_at = [&](double x) {
        double m = 0.0;
        for (const Slab& slab : s.slabs()) {
            for (const SlabInterval& iv : slab.intervals) {
                double tu;  // largest t with u(t) <= x
                if (iv.u_lo > x) {
                    tu = 0.0;
                } else if (iv.u_hi <= x) {
                    tu = 1.0;
                } else {
                    tu = (x - iv.u_lo) / (iv.u_hi - iv.u_lo);
                }
                double tv;  // largest t with v(t) >= x
                if (iv.v_lo < x) {
                    tv = 0.0;
                } else if (iv.v_hi >= x) {
                    tv = 1.0;
                } else {
                    tv = (x - iv.v_lo) / (iv.v_hi - iv.v_lo);
                }
                const double t = std::min(tu, tv);
                if (t > 0.0) m += slab.height() * t;
            }
        }
        return m;
    };

    HalfHeight hh;
    for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
        HalfHeight::Piece piece;
        piece.x_lo = xs[i];
        piece.x_hi = xs[i + 1];
        // two interior samples recover the affine piece and its limits
        const double third = (xs[i + 1] - xs[i]) / 3.0;
        const double m1 = height_at(xs[i] + third);
        const double m2 = height_at(xs[i + 1] - third);
        piece.m_lo = std::max(0.0, 2.0 * m1 - m2);
        piece.m_hi = std::max(0.0, 2.0 * m2 - m1);
        hh.pieces.push_back(piece);
    }
    return hh;
}

// Re-slices the subgraph {0 < y < m(x)} into slabs. Level grid = all
// one-sided m-limits, so every affine piece and every jump crosses each band
// fully; boundaries inside a band are either affine crossings or vertical
// edges at a piece junction.
SlabSet restack_half_height(HalfHeight hh) {
    std::vector<double> levels{0.0};
    double scale = 1.0;
    for (const auto& piece : hh.pieces) {
        levels.push_back(piece.m_lo);
        levels.push_back(piece.m_hi);
        scale = std::max({scale, piece.m_lo, piece.m_hi});
    }
    std::sort(levels.begin(), levels.end());
    // merge levels that differ only by arithmetic dust, then snap the piece
    // limits onto the merged grid so crossing detection stays exact
    const double eps = 1e-12 * scale;
    std::vector<double> merged;
    for (double level : levels) {
        if (merged.empty() || level - merged.back() > eps) merged.push_back(level);
    }
    levels = merged;
    auto snap = [&](double value) {
        auto it = std::lower_bound(levels.begin(), levels.end(), value);
        if (it == levels.end()) return levels.back();
        if (it != levels.begin() && value - *(it - 1) < *it - value) --it;
        return *it;
    };
    for (auto& piece : hh.pieces) {
        piece.m_lo = snap(piece.m_lo);
        piece.m_hi = snap(piece.m_hi);
    }

    std::vector<Slab> slabs;
    for (std::size_t b = 0; b + 1 < levels.size(); ++b) {
        const double lo = levels[b];
        const double hi = levels[b + 1];
        Slab slab;
        slab.y_lo = lo;
        slab.y_hi = hi;
        bool inside = false;
        double prev_value = 0.0;
        double prev_x = hh.pieces.empty() ? 0.0 : hh.pieces.front().x_lo;
        SlabInterval current;
        auto open_at = [&](double u_at_lo, double u_at_hi) {
            current = SlabInterval{};
            current.u_lo = u_at_lo;
            current.u_hi = std::max(u_at_hi, u_at_lo);
            inside = true;
        };
        auto close_at = [&](double v_at_lo, double v_at_hi) {
            current.v_lo = std::max(v_at_lo, current.u_lo);
            current.v_hi = std::min(std::max(v_at_hi, current.u_hi), current.v_lo);
            slab.intervals.push_back(current);
            inside = false;
        };
        for (const auto& piece : hh.pieces) {
            // jump at the junction (or at the domain edge before the first piece)
            if (!inside && prev_value <= lo && piece.m_lo >= hi) {
                open_at(piece.x_lo, piece.x_lo);
            } else if (inside && prev_value >= hi && piece.m_lo <= lo) {
                close_at(prev_x, prev_x);
            }
            // affine crossing inside the piece
            if (piece.m_lo != piece.m_hi) {
                auto cross = [&](double level) {
                    return piece.x_lo + (level - piece.m_lo) *
                                            (piece.x_hi - piece.x_lo) /
                                            (piece.m_hi - piece.m_lo);
                };
                if (!inside && piece.m_lo <= lo && piece.m_hi >= hi) {
                    open_at(cross(lo), cross(hi));
                } else if (inside && piece.m_lo >= hi && piece.m_hi <= lo) {
                    close_at(cross(lo), cross(hi));
                }
            }
            prev_value = piece.m_hi;
            prev_x = piece.x_hi;
        }
        if (inside) close_at(prev_x, prev_x);  // jump to 0 past the last piece
        if (!slab.intervals.empty()) slabs.push_back(std::move(slab));
    }
    return SlabSet(std::move(slabs));
}

double interval_weighted_strip(double y_lo, double y_hi, double e_lo, double e_hi,
                               Alpha alpha) {
    // integral over the slab of W(e(y)) dy, W the weight antiderivative
    const double a = alpha.value;
    const double h = y_hi - y_lo;
    auto W = [&](double xi) { return transform_weight_antiderivative(xi, alpha); };
    if (e_lo == e_hi) return h * W(e_lo);
    auto V = [&](double xi) {
        return std::pow(a + 1.0, 1.0 / (a + 1.0)) * (a + 1.0) / (a + 2.0) *
               std::pow(xi, (a + 2.0) / (a + 1.0));
    };
    return h * (V(e_hi) - V(e_lo)) / (e_hi - e_lo);
}

}  // namespace

SlabSet::SlabSet(std::vector<Slab> slabs) : slabs_(std::move(slabs)) {
    for (std::size_t i = 0; i < slabs_.size(); ++i) {
        const Slab& slab = slabs_[i];
        if (!(slab.y_lo >= 0.0) || !(slab.y_hi > slab.y_lo)) {
            throw DomainError("slab requires 0 <= y_lo < y_hi");
        }
        if (i > 0 && slab.y_lo < slabs_[i - 1].y_hi) {
            throw DomainError("slabs must be sorted and non-overlapping");
        }
        if (slab.intervals.empty()) {
            throw DomainError("slab carries no intervals");
        }
        double prev_v_lo = 0.0, prev_v_hi = 0.0;
        for (const SlabInterval& iv : slab.intervals) {
            if (!(iv.u_lo >= prev_v_lo) || !(iv.u_hi >= prev_v_hi)) {
                throw DomainError("slab intervals must be ordered left to right");
            }
            if (!(iv.v_lo >= iv.u_lo) || !(iv.v_hi >= iv.u_hi)) {
                throw DomainError("interval requires u <= v pointwise");
            }
            if (iv.u_hi < iv.u_lo) {
                throw DomainError("left edges must be non-decreasing in |y|");
            }
            if (iv.v_hi > iv.v_lo) {
                throw DomainError("right edges must be non-increasing in |y|");
            }
            prev_v_lo = iv.v_lo;
            prev_v_hi = iv.v_hi;
        }
    }
}

double SlabFunction::operator()(double y) const {
    for (const Piece& p : pieces) {
        if (y >= p.y_lo && y <= p.y_hi) {
            const double t = p.y_hi > p.y_lo ? (y - p.y_lo) / (p.y_hi - p.y_lo) : 0.0;
            return p.v_lo + t * (p.v_hi - p.v_lo);
        }
    }
    throw DomainError("slab function evaluated outside its slab grid");
}

SliceFunctions slice_functions(const SlabSet& s) {
    SliceFunctions out;
    for (const Slab& slab : s.slabs()) {
        const auto canon = canonical_intervals(slab);
        out.lambda.pieces.push_back(
            {slab.y_lo, slab.y_hi, lambda_at(slab, 0.0), lambda_at(slab, 1.0)});
        out.phi.pieces.push_back(
            {slab.y_lo, slab.y_hi, phi_at(canon, 0.0), phi_at(canon, 1.0)});
    }
    return out;
}

double StepFunction::operator()(double y) const {
    const double t = std::abs(y);
    double sum = 0.0;
    for (std::size_t k = 0; k < thresholds.size(); ++k) {
        if (thresholds[k] < t) sum += jumps[k];
    }
    return sum;
}

StepFunction translation_function(const SlabSet& s) {
    StepFunction tau;
    const auto& slabs = s.slabs();
    for (std::size_t i = 1; i < slabs.size(); ++i) {
        if (slabs[i - 1].y_hi != slabs[i].y_lo) continue;  // gap: no junction
        const auto below = canonical_intervals(slabs[i - 1]);
        const auto above = canonical_intervals(slabs[i]);
        const double phi_jump = phi_at(above, 0.0) - phi_at(below, 1.0);
        const double lambda_drop = lambda_at(slabs[i - 1], 1.0) - lambda_at(slabs[i], 0.0);
        const double j = std::max(0.0, phi_jump - lambda_drop);
        if (j > 0.0) {
            tau.thresholds.push_back(slabs[i].y_lo);
            tau.jumps.push_back(j);
        }
    }
    return tau;
}

SlabSet rearrange(const SlabSet& s) {
    validate_schwarz(s);
    const StepFunction tau = translation_function(s);
    std::vector<Slab> out;
    out.reserve(s.slabs().size());
    for (const Slab& slab : s.slabs()) {
        double shift = 0.0;
        for (std::size_t k = 0; k < tau.thresholds.size(); ++k) {
            if (tau.thresholds[k] <= slab.y_lo) shift += tau.jumps[k];
        }
        const auto canon = canonical_intervals(slab);
        SlabInterval iv;
        iv.u_lo = std::max(0.0, phi_at(canon, 0.0) - shift);
        iv.u_hi = std::max(0.0, phi_at(canon, 1.0) - shift);
        iv.v_lo = iv.u_lo + lambda_at(slab, 0.0);
        iv.v_hi = iv.u_hi + lambda_at(slab, 1.0);
        Slab rearranged;
        rearranged.y_lo = slab.y_lo;
        rearranged.y_hi = slab.y_hi;
        rearranged.intervals.push_back(iv);
        out.push_back(std::move(rearranged));
    }
    return SlabSet(std::move(out));
}

double perimeter(const SlabSet& s) { return perimeter_parts(s).total; }

double perimeter_open(const SlabSet& s) {
    const PerimeterParts parts = perimeter_parts(s);
    return parts.total - parts.trace;
}

double trace(const SlabSet& s) { return perimeter_parts(s).trace; }

double area(const SlabSet& s) {
    double sum = 0.0;
    for (const Slab& slab : s.slabs()) {
        sum += slab.height() * (lambda_at(slab, 0.0) + lambda_at(slab, 1.0));
    }
    return sum;  // trapezoid halving cancels against the mirror doubling
}

double weighted_area(const SlabSet& s, Alpha alpha) {
    double sum = 0.0;
    for (const Slab& slab : s.slabs()) {
        for (const SlabInterval& iv : slab.intervals) {
            sum += interval_weighted_strip(slab.y_lo, slab.y_hi, iv.v_lo, iv.v_hi, alpha);
            sum -= interval_weighted_strip(slab.y_lo, slab.y_hi, iv.u_lo, iv.u_hi, alpha);
        }
    }
    return 2.0 * sum;
}

GapCheck quantitative_gap_check(const SlabSet& before, const SlabSet& after) {
    double d_measure = 0.0;
    for (const Slab& slab : before.slabs()) {
        if (canonical_intervals(slab).size() > 1) d_measure += 2.0 * slab.height();
    }
    const double p_before = perimeter(before);
    const double p_after = perimeter(after);
    GapCheck check;
    check.lhs = (p_before - p_after) * p_before;
    check.rhs = d_measure * d_measure;
    check.holds = check.lhs >= check.rhs - 1e-9;
    return check;
}

ElementaryInequality elementary_inequality_check(
    const std::vector<std::array<double, 2>>& a) {
    if (a.empty()) throw DomainError("elementary inequality requires N >= 1");
    double sum_roots = 0.0;
    double sx = 0.0, sy = 0.0;
    for (const auto& v : a) {
        sum_roots += std::sqrt(1.0 + v[0] * v[0] + v[1] * v[1]);
        sx += v[0];
        sy += v[1];
    }
    const double root_of_sum = std::sqrt(1.0 + sx * sx + sy * sy);
    ElementaryInequality out;
    out.lhs = sum_roots - root_of_sum;
    const double n_minus_1 = static_cast<double>(a.size()) - 1.0;
    out.rhs1 = n_minus_1 / (sum_roots + root_of_sum);
    out.rhs2 = n_minus_1 / (2.0 * sum_roots);
    return out;
}

SlabSet steiner_symmetrize_vertical(const SlabSet& s) {
    return restack_half_height(half_height_profile(s));
}

SlabSet x_symmetrize(const SlabSet& s) {
    std::vector<Slab> out;
    out.reserve(s.slabs().size());
    for (const Slab& slab : s.slabs()) {
        SlabInterval iv;
        iv.u_lo = iv.u_hi = 0.0;
        iv.v_lo = lambda_at(slab, 0.0);
        iv.v_hi = lambda_at(slab, 1.0);
        Slab next;
        next.y_lo = slab.y_lo;
        next.y_hi = slab.y_hi;
        next.intervals.push_back(iv);
        out.push_back(std::move(next));
    }
    return SlabSet(std::move(out));
}

RearrangementReport rearrangement_report(const SlabSet& before, Alpha alpha) {
    const SlabSet after = rearrange(before);
    RearrangementReport report;
    report.original_perimeter = perimeter(before);
    report.rearranged_perimeter = perimeter(after);
    report.original_open_perimeter = perimeter_open(before);
    report.rearranged_open_perimeter = perimeter_open(after);
    const GapCheck gap = quantitative_gap_check(before, after);
    report.noninterval_measure = std::sqrt(gap.rhs);
    report.area = area(before);
    report.weighted_area_original = weighted_area(before, alpha);
    report.weighted_area_rearranged = weighted_area(after, alpha);
    return report;
}

std::string slabset_to_json(const SlabSet& s) {
    nlohmann::json j;
    j["slabs"] = nlohmann::json::array();
    for (const Slab& slab : s.slabs()) {
        nlohmann::json js;
        js["y_lo"] = slab.y_lo;
        js["y_hi"] = slab.y_hi;
        js["intervals"] = nlohmann::json::array();
        for (const SlabInterval& iv : slab.intervals) {
            js["intervals"].push_back({{"u_lo", iv.u_lo},
                                       {"u_hi", iv.u_hi},
                                       {"v_lo", iv.v_lo},
                                       {"v_hi", iv.v_hi}});
        }
        j["slabs"].push_back(std::move(js));
    }
    return j.dump();
}

SlabSet slabset_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("slab set JSON: ") + e.what());
    }
    try {
        std::vector<Slab> slabs;
        for (const auto& js : j.at("slabs")) {
            Slab slab;
            slab.y_lo = js.at("y_lo").get<double>();
            slab.y_hi = js.at("y_hi").get<double>();
            for (const auto& ji : js.at("intervals")) {
                SlabInterval iv;
                iv.u_lo = ji.at("u_lo").get<double>();
                iv.u_hi = ji.at("u_hi").get<double>();
                iv.v_lo = ji.at("v_lo").get<double>();
                iv.v_hi = ji.at("v_hi").get<double>();
                slab.intervals.push_back(iv);
            }
            slabs.push_back(std::move(slab));
        }
        return SlabSet(std::move(slabs));
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("slab set JSON: ") + e.what());
    }
}

}  // namespace grushin
