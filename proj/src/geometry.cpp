#include "grushin/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "grushin/errors.hpp"

namespace grushin {
namespace {

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

// |x|^{2a}, with 0^0 = 1 so that alpha = 0 stays Euclidean on the axis.
double weight_sq(double x, double alpha) {
    if (alpha == 0.0) return 1.0;
    return std::pow(std::abs(x), 2.0 * alpha);
}

// Integral of sqrt(|x|^{2a} + s^2) over [x0, x1], splitting at 0 where the
// weight has a corner.
double segment_alpha_length(double x0, double x1, double s, double alpha,
                            const QuadratureSpec& spec) {
    auto integrand = [=](double x) { return std::hypot(std::pow(std::abs(x), alpha), s); };
    if (x0 < 0.0 && x1 > 0.0) {
        return integrate(integrand, x0, 0.0, spec) + integrate(integrand, 0.0, x1, spec);
    }
    return integrate(integrand, x0, x1, spec);
}

}  // namespace

Alpha::Alpha(double v) : value(v) {
    if (!(std::isfinite(v)) || v < 0.0) {
        throw DomainError("alpha must be finite and >= 0");
    }
}

SampledProfile::SampledProfile(std::vector<double> xs, std::vector<double> ys)
    : xs_(std::move(xs)), ys_(std::move(ys)) {
    if (xs_.size() < 2 || xs_.size() != ys_.size()) {
        throw DomainError("profile needs matching xs/ys with at least two samples");
    }
    for (std::size_t i = 0; i < xs_.size(); ++i) {
        if (!std::isfinite(xs_[i]) || !std::isfinite(ys_[i])) {
            throw DomainError("profile samples must be finite");
        }
        if (ys_[i] < 0.0) throw DomainError("profile values must be nonnegative");
        if (i > 0 && !(xs_[i] > xs_[i - 1])) {
            throw DomainError("profile grid must be strictly increasing");
        }
    }
}

double SampledProfile::operator()(double x) const {
    if (x < xs_.front() || x > xs_.back()) {
        throw DomainError("profile evaluated outside its domain");
    }
    auto it = std::upper_bound(xs_.begin(), xs_.end(), x);
    if (it == xs_.end()) return ys_.back();
    std::size_t i = static_cast<std::size_t>(it - xs_.begin());
    if (i == 0) return ys_.front();
    const double t = (x - xs_[i - 1]) / (xs_[i] - xs_[i - 1]);
    return ys_[i - 1] + t * (ys_[i] - ys_[i - 1]);
}

double alpha_length_of_graph_over_x(const SampledProfile& profile, Alpha alpha,
                                    const QuadratureSpec& spec) {
    const auto& xs = profile.xs();
    const auto& ys = profile.ys();
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
        const double slope = (ys[i + 1] - ys[i]) / (xs[i + 1] - xs[i]);
        total += segment_alpha_length(xs[i], xs[i + 1], slope, alpha.value, spec);
    }
    return total;
}

double alpha_length_of_graph_over_y(const SampledProfile& profile, Alpha alpha,
                                    const QuadratureSpec& spec) {
    const auto& ys_grid = profile.xs();  // here the grid runs along y
    const auto& psi = profile.ys();
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < ys_grid.size(); ++i) {
        const double dy = ys_grid[i + 1] - ys_grid[i];
        const double slope = (psi[i + 1] - psi[i]) / dy;
        if (slope == 0.0) {
            total += dy;  // weight multiplies psi', so constants cost plain length
            continue;
        }
        const double a = alpha.value;
        auto integrand = [=](double y) {
            const double x = psi[i] + slope * (y - ys_grid[i]);
            return std::sqrt(1.0 + weight_sq(x, a) * slope * slope);
        };
        total += integrate(integrand, ys_grid[i], ys_grid[i + 1], spec);
    }
    return total;
}

double area_under_profile(const SampledProfile& profile) {
    const auto& xs = profile.xs();
    const auto& ys = profile.ys();
    double area = 0.0;
    for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
        area += 0.5 * (ys[i] + ys[i + 1]) * (xs[i + 1] - xs[i]);
    }
    return area;
}

Point dilate(Point p, double lambda, Alpha alpha) {
    if (!(lambda > 0.0)) throw DomainError("dilation requires lambda > 0");
    return {lambda * p.x, std::pow(lambda, alpha.value + 1.0) * p.y};
}

Point to_transformed(Point p, Alpha alpha) {
    const double a = alpha.value;
    const double mag = std::pow(std::abs(p.x), a + 1.0) / (a + 1.0);
    return {std::copysign(mag, p.x), p.y};
}

Point from_transformed(Point p, Alpha alpha) {
    const double a = alpha.value;
    const double mag = std::pow((a + 1.0) * std::abs(p.x), 1.0 / (a + 1.0));
    return {std::copysign(mag, p.x), p.y};
}

double transform_weight_antiderivative(double xi, Alpha alpha) {
    return from_transformed({xi, 0.0}, alpha).x;
}

double weighted_area_of_transformed_profile(const SampledProfile& profile,
                                            Alpha alpha) {
    if (profile.x_min() < 0.0) {
        throw DomainError("transformed profile must live on xi >= 0");
    }
    const double a = alpha.value;
    const auto& xs = profile.xs();
    const auto& ys = profile.ys();
    // W below is the weight's antiderivative and V the antiderivative of W,
    // so each linear segment integrates in closed form.
    auto W = [&](double xi) { return transform_weight_antiderivative(xi, alpha); };
    auto V = [&](double xi) {  // antiderivative of xi * weight(xi)
        return std::pow(a + 1.0, 1.0 / (a + 1.0)) / (a + 2.0) *
               std::pow(xi, (a + 2.0) / (a + 1.0));
    };
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
        const double d = xs[i + 1] - xs[i];
        const double slope = (ys[i + 1] - ys[i]) / d;
        const double c = ys[i] - slope * xs[i];  // profile(xi) = c + slope*xi
        total += c * (W(xs[i + 1]) - W(xs[i]));
        if (slope != 0.0) total += slope * (V(xs[i + 1]) - V(xs[i]));
    }
    return total;
}

std::string profile_to_json(const SampledProfile& profile) {
    nlohmann::json j;
    j["xs"] = profile.xs();
    j["ys"] = profile.ys();
    return j.dump();
}

SampledProfile profile_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("profile JSON: ") + e.what());
    }
    try {
        std::vector<double> xs = j.at("xs").get<std::vector<double>>();
        std::vector<double> ys = j.at("ys").get<std::vector<double>>();
        return SampledProfile(std::move(xs), std::move(ys));
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("profile JSON: ") + e.what());
    }
}

std::string profile_to_csv(const SampledProfile& profile) {
    std::string out = "x,y\n";
    for (std::size_t i = 0; i < profile.size(); ++i) {
        out += format_double(profile.xs()[i]);
        out += ',';
        out += format_double(profile.ys()[i]);
        out += '\n';
    }
    return out;
}

SampledProfile profile_from_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<double> xs, ys;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        if (line_no == 1 && line.rfind("x,", 0) == 0) continue;  // header
        const auto comma = line.find(',');
        if (comma == std::string::npos) {
            throw ParseError("profile CSV line " + std::to_string(line_no) +
                             ": expected two comma-separated columns");
        }
        try {
            std::size_t used = 0;
            xs.push_back(std::stod(line.substr(0, comma), &used));
            ys.push_back(std::stod(line.substr(comma + 1), &used));
        } catch (const std::exception&) {
            throw ParseError("profile CSV line " + std::to_string(line_no) +
                             ": malformed number");
        }
    }
    try {
        return SampledProfile(std::move(xs), std::move(ys));
    } catch (const DomainError& e) {
        throw ParseError(std::string("profile CSV: ") + e.what());
    }
}

}  // namespace grushin
