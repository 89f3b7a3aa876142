// Command-line front-end: closed-form double bubbles with constrained
// vertical or horizontal interface in the Grushin plane, the isoperimetric
// profile, the discretized variational solver, and the polyhedral
// rearrangement. Emits plot-ready CSV/JSON; all commands are deterministic.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "grushin/bubble_horizontal.hpp"
#include "grushin/bubble_vertical.hpp"
#include "grushin/errors.hpp"
#include "grushin/geometry.hpp"
#include "grushin/isoperimetric.hpp"
#include "grushin/rearrange.hpp"
#include "grushin/variational.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitNonConvergence = 3;
constexpr int kExitIo = 4;

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_output(const std::string& path, const std::string& payload) {
    if (path.empty()) {
        std::cout << payload;
        if (!payload.empty() && payload.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::ios_base::failure("cannot open output file: " + path);
    out << payload;
    if (!out) throw std::ios_base::failure("cannot write output file: " + path);
}

std::string read_input(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::ios_base::failure("cannot open input file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

grushin::Orientation parse_orientation(const std::string& name) {
    if (name == "vertical") return grushin::Orientation::vertical;
    if (name == "horizontal") return grushin::Orientation::horizontal;
    throw grushin::DomainError("orientation must be vertical or horizontal");
}

int run_isoprofile(double alpha_value, int samples, const std::string& output,
                   const std::string& format) {
    if (samples < 2) throw grushin::DomainError("--samples must be at least 2");
    const grushin::Alpha alpha(alpha_value);
    const grushin::IsoperimetricProfile iso(alpha);
    std::vector<double> xs(samples), ys(samples);
    for (int i = 0; i < samples; ++i) {
        xs[i] = static_cast<double>(i) / static_cast<double>(samples - 1);
        ys[i] = iso.phi(xs[i]);
    }
    if (format == "csv") {
        std::string table = "x,phi\n";
        for (int i = 0; i < samples; ++i) {
            table += format_double(xs[i]);
            table += ',';
            table += format_double(ys[i]);
            table += '\n';
        }
        write_output(output, table);
    } else {
        nlohmann::json j;
        j["alpha"] = alpha_value;
        j["xs"] = xs;
        j["ys"] = ys;
        write_output(output, j.dump());
    }
    return kExitOk;
}

int run_bubble(const std::string& orientation, double alpha_value, double volume,
               int samples, const std::string& output) {
    if (samples < 2) throw grushin::DomainError("--samples must be at least 2");
    const grushin::Alpha alpha(alpha_value);
    std::string descriptor;
    if (parse_orientation(orientation) == grushin::Orientation::vertical) {
        descriptor = grushin::solve_vertical(alpha, volume)
                         .to_json(static_cast<std::size_t>(samples));
    } else {
        descriptor = grushin::solve_horizontal(alpha, volume)
                         .to_json(static_cast<std::size_t>(samples));
    }
    nlohmann::json j = nlohmann::json::parse(descriptor);
    j["orientation"] = orientation;
    write_output(output, j.dump());
    return kExitOk;
}

int run_compare(double alpha_value, double volume, bool force,
                const std::string& output) {
    if (!(volume > 0.0)) throw grushin::DomainError("--volume must be positive");
    double p_x, p_y;
    if (alpha_value == 1.0) {
        const grushin::ComparisonResult result = grushin::compare_alpha1(volume);
        p_x = result.p_vertical;
        p_y = result.p_horizontal;
    } else if (force) {
        const grushin::Alpha alpha(alpha_value);
        p_x = grushin::vertical_min_perimeter(grushin::solve_vertical(alpha, volume));
        p_y = grushin::horizontal_min_perimeter(
            grushin::solve_horizontal(alpha, volume));
    } else {
        throw grushin::DomainError(
            "unsupported alpha: the comparison is characterized for alpha = 1 "
            "(pass --force to compare numerically anyway)");
    }
    nlohmann::json j;
    j["alpha"] = alpha_value;
    j["v"] = volume;
    j["P_x"] = p_x;
    j["P_y"] = p_y;
    j["ratio"] = p_x / p_y;
    j["winner"] = p_y < p_x ? "horizontal" : "vertical";
    write_output(output, j.dump());
    return kExitOk;
}

int run_solve(const std::string& orientation, double alpha_value, double volume,
              int grid, double domain_cap, double penalty, long max_iters,
              double step_tol, const std::string& output) {
    grushin::DiscreteProblem problem;
    problem.alpha = grushin::Alpha(alpha_value);
    problem.volume = volume;
    problem.orientation = parse_orientation(orientation);
    problem.n_grid = static_cast<std::size_t>(grid);
    problem.penalty_weight = penalty;
    problem.max_iters = static_cast<std::size_t>(max_iters);
    problem.step_tol = step_tol;
    if (domain_cap > 0.0) {
        problem.domain_cap = domain_cap;
    } else if (problem.orientation == grushin::Orientation::vertical) {
        problem.domain_cap =
            1.5 * grushin::solve_vertical(problem.alpha, volume).r();
    } else {
        problem.domain_cap =
            1.5 * grushin::solve_horizontal(problem.alpha, volume).r();
    }
    const grushin::SolverReport report = grushin::minimize(problem);
    nlohmann::json j = nlohmann::json::parse(report.to_json());
    j["orientation"] = orientation;
    j["alpha"] = alpha_value;
    j["v"] = volume;
    j["n_grid"] = grid;
    j["domain_cap"] = problem.domain_cap;
    write_output(output, j.dump());
    return report.converged ? kExitOk : kExitNonConvergence;
}

int run_rearrange(const std::string& input, double alpha_value,
                  const std::string& output) {
    const grushin::SlabSet before = grushin::slabset_from_json(read_input(input));
    const grushin::Alpha alpha(alpha_value);
    const grushin::SlabSet after = grushin::rearrange(before);
    const grushin::RearrangementReport report =
        grushin::rearrangement_report(before, alpha);
    nlohmann::json j;
    j["rearranged"] = nlohmann::json::parse(grushin::slabset_to_json(after));
    j["report"] = {
        {"original_perimeter", report.original_perimeter},
        {"rearranged_perimeter", report.rearranged_perimeter},
        {"original_open_perimeter", report.original_open_perimeter},
        {"rearranged_open_perimeter", report.rearranged_open_perimeter},
        {"noninterval_measure", report.noninterval_measure},
        {"area", report.area},
        {"weighted_area_original", report.weighted_area_original},
        {"weighted_area_rearranged", report.weighted_area_rearranged},
    };
    write_output(output, j.dump());
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Double bubbles with constrained interface in the Grushin plane"};
    app.require_subcommand(1);

    double alpha = 1.0;
    double volume = 1.0;
    int samples = 101;
    std::string output;
    std::string format = "csv";
    std::string orientation = "vertical";

    auto* isoprofile = app.add_subcommand(
        "isoprofile", "Tabulate the Grushin isoperimetric profile on [0, 1]");
    isoprofile->add_option("--alpha", alpha, "Grushin exponent (>= 0)");
    isoprofile->add_option("--samples", samples, "number of table rows");
    isoprofile->add_option("--output,-o", output, "output path (default stdout)");
    isoprofile->add_option("--format", format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));

    auto* bubble = app.add_subcommand(
        "bubble", "Closed-form minimal double bubble descriptor and profile");
    bubble->add_option("--orientation", orientation, "vertical or horizontal")
        ->check(CLI::IsMember({"vertical", "horizontal"}));
    bubble->add_option("--alpha", alpha, "Grushin exponent (>= 0)");
    bubble->add_option("--volume,-v", volume, "half-bubble area (> 0)");
    bubble->add_option("--samples", samples, "profile samples in the descriptor");
    bubble->add_option("--output,-o", output, "output path (default stdout)");

    bool force = false;
    auto* compare = app.add_subcommand(
        "compare", "Compare the vertical and horizontal minimal perimeters");
    compare->add_option("--alpha", alpha, "Grushin exponent (1 unless --force)");
    compare->add_option("--volume,-v", volume, "half-bubble area (> 0)");
    compare->add_flag("--force", force, "compare numerically for alpha != 1");
    compare->add_option("--output,-o", output, "output path (default stdout)");

    int grid = 400;
    double domain_cap = 0.0;
    double penalty = 1e4;
    long max_iters = 200000;
    double step_tol = 1e-7;
    auto* solve = app.add_subcommand(
        "solve", "Direct discretized minimization of the perimeter functional");
    solve->add_option("--orientation", orientation, "vertical or horizontal")
        ->check(CLI::IsMember({"vertical", "horizontal"}));
    solve->add_option("--alpha", alpha, "Grushin exponent (>= 0)");
    solve->add_option("--volume,-v", volume, "half-bubble area (> 0)");
    solve->add_option("--grid", grid, "number of grid segments");
    solve->add_option("--domain-cap", domain_cap,
                      "grid endpoint (default: 1.5x the closed-form radius)");
    solve->add_option("--penalty", penalty, "area-constraint penalty weight");
    solve->add_option("--max-iters", max_iters, "iteration budget");
    solve->add_option("--step-tol", step_tol, "stopping displacement tolerance");
    solve->add_option("--output,-o", output, "output path (default stdout)");

    std::string input;
    auto* rearrange_cmd = app.add_subcommand(
        "rearrange", "Horizontal rearrangement of a polyhedral slab set");
    rearrange_cmd->add_option("--input,-i", input, "slab-set JSON path")->required();
    rearrange_cmd->add_option("--alpha", alpha, "exponent for the weighted areas");
    rearrange_cmd->add_option("--output,-o", output, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitValidation;
    }

    try {
        if (isoprofile->parsed()) {
            return run_isoprofile(alpha, samples, output, format);
        }
        if (bubble->parsed()) {
            return run_bubble(orientation, alpha, volume, samples, output);
        }
        if (compare->parsed()) {
            return run_compare(alpha, volume, force, output);
        }
        if (solve->parsed()) {
            return run_solve(orientation, alpha, volume, grid, domain_cap, penalty,
                             max_iters, step_tol, output);
        }
        if (rearrange_cmd->parsed()) {
            return run_rearrange(input, alpha, output);
        }
    } catch (const grushin::NonConvergence& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitNonConvergence;
    } catch (const grushin::DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const grushin::NotSchwarzSymmetric& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const grushin::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitValidation;
    }
    return kExitOk;
}
