// screenlab — compute screening equilibria, firm-value maps, information
// design optima, and simulation cross-checks; emits figure-ready CSV/JSON
// with a checksummed run manifest next to every output.
//
// Exit codes: 0 success, 1 invalid input, 2 computation or verification
// failure.

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "screenlab/design.hpp"
#include "screenlab/extensions.hpp"
#include "screenlab/io.hpp"
#include "screenlab/propcheck.hpp"
#include "screenlab/sim.hpp"
#include "screenlab/valuation.hpp"

namespace {

using namespace screenlab;

constexpr int kExitUsage = 1;
constexpr int kExitComputation = 2;

TypeDistribution parse_distribution(const std::string& spec, const std::string& dist_file) {
    if (!dist_file.empty()) {
        std::istringstream in(io::read_file(dist_file));
        std::vector<std::pair<double, double>> points;
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty() || line[0] == '#' || line.rfind("theta", 0) == 0) continue;
            std::istringstream row(line);
            double theta = 0.0, weight = 0.0;
            char comma = ',';
            if (row >> theta >> comma >> weight) points.emplace_back(theta, weight);
        }
        return TypeDistribution::discrete(std::move(points));
    }
    if (spec == "uniform") return TypeDistribution::uniform();
    if (spec.rfind("beta:", 0) == 0) {
        const auto comma = spec.find(',', 5);
        if (comma == std::string::npos) {
            throw std::invalid_argument("expected beta:a,b, got '" + spec + "'");
        }
        return TypeDistribution::beta(std::stod(spec.substr(5, comma - 5)),
                                      std::stod(spec.substr(comma + 1)));
    }
    throw std::invalid_argument("unknown distribution '" + spec +
                                "' (use uniform, beta:a,b, or --dist-file)");
}

std::string fmt(double x) { return io::format_g12(x); }

struct CommonFlags {
    double k = 0.24;
    double c = 0.24;
    double q1 = 0.25;
    double q0 = 0.25;
    std::string dist = "uniform";
    std::string dist_file;
};

int cmd_equilibrium(const CommonFlags& flags, const std::string& out, int samples) {
    const ModelParams params(flags.k, flags.c);
    const SignalNoise noise(flags.q1, flags.q0);
    const auto eq = solve_equilibrium(params, noise);
    std::cout << "w_star = " << fmt(eq.w_star) << "\n"
              << "theta1 = " << fmt(eq.theta1) << "\n"
              << "theta0 = " << fmt(eq.theta0) << "\n"
              << "theta_commit = " << fmt(theta_commit(params)) << "\n";
    if (!out.empty()) {
        const std::string csv = io::rent_curve_csv(eq, samples);
        io::write_file(out, csv);
        io::RunManifest manifest;
        manifest.command = "equilibrium";
        manifest.parameters = {{"k", fmt(flags.k)}, {"c", fmt(flags.c)},
                               {"q1", fmt(flags.q1)}, {"q0", fmt(flags.q0)},
                               {"samples", std::to_string(samples)}};
        manifest.record(out, csv);
        manifest.write_alongside(out);
        std::cout << "wrote " << out << "\n";
    }
    return 0;
}

int cmd_gradmap(const CommonFlags& flags, int grid_n, const std::string& out) {
    const ModelParams params(flags.k, flags.c);
    const auto dist = parse_distribution(flags.dist, flags.dist_file);
    const auto cells = sign_map(params, dist, grid_n);
    const std::string csv = io::sign_map_csv(cells);
    io::write_file(out, csv);
    io::RunManifest manifest;
    manifest.command = "gradmap";
    manifest.parameters = {{"k", fmt(flags.k)}, {"c", fmt(flags.c)},
                           {"dist", dist.label()}, {"grid_n", std::to_string(grid_n)}};
    manifest.record(out, csv);
    manifest.write_alongside(out);
    std::cout << "wrote " << out << " (" << cells.size() << " cells)\n";
    return 0;
}

int cmd_design(const CommonFlags& flags, double zeta, int grid_n, const std::string& out,
               const std::string& json_out) {
    const ModelParams params(flags.k, flags.c);
    DesignProblem problem(params, parse_distribution(flags.dist, flags.dist_file), zeta);
    const auto result = optimize_quality(problem);
    const auto profile = value_profile(problem, grid_n);

    const std::string csv = io::profile_csv(profile);
    const std::string json = io::design_result_json(result);
    io::write_file(out, csv);
    io::write_file(json_out, json);
    io::RunManifest manifest;
    manifest.command = "design";
    manifest.parameters = {{"k", fmt(flags.k)}, {"c", fmt(flags.c)},
                           {"dist", problem.dist.label()}, {"zeta", fmt(zeta)},
                           {"grid_n", std::to_string(grid_n)}};
    manifest.record(out, csv);
    manifest.record(json_out, json);
    manifest.write_alongside(out);

    std::cout << "q_star = " << fmt(result.q_star) << "\n"
              << "net_value = " << fmt(result.net_value) << "\n"
              << "corner = " << (result.is_corner ? "yes" : "no") << "\n"
              << "wrote " << out << ", " << json_out << "\n";
    return 0;
}

int cmd_simulate(const CommonFlags& flags, const SimConfig& config, const std::string& out) {
    const ModelParams params(flags.k, flags.c);
    const SignalNoise noise(flags.q1, flags.q0);
    const auto dist = parse_distribution(flags.dist, flags.dist_file);
    const auto eq = solve_equilibrium(params, noise);

    const auto br = best_response_check(eq, config);
    const auto rents = simulate_rents(eq, dist, config);
    const auto value = simulate_value(eq, dist, config);
    const double quad = firm_value(eq, dist);

    const std::string json = io::simulate_bundle_json(br, rents, value, quad);
    io::write_file(out, json);
    io::RunManifest manifest;
    manifest.command = "simulate";
    manifest.parameters = {{"k", fmt(flags.k)}, {"c", fmt(flags.c)},
                           {"q1", fmt(flags.q1)}, {"q0", fmt(flags.q0)},
                           {"dist", dist.label()},
                           {"trials", std::to_string(config.trials)},
                           {"seed", std::to_string(config.seed)},
                           {"theta_grid_n", std::to_string(config.theta_grid_n)},
                           {"report_grid_n", std::to_string(config.report_grid_n)}};
    manifest.record(out, json);
    manifest.write_alongside(out);

    std::cout << "max_ic_violation = " << fmt(br.ic_violation) << "\n"
              << "simulated_value = " << fmt(value.empirical_value) << " +- "
              << fmt(value.value_se) << "\n"
              << "quadrature_value = " << fmt(quad) << "\n"
              << "wrote " << out << "\n";
    const double gap = std::abs(value.empirical_value - quad);
    if (gap > 5.0 * std::max(value.value_se, 1e-9)) {
        std::cerr << "simulated value disagrees with quadrature by " << fmt(gap) << "\n";
        return kExitComputation;
    }
    return 0;
}

int cmd_verify(const CommonFlags& flags, bool quick) {
    const ModelParams params(flags.k, flags.c);
    const auto results = run_proposition_suite(params, quick);
    bool all_pass = true;
    for (const auto& r : results) {
        std::cout << (r.pass ? "PASS " : "FAIL ") << r.name << ": " << r.detail << "\n";
        all_pass = all_pass && r.pass;
    }
    std::cout << (all_pass ? "all proposition suites pass" : "some suites FAILED") << "\n";
    return all_pass ? 0 : kExitComputation;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"screening-model solver and simulator"};
    app.require_subcommand(1);

    CommonFlags flags;
    std::string out;
    std::string json_out = "design_result.json";
    int samples = 512;
    int grid_n = 20;
    double zeta = 0.01;
    bool quick = false;
    SimConfig config;
    config.theta_grid_n = 100;
    config.report_grid_n = 512;

    auto add_params = [&](CLI::App* cmd, bool with_noise) {
        cmd->add_option("--k", flags.k, "firm investment cost");
        cmd->add_option("--c", flags.c, "manager investment cost");
        if (with_noise) {
            cmd->add_option("--q1", flags.q1, "Pr(bad signal | success)");
            cmd->add_option("--q0", flags.q0, "Pr(good signal | failure)");
        }
    };
    auto add_dist = [&](CLI::App* cmd) {
        cmd->add_option("--dist", flags.dist, "uniform or beta:a,b");
        cmd->add_option("--dist-file", flags.dist_file, "two-column CSV (theta,weight)");
    };

    auto* eq_cmd = app.add_subcommand("equilibrium", "wage, zone boundaries, rent curve");
    add_params(eq_cmd, true);
    eq_cmd->add_option("--out", out, "rent-curve CSV path");
    eq_cmd->add_option("--samples", samples, "rent-curve sample count")
        ->check(CLI::PositiveNumber);

    auto* grad_cmd = app.add_subcommand("gradmap", "sign map of the value gradient");
    add_params(grad_cmd, false);
    add_dist(grad_cmd);
    grad_cmd->add_option("--grid-n", grid_n, "lattice size per axis")
        ->check(CLI::Range(2, 1000));
    grad_cmd->add_option("--out", out, "sign-map CSV path")->required();

    auto* design_cmd = app.add_subcommand("design", "optimal information quality");
    add_params(design_cmd, false);
    add_dist(design_cmd);
    design_cmd->add_option("--zeta", zeta, "information cost scale")
        ->check(CLI::PositiveNumber);
    design_cmd->add_option("--grid-n", grid_n, "profile grid size")->check(CLI::Range(10, 100000));
    design_cmd->add_option("--out", out, "profile CSV path");
    design_cmd->add_option("--json", json_out, "result JSON path");

    auto* sim_cmd = app.add_subcommand("simulate", "Monte Carlo cross-check");
    add_params(sim_cmd, true);
    add_dist(sim_cmd);
    sim_cmd->add_option("--trials", config.trials, "Monte Carlo draws")
        ->check(CLI::PositiveNumber);
    sim_cmd->add_option("--seed", config.seed, "RNG seed")->envname("SCREENLAB_SEED");
    sim_cmd->add_option("--theta-grid-n", config.theta_grid_n, "type bins")
        ->check(CLI::Range(2, 100000));
    sim_cmd->add_option("--report-grid-n", config.report_grid_n, "report grid")
        ->check(CLI::Range(2, 100000));
    sim_cmd->add_option("--out", out, "outcome JSON path");

    auto* verify_cmd = app.add_subcommand("verify", "run the proposition suites");
    add_params(verify_cmd, false);
    verify_cmd->add_flag("--quick", quick, "reduced grids");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (eq_cmd->parsed()) return cmd_equilibrium(flags, out, samples);
        if (grad_cmd->parsed()) {
            grid_n = grad_cmd->count("--grid-n") ? grid_n : 20;
            return cmd_gradmap(flags, grid_n, out);
        }
        if (design_cmd->parsed()) {
            if (out.empty()) out = "design_profile.csv";
            grid_n = design_cmd->count("--grid-n") ? grid_n : 100;
            return cmd_design(flags, zeta, grid_n, out, json_out);
        }
        if (sim_cmd->parsed()) {
            if (out.empty()) out = "simulate_result.json";
            return cmd_simulate(flags, config, out);
        }
        if (verify_cmd->parsed()) return cmd_verify(flags, quick);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitComputation;
    }
    return kExitUsage;
}
