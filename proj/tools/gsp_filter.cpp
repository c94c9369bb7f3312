#include <CLI11.hpp>

#include <filesystem>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "gspf/analysis.hpp"
#include "gspf/error.hpp"
#include "gspf/experiment.hpp"
#include "gspf/graph_io.hpp"
#include "gspf/signals.hpp"

namespace {

struct Overrides {
    std::optional<double> alpha;
    std::optional<double> gamma;
    std::optional<std::string> sampling;
    std::optional<std::string> freq_select;
};

void add_overrides(CLI::App* cmd, Overrides& o) {
    cmd->add_option("--alpha", o.alpha, "characteristic exponent of the noise, 1 < alpha <= 2");
    cmd->add_option("--gamma", o.gamma, "noise dispersion");
    cmd->add_option("--sampling", o.sampling, "greedy-lambda-min | greedy-logdet");
    cmd->add_option("--freq-select", o.freq_select, "energy | lowpass");
}

gspf::ExperimentConfig load(const std::string& path, const Overrides& o) {
    auto config = gspf::load_config(path);
    if (o.alpha) gspf::apply_setting(config, "noise.alpha", std::to_string(*o.alpha));
    if (o.gamma) gspf::apply_setting(config, "noise.gamma", std::to_string(*o.gamma));
    if (o.sampling) gspf::apply_setting(config, "sampling.strategy", *o.sampling);
    if (o.freq_select) gspf::apply_setting(config, "frequency.policy", *o.freq_select);
    config.finalize();
    return config;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Adaptive reconstruction of sampled graph signals under alpha-stable noise"};
    app.require_subcommand(1);

    std::string config_path;
    Overrides run_over, theory_over;
    bool serial = false;
    auto* run = app.add_subcommand("run", "run a Monte Carlo experiment and write msd.csv and summary.txt");
    run->add_option("--config", config_path, "experiment config file")->required()->check(CLI::ExistingFile);
    run->add_flag("--serial", serial, "execute runs on one thread");
    add_overrides(run, run_over);

    auto* theory = app.add_subcommand("theory", "print mu_max and the theoretical steady-state MSD");
    theory->add_option("--config", config_path, "experiment config file")->required()->check(CLI::ExistingFile);
    add_overrides(theory, theory_over);

    gspf::Index n = 50;
    int k = 7;
    std::uint64_t seed = 1;
    std::string out;
    auto* gen = app.add_subcommand("gen-graph", "write a random connected sensor graph");
    gen->add_option("--n", n, "node count")->required();
    gen->add_option("--k", k, "nearest neighbours per node")->required();
    gen->add_option("--seed", seed, "generator seed")->required();
    gen->add_option("--out", out, "output directory (edges.csv, coords.csv)")->required();

    std::string coords;
    std::vector<std::string> features;
    auto* ingest = app.add_subcommand("ingest", "validate station coordinates and feature files");
    ingest->add_option("--coords", coords, "station_id,lat,lon file")->required()->check(CLI::ExistingFile);
    ingest->add_option("--feature", features, "wide feature file (repeatable)")->required()->check(CLI::ExistingFile);

    CLI11_PARSE(app, argc, argv);

    try {
        std::cout << std::setprecision(10);
        if (*run) {
            const auto config = load(config_path, run_over);
            const auto result = gspf::run_experiment(
                config, serial ? gspf::Execution::serial : gspf::Execution::parallel);
            std::cout << "steady_msd_db = " << gspf::to_db(result.steady_msd) << '\n';
            if (result.theory.theoretical_msd) {
                std::cout << "theoretical_msd_db = " << gspf::to_db(*result.theory.theoretical_msd) << '\n';
            }
            std::cout << "diverged_runs = " << result.metrics.diverged_runs << '\n';
            std::cout << "status = " << result.status << '\n';
            std::cout << "output = " << config.output_directory.string() << '\n';
        } else if (*theory) {
            const auto config = load(config_path, theory_over);
            const auto setup = gspf::build_setup(config);
            const auto report = gspf::theory_report(setup, config);
            if (report.mu_max) std::cout << "mu_max = " << *report.mu_max << '\n';
            if (report.theoretical_msd) {
                std::cout << "theoretical_msd = " << *report.theoretical_msd << '\n';
                std::cout << "theoretical_msd_db = " << gspf::to_db(*report.theoretical_msd) << '\n';
            }
            if (!report.note.empty()) std::cout << "note = " << report.note << '\n';
        } else if (*gen) {
            const auto graph = gspf::random_sensor_graph(n, k, seed);
            std::filesystem::create_directories(out);
            gspf::write_edge_list(graph, std::filesystem::path(out) / "edges.csv");
            gspf::write_node_coords(*graph.coords(), std::filesystem::path(out) / "coords.csv");
            std::cout << "nodes = " << graph.size() << "\nedges = " << graph.edge_count() << '\n';
        } else if (*ingest) {
            std::vector<std::filesystem::path> paths(features.begin(), features.end());
            const auto data = gspf::ingest_stations(coords, paths);
            std::cout << "stations = " << data.stations() << "\nsteps = " << data.steps()
                      << "\nfeatures = " << data.feature_count() << '\n';
        }
    } catch (const gspf::Error& e) {
        std::cerr << "error [" << gspf::to_string(e.code()) << "]: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
