#include "gspf/experiment.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>

#include "gspf/analysis.hpp"
#include "gspf/error.hpp"
#include "gspf/graph_io.hpp"
#include "gspf/signals.hpp"

namespace gspf {

namespace {

struct GraphAndSignal {
    Graph graph;
    std::optional<StationData> stations;
};

GraphAndSignal load_graph_source(const ExperimentConfig& c) {
    switch (c.graph.source) {
    case GraphSource::sensor:
        return {random_sensor_graph(c.graph.n, c.graph.k, c.graph.seed, c.graph.weighting), std::nullopt};
    case GraphSource::edge_list:
        return {load_graph(c.graph.edges, c.graph.coords.empty()
                                              ? std::nullopt
                                              : std::optional<std::filesystem::path>(c.graph.coords)),
                std::nullopt};
    case GraphSource::knn_file: {
        const bool from_file = c.signal.source == SignalSource::file;
        auto data = ingest_stations(c.graph.coords, from_file ? c.signal.paths
                                                               : std::vector<std::filesystem::path>{});
        Matrix planar = c.graph.geographic ? equirectangular_km(data.lat_lon) : data.lat_lon;
        const double scale = mean_knn_distance(planar, c.graph.k);
        Graph g = build_knn_graph(planar, c.graph.k, scale, c.graph.weighting);
        return {std::move(g), from_file ? std::optional<StationData>(std::move(data)) : std::nullopt};
    }
    }
    throw Error(ErrorCode::invalid_parameter, "unknown graph source");
}

std::vector<Matrix> truth_frames(const ExperimentConfig& c, const LaplacianEigensystem& es,
                                 const std::optional<StationData>& stations) {
    std::vector<Matrix> frames;
    if (stations) {
        const Index steps = stations->steps();
        const Index d = stations->feature_count();
        frames.reserve(static_cast<std::size_t>(steps));
        for (Index t = 0; t < steps; ++t) {
            Matrix f(stations->stations(), d);
            for (Index j = 0; j < d; ++j) f.col(j) = stations->features[static_cast<std::size_t>(j)].col(t);
            frames.push_back(std::move(f));
        }
        return frames;
    }
    const auto support = lowpass_frequencies(es, *c.signal.bandwidth);
    if (c.signal.source == SignalSource::timevarying) {
        for (auto& v : synth_timevarying_signal(es, support, c.signal.steps, c.signal.drift, c.signal.seed,
                                                c.signal.amplitude)) {
            frames.emplace_back(std::move(v));
        }
    } else {
        frames.emplace_back(synth_bandlimited_signal(es, support, c.signal.seed, c.signal.amplitude));
    }
    return frames;
}

/// Vector whose GFT magnitudes are the spectral energies pooled over frames
/// and features, so select_frequencies ranks by total energy.
Vector pooled_reference(const LaplacianEigensystem& es, const std::vector<Matrix>& frames) {
    Vector energy = Vector::Zero(es.size());
    for (const auto& f : frames) energy += (es.eigenvectors.transpose() * f).rowwise().squaredNorm();
    return es.eigenvectors * energy.cwiseSqrt();
}

bool uses_bn(Algorithm a) { return a == Algorithm::gnlmp_approx || a == Algorithm::gnlmp_threshold; }

std::string num(double v) {
    std::ostringstream os;
    os << std::setprecision(17) << v;
    return os.str();
}

}  // namespace

ExperimentSetup build_setup(const ExperimentConfig& config) {
    auto [graph, stations] = load_graph_source(config);
    if (!graph.is_connected()) throw Error(ErrorCode::invalid_input, "graph is not connected");
    auto es = eigensystem(graph);
    auto truth = truth_frames(config, es, stations);
    if (config.frequency_size > es.size() || config.sampling_size > es.size()) {
        throw Error(ErrorCode::invalid_parameter, "frequency or sampling size exceeds node count");
    }
    const IndexSet freq = config.frequency_policy == FrequencyPolicy::lowpass
                              ? lowpass_frequencies(es, config.frequency_size)
                              : select_frequencies(es, pooled_reference(es, truth), config.frequency_size);
    BandlimitOperator blo(es, freq);
    auto report = greedy_sample_report(blo, config.sampling_size, config.sampling_strategy);
    SamplingOperator ds(es.size(), report.chosen_set);
    auto ops = std::make_shared<const FilterOperators>(blo, ds);
    return ExperimentSetup{std::move(graph), std::move(es), std::move(blo), std::move(ds),
                           std::move(report), std::move(ops), std::move(truth)};
}

MetricSeries simulate(const ExperimentSetup& setup, const SimulationSpec& spec) {
    const auto& ops = *setup.ops;
    const Index n = ops.n();
    const Index d = setup.features();
    const Index iterations = spec.iterations;
    const auto frames = static_cast<Index>(setup.truth.size());
    if (frames > 1 && iterations > frames) {
        throw Error(ErrorCode::invalid_parameter, "more iterations than time-varying frames");
    }
    FilterConfig fc = spec.filter;
    fc.validate();
    std::vector<double> mus(static_cast<std::size_t>(d), fc.mu);
    if (d > 1) {
        if (static_cast<Index>(fc.mu_list.size()) != d) {
            throw Error(ErrorCode::invalid_parameter, "mu_list needs one step size per feature");
        }
        mus = fc.mu_list;
    }
    auto cm = spec.cm;
    if (!cm && uses_bn(fc.algorithm)) {
        if (spec.noiseless) throw Error(ErrorCode::invalid_parameter, "B_n needs a noise model with gamma > 0");
        cm = std::make_shared<const ConvergenceMatrices>(build_bn(ops, spec.model, fc.p));
    }
    const bool joint = d > 1 && fc.algorithm == Algorithm::gnlmp_approx;
    const bool branches = d == 1 && fc.algorithm == Algorithm::gnlmp_threshold;

    // Filter construction validates once up front so configuration errors
    // surface instead of being absorbed as diverged runs.
    std::vector<AdaptiveFilter> prototypes;
    for (Index j = 0; j < d; ++j) {
        FilterConfig cj = fc;
        cj.mu = mus[static_cast<std::size_t>(j)];
        prototypes.emplace_back(ops, cj, spec.model, cm);
    }

    auto run = [&](Index, std::uint64_t seed) {
        RunTrace trace;
        trace.squared_error.assign(static_cast<std::size_t>(iterations), kDivergedClip);
        if (branches) trace.approx.assign(static_cast<std::size_t>(iterations), 0);
        Rng rng(seed);
        auto filters = prototypes;
        Matrix x = Matrix::Zero(n, d);
        Matrix w = Matrix::Zero(n, d);
        Matrix y(n, d);
        const auto start = std::chrono::steady_clock::now();
        for (Index k = 0; k < iterations; ++k) {
            const Matrix& x0 = setup.truth[static_cast<std::size_t>(frames > 1 ? k : 0)];
            if (!spec.noiseless) {
                for (Index j = 0; j < d; ++j) fill_sas(spec.model, rng, w.col(j));
            }
            y = x0 + w;
            double err = 0.0;
            try {
                if (joint) {
                    x = multifeature_gnlmp_step(x, y, ops, *cm, mus, fc.p);
                } else {
                    for (Index j = 0; j < d; ++j) {
                        auto& f = filters[static_cast<std::size_t>(j)];
                        const Branch b = f.step(y.col(j));
                        if (branches && b == Branch::approx) trace.approx[static_cast<std::size_t>(k)] = 1;
                        x.col(j) = f.estimate();
                    }
                }
                err = (x - x0).squaredNorm();
            } catch (const Error&) {
                err = kDivergedClip;
                trace.diverged = true;
            }
            if (!std::isfinite(err) || err > kDivergedClip) trace.diverged = true;
            if (trace.diverged) break;
            trace.squared_error[static_cast<std::size_t>(k)] = err;
        }
        trace.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return trace;
    };
    auto series = run_monte_carlo(spec.runs, spec.base_seed, run, spec.execution);
    if (frames > 1) {
        std::vector<double> energy;
        for (Index k = 0; k < iterations; ++k) energy.push_back(setup.truth[static_cast<std::size_t>(k)].squaredNorm());
        series.nmsd = running_nmsd(series.msd, energy);
    }
    return series;
}

TheoryReport theory_report(const ExperimentSetup& setup, const ExperimentConfig& config) {
    TheoryReport report;
    if (!uses_bn(config.filter.algorithm)) {
        report.note = "no steady-state analysis for " + to_string(config.filter.algorithm);
        return report;
    }
    if (config.gamma <= 0.0) {
        report.note = "noiseless run";
        return report;
    }
    const AlphaStableModel model(config.alpha, config.gamma);
    const auto& ops = *setup.ops;
    const auto cm = build_bn(ops, model, config.filter.p);
    report.mu_max = stability_mu_max(cm.b_n, setup.ds, model, config.filter.p, config.rp_reading);
    SteadyStateInputs in{cm.b_n, setup.ds, model, config.filter.p, config.filter.mu, ops.u_f(), config.rp_reading};
    try {
        report.theoretical_msd = theoretical_msd(in);
    } catch (const Error& e) {
        report.note = e.what();
    }
    return report;
}

SimulationSpec simulation_spec(const ExperimentConfig& config, Execution execution) {
    SimulationSpec spec;
    spec.filter = config.filter;
    spec.noiseless = config.gamma <= 0.0;
    spec.model = AlphaStableModel(config.alpha, spec.noiseless ? 1.0 : config.gamma);
    spec.iterations = config.iterations;
    spec.runs = config.runs;
    spec.base_seed = config.base_seed;
    spec.execution = execution;
    return spec;
}

ExperimentResult run_experiment(const ExperimentConfig& input, Execution execution) {
    ExperimentConfig config = input;
    config.finalize();
    const auto setup = build_setup(config);
    ExperimentResult result;
    result.metrics = simulate(setup, simulation_spec(config, execution));
    result.theory = theory_report(setup, config);
    const auto& m = result.metrics;
    result.steady_msd = tail_mean(m.msd, std::max<Index>(1, m.iterations() / 4));
    const bool majority_diverged = 2 * m.diverged_runs > m.runs;
    const bool md = is_md_algorithm(config.filter.algorithm);
    result.status = !majority_diverged ? "ok" : (md ? "failed" : "diverged");

    std::filesystem::create_directories(config.output_directory);
    {
        std::ofstream csv(config.output_directory / "msd.csv");
        if (!csv) throw Error(ErrorCode::io_error, "cannot write msd.csv");
        csv << std::setprecision(17);
        const bool tv = !m.nmsd.empty();
        const bool br = !m.approx_fraction.empty();
        csv << "iter,msd,msd_db" << (tv ? ",nmsd,nmsd_db" : "") << (br ? ",branch" : "") << '\n';
        for (Index k = 0; k < m.iterations(); ++k) {
            const auto i = static_cast<std::size_t>(k);
            csv << k + 1 << ',' << m.msd[i] << ',' << to_db(m.msd[i]);
            if (tv) csv << ',' << m.nmsd[i] << ',' << to_db(m.nmsd[i]);
            if (br) csv << ',' << m.approx_fraction[i];
            csv << '\n';
        }
    }
    {
        std::ofstream out(config.output_directory / "summary.txt");
        if (!out) throw Error(ErrorCode::io_error, "cannot write summary.txt");
        for (const auto& [key, value] : config.to_map()) out << key << " = " << value << '\n';
        std::string freq, samples;
        for (auto f : setup.blo.freq_set()) freq += (freq.empty() ? "" : ",") + std::to_string(f);
        for (auto s : setup.ds.sample_set()) samples += (samples.empty() ? "" : ",") + std::to_string(s);
        out << "result.frequency_set = " << freq << '\n';
        out << "result.sampling_set = " << samples << '\n';
        out << "result.sampling_lambda_min = " << num(sampling_lambda_min(setup.blo, setup.ds)) << '\n';
        if (result.theory.mu_max) out << "result.mu_max = " << num(*result.theory.mu_max) << '\n';
        if (result.theory.theoretical_msd) {
            out << "result.theoretical_msd = " << num(*result.theory.theoretical_msd) << '\n';
            out << "result.theoretical_msd_db = " << num(to_db(*result.theory.theoretical_msd)) << '\n';
        }
        if (!result.theory.note.empty()) out << "result.theory_note = " << result.theory.note << '\n';
        out << "result.steady_msd = " << num(result.steady_msd) << '\n';
        out << "result.steady_msd_db = " << num(to_db(result.steady_msd)) << '\n';
        if (!m.nmsd.empty()) out << "result.final_nmsd = " << num(m.nmsd.back()) << '\n';
        out << "result.runs = " << m.runs << '\n';
        out << "result.diverged_runs = " << m.diverged_runs << '\n';
        out << "result.seconds_per_iteration = " << num(m.seconds_per_iteration) << '\n';
        out << "result.status = " << result.status << '\n';
    }
    if (result.status == "failed") {
        throw Error(ErrorCode::stability_violation,
                    std::to_string(m.diverged_runs) + " of " + std::to_string(m.runs) + " runs diverged");
    }
    return result;
}

}  // namespace gspf
