// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <numeric>
#include <random>
#include <sstream>
#include <string>

#include "gspf/analysis.hpp"
#include "gspf/error.hpp"
#include "gspf/experiment.hpp"
#include "gspf/selection.hpp"
#include "gspf/signals.hpp"

using namespace gspf;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

int failures = 0;

void criterion(int id, const char* title, double limit_s, const std::function<Outcome()>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome out;
    try {
        out = body();
    } catch (const std::exception& e) {
        out = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool pass = out.pass && secs < limit_s;
    if (!pass) ++failures;
    std::printf("AC%-2d %s  %s | %s | %.1f s (limit %.0f s)\n", id, pass ? "PASS" : "FAIL", title,
                out.detail.c_str(), secs, limit_s);
    std::fflush(stdout);
}

std::string fmt(const char* f, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

Vector randn(Index n, std::mt19937_64& rng) {
    std::normal_distribution<double> nd;
    Vector v(n);
    for (Index i = 0; i < n; ++i) v[i] = nd(rng);
    return v;
}

double rel_diff(const Vector& a, const Vector& b) {
    return (a - b).norm() / std::max(b.norm(), std::numeric_limits<double>::min());
}

// n = 50 sensor graph, |F| = 20, |S| = 30, alpha = 1.5, gamma = 0.1.
ExperimentConfig reference_config() {
    ExperimentConfig c;
    c.graph.n = 50;
    c.graph.k = 7;
    c.graph.seed = 1;
    c.frequency_size = 20;
    c.sampling_size = 30;
    c.alpha = 1.5;
    c.gamma = 0.1;
    c.runs = 100;
    c.finalize();
    return c;
}

const ExperimentSetup& reference_setup() {
    static const ExperimentSetup setup = build_setup(reference_config());
    return setup;
}

MetricSeries simulate_with(const ExperimentSetup& setup, Algorithm algorithm, double mu, double p,
                           const AlphaStableModel& model, Index iterations, Index runs,
                           std::uint64_t base_seed = 1) {
    SimulationSpec spec;
    spec.filter.algorithm = algorithm;
    spec.filter.mu = mu;
    spec.filter.p = p;
    spec.model = model;
    spec.iterations = iterations;
    spec.runs = runs;
    spec.base_seed = base_seed;
    return simulate(setup, spec);
}

double db_tail_mean(const std::vector<double>& msd, Index tail) { return to_db(tail_mean(msd, tail)); }

// First iteration (1-based) at which MSD is within `margin` dB of `steady`,
// limited to the first `window` iterations; window + 1 when never.
Index reach_iteration(const std::vector<double>& msd, double steady, double margin, Index window) {
    for (Index k = 0; k < window; ++k) {
        if (to_db(msd[static_cast<std::size_t>(k)]) <= to_db(steady) + margin) return k + 1;
    }
    return window + 1;
}

// ---------------------------------------------------------------------------

Outcome ac1() {
    std::mt19937_64 rng(2024);
    const Index sizes[] = {5, 20, 50};
    double worst_full = 0.0, worst_lmp = 0.0;
    int instances = 0, attempts = 0;
    while (instances < 200) {
        const Index n = sizes[instances % 3];
        const auto seed = static_cast<std::uint64_t>(++attempts);
        const auto es = eigensystem(random_sensor_graph(n, std::min<Index>(n - 1, 4), seed));
        IndexSet all(static_cast<std::size_t>(n));
        std::iota(all.begin(), all.end(), 0);
        std::shuffle(all.begin(), all.end(), rng);
        const Index f = 1 + static_cast<Index>(rng() % static_cast<std::uint64_t>(std::max<Index>(1, n / 2)));
        const Index s = f + static_cast<Index>(rng() % static_cast<std::uint64_t>(n - f + 1));
        const BandlimitOperator blo(es, IndexSet(all.begin(), all.begin() + f));
        SamplingOperator ds(n, {});
        try {
            ds = greedy_sample(blo, s);
        } catch (const Error&) {
            continue;  // singular draw; take the next graph
        }
        const FilterOperators ops(blo, ds);
        const Vector x = randn(n, rng), y = randn(n, rng);
        const double mu = std::uniform_real_distribution<double>(0.01, 1.0)(rng);
        worst_full = std::max(worst_full, rel_diff(gnlmp_full_step(x, y, ops, mu, 2.0), gnlms_step(x, y, ops, mu)));
        worst_lmp = std::max(worst_lmp, rel_diff(glmp_step(x, y, ops, mu, 2.0), glms_step(x, y, ops, mu)));
        ++instances;
    }
    const bool pass = worst_full <= 1e-12 && worst_lmp <= 1e-12;
    return {pass, "200 instances; max rel diff gnlmp-full/gnlms " + fmt("%.2e", worst_full) + ", glmp/glms " +
                      fmt("%.2e", worst_lmp) + " (tol 1e-12)"};
}

Outcome ac2() {
    // Q = 0 is attainable when the sampled residual lies in the sampled band:
    // |S| = |F| with any y, or |S| > |F| with y = x + U_F v on S.
    std::mt19937_64 rng(77);
    double worst = 0.0;
    int instances = 0, seed = 0;
    const double eps = 1e-8;
    while (instances < 100) {
        const Index n = instances % 2 ? 20 : 50;
        const auto es = eigensystem(random_sensor_graph(n, 6, static_cast<std::uint64_t>(++seed)));
        const Index f = 3 + static_cast<Index>(rng() % 8);
        const bool square = instances % 4 < 2;
        const Index s = square ? f : f + 1 + static_cast<Index>(rng() % 8);
        const BandlimitOperator blo(es, lowpass_frequencies(es, f));
        const FilterOperators ops(blo, greedy_sample(blo, s));
        const Vector x = blo.apply(randn(n, rng));
        const Vector y = square ? Vector(randn(n, rng)) : Vector(x + blo.u_f() * randn(f, rng));
        if (ops.sampled_residual(x, y).cwiseAbs().minCoeff() <= eps) continue;
        const double p = std::uniform_real_distribution<double>(1.05, 2.0)(rng);
        worst = std::max(worst, q_residual(ops, y, x, p, eps, 0.0));
        ++instances;
    }
    return {worst < 1e-8, "100 instances (50 with |S| = |F|, 50 with in-band residual); max residual " +
                              fmt("%.2e", worst) + " (tol 1e-8)"};
}

Outcome ac3() {
    const auto& setup = reference_setup();
    const auto& ops = *setup.ops;
    const Vector x0 = setup.truth.front().col(0);
    const Vector start = Vector::Zero(ops.n());
    const double r_nlms = ops.sampled_residual(gnlms_step(start, x0, ops, 1.0), x0).cwiseAbs().maxCoeff();
    const double r_full =
        ops.sampled_residual(gnlmp_full_step(start, x0, ops, 1.0, 1.45), x0).cwiseAbs().maxCoeff();
    return {r_nlms < 1e-8 && r_full < 1e-8,
            "max sampled residual after one step: gnlms " + fmt("%.2e", r_nlms) + ", gnlmp-full " +
                fmt("%.2e", r_full) + " (tol 1e-8)"};
}

Outcome ac4() {
    const AlphaStableModel gauss(2.0, 0.5);
    Vector v = sample_sas(gauss, 100000, 4);
    std::sort(v.data(), v.data() + v.size());
    double d = 0.0;
    const double n = static_cast<double>(v.size());
    for (Index i = 0; i < v.size(); ++i) {
        const double cdf = 0.5 * std::erfc(-v[i] / std::sqrt(2.0));
        d = std::max({d, cdf - static_cast<double>(i) / n, static_cast<double>(i + 1) / n - cdf});
    }
    const double critical = 1.6276 / std::sqrt(n);
    const AlphaStableModel m(1.5, 0.1);
    const Vector w = sample_sas(m, 1000000, 5);
    const double empirical = w.array().abs().pow(0.9).mean();
    const double exact = flom(0.9, m);
    const double err = std::abs(empirical / exact - 1.0);
    return {d < critical && err < 0.02, "KS D = " + fmt("%.5f", d) + " (critical " + fmt("%.5f", critical) +
                                            "); FLOM(0.9) empirical " + fmt("%.5f", empirical) + " vs " +
                                            fmt("%.5f", exact) + " (" + fmt("%.2f", 100 * err) + "%, tol 2%)"};
}

Outcome ac5() {
    const auto& setup = reference_setup();
    const AlphaStableModel model(1.5, 0.1);
    const double p = 1.45;
    const auto cm = build_bn(*setup.ops, model, p);
    std::ostringstream out;
    bool pass = true;
    double previous = std::numeric_limits<double>::infinity();
    for (double mu : {0.05, 0.01, 0.005}) {
        const auto series = simulate_with(setup, Algorithm::gnlmp_threshold, mu, p, model, 2000, 100);
        const double steady = db_tail_mean(series.msd, 500);
        SteadyStateInputs in{cm.b_n, setup.ds, model, p, mu, setup.ops->u_f(), RpReading::flom_p_minus_2};
        const double theory = to_db(theoretical_msd(in));
        in.reading = RpReading::bn_scaling;
        const double theory_alt = to_db(theoretical_msd(in));
        const double gap = steady - theory;
        const auto approx = simulate_with(setup, Algorithm::gnlmp_approx, mu, p, model, 2000, 100);
        pass = pass && std::abs(gap) <= 1.5 && steady < previous;
        previous = steady;
        out << "mu " << mu << ": sim " << fmt("%.2f", steady) << " dB, theory " << fmt("%.2f", theory) << " dB (gap "
            << fmt("%+.2f", gap) << "; FLOM(p)^(p-2) reading " << fmt("%.2f", theory_alt) << " dB; gnlmp-approx sim " << fmt("%.2f", db_tail_mean(approx.msd, 500))
            << " dB); ";
    }
    out << "tol 1.5 dB, strictly decreasing";
    return {pass, out.str()};
}

struct Matched {
    double glmp_mu = 0.0;
    double gap_db = 0.0;
};

// Bisection in log mu for the GLMP step whose steady MSD equals `target_db`.
Matched match_glmp(const ExperimentSetup& setup, const AlphaStableModel& model, double p, double target_db,
                   Index iterations, Index tail, Index runs, std::uint64_t seed) {
    double lo = std::log(1e-3), hi = std::log(2.0);
    Matched best{std::exp(0.5 * (lo + hi)), std::numeric_limits<double>::infinity()};
    for (int it = 0; it < 14; ++it) {
        const double mid = 0.5 * (lo + hi);
        const auto s = simulate_with(setup, Algorithm::glmp, std::exp(mid), p, model, iterations, runs, seed);
        const double gap = db_tail_mean(s.msd, tail) - target_db;
        if (std::abs(gap) < std::abs(best.gap_db)) best = {std::exp(mid), gap};
        if (std::abs(gap) < 0.05) break;
        (gap > 0 ? hi : lo) = mid;
    }
    return best;
}

struct ConvergenceRace {
    double gnlmp_mu = 0.0;
    Matched glmp;
    Index gnlmp_reach = 0;
    Index glmp_reach = 0;
};

ConvergenceRace race(Algorithm gnlmp, double mu) {
    const auto& setup = reference_setup();
    const AlphaStableModel model(1.5, 0.1);
    const double p = 1.45;
    const Index long_run = 2000, tail = 500, window = 400;
    const auto g = simulate_with(setup, gnlmp, mu, p, model, long_run, 100);
    const double g_steady = tail_mean(g.msd, tail);
    ConvergenceRace r;
    r.gnlmp_mu = mu;
    r.glmp = match_glmp(setup, model, p, to_db(g_steady), long_run, tail, 100, 1);
    const auto l = simulate_with(setup, Algorithm::glmp, r.glmp.glmp_mu, p, model, long_run, 100);
    r.gnlmp_reach = reach_iteration(g.msd, g_steady, 1.0, window);
    r.glmp_reach = reach_iteration(l.msd, tail_mean(l.msd, tail), 1.0, window);
    return r;
}

double glmp_matched_mu = 0.05;

Outcome ac6() {
    const auto r = race(Algorithm::gnlmp_threshold, 0.01);
    glmp_matched_mu = r.glmp.glmp_mu;
    const auto d = race(Algorithm::gnlmp_approx, 0.01);
    const bool matched = std::abs(r.glmp.gap_db) <= 0.5;
    const bool faster = static_cast<double>(r.gnlmp_reach) <= 0.75 * static_cast<double>(r.glmp_reach);
    std::ostringstream out;
    out << "gnlmp-threshold mu " << r.gnlmp_mu << " reaches steady+1 dB at iter " << r.gnlmp_reach << "; glmp mu "
        << fmt("%.4f", r.glmp.glmp_mu) << " (steady gap " << fmt("%+.2f", r.glmp.gap_db) << " dB) at iter "
        << (r.glmp_reach > 400 ? std::string(">400") : std::to_string(r.glmp_reach)) << "; ratio "
        << fmt("%.2f", static_cast<double>(r.gnlmp_reach) / static_cast<double>(r.glmp_reach))
        << " (need <= 0.75) [diagnostic gnlmp-approx: iter " << d.gnlmp_reach << " vs glmp mu "
        << fmt("%.4f", d.glmp.glmp_mu) << " iter " << d.glmp_reach << "]";
    return {matched && faster, out.str()};
}

Outcome ac7() {
    const auto& setup = reference_setup();
    const auto& ops = *setup.ops;
    const AlphaStableModel model(1.5, 0.1);
    const double p = 1.45, mu = 0.01;
    const Index iterations = 400, runs = 100;
    const auto gnlmp = simulate_with(setup, Algorithm::gnlmp_threshold, mu, p, model, iterations, runs);
    const double steady = tail_mean(gnlmp.msd, 100);
    std::vector<double> tail_db;
    for (Index k = iterations - 100; k < iterations; ++k) tail_db.push_back(to_db(gnlmp.msd[static_cast<std::size_t>(k)]));
    const double mean_db = std::accumulate(tail_db.begin(), tail_db.end(), 0.0) / 100.0;
    double var = 0.0;
    for (double v : tail_db) var += (v - mean_db) * (v - mean_db);
    const double sd_db = std::sqrt(var / 99.0);

    // Per-run peak MSD of the least-squares filters.
    auto count_peaks = [&](Algorithm algorithm, double step) {
        FilterConfig fc;
        fc.algorithm = algorithm;
        fc.mu = step;
        fc.p = p;
        std::vector<double> peak(static_cast<std::size_t>(runs), 0.0);
        const Vector x0 = setup.truth.front().col(0);
        run_monte_carlo(runs, 1, [&](Index r, std::uint64_t seed) {
            AdaptiveFilter f(ops, fc, model);
            Rng rng(seed);
            Vector w(ops.n());
            RunTrace t;
            for (Index k = 0; k < iterations; ++k) {
                fill_sas(model, rng, w);
                f.step(x0 + w);
                const double e = (f.estimate() - x0).squaredNorm();
                t.squared_error.push_back(e);
                peak[static_cast<std::size_t>(r)] = std::max(peak[static_cast<std::size_t>(r)], std::isfinite(e) ? e : kDivergedClip);
            }
            return t;
        });
        return static_cast<int>(std::count_if(peak.begin(), peak.end(),
                                              [&](double v) { return to_db(v) >= to_db(steady) + 10.0; }));
    };
    const int glms = count_peaks(Algorithm::glms, glmp_matched_mu);
    const int gnlms = count_peaks(Algorithm::gnlms, mu);
    const bool pass = glms >= 90 && gnlms >= 90 && sd_db < 1.0;
    std::ostringstream out;
    out << "gnlmp-threshold steady " << fmt("%.2f", to_db(steady)) << " dB, last-100 sd " << fmt("%.3f", sd_db)
        << " dB (tol 1); runs with peak >= steady+10 dB: glms (mu " << fmt("%.4f", glmp_matched_mu) << ") " << glms
        << "/100, gnlms (mu " << mu << ") " << gnlms << "/100 (need >= 90)";
    return {pass, out.str()};
}

Outcome ac8() {
    std::ostringstream out;
    bool pass = true;
    for (double alpha : {1.9, 1.6, 1.5, 1.3, 1.2}) {
        const auto& setup = reference_setup();
        const double p = alpha - 0.05;
        const AlphaStableModel model(alpha, 0.1);
        const Index iterations = 5000;
        const auto g = simulate_with(setup, Algorithm::gnlmp_threshold, 0.01, p, model, iterations, 100);
        const double last = db_tail_mean(g.msd, 500);
        std::vector<double> prior(g.msd.end() - 1000, g.msd.end() - 500);
        const double before = to_db(tail_mean(prior, 500));
        const bool finite = std::all_of(g.msd.begin(), g.msd.end(), [](double v) { return std::isfinite(v); });
        const bool converged = finite && g.diverged_runs == 0 && std::abs(last - before) < 0.5 && last < to_db(g.msd.front());

        // Per-iteration wall time, serial so both filters see the same machine state.
        SimulationSpec spec;
        spec.model = model;
        spec.filter.p = p;
        spec.filter.mu = 0.01;
        spec.iterations = iterations;
        spec.runs = 10;
        spec.execution = Execution::serial;
        double t_gnlmp = 0.0, t_glmp = 0.0;
        for (int rep = 0; rep < 3; ++rep) {
            spec.filter.algorithm = Algorithm::glmp;
            t_glmp += simulate(setup, spec).seconds_per_iteration;
            spec.filter.algorithm = Algorithm::gnlmp_threshold;
            t_gnlmp += simulate(setup, spec).seconds_per_iteration;
        }
        const double ratio = t_gnlmp / t_glmp;
        pass = pass && converged && ratio >= 0.8 && ratio <= 1.5;
        out << "a " << alpha << ": tail " << fmt("%.2f", last) << " dB (drift " << fmt("%+.2f", last - before)
            << "), time ratio " << fmt("%.2f", ratio) << (converged ? "" : " NOT CONVERGED") << "; ";
    }
    out << "ratio band [0.8, 1.5]";
    return {pass, out.str()};
}

Outcome ac9() {
    // alpha = 2 with p = alpha - 0.05: the error recursion is close to linear,
    // so crossing the bound is visible as growth rather than a bounded
    // oscillation (see the README).
    const AlphaStableModel model(2.0, 0.1);
    const double p = 1.95;
    int bounded = 0, exploded = 0;
    std::ostringstream out;
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        ExperimentConfig c;
        c.graph.n = 20;
        c.graph.k = 5;
        c.graph.seed = seed;
        c.frequency_size = 6;
        c.sampling_size = 10;
        c.alpha = 2.0;
        c.gamma = 0.1;
        c.finalize();
        const auto setup = build_setup(c);
        const auto cm = build_bn(*setup.ops, model, p);
        const double mu_max = stability_mu_max(cm.b_n, setup.ds, model, p);
        const auto lo = simulate_with(setup, Algorithm::gnlmp_approx, 0.9 * mu_max, p, model, 2000, 20, seed);
        const auto hi = simulate_with(setup, Algorithm::gnlmp_approx, 1.5 * mu_max, p, model, 2000, 20, seed);
        const double lo_peak = *std::max_element(lo.msd.begin(), lo.msd.end());
        const double hi_peak = *std::max_element(hi.msd.begin(), hi.msd.end());
        bounded += lo.diverged_runs == 0 && lo_peak < 1e6;
        exploded += hi_peak > 1e6;
        if (seed == 1) {
            out << "system 1: mu_max " << fmt("%.3f", mu_max) << ", peak MSD " << fmt("%.2e", lo_peak) << " at 0.9x, "
                << fmt("%.2e", hi_peak) << " at 1.5x; ";
        }
    }
    out << "bounded at 0.9x: " << bounded << "/10, above 1e6 at 1.5x: " << exploded << "/10";
    return {bounded == 10 && exploded == 10, out.str()};
}

Outcome ac10() {
    ExperimentConfig c;
    c.graph.n = 197;
    c.graph.k = 7;
    c.graph.seed = 3;
    c.frequency_size = 125;
    c.sampling_size = 130;
    c.frequency_policy = FrequencyPolicy::lowpass;
    c.finalize();
    const auto setup = build_setup(c);
    const auto& ops = *setup.ops;
    const AlphaStableModel model(1.5, 0.1);
    const double p = 1.45;
    const std::vector<double> mus{0.55, 0.475};
    const auto cm = build_bn(ops, model, p);
    const Index steps = 500;
    const auto band = lowpass_frequencies(setup.es, 125);
    const auto temp = synth_timevarying_signal(setup.es, band, steps, 0.02, 11);
    const auto wind = synth_timevarying_signal(setup.es, band, steps, 0.02, 12);

    Rng rng(99);
    Matrix joint = Matrix::Zero(ops.n(), 2), w(ops.n(), 2);
    Vector a = Vector::Zero(ops.n()), b = Vector::Zero(ops.n());
    double worst = 0.0;
    for (Index k = 0; k < steps; ++k) {
        for (Index j = 0; j < 2; ++j) fill_sas(model, rng, w.col(j));
        Matrix y(ops.n(), 2);
        y.col(0) = temp[static_cast<std::size_t>(k)] + w.col(0);
        y.col(1) = wind[static_cast<std::size_t>(k)] + w.col(1);
        joint = multifeature_gnlmp_step(joint, y, ops, cm, mus, p);
        a = gnlmp_approx_step(a, y.col(0), ops, cm, mus[0], p);
        b = gnlmp_approx_step(b, y.col(1), ops, cm, mus[1], p);
        worst = std::max({worst, (joint.col(0) - a).cwiseAbs().maxCoeff(), (joint.col(1) - b).cwiseAbs().maxCoeff()});
    }
    const bool finite = joint.allFinite();
    return {finite && worst <= 1e-12, "n 197, |F| 125, |S| 130, 500 iterations, mu (0.55, 0.475): max |diff| " +
                                          fmt("%.2e", worst) + " (tol 1e-12)"};
}

Outcome ac11() {
    ExperimentConfig c;
    c.graph.n = 197;
    c.graph.k = 7;
    c.graph.seed = 3;
    c.signal.source = SignalSource::timevarying;
    c.signal.steps = 95;
    c.signal.drift = 0.05;
    c.frequency_size = 125;
    c.sampling_size = 130;
    c.alpha = 1.5;
    c.gamma = 0.1;
    c.iterations = 95;
    c.finalize();
    const auto setup = build_setup(c);
    const AlphaStableModel model(1.5, 0.1);
    const double p = 1.45;
    const std::vector<double> grid{0.01, 0.02, 0.05, 0.1, 0.2, 0.3, 0.5, 0.7, 1.0, 1.5};
    struct Best {
        double mu = 0;
        double final_nmsd = std::numeric_limits<double>::infinity();
        MetricSeries series;
    };
    auto search = [&](Algorithm a) {
        Best best;
        for (double mu : grid) {
            auto s = simulate_with(setup, a, mu, p, model, 95, 100);
            if (s.diverged_runs == 0 && s.nmsd.back() < best.final_nmsd) best = {mu, s.nmsd.back(), std::move(s)};
        }
        return best;
    };
    const auto g = search(Algorithm::gnlmp_threshold);
    const auto l = search(Algorithm::glmp);
    const bool found = std::isfinite(g.final_nmsd) && std::isfinite(l.final_nmsd);
    const bool bounded = found && std::all_of(g.series.nmsd.begin(), g.series.nmsd.end(),
                                              [](double v) { return std::isfinite(v); }) &&
                         g.series.nmsd.back() < g.series.nmsd.front();
    Index below = 0;
    if (found) {
        for (std::size_t k = 0; k < g.series.nmsd.size(); ++k) below += g.series.nmsd[k] < l.series.nmsd[k];
    }
    const bool pass = bounded && found && g.final_nmsd < l.final_nmsd;
    std::ostringstream out;
    out << "n 197, |F| 125, |S| 130, 95 steps, 100 runs; best gnlmp-threshold mu " << g.mu << " NMSD_t[95] "
        << fmt("%.2f", to_db(g.final_nmsd)) << " dB, best glmp mu " << l.mu << " NMSD_t[95] "
        << fmt("%.2f", to_db(l.final_nmsd)) << " dB; gnlmp below glmp at " << below << "/95 steps";
    return {pass, out.str()};
}

}  // namespace

int main() {
    std::printf("workers: %d\n", worker_count());
    criterion(1, "p = 2 reductions", 10, ac1);
    criterion(2, "Q-residual", 5, ac2);
    criterion(3, "one-step noiseless interpolation", 1, ac3);
    criterion(4, "SaS sampler fidelity", 30, ac4);
    criterion(5, "steady MSD vs step size and theory", 120, ac5);
    criterion(6, "convergence speed at matched steady MSD", 120, ac6);
    criterion(7, "robustness contrast", 120, ac7);
    criterion(8, "noise sweep and run time", 300, ac8);
    criterion(9, "stability bound", 60, ac9);
    criterion(10, "multi-feature separability", 30, ac10);
    criterion(11, "time-varying tracking substitute", 180, ac11);
    std::printf("%d of 11 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
