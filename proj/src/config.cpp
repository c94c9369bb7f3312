#include "gspf/config.hpp"

#include <fstream>
#include <sstream>

#include "csv.hpp"
#include "gspf/error.hpp"

namespace gspf {

namespace {

[[noreturn]] void bad_value(const std::string& key, const std::string& value) {
    throw Error(ErrorCode::parse_error, "invalid value '" + value + "' for key '" + key + "'");
}

double as_double(const std::string& key, const std::string& value) {
    double v = 0.0;
    if (!csv::parse_double(value, v)) bad_value(key, value);
    return v;
}

long long as_int(const std::string& key, const std::string& value) {
    long long v = 0;
    if (!csv::parse_int(value, v)) bad_value(key, value);
    return v;
}

std::uint64_t as_seed(const std::string& key, const std::string& value) {
    const long long v = as_int(key, value);
    if (v < 0) bad_value(key, value);
    return static_cast<std::uint64_t>(v);
}

bool as_bool(const std::string& key, const std::string& value) {
    if (value == "true" || value == "1" || value == "yes") return true;
    if (value == "false" || value == "0" || value == "no") return false;
    bad_value(key, value);
}

std::filesystem::path as_path(const std::string& value, const std::filesystem::path& base) {
    std::filesystem::path p(value);
    if (p.is_relative() && !base.empty()) p = base / p;
    return p;
}

std::string join(const std::vector<std::string>& parts) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += ',';
        out += parts[i];
    }
    return out;
}

std::string num(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

void require_file(const std::filesystem::path& p, const char* key) {
    if (p.empty()) throw Error(ErrorCode::invalid_parameter, std::string(key) + " is required");
    if (!std::filesystem::exists(p)) {
        throw Error(ErrorCode::io_error, std::string(key) + " refers to missing file " + p.string());
    }
}

}  // namespace

void apply_setting(ExperimentConfig& c, const std::string& key, const std::string& value,
                   const std::filesystem::path& base) {
    if (key == "graph.type") {
        if (value == "sensor") c.graph.source = GraphSource::sensor;
        else if (value == "knn-file") c.graph.source = GraphSource::knn_file;
        else if (value == "edge-list") c.graph.source = GraphSource::edge_list;
        else bad_value(key, value);
    } else if (key == "graph.n") {
        c.graph.n = as_int(key, value);
    } else if (key == "graph.k") {
        c.graph.k = static_cast<int>(as_int(key, value));
    } else if (key == "graph.seed") {
        c.graph.seed = as_seed(key, value);
    } else if (key == "graph.weights") {
        if (value == "gaussian") c.graph.weighting = EdgeWeighting::gaussian;
        else if (value == "binary") c.graph.weighting = EdgeWeighting::binary;
        else bad_value(key, value);
    } else if (key == "graph.coords") {
        c.graph.coords = as_path(value, base);
    } else if (key == "graph.edges") {
        c.graph.edges = as_path(value, base);
    } else if (key == "graph.geographic") {
        c.graph.geographic = as_bool(key, value);
    } else if (key == "signal.type") {
        if (value == "synthetic") c.signal.source = SignalSource::synthetic;
        else if (value == "file") c.signal.source = SignalSource::file;
        else if (value == "synthetic-timevarying") c.signal.source = SignalSource::timevarying;
        else bad_value(key, value);
    } else if (key == "signal.bandwidth") {
        c.signal.bandwidth = as_int(key, value);
    } else if (key == "signal.seed") {
        c.signal.seed = as_seed(key, value);
    } else if (key == "signal.amplitude") {
        c.signal.amplitude = as_double(key, value);
    } else if (key == "signal.steps") {
        c.signal.steps = as_int(key, value);
    } else if (key == "signal.drift") {
        c.signal.drift = as_double(key, value);
    } else if (key == "signal.paths") {
        c.signal.paths.clear();
        for (const auto& part : csv::split(value)) {
            if (!part.empty()) c.signal.paths.push_back(as_path(part, base));
        }
    } else if (key == "frequency.size") {
        c.frequency_size = as_int(key, value);
    } else if (key == "frequency.policy") {
        c.frequency_policy = parse_frequency_policy(value);
    } else if (key == "sampling.size") {
        c.sampling_size = as_int(key, value);
    } else if (key == "sampling.strategy") {
        c.sampling_strategy = parse_sampling_objective(value);
    } else if (key == "noise.alpha") {
        c.alpha = as_double(key, value);
    } else if (key == "noise.gamma") {
        c.gamma = as_double(key, value);
    } else if (key == "filter.algorithm") {
        c.filter.algorithm = parse_algorithm(value);
    } else if (key == "filter.mu") {
        c.filter.mu = as_double(key, value);
    } else if (key == "filter.mu_list") {
        c.filter.mu_list.clear();
        for (const auto& part : csv::split(value)) c.filter.mu_list.push_back(as_double(key, part));
    } else if (key == "filter.p") {
        c.filter.p = as_double(key, value);
        c.p_explicit = true;
    } else if (key == "filter.iterations") {
        c.iterations = as_int(key, value);
    } else if (key == "filter.runs") {
        c.runs = as_int(key, value);
    } else if (key == "filter.base_seed") {
        c.base_seed = as_seed(key, value);
    } else if (key == "filter.epsilon") {
        c.filter.epsilon_clamp = as_double(key, value);
    } else if (key == "filter.ridge") {
        c.filter.ridge_delta = as_double(key, value);
    } else if (key == "filter.threshold") {
        c.filter.threshold = as_double(key, value);
    } else if (key == "analysis.rp_reading") {
        c.rp_reading = parse_rp_reading(value);
    } else if (key == "output.directory") {
        c.output_directory = as_path(value, base);
    } else {
        throw Error(ErrorCode::parse_error, "unknown key '" + key + "'");
    }
}

ExperimentConfig parse_config(const std::string& text, const std::filesystem::path& base_dir) {
    ExperimentConfig config;
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        const auto body = csv::trim(line);
        if (body.empty()) continue;
        const auto eq = body.find('=');
        if (eq == std::string_view::npos) {
            throw Error(ErrorCode::parse_error, "line " + std::to_string(lineno) + ": expected key = value");
        }
        const std::string key(csv::trim(body.substr(0, eq)));
        const std::string value(csv::trim(body.substr(eq + 1)));
        try {
            apply_setting(config, key, value, base_dir);
        } catch (const Error& e) {
            throw Error(e.code(), "line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return config;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::io_error, "cannot open config " + path.string());
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str(), path.parent_path());
}

void ExperimentConfig::finalize() {
    if (runs < 1) throw Error(ErrorCode::invalid_parameter, "filter.runs must be at least 1");
    if (iterations < 1) throw Error(ErrorCode::invalid_parameter, "filter.iterations must be at least 1");
    if (!p_explicit) filter.p = alpha - 0.05;
    if (!signal.bandwidth) signal.bandwidth = frequency_size;
    if (frequency_size < 1) throw Error(ErrorCode::invalid_parameter, "frequency.size must be positive");
    if (sampling_size < frequency_size) {
        throw Error(ErrorCode::infeasible_sampling, "sampling.size must be at least frequency.size");
    }
    filter.validate();
    switch (graph.source) {
    case GraphSource::sensor: break;
    case GraphSource::knn_file: require_file(graph.coords, "graph.coords"); break;
    case GraphSource::edge_list: require_file(graph.edges, "graph.edges"); break;
    }
    if (signal.source == SignalSource::file) {
        if (graph.source != GraphSource::knn_file) {
            throw Error(ErrorCode::invalid_parameter, "file signals need graph.type = knn-file (station coordinates)");
        }
        if (signal.paths.empty()) throw Error(ErrorCode::invalid_parameter, "signal.paths is required");
        for (const auto& p : signal.paths) require_file(p, "signal.paths");
        const auto d = signal.paths.size();
        if (d > 1 && filter.mu_list.size() != d) {
            throw Error(ErrorCode::invalid_parameter, "filter.mu_list needs one step size per feature");
        }
    }
    if (signal.source == SignalSource::timevarying && iterations > signal.steps) {
        throw Error(ErrorCode::invalid_parameter, "filter.iterations exceeds signal.steps");
    }
}

std::map<std::string, std::string> ExperimentConfig::to_map() const {
    std::map<std::string, std::string> m;
    static const char* graph_names[] = {"sensor", "knn-file", "edge-list"};
    static const char* signal_names[] = {"synthetic", "file", "synthetic-timevarying"};
    m["graph.type"] = graph_names[static_cast<int>(graph.source)];
    m["graph.n"] = std::to_string(graph.n);
    m["graph.k"] = std::to_string(graph.k);
    m["graph.seed"] = std::to_string(graph.seed);
    m["graph.weights"] = graph.weighting == EdgeWeighting::gaussian ? "gaussian" : "binary";
    if (!graph.coords.empty()) m["graph.coords"] = graph.coords.string();
    if (!graph.edges.empty()) m["graph.edges"] = graph.edges.string();
    m["signal.type"] = signal_names[static_cast<int>(signal.source)];
    if (signal.bandwidth) m["signal.bandwidth"] = std::to_string(*signal.bandwidth);
    m["signal.seed"] = std::to_string(signal.seed);
    m["signal.amplitude"] = num(signal.amplitude);
    m["signal.steps"] = std::to_string(signal.steps);
    m["signal.drift"] = num(signal.drift);
    std::vector<std::string> paths;
    for (const auto& p : signal.paths) paths.push_back(p.string());
    if (!paths.empty()) m["signal.paths"] = join(paths);
    m["frequency.size"] = std::to_string(frequency_size);
    m["frequency.policy"] = to_string(frequency_policy);
    m["sampling.size"] = std::to_string(sampling_size);
    m["sampling.strategy"] = to_string(sampling_strategy);
    m["noise.alpha"] = num(alpha);
    m["noise.gamma"] = num(gamma);
    m["filter.algorithm"] = to_string(filter.algorithm);
    m["filter.mu"] = num(filter.mu);
    std::vector<std::string> mus;
    for (double v : filter.mu_list) mus.push_back(num(v));
    if (!mus.empty()) m["filter.mu_list"] = join(mus);
    m["filter.p"] = num(filter.p);
    m["filter.iterations"] = std::to_string(iterations);
    m["filter.runs"] = std::to_string(runs);
    m["filter.base_seed"] = std::to_string(base_seed);
    m["filter.epsilon"] = num(filter.epsilon_clamp);
    m["filter.ridge"] = num(filter.ridge_delta);
    if (filter.threshold) m["filter.threshold"] = num(*filter.threshold);
    m["analysis.rp_reading"] = to_string(rp_reading);
    m["output.directory"] = output_directory.string();
    return m;
}

}  // namespace gspf
