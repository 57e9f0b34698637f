#pragma once

#include <cstdint>
#include <fstream>
#include <initializer_list>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include <duelist/harness/compare.hpp>
#include <duelist/harness/experiment.hpp>
#include <duelist/harness/sweep.hpp>

namespace duelist::harness {

/// A comparison config: several algorithms racing on one shared benchmark.
struct CompareSpec {
    std::string benchmark;
    std::optional<benchmarks::ShiftedSphereSpec> sphere;
    std::optional<core::SearchDomain> domain;
    double threshold = 0.0;
    std::vector<ExperimentSpec> experiments;
};

using AnyConfig = std::variant<ExperimentSpec, SweepSpec, CompareSpec>;

namespace detail {

using nlohmann::json;

/// Reject keys outside the allowlist; the error names the full key path.
inline void require_keys(const json& obj, const std::string& path,
                         std::initializer_list<const char*> allowed) {
    for (const auto& item : obj.items()) {
        bool known = false;
        for (const char* key : allowed)
            if (item.key() == key)
                known = true;
        if (!known)
            throw core::ConfigError(path.empty() ? item.key() : path + "." + item.key(),
                                    "unknown key");
    }
}

inline std::string join_path(const std::string& path, const std::string& key) {
    return path.empty() ? key : path + "." + key;
}

inline const json& require_field(const json& obj, const std::string& path,
                                 const std::string& key) {
    auto it = obj.find(key);
    if (it == obj.end())
        throw core::ConfigError(join_path(path, key), "missing required key");
    return *it;
}

inline double get_real(const json& value, const std::string& key_path) {
    if (!value.is_number())
        throw core::ConfigError(key_path, "expected a number");
    return value.get<double>();
}

inline std::uint64_t get_count(const json& value, const std::string& key_path) {
    if (!value.is_number_integer() || (value.is_number_integer() && !value.is_number_unsigned() &&
                                       value.get<std::int64_t>() < 0))
        throw core::ConfigError(key_path, "expected a non-negative integer");
    return value.get<std::uint64_t>();
}

inline std::string get_string(const json& value, const std::string& key_path) {
    if (!value.is_string())
        throw core::ConfigError(key_path, "expected a string");
    return value.get<std::string>();
}

inline std::vector<double> get_real_array(const json& value, const std::string& key_path) {
    if (!value.is_array())
        throw core::ConfigError(key_path, "expected an array of numbers");
    std::vector<double> out;
    out.reserve(value.size());
    for (std::size_t i = 0; i < value.size(); ++i)
        out.push_back(get_real(value[i], key_path + "[" + std::to_string(i) + "]"));
    return out;
}

inline core::SearchDomain parse_domain(const json& obj, const std::string& path) {
    if (!obj.is_object())
        throw core::ConfigError(path, "expected an object");
    require_keys(obj, path, {"lower", "upper", "bits_per_var"});
    core::SearchDomain domain;
    domain.lower = get_real_array(require_field(obj, path, "lower"), join_path(path, "lower"));
    domain.upper = get_real_array(require_field(obj, path, "upper"), join_path(path, "upper"));
    if (obj.contains("bits_per_var"))
        domain.bits_per_var = static_cast<unsigned>(
            get_count(obj["bits_per_var"], join_path(path, "bits_per_var")));
    domain.validate();
    return domain;
}

inline benchmarks::ShiftedSphereSpec parse_sphere(const json& obj, const std::string& path) {
    if (!obj.is_object())
        throw core::ConfigError(path, "expected an object");
    require_keys(obj, path, {"dimension", "shift", "f_bias"});
    benchmarks::ShiftedSphereSpec spec;
    if (obj.contains("dimension"))
        spec.dimension = static_cast<std::size_t>(
            get_count(obj["dimension"], join_path(path, "dimension")));
    if (obj.contains("shift"))
        spec.shift = get_real_array(obj["shift"], join_path(path, "shift"));
    if (obj.contains("f_bias"))
        spec.f_bias = get_real(obj["f_bias"], join_path(path, "f_bias"));
    spec.validate();
    return spec;
}

inline AlgorithmConfig parse_algorithm_config(const std::string& algorithm, const json& obj,
                                              const std::string& path) {
    if (!obj.is_object())
        throw core::ConfigError(path, "expected an object");
    const auto count = [&](const char* key, std::size_t fallback) -> std::size_t {
        if (!obj.contains(key))
            return fallback;
        return static_cast<std::size_t>(get_count(obj[key], join_path(path, key)));
    };
    const auto real = [&](const char* key, double fallback) -> double {
        if (!obj.contains(key))
            return fallback;
        return get_real(obj[key], join_path(path, key));
    };

    if (algorithm == "da") {
        require_keys(obj, path,
                     {"population_size", "max_generations", "luck_coefficient",
                      "learning_probability", "innovation_probability", "champion_count"});
        engine::EngineConfig cfg;
        cfg.population_size = count("population_size", cfg.population_size);
        cfg.max_generations = count("max_generations", cfg.max_generations);
        cfg.luck_coefficient = real("luck_coefficient", cfg.luck_coefficient);
        cfg.learning_probability = real("learning_probability", cfg.learning_probability);
        cfg.innovation_probability = real("innovation_probability", cfg.innovation_probability);
        cfg.champion_count = count("champion_count", cfg.champion_count);
        cfg.validate();
        return cfg;
    }
    if (algorithm == "ga") {
        require_keys(obj, path,
                     {"population_size", "max_generations", "crossover_probability",
                      "mutation_probability", "elitism_count"});
        baselines::GaConfig cfg;
        cfg.population_size = count("population_size", cfg.population_size);
        cfg.max_generations = count("max_generations", cfg.max_generations);
        cfg.crossover_probability = real("crossover_probability", cfg.crossover_probability);
        cfg.mutation_probability = real("mutation_probability", cfg.mutation_probability);
        cfg.elitism_count = count("elitism_count", cfg.elitism_count);
        cfg.validate();
        return cfg;
    }
    if (algorithm == "pso") {
        require_keys(obj, path,
                     {"swarm_size", "max_iterations", "c1", "c2", "theta_start", "theta_end",
                      "velocity_clamp_fraction"});
        baselines::PsoConfig cfg;
        cfg.swarm_size = count("swarm_size", cfg.swarm_size);
        cfg.max_iterations = count("max_iterations", cfg.max_iterations);
        cfg.c1 = real("c1", cfg.c1);
        cfg.c2 = real("c2", cfg.c2);
        cfg.theta_start = real("theta_start", cfg.theta_start);
        cfg.theta_end = real("theta_end", cfg.theta_end);
        cfg.velocity_clamp_fraction = real("velocity_clamp_fraction", cfg.velocity_clamp_fraction);
        cfg.validate();
        return cfg;
    }
    if (algorithm == "ica") {
        require_keys(obj, path,
                     {"country_count", "initial_imperialists", "decades", "revolution_rate",
                      "assimilation_coefficient", "assimilation_angle", "zeta", "damp_ratio"});
        baselines::IcaConfig cfg;
        cfg.country_count = count("country_count", cfg.country_count);
        cfg.initial_imperialists = count("initial_imperialists", cfg.initial_imperialists);
        cfg.decades = count("decades", cfg.decades);
        cfg.revolution_rate = real("revolution_rate", cfg.revolution_rate);
        cfg.assimilation_coefficient =
            real("assimilation_coefficient", cfg.assimilation_coefficient);
        cfg.assimilation_angle = real("assimilation_angle", cfg.assimilation_angle);
        cfg.zeta = real("zeta", cfg.zeta);
        cfg.damp_ratio = real("damp_ratio", cfg.damp_ratio);
        cfg.validate();
        return cfg;
    }
    throw core::ConfigError("algorithm",
                            "unknown id \"" + algorithm + "\" (known: da, ga, pso, ica)");
}

inline std::vector<std::uint64_t> parse_seeds(const json& value, const std::string& key_path) {
    if (!value.is_array())
        throw core::ConfigError(key_path, "expected an array of seeds");
    std::vector<std::uint64_t> seeds;
    seeds.reserve(value.size());
    for (std::size_t i = 0; i < value.size(); ++i)
        seeds.push_back(get_count(value[i], key_path + "[" + std::to_string(i) + "]"));
    return seeds;
}

inline ExperimentSpec parse_experiment_fields(const json& obj, const std::string& path) {
    ExperimentSpec spec;
    spec.algorithm = get_string(require_field(obj, path, "algorithm"), join_path(path, "algorithm"));
    spec.benchmark = get_string(require_field(obj, path, "benchmark"), join_path(path, "benchmark"));
    if (obj.contains("benchmark_spec"))
        spec.sphere = parse_sphere(obj["benchmark_spec"], join_path(path, "benchmark_spec"));
    if (obj.contains("domain"))
        spec.domain = parse_domain(obj["domain"], join_path(path, "domain"));
    spec.config = parse_algorithm_config(
        spec.algorithm, obj.contains("config") ? obj["config"] : json::object(),
        join_path(path, "config"));
    spec.seeds = parse_seeds(require_field(obj, path, "seeds"), join_path(path, "seeds"));
    spec.validate();
    return spec;
}

inline json domain_to_json(const core::SearchDomain& domain) {
    return json{{"lower", domain.lower},
                {"upper", domain.upper},
                {"bits_per_var", domain.bits_per_var}};
}

inline json sphere_to_json(const benchmarks::ShiftedSphereSpec& spec) {
    return json{{"dimension", spec.dimension},
                {"shift", spec.effective_shift()},
                {"f_bias", spec.f_bias}};
}

inline json algorithm_config_to_json(const AlgorithmConfig& config) {
    if (const auto* da = std::get_if<engine::EngineConfig>(&config))
        return json{{"population_size", da->population_size},
                    {"max_generations", da->max_generations},
                    {"luck_coefficient", da->luck_coefficient},
                    {"learning_probability", da->learning_probability},
                    {"innovation_probability", da->innovation_probability},
                    {"champion_count", da->champion_count}};
    if (const auto* ga = std::get_if<baselines::GaConfig>(&config))
        return json{{"population_size", ga->population_size},
                    {"max_generations", ga->max_generations},
                    {"crossover_probability", ga->crossover_probability},
                    {"mutation_probability", ga->mutation_probability},
                    {"elitism_count", ga->elitism_count}};
    if (const auto* pso = std::get_if<baselines::PsoConfig>(&config))
        return json{{"swarm_size", pso->swarm_size},
                    {"max_iterations", pso->max_iterations},
                    {"c1", pso->c1},
                    {"c2", pso->c2},
                    {"theta_start", pso->theta_start},
                    {"theta_end", pso->theta_end},
                    {"velocity_clamp_fraction", pso->velocity_clamp_fraction}};
    const auto& ica = std::get<baselines::IcaConfig>(config);
    return json{{"country_count", ica.country_count},
                {"initial_imperialists", ica.initial_imperialists},
                {"decades", ica.decades},
                {"revolution_rate", ica.revolution_rate},
                {"assimilation_coefficient", ica.assimilation_coefficient},
                {"assimilation_angle", ica.assimilation_angle},
                {"zeta", ica.zeta},
                {"damp_ratio", ica.damp_ratio}};
}

inline json experiment_fields_to_json(const ExperimentSpec& spec) {
    json obj;
    obj["algorithm"] = spec.algorithm;
    obj["benchmark"] = spec.benchmark;
    if (spec.sphere)
        obj["benchmark_spec"] = sphere_to_json(*spec.sphere);
    if (spec.domain)
        obj["domain"] = domain_to_json(*spec.domain);
    obj["config"] = algorithm_config_to_json(spec.config);
    obj["seeds"] = spec.seeds;
    return obj;
}

} // namespace detail

/// Parse a config file.  Strict: unknown keys, wrong types and out-of-range
/// values are all configuration errors naming the offending key path.
inline AnyConfig parse_config(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw core::ConfigError("config", "cannot open file: " + path);
    detail::json doc;
    try {
        doc = detail::json::parse(in);
    } catch (const detail::json::parse_error& e) {
        throw core::ConfigError("document", std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object())
        throw core::ConfigError("document", "top level must be an object");

    const std::string type =
        detail::get_string(detail::require_field(doc, "", "type"), "type");
    if (type == "run") {
        detail::require_keys(doc, "", {"type", "algorithm", "benchmark", "benchmark_spec",
                                       "domain", "config", "seeds"});
        return detail::parse_experiment_fields(doc, "");
    }
    if (type == "sweep") {
        detail::require_keys(doc, "", {"type", "algorithm", "benchmark", "benchmark_spec",
                                       "domain", "config", "seeds", "parameter", "values"});
        SweepSpec spec;
        spec.base = detail::parse_experiment_fields(doc, "");
        spec.parameter =
            detail::get_string(detail::require_field(doc, "", "parameter"), "parameter");
        spec.values =
            detail::get_real_array(detail::require_field(doc, "", "values"), "values");
        if (spec.values.empty())
            throw core::ConfigError("values", "at least one value required");
        // Surface an unknown parameter name at parse time, not mid-sweep.
        AlgorithmConfig probe = spec.base.config;
        detail::apply_parameter(probe, spec.parameter, spec.values.front());
        return spec;
    }
    if (type == "compare") {
        detail::require_keys(doc, "", {"type", "benchmark", "benchmark_spec", "domain",
                                       "threshold", "experiments"});
        CompareSpec spec;
        spec.benchmark =
            detail::get_string(detail::require_field(doc, "", "benchmark"), "benchmark");
        if (doc.contains("benchmark_spec"))
            spec.sphere = detail::parse_sphere(doc["benchmark_spec"], "benchmark_spec");
        if (doc.contains("domain"))
            spec.domain = detail::parse_domain(doc["domain"], "domain");
        spec.threshold =
            detail::get_real(detail::require_field(doc, "", "threshold"), "threshold");
        const detail::json& experiments = detail::require_field(doc, "", "experiments");
        if (!experiments.is_array() || experiments.empty())
            throw core::ConfigError("experiments", "expected a non-empty array");
        for (std::size_t i = 0; i < experiments.size(); ++i) {
            const std::string path = "experiments[" + std::to_string(i) + "]";
            const detail::json& entry = experiments[i];
            if (!entry.is_object())
                throw core::ConfigError(path, "expected an object");
            detail::require_keys(entry, path, {"algorithm", "config", "seeds"});
            ExperimentSpec exp;
            exp.algorithm = detail::get_string(detail::require_field(entry, path, "algorithm"),
                                               detail::join_path(path, "algorithm"));
            exp.benchmark = spec.benchmark;
            exp.sphere = spec.sphere;
            exp.domain = spec.domain;
            exp.config = detail::parse_algorithm_config(
                exp.algorithm, entry.contains("config") ? entry["config"] : detail::json::object(),
                detail::join_path(path, "config"));
            exp.seeds = detail::parse_seeds(detail::require_field(entry, path, "seeds"),
                                            detail::join_path(path, "seeds"));
            exp.validate();
            spec.experiments.push_back(std::move(exp));
        }
        return spec;
    }
    throw core::ConfigError("type", "expected \"run\", \"sweep\" or \"compare\", got \"" +
                                        type + "\"");
}

/// Canonical JSON with every default materialized; parsing it again yields
/// the same spec, and re-emission is byte-identical.
inline std::string canonical_config(const AnyConfig& config) {
    detail::json doc;
    if (const auto* run = std::get_if<ExperimentSpec>(&config)) {
        doc = detail::experiment_fields_to_json(*run);
        doc["type"] = "run";
    } else if (const auto* sw = std::get_if<SweepSpec>(&config)) {
        doc = detail::experiment_fields_to_json(sw->base);
        doc["type"] = "sweep";
        doc["parameter"] = sw->parameter;
        doc["values"] = sw->values;
    } else {
        const auto& cmp = std::get<CompareSpec>(config);
        doc["type"] = "compare";
        doc["benchmark"] = cmp.benchmark;
        if (cmp.sphere)
            doc["benchmark_spec"] = detail::sphere_to_json(*cmp.sphere);
        if (cmp.domain)
            doc["domain"] = detail::domain_to_json(*cmp.domain);
        doc["threshold"] = cmp.threshold;
        doc["experiments"] = detail::json::array();
        for (const auto& exp : cmp.experiments) {
            detail::json entry;
            entry["algorithm"] = exp.algorithm;
            entry["config"] = detail::algorithm_config_to_json(exp.config);
            entry["seeds"] = exp.seeds;
            doc["experiments"].push_back(entry);
        }
    }
    return doc.dump(2) + "\n";
}

} // namespace duelist::harness
