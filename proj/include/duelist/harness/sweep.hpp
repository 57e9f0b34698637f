#pragma once

#include <algorithm>
#include <string>
#include <variant>
#include <vector>

#include <duelist/harness/experiment.hpp>

namespace duelist::harness {

/// Re-run one experiment while one named parameter walks a value list.
struct SweepSpec {
    ExperimentSpec base;
    std::string parameter;
    std::vector<double> values;
};

struct SweepRow {
    double parameter_value = 0.0;
    double best_solution_median = 0.0;
    double iteration_median = 0.0;
};

namespace detail {

inline std::size_t as_count(double value, const std::string& parameter) {
    if (value < 0.0 || value != static_cast<double>(static_cast<std::size_t>(value)))
        throw core::ConfigError("sweep.values",
                                parameter + " takes whole numbers, got a fractional value");
    return static_cast<std::size_t>(value);
}

/// Assign a named parameter inside whichever config block the spec holds.
inline void apply_parameter(AlgorithmConfig& config, const std::string& name, double value) {
    const auto unknown = [&]() -> core::ConfigError {
        return core::ConfigError("sweep.parameter",
                                 "\"" + name + "\" is not a parameter of this algorithm");
    };
    if (auto* da = std::get_if<engine::EngineConfig>(&config)) {
        if (name == "luck_coefficient")
            da->luck_coefficient = value;
        else if (name == "learning_probability")
            da->learning_probability = value;
        else if (name == "innovation_probability")
            da->innovation_probability = value;
        else if (name == "population_size")
            da->population_size = as_count(value, name);
        else if (name == "max_generations")
            da->max_generations = as_count(value, name);
        else if (name == "champion_count")
            da->champion_count = as_count(value, name);
        else
            throw unknown();
        return;
    }
    if (auto* ga = std::get_if<baselines::GaConfig>(&config)) {
        if (name == "crossover_probability")
            ga->crossover_probability = value;
        else if (name == "mutation_probability")
            ga->mutation_probability = value;
        else if (name == "population_size")
            ga->population_size = as_count(value, name);
        else if (name == "max_generations")
            ga->max_generations = as_count(value, name);
        else if (name == "elitism_count")
            ga->elitism_count = as_count(value, name);
        else
            throw unknown();
        return;
    }
    if (auto* pso = std::get_if<baselines::PsoConfig>(&config)) {
        if (name == "c1")
            pso->c1 = value;
        else if (name == "c2")
            pso->c2 = value;
        else if (name == "theta_start")
            pso->theta_start = value;
        else if (name == "theta_end")
            pso->theta_end = value;
        else if (name == "velocity_clamp_fraction")
            pso->velocity_clamp_fraction = value;
        else if (name == "swarm_size")
            pso->swarm_size = as_count(value, name);
        else if (name == "max_iterations")
            pso->max_iterations = as_count(value, name);
        else
            throw unknown();
        return;
    }
    auto& ica = std::get<baselines::IcaConfig>(config);
    if (name == "revolution_rate")
        ica.revolution_rate = value;
    else if (name == "assimilation_coefficient")
        ica.assimilation_coefficient = value;
    else if (name == "assimilation_angle")
        ica.assimilation_angle = value;
    else if (name == "zeta")
        ica.zeta = value;
    else if (name == "damp_ratio")
        ica.damp_ratio = value;
    else if (name == "country_count")
        ica.country_count = as_count(value, name);
    else if (name == "initial_imperialists")
        ica.initial_imperialists = as_count(value, name);
    else if (name == "decades")
        ica.decades = as_count(value, name);
    else
        throw unknown();
}

} // namespace detail

/// One fresh experiment per value (no reuse across values); rows come back
/// sorted by parameter value.
inline std::vector<SweepRow> sweep(const SweepSpec& spec) {
    if (spec.parameter.empty())
        throw core::ConfigError("sweep.parameter", "must not be empty");
    if (spec.values.empty())
        throw core::ConfigError("sweep.values", "at least one value required");

    std::vector<double> values = spec.values;
    std::sort(values.begin(), values.end());

    std::vector<SweepRow> rows;
    rows.reserve(values.size());
    for (double value : values) {
        ExperimentSpec exp = spec.base;
        detail::apply_parameter(exp.config, spec.parameter, value);
        ExperimentResult result = run_experiment(exp);
        SweepRow row;
        row.parameter_value = value;
        row.best_solution_median = result.best_fitness.median;
        row.iteration_median = result.generations_to_best.median;
        rows.push_back(row);
    }
    return rows;
}

} // namespace duelist::harness
