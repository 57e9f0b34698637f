#pragma once

#include <cstdint>
#include <string>

#include <duelist/core/types.hpp>

namespace duelist::engine {

/// All hyperparameters of one Duelist Algorithm run.
struct EngineConfig {
    std::size_t population_size = 100;
    std::size_t max_generations = 200;
    double luck_coefficient = 0.0;
    double learning_probability = 0.5;
    double innovation_probability = 0.5;
    std::size_t champion_count = 5;
    std::uint64_t seed = 1;

    void validate() const {
        if (population_size < 2)
            throw core::ConfigError("population_size", "must be at least 2");
        if (max_generations < 1)
            throw core::ConfigError("max_generations", "must be at least 1");
        if (luck_coefficient < 0.0)
            throw core::ConfigError("luck_coefficient", "must be non-negative");
        if (learning_probability < 0.0 || learning_probability > 1.0)
            throw core::ConfigError("learning_probability", "must be in [0, 1]");
        if (innovation_probability < 0.0 || innovation_probability > 1.0)
            throw core::ConfigError("innovation_probability", "must be in [0, 1]");
        if (champion_count < 1)
            throw core::ConfigError("champion_count", "must be at least 1");
        if (champion_count >= population_size)
            throw core::ConfigError("champion_count",
                                    "must be below population_size (" +
                                        std::to_string(population_size) + ")");
    }
};

} // namespace duelist::engine
