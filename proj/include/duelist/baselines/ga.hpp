#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

#include <duelist/core/codec.hpp>
#include <duelist/core/random.hpp>
#include <duelist/core/types.hpp>
#include <duelist/engine/engine.hpp>
#include <duelist/engine/trace.hpp>

namespace duelist::baselines {

inline constexpr std::uint64_t kGaOpsStreamTag = 0x67615f6f70737421ULL; // "ga_ops"

/// Binary genetic algorithm sharing the engine's codec: tournament
/// selection of size 2, single-point crossover, per-bit mutation.
struct GaConfig {
    std::size_t population_size = 100;
    std::size_t max_generations = 200;
    double crossover_probability = 0.8;
    double mutation_probability = 0.5;
    std::size_t elitism_count = 2;
    std::uint64_t seed = 1;

    void validate() const {
        if (population_size < 2)
            throw core::ConfigError("population_size", "must be at least 2");
        if (max_generations < 1)
            throw core::ConfigError("max_generations", "must be at least 1");
        if (crossover_probability < 0.0 || crossover_probability > 1.0)
            throw core::ConfigError("crossover_probability", "must be in [0, 1]");
        if (mutation_probability < 0.0 || mutation_probability > 1.0)
            throw core::ConfigError("mutation_probability", "must be in [0, 1]");
        if (elitism_count > population_size)
            throw core::ConfigError("elitism_count", "must not exceed population_size");
    }
};

namespace detail {

/// Index of the fitter of two uniformly drawn members; ties keep the
/// first draw.
inline std::size_t tournament_pick(const std::vector<core::Duelist>& population,
                                   core::RandomStream& rng) {
    const std::size_t a = static_cast<std::size_t>(rng.next_below(population.size()));
    const std::size_t b = static_cast<std::size_t>(rng.next_below(population.size()));
    return population[b].fitness > population[a].fitness ? b : a;
}

} // namespace detail

/// Run the GA.  Seeded like the engine: the same seed gives the exact same
/// initial population as a DA run, so head-to-head traces start level.
inline engine::RunResult run_ga(const GaConfig& config, const core::Objective& objective,
                                const core::SearchDomain& domain) {
    config.validate();
    domain.validate();

    core::RandomStream init_rng(core::derive_seed(config.seed, engine::kInitStreamTag));
    core::RandomStream ops_rng(core::derive_seed(config.seed, kGaOpsStreamTag));
    core::EvalCounter counter;

    std::vector<core::Duelist> population =
        engine::register_population(config.population_size, domain, init_rng);
    engine::prequalify(population, objective, domain, counter);

    const std::size_t bit_count = domain.skillset_length();
    engine::RunResult result;
    result.trace.reserve(config.max_generations);

    for (std::size_t gen = 1; gen <= config.max_generations; ++gen) {
        // Elites survive verbatim; ties broken by lower index.
        std::vector<std::size_t> order(population.size());
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return population[a].fitness > population[b].fitness;
        });
        std::vector<core::Duelist> next;
        next.reserve(config.population_size);
        for (std::size_t e = 0; e < config.elitism_count; ++e)
            next.push_back(population[order[e]]);

        while (next.size() < config.population_size) {
            const std::size_t p1 = detail::tournament_pick(population, ops_rng);
            const std::size_t p2 = detail::tournament_pick(population, ops_rng);
            core::Duelist child1 = population[p1];
            core::Duelist child2 = population[p2];

            if (bit_count >= 2 && ops_rng.next_bernoulli(config.crossover_probability)) {
                const std::size_t cut =
                    1 + static_cast<std::size_t>(ops_rng.next_below(bit_count - 1));
                for (std::size_t i = cut; i < bit_count; ++i) {
                    const std::uint8_t tmp = child1.skillset.bit(i);
                    child1.skillset.set_bit(i, child2.skillset.bit(i));
                    child2.skillset.set_bit(i, tmp);
                }
                child1.fitness = core::kUnsetFitness;
                child2.fitness = core::kUnsetFitness;
            }
            for (core::Duelist* child : {&child1, &child2}) {
                for (std::size_t i = 0; i < bit_count; ++i) {
                    if (ops_rng.next_bernoulli(config.mutation_probability)) {
                        child->skillset.flip_bit(i);
                        child->fitness = core::kUnsetFitness;
                    }
                }
            }

            next.push_back(std::move(child1));
            if (next.size() < config.population_size)
                next.push_back(std::move(child2));
        }

        engine::prequalify(next, objective, domain, counter);
        population = std::move(next);

        engine::GenerationRecord record;
        record.generation = gen;
        std::size_t best_idx = 0;
        double sum = 0.0;
        for (std::size_t i = 0; i < population.size(); ++i) {
            sum += population[i].fitness;
            if (population[i].fitness > population[best_idx].fitness)
                best_idx = i;
        }
        record.best_fitness = population[best_idx].fitness;
        record.mean_fitness = sum / static_cast<double>(population.size());
        record.best_point = core::decode(population[best_idx].skillset, domain);
        record.evaluations = counter.count;
        result.trace.push_back(std::move(record));
    }

    std::size_t best_idx = 0;
    for (std::size_t i = 1; i < population.size(); ++i)
        if (population[i].fitness > population[best_idx].fitness)
            best_idx = i;
    result.best_fitness = population[best_idx].fitness;
    result.best_point = core::decode(population[best_idx].skillset, domain);
    result.best_skillset = population[best_idx].skillset;
    result.generations_to_best = engine::generations_to_best(result.trace);
    return result;
}

} // namespace duelist::baselines
