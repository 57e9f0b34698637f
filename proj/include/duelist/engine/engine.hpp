#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <duelist/core/codec.hpp>
#include <duelist/core/random.hpp>
#include <duelist/core/types.hpp>
#include <duelist/engine/config.hpp>
#include <duelist/engine/trace.hpp>

namespace duelist::engine {

// Sub-stream tags so that initialization and the per-generation operators
// draw from independent generators.  Two algorithms seeded alike can then
// share the exact same starting population while diverging afterwards.
inline constexpr std::uint64_t kInitStreamTag = 0x696e69747374726dULL; // "initstrm"
inline constexpr std::uint64_t kOpsStreamTag = 0x6f70737374726d21ULL;  // "opsstrm!"

/// Draw a fresh random population.  Fitness is left unset.
inline std::vector<core::Duelist> register_population(std::size_t population_size,
                                                      const core::SearchDomain& domain,
                                                      core::RandomStream& rng) {
    std::vector<core::Duelist> population;
    population.reserve(population_size);
    for (std::size_t i = 0; i < population_size; ++i) {
        core::Duelist d;
        d.skillset = core::random_skillset(domain, rng);
        population.push_back(std::move(d));
    }
    return population;
}

/// Evaluate every member that does not yet have a valid fitness.
inline void prequalify(std::vector<core::Duelist>& population,
                       const core::Objective& objective,
                       const core::SearchDomain& domain,
                       core::EvalCounter& counter) {
    for (auto& d : population) {
        if (!d.has_fitness())
            core::evaluate(d, objective, domain, counter);
    }
}

/// Champions board: indices of the protected elite plus one fighting clone
/// per champion.  Clones share skillset and fitness with their originals,
/// so they enter the duels at full strength without costing an evaluation.
struct ChampionBoard {
    std::vector<std::size_t> champion_indices;
    std::vector<core::Duelist> clones;
};

/// Pick the `champion_count` fittest members (ties broken by lower index),
/// mark them as champions and spawn their clones.
inline ChampionBoard select_champions(std::vector<core::Duelist>& population,
                                      std::size_t champion_count) {
    if (champion_count > population.size())
        throw core::ContractViolation("select_champions: champion_count exceeds population");

    std::vector<std::size_t> order(population.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return population[a].fitness > population[b].fitness;
    });

    ChampionBoard board;
    board.champion_indices.assign(order.begin(),
                                  order.begin() + static_cast<std::ptrdiff_t>(champion_count));
    for (std::size_t idx : board.champion_indices) {
        population[idx].category = core::Category::champion;
        core::Duelist clone;
        clone.skillset = population[idx].skillset;
        clone.fitness = population[idx].fitness;
        clone.category = core::Category::unranked;
        board.clones.push_back(std::move(clone));
    }
    return board;
}

/// A round of duels: disjoint pairs drawn uniformly at random.  With an odd
/// number of fighters one sits the round out.
struct DuelSchedule {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    std::optional<std::size_t> bye;
};

inline DuelSchedule schedule_duels(std::size_t fighter_count, core::RandomStream& rng) {
    DuelSchedule sched;
    std::vector<std::size_t> order = core::shuffled_indices(fighter_count, rng);
    const std::size_t full = fighter_count / 2;
    sched.pairs.reserve(full);
    for (std::size_t i = 0; i < full; ++i)
        sched.pairs.emplace_back(order[2 * i], order[2 * i + 1]);
    if (fighter_count % 2 == 1)
        sched.bye = order.back();
    return sched;
}

struct DuelOutcome {
    bool first_won = false;
    double first_total = 0.0;
    double second_total = 0.0;
};

/// Fight one duel.  Each side's luck is  fitness * (LC + u * LC)  with
/// u uniform in [0,1); the higher fitness-plus-luck total wins and an exact
/// tie is settled by a fair coin.  Categories are updated on both sides.
inline DuelOutcome duel(core::Duelist& first, core::Duelist& second,
                        double luck_coefficient, core::RandomStream& rng) {
    const double u1 = rng.next_unit();
    const double u2 = rng.next_unit();
    first.luck = first.fitness * (luck_coefficient + u1 * luck_coefficient);
    second.luck = second.fitness * (luck_coefficient + u2 * luck_coefficient);

    DuelOutcome outcome;
    outcome.first_total = first.fitness + first.luck;
    outcome.second_total = second.fitness + second.luck;
    if (outcome.first_total > outcome.second_total)
        outcome.first_won = true;
    else if (outcome.first_total < outcome.second_total)
        outcome.first_won = false;
    else
        outcome.first_won = rng.next_bernoulli(0.5);

    (outcome.first_won ? first : second).category = core::Category::winner;
    (outcome.first_won ? second : first).category = core::Category::loser;
    return outcome;
}

/// The loser trains by copying each of the winner's bits with probability
/// `learning_probability`.  Returns true if any bit actually changed, in
/// which case the caller must invalidate the loser's fitness.
inline bool learn(core::Duelist& loser, const core::Skillset& winner_skillset,
                  double learning_probability, core::RandomStream& rng) {
    if (loser.skillset.size() != winner_skillset.size())
        throw core::ContractViolation("learn: skillset lengths differ");
    bool changed = false;
    for (std::size_t i = 0; i < winner_skillset.size(); ++i) {
        if (rng.next_bernoulli(learning_probability) &&
            loser.skillset.bit(i) != winner_skillset.bit(i)) {
            loser.skillset.set_bit(i, winner_skillset.bit(i));
            changed = true;
        }
    }
    return changed;
}

/// The winner experiments, flipping each own bit with probability
/// `innovation_probability`.  Returns true if any bit changed.
inline bool innovate(core::Duelist& winner, double innovation_probability,
                     core::RandomStream& rng) {
    bool changed = false;
    for (std::size_t i = 0; i < winner.skillset.size(); ++i) {
        if (rng.next_bernoulli(innovation_probability)) {
            winner.skillset.flip_bit(i);
            changed = true;
        }
    }
    return changed;
}

/// Keep the `survivor_count` fittest members of the pool, ties broken by
/// pool order.  The result is sorted by descending fitness.
inline std::vector<core::Duelist> eliminate(std::vector<core::Duelist> pool,
                                            std::size_t survivor_count) {
    if (survivor_count > pool.size())
        throw core::ContractViolation("eliminate: survivor_count exceeds pool size");
    std::stable_sort(pool.begin(), pool.end(), [](const core::Duelist& a, const core::Duelist& b) {
        return a.fitness > b.fitness;
    });
    pool.resize(survivor_count);
    return pool;
}

/// Called after each generation with the surviving population.
using GenerationObserver =
    std::function<void(const GenerationRecord&, const std::vector<core::Duelist>&)>;

/// Run the full algorithm: register, prequalify, then per generation select
/// champions, duel, let losers learn and winners innovate, re-qualify the
/// changed fighters and eliminate back down to size.
inline RunResult run(const EngineConfig& config, const core::Objective& objective,
                     const core::SearchDomain& domain,
                     const GenerationObserver& observer = nullptr) {
    config.validate();
    domain.validate();

    core::RandomStream init_rng(core::derive_seed(config.seed, kInitStreamTag));
    core::RandomStream ops_rng(core::derive_seed(config.seed, kOpsStreamTag));
    core::EvalCounter counter;

    std::vector<core::Duelist> population =
        register_population(config.population_size, domain, init_rng);
    prequalify(population, objective, domain, counter);

    RunResult result;
    result.trace.reserve(config.max_generations);

    for (std::size_t gen = 1; gen <= config.max_generations; ++gen) {
        for (auto& d : population)
            d.category = core::Category::unranked;

        ChampionBoard board = select_champions(population, config.champion_count);

        // Fighters are everyone but the champions, plus the champions' clones.
        std::vector<core::Duelist> fighters;
        fighters.reserve(population.size());
        std::vector<bool> is_champion(population.size(), false);
        for (std::size_t idx : board.champion_indices)
            is_champion[idx] = true;
        for (std::size_t i = 0; i < population.size(); ++i) {
            if (!is_champion[i])
                fighters.push_back(population[i]);
        }
        for (auto& clone : board.clones)
            fighters.push_back(std::move(clone));

        DuelSchedule sched = schedule_duels(fighters.size(), ops_rng);
        for (const auto& [i, j] : sched.pairs) {
            DuelOutcome outcome =
                duel(fighters[i], fighters[j], config.luck_coefficient, ops_rng);
            core::Duelist& winner = outcome.first_won ? fighters[i] : fighters[j];
            core::Duelist& loser = outcome.first_won ? fighters[j] : fighters[i];

            // The loser studies the winner as it fought, before innovation.
            core::Skillset winner_before = winner.skillset;
            if (learn(loser, winner_before, config.learning_probability, ops_rng))
                loser.fitness = core::kUnsetFitness;
            if (innovate(winner, config.innovation_probability, ops_rng))
                winner.fitness = core::kUnsetFitness;
        }

        try {
            prequalify(fighters, objective, domain, counter);
        } catch (const core::EvaluationError& e) {
            throw core::EvaluationError("generation " + std::to_string(gen) + ": " + e.what(),
                                        e.point());
        }

        std::vector<core::Duelist> pool;
        pool.reserve(config.champion_count + fighters.size());
        for (std::size_t idx : board.champion_indices)
            pool.push_back(population[idx]);
        for (auto& f : fighters)
            pool.push_back(std::move(f));
        population = eliminate(std::move(pool), config.population_size);

        GenerationRecord record;
        record.generation = gen;
        record.best_fitness = population.front().fitness;
        double sum = 0.0;
        for (const auto& d : population)
            sum += d.fitness;
        record.mean_fitness = sum / static_cast<double>(population.size());
        record.best_point = core::decode(population.front().skillset, domain);
        record.evaluations = counter.count;
        result.trace.push_back(record);

        if (observer)
            observer(result.trace.back(), population);
    }

    const core::Duelist& best = population.front();
    result.best_fitness = best.fitness;
    result.best_point = core::decode(best.skillset, domain);
    result.best_skillset = best.skillset;
    result.generations_to_best = generations_to_best(result.trace);
    return result;
}

} // namespace duelist::engine
