#pragma once

#include <cstdint>
#include <vector>

#include <duelist/core/types.hpp>

namespace duelist::engine {

/// Snapshot of the population taken after the elimination step of one
/// generation.  `generation` starts at 1, `evaluations` is cumulative.
struct GenerationRecord {
    std::size_t generation = 0;
    double best_fitness = 0.0;
    double mean_fitness = 0.0;
    std::vector<double> best_point;
    std::uint64_t evaluations = 0;
};

/// Outcome of a full optimizer run.  `best_skillset` is empty for the
/// continuous baselines that do not use a binary encoding.
struct RunResult {
    double best_fitness = 0.0;
    std::vector<double> best_point;
    core::Skillset best_skillset;
    std::vector<GenerationRecord> trace;
    std::size_t generations_to_best = 0;
};

/// First generation whose best fitness equals the final best exactly.
/// The trace is non-decreasing in best_fitness, so a linear scan from the
/// front finds the earliest hit.
inline std::size_t generations_to_best(const std::vector<GenerationRecord>& trace) {
    if (trace.empty())
        return 0;
    const double final_best = trace.back().best_fitness;
    for (const auto& rec : trace) {
        if (rec.best_fitness == final_best)
            return rec.generation;
    }
    return trace.back().generation;
}

} // namespace duelist::engine
