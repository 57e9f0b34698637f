#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include <duelist/harness/experiment.hpp>

namespace duelist::harness {

/// One algorithm's side of a comparison: its median convergence trace and
/// how fast each seed reached the fitness threshold.
struct AlgorithmComparison {
    std::string id;
    std::vector<double> median_best; // per iteration, aligned across algorithms
    std::vector<std::optional<std::size_t>> first_to_threshold; // per seed; nullopt = never
    std::optional<double> median_first_to_threshold;            // nullopt = never
};

struct ComparisonBundle {
    double threshold = 0.0;
    std::size_t iterations = 0;
    std::vector<AlgorithmComparison> algorithms;
};

namespace detail {

inline std::optional<std::size_t> first_iteration_reaching(const engine::RunResult& run,
                                                           double threshold) {
    for (const auto& rec : run.trace)
        if (rec.best_fitness >= threshold)
            return rec.generation;
    return std::nullopt;
}

/// Median where "never" counts as +infinity: if the middle lands on a
/// never, the median is never too.
inline std::optional<double>
median_with_never(const std::vector<std::optional<std::size_t>>& firsts) {
    std::vector<double> values;
    values.reserve(firsts.size());
    for (const auto& f : firsts)
        values.push_back(f ? static_cast<double>(*f) : std::numeric_limits<double>::infinity());
    const double m = median(std::move(values));
    if (std::isinf(m))
        return std::nullopt;
    return m;
}

} // namespace detail

/// Run every spec and align their median best-fitness traces for plotting
/// and CSV emission.  All specs must target the same benchmark and domain;
/// traces are aligned on the shortest run.
inline ComparisonBundle compare(const std::vector<ExperimentSpec>& specs, double threshold) {
    if (specs.empty())
        throw core::ConfigError("experiments", "at least one experiment required");
    for (const auto& spec : specs)
        spec.validate();
    for (std::size_t i = 1; i < specs.size(); ++i) {
        const ResolvedBenchmark a = resolve_benchmark(specs[0]);
        const ResolvedBenchmark b = resolve_benchmark(specs[i]);
        if (specs[i].benchmark != specs[0].benchmark || a.domain.lower != b.domain.lower ||
            a.domain.upper != b.domain.upper)
            throw core::ConfigError("experiments[" + std::to_string(i) + "].benchmark",
                                    "all compared experiments must share one benchmark "
                                    "and domain");
    }

    std::vector<ExperimentResult> results;
    results.reserve(specs.size());
    for (const auto& spec : specs)
        results.push_back(run_experiment(spec));

    std::size_t aligned = std::numeric_limits<std::size_t>::max();
    for (const auto& result : results)
        for (const auto& run : result.runs)
            aligned = std::min(aligned, run.trace.size());

    ComparisonBundle bundle;
    bundle.threshold = threshold;
    bundle.iterations = aligned;
    for (std::size_t s = 0; s < specs.size(); ++s) {
        AlgorithmComparison cmp;
        cmp.id = specs[s].algorithm;
        cmp.median_best.reserve(aligned);
        for (std::size_t t = 0; t < aligned; ++t) {
            std::vector<double> column;
            column.reserve(results[s].runs.size());
            for (const auto& run : results[s].runs)
                column.push_back(run.trace[t].best_fitness);
            cmp.median_best.push_back(median(std::move(column)));
        }
        for (const auto& run : results[s].runs)
            cmp.first_to_threshold.push_back(detail::first_iteration_reaching(run, threshold));
        cmp.median_first_to_threshold = detail::median_with_never(cmp.first_to_threshold);
        bundle.algorithms.push_back(std::move(cmp));
    }
    return bundle;
}

} // namespace duelist::harness
