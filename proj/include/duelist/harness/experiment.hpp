#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <duelist/baselines/ga.hpp>
#include <duelist/baselines/ica.hpp>
#include <duelist/baselines/pso.hpp>
#include <duelist/benchmarks/functions.hpp>
#include <duelist/core/types.hpp>
#include <duelist/engine/engine.hpp>

namespace duelist::harness {

using AlgorithmConfig = std::variant<engine::EngineConfig, baselines::GaConfig,
                                     baselines::PsoConfig, baselines::IcaConfig>;

/// One multi-seed experiment: an algorithm, a benchmark, and the seeds to
/// run it on.  The domain defaults to the benchmark's usual box.
struct ExperimentSpec {
    std::string algorithm; // da | ga | pso | ica
    std::string benchmark; // m1 | m2 | shifted_sphere
    std::optional<benchmarks::ShiftedSphereSpec> sphere; // inline shifted_sphere override
    std::optional<core::SearchDomain> domain;
    AlgorithmConfig config;
    std::vector<std::uint64_t> seeds;

    void validate() const {
        if (algorithm != "da" && algorithm != "ga" && algorithm != "pso" && algorithm != "ica")
            throw core::ConfigError("algorithm", "unknown id \"" + algorithm +
                                                     "\" (known: da, ga, pso, ica)");
        const bool matches =
            (algorithm == "da" && std::holds_alternative<engine::EngineConfig>(config)) ||
            (algorithm == "ga" && std::holds_alternative<baselines::GaConfig>(config)) ||
            (algorithm == "pso" && std::holds_alternative<baselines::PsoConfig>(config)) ||
            (algorithm == "ica" && std::holds_alternative<baselines::IcaConfig>(config));
        if (!matches)
            throw core::ConfigError("config", "config block does not match algorithm \"" +
                                                  algorithm + "\"");
        const std::vector<std::string> ids = benchmarks::benchmark_ids();
        if (std::find(ids.begin(), ids.end(), benchmark) == ids.end())
            throw core::ConfigError("benchmark", "unknown id \"" + benchmark +
                                                     "\" (known: m1, m2, shifted_sphere)");
        if (sphere && benchmark != "shifted_sphere")
            throw core::ConfigError("benchmark_spec",
                                    "only valid with benchmark \"shifted_sphere\"");
        if (seeds.empty())
            throw core::ConfigError("seeds", "at least one seed required");
        if (sphere)
            sphere->validate();
        if (domain) {
            domain->validate();
            const std::size_t expected =
                benchmark == "shifted_sphere"
                    ? (sphere ? sphere->dimension : benchmarks::ShiftedSphereSpec{}.dimension)
                    : 2;
            if (domain->n_vars() != expected)
                throw core::ConfigError(
                    "domain.lower", "benchmark \"" + benchmark + "\" needs " +
                                        std::to_string(expected) + " variables, got " +
                                        std::to_string(domain->n_vars()));
        }
    }
};

/// Objective and box an experiment actually runs on, after defaults.
struct ResolvedBenchmark {
    core::Objective objective;
    core::SearchDomain domain;
};

inline ResolvedBenchmark resolve_benchmark(const ExperimentSpec& spec) {
    ResolvedBenchmark out;
    if (spec.benchmark == "shifted_sphere" && spec.sphere) {
        benchmarks::ShiftedSphereSpec sphere = *spec.sphere;
        out.objective = benchmarks::make_shifted_sphere_objective(sphere);
        out.domain = core::SearchDomain::box(sphere.dimension, -100.0, 100.0);
    } else {
        benchmarks::Benchmark b = benchmarks::find_benchmark(spec.benchmark);
        out.objective = b.objective;
        out.domain = b.domain;
    }
    if (spec.domain) {
        if (spec.domain->n_vars() != out.domain.n_vars())
            throw core::ConfigError("domain.lower",
                                    "benchmark \"" + spec.benchmark + "\" needs " +
                                        std::to_string(out.domain.n_vars()) + " variables, got " +
                                        std::to_string(spec.domain->n_vars()));
        out.domain = *spec.domain;
    }
    return out;
}

/// One deterministic run of the spec's algorithm under the given seed.
inline engine::RunResult run_single(const ExperimentSpec& spec, std::uint64_t seed) {
    const ResolvedBenchmark bench = resolve_benchmark(spec);
    if (const auto* da = std::get_if<engine::EngineConfig>(&spec.config)) {
        engine::EngineConfig cfg = *da;
        cfg.seed = seed;
        return engine::run(cfg, bench.objective, bench.domain);
    }
    if (const auto* ga = std::get_if<baselines::GaConfig>(&spec.config)) {
        baselines::GaConfig cfg = *ga;
        cfg.seed = seed;
        return baselines::run_ga(cfg, bench.objective, bench.domain);
    }
    if (const auto* pso = std::get_if<baselines::PsoConfig>(&spec.config)) {
        baselines::PsoConfig cfg = *pso;
        cfg.seed = seed;
        return baselines::run_pso(cfg, bench.objective, bench.domain);
    }
    const auto& ica = std::get<baselines::IcaConfig>(spec.config);
    baselines::IcaConfig cfg = ica;
    cfg.seed = seed;
    return baselines::run_ica(cfg, bench.objective, bench.domain);
}

struct Stats {
    double min = 0.0;
    double median = 0.0;
    double max = 0.0;
};

/// Median with the usual even-count average of the two middle values.
inline double median(std::vector<double> values) {
    if (values.empty())
        throw core::ContractViolation("median of empty sample");
    std::sort(values.begin(), values.end());
    const std::size_t mid = values.size() / 2;
    if (values.size() % 2 == 1)
        return values[mid];
    return 0.5 * (values[mid - 1] + values[mid]);
}

inline Stats summarize(const std::vector<double>& values) {
    Stats s;
    s.min = *std::min_element(values.begin(), values.end());
    s.max = *std::max_element(values.begin(), values.end());
    s.median = median(values);
    return s;
}

struct ExperimentResult {
    std::vector<engine::RunResult> runs; // ordered like the seed list
    Stats best_fitness;
    Stats generations_to_best;
};

inline ExperimentResult run_experiment(const ExperimentSpec& spec) {
    spec.validate();
    ExperimentResult out;
    out.runs.reserve(spec.seeds.size());
    for (std::uint64_t seed : spec.seeds)
        out.runs.push_back(run_single(spec, seed));

    std::vector<double> bests, iters;
    bests.reserve(out.runs.size());
    iters.reserve(out.runs.size());
    for (const auto& r : out.runs) {
        bests.push_back(r.best_fitness);
        iters.push_back(static_cast<double>(r.generations_to_best));
    }
    out.best_fitness = summarize(bests);
    out.generations_to_best = summarize(iters);
    return out;
}

} // namespace duelist::harness
