#pragma once

#include <cstdio>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <duelist/engine/trace.hpp>
#include <duelist/harness/compare.hpp>
#include <duelist/harness/sweep.hpp>

namespace duelist::harness {

/// Shortest round-trippable decimal form: 17 significant digits, '.'
/// separator regardless of locale.
inline std::string format_value(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

namespace detail {

inline std::ofstream open_for_write(const std::string& path) {
    std::ofstream out(path, std::ios::binary); // binary: LF endings everywhere
    if (!out)
        throw std::runtime_error("cannot open for writing: " + path);
    return out;
}

} // namespace detail

/// generation,best_fitness,mean_fitness,best_x0,...,best_x{n-1},evaluations
inline void emit_trace_csv(const std::vector<engine::GenerationRecord>& trace,
                           const std::string& path) {
    if (trace.empty())
        throw std::runtime_error("refusing to emit empty trace: " + path);
    std::ofstream out = detail::open_for_write(path);
    out << "generation,best_fitness,mean_fitness";
    for (std::size_t d = 0; d < trace.front().best_point.size(); ++d)
        out << ",best_x" << d;
    out << ",evaluations\n";
    for (const auto& rec : trace) {
        out << rec.generation << ',' << format_value(rec.best_fitness) << ','
            << format_value(rec.mean_fitness);
        for (double x : rec.best_point)
            out << ',' << format_value(x);
        out << ',' << rec.evaluations << '\n';
    }
    if (!out)
        throw std::runtime_error("write failed: " + path);
}

/// Inverse of emit_trace_csv, for round-trip checks and downstream tools.
inline std::vector<engine::GenerationRecord> parse_trace_csv(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open for reading: " + path);
    std::string line;
    if (!std::getline(in, line))
        throw std::runtime_error("empty trace csv: " + path);

    std::vector<engine::GenerationRecord> trace;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        std::vector<std::string> fields;
        std::stringstream ss(line);
        std::string field;
        while (std::getline(ss, field, ','))
            fields.push_back(field);
        if (fields.size() < 4)
            throw std::runtime_error("malformed trace row: " + line);
        engine::GenerationRecord rec;
        rec.generation = std::stoull(fields[0]);
        rec.best_fitness = std::stod(fields[1]);
        rec.mean_fitness = std::stod(fields[2]);
        for (std::size_t i = 3; i + 1 < fields.size(); ++i)
            rec.best_point.push_back(std::stod(fields[i]));
        rec.evaluations = std::stoull(fields.back());
        trace.push_back(std::move(rec));
    }
    return trace;
}

/// parameter_value,best_solution_median,iteration_median
inline void emit_sweep_csv(const std::vector<SweepRow>& rows, const std::string& path) {
    std::ofstream out = detail::open_for_write(path);
    out << "parameter_value,best_solution_median,iteration_median\n";
    for (const auto& row : rows)
        out << format_value(row.parameter_value) << ',' << format_value(row.best_solution_median)
            << ',' << format_value(row.iteration_median) << '\n';
    if (!out)
        throw std::runtime_error("write failed: " + path);
}

/// iteration,<algo_id>_best per algorithm, medians across seeds.
inline void emit_comparison_csv(const ComparisonBundle& bundle, const std::string& path) {
    std::ofstream out = detail::open_for_write(path);
    out << "iteration";
    for (const auto& algo : bundle.algorithms)
        out << ',' << algo.id << "_best";
    out << '\n';
    for (std::size_t t = 0; t < bundle.iterations; ++t) {
        out << (t + 1);
        for (const auto& algo : bundle.algorithms)
            out << ',' << format_value(algo.median_best[t]);
        out << '\n';
    }
    if (!out)
        throw std::runtime_error("write failed: " + path);
}

} // namespace duelist::harness
