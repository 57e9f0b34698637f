#pragma once

#include <cmath>
#include <span>
#include <string>
#include <vector>

#include <duelist/core/types.hpp>

namespace duelist::benchmarks {

/// Two-variable multimodal test function on [0, 10]^2, maximum near 18.5547.
inline double m1(double x, double y) {
    return -(x * std::sin(4.0 * x) + 1.1 * y * std::sin(2.0 * y));
}

/// Two-variable multimodal test function on [0, 10]^2, maximum near 30.3489.
inline double m2(double x, double y) {
    return -(std::sqrt(x * x + y * y) * std::cos(x - y) *
             std::exp(std::cos(x * (y + 5.0) / 7.0)));
}

/// Shifted sphere in maximization form: the peak sits at the shift vector
/// with value f_bias, falling off quadratically.
struct ShiftedSphereSpec {
    std::size_t dimension = 2;
    std::vector<double> shift; // empty means the zero vector
    double f_bias = 450.0;

    std::vector<double> effective_shift() const {
        if (shift.empty())
            return std::vector<double>(dimension, 0.0);
        return shift;
    }

    void validate() const {
        if (dimension < 1)
            throw core::ConfigError("benchmark.dimension", "must be at least 1");
        if (!shift.empty() && shift.size() != dimension)
            throw core::ConfigError("benchmark.shift",
                                    "length " + std::to_string(shift.size()) +
                                        " does not match dimension " +
                                        std::to_string(dimension));
    }
};

inline double shifted_sphere(std::span<const double> x, const ShiftedSphereSpec& spec) {
    const std::vector<double> o = spec.effective_shift();
    if (x.size() != o.size())
        throw core::ContractViolation("shifted_sphere: point dimension " +
                                      std::to_string(x.size()) + " does not match spec " +
                                      std::to_string(o.size()));
    double sum = 0.0;
    for (std::size_t i = 0; i < o.size(); ++i) {
        const double d = x[i] - o[i];
        sum += d * d;
    }
    return spec.f_bias - sum;
}

/// A named benchmark: objective plus the domain it is usually run on.
struct Benchmark {
    std::string id;
    core::Objective objective;
    core::SearchDomain domain;
};

inline core::Objective make_shifted_sphere_objective(ShiftedSphereSpec spec) {
    spec.validate();
    return [spec](std::span<const double> x) { return shifted_sphere(x, spec); };
}

/// Look up a benchmark by the string id used in config files.
/// Throws ConfigError for unknown ids.
inline Benchmark find_benchmark(const std::string& id) {
    if (id == "m1") {
        return {id, [](std::span<const double> p) { return m1(p[0], p[1]); },
                core::SearchDomain::box(2, 0.0, 10.0)};
    }
    if (id == "m2") {
        return {id, [](std::span<const double> p) { return m2(p[0], p[1]); },
                core::SearchDomain::box(2, 0.0, 10.0)};
    }
    if (id == "shifted_sphere") {
        ShiftedSphereSpec spec;
        return {id, make_shifted_sphere_objective(spec),
                core::SearchDomain::box(spec.dimension, -100.0, 100.0)};
    }
    throw core::ConfigError("benchmark",
                            "unknown id \"" + id +
                                "\" (known: m1, m2, shifted_sphere)");
}

inline std::vector<std::string> benchmark_ids() { return {"m1", "m2", "shifted_sphere"}; }

} // namespace duelist::benchmarks
