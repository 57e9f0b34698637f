#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include <duelist/core/random.hpp>
#include <duelist/core/types.hpp>

namespace duelist::core {

/// Decode a skillset into a real vector, one variable per bits_per_var
/// slice, big-endian. Variable i maps linearly onto [lower[i], upper[i]]
/// with 2^bits_per_var - 1 steps; codes 0 and 2^bits-1 hit the bounds
/// exactly and the map is monotone in the slice's integer value.
inline std::vector<double> decode(const Skillset& skillset, const SearchDomain& domain) {
    const std::size_t expected = domain.skillset_length();
    if (skillset.size() != expected)
        throw ContractViolation("skillset length " + std::to_string(skillset.size()) +
                                " does not match domain length " + std::to_string(expected));

    const unsigned bits = domain.bits_per_var;
    const std::uint64_t max_code = (std::uint64_t{1} << bits) - 1;
    std::vector<double> point(domain.n_vars());
    for (std::size_t v = 0; v < domain.n_vars(); ++v) {
        std::uint64_t code = 0;
        for (unsigned b = 0; b < bits; ++b)
            code = (code << 1) | skillset.bit(v * bits + b);
        const double lo = domain.lower[v];
        const double hi = domain.upper[v];
        double x;
        if (code == 0) {
            x = lo;
        } else if (code == max_code) {
            x = hi;
        } else {
            const double t = static_cast<double>(code) / static_cast<double>(max_code);
            x = std::clamp(lo + t * (hi - lo), lo, hi);
        }
        point[v] = x;
    }
    return point;
}

/// Fresh skillset with each bit 0 or 1 with probability 1/2.
inline Skillset random_skillset(const SearchDomain& domain, RandomStream& rng) {
    Skillset s(domain.skillset_length());
    for (std::size_t i = 0; i < s.size(); ++i)
        if (rng.next_bernoulli(0.5))
            s.set_bit(i, 1);
    return s;
}

inline std::string format_point(const std::vector<double>& point) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < point.size(); ++i)
        os << (i ? ", " : "") << point[i];
    os << ")";
    return os.str();
}

/// Call the objective at a raw point, counting one evaluation. Throws
/// EvaluationError if the objective returns a non-finite value.
inline double evaluate_point(const Objective& objective, const std::vector<double>& point,
                             EvalCounter& counter) {
    const double value = objective(point);
    counter.count += 1;
    if (!std::isfinite(value))
        throw EvaluationError("objective returned non-finite value at " + format_point(point),
                              point);
    return value;
}

/// Measure a duelist's fighting capability: decode, call the objective and
/// cache the result. Counts exactly one evaluation. Throws EvaluationError
/// if the objective returns a non-finite value.
inline void evaluate(Duelist& duelist, const Objective& objective, const SearchDomain& domain,
                     EvalCounter& counter) {
    std::vector<double> point = decode(duelist.skillset, domain);
    duelist.fitness = evaluate_point(objective, point, counter);
}

} // namespace duelist::core
