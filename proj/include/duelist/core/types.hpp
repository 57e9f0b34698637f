#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace duelist::core {

/// A caller broke a documented precondition (length mismatch, missing
/// fitness, undersized merge pool, ...).
class ContractViolation : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

/// A configuration value is out of range or inconsistent. The message
/// always names the offending key.
class ConfigError : public std::runtime_error {
  public:
    explicit ConfigError(const std::string& key, const std::string& what)
        : std::runtime_error(key + ": " + what), key_(key) {}

    const std::string& key() const { return key_; }

  private:
    std::string key_;
};

/// The objective returned a non-finite value at the carried point.
class EvaluationError : public std::runtime_error {
  public:
    EvaluationError(const std::string& what, std::vector<double> point)
        : std::runtime_error(what), point_(std::move(point)) {}

    const std::vector<double>& point() const { return point_; }

  private:
    std::vector<double> point_;
};

/// Fixed-length bit string encoding all decision variables of one duelist.
/// Elements are exactly 0 or 1; the length is bits_per_var * n_vars for the
/// domain the skillset was built for.
class Skillset {
  public:
    Skillset() = default;

    explicit Skillset(std::size_t length) : bits_(length, 0) {}

    explicit Skillset(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
        for (std::uint8_t b : bits_)
            if (b > 1)
                throw ContractViolation("skillset bit is neither 0 nor 1");
    }

    std::size_t size() const { return bits_.size(); }
    bool empty() const { return bits_.empty(); }

    std::uint8_t bit(std::size_t i) const { return bits_[i]; }
    void set_bit(std::size_t i, std::uint8_t value) { bits_[i] = value ? 1 : 0; }
    void flip_bit(std::size_t i) { bits_[i] ^= 1; }

    std::span<const std::uint8_t> bits() const { return bits_; }

    bool operator==(const Skillset&) const = default;

  private:
    std::vector<std::uint8_t> bits_;
};

/// Box-bounded search space plus the binary resolution used to encode it.
struct SearchDomain {
    std::vector<double> lower;
    std::vector<double> upper;
    unsigned bits_per_var = 16;

    std::size_t n_vars() const { return lower.size(); }
    std::size_t skillset_length() const { return n_vars() * bits_per_var; }

    void validate() const {
        if (lower.empty())
            throw ConfigError("domain.lower", "at least one variable required");
        if (lower.size() != upper.size())
            throw ConfigError("domain.upper",
                              "length " + std::to_string(upper.size()) +
                                  " does not match lower length " + std::to_string(lower.size()));
        for (std::size_t i = 0; i < lower.size(); ++i)
            if (!(lower[i] < upper[i]))
                throw ConfigError("domain.lower[" + std::to_string(i) + "]",
                                  "must be strictly below upper bound");
        if (bits_per_var < 1 || bits_per_var > 63)
            throw ConfigError("domain.bits_per_var", "must be in [1, 63]");
    }

    /// Uniform bounds on every variable.
    static SearchDomain box(std::size_t n_vars, double lo, double hi, unsigned bits_per_var = 16) {
        SearchDomain d;
        d.lower.assign(n_vars, lo);
        d.upper.assign(n_vars, hi);
        d.bits_per_var = bits_per_var;
        d.validate();
        return d;
    }
};

/// Tournament role of a duelist within the current generation. Roles are
/// recomputed every generation; nothing carries over.
enum class Category { unranked, champion, winner, loser };

inline const char* to_string(Category c) {
    switch (c) {
    case Category::champion: return "champion";
    case Category::winner: return "winner";
    case Category::loser: return "loser";
    default: return "unranked";
    }
}

///// Marks a duelist whose skillset changed since it was last evaluated.
inline constexpr double kUnsetFitness = std::numeric_limits<double>::quiet_NaN();

/// One candidate solution: a skillset plus its cached fighting capability.
/// Fitness is NaN until evaluated and is re-set to NaN whenever an operator
/// changes the skillset.
struct Duelist {
    Skillset skillset;
    double fitness = kUnsetFitness;
    double luck = 0.0;
    Category category = Category::unranked;

    bool has_fitness() const { return std::isfinite(fitness); }
};

/// Real-valued objective over a point inside the search box.
/// Sense is always maximize; negate to minimize.
using Objective = std::function<double(std::span<const double>)>;

/// Counts objective evaluations for trace bookkeeping.
struct EvalCounter {
    std::uint64_t count = 0;
};

} // namespace duelist::core
