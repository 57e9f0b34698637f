#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <unistd.h>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <duelist/harness/compare.hpp>
#include <duelist/harness/csv.hpp>
#include <duelist/harness/experiment.hpp>
#include <duelist/harness/svg.hpp>
#include <duelist/harness/sweep.hpp>

using namespace duelist;

namespace {

harness::ExperimentSpec tiny_da_spec() {
    harness::ExperimentSpec spec;
    spec.algorithm = "da";
    spec.benchmark = "m1";
    engine::EngineConfig cfg;
    cfg.population_size = 12;
    cfg.max_generations = 15;
    cfg.champion_count = 2;
    spec.config = cfg;
    spec.seeds = {1, 2, 3};
    return spec;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

struct TempDir {
    std::filesystem::path path;
    TempDir() {
        path = std::filesystem::temp_directory_path() /
               ("duelist_test_" + std::to_string(::getpid()) + "_" +
                std::to_string(counter()++));
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
    static int& counter() {
        static int n = 0;
        return n;
    }
};

} // namespace

TEST_CASE("median handles odd, even and degenerate samples") {
    REQUIRE(harness::median({3.0}) == 3.0);
    REQUIRE(harness::median({3.0, 1.0, 2.0}) == 2.0);
    REQUIRE(harness::median({4.0, 1.0, 2.0, 3.0}) == 2.5);
    REQUIRE(harness::median({5.0, 5.0, 5.0, 5.0}) == 5.0);
    REQUIRE_THROWS_AS(harness::median({}), core::ContractViolation);
}

TEST_CASE("run_experiment returns one run per seed, in seed order") {
    harness::ExperimentSpec spec = tiny_da_spec();
    harness::ExperimentResult result = harness::run_experiment(spec);
    REQUIRE(result.runs.size() == 3);

    // Each slot must match an independent single run of that seed.
    for (std::size_t i = 0; i < spec.seeds.size(); ++i) {
        engine::RunResult expected = harness::run_single(spec, spec.seeds[i]);
        REQUIRE(result.runs[i].best_fitness == expected.best_fitness);
        REQUIRE(result.runs[i].generations_to_best == expected.generations_to_best);
    }

    REQUIRE(result.best_fitness.min <= result.best_fitness.median);
    REQUIRE(result.best_fitness.median <= result.best_fitness.max);

    SECTION("single seed collapses the statistics") {
        spec.seeds = {7};
        harness::ExperimentResult single = harness::run_experiment(spec);
        REQUIRE(single.best_fitness.min == single.best_fitness.median);
        REQUIRE(single.best_fitness.median == single.best_fitness.max);
    }
}

TEST_CASE("experiment spec validation names keys") {
    harness::ExperimentSpec spec = tiny_da_spec();
    spec.algorithm = "hillclimb";
    try {
        spec.validate();
        FAIL("expected ConfigError");
    } catch (const core::ConfigError& e) {
        REQUIRE(e.key() == "algorithm");
    }

    spec = tiny_da_spec();
    spec.seeds.clear();
    REQUIRE_THROWS_AS(spec.validate(), core::ConfigError);

    spec = tiny_da_spec();
    spec.config = baselines::GaConfig{}; // block does not match "da"
    REQUIRE_THROWS_AS(spec.validate(), core::ConfigError);

    spec = tiny_da_spec();
    spec.domain = core::SearchDomain::box(3, 0.0, 1.0); // m1 needs 2 vars
    REQUIRE_THROWS_AS(harness::run_experiment(spec), core::ConfigError);
}

TEST_CASE("sweep walks values in ascending order") {
    harness::SweepSpec spec;
    spec.base = tiny_da_spec();
    spec.parameter = "learning_probability";
    spec.values = {0.9, 0.1, 0.5}; // deliberately unsorted

    std::vector<harness::SweepRow> rows = harness::sweep(spec);
    REQUIRE(rows.size() == 3);
    REQUIRE(rows[0].parameter_value == 0.1);
    REQUIRE(rows[1].parameter_value == 0.5);
    REQUIRE(rows[2].parameter_value == 0.9);

    SECTION("a single value reproduces the plain experiment summary") {
        spec.values = {0.5};
        harness::ExperimentSpec direct = spec.base;
        std::get<engine::EngineConfig>(direct.config).learning_probability = 0.5;
        harness::ExperimentResult expected = harness::run_experiment(direct);
        std::vector<harness::SweepRow> row = harness::sweep(spec);
        REQUIRE(row.size() == 1);
        REQUIRE(row[0].best_solution_median == expected.best_fitness.median);
        REQUIRE(row[0].iteration_median == expected.generations_to_best.median);
    }
    SECTION("unknown parameter is rejected with the key") {
        spec.parameter = "temperature";
        try {
            harness::sweep(spec);
            FAIL("expected ConfigError");
        } catch (const core::ConfigError& e) {
            REQUIRE(e.key() == "sweep.parameter");
        }
    }
    SECTION("count parameters refuse fractional values") {
        spec.parameter = "population_size";
        spec.values = {10.5};
        REQUIRE_THROWS_AS(harness::sweep(spec), core::ConfigError);
    }
}

TEST_CASE("compare aligns traces and reports threshold hits") {
    harness::ExperimentSpec da = tiny_da_spec();
    harness::ExperimentSpec ga = tiny_da_spec();
    ga.algorithm = "ga";
    baselines::GaConfig ga_cfg;
    ga_cfg.population_size = 12;
    ga_cfg.max_generations = 15;
    ga.config = ga_cfg;

    SECTION("two algorithms, aligned length, ids preserved") {
        harness::ComparisonBundle bundle = harness::compare({da, ga}, 10.0);
        REQUIRE(bundle.algorithms.size() == 2);
        REQUIRE(bundle.iterations == 15);
        REQUIRE(bundle.algorithms[0].id == "da");
        REQUIRE(bundle.algorithms[1].id == "ga");
        for (const auto& algo : bundle.algorithms) {
            REQUIRE(algo.median_best.size() == 15);
            REQUIRE(algo.first_to_threshold.size() == 3);
        }
    }
    SECTION("threshold below every trace value is hit at iteration one") {
        harness::ComparisonBundle bundle = harness::compare({da}, -1e9);
        REQUIRE(bundle.algorithms[0].median_first_to_threshold.has_value());
        REQUIRE(*bundle.algorithms[0].median_first_to_threshold == 1.0);
    }
    SECTION("threshold above the global maximum is never reached") {
        harness::ComparisonBundle bundle = harness::compare({da, ga}, 1e9);
        for (const auto& algo : bundle.algorithms) {
            REQUIRE_FALSE(algo.median_first_to_threshold.has_value());
            for (const auto& f : algo.first_to_threshold)
                REQUIRE_FALSE(f.has_value());
        }
    }
    SECTION("mismatched benchmarks are rejected") {
        ga.benchmark = "m2";
        REQUIRE_THROWS_AS(harness::compare({da, ga}, 10.0), core::ConfigError);
    }
    SECTION("empty spec list is rejected") {
        REQUIRE_THROWS_AS(harness::compare({}, 10.0), core::ConfigError);
    }
}

TEST_CASE("trace csv: exact shape, byte-stable, round-trips") {
    TempDir tmp;
    const std::filesystem::path path = tmp.path / "trace.csv";

    std::vector<engine::GenerationRecord> trace;
    for (std::size_t g = 1; g <= 4; ++g) {
        engine::GenerationRecord rec;
        rec.generation = g;
        rec.best_fitness = 0.1 * static_cast<double>(g) + 1.0 / 3.0;
        rec.mean_fitness = -rec.best_fitness / 7.0;
        rec.best_point = {1.0 / static_cast<double>(g), 1e-12 * static_cast<double>(g)};
        rec.evaluations = 100 * g;
        trace.push_back(rec);
    }

    harness::emit_trace_csv(trace, path.string());
    const std::string first = read_file(path);

    SECTION("header and line count") {
        std::istringstream is(first);
        std::string line;
        std::vector<std::string> lines;
        while (std::getline(is, line))
            lines.push_back(line);
        REQUIRE(lines.size() == 5);
        REQUIRE(lines[0] == "generation,best_fitness,mean_fitness,best_x0,best_x1,evaluations");
    }
    SECTION("re-emission is byte-identical") {
        harness::emit_trace_csv(trace, path.string());
        REQUIRE(read_file(path) == first);
    }
    SECTION("round-trip reproduces every field exactly") {
        std::vector<engine::GenerationRecord> parsed =
            harness::parse_trace_csv(path.string());
        REQUIRE(parsed.size() == trace.size());
        for (std::size_t i = 0; i < trace.size(); ++i) {
            REQUIRE(parsed[i].generation == trace[i].generation);
            REQUIRE(parsed[i].best_fitness == trace[i].best_fitness);
            REQUIRE(parsed[i].mean_fitness == trace[i].mean_fitness);
            REQUIRE(parsed[i].best_point == trace[i].best_point);
            REQUIRE(parsed[i].evaluations == trace[i].evaluations);
        }
    }
    SECTION("LF endings, no CR") {
        REQUIRE(first.find('\r') == std::string::npos);
        REQUIRE(first.back() == '\n');
    }
    SECTION("empty trace is refused") {
        REQUIRE_THROWS(harness::emit_trace_csv({}, (tmp.path / "no.csv").string()));
    }
}

TEST_CASE("sweep and comparison csvs match their column contracts") {
    TempDir tmp;

    SECTION("sweep: one header plus one line per row") {
        std::vector<harness::SweepRow> rows;
        for (int i = 1; i <= 10; ++i)
            rows.push_back({0.1 * i, 449.9 + 0.001 * i, 10.0 + i});
        const std::filesystem::path path = tmp.path / "sweep.csv";
        harness::emit_sweep_csv(rows, path.string());
        std::istringstream is(read_file(path));
        std::string line;
        std::vector<std::string> lines;
        while (std::getline(is, line))
            lines.push_back(line);
        REQUIRE(lines.size() == 11);
        REQUIRE(lines[0] == "parameter_value,best_solution_median,iteration_median");
    }
    SECTION("comparison: iteration column plus one best column per algorithm") {
        harness::ComparisonBundle bundle;
        bundle.threshold = 5.0;
        bundle.iterations = 3;
        harness::AlgorithmComparison da{"da", {1.0, 2.0, 3.0}, {}, {}};
        harness::AlgorithmComparison ga{"ga", {0.5, 1.5, 2.5}, {}, {}};
        bundle.algorithms = {da, ga};
        const std::filesystem::path path = tmp.path / "cmp.csv";
        harness::emit_comparison_csv(bundle, path.string());
        std::istringstream is(read_file(path));
        std::string line;
        std::getline(is, line);
        REQUIRE(line == "iteration,da_best,ga_best");
        std::getline(is, line);
        REQUIRE(line.rfind("1,", 0) == 0);
    }
}

TEST_CASE("svg plot contains one polyline and legend entry per algorithm") {
    TempDir tmp;
    harness::ComparisonBundle bundle;
    bundle.threshold = 0.0;
    bundle.iterations = 5;
    for (const char* id : {"da", "ga", "pso", "ica"}) {
        harness::AlgorithmComparison algo;
        algo.id = id;
        for (int t = 0; t < 5; ++t)
            algo.median_best.push_back(t + (id[0] % 7) * 0.1);
        bundle.algorithms.push_back(algo);
    }

    const std::filesystem::path path = tmp.path / "plot.svg";
    harness::emit_plot(bundle, path.string());
    const std::string svg = read_file(path);

    const auto count = [&](const std::string& needle) {
        std::size_t n = 0, pos = 0;
        while ((pos = svg.find(needle, pos)) != std::string::npos) {
            ++n;
            pos += needle.size();
        }
        return n;
    };
    REQUIRE(count("<polyline") == 4);
    REQUIRE(count(">da</text>") == 1);
    REQUIRE(count(">ga</text>") == 1);
    REQUIRE(count(">pso</text>") == 1);
    REQUIRE(count(">ica</text>") == 1);
    REQUIRE(svg.find("width=\"800\"") != std::string::npos);
    REQUIRE(svg.find("height=\"600\"") != std::string::npos);
    REQUIRE(svg.rfind("</svg>\n") == svg.size() - 7);

    SECTION("custom dimensions are honored") {
        harness::emit_plot(bundle, path.string(), 400, 300);
        const std::string small = read_file(path);
        REQUIRE(small.find("width=\"400\"") != std::string::npos);
        REQUIRE(small.find("height=\"300\"") != std::string::npos);
    }
    SECTION("an empty bundle writes nothing") {
        const std::filesystem::path none = tmp.path / "none.svg";
        harness::ComparisonBundle empty;
        REQUIRE_THROWS(harness::emit_plot(empty, none.string()));
        REQUIRE_FALSE(std::filesystem::exists(none));
    }
}

TEST_CASE("format_value survives round-trips on awkward doubles") {
    for (double v : {0.1, 1.0 / 3.0, 1e-300, 1e300, -0.0, 449.99700000000001, 18.5547}) {
        const std::string s = harness::format_value(v);
        REQUIRE(std::stod(s) == v);
    }
    REQUIRE(harness::format_value(450.0) == "450");
}
