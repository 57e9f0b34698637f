// Command-line front end: run experiments, sweep parameters, compare
// algorithms and query the brute-force oracle, all from JSON configs.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>

#include <duelist/duelist.hpp>

namespace {

enum class LogLevel { quiet = 0, info = 1, debug = 2 };

LogLevel g_log_level = LogLevel::info;

void log_info(const std::string& message) {
    if (g_log_level >= LogLevel::info)
        std::cout << message << '\n';
}

void log_debug(const std::string& message) {
    if (g_log_level >= LogLevel::debug)
        std::cout << message << '\n';
}

LogLevel parse_log_level() {
    const char* raw = std::getenv("DUELIST_LOG");
    if (!raw)
        return LogLevel::info;
    const std::string value(raw);
    if (value == "quiet")
        return LogLevel::quiet;
    if (value == "info")
        return LogLevel::info;
    if (value == "debug")
        return LogLevel::debug;
    throw duelist::core::ConfigError("DUELIST_LOG",
                                     "expected quiet, info or debug, got \"" + value + "\"");
}

std::string format_fitness(double value) {
    std::ostringstream os;
    os.precision(10);
    os << value;
    return os.str();
}

template <typename Spec>
const Spec& expect_config_type(const duelist::harness::AnyConfig& config,
                               const std::string& subcommand, const std::string& wanted) {
    if (const auto* spec = std::get_if<Spec>(&config))
        return *spec;
    throw duelist::core::ConfigError(
        "type", "subcommand \"" + subcommand + "\" needs a config of type \"" + wanted + "\"");
}

std::filesystem::path prepare_output_dir(const std::string& dir) {
    std::filesystem::path path(dir);
    std::filesystem::create_directories(path);
    return path;
}

int command_run(const std::string& config_path, const std::string& output_dir,
                const std::vector<std::uint64_t>& seed_override) {
    duelist::harness::AnyConfig config = duelist::harness::parse_config(config_path);
    duelist::harness::ExperimentSpec spec =
        expect_config_type<duelist::harness::ExperimentSpec>(config, "run", "run");
    if (!seed_override.empty()) {
        spec.seeds = seed_override;
        spec.validate();
    }
    log_debug("canonical config:\n" + duelist::harness::canonical_config(spec));

    const std::filesystem::path out = prepare_output_dir(output_dir);
    duelist::harness::ExperimentResult result = duelist::harness::run_experiment(spec);
    for (std::size_t i = 0; i < spec.seeds.size(); ++i) {
        const auto& run = result.runs[i];
        const std::string name = spec.algorithm + "_" + spec.benchmark + "_seed" +
                                 std::to_string(spec.seeds[i]) + ".csv";
        duelist::harness::emit_trace_csv(run.trace, (out / name).string());
        std::cout << spec.algorithm << " on " << spec.benchmark << " seed " << spec.seeds[i]
                  << ": best " << format_fitness(run.best_fitness) << " at iteration "
                  << run.generations_to_best << " (" << run.trace.back().evaluations
                  << " evaluations) -> " << name << '\n';
    }
    log_info("best fitness min/median/max: " + format_fitness(result.best_fitness.min) + " / " +
             format_fitness(result.best_fitness.median) + " / " +
             format_fitness(result.best_fitness.max));
    log_info("iterations-to-best min/median/max: " +
             format_fitness(result.generations_to_best.min) + " / " +
             format_fitness(result.generations_to_best.median) + " / " +
             format_fitness(result.generations_to_best.max));
    return 0;
}

int command_sweep(const std::string& config_path, const std::string& output_dir) {
    duelist::harness::AnyConfig config = duelist::harness::parse_config(config_path);
    const duelist::harness::SweepSpec& spec =
        expect_config_type<duelist::harness::SweepSpec>(config, "sweep", "sweep");
    log_debug("canonical config:\n" + duelist::harness::canonical_config(spec));

    const std::filesystem::path out = prepare_output_dir(output_dir);
    std::vector<duelist::harness::SweepRow> rows = duelist::harness::sweep(spec);
    for (const auto& row : rows)
        std::cout << spec.parameter << " = " << row.parameter_value << ": median best "
                  << format_fitness(row.best_solution_median) << ", median iteration "
                  << format_fitness(row.iteration_median) << '\n';
    const std::string name = "sweep_" + spec.parameter + ".csv";
    duelist::harness::emit_sweep_csv(rows, (out / name).string());
    log_info("wrote " + name);
    return 0;
}

int command_compare(const std::string& config_path, const std::string& output_dir, bool plot) {
    duelist::harness::AnyConfig config = duelist::harness::parse_config(config_path);
    const duelist::harness::CompareSpec& spec =
        expect_config_type<duelist::harness::CompareSpec>(config, "compare", "compare");
    log_debug("canonical config:\n" + duelist::harness::canonical_config(spec));

    const std::filesystem::path out = prepare_output_dir(output_dir);
    duelist::harness::ComparisonBundle bundle =
        duelist::harness::compare(spec.experiments, spec.threshold);
    for (const auto& algo : bundle.algorithms) {
        std::cout << algo.id << ": final median best "
                  << format_fitness(algo.median_best.back())
                  << ", median first iteration reaching "
                  << format_fitness(bundle.threshold) << ": ";
        if (algo.median_first_to_threshold)
            std::cout << format_fitness(*algo.median_first_to_threshold);
        else
            std::cout << "never";
        std::cout << '\n';
    }
    const std::string name = "comparison_" + spec.benchmark + ".csv";
    duelist::harness::emit_comparison_csv(bundle, (out / name).string());
    log_info("wrote " + name);
    if (plot) {
        const std::string svg = "comparison_" + spec.benchmark + ".svg";
        duelist::harness::emit_plot(bundle, (out / svg).string());
        log_info("wrote " + svg);
    }
    return 0;
}

int command_oracle(const std::string& benchmark_id, std::size_t resolution) {
    duelist::benchmarks::Benchmark bench = duelist::benchmarks::find_benchmark(benchmark_id);
    duelist::benchmarks::OracleResult result =
        duelist::benchmarks::grid_oracle(bench.objective, bench.domain, resolution);
    std::cout << "oracle " << benchmark_id << ": max " << format_fitness(result.best_value)
              << " at " << duelist::core::format_point(result.best_point) << " (grid "
              << resolution << "^" << bench.domain.n_vars() << " + refinement)\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"duelist: a tournament-based metaheuristic optimizer with GA/PSO/ICA "
                 "baselines and a reproduction harness"};
    app.require_subcommand(1);
    app.footer("Config files are strict JSON; see configs/ for shipped experiments and\n"
               "README.md for the full key reference and defaults. DUELIST_LOG=quiet|info|debug\n"
               "controls verbosity.");

    std::string config_path;
    std::string output_dir;
    std::vector<std::uint64_t> seed_override;
    bool plot = false;
    std::string benchmark_id;
    std::size_t resolution = 2001;

    CLI::App* run = app.add_subcommand("run", "run one algorithm on one benchmark over a seed "
                                              "list; one trace CSV per seed");
    run->add_option("-c,--config", config_path, "JSON config of type \"run\"")
        ->required()
        ->check(CLI::ExistingFile);
    run->add_option("-o,--output", output_dir, "output directory (created if missing)")
        ->required();
    run->add_option("--seeds", seed_override, "override the config's seed list")
        ->delimiter(',');

    CLI::App* sweep = app.add_subcommand("sweep", "vary one parameter over a value list; "
                                                  "emits one summary CSV");
    sweep->add_option("-c,--config", config_path, "JSON config of type \"sweep\"")
        ->required()
        ->check(CLI::ExistingFile);
    sweep->add_option("-o,--output", output_dir, "output directory (created if missing)")
        ->required();

    CLI::App* compare = app.add_subcommand("compare", "race algorithms on one benchmark; "
                                                      "emits aligned median traces");
    compare->add_option("-c,--config", config_path, "JSON config of type \"compare\"")
        ->required()
        ->check(CLI::ExistingFile);
    compare->add_option("-o,--output", output_dir, "output directory (created if missing)")
        ->required();
    compare->add_flag("--plot", plot, "also emit an SVG convergence plot");

    CLI::App* oracle = app.add_subcommand("oracle", "brute-force grid maximum of a benchmark");
    oracle->add_option("-b,--benchmark", benchmark_id, "benchmark id (m1, m2, shifted_sphere)")
        ->required();
    oracle->add_option("--resolution", resolution, "grid points per axis");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        g_log_level = parse_log_level();
        if (app.got_subcommand(run))
            return command_run(config_path, output_dir, seed_override);
        if (app.got_subcommand(sweep))
            return command_sweep(config_path, output_dir);
        if (app.got_subcommand(compare))
            return command_compare(config_path, output_dir, plot);
        return command_oracle(benchmark_id, resolution);
    } catch (const duelist::core::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
