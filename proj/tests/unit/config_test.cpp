#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <string>
#include <unistd.h>
#include <variant>

#include <duelist/harness/config_io.hpp>

using namespace duelist;

namespace {

struct ConfigDir {
    std::filesystem::path path;
    ConfigDir() {
        path = std::filesystem::temp_directory_path() /
               ("duelist_cfg_" + std::to_string(::getpid()) + "_" +
                std::to_string(counter()++));
        std::filesystem::create_directories(path);
    }
    ~ConfigDir() { std::filesystem::remove_all(path); }
    std::string write(const std::string& name, const std::string& body) const {
        const std::filesystem::path file = path / name;
        std::ofstream out(file, std::ios::binary);
        out << body;
        return file.string();
    }
    static int& counter() {
        static int n = 0;
        return n;
    }
};

const char* kRunConfig = R"json({
  "type": "run",
  "algorithm": "da",
  "benchmark": "m1",
  "config": {
    "population_size": 20,
    "max_generations": 30,
    "luck_coefficient": 0.01,
    "learning_probability": 0.8
  },
  "seeds": [1, 2, 3]
})json";

const char* kSweepConfig = R"json({
  "type": "sweep",
  "algorithm": "da",
  "benchmark": "shifted_sphere",
  "benchmark_spec": {"dimension": 2, "f_bias": 450.0},
  "domain": {"lower": [-10.0, -10.0], "upper": [10.0, 10.0], "bits_per_var": 7},
  "config": {"population_size": 40, "max_generations": 25},
  "seeds": [1, 2],
  "parameter": "learning_probability",
  "values": [0.2, 0.4, 0.6]
})json";

const char* kCompareConfig = R"json({
  "type": "compare",
  "benchmark": "m2",
  "threshold": 30.0,
  "experiments": [
    {"algorithm": "da", "config": {"population_size": 30}, "seeds": [1, 2]},
    {"algorithm": "ga", "config": {"elitism_count": 4}, "seeds": [1, 2]}
  ]
})json";

std::string expect_key(const std::string& path) {
    try {
        harness::parse_config(path);
    } catch (const core::ConfigError& e) {
        return e.key();
    }
    FAIL("expected ConfigError");
    return {};
}

} // namespace

TEST_CASE("run config parses with defaults for omitted fields") {
    ConfigDir dir;
    harness::AnyConfig any = harness::parse_config(dir.write("run.json", kRunConfig));
    const auto& spec = std::get<harness::ExperimentSpec>(any);
    REQUIRE(spec.algorithm == "da");
    REQUIRE(spec.benchmark == "m1");
    REQUIRE(spec.seeds == std::vector<std::uint64_t>{1, 2, 3});

    const auto& cfg = std::get<engine::EngineConfig>(spec.config);
    REQUIRE(cfg.population_size == 20);
    REQUIRE(cfg.max_generations == 30);
    REQUIRE(cfg.luck_coefficient == 0.01);
    REQUIRE(cfg.learning_probability == 0.8);
    // Untouched knobs keep their documented defaults.
    REQUIRE(cfg.innovation_probability == 0.5);
    REQUIRE(cfg.champion_count == 5);
}

TEST_CASE("sweep config parses parameters, values and overrides") {
    ConfigDir dir;
    harness::AnyConfig any = harness::parse_config(dir.write("sweep.json", kSweepConfig));
    const auto& spec = std::get<harness::SweepSpec>(any);
    REQUIRE(spec.parameter == "learning_probability");
    REQUIRE(spec.values == std::vector<double>{0.2, 0.4, 0.6});
    REQUIRE(spec.base.benchmark == "shifted_sphere");
    REQUIRE(spec.base.sphere.has_value());
    REQUIRE(spec.base.sphere->f_bias == 450.0);
    REQUIRE(spec.base.domain.has_value());
    REQUIRE(spec.base.domain->bits_per_var == 7);
    REQUIRE(spec.base.domain->lower == std::vector<double>{-10.0, -10.0});
}

TEST_CASE("compare config distributes the shared benchmark to every entry") {
    ConfigDir dir;
    harness::AnyConfig any =
        harness::parse_config(dir.write("cmp.json", kCompareConfig));
    const auto& spec = std::get<harness::CompareSpec>(any);
    REQUIRE(spec.benchmark == "m2");
    REQUIRE(spec.threshold == 30.0);
    REQUIRE(spec.experiments.size() == 2);
    for (const auto& exp : spec.experiments)
        REQUIRE(exp.benchmark == "m2");
    REQUIRE(spec.experiments[0].algorithm == "da");
    REQUIRE(std::get<baselines::GaConfig>(spec.experiments[1].config).elitism_count == 4);
}

TEST_CASE("config errors carry the offending key path") {
    ConfigDir dir;

    SECTION("missing file") {
        REQUIRE(expect_key((dir.path / "absent.json").string()) == "config");
    }
    SECTION("empty file is malformed") {
        REQUIRE(expect_key(dir.write("empty.json", "")) == "document");
    }
    SECTION("syntax error is malformed") {
        REQUIRE(expect_key(dir.write("syntax.json", "{\"type\": ")) == "document");
    }
    SECTION("non-object top level") {
        REQUIRE(expect_key(dir.write("arr.json", "[1, 2]")) == "document");
    }
    SECTION("unknown type value") {
        REQUIRE(expect_key(dir.write("t.json", R"({"type": "raid"})")) == "type");
    }
    SECTION("unknown top-level key") {
        std::string body = kRunConfig;
        body.insert(body.rfind('}'), R"(, "frobnicate": 1)");
        REQUIRE(expect_key(dir.write("extra.json", body)) == "frobnicate");
    }
    SECTION("unknown key inside the config block") {
        const char* body = R"json({
          "type": "run", "algorithm": "da", "benchmark": "m1",
          "config": {"xyz": 3}, "seeds": [1]
        })json";
        REQUIRE(expect_key(dir.write("cfgkey.json", body)) == "config.xyz");
    }
    SECTION("out-of-range value is caught by validation") {
        const char* body = R"json({
          "type": "run", "algorithm": "da", "benchmark": "m1",
          "config": {"learning_probability": 1.5}, "seeds": [1]
        })json";
        REQUIRE(expect_key(dir.write("range.json", body)) == "learning_probability");
    }
    SECTION("wrong type for a count") {
        const char* body = R"json({
          "type": "run", "algorithm": "da", "benchmark": "m1",
          "config": {"population_size": "many"}, "seeds": [1]
        })json";
        REQUIRE(expect_key(dir.write("type1.json", body)) == "config.population_size");
    }
    SECTION("fractional count") {
        const char* body = R"json({
          "type": "run", "algorithm": "da", "benchmark": "m1",
          "config": {"population_size": 10.5}, "seeds": [1]
        })json";
        REQUIRE(expect_key(dir.write("frac.json", body)) == "config.population_size");
    }
    SECTION("negative seed") {
        const char* body = R"json({
          "type": "run", "algorithm": "da", "benchmark": "m1",
          "config": {}, "seeds": [-4]
        })json";
        REQUIRE(expect_key(dir.write("seed.json", body)) == "seeds[0]");
    }
    SECTION("missing algorithm") {
        const char* body = R"json({
          "type": "run", "benchmark": "m1", "config": {}, "seeds": [1]
        })json";
        REQUIRE(expect_key(dir.write("noalgo.json", body)) == "algorithm");
    }
    SECTION("missing seeds") {
        const char* body = R"json({
          "type": "run", "algorithm": "da", "benchmark": "m1", "config": {}
        })json";
        REQUIRE(expect_key(dir.write("noseeds.json", body)) == "seeds");
    }
    SECTION("unknown benchmark id") {
        const char* body = R"json({
          "type": "run", "algorithm": "da", "benchmark": "rosenbrock",
          "config": {}, "seeds": [1]
        })json";
        REQUIRE(expect_key(dir.write("bench.json", body)) == "benchmark");
    }
    SECTION("sweeping a parameter the algorithm does not have") {
        const char* body = R"json({
          "type": "sweep", "algorithm": "da", "benchmark": "m1",
          "config": {}, "seeds": [1],
          "parameter": "temperature", "values": [0.1]
        })json";
        REQUIRE(expect_key(dir.write("param.json", body)) == "sweep.parameter");
    }
    SECTION("empty sweep values") {
        const char* body = R"json({
          "type": "sweep", "algorithm": "da", "benchmark": "m1",
          "config": {}, "seeds": [1],
          "parameter": "luck_coefficient", "values": []
        })json";
        REQUIRE(expect_key(dir.write("vals.json", body)) == "values");
    }
    SECTION("unknown key inside a compare entry") {
        const char* body = R"json({
          "type": "compare", "benchmark": "m2", "threshold": 1.0,
          "experiments": [{"algorithm": "da", "config": {}, "seeds": [1], "note": "x"}]
        })json";
        REQUIRE(expect_key(dir.write("entry.json", body)) == "experiments[0].note");
    }
    SECTION("compare without experiments") {
        const char* body = R"json({
          "type": "compare", "benchmark": "m2", "threshold": 1.0, "experiments": []
        })json";
        REQUIRE(expect_key(dir.write("noexp.json", body)) == "experiments");
    }
    SECTION("domain length must match the benchmark") {
        const char* body = R"json({
          "type": "run", "algorithm": "da", "benchmark": "m1",
          "domain": {"lower": [0.0], "upper": [1.0]},
          "config": {}, "seeds": [1]
        })json";
        // Caught when the experiment validates the domain against m1.
        REQUIRE_THROWS_AS(harness::parse_config(dir.write("dom.json", body)),
                          core::ConfigError);
    }
}

TEST_CASE("canonical form is a fixed point of parse") {
    ConfigDir dir;
    for (const char* body : {kRunConfig, kSweepConfig, kCompareConfig}) {
        const std::string first_path = dir.write("in.json", body);
        const std::string canon = harness::canonical_config(harness::parse_config(first_path));

        const std::string second_path = dir.write("canon.json", canon);
        const std::string again =
            harness::canonical_config(harness::parse_config(second_path));
        REQUIRE(canon == again);
    }

    SECTION("defaults are materialized in the canonical form") {
        const std::string path = dir.write("run.json", kRunConfig);
        const std::string canon = harness::canonical_config(harness::parse_config(path));
        REQUIRE(canon.find("\"champion_count\": 5") != std::string::npos);
        REQUIRE(canon.find("\"innovation_probability\": 0.5") != std::string::npos);
        REQUIRE(canon.back() == '\n');
    }
}
