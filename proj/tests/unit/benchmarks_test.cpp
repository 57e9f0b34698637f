#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include <duelist/benchmarks/functions.hpp>
#include <duelist/benchmarks/grid_oracle.hpp>
#include <duelist/core/random.hpp>

using namespace duelist;

TEST_CASE("objective functions hit their anchor points") {
    SECTION("both multimodal functions vanish at the origin") {
        REQUIRE(benchmarks::m1(0.0, 0.0) == 0.0);
        REQUIRE(benchmarks::m2(0.0, 0.0) == 0.0);
    }
    SECTION("they are pure: repeated calls are bit-identical") {
        core::RandomStream rng(17);
        for (int i = 0; i < 200; ++i) {
            const double x = rng.next_unit() * 10.0;
            const double y = rng.next_unit() * 10.0;
            REQUIRE(benchmarks::m1(x, y) == benchmarks::m1(x, y));
            REQUIRE(benchmarks::m2(x, y) == benchmarks::m2(x, y));
        }
    }
    SECTION("shifted sphere peaks at the shift with value f_bias") {
        benchmarks::ShiftedSphereSpec spec;
        REQUIRE(benchmarks::shifted_sphere(std::vector<double>{0.0, 0.0}, spec) == 450.0);
        REQUIRE(benchmarks::shifted_sphere(std::vector<double>{1.0, 1.0}, spec) == 448.0);

        spec.shift = {2.0, -3.0};
        REQUIRE(benchmarks::shifted_sphere(std::vector<double>{2.0, -3.0}, spec) == 450.0);
        REQUIRE(benchmarks::shifted_sphere(std::vector<double>{2.0, -2.0}, spec) == 449.0);
    }
    SECTION("shifted sphere never exceeds f_bias") {
        benchmarks::ShiftedSphereSpec spec;
        core::RandomStream rng(19);
        for (int i = 0; i < 1000; ++i) {
            const std::vector<double> p = {rng.next_unit() * 200.0 - 100.0,
                                           rng.next_unit() * 200.0 - 100.0};
            const double v = benchmarks::shifted_sphere(p, spec);
            REQUIRE(v <= 450.0);
            if (p[0] != 0.0 || p[1] != 0.0)
                REQUIRE(v < 450.0);
        }
    }
    SECTION("shifted sphere dimension mismatch is a contract violation") {
        benchmarks::ShiftedSphereSpec spec;
        REQUIRE_THROWS_AS(benchmarks::shifted_sphere(std::vector<double>{1.0}, spec),
                          core::ContractViolation);
    }
    SECTION("spec validation") {
        benchmarks::ShiftedSphereSpec spec;
        spec.dimension = 3;
        spec.shift = {1.0, 2.0};
        REQUIRE_THROWS_AS(spec.validate(), core::ConfigError);
        spec.shift = {1.0, 2.0, 3.0};
        REQUIRE_NOTHROW(spec.validate());
        REQUIRE(spec.effective_shift() == std::vector<double>{1.0, 2.0, 3.0});
        spec.shift.clear();
        REQUIRE(spec.effective_shift() == std::vector<double>{0.0, 0.0, 0.0});
    }
}

TEST_CASE("benchmark registry resolves ids") {
    benchmarks::Benchmark m1 = benchmarks::find_benchmark("m1");
    REQUIRE(m1.domain.n_vars() == 2);
    REQUIRE(m1.domain.lower == std::vector<double>{0.0, 0.0});
    REQUIRE(m1.domain.upper == std::vector<double>{10.0, 10.0});
    REQUIRE(m1.objective(std::vector<double>{0.0, 0.0}) == 0.0);

    benchmarks::Benchmark sphere = benchmarks::find_benchmark("shifted_sphere");
    REQUIRE(sphere.domain.n_vars() == 2);
    REQUIRE(sphere.domain.lower == std::vector<double>{-100.0, -100.0});
    REQUIRE(sphere.objective(std::vector<double>{0.0, 0.0}) == 450.0);

    REQUIRE(benchmarks::benchmark_ids().size() == 3);
    try {
        benchmarks::find_benchmark("rosenbrock");
        FAIL("expected ConfigError");
    } catch (const core::ConfigError& e) {
        REQUIRE(e.key() == "benchmark");
    }
}

TEST_CASE("grid oracle finds maxima") {
    SECTION("constant objective returns the constant") {
        const core::Objective flat = [](std::span<const double>) { return 2.5; };
        benchmarks::OracleResult r =
            benchmarks::grid_oracle(flat, core::SearchDomain::box(2, 0.0, 1.0), 11);
        REQUIRE(r.best_value == 2.5);
        REQUIRE(r.best_point.size() == 2);
    }
    SECTION("recovers the known multimodal maxima") {
        const core::SearchDomain box = core::SearchDomain::box(2, 0.0, 10.0);
        benchmarks::Benchmark m1 = benchmarks::find_benchmark("m1");
        benchmarks::OracleResult r1 = benchmarks::grid_oracle(m1.objective, box, 501);
        REQUIRE(r1.best_value > 18.5547 - 0.01);
        REQUIRE(r1.best_value < 18.5547 + 0.01);

        benchmarks::Benchmark m2 = benchmarks::find_benchmark("m2");
        benchmarks::OracleResult r2 = benchmarks::grid_oracle(m2.objective, box, 501);
        REQUIRE(r2.best_value > 30.3489 - 0.02);
        REQUIRE(r2.best_value < 30.3489 + 0.02);
    }
    SECTION("a symmetric odd grid lands exactly on the sphere peak") {
        benchmarks::Benchmark sphere = benchmarks::find_benchmark("shifted_sphere");
        benchmarks::OracleResult r =
            benchmarks::grid_oracle(sphere.objective, sphere.domain, 201);
        REQUIRE(r.best_value == 450.0);
        REQUIRE(r.best_point == std::vector<double>{0.0, 0.0});
    }
    SECTION("result never drops on nested finer grids") {
        benchmarks::Benchmark m1 = benchmarks::find_benchmark("m1");
        double previous = -1e300;
        // 11 -> 21 -> 41 -> 81: each grid contains all points of the last.
        // The post-grid polish converges to machine precision from any of
        // these, hence the hair of slack on the comparison.
        for (std::size_t resolution : {11, 21, 41, 81}) {
            benchmarks::OracleResult r =
                benchmarks::grid_oracle(m1.objective, m1.domain, resolution);
            REQUIRE(r.best_value >= previous - 1e-9);
            previous = r.best_value;
        }
    }
    SECTION("refinement stays inside the box") {
        benchmarks::Benchmark m2 = benchmarks::find_benchmark("m2");
        benchmarks::OracleResult r = benchmarks::grid_oracle(m2.objective, m2.domain, 51);
        for (std::size_t d = 0; d < 2; ++d) {
            REQUIRE(r.best_point[d] >= m2.domain.lower[d]);
            REQUIRE(r.best_point[d] <= m2.domain.upper[d]);
        }
    }
    SECTION("preconditions are enforced") {
        const core::Objective flat = [](std::span<const double>) { return 0.0; };
        REQUIRE_THROWS_AS(benchmarks::grid_oracle(flat, core::SearchDomain::box(2, 0.0, 1.0), 1),
                          core::ConfigError);
        REQUIRE_THROWS_AS(benchmarks::grid_oracle(flat, core::SearchDomain::box(4, 0.0, 1.0), 11),
                          core::ConfigError);
    }
}
