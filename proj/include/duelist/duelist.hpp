#pragma once

// Umbrella header: the whole library is header-only.

#include <duelist/core/codec.hpp>
#include <duelist/core/random.hpp>
#include <duelist/core/types.hpp>

#include <duelist/engine/config.hpp>
#include <duelist/engine/engine.hpp>
#include <duelist/engine/trace.hpp>

#include <duelist/benchmarks/functions.hpp>
#include <duelist/benchmarks/grid_oracle.hpp>

#include <duelist/baselines/ga.hpp>
#include <duelist/baselines/ica.hpp>
#include <duelist/baselines/pso.hpp>

#include <duelist/harness/compare.hpp>
#include <duelist/harness/config_io.hpp>
#include <duelist/harness/csv.hpp>
#include <duelist/harness/experiment.hpp>
#include <duelist/harness/svg.hpp>
#include <duelist/harness/sweep.hpp>
