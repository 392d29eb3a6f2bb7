// Copyright (C) 2026 The hgrid Authors. All rights reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License"); you may not use this file except in compliance
// with the License. You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software distributed under the License
// is distributed on an "AS IS" BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express
// or implied. See the License for the specific language governing permissions and limitations under the License.

#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hgrid/grid_index.hpp"
#include "hgrid/hier_index.hpp"
#include "hgrid/sweep.hpp"

namespace hgrid {

/// One index configuration of a benchmark run.
struct RunConfig {
    Divisions divisions{10, 10};
    bool hierarchical = false;
    std::size_t max_bin_records = 1;
    std::optional<double> smallest_bin_dimension;
    HierConfig::NeighborSubgrids neighbor_mode = HierConfig::NeighborSubgrids::recurse;

    /// e.g. "grid-10x10", "hier-4x4", "hier-4x4-scan".
    std::string name() const;
};

std::unique_ptr<GridIndex> make_index(IndexableSource& source, const RunConfig& config);

/// Cost ceiling for a flat grid: the query bin plus eight neighbors at mean occupancy.
double max_cost_bound(std::size_t n, Divisions d);

struct RunReport {
    RunConfig config;
    std::size_t n = 0;
    SweepStats stats;
    double oracle_match_rate = 0.0;
    std::size_t short_circuits = 0;
    std::size_t short_circuit_mismatches = 0;
};

struct SweepRun {
    RunReport report;
    SweepResult sweep;
};

SweepRun run_sweep(IndexableSource& source, const RunConfig& config, int resolution_x, int resolution_y,
                   SweepOptions options);

inline constexpr const char* kStatsHeader =
    "config,n,div_x,div_y,hier,max_bin_records,cost_min,cost_max,cost_mean,interior_max,interior_mean,"
    "oracle_match_rate";

void write_stats_csv(std::ostream& out, const std::vector<RunReport>& reports);

/// Human-readable summary table.
void print_table(std::ostream& out, const std::vector<RunReport>& reports);

struct VerifyOptions {
    std::size_t n = 5000;
    std::uint64_t seed = 42;
    /// Random queries per (dataset, index) pair.
    std::size_t queries = 5000;
    Divisions divisions{10, 10};
    std::size_t max_bin_records = 1;
    std::optional<double> smallest_bin_dimension;
    HierConfig::NeighborSubgrids neighbor_mode = HierConfig::NeighborSubgrids::recurse;
};

struct VerifyCase {
    std::string dataset;
    std::string index;
    std::size_t queries = 0;
    std::size_t empty_results = 0;
    std::size_t exact_matches = 0;
    std::size_t short_circuits = 0;
    std::size_t short_circuit_mismatches = 0;
    std::size_t below_oracle = 0;  // results closer than the true nearest; must be zero
    std::size_t max_examined = 0;
    double mean_examined = 0.0;

    double match_rate() const { return queries ? static_cast<double>(exact_matches) / queries : 0.0; }
};

struct VerifyCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct VerifyReport {
    std::vector<VerifyCase> cases;
    std::vector<VerifyCheck> checks;

    bool passed() const;
};

/// Oracle comparison over seeded uniform and Gaussian datasets for a flat and a hierarchical index, plus
/// structural invariants of the built grids.
VerifyReport run_verify(const VerifyOptions& options);

void print_verify(std::ostream& out, const VerifyReport& report);

}  // namespace hgrid
