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
#include <vector>

#include "hgrid/core.hpp"
#include "hgrid/grid_index.hpp"

namespace hgrid {

/// Records examined by nearest() at every sample of a regular lattice. The lattice spans the data extents
/// scaled 2x about their center, both ends inclusive. Row 0 is the minimum-y row.
class CostField {
 public:
    CostField(int resolution_x, int resolution_y, const Extents& data_extents, std::size_t record_count);

    int resolution_x() const { return rx_; }
    int resolution_y() const { return ry_; }
    const Extents& sweep_extents() const { return sweep_; }
    const Extents& data_extents() const { return data_; }
    double spacing_x() const { return sweep_.width() / (rx_ - 1); }
    double spacing_y() const { return sweep_.height() / (ry_ - 1); }
    std::size_t record_count() const { return record_count_; }

    Point2D sample(int i, int j) const;
    bool interior(int i, int j) const { return data_.contains(sample(i, j)); }

    std::size_t cost(int i, int j) const { return costs_[static_cast<std::size_t>(j) * rx_ + i]; }
    void set_cost(int i, int j, std::size_t c) { costs_[static_cast<std::size_t>(j) * rx_ + i] = c; }
    const std::vector<std::size_t>& costs() const { return costs_; }

 private:
    int rx_;
    int ry_;
    Extents data_;
    Extents sweep_;
    std::size_t record_count_;
    std::vector<std::size_t> costs_;
};

struct SweepOptions {
    /// Workers evaluating rows in parallel; results are identical for any count.
    int threads = 1;
    /// Also run the brute-force oracle at every sample.
    bool compare_oracle = false;
};

struct SweepResult {
    CostField field;
    std::size_t oracle_matches = 0;  // same record as the oracle (only with compare_oracle)
    std::size_t short_circuits = 0;
    std::size_t short_circuit_mismatches = 0;

    double oracle_match_rate() const {
        return static_cast<double>(oracle_matches) / static_cast<double>(field.costs().size());
    }
};

/// Throws ConfigError for resolutions below 2 and EmptyIndexError when the index has no records.
SweepResult sweep_cost(GridIndex& index, int resolution_x, int resolution_y, SweepOptions options = {});

struct SweepStats {
    std::size_t cost_min = 0;
    std::size_t cost_max = 0;
    double cost_mean = 0.0;
    std::size_t interior_max = 0;
    double interior_mean = 0.0;
    std::size_t interior_samples = 0;
};

SweepStats summarize(const CostField& field);

enum class ColorMode { relative, absolute };

struct GrayImage {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> pixels;  // row-major, row 0 first

    std::uint8_t at(int x, int y) const { return pixels[static_cast<std::size_t>(y) * width + x]; }
};

/// relative: [min, max] of the field maps onto [0, 255] (all zero when constant).
/// absolute: [0, cap_fraction * record_count] maps onto [0, 255]; larger costs saturate.
/// Throws ConfigError for a non-positive cap_fraction in absolute mode.
GrayImage colorize(const CostField& field, ColorMode mode, double cap_fraction = 0.01);

/// Binary PGM (P5, maxval 255). Rows are written in image order, so the first row is minimum y.
void write_pgm(std::ostream& out, const GrayImage& image);

}  // namespace hgrid
