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

#include "hgrid/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <ostream>
#include <thread>

#include "hgrid/errors.hpp"
#include "hgrid/oracle.hpp"

namespace hgrid {

CostField::CostField(int resolution_x, int resolution_y, const Extents& data_extents, std::size_t record_count)
    : rx_(resolution_x),
      ry_(resolution_y),
      data_(data_extents),
      sweep_(data_extents.scaled(2.0)),
      record_count_(record_count) {
    if (rx_ < 2 || ry_ < 2) {
        throw ConfigError("sweep resolution must be at least 2x2");
    }
    costs_.assign(static_cast<std::size_t>(rx_) * ry_, 0);
}

Point2D CostField::sample(int i, int j) const {
    // Pin the last sample to the far edge instead of accumulating spacing.
    const double x = i == rx_ - 1 ? sweep_.max().x : sweep_.min().x + i * spacing_x();
    const double y = j == ry_ - 1 ? sweep_.max().y : sweep_.min().y + j * spacing_y();
    return {x, y};
}

namespace {

struct RowTally {
    std::size_t matches = 0;
    std::size_t short_circuits = 0;
    std::size_t short_circuit_mismatches = 0;
};

void sweep_rows(GridIndex& index, CostField& field, int row_begin, int row_end, int row_step, bool oracle,
                RowTally& tally) {
    for (int j = row_begin; j < row_end; j += row_step) {
        for (int i = 0; i < field.resolution_x(); ++i) {
            const Point2D q = field.sample(i, j);
            const QueryResult r = index.nearest(q);
            field.set_cost(i, j, r.records_examined);
            if (!oracle) {
                continue;
            }
            const auto truth = oracle::nearest(index.source(), q);
            tally.matches += truth.record == r.record ? 1 : 0;
            if (r.short_circuited) {
                ++tally.short_circuits;
                tally.short_circuit_mismatches += truth.distance == r.distance ? 0 : 1;
            }
        }
    }
}

}  // namespace

SweepResult sweep_cost(GridIndex& index, int resolution_x, int resolution_y, SweepOptions options) {
    index.refresh();
    SweepResult result{CostField(resolution_x, resolution_y, index.shape().extents(), index.source().record_count())};

    const int workers = std::clamp(options.threads, 1, resolution_y);
    std::vector<RowTally> tallies(static_cast<std::size_t>(workers));
    if (workers == 1) {
        sweep_rows(index, result.field, 0, resolution_y, 1, options.compare_oracle, tallies[0]);
    } else {
        // Rows are interleaved across workers; each writes only its own rows of the field.
        std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                try {
                    sweep_rows(index, result.field, w, resolution_y, workers, options.compare_oracle, tallies[w]);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
        for (auto& t : pool) {
            t.join();
        }
        for (const auto& e : errors) {
            if (e) {
                std::rethrow_exception(e);
            }
        }
    }
    for (const RowTally& t : tallies) {
        result.oracle_matches += t.matches;
        result.short_circuits += t.short_circuits;
        result.short_circuit_mismatches += t.short_circuit_mismatches;
    }
    return result;
}

SweepStats summarize(const CostField& field) {
    SweepStats s;
    const auto& costs = field.costs();
    s.cost_min = *std::min_element(costs.begin(), costs.end());
    s.cost_max = *std::max_element(costs.begin(), costs.end());
    double total = 0.0, interior_total = 0.0;
    for (int j = 0; j < field.resolution_y(); ++j) {
        for (int i = 0; i < field.resolution_x(); ++i) {
            const std::size_t c = field.cost(i, j);
            total += static_cast<double>(c);
            if (field.interior(i, j)) {
                interior_total += static_cast<double>(c);
                s.interior_max = std::max(s.interior_max, c);
                ++s.interior_samples;
            }
        }
    }
    s.cost_mean = total / static_cast<double>(costs.size());
    s.interior_mean = s.interior_samples ? interior_total / static_cast<double>(s.interior_samples) : 0.0;
    return s;
}

GrayImage colorize(const CostField& field, ColorMode mode, double cap_fraction) {
    GrayImage img{field.resolution_x(), field.resolution_y(), {}};
    img.pixels.resize(field.costs().size());
    const auto& costs = field.costs();

    double lo = 0.0, span = 0.0;
    if (mode == ColorMode::relative) {
        const auto [mn, mx] = std::minmax_element(costs.begin(), costs.end());
        lo = static_cast<double>(*mn);
        span = static_cast<double>(*mx - *mn);
    } else {
        if (!(cap_fraction > 0.0)) {
            throw ConfigError("cap fraction must be positive for absolute coloring");
        }
        span = cap_fraction * static_cast<double>(field.record_count());
    }
    for (std::size_t k = 0; k < costs.size(); ++k) {
        if (span <= 0.0) {
            img.pixels[k] = 0;
            continue;
        }
        const double v = std::round(255.0 * (static_cast<double>(costs[k]) - lo) / span);
        img.pixels[k] = static_cast<std::uint8_t>(std::clamp(v, 0.0, 255.0));
    }
    return img;
}

void write_pgm(std::ostream& out, const GrayImage& image) {
    out << "P5\n" << image.width << ' ' << image.height << "\n255\n";
    out.write(reinterpret_cast<const char*>(image.pixels.data()), static_cast<std::streamsize>(image.pixels.size()));
}

}  // namespace hgrid
