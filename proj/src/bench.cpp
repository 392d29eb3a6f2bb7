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

#include "hgrid/bench.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>
#include <set>
#include <string>

#include "hgrid/datasets.hpp"
#include "hgrid/errors.hpp"
#include "hgrid/oracle.hpp"

namespace hgrid {

namespace {

std::string fixed(double v, int digits = 6) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
    return buf;
}

}  // namespace

std::string RunConfig::name() const {
    std::string s = hierarchical ? "hier-" : "grid-";
    s += std::to_string(divisions.x) + "x" + std::to_string(divisions.y);
    if (hierarchical && neighbor_mode == HierConfig::NeighborSubgrids::scan) {
        s += "-scan";
    }
    return s;
}

std::unique_ptr<GridIndex> make_index(IndexableSource& source, const RunConfig& config) {
    if (!config.hierarchical) {
        return std::make_unique<GridIndex>(source, config.divisions);
    }
    HierConfig hc;
    hc.max_bin_records = config.max_bin_records;
    hc.smallest_bin_dimension = config.smallest_bin_dimension;
    hc.neighbor_subgrids = config.neighbor_mode;
    return std::make_unique<HierGridIndex>(source, config.divisions, hc);
}

double max_cost_bound(std::size_t n, Divisions d) {
    return 9.0 * static_cast<double>(n) / (static_cast<double>(d.x) * d.y);
}

SweepRun run_sweep(IndexableSource& source, const RunConfig& config, int resolution_x, int resolution_y,
                   SweepOptions options) {
    auto index = make_index(source, config);
    SweepResult sweep = sweep_cost(*index, resolution_x, resolution_y, options);
    RunReport report;
    report.config = config;
    report.n = source.record_count();
    report.stats = summarize(sweep.field);
    report.oracle_match_rate = options.compare_oracle ? sweep.oracle_match_rate() : 0.0;
    report.short_circuits = sweep.short_circuits;
    report.short_circuit_mismatches = sweep.short_circuit_mismatches;
    return {report, std::move(sweep)};
}

void write_stats_csv(std::ostream& out, const std::vector<RunReport>& reports) {
    out << kStatsHeader << '\n';
    for (const RunReport& r : reports) {
        out << r.config.name() << ',' << r.n << ',' << r.config.divisions.x << ',' << r.config.divisions.y << ','
            << (r.config.hierarchical ? "true" : "false") << ','
            << (r.config.hierarchical ? std::to_string(r.config.max_bin_records) : std::string("0")) << ','
            << r.stats.cost_min << ',' << r.stats.cost_max << ',' << fixed(r.stats.cost_mean) << ','
            << r.stats.interior_max << ',' << fixed(r.stats.interior_mean) << ',' << fixed(r.oracle_match_rate)
            << '\n';
    }
}

void print_table(std::ostream& out, const std::vector<RunReport>& reports) {
    char line[256];
    std::snprintf(line, sizeof(line), "%-16s %6s %8s %8s %10s %8s %10s %8s\n", "config", "n", "min", "max", "mean",
                  "int.max", "int.mean", "match");
    out << line;
    for (const RunReport& r : reports) {
        std::snprintf(line, sizeof(line), "%-16s %6zu %8zu %8zu %10.3f %8zu %10.3f %8.4f\n", r.config.name().c_str(),
                      r.n, r.stats.cost_min, r.stats.cost_max, r.stats.cost_mean, r.stats.interior_max,
                      r.stats.interior_mean, r.oracle_match_rate);
        out << line;
    }
}

bool VerifyReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const VerifyCheck& c) { return c.passed; });
}

namespace {

// Gap-fill totality and identity reuse on a built single-layer index.
VerifyCheck check_filled_grid(const GridIndex& index, const std::string& label) {
    const GridShape& shape = index.shape();
    std::set<const BinList*> rendered_ids, filled_ids;
    std::size_t holes = 0;
    for (std::size_t k = 0; k < shape.bin_count(); ++k) {
        const BinCoord c = shape.coord(k);
        if (const auto& r = index.rendered().at(c)) {
            rendered_ids.insert(r.get());
        }
        const auto& f = index.filled().at(c);
        if (!f || f->empty()) {
            ++holes;
        } else {
            filled_ids.insert(f.get());
        }
    }
    const bool same = rendered_ids == filled_ids;
    return {"gap fill totality (" + label + ")", holes == 0 && same,
            std::to_string(holes) + " empty bins, " + std::to_string(filled_ids.size()) + " lists filled vs " +
                std::to_string(rendered_ids.size()) + " rendered"};
}

}  // namespace

VerifyReport run_verify(const VerifyOptions& options) {
    VerifyReport report;
    const Extents domain = default_domain();
    const char* datasets[] = {"uniform", "gaussian"};

    std::size_t case_no = 0;
    for (const char* dataset : datasets) {
        PointCollection points = std::string(dataset) == "uniform" ? gen_uniform(options.n, domain, options.seed)
                                                                    : gen_gaussian(options.n, domain, options.seed);
        for (const bool hier : {false, true}) {
            RunConfig cfg;
            cfg.divisions = options.divisions;
            cfg.hierarchical = hier;
            cfg.max_bin_records = options.max_bin_records;
            cfg.smallest_bin_dimension = options.smallest_bin_dimension;
            cfg.neighbor_mode = options.neighbor_mode;
            auto index = make_index(points, cfg);
            index->refresh();
            if (!hier) {
                report.checks.push_back(check_filled_grid(*index, dataset));
            }

            VerifyCase vc;
            vc.dataset = dataset;
            vc.index = cfg.name();
            const Extents query_box = index->shape().extents().scaled(2.0);
            SeededRng rng(options.seed * 1000003ULL + ++case_no);
            double total = 0.0;
            for (std::size_t k = 0; k < options.queries; ++k) {
                const Point2D q(rng.uniform(query_box.min().x, query_box.max().x),
                                rng.uniform(query_box.min().y, query_box.max().y));
                ++vc.queries;
                QueryResult r;
                try {
                    r = index->nearest(q);
                } catch (const EmptyIndexError&) {
                    ++vc.empty_results;
                    continue;
                }
                const auto truth = oracle::nearest(points, q);
                vc.exact_matches += truth.record == r.record ? 1 : 0;
                vc.below_oracle += r.distance < truth.distance ? 1 : 0;
                if (r.short_circuited) {
                    ++vc.short_circuits;
                    vc.short_circuit_mismatches += r.distance == truth.distance ? 0 : 1;
                }
                vc.max_examined = std::max(vc.max_examined, r.records_examined);
                total += static_cast<double>(r.records_examined);
            }
            vc.mean_examined = vc.queries ? total / static_cast<double>(vc.queries) : 0.0;
            report.cases.push_back(vc);
        }
    }

    std::size_t empty = 0, sc_bad = 0, below = 0, sc = 0;
    for (const VerifyCase& c : report.cases) {
        empty += c.empty_results;
        sc_bad += c.short_circuit_mismatches;
        below += c.below_oracle;
        sc += c.short_circuits;
    }
    report.checks.push_back({"every query returns a record", empty == 0, std::to_string(empty) + " empty results"});
    report.checks.push_back({"short circuit matches oracle", sc_bad == 0,
                             std::to_string(sc_bad) + " mismatches in " + std::to_string(sc) + " short circuits"});
    report.checks.push_back(
        {"no result closer than oracle", below == 0, std::to_string(below) + " results below the true distance"});
    for (const VerifyCase& c : report.cases) {
        if (c.dataset == "uniform" && c.index.rfind("hier-", 0) == 0) {
            const double cap = 0.01 * static_cast<double>(options.n);
            report.checks.push_back({"hierarchical max cost under 1% of n (uniform)",
                                     static_cast<double>(c.max_examined) < cap,
                                     "max " + std::to_string(c.max_examined) + " vs " + fixed(cap, 1)});
        }
    }
    return report;
}

void print_verify(std::ostream& out, const VerifyReport& report) {
    char line[256];
    std::snprintf(line, sizeof(line), "%-9s %-14s %7s %6s %9s %8s %8s %9s\n", "dataset", "index", "queries", "empty",
                  "match", "shortc", "max", "mean");
    out << line;
    for (const VerifyCase& c : report.cases) {
        std::snprintf(line, sizeof(line), "%-9s %-14s %7zu %6zu %9.4f %8zu %8zu %9.3f\n", c.dataset.c_str(),
                      c.index.c_str(), c.queries, c.empty_results, c.match_rate(), c.short_circuits, c.max_examined,
                      c.mean_examined);
        out << line;
    }
    out << '\n';
    for (const VerifyCheck& c : report.checks) {
        out << (c.passed ? "PASS  " : "FAIL  ") << c.name << " - " << c.detail << '\n';
    }
    out << (report.passed() ? "verify: all checks passed\n" : "verify: FAILED\n");
}

}  // namespace hgrid
