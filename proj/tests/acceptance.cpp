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

// Acceptance checks. Prints one PASS/FAIL line per criterion; with arguments, runs only the listed criteria.
// Exit status is nonzero when any selected criterion fails.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iterator>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "hgrid/bench.hpp"
#include "hgrid/cli.hpp"
#include "hgrid/datasets.hpp"
#include "hgrid/hier_index.hpp"
#include "hgrid/oracle.hpp"

using namespace hgrid;
namespace fs = std::filesystem;

namespace {

constexpr std::size_t kN = 5000;
constexpr std::uint64_t kSeed = 42;
constexpr int kResolution = 256;

struct Outcome {
    bool passed = false;
    std::string detail;
};

std::string format(const char* fmt, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof(buf), fmt, args...);
    return buf;
}

RunReport sweep_report(const RunConfig& config) {
    PointCollection points = gen_uniform(kN, default_domain(), kSeed);
    return run_sweep(points, config, kResolution, kResolution, {}).report;
}

RunConfig flat(int d) {
    RunConfig c;
    c.divisions = {d, d};
    return c;
}

RunConfig hier(int d) {
    RunConfig c = flat(d);
    c.hierarchical = true;
    c.max_bin_records = 1;
    return c;
}

Outcome criterion_1() {
    const RunReport r = sweep_report(flat(10));
    const double bound = max_cost_bound(kN, {10, 10});
    return {static_cast<double>(r.stats.interior_max) <= bound,
            format("interior max %zu, bound %.0f (5000 uniform, 10x10, 256x256)", r.stats.interior_max, bound)};
}

Outcome criterion_2() {
    const RunReport r = sweep_report(flat(10));
    const double expected = static_cast<double>(kN) / 100.0;
    const double mean = r.stats.interior_mean;
    return {mean <= 4 * expected && mean >= expected / 4,
            format("interior mean %.6f, expected %.0f within a factor of 4", mean, expected)};
}

Outcome criterion_3() {
    bool ok = true;
    std::string detail;
    for (const bool hierarchical : {false, true}) {
        std::vector<std::size_t> maxima;
        for (const int d : {2, 4, 8, 16}) {
            maxima.push_back(sweep_report(hierarchical ? hier(d) : flat(d)).stats.interior_max);
        }
        for (std::size_t k = 1; k < maxima.size(); ++k) {
            ok = ok && maxima[k] <= maxima[0];
        }
        detail += format("%s interior max 2x2/4x4/8x8/16x16 = %zu/%zu/%zu/%zu", hierarchical ? "; hier" : "flat",
                         maxima[0], maxima[1], maxima[2], maxima[3]);
    }
    return {ok, detail};
}

Outcome criterion_4() {
    const RunReport r = sweep_report(hier(10));
    const double cap = 0.01 * kN;
    return {static_cast<double>(r.stats.cost_max) < cap,
            format("full-sweep max %zu, cap %.0f (hier 10x10, max_bin_records 1)", r.stats.cost_max, cap)};
}

Outcome criterion_5() {
    std::size_t pairs = 0, empty = 0, shorts = 0, short_mismatch = 0, matches = 0, below = 0;
    for (const std::uint64_t seed : {kSeed, kSeed + 1}) {
        for (const bool gaussian : {false, true}) {
            PointCollection pc = gaussian ? gen_gaussian(kN, default_domain(), seed)
                                          : gen_uniform(kN, default_domain(), seed);
            GridIndex grid(pc, {10, 10});
            HierGridIndex tree(pc, {10, 10});
            const Extents wide = compute_extents(pc).scaled(2.0);
            SeededRng rng(seed * 7 + gaussian);
            for (int k = 0; k < 1500; ++k) {
                const Point2D q(rng.uniform(wide.min().x, wide.max().x), rng.uniform(wide.min().y, wide.max().y));
                const auto truth = oracle::nearest(pc, q);
                for (GridIndex* index : {&grid, static_cast<GridIndex*>(&tree)}) {
                    const QueryResult r = index->nearest(q);
                    ++pairs;
                    if (r.records_examined == 0 || r.record.value >= pc.record_count()) {
                        ++empty;
                        continue;
                    }
                    const double d = std::sqrt(dist_sq(q, pc.points()[r.record.value]));
                    below += d < truth.distance;
                    matches += r.record == truth.record;
                    if (r.short_circuited) {
                        ++shorts;
                        short_mismatch += r.distance != truth.distance;
                    }
                }
            }
        }
    }
    return {pairs >= 10000 && empty == 0 && short_mismatch == 0 && below == 0,
            format("%zu pairs, %zu empty, %zu short circuits with %zu mismatches, exact-match rate %.4f", pairs,
                   empty, shorts, short_mismatch, static_cast<double>(matches) / pairs)};
}

Outcome criterion_6() {
    SeededRng rng(606);
    std::size_t sets = 0, failures = 0;
    for (int trial = 0; trial < 400; ++trial) {
        const std::size_t bucket = 1 + rng.bits() % 4;
        const std::size_t n = bucket + 1 + rng.bits() % (64 - bucket);
        const int style = static_cast<int>(rng.bits() % 3);
        std::vector<Point2D> pts;
        for (std::size_t k = 0; k < n; ++k) {
            if (style == 0) {
                pts.emplace_back(rng.uniform(0, 100), rng.uniform(0, 100));
            } else if (style == 1) {
                pts.emplace_back(50 + 12 * rng.normal(), 50 + 12 * rng.normal());
            } else {
                // Coarse lattice, so coincident points are common.
                pts.emplace_back(static_cast<double>(rng.bits() % 6), static_cast<double>(rng.bits() % 6));
            }
        }
        PointCollection pc(pts);
        HierConfig config;
        config.max_bin_records = bucket;
        HierGridIndex index(pc, {2, 2}, config);
        index.rebuild();

        std::multiset<std::vector<RecordId>> grid_leaves, tree_leaves;
        for (auto& leaf : index.leaf_occupancies()) grid_leaves.insert(leaf);
        for (auto& leaf : oracle::quadtree(pts, bucket, index.smallest_bin_dimension())) tree_leaves.insert(leaf.ids);
        ++sets;
        failures += grid_leaves != tree_leaves;
    }
    return {sets >= 100 && failures == 0,
            format("%zu point sets (B in 1..4, B < n <= 64), %zu mismatched", sets, failures)};
}

Outcome criterion_7() {
    SeededRng rng(707);
    std::size_t pairs = 0, failures = 0;
    for (int trial = 0; trial < 250; ++trial) {
        const std::size_t n = 1 + rng.bits() % 500;
        PointCollection pc = trial % 2 ? gen_gaussian(n, default_domain(), rng.bits())
                                       : gen_uniform(n, default_domain(), rng.bits());
        const int d = 1 + static_cast<int>(rng.bits() % 20);
        GridIndex grid(pc, {d, d});
        HierGridIndex tree(pc, {d, d});
        for (int k = 0; k < 4; ++k) {
            Extents rect;
            if (k == 0 && n > 0) {
                const Point2D p = pc.points()[rng.bits() % n];
                rect = {p, p};
            } else {
                const double x0 = rng.uniform(-300, 1300), x1 = rng.uniform(-300, 1300);
                const double y0 = rng.uniform(-300, 1300), y1 = rng.uniform(-300, 1300);
                rect = {{std::min(x0, x1), std::min(y0, y1)}, {std::max(x0, x1), std::max(y0, y1)}};
            }
            const auto truth = oracle::range(pc, rect);
            failures += grid.range_query(rect) != truth;
            failures += tree.range_query(rect) != truth;
            pairs += 2;
        }
    }
    return {pairs >= 1000 && failures == 0, format("%zu (point set, rectangle) pairs, %zu mismatched", pairs, failures)};
}

std::string slurp(const fs::path& p) {
    std::ifstream f(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(f), {}};
}

bool run(std::vector<std::string> args) {
    args.insert(args.begin(), "hgrid_bench");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    return run_cli(static_cast<int>(argv.size()), argv.data(), out, err) == 0;
}

Outcome criterion_8() {
    const fs::path root = fs::temp_directory_path() / "hgrid_acceptance_determinism";
    fs::remove_all(root);
    const std::vector<std::vector<std::string>> invocations{
        {"generate", "--dataset", "uniform", "--n", "5000", "--seed", "42"},
        {"generate", "--dataset", "gaussian", "--n", "5000", "--seed", "42"},
        {"sweep", "--n", "5000", "--divisions", "10x10", "--sweep-resolution", "128x128"},
        {"sweep", "--dataset", "gaussian", "--divisions", "10x10", "--hierarchical", "true", "--sweep-resolution",
         "128x128", "--threads", "3"},
        {"compare", "--divisions", "2x2,8x8", "--sweep-resolution", "64x64"},
    };
    bool ok = true;
    std::size_t files = 0;
    for (std::size_t k = 0; k < invocations.size(); ++k) {
        for (const char* rep : {"a", "b"}) {
            const fs::path dir = root / rep;
            fs::create_directories(dir);
            auto args = invocations[k];
            args.insert(args.end(), {"--out", (dir / ("run" + std::to_string(k))).string()});
            ok = ok && run(args);
        }
    }
    for (const auto& entry : fs::directory_iterator(root / "a")) {
        const fs::path twin = root / "b" / entry.path().filename();
        ok = ok && fs::exists(twin) && slurp(entry.path()) == slurp(twin) && fs::file_size(twin) > 0;
        ++files;
    }
    ok = ok && files == static_cast<std::size_t>(std::distance(fs::directory_iterator(root / "b"), {}));
    fs::remove_all(root);
    return {ok && files > 0, format("%zu output files compared across 2 repetitions of %zu invocations", files,
                                    invocations.size())};
}

// Closed segment vs closed rectangle by separating axes: x, y and the segment normal.
bool segment_touches(Point2D a, Point2D b, const Extents& r) {
    if (std::max(a.x, b.x) < r.min().x || std::min(a.x, b.x) > r.max().x) return false;
    if (std::max(a.y, b.y) < r.min().y || std::min(a.y, b.y) > r.max().y) return false;
    const double dx = b.x - a.x, dy = b.y - a.y;
    int pos = 0, neg = 0;
    for (const Point2D c : {r.min(), r.max(), Point2D(r.min().x, r.max().y), Point2D(r.max().x, r.min().y)}) {
        const double s = dx * (c.y - a.y) - dy * (c.x - a.x);
        pos += s > 0;
        neg += s < 0;
    }
    return pos != 4 && neg != 4;
}

bool rects_touch(const Extents& a, const Extents& b) {
    return a.min().x <= b.max().x && b.min().x <= a.max().x && a.min().y <= b.max().y && b.min().y <= a.max().y;
}

Outcome criterion_9() {
    SeededRng rng(909);
    std::size_t primitives = 0, failures = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const Divisions d{1 + static_cast<int>(rng.bits() % 32), 1 + static_cast<int>(rng.bits() % 32)};
        const Point2D origin(rng.uniform(-100, 100), rng.uniform(-100, 100));
        const GridShape shape({origin, {origin.x + rng.uniform(1, 500), origin.y + rng.uniform(1, 500)}}, d);
        const Extents& e = shape.extents();
        auto pick = [&] {
            return Point2D(rng.uniform(e.min().x, e.max().x), rng.uniform(e.min().y, e.max().y));
        };
        const Point2D a = pick(), b = pick();
        const Extents rect{{std::min(a.x, b.x), std::min(a.y, b.y)}, {std::max(a.x, b.x), std::max(a.y, b.y)}};

        RenderedGrid grid(shape);
        grid.render_line(RecordId{0}, a, b);
        grid.render_area(RecordId{1}, rect);
        for (std::size_t k = 0; k < shape.bin_count(); ++k) {
            const BinCoord c = shape.coord(k);
            const auto& list = grid.at(c);
            const bool has_line = list && std::binary_search(list->begin(), list->end(), RecordId{0});
            const bool has_area = list && std::binary_search(list->begin(), list->end(), RecordId{1});
            if (has_line != segment_touches(a, b, shape.bin_rect(c)) ||
                has_area != rects_touch(rect, shape.bin_rect(c))) {
                ++failures;
                break;
            }
        }
        primitives += 2;
    }
    return {primitives >= 1000 && failures == 0,
            format("%zu primitives on grids up to 32x32, %zu mismatched", primitives, failures)};
}

struct Criterion {
    const char* title;
    std::function<Outcome()> check;
};

const std::vector<Criterion>& criteria() {
    static const std::vector<Criterion> all{
        {"flat cost ceiling", criterion_1},
        {"flat mean cost", criterion_2},
        {"more divisions lower the max cost", criterion_3},
        {"hierarchical cost under 1% of n", criterion_4},
        {"exactness where claimable", criterion_5},
        {"quad tree equivalence", criterion_6},
        {"range queries", criterion_7},
        {"CLI determinism", criterion_8},
        {"render coverage", criterion_9},
    };
    return all;
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<int> selected;
    for (int k = 1; k < argc; ++k) {
        const int c = std::atoi(argv[k]);
        if (c < 1 || c > static_cast<int>(criteria().size())) {
            std::fprintf(stderr, "usage: %s [criterion 1..%zu]...\n", argv[0], criteria().size());
            return 2;
        }
        selected.push_back(c);
    }
    if (selected.empty()) {
        for (int c = 1; c <= static_cast<int>(criteria().size()); ++c) selected.push_back(c);
    }
    int failed = 0;
    for (const int c : selected) {
        const Criterion& crit = criteria()[c - 1];
        Outcome o;
        try {
            o = crit.check();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        std::printf("C%d %s  %s: %s\n", c, o.passed ? "PASS" : "FAIL", crit.title, o.detail.c_str());
        std::fflush(stdout);
        failed += !o.passed;
    }
    return failed ? 1 : 0;
}
