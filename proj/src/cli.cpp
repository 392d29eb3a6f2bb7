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

#include "hgrid/cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hgrid/bench.hpp"
#include "hgrid/datasets.hpp"

namespace hgrid {

namespace {

struct DatasetArgs {
    std::string kind = "uniform";
    std::string file;
    std::size_t n = 5000;
    std::uint64_t seed = 42;
};

struct IndexArgs {
    std::string divisions = "10x10";
    std::string hierarchical = "false";
    std::size_t max_bin_records = 1;
    std::optional<double> smallest_bin_dimension;
    std::string neighbor_mode = "recurse";
};

struct SweepArgs {
    std::string resolution = "256x256";
    std::string color = "both";
    double cap_fraction = 0.01;
    int threads = 1;
    bool oracle = true;
};

void add_dataset_options(CLI::App* app, DatasetArgs& a) {
    app->add_option("--dataset", a.kind, "uniform | gaussian | file")
        ->check(CLI::IsMember({"uniform", "gaussian", "file"}));
    app->add_option("--file", a.file, "point file for --dataset file");
    app->add_option("--n", a.n, "number of generated points")->check(CLI::PositiveNumber);
    app->add_option("--seed", a.seed, "generator seed");
}

void add_index_options(CLI::App* app, IndexArgs& a, bool lists) {
    app->add_option("--divisions", a.divisions, lists ? "comma separated XxY list" : "XxY grid divisions");
    app->add_option("--hierarchical", a.hierarchical, lists ? "true | false | both" : "true | false")
        ->check(CLI::IsMember(lists ? std::vector<std::string>{"true", "false", "both"}
                                    : std::vector<std::string>{"true", "false"}));
    app->add_option("--max-bin-records", a.max_bin_records, "subdivision threshold")->check(CLI::PositiveNumber);
    app->add_option("--smallest-bin-dimension", a.smallest_bin_dimension, "subdivision floor in world units")
        ->check(CLI::PositiveNumber);
    app->add_option("--neighbor-mode", a.neighbor_mode, "how hierarchical queries treat subdivided neighbors")
        ->check(CLI::IsMember(lists ? std::vector<std::string>{"recurse", "scan", "both"}
                                    : std::vector<std::string>{"recurse", "scan"}));
}

void add_sweep_options(CLI::App* app, SweepArgs& a) {
    app->add_option("--sweep-resolution", a.resolution, "WxH query lattice");
    app->add_option("--color", a.color, "relative | absolute | both")
        ->check(CLI::IsMember({"relative", "absolute", "both"}));
    app->add_option("--cap-fraction", a.cap_fraction, "absolute color cap as a fraction of n");
    app->add_option("--threads", a.threads, "sweep worker threads")->check(CLI::PositiveNumber);
    app->add_option("--oracle", a.oracle, "compare every sample against brute force");
}

int parse_int(const std::string& text, const std::string& what) {
    int v = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size() || v < 1) {
        throw CLI::ValidationError(what, "expected a positive integer, got '" + text + "'");
    }
    return v;
}

// "WxH" -> {W, H}
std::pair<int, int> parse_pair(const std::string& text, const std::string& what) {
    const auto x = text.find('x');
    if (x == std::string::npos) {
        throw CLI::ValidationError(what, "expected <X>x<Y>, got '" + text + "'");
    }
    return {parse_int(text.substr(0, x), what), parse_int(text.substr(x + 1), what)};
}

std::vector<Divisions> parse_divisions(const std::string& text) {
    std::vector<Divisions> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto [x, y] = parse_pair(item, "--divisions");
        out.push_back({x, y});
    }
    if (out.empty()) {
        throw CLI::ValidationError("--divisions", "no divisions given");
    }
    return out;
}

PointCollection load_dataset(const DatasetArgs& a) {
    if (a.kind == "file") {
        if (a.file.empty()) {
            throw std::runtime_error("--dataset file requires --file");
        }
        return PointCollection(read_points(a.file));
    }
    return a.kind == "gaussian" ? gen_gaussian(a.n, default_domain(), a.seed)
                                : gen_uniform(a.n, default_domain(), a.seed);
}

std::vector<RunConfig> expand_configs(const IndexArgs& a) {
    std::vector<bool> hier_modes;
    if (a.hierarchical != "true") hier_modes.push_back(false);
    if (a.hierarchical != "false") hier_modes.push_back(true);
    std::vector<HierConfig::NeighborSubgrids> neighbor_modes;
    if (a.neighbor_mode != "scan") neighbor_modes.push_back(HierConfig::NeighborSubgrids::recurse);
    if (a.neighbor_mode != "recurse") neighbor_modes.push_back(HierConfig::NeighborSubgrids::scan);

    std::vector<RunConfig> out;
    for (const bool hier : hier_modes) {
        for (const Divisions d : parse_divisions(a.divisions)) {
            for (const auto mode : neighbor_modes) {
                if (!hier && mode != neighbor_modes.front()) {
                    continue;
                }
                RunConfig c;
                c.divisions = d;
                c.hierarchical = hier;
                c.max_bin_records = a.max_bin_records;
                c.smallest_bin_dimension = a.smallest_bin_dimension;
                c.neighbor_mode = mode;
                out.push_back(c);
            }
        }
    }
    return out;
}

std::ofstream open_output(const std::string& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        throw std::runtime_error("cannot write '" + path + "'");
    }
    return f;
}

void write_heatmaps(const std::string& prefix, const RunConfig& config, const CostField& field,
                    const SweepArgs& a, std::ostream& out) {
    std::vector<std::pair<std::string, ColorMode>> modes;
    if (a.color != "absolute") modes.emplace_back("relative", ColorMode::relative);
    if (a.color != "relative") modes.emplace_back("absolute", ColorMode::absolute);
    for (const auto& [label, mode] : modes) {
        const std::string path = prefix + "_" + config.name() + "_" + label + ".pgm";
        auto f = open_output(path);
        write_pgm(f, colorize(field, mode, a.cap_fraction));
        out << "wrote " << path << '\n';
    }
}

int run_sweeps(const DatasetArgs& da, const IndexArgs& ia, const SweepArgs& sa, const std::string& prefix,
               const std::string& csv_suffix, std::ostream& out) {
    if (sa.color != "relative" && !(sa.cap_fraction > 0.0)) {
        throw CLI::ValidationError("--cap-fraction", "must be positive for absolute coloring");
    }
    PointCollection points = load_dataset(da);
    const auto [rx, ry] = parse_pair(sa.resolution, "--sweep-resolution");
    if (rx < 2 || ry < 2) {
        throw CLI::ValidationError("--sweep-resolution", "must be at least 2x2");
    }
    std::vector<RunReport> reports;
    for (const RunConfig& config : expand_configs(ia)) {
        SweepRun run = run_sweep(points, config, rx, ry, {sa.threads, sa.oracle});
        write_heatmaps(prefix, config, run.sweep.field, sa, out);
        reports.push_back(run.report);
    }
    const std::string csv = prefix + csv_suffix;
    auto f = open_output(csv);
    write_stats_csv(f, reports);
    out << "wrote " << csv << "\n\n";
    print_table(out, reports);
    return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Hierarchical grid spatial index benchmark"};
    app.require_subcommand(1);

    std::string prefix = "hgrid";
    DatasetArgs gen_data;
    auto* generate = app.add_subcommand("generate", "write a seeded dataset as a point file");
    add_dataset_options(generate, gen_data);
    generate->add_option("--out", prefix, "output path prefix");

    DatasetArgs sweep_data;
    IndexArgs sweep_index;
    SweepArgs sweep_args;
    auto* sweep = app.add_subcommand("sweep", "cost sweep of one configuration: heatmaps and stats CSV");
    add_dataset_options(sweep, sweep_data);
    add_index_options(sweep, sweep_index, false);
    add_sweep_options(sweep, sweep_args);
    sweep->add_option("--out", prefix, "output path prefix");

    DatasetArgs cmp_data;
    IndexArgs cmp_index;
    cmp_index.divisions = "2x2,4x4,8x8,16x16";
    cmp_index.hierarchical = "both";
    SweepArgs cmp_args;
    auto* compare = app.add_subcommand("compare", "cost sweeps across division counts and hierarchy settings");
    add_dataset_options(compare, cmp_data);
    add_index_options(compare, cmp_index, true);
    add_sweep_options(compare, cmp_args);
    compare->add_option("--out", prefix, "output path prefix");

    VerifyOptions vopts;
    std::string verify_divisions = "10x10";
    std::string verify_neighbor = "recurse";
    bool write_report = false;
    auto* verify = app.add_subcommand("verify", "oracle equivalence and invariant checks on seeded data");
    verify->add_option("--n", vopts.n, "points per dataset")->check(CLI::PositiveNumber);
    verify->add_option("--seed", vopts.seed, "generator seed");
    verify->add_option("--queries", vopts.queries, "random queries per dataset and index")
        ->check(CLI::PositiveNumber);
    verify->add_option("--divisions", verify_divisions, "XxY grid divisions");
    verify->add_option("--max-bin-records", vopts.max_bin_records, "subdivision threshold")
        ->check(CLI::PositiveNumber);
    verify->add_option("--smallest-bin-dimension", vopts.smallest_bin_dimension, "subdivision floor")
        ->check(CLI::PositiveNumber);
    verify->add_option("--neighbor-mode", verify_neighbor, "recurse | scan")
        ->check(CLI::IsMember({"recurse", "scan"}));
    verify->add_option("--out", prefix, "write the report to <prefix>_verify.txt")
        ->each([&](const std::string&) { write_report = true; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    try {
        if (*generate) {
            const PointCollection points = load_dataset(gen_data);
            const std::string path = prefix + "_points.csv";
            auto f = open_output(path);
            write_points(f, points.points());
            out << "wrote " << path << " (" << points.record_count() << " points)\n";
            return 0;
        }
        if (*sweep) {
            return run_sweeps(sweep_data, sweep_index, sweep_args, prefix, "_stats.csv", out);
        }
        if (*compare) {
            return run_sweeps(cmp_data, cmp_index, cmp_args, prefix, "_compare.csv", out);
        }
        if (*verify) {
            const auto [x, y] = parse_pair(verify_divisions, "--divisions");
            vopts.divisions = {x, y};
            vopts.neighbor_mode = verify_neighbor == "scan" ? HierConfig::NeighborSubgrids::scan
                                                            : HierConfig::NeighborSubgrids::recurse;
            const VerifyReport report = run_verify(vopts);
            print_verify(out, report);
            if (write_report) {
                auto f = open_output(prefix + "_verify.txt");
                print_verify(f, report);
            }
            return report.passed() ? 0 : 1;
        }
    } catch (const CLI::Error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

}  // namespace hgrid
