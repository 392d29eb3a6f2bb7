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

#include "hgrid/datasets.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <numbers>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hgrid {

double SeededRng::normal() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    const double u1 = 1.0 - uniform();  // (0, 1]
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(theta);
    has_spare_ = true;
    return r * std::cos(theta);
}

PointCollection gen_uniform(std::size_t n, const Extents& extents, std::uint64_t seed) {
    SeededRng rng(seed);
    std::vector<Point2D> pts;
    pts.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double x = rng.uniform(extents.min().x, extents.max().x);
        const double y = rng.uniform(extents.min().y, extents.max().y);
        pts.emplace_back(x, y);
    }
    return PointCollection(std::move(pts));
}

PointCollection gen_gaussian(std::size_t n, const Extents& extents, std::uint64_t seed) {
    SeededRng rng(seed);
    const Point2D c = extents.center();
    const double sx = extents.width() / 6.0;
    const double sy = extents.height() / 6.0;
    std::vector<Point2D> pts;
    pts.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double x = c.x + sx * rng.normal();
        const double y = c.y + sy * rng.normal();
        pts.emplace_back(x, y);
    }
    return PointCollection(std::move(pts));
}

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

double parse_number(std::string_view text, std::size_t line_no) {
    text = trim(text);
    // from_chars rejects a leading '+', which some writers emit.
    if (!text.empty() && text.front() == '+') {
        text.remove_prefix(1);
    }
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(value)) {
        throw std::runtime_error("line " + std::to_string(line_no) + ": bad number '" + std::string(text) + "'");
    }
    return value;
}

}  // namespace

std::vector<Point2D> parse_points(std::istream& in) {
    std::vector<Point2D> pts;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string_view s = trim(line);
        if (s.empty() || s.front() == '#') {
            continue;
        }
        const auto comma = s.find(',');
        if (comma == std::string_view::npos || s.find(',', comma + 1) != std::string_view::npos) {
            throw std::runtime_error("line " + std::to_string(line_no) + ": expected 'x,y'");
        }
        pts.emplace_back(parse_number(s.substr(0, comma), line_no), parse_number(s.substr(comma + 1), line_no));
    }
    return pts;
}

std::vector<Point2D> read_points(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open point file '" + path.string() + "'");
    }
    try {
        return parse_points(in);
    } catch (const std::runtime_error& e) {
        throw std::runtime_error(path.string() + ": " + e.what());
    }
}

void write_points(std::ostream& out, const std::vector<Point2D>& points) {
    char buf[64];
    for (const Point2D& p : points) {
        auto r = std::to_chars(buf, buf + sizeof(buf), p.x);
        *r.ptr++ = ',';
        r = std::to_chars(r.ptr, buf + sizeof(buf), p.y);
        *r.ptr++ = '\n';
        out.write(buf, r.ptr - buf);
    }
}

}  // namespace hgrid
