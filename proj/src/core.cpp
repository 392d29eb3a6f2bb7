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

#include "hgrid/core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace hgrid {

Point2D::Point2D(double x_, double y_) : x(x_), y(y_) {
    if (!std::isfinite(x_) || !std::isfinite(y_)) {
        throw std::invalid_argument("Point2D coordinates must be finite");
    }
}

Extents::Extents(Point2D min, Point2D max) : min_(min), max_(max) {
    if (min.x > max.x || min.y > max.y) {
        throw std::invalid_argument("Extents min must not exceed max");
    }
}

double Extents::diagonal() const { return std::hypot(width(), height()); }

Point2D Extents::center() const {
    return {min_.x + 0.5 * width(), min_.y + 0.5 * height()};
}

bool Extents::contains(Point2D p) const {
    return p.x >= min_.x && p.x <= max_.x && p.y >= min_.y && p.y <= max_.y;
}

bool Extents::contains(const Extents& other) const {
    return contains(other.min_) && contains(other.max_);
}

bool Extents::intersects(const Extents& other) const {
    return other.min_.x <= max_.x && other.max_.x >= min_.x && other.min_.y <= max_.y && other.max_.y >= min_.y;
}

Extents Extents::scaled(double factor) const {
    const Point2D c = center();
    const double hw = 0.5 * width() * factor;
    const double hh = 0.5 * height() * factor;
    return {{c.x - hw, c.y - hh}, {c.x + hw, c.y + hh}};
}

namespace {

void pad_axis(double& lo, double& hi) {
    if (lo != hi) {
        return;
    }
    const double v = lo;
    lo = v - kDegenerateEpsilon;
    hi = v + kDegenerateEpsilon;
    // Far from the origin the absolute pad is below one ulp.
    if (lo == hi) {
        lo = std::nextafter(v, -std::numeric_limits<double>::infinity());
        hi = std::nextafter(v, std::numeric_limits<double>::infinity());
    }
}

// First index in [0, count) whose upper edge reaches lo; count when none does.
template <typename EdgeFn>
int first_touching(double lo, int count, double origin, double size, EdgeFn edge) {
    int k = std::clamp(static_cast<int>(std::floor((lo - origin) / size)), 0, count - 1);
    while (k > 0 && edge(k) >= lo) {
        --k;
    }
    while (k < count && edge(k + 1) < lo) {
        ++k;
    }
    return k;
}

// Last index in [0, count) whose lower edge is at or below hi; -1 when none is.
template <typename EdgeFn>
int last_touching(double hi, int count, double origin, double size, EdgeFn edge) {
    int k = std::clamp(static_cast<int>(std::floor((hi - origin) / size)), 0, count - 1);
    while (k < count - 1 && edge(k + 1) <= hi) {
        ++k;
    }
    while (k >= 0 && edge(k) > hi) {
        --k;
    }
    return k;
}

}  // namespace

Extents inflate_degenerate(const Extents& e) {
    double x0 = e.min().x, x1 = e.max().x, y0 = e.min().y, y1 = e.max().y;
    pad_axis(x0, x1);
    pad_axis(y0, y1);
    return {{x0, y0}, {x1, y1}};
}

GridShape::GridShape(const Extents& extents, Divisions divisions) : extents_(extents), divisions_(divisions) {
    if (divisions.x < 1 || divisions.y < 1) {
        throw std::invalid_argument("grid divisions must be at least 1 per axis");
    }
    if (!(extents.width() > 0.0) || !(extents.height() > 0.0)) {
        throw std::invalid_argument("grid extents must have positive width and height");
    }
}

double GridShape::column_edge(int i) const {
    return i >= divisions_.x ? extents_.max().x : extents_.min().x + i * bin_width();
}

double GridShape::row_edge(int j) const {
    return j >= divisions_.y ? extents_.max().y : extents_.min().y + j * bin_height();
}

Extents GridShape::bin_rect(BinCoord c) const {
    return {{column_edge(c.i), row_edge(c.j)}, {column_edge(c.i + 1), row_edge(c.j + 1)}};
}

std::optional<BinRange> GridShape::bins_touching(const Extents& rect) const {
    if (!extents_.intersects(rect)) {
        return std::nullopt;
    }
    auto col = [this](int i) { return column_edge(i); };
    auto row = [this](int j) { return row_edge(j); };
    const double ox = extents_.min().x, oy = extents_.min().y;
    BinRange r{first_touching(rect.min().x, divisions_.x, ox, bin_width(), col),
               last_touching(rect.max().x, divisions_.x, ox, bin_width(), col),
               first_touching(rect.min().y, divisions_.y, oy, bin_height(), row),
               last_touching(rect.max().y, divisions_.y, oy, bin_height(), row)};
    if (r.i0 > r.i1 || r.j0 > r.j1) {
        return std::nullopt;
    }
    return r;
}

std::optional<BinCoord> resolve_bin(Point2D p, const GridShape& shape) {
    const Extents& e = shape.extents();
    if (!e.contains(p)) {
        return std::nullopt;
    }
    const Divisions d = shape.divisions();
    const int i = static_cast<int>(std::floor((p.x - e.min().x) / shape.bin_width()));
    const int j = static_cast<int>(std::floor((p.y - e.min().y) / shape.bin_height()));
    return BinCoord{std::clamp(i, 0, d.x - 1), std::clamp(j, 0, d.y - 1)};
}

std::vector<BinCoord> neighborhood(BinCoord c, int n, const GridShape& shape) {
    std::vector<BinCoord> out;
    if (n < 1) {
        return out;
    }
    out.reserve(8 * static_cast<std::size_t>(n));
    for (int j = c.j - n; j <= c.j + n; ++j) {
        for (int i = c.i - n; i <= c.i + n; ++i) {
            const BinCoord b{i, j};
            if (std::max(std::abs(i - c.i), std::abs(j - c.j)) == n && shape.in_grid(b)) {
                out.push_back(b);
            }
        }
    }
    return out;
}

std::vector<BinCoord> border_ring(const GridShape& shape) {
    const Divisions d = shape.divisions();
    std::vector<BinCoord> out;
    for (int j = 0; j < d.y; ++j) {
        for (int i = 0; i < d.x; ++i) {
            if (i == 0 || j == 0 || i == d.x - 1 || j == d.y - 1) {
                out.push_back({i, j});
            }
        }
    }
    return out;
}

Point2D bin_center(BinCoord c, const GridShape& shape) {
    const Extents& e = shape.extents();
    return {e.min().x + (c.i + 0.5) * shape.bin_width(), e.min().y + (c.j + 0.5) * shape.bin_height()};
}

double dist_to_bin_boundary(Point2D p, BinCoord c, const GridShape& shape) {
    const Extents r = shape.bin_rect(c);
    if (!r.contains(p)) {
        throw std::invalid_argument("point is not inside bin (" + std::to_string(c.i) + "," + std::to_string(c.j) + ")");
    }
    return std::min({p.x - r.min().x, r.max().x - p.x, p.y - r.min().y, r.max().y - p.y});
}

double dist_sq_to_rect(Point2D p, const Extents& rect) {
    const double dx = std::max({rect.min().x - p.x, 0.0, p.x - rect.max().x});
    const double dy = std::max({rect.min().y - p.y, 0.0, p.y - rect.max().y});
    return dx * dx + dy * dy;
}

}  // namespace hgrid
