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

#include <compare>
#include <cstddef>
#include <optional>
#include <vector>

namespace hgrid {

/// Absolute padding applied to each degenerate (zero-width) axis of an extent.
inline constexpr double kDegenerateEpsilon = 1e-9;

/// A position in world units. Both coordinates are finite.
struct Point2D {
    double x = 0.0;
    double y = 0.0;

    Point2D() = default;
    Point2D(double x_, double y_);

    friend bool operator==(const Point2D&, const Point2D&) = default;
};

/// Closed axis-aligned rectangle.
class Extents {
 public:
    Extents() = default;
    Extents(Point2D min, Point2D max);

    const Point2D& min() const { return min_; }
    const Point2D& max() const { return max_; }
    double width() const { return max_.x - min_.x; }
    double height() const { return max_.y - min_.y; }
    double diagonal() const;
    Point2D center() const;

    bool contains(Point2D p) const;
    bool contains(const Extents& other) const;
    bool intersects(const Extents& other) const;

    /// Scales about the center; factor 2 doubles both width and height.
    Extents scaled(double factor) const;

    friend bool operator==(const Extents&, const Extents&) = default;

 private:
    Point2D min_;
    Point2D max_;
};

/// Pads every zero-width axis by kDegenerateEpsilon on both sides so bin sizes stay nonzero.
Extents inflate_degenerate(const Extents& e);

struct Divisions {
    int x = 1;
    int y = 1;

    friend bool operator==(const Divisions&, const Divisions&) = default;
};

struct BinCoord {
    int i = 0;  // column
    int j = 0;  // row

    friend auto operator<=>(const BinCoord&, const BinCoord&) = default;
};

/// Inclusive rectangle of bin coordinates.
struct BinRange {
    int i0, i1, j0, j1;
};

/// A regular grid laid over an extent. Bin sizes are always derived from the extents and division counts.
class GridShape {
 public:
    GridShape(const Extents& extents, Divisions divisions);

    const Extents& extents() const { return extents_; }
    Divisions divisions() const { return divisions_; }
    double bin_width() const { return extents_.width() / divisions_.x; }
    double bin_height() const { return extents_.height() / divisions_.y; }
    std::size_t bin_count() const { return static_cast<std::size_t>(divisions_.x) * divisions_.y; }

    bool in_grid(BinCoord c) const {
        return c.i >= 0 && c.i < divisions_.x && c.j >= 0 && c.j < divisions_.y;
    }
    std::size_t linear(BinCoord c) const {
        return static_cast<std::size_t>(c.j) * divisions_.x + c.i;
    }
    BinCoord coord(std::size_t linear) const {
        return {static_cast<int>(linear % divisions_.x), static_cast<int>(linear / divisions_.x)};
    }

    // Grid line positions; the last line is pinned to the extent maximum.
    double column_edge(int i) const;
    double row_edge(int j) const;
    Extents bin_rect(BinCoord c) const;

    /// Bins whose closed rectangles intersect the closed rectangle; nullopt when disjoint from the grid.
    std::optional<BinRange> bins_touching(const Extents& rect) const;

 private:
    Extents extents_;
    Divisions divisions_;
};

/// Bin holding p, with the max boundary clamped into the last bin. nullopt when p is outside the extents.
std::optional<BinCoord> resolve_bin(Point2D p, const GridShape& shape);

/// In-grid bins at Chebyshev distance exactly n from c, row-major.
std::vector<BinCoord> neighborhood(BinCoord c, int n, const GridShape& shape);

/// The outermost ring of bins, row-major, each bin once.
std::vector<BinCoord> border_ring(const GridShape& shape);

Point2D bin_center(BinCoord c, const GridShape& shape);

inline double dist_sq(Point2D a, Point2D b) {
    const double dx = a.x - b.x;
    const double dy = a.y - b.y;
    return dx * dx + dy * dy;
}

/// Smallest perpendicular distance from p to the four edges of bin c. Throws std::invalid_argument if p is not
/// inside that bin.
double dist_to_bin_boundary(Point2D p, BinCoord c, const GridShape& shape);

/// Squared distance from p to the closed rectangle (zero inside).
double dist_sq_to_rect(Point2D p, const Extents& rect);

}  // namespace hgrid
