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

#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>
#include <set>
#include <stdexcept>

#include "hgrid/core.hpp"

using namespace hgrid;

namespace {

GridShape hundred_by_ten() { return {{{0, 0}, {100, 100}}, {10, 10}}; }

}  // namespace

TEST_SUITE("core") {

TEST_CASE("points and extents reject invalid values") {
    CHECK_THROWS_AS(Point2D(std::nan(""), 0.0), std::invalid_argument);
    CHECK_THROWS_AS(Point2D(0.0, std::numeric_limits<double>::infinity()), std::invalid_argument);
    CHECK_THROWS_AS(Extents({1, 0}, {0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(GridShape(Extents{{0, 0}, {1, 1}}, Divisions{0, 3}), std::invalid_argument);

    const Extents e{{0, 0}, {10, 4}};
    CHECK(e.width() == 10);
    CHECK(e.height() == 4);
    CHECK(e.scaled(2.0) == Extents{{-5, -2}, {15, 6}});
}

TEST_CASE("degenerate extents are padded per axis") {
    const Extents flat = inflate_degenerate({{3, 3}, {3, 3}});
    CHECK(flat.min() == Point2D(3 - kDegenerateEpsilon, 3 - kDegenerateEpsilon));
    CHECK(flat.max() == Point2D(3 + kDegenerateEpsilon, 3 + kDegenerateEpsilon));

    const Extents line = inflate_degenerate({{0, 5}, {10, 5}});
    CHECK(line.min().x == 0);
    CHECK(line.max().x == 10);
    CHECK(line.height() > 0);

    // Far from the origin the pad falls back to one ulp.
    const Extents far = inflate_degenerate({{1e12, 1e12}, {1e12, 1e12}});
    CHECK(far.width() > 0);
}

TEST_CASE("resolve_bin") {
    const GridShape g = hundred_by_ten();
    CHECK(resolve_bin({25, 35}, g) == BinCoord{2, 3});
    CHECK(resolve_bin({100, 100}, g) == BinCoord{9, 9});
    CHECK(resolve_bin({0, 0}, g) == BinCoord{0, 0});
    CHECK_FALSE(resolve_bin({-5, 50}, g).has_value());
    CHECK_FALSE(resolve_bin({50, 100.0001}, g).has_value());
}

TEST_CASE("neighborhood rings") {
    const GridShape g{{{0, 0}, {5, 5}}, {5, 5}};
    CHECK(neighborhood({2, 2}, 1, g).size() == 8);
    CHECK(neighborhood({0, 0}, 1, g).size() == 3);
    CHECK(neighborhood({2, 2}, 2, g).size() == 16);

    const auto ring = neighborhood({0, 0}, 1, g);
    CHECK(ring[0] == BinCoord{1, 0});
    CHECK(ring[1] == BinCoord{0, 1});
    CHECK(ring[2] == BinCoord{1, 1});

    CHECK(border_ring(g).size() == 16);
    CHECK(border_ring(GridShape{{{0, 0}, {1, 1}}, {1, 1}}).size() == 1);
}

TEST_CASE("bin_center") {
    const GridShape g = hundred_by_ten();
    CHECK(bin_center({0, 0}, g) == Point2D(5, 5));
    CHECK(bin_center({9, 9}, g) == Point2D(95, 95));
    CHECK(bin_center({2, 3}, g) == Point2D(25, 35));
}

TEST_CASE("dist_sq") {
    CHECK(dist_sq({0, 0}, {3, 4}) == 25);
    CHECK(dist_sq({1, 1}, {1, 1}) == 0);
    CHECK(dist_sq({-1, 0}, {2, 0}) == 9);
}

TEST_CASE("dist_to_bin_boundary") {
    const GridShape g = hundred_by_ten();
    CHECK(dist_to_bin_boundary({25, 35}, {2, 3}, g) == doctest::Approx(5));
    CHECK(dist_to_bin_boundary({20, 35}, {2, 3}, g) == 0);
    CHECK(dist_to_bin_boundary({21, 39}, {2, 3}, g) == doctest::Approx(1));
    CHECK_THROWS_AS(dist_to_bin_boundary({55, 55}, {2, 3}, g), std::invalid_argument);
}

TEST_CASE("bins_touching uses closed intersection") {
    const GridShape g = hundred_by_ten();
    const auto r = g.bins_touching({{20, 30}, {30, 40}});
    REQUIRE(r);
    CHECK(r->i0 == 1);
    CHECK(r->i1 == 3);
    CHECK(r->j0 == 2);
    CHECK(r->j1 == 4);

    const auto inner = g.bins_touching({{21, 31}, {29, 39}});
    REQUIRE(inner);
    CHECK((inner->i0 == 2 && inner->i1 == 2 && inner->j0 == 3 && inner->j1 == 3));

    CHECK_FALSE(g.bins_touching({{200, 200}, {300, 300}}).has_value());
    const auto clipped = g.bins_touching({{-50, -50}, {5, 5}});
    REQUIRE(clipped);
    CHECK((clipped->i0 == 0 && clipped->i1 == 0 && clipped->j0 == 0 && clipped->j1 == 0));
}

TEST_CASE("property: resolve_bin inverts bin_center on every shape up to 64 divisions") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> coord(-1000, 1000), size(1e-3, 500);
    for (int dx = 1; dx <= 64; ++dx) {
        for (int dy = 1; dy <= 64; dy += 7) {
            const double x0 = coord(rng), y0 = coord(rng);
            const GridShape g{{{x0, y0}, {x0 + size(rng), y0 + size(rng)}}, {dx, dy}};
            for (int j = 0; j < dy; ++j) {
                for (int i = 0; i < dx; ++i) {
                    const auto c = resolve_bin(bin_center({i, j}, g), g);
                    REQUIRE(c);
                    REQUIRE(*c == BinCoord{i, j});
                }
            }
        }
    }
}

TEST_CASE("property: neighborhood cardinality and membership") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        const int dx = 1 + static_cast<int>(rng() % 20), dy = 1 + static_cast<int>(rng() % 20);
        const GridShape g{{{0, 0}, {1, 1}}, {dx, dy}};
        const BinCoord c{static_cast<int>(rng() % dx), static_cast<int>(rng() % dy)};
        const int n = 1 + static_cast<int>(rng() % 6);
        const auto ring = neighborhood(c, n, g);
        CHECK(ring.size() <= static_cast<std::size_t>(8 * n));
        const bool interior = c.i >= n && c.j >= n && c.i + n < dx && c.j + n < dy;
        if (interior) {
            CHECK(ring.size() == static_cast<std::size_t>(8 * n));
        }
        std::set<BinCoord> unique(ring.begin(), ring.end());
        CHECK(unique.size() == ring.size());
        for (const BinCoord b : ring) {
            CHECK(g.in_grid(b));
            CHECK(std::max(std::abs(b.i - c.i), std::abs(b.j - c.j)) == n);
        }
        CHECK(std::is_sorted(ring.begin(), ring.end(), [](BinCoord a, BinCoord b) {
            return a.j != b.j ? a.j < b.j : a.i < b.i;
        }));
    }
}

TEST_CASE("property: boundary distance bounded by half the larger bin side") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> unit(0, 1);
    const GridShape g{{{-3, 2}, {17, 9}}, {7, 4}};
    const double half = std::max(g.bin_width(), g.bin_height()) / 2;
    for (int k = 0; k < 20000; ++k) {
        const Point2D p(-3 + 20 * unit(rng), 2 + 7 * unit(rng));
        const auto c = resolve_bin(p, g);
        REQUIRE(c);
        const double d = dist_to_bin_boundary(p, *c, g);
        CHECK(d >= 0);
        CHECK(d <= half + 1e-12);
    }
}

TEST_CASE("property: points strictly inside never resolve outside") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> unit(0, 1);
    for (int k = 0; k < 20000; ++k) {
        const double w = 1e-6 + unit(rng) * 1e3, h = 1e-6 + unit(rng) * 1e3;
        const GridShape g{{{-w, -h}, {w, h}}, {1 + static_cast<int>(rng() % 50), 1 + static_cast<int>(rng() % 50)}};
        const Point2D p(-w + 2 * w * unit(rng), -h + 2 * h * unit(rng));
        const auto c = resolve_bin(p, g);
        REQUIRE(c);
        CHECK(g.in_grid(*c));
    }
}

}  // TEST_SUITE
