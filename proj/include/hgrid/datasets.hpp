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

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <random>
#include <vector>

#include "hgrid/core.hpp"
#include "hgrid/source.hpp"

namespace hgrid {

/// Seeded generator with fully specified output: std::mt19937_64 for bits, 53-bit mantissa conversion for
/// uniforms and Box-Muller for normals. Library distributions are avoided because their algorithms are
/// implementation-defined.
class SeededRng {
 public:
    explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform on [0, 1).
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    /// Standard normal.
    double normal();
    std::uint64_t bits() { return engine_(); }

 private:
    std::mt19937_64 engine_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

/// Domain used by the generators when no other extent is given.
inline Extents default_domain() { return {{0.0, 0.0}, {1000.0, 1000.0}}; }

/// n independent uniform points over extents.
PointCollection gen_uniform(std::size_t n, const Extents& extents, std::uint64_t seed);

/// n normal points centered on extents, sigma = width/6 and height/6 per axis. Not clipped to extents.
PointCollection gen_gaussian(std::size_t n, const Extents& extents, std::uint64_t seed);

/// Point file: one "x,y" per line; blank lines and lines starting with '#' are ignored. Throws
/// std::runtime_error naming the offending line.
std::vector<Point2D> parse_points(std::istream& in);
std::vector<Point2D> read_points(const std::filesystem::path& path);

/// Writes coordinates in shortest round-trip form, so parse_points(write_points(p)) == p.
void write_points(std::ostream& out, const std::vector<Point2D>& points);

}  // namespace hgrid
