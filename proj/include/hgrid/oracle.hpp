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
#include <vector>

#include "hgrid/core.hpp"
#include "hgrid/source.hpp"

namespace hgrid::oracle {

struct OracleResult {
    RecordId record;
    double distance = 0.0;
    std::size_t comparisons = 0;
};

/// Exact nearest record by linear scan; equal distances resolve to the lowest id. Throws EmptySourceError on an
/// empty source.
OracleResult nearest(const IndexableSource& source, Point2D q);

/// Every record inside the closed rectangle, ascending.
std::vector<RecordId> range(const IndexableSource& source, const Extents& rect);

struct QuadLeaf {
    Extents rect;
    std::vector<RecordId> ids;  // ascending
};

/// Reference bucketing quad tree. A node holding more than `bucket` points is split into quadrants of its
/// points' bounding box; a quadrant stays a leaf when it holds at most `bucket` points, when either of its
/// dimensions is at or below `smallest_dimension`, or when it holds every point of its parent. Empty quadrants
/// produce no leaf.
std::vector<QuadLeaf> quadtree(const std::vector<Point2D>& points, std::size_t bucket, double smallest_dimension);

}  // namespace hgrid::oracle
