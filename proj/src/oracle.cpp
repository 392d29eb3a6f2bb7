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

#include "hgrid/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "hgrid/errors.hpp"

namespace hgrid::oracle {

OracleResult nearest(const IndexableSource& source, Point2D q) {
    const std::size_t n = source.record_count();
    if (n == 0) {
        throw EmptySourceError("oracle query on an empty source");
    }
    Record scratch;
    std::size_t best = 0;
    double best_d2 = dist_sq(q, source.fetch(RecordId{0}, scratch).position);
    for (std::size_t k = 1; k < n; ++k) {
        const double d2 = dist_sq(q, source.fetch(RecordId{k}, scratch).position);
        if (d2 < best_d2) {
            best = k;
            best_d2 = d2;
        }
    }
    return {RecordId{best}, std::sqrt(best_d2), n};
}

std::vector<RecordId> range(const IndexableSource& source, const Extents& rect) {
    std::vector<RecordId> out;
    Record scratch;
    for (std::size_t k = 0; k < source.record_count(); ++k) {
        const Point2D p = source.fetch(RecordId{k}, scratch).position;
        if (p.x >= rect.min().x && p.x <= rect.max().x && p.y >= rect.min().y && p.y <= rect.max().y) {
            out.push_back(RecordId{k});
        }
    }
    return out;
}

namespace {

Extents bounding_box(const std::vector<Point2D>& points, const std::vector<RecordId>& ids) {
    double x0 = points[ids[0].value].x, x1 = x0, y0 = points[ids[0].value].y, y1 = y0;
    for (const RecordId id : ids) {
        const Point2D& p = points[id.value];
        x0 = std::min(x0, p.x);
        x1 = std::max(x1, p.x);
        y0 = std::min(y0, p.y);
        y1 = std::max(y1, p.y);
    }
    return inflate_degenerate({{x0, y0}, {x1, y1}});
}

void split(const std::vector<Point2D>& points, std::vector<RecordId> ids, std::size_t bucket, double floor,
           std::vector<QuadLeaf>& leaves) {
    const Extents box = bounding_box(points, ids);
    const double half_w = box.width() / 2;
    const double half_h = box.height() / 2;

    std::array<std::vector<RecordId>, 4> quadrants;
    for (const RecordId id : ids) {
        const Point2D& p = points[id.value];
        const bool east = (p.x - box.min().x) / half_w >= 1.0;
        const bool north = (p.y - box.min().y) / half_h >= 1.0;
        quadrants[(north ? 2 : 0) + (east ? 1 : 0)].push_back(id);
    }
    for (std::size_t q = 0; q < 4; ++q) {
        auto& members = quadrants[q];
        if (members.empty()) {
            continue;
        }
        const bool splittable = members.size() > bucket && members.size() < ids.size() && half_w > floor &&
                                half_h > floor;
        if (splittable) {
            split(points, std::move(members), bucket, floor, leaves);
            continue;
        }
        const double mid_x = box.min().x + half_w;
        const double mid_y = box.min().y + half_h;
        const Point2D lo(q % 2 ? mid_x : box.min().x, q / 2 ? mid_y : box.min().y);
        const Point2D hi(q % 2 ? box.max().x : mid_x, q / 2 ? box.max().y : mid_y);
        leaves.push_back({{lo, hi}, std::move(members)});
    }
}

}  // namespace

std::vector<QuadLeaf> quadtree(const std::vector<Point2D>& points, std::size_t bucket, double smallest_dimension) {
    std::vector<QuadLeaf> leaves;
    if (points.empty()) {
        return leaves;
    }
    std::vector<RecordId> all(points.size());
    for (std::size_t k = 0; k < points.size(); ++k) {
        all[k] = RecordId{k};
    }
    if (points.size() <= bucket) {
        leaves.push_back({bounding_box(points, all), std::move(all)});
        return leaves;
    }
    split(points, std::move(all), bucket, smallest_dimension, leaves);
    return leaves;
}

}  // namespace hgrid::oracle
